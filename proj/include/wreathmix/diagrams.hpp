#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "wreathmix/errors.hpp"
#include "wreathmix/rational.hpp"

namespace wreathmix {

// Partition in weakly decreasing positive parts; the empty vector is the
// empty partition.
using Partition = std::vector<int>;

inline bool is_partition(const Partition& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 1) return false;
    if (i > 0 && p[i] > p[i - 1]) return false;
  }
  return true;
}

inline int partition_size(const Partition& p) {
  int s = 0;
  for (int v : p) s += v;
  return s;
}

inline constexpr int kPartitionEnumerationCap = 40;

// All partitions of L in descending lexicographic order: (L) first,
// (1,...,1) last. L is capped to keep enumerations bounded.
inline std::vector<Partition> partitions_of(int L) {
  if (L < 0) throw std::invalid_argument("partitions_of: negative size");
  if (L > kPartitionEnumerationCap) throw capacity_error(Int(L), kPartitionEnumerationCap);
  std::vector<Partition> out;
  Partition cur;
  auto rec = [&](auto&& self, int rem, int maxPart) -> void {
    if (rem == 0) {
      out.push_back(cur);
      return;
    }
    for (int first = std::min(rem, maxPart); first >= 1; --first) {
      cur.push_back(first);
      self(self, rem - first, first);
      cur.pop_back();
    }
  };
  rec(rec, L, L);
  return out;
}

inline Partition conjugate(const Partition& p) {
  if (!is_partition(p)) throw std::invalid_argument("conjugate: not a partition");
  if (p.empty()) return {};
  Partition q(static_cast<std::size_t>(p[0]));
  for (int j = 0; j < p[0]; ++j) {
    int cnt = 0;
    for (int v : p)
      if (v > j) ++cnt;
    q[static_cast<std::size_t>(j)] = cnt;
  }
  return q;
}

// Number of standard fillings of the shape, computed from the product of
// hook lengths. The empty shape counts 1.
inline Int hook_count(const Partition& p) {
  if (!is_partition(p)) throw std::invalid_argument("hook_count: not a partition");
  const int L = partition_size(p);
  if (L == 0) return 1;
  Partition conj = conjugate(p);
  Int hooks = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (int j = 0; j < p[i]; ++j) {
      int arm = p[i] - j - 1;
      int leg = conj[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1;
      hooks *= arm + leg + 1;
    }
  Int f = factorial(static_cast<unsigned>(L));
  mpz_divexact(f.get_mpz_t(), f.get_mpz_t(), hooks.get_mpz_t());
  return f;
}

// Cell of a Young diagram, 0-based.
struct Cell {
  int row = 0;
  int col = 0;
  bool operator==(const Cell&) const = default;
};

inline int content_of(const Cell& c) { return c.col - c.row; }

// Removable cells (inner corners), ordered by row.
inline std::vector<Cell> removable_corners(const Partition& p) {
  if (!is_partition(p)) throw std::invalid_argument("removable_corners: not a partition");
  std::vector<Cell> out;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (i + 1 == p.size() || p[i + 1] < p[i])
      out.push_back(Cell{static_cast<int>(i), p[i] - 1});
  return out;
}

inline Partition remove_cell(const Partition& p, const Cell& c) {
  for (const Cell& r : removable_corners(p))
    if (r == c) {
      Partition q = p;
      q[static_cast<std::size_t>(c.row)] -= 1;
      if (q[static_cast<std::size_t>(c.row)] == 0) q.erase(q.begin() + c.row);
      return q;
    }
  throw std::invalid_argument("remove_cell: cell is not a removable corner");
}

inline Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

inline Int multinomial(int n, const std::vector<int>& parts) {
  int sum = 0;
  for (int m : parts) {
    if (m < 0) throw std::invalid_argument("multinomial: negative part");
    sum += m;
  }
  if (sum != n) throw std::invalid_argument("multinomial: parts do not sum to n");
  Int r = factorial(static_cast<unsigned>(n));
  for (int m : parts) {
    Int f = factorial(static_cast<unsigned>(m));
    mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), f.get_mpz_t());
  }
  return r;
}

// ---------------------------------------------------------------------------

// Tuple of partitions indexed by the irreps of the color group; component
// sizes sum to the wreath degree n.
struct YoungGDiagram {
  std::vector<Partition> components;

  bool operator==(const YoungGDiagram&) const = default;
};

inline int total_size(const YoungGDiagram& d) {
  int s = 0;
  for (const auto& p : d.components) s += partition_size(p);
  return s;
}

// Removable corner of one component of a diagram tuple.
struct Corner {
  int component = 0;
  int row = 0;
  int col = 0;
  bool operator==(const Corner&) const = default;
};

inline int content_of(const Corner& c) { return c.col - c.row; }

inline std::vector<Corner> removable_corners(const YoungGDiagram& d) {
  std::vector<Corner> out;
  for (std::size_t j = 0; j < d.components.size(); ++j)
    for (const Cell& c : removable_corners(d.components[j]))
      out.push_back(Corner{static_cast<int>(j), c.row, c.col});
  return out;
}

inline YoungGDiagram remove_corner(const YoungGDiagram& d, const Corner& c) {
  if (c.component < 0 || c.component >= static_cast<int>(d.components.size()))
    throw std::invalid_argument("remove_corner: component index out of range");
  YoungGDiagram r = d;
  auto& comp = r.components[static_cast<std::size_t>(c.component)];
  comp = remove_cell(comp, Cell{c.row, c.col});
  return r;
}

// All diagram tuples with t components and total size n. Ordering is
// deterministic: first component size descending, partitions in
// partitions_of order, remaining components recursively.
inline std::vector<YoungGDiagram> enumerate_young_g_diagrams(int n, int t) {
  if (n < 0) throw std::invalid_argument("enumerate_young_g_diagrams: negative size");
  if (t < 1) throw std::invalid_argument("enumerate_young_g_diagrams: need at least one component");
  std::vector<YoungGDiagram> out;
  YoungGDiagram cur;
  cur.components.resize(static_cast<std::size_t>(t));
  auto rec = [&](auto&& self, int pos, int rem) -> void {
    if (pos == t - 1) {
      for (const auto& p : partitions_of(rem)) {
        cur.components[static_cast<std::size_t>(pos)] = p;
        out.push_back(cur);
      }
      return;
    }
    for (int m = rem; m >= 0; --m)
      for (const auto& p : partitions_of(m)) {
        cur.components[static_cast<std::size_t>(pos)] = p;
        self(self, pos + 1, rem - m);
      }
  };
  rec(rec, 0, n);
  return out;
}

// Number of standard fillings of a diagram tuple with 1..n: choose which
// letters land in each component, then fill each shape.
inline Int count_syt_g(const YoungGDiagram& d) {
  const int n = total_size(d);
  std::vector<int> sizes;
  sizes.reserve(d.components.size());
  for (const auto& p : d.components) {
    if (!is_partition(p)) throw std::invalid_argument("count_syt_g: component is not a partition");
    sizes.push_back(partition_size(p));
  }
  Int r = multinomial(n, sizes);
  for (const auto& p : d.components) r *= hook_count(p);
  return r;
}

inline std::string partition_string(const Partition& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  s += ")";
  return s;
}

inline std::string diagram_string(const YoungGDiagram& d) {
  std::string s = "[";
  for (std::size_t j = 0; j < d.components.size(); ++j) {
    if (j) s += "|";
    s += partition_string(d.components[j]);
  }
  s += "]";
  return s;
}

}  // namespace wreathmix
