#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "wreathmix/errors.hpp"
#include "wreathmix/rational.hpp"

namespace wreathmix {

struct IrrepInfo {
  int dim = 1;
  bool is_trivial = false;
};

/**
 * Finite group given by its full multiplication table, together with the
 * dimensions of its complex irreducible representations.
 *
 * Elements are the integers 0..order-1; mul[a][b] is the product ab and
 * inv[a] the two-sided inverse. Exactly one irrep is flagged trivial and it
 * must be one-dimensional. The irrep list length must equal the number of
 * conjugacy classes.
 */
struct GroupSpec {
  std::string name;
  int order = 0;
  int identity = 0;
  std::vector<std::vector<int>> mul;
  std::vector<int> inv;
  std::vector<IrrepInfo> irreps;

  int mul_of(int a, int b) const {
    return mul[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
  }
  int inv_of(int a) const { return inv[static_cast<std::size_t>(a)]; }

  int trivial_index() const {
    for (std::size_t i = 0; i < irreps.size(); ++i)
      if (irreps[i].is_trivial) return static_cast<int>(i);
    return -1;
  }
};

inline int conjugacy_class_count(const GroupSpec& g) {
  std::vector<char> seen(static_cast<std::size_t>(g.order), 0);
  int classes = 0;
  for (int x = 0; x < g.order; ++x) {
    if (seen[static_cast<std::size_t>(x)]) continue;
    ++classes;
    for (int a = 0; a < g.order; ++a) {
      int y = g.mul_of(g.mul_of(a, x), g.inv_of(a));
      seen[static_cast<std::size_t>(y)] = 1;
    }
  }
  return classes;
}

/**
 * Checks every structural invariant of a GroupSpec and throws
 * validation_error with the name of the first failed one.
 *
 * Associativity is verified exhaustively for order <= 64 and on a fixed
 * deterministic sample of triples above that.
 */
inline void validate_group(const GroupSpec& g) {
  if (g.order < 1)
    throw validation_error("order-positive",
                           "group order must be >= 1, got " + std::to_string(g.order));
  const auto n = static_cast<std::size_t>(g.order);
  if (g.mul.size() != n)
    throw validation_error("mul-shape", "mul table must have " + std::to_string(g.order) + " rows");
  for (const auto& row : g.mul) {
    if (row.size() != n)
      throw validation_error("mul-shape", "mul table rows must have length " + std::to_string(g.order));
    for (int v : row)
      if (v < 0 || v >= g.order)
        throw validation_error("mul-shape", "mul entry " + std::to_string(v) + " out of range");
  }
  for (int a = 0; a < g.order; ++a) {
    std::vector<char> hit(n, 0);
    for (int b = 0; b < g.order; ++b) hit[static_cast<std::size_t>(g.mul_of(a, b))] = 1;
    if (std::find(hit.begin(), hit.end(), 0) != hit.end())
      throw validation_error("row-bijective", "row " + std::to_string(a) + " is not a permutation");
  }
  for (int b = 0; b < g.order; ++b) {
    std::vector<char> hit(n, 0);
    for (int a = 0; a < g.order; ++a) hit[static_cast<std::size_t>(g.mul_of(a, b))] = 1;
    if (std::find(hit.begin(), hit.end(), 0) != hit.end())
      throw validation_error("col-bijective", "column " + std::to_string(b) + " is not a permutation");
  }
  if (g.identity < 0 || g.identity >= g.order)
    throw validation_error("identity-element", "identity index out of range");
  for (int a = 0; a < g.order; ++a)
    if (g.mul_of(g.identity, a) != a || g.mul_of(a, g.identity) != a)
      throw validation_error("identity-element",
                             "claimed identity is not two-sided at element " + std::to_string(a));
  if (g.order <= 64) {
    for (int a = 0; a < g.order; ++a)
      for (int b = 0; b < g.order; ++b)
        for (int c = 0; c < g.order; ++c)
          if (g.mul_of(g.mul_of(a, b), c) != g.mul_of(a, g.mul_of(b, c)))
            throw validation_error("associativity", "(" + std::to_string(a) + "," +
                                                        std::to_string(b) + "," + std::to_string(c) + ")");
  } else {
    std::uint64_t s = 0x6b43a9b5eab8e923ull;
    for (int t = 0; t < 20000; ++t) {
      s = s * 6364136223846793005ull + 1442695040888963407ull;
      int a = static_cast<int>((s >> 33) % static_cast<std::uint64_t>(g.order));
      s = s * 6364136223846793005ull + 1442695040888963407ull;
      int b = static_cast<int>((s >> 33) % static_cast<std::uint64_t>(g.order));
      s = s * 6364136223846793005ull + 1442695040888963407ull;
      int c = static_cast<int>((s >> 33) % static_cast<std::uint64_t>(g.order));
      if (g.mul_of(g.mul_of(a, b), c) != g.mul_of(a, g.mul_of(b, c)))
        throw validation_error("associativity", "(" + std::to_string(a) + "," +
                                                    std::to_string(b) + "," + std::to_string(c) + ")");
    }
  }
  if (g.inv.size() != n)
    throw validation_error("inverse", "inv table has wrong length");
  for (int a = 0; a < g.order; ++a) {
    int b = g.inv_of(a);
    if (b < 0 || b >= g.order || g.mul_of(a, b) != g.identity || g.mul_of(b, a) != g.identity)
      throw validation_error("inverse", "element " + std::to_string(a) + " lacks a two-sided inverse");
  }
  if (g.irreps.empty())
    throw validation_error("irrep-dims", "irreducible representation list is empty");
  Int sq = 0;
  for (const auto& ir : g.irreps) {
    if (ir.dim < 1) throw validation_error("irrep-dims", "irrep dimension must be >= 1");
    sq += Int(ir.dim) * ir.dim;
  }
  if (sq != g.order)
    throw validation_error("irrep-dims", "sum of squared irrep dimensions " + sq.get_str() +
                                             " != order " + std::to_string(g.order));
  int trivials = 0;
  for (const auto& ir : g.irreps)
    if (ir.is_trivial) {
      ++trivials;
      if (ir.dim != 1)
        throw validation_error("trivial-irrep", "trivial irrep must have dimension 1");
    }
  if (trivials != 1)
    throw validation_error("trivial-irrep",
                           "expected exactly one trivial irrep, found " + std::to_string(trivials));
  int classes = conjugacy_class_count(g);
  if (classes != static_cast<int>(g.irreps.size()))
    throw validation_error("class-count", "group has " + std::to_string(classes) +
                                              " conjugacy classes but " +
                                              std::to_string(g.irreps.size()) + " irreps");
}

/// Cyclic group of order m; element a is the residue a, irreps are the m characters.
inline GroupSpec make_cyclic(int m) {
  if (m < 1)
    throw validation_error("order-positive", "cyclic group order must be >= 1, got " + std::to_string(m));
  GroupSpec g;
  g.name = "Z" + std::to_string(m);
  g.order = m;
  g.identity = 0;
  g.mul.assign(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m)));
  g.inv.assign(static_cast<std::size_t>(m), 0);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) g.mul[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % m;
    g.inv[static_cast<std::size_t>(a)] = (m - a) % m;
  }
  g.irreps.assign(static_cast<std::size_t>(m), IrrepInfo{1, false});
  g.irreps[0].is_trivial = true;
  validate_group(g);
  return g;
}

namespace detail {

inline std::vector<std::vector<int>> all_permutations(int m) {
  std::vector<int> p(static_cast<std::size_t>(m));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace detail

/// Symmetric group on m letters, m <= 5; elements are permutations in
/// lexicographic one-line order, so index 0 is the identity.
inline GroupSpec make_symmetric(int m) {
  if (m < 1)
    throw validation_error("order-positive", "symmetric group degree must be >= 1, got " + std::to_string(m));
  if (m > 5)
    throw validation_error("unsupported-order",
                           "symmetric group factory supports degree <= 5, got " + std::to_string(m));
  const auto perms = detail::all_permutations(m);
  const int order = static_cast<int>(perms.size());
  std::vector<std::uint64_t> key(perms.size());
  auto encode = [m](const std::vector<int>& p) {
    std::uint64_t k = 0;
    for (int i = 0; i < m; ++i) k = k * 16 + static_cast<std::uint64_t>(p[static_cast<std::size_t>(i)]);
    return k;
  };
  for (std::size_t i = 0; i < perms.size(); ++i) key[i] = encode(perms[i]);
  auto rank = [&](const std::vector<int>& p) {
    auto it = std::lower_bound(key.begin(), key.end(), encode(p));
    return static_cast<int>(it - key.begin());
  };
  GroupSpec g;
  g.name = "S" + std::to_string(m);
  g.order = order;
  g.identity = 0;
  g.mul.assign(perms.size(), std::vector<int>(perms.size()));
  g.inv.assign(perms.size(), 0);
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      std::vector<int> c(static_cast<std::size_t>(m));
      for (int i = 0; i < m; ++i)
        c[static_cast<std::size_t>(i)] =
            perms[static_cast<std::size_t>(a)][static_cast<std::size_t>(
                perms[static_cast<std::size_t>(b)][static_cast<std::size_t>(i)])];
      g.mul[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = rank(c);
    }
    std::vector<int> ia(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i)
      ia[static_cast<std::size_t>(perms[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)])] = i;
    g.inv[static_cast<std::size_t>(a)] = rank(ia);
  }
  static const std::vector<std::vector<int>> dims = {
      {1}, {1, 1}, {1, 1, 2}, {1, 1, 2, 3, 3}, {1, 1, 4, 4, 5, 5, 6}};
  for (int d : dims[static_cast<std::size_t>(m - 1)]) g.irreps.push_back(IrrepInfo{d, false});
  g.irreps[0].is_trivial = true;
  validate_group(g);
  return g;
}

/**
 * Builds a GroupSpec from a parsed table document:
 *   {"name": str, "order": int, "identity": int, "mul": [[int]],
 *    "irrep_dims": [int], "trivial_index": int}
 * Inverses are derived from the table and verified two-sided. Every group
 * invariant is checked eagerly.
 */
inline GroupSpec load_cayley_table(const nlohmann::json& doc) {
  auto need = [&](const char* key) -> const nlohmann::json& {
    if (!doc.is_object() || !doc.contains(key))
      throw validation_error("document-shape", std::string("missing key \"") + key + "\"");
    return doc.at(key);
  };
  GroupSpec g;
  try {
    g.name = need("name").get<std::string>();
    g.order = need("order").get<int>();
    g.identity = need("identity").get<int>();
    g.mul = need("mul").get<std::vector<std::vector<int>>>();
    const auto dims = need("irrep_dims").get<std::vector<int>>();
    const int trivial = need("trivial_index").get<int>();
    if (trivial < 0 || trivial >= static_cast<int>(dims.size()))
      throw validation_error("trivial-irrep", "trivial_index out of range");
    for (int d : dims) g.irreps.push_back(IrrepInfo{d, false});
    g.irreps[static_cast<std::size_t>(trivial)].is_trivial = true;
  } catch (const nlohmann::json::exception& e) {
    throw validation_error("document-shape", e.what());
  }
  if (g.order < 1)
    throw validation_error("order-positive", "group order must be >= 1");
  if (g.mul.size() != static_cast<std::size_t>(g.order))
    throw validation_error("mul-shape", "mul table must have order many rows");
  for (const auto& row : g.mul) {
    if (row.size() != static_cast<std::size_t>(g.order))
      throw validation_error("mul-shape", "mul table rows must have order many entries");
    for (int v : row)
      if (v < 0 || v >= g.order) throw validation_error("mul-shape", "mul entry out of range");
  }
  if (g.identity < 0 || g.identity >= g.order)
    throw validation_error("identity-element", "identity index out of range");
  g.inv.assign(static_cast<std::size_t>(g.order), -1);
  for (int a = 0; a < g.order; ++a) {
    for (int b = 0; b < g.order; ++b)
      if (g.mul_of(a, b) == g.identity) {
        g.inv[static_cast<std::size_t>(a)] = b;
        break;
      }
    if (g.inv[static_cast<std::size_t>(a)] < 0)
      throw validation_error("inverse", "no right inverse for element " + std::to_string(a));
  }
  validate_group(g);
  return g;
}

inline GroupSpec load_cayley_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw validation_error("document-shape", "cannot open " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw validation_error("document-shape", e.what());
  }
  return load_cayley_table(doc);
}

// ---------------------------------------------------------------------------
// Permutations in one-line notation, 0-based: p[i] is the image of i.
// Composition acts on the left, (p*q)(i) = p(q(i)).

using Perm = std::vector<int>;

inline Perm perm_identity(int n) {
  Perm p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

inline Perm perm_inverse(const Perm& p) {
  Perm q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
  return q;
}

inline Perm perm_compose(const Perm& p, const Perm& q) {
  if (p.size() != q.size()) throw std::invalid_argument("perm_compose: degree mismatch");
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[static_cast<std::size_t>(q[i])];
  return r;
}

inline Perm perm_transposition(int n, int i, int j) {
  Perm p = perm_identity(n);
  std::swap(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(j)]);
  return p;
}

// Lexicographic rank of a permutation (factorial number system).
inline std::uint64_t perm_rank(const Perm& p) {
  const int n = static_cast<int>(p.size());
  std::uint64_t rank = 0;
  std::uint64_t fact = 1;
  for (int i = 2; i <= n; ++i) fact *= static_cast<std::uint64_t>(i);
  for (int i = 0; i < n; ++i) {
    if (n - i > 0) fact /= static_cast<std::uint64_t>(n - i);
    int smaller = 0;
    for (int j = i + 1; j < n; ++j)
      if (p[static_cast<std::size_t>(j)] < p[static_cast<std::size_t>(i)]) ++smaller;
    rank += static_cast<std::uint64_t>(smaller) * fact;
  }
  return rank;
}

inline Perm perm_unrank(int n, std::uint64_t rank) {
  std::vector<int> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 0);
  std::uint64_t fact = 1;
  for (int i = 2; i < n; ++i) fact *= static_cast<std::uint64_t>(i);
  Perm p;
  p.reserve(static_cast<std::size_t>(n));
  for (int i = n; i >= 1; --i) {
    std::uint64_t d = rank / fact;
    rank %= fact;
    p.push_back(pool[static_cast<std::size_t>(d)]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(d));
    if (i > 2) fact /= static_cast<std::uint64_t>(i - 1);
  }
  return p;
}

// ---------------------------------------------------------------------------

/**
 * Element (g_1,...,g_n; pi) of the wreath product of a finite group with the
 * symmetric group on n letters: colors[j] is the group element attached to
 * letter j and perm the one-line permutation.
 *
 * In the card picture, position i holds card perm[i] and the color of card c
 * is colors[c].
 */
struct WreathElement {
  std::vector<int> colors;
  Perm perm;

  bool operator==(const WreathElement& o) const = default;
};

inline WreathElement w_identity(const GroupSpec& g, int n) {
  return WreathElement{std::vector<int>(static_cast<std::size_t>(n), g.identity),
                       perm_identity(n)};
}

inline void check_same_degree(const WreathElement& a, const WreathElement& b) {
  if (a.perm.size() != b.perm.size() || a.colors.size() != b.colors.size() ||
      a.colors.size() != a.perm.size())
    throw std::invalid_argument("wreath elements have mismatched degree");
}

/// Product (a*b): colors multiply as c_j = a_j * b_{pa^{-1}(j)}, permutations
/// compose as pa*pb.
inline WreathElement w_mul(const GroupSpec& g, const WreathElement& a, const WreathElement& b) {
  check_same_degree(a, b);
  const std::size_t n = a.perm.size();
  WreathElement r;
  r.perm = perm_compose(a.perm, b.perm);
  r.colors.resize(n);
  Perm painv = perm_inverse(a.perm);
  for (std::size_t j = 0; j < n; ++j)
    r.colors[j] = g.mul_of(a.colors[j], b.colors[static_cast<std::size_t>(painv[j])]);
  return r;
}

inline WreathElement w_inv(const GroupSpec& g, const WreathElement& a) {
  const std::size_t n = a.perm.size();
  if (a.colors.size() != n) throw std::invalid_argument("wreath element has mismatched degree");
  WreathElement r;
  r.perm = perm_inverse(a.perm);
  r.colors.resize(n);
  for (std::size_t j = 0; j < n; ++j)
    r.colors[j] = g.inv_of(a.colors[static_cast<std::size_t>(a.perm[j])]);
  return r;
}

/// Element with color `color` at letter `letter` (0-based) and identity elsewhere.
inline WreathElement w_colored_letter(const GroupSpec& g, int n, int letter, int color) {
  WreathElement e = w_identity(g, n);
  e.colors[static_cast<std::size_t>(letter)] = color;
  return e;
}

// ---------------------------------------------------------------------------

/**
 * Dense index space for the wreath product on n letters: states are numbered
 * 0..|G|^n*n!-1 via a mixed-radix color code (letter 0 least significant)
 * concatenated with the lexicographic permutation rank.
 *
 * Construction fails with capacity_error when the state count exceeds the
 * cap. The default cap is 10^7 and can be overridden with the
 * WREATH_STATE_CAP environment variable.
 */
class WreathSpace {
 public:
  WreathSpace(GroupSpec group, int n, std::uint64_t cap = default_state_cap())
      : group_(std::move(group)), n_(n) {
    if (n_ < 1) throw std::invalid_argument("wreath degree must be >= 1");
    total_exact_ = int_pow(Int(group_.order), static_cast<unsigned>(n_)) *
                   factorial(static_cast<unsigned>(n_));
    if (total_exact_ > Int(static_cast<unsigned long>(cap)))
      throw capacity_error(total_exact_, cap);
    size_ = total_exact_.get_ui();
    color_block_ = 1;
    for (int i = 0; i < n_; ++i) color_block_ *= static_cast<std::uint64_t>(group_.order);
  }

  static std::uint64_t default_state_cap() {
    if (const char* env = std::getenv("WREATH_STATE_CAP")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(env, &end, 10);
      if (end != env && *end == '\0' && v > 0) return static_cast<std::uint64_t>(v);
    }
    return 10'000'000ull;
  }

  const GroupSpec& group() const { return group_; }
  int n() const { return n_; }
  std::uint64_t size() const { return size_; }
  const Int& size_exact() const { return total_exact_; }

  WreathElement identity() const { return w_identity(group_, n_); }

  std::uint64_t index_of(const WreathElement& x) const {
    if (x.perm.size() != static_cast<std::size_t>(n_) || x.colors.size() != x.perm.size())
      throw std::invalid_argument("element degree does not match space");
    std::uint64_t colors = 0;
    for (int j = n_ - 1; j >= 0; --j) {
      int c = x.colors[static_cast<std::size_t>(j)];
      if (c < 0 || c >= group_.order) throw std::invalid_argument("color out of range");
      colors = colors * static_cast<std::uint64_t>(group_.order) + static_cast<std::uint64_t>(c);
    }
    return perm_rank(x.perm) * color_block_ + colors;
  }

  WreathElement element_at(std::uint64_t idx) const {
    if (idx >= size_) throw std::invalid_argument("state index out of range");
    WreathElement x;
    x.perm = perm_unrank(n_, idx / color_block_);
    std::uint64_t colors = idx % color_block_;
    x.colors.resize(static_cast<std::size_t>(n_));
    for (int j = 0; j < n_; ++j) {
      x.colors[static_cast<std::size_t>(j)] =
          static_cast<int>(colors % static_cast<std::uint64_t>(group_.order));
      colors /= static_cast<std::uint64_t>(group_.order);
    }
    return x;
  }

 private:
  GroupSpec group_;
  int n_;
  Int total_exact_;
  std::uint64_t size_ = 0;
  std::uint64_t color_block_ = 1;
};

}  // namespace wreathmix
