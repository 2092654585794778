#pragma once

#include <algorithm>
#include <array>
#include <string>
#include <vector>

#include "wreathmix/diagrams.hpp"
#include "wreathmix/groups.hpp"

namespace wreathmix {

/*
 * Closed-form spectral decomposition of the warp-transpose-top transition
 * operator on the wreath product, acting on the regular representation.
 *
 * Irreducible blocks are indexed by diagram tuples mu with one component per
 * irrep of the color group. Inside the block for mu, the operator is
 * diagonal along standard fillings; the eigenvalue attached to a filling
 * depends only on the corner holding the last letter:
 *
 *     value = (content(corner) + [component is the trivial irrep])
 *             / (n * dim(component irrep)).
 *
 * The table below groups fillings by (mu, corner). In the regular
 * representation each block appears dim-many times, so an atom carries
 * multiplicity
 *
 *     count_syt_g(mu minus corner) * prod_i d_i^{m_i} * dim(block for mu),
 *
 * where m_i is the size of component i and d_i the irrep dimension.
 */
struct SpectrumAtom {
  Rat value;
  Int multiplicity;
  YoungGDiagram mu;
  Corner corner;
};

struct SpectrumTable {
  GroupSpec group;
  int n = 0;
  std::vector<SpectrumAtom> atoms;
};

inline void check_diagram_matches_group(const GroupSpec& g, const YoungGDiagram& mu) {
  if (mu.components.size() != g.irreps.size())
    throw std::invalid_argument("diagram has " + std::to_string(mu.components.size()) +
                                " components but the group has " +
                                std::to_string(g.irreps.size()) + " irreps");
}

/// True for the diagram carrying the invariant vectors: a single row at the
/// trivial component, all other components empty.
inline bool is_trivial_diagram(const GroupSpec& g, const YoungGDiagram& mu) {
  check_diagram_matches_group(g, mu);
  const int triv = g.trivial_index();
  for (std::size_t j = 0; j < mu.components.size(); ++j) {
    const auto& p = mu.components[j];
    if (static_cast<int>(j) == triv) {
      if (p.size() != 1) return false;
    } else if (!p.empty()) {
      return false;
    }
  }
  return true;
}

/// Dimension of the block indexed by mu:
/// multinomial(n; m_1..m_t) * prod hook_count(mu_i) * prod d_i^{m_i}.
inline Int dim_v_mu(const GroupSpec& g, const YoungGDiagram& mu) {
  check_diagram_matches_group(g, mu);
  const int n = total_size(mu);
  Int r = count_syt_g(mu);
  for (std::size_t i = 0; i < mu.components.size(); ++i)
    r *= int_pow(Int(g.irreps[i].dim), static_cast<unsigned>(partition_size(mu.components[i])));
  return r;
}

/// Number of standard fillings of mu whose last letter sits at the given
/// corner; equal to the filling count of the diagram with that corner removed.
inline Int corner_multiplicity(const YoungGDiagram& mu, const Corner& corner) {
  return count_syt_g(remove_corner(mu, corner));
}

/// Eigenvalue attached to a removable corner of component j:
/// (content + [j is trivial]) / (n * d_j). Throws if the corner is not
/// removable from mu or if mu does not have size n.
inline Rat eigenvalue_at_corner(const GroupSpec& g, int n, const YoungGDiagram& mu,
                                const Corner& corner) {
  check_diagram_matches_group(g, mu);
  if (total_size(mu) != n) throw std::invalid_argument("diagram size does not equal n");
  remove_corner(mu, corner);  // validates removability
  const int j = corner.component;
  const int ind = g.irreps[static_cast<std::size_t>(j)].is_trivial ? 1 : 0;
  return make_rat(content_of(corner) + ind,
                  static_cast<long>(n) * g.irreps[static_cast<std::size_t>(j)].dim);
}

/// Full eigenvalue table of the n-letter chain over group g. Total
/// multiplicity equals |G|^n * n!.
inline SpectrumTable build_full_spectrum(const GroupSpec& g, int n) {
  if (n < 1) throw std::invalid_argument("wreath degree must be >= 1");
  SpectrumTable table;
  table.group = g;
  table.n = n;
  const int t = static_cast<int>(g.irreps.size());
  for (const auto& mu : enumerate_young_g_diagrams(n, t)) {
    Int dim_block = dim_v_mu(g, mu);
    Int color_dim = 1;
    for (std::size_t i = 0; i < mu.components.size(); ++i)
      color_dim *=
          int_pow(Int(g.irreps[i].dim), static_cast<unsigned>(partition_size(mu.components[i])));
    for (const Corner& c : removable_corners(mu)) {
      SpectrumAtom atom;
      atom.value = eigenvalue_at_corner(g, n, mu, c);
      atom.multiplicity = corner_multiplicity(mu, c) * color_dim * dim_block;
      atom.mu = mu;
      atom.corner = c;
      table.atoms.push_back(std::move(atom));
    }
  }
  return table;
}

/// Sum of multiplicity * value^k over all atoms. Equals |G|^n * n! times the
/// return probability of the chain after k steps.
inline Rat spectral_trace(const SpectrumTable& table, unsigned k) {
  Rat s = 0;
  for (const auto& a : table.atoms) s += Rat(a.multiplicity) * rat_pow(a.value, k);
  return s;
}

/// Squared l2 distance to uniform after k steps, summed over all atoms away
/// from the invariant block: sum mult * value^{2k}. Requires k >= 1.
inline Rat spectral_l2_sq(const SpectrumTable& table, unsigned k) {
  if (k < 1) throw std::invalid_argument("spectral_l2_sq requires k >= 1");
  Rat s = 0;
  for (const auto& a : table.atoms) {
    if (is_trivial_diagram(table.group, a.mu)) continue;
    s += Rat(a.multiplicity) * rat_pow(a.value, 2 * k);
  }
  return s;
}

/// Text export, one atom per row:
///   value_num/value_den, multiplicity, mu, corner
/// Rows are sorted by descending value, then descending multiplicity, then
/// diagram and corner strings, so the output is byte-stable.
inline std::string export_spectrum(const SpectrumTable& table) {
  std::vector<const SpectrumAtom*> order;
  order.reserve(table.atoms.size());
  for (const auto& a : table.atoms) order.push_back(&a);
  auto corner_key = [](const Corner& c) { return std::array<int, 3>{c.component, c.row, c.col}; };
  std::sort(order.begin(), order.end(), [&](const SpectrumAtom* a, const SpectrumAtom* b) {
    int cv = cmp(a->value, b->value);
    if (cv != 0) return cv > 0;
    int cm = cmp(a->multiplicity, b->multiplicity);
    if (cm != 0) return cm > 0;
    const std::string da = diagram_string(a->mu);
    const std::string db = diagram_string(b->mu);
    if (da != db) return da < db;
    return corner_key(a->corner) < corner_key(b->corner);
  });
  std::string out;
  for (const SpectrumAtom* a : order) {
    out += rat_string(a->value);
    out += ", ";
    out += a->multiplicity.get_str();
    out += ", ";
    out += diagram_string(a->mu);
    out += ", (";
    out += std::to_string(a->corner.component);
    out += ",";
    out += std::to_string(a->corner.row + 1);
    out += ",";
    out += std::to_string(a->corner.col + 1);
    out += ")\n";
  }
  return out;
}

}  // namespace wreathmix
