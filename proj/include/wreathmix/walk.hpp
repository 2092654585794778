#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <memory>
#include <type_traits>
#include <utility>
#include <vector>

#include "wreathmix/groups.hpp"

namespace wreathmix {

/**
 * Step distribution of a walk: finitely many atoms with exact rational
 * probabilities over a dense-indexed wreath state space. Probabilities sum
 * to one and the support is inverse-closed with matching weights, so the
 * induced transition operator is symmetric.
 */
struct GeneratingMeasure {
  std::shared_ptr<const WreathSpace> space;
  std::vector<std::pair<WreathElement, Rat>> atoms;
};

/**
 * The warp-transpose-top step on n letters over the space's color group:
 * with probability 1/(n|G|) either recolor the top letter by g (atom with
 * color g at the top and identity permutation), or, for i < n, transpose
 * (i,n) while recoloring letter i by g^{-1} and the top by g. All atoms are
 * distinct and self-inverse.
 */
inline GeneratingMeasure build_warp_measure(std::shared_ptr<const WreathSpace> space) {
  const GroupSpec& g = space->group();
  const int n = space->n();
  GeneratingMeasure m;
  m.space = std::move(space);
  const Rat p = make_rat(1, static_cast<long>(n) * g.order);
  for (int c = 0; c < g.order; ++c)
    m.atoms.emplace_back(w_colored_letter(g, n, n - 1, c), p);
  for (int i = 0; i + 1 < n; ++i)
    for (int c = 0; c < g.order; ++c) {
      WreathElement e = w_identity(g, n);
      e.colors[static_cast<std::size_t>(i)] = g.inv_of(c);
      e.colors[static_cast<std::size_t>(n - 1)] = c;
      e.perm = perm_transposition(n, i, n - 1);
      m.atoms.emplace_back(std::move(e), p);
    }
  return m;
}

/// State space of the permutation factor alone: the wreath product over the
/// one-element group.
inline std::shared_ptr<const WreathSpace> make_sn_space(
    int n, std::uint64_t cap = WreathSpace::default_state_cap()) {
  return std::make_shared<const WreathSpace>(make_cyclic(1), n, cap);
}

/// Transpose-top step on n letters: identity or (i,n), each with
/// probability 1/n. This is the projection of the warp measure.
inline GeneratingMeasure build_transpose_top_measure(
    int n, std::uint64_t cap = WreathSpace::default_state_cap()) {
  return build_warp_measure(make_sn_space(n, cap));
}

// Distribution over a dense-indexed state space. The scalar is either Rat
// (exact mode) or double (float mode).
template <class S>
struct Distribution {
  std::shared_ptr<const WreathSpace> space;
  std::vector<S> weights;
};

template <class S>
inline S scalar_cast(const Rat& r);
template <>
inline Rat scalar_cast<Rat>(const Rat& r) {
  return r;
}
template <>
inline double scalar_cast<double>(const Rat& r) {
  return r.get_d();
}

template <class S>
inline Distribution<S> point_mass_identity(std::shared_ptr<const WreathSpace> space) {
  Distribution<S> d;
  d.weights.assign(space->size(), S(0));
  d.weights[space->index_of(space->identity())] = S(1);
  d.space = std::move(space);
  return d;
}

namespace detail {

inline void check_same_space(const std::shared_ptr<const WreathSpace>& a,
                             const std::shared_ptr<const WreathSpace>& b) {
  if (a == b) return;
  if (!a || !b || a->n() != b->n() || a->group().order != b->group().order ||
      a->size() != b->size())
    throw std::invalid_argument("distribution and measure live on different spaces");
}

}  // namespace detail

/// One convolution step: out(x*s) += d(x) * m(s) over all states x and atoms s.
template <class S>
inline Distribution<S> convolve_step(const Distribution<S>& d, const GeneratingMeasure& m) {
  detail::check_same_space(d.space, m.space);
  const WreathSpace& sp = *d.space;
  Distribution<S> out;
  out.space = d.space;
  out.weights.assign(d.weights.size(), S(0));
  std::vector<std::pair<WreathElement, S>> atoms;
  atoms.reserve(m.atoms.size());
  for (const auto& [elem, p] : m.atoms) atoms.emplace_back(elem, scalar_cast<S>(p));
  for (std::uint64_t i = 0; i < sp.size(); ++i) {
    if (d.weights[i] == S(0)) continue;
    const WreathElement x = sp.element_at(i);
    for (const auto& [s, p] : atoms)
      out.weights[sp.index_of(w_mul(sp.group(), x, s))] += d.weights[i] * p;
  }
  return out;
}

/// Distribution of the walk after k steps from the identity. Equivalent to k
/// calls of convolve_step; the per-atom state maps are precomputed once.
template <class S>
inline Distribution<S> distribution_at(const GeneratingMeasure& m, unsigned k) {
  const WreathSpace& sp = *m.space;
  Distribution<S> d = point_mass_identity<S>(m.space);
  if (k == 0) return d;
  if (sp.size() > std::numeric_limits<std::uint32_t>::max())
    throw capacity_error(sp.size_exact(), std::numeric_limits<std::uint32_t>::max());
  std::vector<std::vector<std::uint32_t>> maps(m.atoms.size());
  std::vector<S> probs;
  probs.reserve(m.atoms.size());
  for (std::size_t a = 0; a < m.atoms.size(); ++a) {
    maps[a].resize(sp.size());
    for (std::uint64_t i = 0; i < sp.size(); ++i)
      maps[a][i] = static_cast<std::uint32_t>(
          sp.index_of(w_mul(sp.group(), sp.element_at(i), m.atoms[a].first)));
    probs.push_back(scalar_cast<S>(m.atoms[a].second));
  }
  std::vector<S> cur = std::move(d.weights);
  std::vector<S> next(cur.size());
  for (unsigned step = 0; step < k; ++step) {
    std::fill(next.begin(), next.end(), S(0));
    for (std::uint64_t i = 0; i < cur.size(); ++i) {
      if (cur[i] == S(0)) continue;
      for (std::size_t a = 0; a < maps.size(); ++a) next[maps[a][i]] += cur[i] * probs[a];
    }
    std::swap(cur, next);
  }
  d.weights = std::move(cur);
  return d;
}

/// Visits the walk distribution at every step 0..kmax in order:
/// visit(k, dist). Shares one set of precomputed atom maps across steps.
template <class S, class Visit>
inline void scan_walk(const GeneratingMeasure& m, unsigned kmax, Visit&& visit) {
  const WreathSpace& sp = *m.space;
  if (sp.size() > std::numeric_limits<std::uint32_t>::max())
    throw capacity_error(sp.size_exact(), std::numeric_limits<std::uint32_t>::max());
  std::vector<std::vector<std::uint32_t>> maps(m.atoms.size());
  std::vector<S> probs;
  probs.reserve(m.atoms.size());
  for (std::size_t a = 0; a < m.atoms.size(); ++a) {
    maps[a].resize(sp.size());
    for (std::uint64_t i = 0; i < sp.size(); ++i)
      maps[a][i] = static_cast<std::uint32_t>(
          sp.index_of(w_mul(sp.group(), sp.element_at(i), m.atoms[a].first)));
    probs.push_back(scalar_cast<S>(m.atoms[a].second));
  }
  Distribution<S> d = point_mass_identity<S>(m.space);
  std::vector<S> next(d.weights.size());
  for (unsigned k = 0;; ++k) {
    visit(k, static_cast<const Distribution<S>&>(d));
    if (k == kmax) break;
    std::fill(next.begin(), next.end(), S(0));
    for (std::uint64_t i = 0; i < d.weights.size(); ++i) {
      if (d.weights[i] == S(0)) continue;
      for (std::size_t a = 0; a < maps.size(); ++a) next[maps[a][i]] += d.weights[i] * probs[a];
    }
    std::swap(d.weights, next);
  }
}

namespace detail {

inline Rat abs_of(const Rat& r) { return ::abs(r); }
inline double abs_of(double x) { return std::fabs(x); }

}  // namespace detail

/// Total variation distance to the uniform distribution: half the l1 norm of
/// (d - uniform). Exact in rational mode.
template <class S>
inline S tv_distance(const Distribution<S>& d) {
  const S u = scalar_cast<S>(make_rat(1, 1) / Rat(d.space->size_exact()));
  S acc(0);
  for (const S& w : d.weights) acc += detail::abs_of(w - u);
  return acc / S(2);
}

template <class S>
struct L2Result {
  S squared;      // sum over states of |d(x)/u - 1|^2 * u, exact in rational mode
  double value;   // floating square root of `squared`
};

/// Squared l2 distance to uniform (and its float root):
/// sum |Omega| * (d(x) - u)^2.
template <class S>
inline L2Result<S> l2_distance(const Distribution<S>& d) {
  const S u = scalar_cast<S>(make_rat(1, 1) / Rat(d.space->size_exact()));
  const S omega = scalar_cast<S>(Rat(d.space->size_exact()));
  S acc(0);
  for (const S& w : d.weights) {
    S diff = w - u;
    acc += diff * diff;
  }
  acc *= omega;
  double root;
  if constexpr (std::is_same_v<S, Rat>)
    root = std::sqrt(acc.get_d());
  else
    root = std::sqrt(acc);
  return L2Result<S>{std::move(acc), root};
}

/// Pushforward onto the permutation factor: sums weights over colors. The
/// result lives on the trivial-group wreath space of the same degree.
template <class S>
inline Distribution<S> project_to_sn(const Distribution<S>& d) {
  const WreathSpace& sp = *d.space;
  Distribution<S> out;
  out.space = make_sn_space(sp.n());
  out.weights.assign(out.space->size(), S(0));
  for (std::uint64_t i = 0; i < sp.size(); ++i) {
    if (d.weights[i] == S(0)) continue;
    out.weights[perm_rank(sp.element_at(i).perm)] += d.weights[i];
  }
  return out;
}

}  // namespace wreathmix
