#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>

#include "wreathmix/diagrams.hpp"

namespace wreathmix {

// Closed-form mixing bounds. All evaluators are plain binary64 arithmetic.
// Formulas marked asymptotic-only drop o(1) terms or replace (1-1/n)^k by
// e^{-k/n}; they are reported as diagnostics and never asserted against
// exact values.

enum class BoundKind {
  lemma_ub1,
  corollary_ub1,
  ub_l2_key,
  ub_tv_spectral,
  ub_tv_coupling,
  lb_l2,
  lb_tv,
  fixed_point_formulas,
};

constexpr bool asymptotic_only(BoundKind k) {
  return k == BoundKind::lb_l2 || k == BoundKind::lb_tv || k == BoundKind::fixed_point_formulas;
}

constexpr std::string_view bound_name(BoundKind k) {
  switch (k) {
    case BoundKind::lemma_ub1: return "lemma_ub1";
    case BoundKind::corollary_ub1: return "corollary_ub1";
    case BoundKind::ub_l2_key: return "ub_l2_key";
    case BoundKind::ub_tv_spectral: return "ub_tv_spectral";
    case BoundKind::ub_tv_coupling: return "ub_tv_coupling";
    case BoundKind::lb_l2: return "lb_l2";
    case BoundKind::lb_tv: return "lb_tv";
    case BoundKind::fixed_point_formulas: return "fixed_point_formulas";
  }
  return "";
}

struct BoundInputs {
  int n = 0;          // wreath degree
  long g_order = 0;   // |G|, must be >= 2 here
  long ghat_count = 0;  // number of irreps of G
  double k = 0;       // step count, real-valued for curves
  double c_shift = 0;   // the C (or c) offset in threshold-form bounds
};

inline void validate_bound_inputs(const BoundInputs& b) {
  if (b.n < 2) throw std::domain_error("bound inputs: n must be >= 2");
  if (b.g_order < 2) throw std::domain_error("bound inputs: group order must be >= 2");
  if (b.ghat_count < 1 || b.ghat_count > b.g_order)
    throw std::domain_error("bound inputs: irrep count must be in [1, |G|]");
  if (!(b.k > 0)) throw std::domain_error("bound inputs: k must be positive");
}

struct LemmaCheck {
  double lhs = 0;
  double rhs = 0;
  bool holds = false;
};

/// Dimension-weighted power sum over all partitions of L against its
/// closed-form majorant:
///   sum_{lambda |- L} f_lambda^2 ((lambda_1 - s)/L)^{2k}
///     <  e^{-2ks/L} * e^{L^2 e^{-2k/L}}.
/// Requires 1 <= L <= 40 (enumeration cap), s >= 0, k >= 1. The comparison
/// can fail when s exceeds 1 and L is small; `holds` reports what happened.
inline LemmaCheck lemma_ub1_check(int L, double s, int k) {
  if (L < 1) throw std::domain_error("lemma_ub1_check: L must be >= 1");
  if (s < 0) throw std::domain_error("lemma_ub1_check: s must be non-negative");
  if (k < 1) throw std::domain_error("lemma_ub1_check: k must be >= 1");
  double lhs = 0;
  for (const Partition& lam : partitions_of(L)) {
    const double f = hook_count(lam).get_d();
    const double ratio = std::fabs((static_cast<double>(lam[0]) - s) / static_cast<double>(L));
    lhs += f * f * std::pow(ratio, 2.0 * k);
  }
  const double rhs = std::exp(-2.0 * k * s / L) *
                     std::exp(static_cast<double>(L) * L * std::exp(-2.0 * k / L));
  return LemmaCheck{lhs, rhs, lhs < rhs};
}

/// Same comparison with the single-row partition removed from both sides:
///   sum_{lambda != (L)} f_lambda^2 ((lambda_1 - s)/L)^{2k}
///     <  e^{-2ks/L} e^{L^2 e^{-2k/L}} - ((L-s)/L)^{2k}.
inline LemmaCheck corollary_ub1_check(int L, double s, int k) {
  LemmaCheck full = lemma_ub1_check(L, s, k);
  const double row = std::pow(std::fabs((static_cast<double>(L) - s) / L), 2.0 * k);
  const double lhs = full.lhs - row;
  const double rhs = full.rhs - row;
  return LemmaCheck{lhs, rhs, lhs < rhs};
}

/// Closed-form majorant of the squared l2 distance at step k, valid for
/// k >= max(n, n log n). With x = n^2 e^{-2k/n} and y = x(|G|-1):
///   2(e^x - 1) + e^{-4k/n} + 2 e^x (e^y - 1)
///     + 2(|Ghat|-1) x e^x (1/n^2 + e^y - 1).
inline double ub_l2_key_ineq(const BoundInputs& b) {
  validate_bound_inputs(b);
  const double n = b.n;
  if (b.k < std::max(n, n * std::log(n)))
    throw std::domain_error("ub_l2_key_ineq: requires k >= max(n, n log n)");
  const double x = n * n * std::exp(-2.0 * b.k / n);
  const double y = x * static_cast<double>(b.g_order - 1);
  const double ex = std::exp(x);
  return 2.0 * std::expm1(x) + std::exp(-4.0 * b.k / n) + 2.0 * ex * std::expm1(y) +
         2.0 * static_cast<double>(b.ghat_count - 1) * x * ex * (1.0 / (n * n) + std::expm1(y));
}

/// Total variation upper bound through the l2 comparison at
/// k = n log n + (n/2) log(|G|-1) + Cn:  sqrt(2) (e^{-2C} + 1) e^{-C}, C > 0.
inline double ub_tv_spectral(double C) {
  if (!(C > 0)) throw std::domain_error("ub_tv_spectral: requires C > 0");
  return std::sqrt(2.0) * (std::exp(-2.0 * C) + 1.0) * std::exp(-C);
}

/// Coupling-based total variation upper bound at k = n log n + Cn for C > 1:
///   a e^{-C} + (e + 1) e^{-C/2},
/// with a the caller-chosen comparison constant (default 2).
inline double ub_tv_coupling(double C, double a = 2.0) {
  if (!(C > 1)) throw std::domain_error("ub_tv_coupling: requires C > 1");
  if (!(a > 0)) throw std::domain_error("ub_tv_coupling: requires a > 0");
  return a * std::exp(-C) + (std::exp(1.0) + 1.0) * std::exp(-C / 2.0);
}

/// Asymptotic-only lower bound on the l2 distance:
///   sqrt((n - 2 + n(|G|-1)) (n-1)) e^{-k/n}.
inline double lb_l2(const BoundInputs& b) {
  validate_bound_inputs(b);
  const double n = b.n;
  return std::sqrt((n - 2.0 + n * static_cast<double>(b.g_order - 1)) * (n - 1.0)) *
         std::exp(-b.k / n);
}

/// Asymptotic-only lower bound on total variation via the fixed-point
/// statistic of the permutation factor, clamped to [0, 1]:
///   1 - 2(3 + 3(n-2)e^{-k/n} - 2(n-1)e^{-2k/n}) / (1 + (n-2)e^{-k/n})^2.
/// Requires n >= 3 and k > 1. The o(1) term is evaluated as zero.
inline double lb_tv(const BoundInputs& b) {
  validate_bound_inputs(b);
  if (b.n < 3) throw std::domain_error("lb_tv: requires n >= 3");
  if (!(b.k > 1)) throw std::domain_error("lb_tv: requires k > 1");
  const double n = b.n;
  const double e1 = std::exp(-b.k / n);
  const double e2 = std::exp(-2.0 * b.k / n);
  const double num = 3.0 + 3.0 * (n - 2.0) * e1 - 2.0 * (n - 1.0) * e2;
  const double den = 1.0 + (n - 2.0) * e1;
  const double v = 1.0 - 2.0 * num / (den * den);
  return std::min(1.0, std::max(0.0, v));
}

struct FixedPointFormulas {
  double ek = 0;   // approximate mean fixed-point count after k steps
  double ek2 = 0;  // approximate second moment
};

/// Asymptotic approximations of the fixed-point moments of the permutation
/// factor after k steps:
///   ek  = 1 + (n-2) e^{-k/n}
///   ek2 = 2 + 3(n-2) e^{-k/n} + (n^2-5n+5) e^{-2k/n} + (n-2)(1+(-1)^k)/n^k.
/// Requires n >= 3, k >= 0. Exact only in the n -> infinity limit.
inline FixedPointFormulas fixed_point_formulas(int n, int k) {
  if (n < 3) throw std::domain_error("fixed_point_formulas: requires n >= 3");
  if (k < 0) throw std::domain_error("fixed_point_formulas: requires k >= 0");
  const double nd = n;
  const double e1 = std::exp(-static_cast<double>(k) / nd);
  const double e2 = std::exp(-2.0 * k / nd);
  FixedPointFormulas f;
  f.ek = 1.0 + (nd - 2.0) * e1;
  const double sign = (k % 2 == 0) ? 2.0 : 0.0;
  f.ek2 = 2.0 + 3.0 * (nd - 2.0) * e1 + (nd * nd - 5.0 * nd + 5.0) * e2 +
          (nd - 2.0) * sign * std::pow(nd, -static_cast<double>(k));
  return f;
}

}  // namespace wreathmix
