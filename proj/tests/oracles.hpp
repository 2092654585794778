#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <vector>

#include <Eigen/Dense>

#include "wreathmix/diagrams.hpp"
#include "wreathmix/groups.hpp"
#include "wreathmix/walk.hpp"

namespace oracles {

using wreathmix::Int;
using wreathmix::Partition;
using wreathmix::Rat;
using wreathmix::YoungGDiagram;

// Partition count by the classic coin-change recurrence, independent of the
// enumeration code under test.
inline long partition_count(int n) {
  std::vector<long> ways(static_cast<std::size_t>(n) + 1, 0);
  ways[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int s = part; s <= n; ++s)
      ways[static_cast<std::size_t>(s)] += ways[static_cast<std::size_t>(s - part)];
  return ways[static_cast<std::size_t>(n)];
}

namespace detail {

inline void count_fillings(std::vector<int>& filled, const Partition& shape, int next, int total,
                           long& acc) {
  if (next > total) {
    ++acc;
    return;
  }
  for (std::size_t r = 0; r < shape.size(); ++r) {
    int len = filled[r];
    if (len >= shape[r]) continue;
    if (r > 0 && filled[r - 1] <= len) continue;
    ++filled[r];
    count_fillings(filled, shape, next + 1, total, acc);
    --filled[r];
  }
}

}  // namespace detail

// Standard fillings counted by direct backtracking: entries 1..|shape| placed
// one at a time, each at a position whose row prefix and column prefix are
// already filled.
inline long syt_count(const Partition& shape) {
  if (shape.empty()) return 1;
  std::vector<int> filled(shape.size(), 0);
  long acc = 0;
  detail::count_fillings(filled, shape, 1, wreathmix::partition_size(shape), acc);
  return acc;
}

inline long syt_g_count(const YoungGDiagram& mu) {
  // Places 1..n across components the same way, one box at a time.
  struct Walker {
    std::vector<std::vector<int>> filled;
    const std::vector<Partition>& shapes;
    long acc = 0;
    explicit Walker(const std::vector<Partition>& s) : shapes(s) {
      for (const auto& p : s) filled.emplace_back(p.size(), 0);
    }
    void go(int next, int total) {
      if (next > total) {
        ++acc;
        return;
      }
      for (std::size_t c = 0; c < shapes.size(); ++c) {
        for (std::size_t r = 0; r < shapes[c].size(); ++r) {
          int len = filled[c][r];
          if (len >= shapes[c][r]) continue;
          if (r > 0 && filled[c][r - 1] <= len) continue;
          ++filled[c][r];
          go(next + 1, total);
          --filled[c][r];
        }
      }
    }
  } w(mu.components);
  int total = 0;
  for (const auto& p : mu.components) total += wreathmix::partition_size(p);
  w.go(1, total);
  return w.acc;
}

// Dense transition matrix of the walk: column x holds the one-step
// distribution started at state x. Symmetric generating measures give a
// symmetric matrix, so a self-adjoint solve applies.
inline Eigen::MatrixXd dense_transition_matrix(const wreathmix::GeneratingMeasure& m) {
  const wreathmix::WreathSpace& sp = *m.space;
  const auto N = static_cast<Eigen::Index>(sp.size());
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(N, N);
  for (std::uint64_t x = 0; x < sp.size(); ++x) {
    wreathmix::WreathElement ex = sp.element_at(x);
    for (const auto& atom : m.atoms) {
      std::uint64_t y = sp.index_of(wreathmix::w_mul(sp.group(), ex, atom.first));
      A(static_cast<Eigen::Index>(y), static_cast<Eigen::Index>(x)) += atom.second.get_d();
    }
  }
  return A;
}

inline std::vector<double> dense_spectrum(const wreathmix::GeneratingMeasure& m) {
  Eigen::MatrixXd A = dense_transition_matrix(m);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(A);
  std::vector<double> eig(solver.eigenvalues().data(),
                          solver.eigenvalues().data() + solver.eigenvalues().size());
  std::sort(eig.begin(), eig.end());
  return eig;
}

// Finite-n moments of the fixed-point count of the permutation factor,
// derived from the two-state single-card chain and pair correlations; exact
// for every k >= 1 (k = 0 starts at the identity with n fixed points).
inline double exact_mean_fixed_points(int n, int k) {
  if (k == 0) return n;
  const double a = 1.0 - 1.0 / n;
  return 1.0 + (n - 2.0) * std::pow(a, k);
}

inline double exact_second_moment_fixed_points(int n, int k) {
  if (k == 0) return static_cast<double>(n) * n;
  const double a = 1.0 - 1.0 / n;
  const double b = 1.0 - 2.0 / n;
  const double r = 1.0 / n;
  return 2.0 + 3.0 * (n - 2.0) * std::pow(a, k) +
         (static_cast<double>(n) * n - 5.0 * n + 5.0) * std::pow(b, k) +
         (n - 2.0) * (std::pow(-r, k) + std::pow(r, k));
}

// Exceedance probability of the fixed-point count of a uniform permutation,
// from the exact distribution via derangement numbers.
inline double uniform_tail_by_derangements(int n, int threshold) {
  std::vector<Int> der(static_cast<std::size_t>(n) + 1);
  der[0] = 1;
  if (n >= 1) der[1] = 0;
  for (int m = 2; m <= n; ++m)
    der[static_cast<std::size_t>(m)] =
        Int(m - 1) * (der[static_cast<std::size_t>(m - 1)] + der[static_cast<std::size_t>(m - 2)]);
  Rat p = 0;
  Int nfact = wreathmix::factorial(n);
  for (int j = 0; j <= n; ++j) {
    if (j <= threshold) continue;
    p += Rat(wreathmix::binomial(n, j) * der[static_cast<std::size_t>(n - j)]) / Rat(nfact);
  }
  return p.get_d();
}

}  // namespace oracles
