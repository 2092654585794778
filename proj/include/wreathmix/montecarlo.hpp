#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "wreathmix/diagrams.hpp"
#include "wreathmix/groups.hpp"

namespace wreathmix {

// Deterministic 64-bit generator (splitmix64). Bounded draws use rejection
// sampling, so streams are reproducible across platforms.
struct Rng {
  std::uint64_t state;

  explicit Rng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform draw in [0, bound).
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t min = (0 - bound) % bound;
    std::uint64_t x = next();
    while (x < min) x = next();
    return x % bound;
  }
};

namespace detail {

inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace detail

// Counter-based stream: the state depends only on (seed, stream, trial), so
// any trial can be replayed in isolation.
inline Rng trial_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t trial) {
  std::uint64_t s = detail::mix64(seed + 0x9E3779B97F4A7C15ull * (stream + 1));
  s = detail::mix64(s + 0xD1B54A32D192ED03ull * (trial + 1));
  return Rng(s);
}

struct MCConfig {
  GroupSpec group;
  int n = 0;
  std::uint64_t trials = 100000;
  unsigned steps = 0;
  std::uint64_t seed = 1;
};

// Simulated chain state in the card picture: card_at[pos] is the card at a
// position, color_of[card] the group element attached to a card.
struct ShuffleState {
  std::vector<int> card_at;
  std::vector<int> color_of;
};

inline ShuffleState initial_state(const GroupSpec& g, int n) {
  ShuffleState st;
  st.card_at.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) st.card_at[static_cast<std::size_t>(i)] = i;
  st.color_of.assign(static_cast<std::size_t>(n), g.identity);
  return st;
}

/// One combinatorial move with chosen letter i (0-based) and color c: for
/// i = n-1 recolor the top card by c on the right; otherwise transpose the
/// cards at positions i and n-1, recolor the card now at i by c and the card
/// now at the top by c^{-1}.
inline void step_shuffle(const GroupSpec& g, ShuffleState& st, int i, int c) {
  const int top = static_cast<int>(st.card_at.size()) - 1;
  if (i == top) {
    int card = st.card_at[static_cast<std::size_t>(top)];
    st.color_of[static_cast<std::size_t>(card)] =
        g.mul_of(st.color_of[static_cast<std::size_t>(card)], c);
    return;
  }
  std::swap(st.card_at[static_cast<std::size_t>(i)], st.card_at[static_cast<std::size_t>(top)]);
  int ci = st.card_at[static_cast<std::size_t>(i)];
  st.color_of[static_cast<std::size_t>(ci)] = g.mul_of(st.color_of[static_cast<std::size_t>(ci)], c);
  int ct = st.card_at[static_cast<std::size_t>(top)];
  st.color_of[static_cast<std::size_t>(ct)] =
      g.mul_of(st.color_of[static_cast<std::size_t>(ct)], g.inv_of(c));
}

inline void step_shuffle_random(const GroupSpec& g, ShuffleState& st, Rng& rng) {
  const int n = static_cast<int>(st.card_at.size());
  int i = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
  int c = static_cast<int>(rng.below(static_cast<std::uint64_t>(g.order)));
  step_shuffle(g, st, i, c);
}

inline WreathElement state_to_element(const ShuffleState& st) {
  return WreathElement{st.color_of, st.card_at};
}

inline int fixed_point_count(const ShuffleState& st) {
  int f = 0;
  for (std::size_t p = 0; p < st.card_at.size(); ++p)
    if (st.card_at[p] == static_cast<int>(p)) ++f;
  return f;
}

struct MomentEstimate {
  unsigned k = 0;
  double mean = 0;            // sample mean of the fixed-point count
  double second_moment = 0;   // sample mean of its square
  double stderr_mean = 0;
  double stderr_second = 0;
  std::uint64_t trials = 0;
};

/// Runs `trials` independent chains to max(checkpoints) steps and records the
/// fixed-point count of the permutation factor at each requested k.
/// Checkpoints must be sorted ascending. Stream 1 of the seed.
inline std::vector<MomentEstimate> fixed_point_moment_scan(const MCConfig& cfg,
                                                           const std::vector<unsigned>& checkpoints) {
  if (cfg.n < 1) throw std::invalid_argument("chain degree must be >= 1");
  for (std::size_t i = 1; i < checkpoints.size(); ++i)
    if (checkpoints[i] <= checkpoints[i - 1])
      throw std::invalid_argument("checkpoints must be strictly increasing");
  const std::size_t m = checkpoints.size();
  // Sums of f, f^2, f^3=f*f^2 not needed; f^2 and f^4 feed the stderrs.
  std::vector<double> s1(m, 0), s2(m, 0), s4(m, 0);
  for (std::uint64_t t = 0; t < cfg.trials; ++t) {
    Rng rng = trial_rng(cfg.seed, 1, t);
    ShuffleState st = initial_state(cfg.group, cfg.n);
    unsigned step = 0;
    for (std::size_t ci = 0; ci < m; ++ci) {
      for (; step < checkpoints[ci]; ++step) step_shuffle_random(cfg.group, st, rng);
      const double f = fixed_point_count(st);
      s1[ci] += f;
      s2[ci] += f * f;
      s4[ci] += f * f * f * f;
    }
  }
  std::vector<MomentEstimate> out(m);
  const double T = static_cast<double>(cfg.trials);
  for (std::size_t ci = 0; ci < m; ++ci) {
    MomentEstimate& e = out[ci];
    e.k = checkpoints[ci];
    e.trials = cfg.trials;
    e.mean = s1[ci] / T;
    e.second_moment = s2[ci] / T;
    const double var1 = std::max(0.0, (s2[ci] - T * e.mean * e.mean) / (T - 1));
    const double var2 = std::max(0.0, (s4[ci] - T * e.second_moment * e.second_moment) / (T - 1));
    e.stderr_mean = std::sqrt(var1 / T);
    e.stderr_second = std::sqrt(var2 / T);
  }
  return out;
}

inline MomentEstimate fixed_point_moments(const MCConfig& cfg, unsigned k) {
  return fixed_point_moment_scan(cfg, {k})[0];
}

inline MomentEstimate fixed_point_moments(const MCConfig& cfg) {
  return fixed_point_moments(cfg, cfg.steps);
}

// ---------------------------------------------------------------------------

struct CouponOutcome {
  std::uint64_t t_all = 0;      // draws until every type has appeared
  std::uint64_t t_n_extra = 0;  // extra draws waiting for the top type, if needed
  std::uint64_t t_twisted = 0;  // t_all when the last new type was the top one, else t_all + t_n_extra
  bool last_new_was_top = false;
};

/// Uniform draws from n types until all are seen; if the collection was not
/// completed by type n-1 (the top), keep drawing until the top type appears
/// again.
inline CouponOutcome simulate_twisted_coupon(int n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("coupon type count must be >= 1");
  CouponOutcome out;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  int distinct = 0;
  int last = -1;
  while (distinct < n) {
    int x = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    ++out.t_all;
    if (!seen[static_cast<std::size_t>(x)]) {
      seen[static_cast<std::size_t>(x)] = 1;
      ++distinct;
      last = x;
    }
  }
  out.last_new_was_top = (last == n - 1);
  if (!out.last_new_was_top) {
    do {
      ++out.t_n_extra;
    } while (static_cast<int>(rng.below(static_cast<std::uint64_t>(n))) != n - 1);
  }
  out.t_twisted = out.t_all + out.t_n_extra;
  return out;
}

/// Collects `trials` twisted collection times with per-trial streams
/// (stream 2 of the seed).
inline std::vector<std::uint64_t> twisted_coupon_samples(int n, std::uint64_t trials,
                                                         std::uint64_t seed) {
  std::vector<std::uint64_t> s;
  s.reserve(trials);
  for (std::uint64_t t = 0; t < trials; ++t) {
    Rng rng = trial_rng(seed, 2, t);
    s.push_back(simulate_twisted_coupon(n, rng).t_twisted);
  }
  return s;
}

struct TailEstimate {
  double p_hat = 0;
  double std_error = 0;
};

/// Empirical exceedance probability P(sample > threshold) with binomial
/// standard error.
inline TailEstimate tail_estimate(const std::vector<std::uint64_t>& samples, double threshold) {
  if (samples.empty()) throw std::invalid_argument("tail_estimate: no samples");
  std::uint64_t c = 0;
  for (std::uint64_t s : samples)
    if (static_cast<double>(s) > threshold) ++c;
  const double T = static_cast<double>(samples.size());
  TailEstimate e;
  e.p_hat = static_cast<double>(c) / T;
  e.std_error = std::sqrt(e.p_hat * (1.0 - e.p_hat) / T);
  return e;
}

/// Exact P(fixed points >= threshold) under the uniform permutation on n
/// letters, via derangement counts.
inline double uniform_fixed_point_tail(int n, int threshold) {
  if (n < 1) throw std::invalid_argument("degree must be >= 1");
  if (threshold <= 0) return 1.0;
  if (threshold > n) return 0.0;
  std::vector<Int> der(static_cast<std::size_t>(n + 1));
  der[0] = 1;
  if (n >= 1) der[1] = 0;
  for (int m = 2; m <= n; ++m)
    der[static_cast<std::size_t>(m)] =
        Int(m - 1) * (der[static_cast<std::size_t>(m - 1)] + der[static_cast<std::size_t>(m - 2)]);
  Int count = 0;
  for (int j = threshold; j <= n; ++j)
    count += binomial(n, j) * der[static_cast<std::size_t>(n - j)];
  Rat p(count, factorial(static_cast<unsigned>(n)));
  p.canonicalize();
  return p.get_d();
}

struct DistinguishResult {
  double lower_bound = 0;  // |p_chain - p_uniform| - 3*std_error, clamped at 0
  double p_chain = 0;
  double p_uniform = 0;
  double std_error = 0;
};

/// Statistical lower bound on total variation between the chain at step k
/// and uniformity, from the fixed-point count exceeding a threshold. The
/// uniform side is exact; the chain side is estimated over cfg.trials chains
/// (stream 3 of the seed).
inline DistinguishResult distinguishing_tv_lower(const MCConfig& cfg, unsigned k, int threshold) {
  if (cfg.n < 1) throw std::invalid_argument("chain degree must be >= 1");
  std::uint64_t hits = 0;
  for (std::uint64_t t = 0; t < cfg.trials; ++t) {
    Rng rng = trial_rng(cfg.seed, 3, t);
    ShuffleState st = initial_state(cfg.group, cfg.n);
    for (unsigned s = 0; s < k; ++s) step_shuffle_random(cfg.group, st, rng);
    if (fixed_point_count(st) >= threshold) ++hits;
  }
  DistinguishResult r;
  const double T = static_cast<double>(cfg.trials);
  r.p_chain = static_cast<double>(hits) / T;
  r.p_uniform = uniform_fixed_point_tail(cfg.n, threshold);
  r.std_error = std::sqrt(r.p_chain * (1.0 - r.p_chain) / T);
  r.lower_bound = std::max(0.0, std::fabs(r.p_chain - r.p_uniform) - 3.0 * r.std_error);
  return r;
}

}  // namespace wreathmix
