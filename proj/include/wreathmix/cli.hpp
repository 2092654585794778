#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <memory>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "wreathmix/bounds.hpp"
#include "wreathmix/errors.hpp"
#include "wreathmix/groups.hpp"
#include "wreathmix/montecarlo.hpp"
#include "wreathmix/rational.hpp"
#include "wreathmix/spectrum.hpp"
#include "wreathmix/walk.hpp"

namespace wreathmix {

enum class Command { spectrum, exact_scan, mc_scan, bounds, verify };

enum class NumMode { rational, floating };

struct RunConfig {
  Command command = Command::verify;
  std::string group = "cyclic:2";
  int n = 2;
  unsigned kmax = 10;
  NumMode mode = NumMode::rational;
  std::uint64_t trials = 100000;
  std::uint64_t seed = 1;
  std::string out;
  double a_const = 2.0;
  bool exact_output = false;
  std::uint64_t state_cap = WreathSpace::default_state_cap();
};

/// Accepts "cyclic:m", "symmetric:m", or "cayley:<path to json>".
inline GroupSpec parse_group_spec(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("group spec must look like kind:arg, got '" + spec + "'");
  const std::string kind = spec.substr(0, colon);
  const std::string arg = spec.substr(colon + 1);
  if (kind == "cayley") return load_cayley_table_file(arg);
  int m = 0;
  try {
    std::size_t used = 0;
    m = std::stoi(arg, &used);
    if (used != arg.size()) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw std::invalid_argument("group spec '" + spec + "' needs an integer parameter");
  }
  if (kind == "cyclic") return make_cyclic(m);
  if (kind == "symmetric") return make_symmetric(m);
  throw std::invalid_argument("unknown group kind '" + kind +
                              "' (expected cyclic, symmetric, or cayley)");
}

namespace detail {

inline std::ofstream open_output(const std::string& path) {
  if (path.empty()) throw std::invalid_argument("this command requires --out");
  std::ofstream f(path);
  if (!f) throw std::invalid_argument("cannot open output file '" + path + "'");
  return f;
}

inline std::string csv_nan() { return "nan"; }

inline double harmonic(int n) {
  double h = 0;
  for (int j = 1; j <= n; ++j) h += 1.0 / j;
  return h;
}

}  // namespace detail

/// One row of the exact scan: distances of the step-k distribution from
/// uniform, the spectral value of the squared l2 distance, and the half-l2
/// upper bound on total variation.
struct ScanRow {
  unsigned k = 0;
  Rat tv;
  Rat l2sq;           // from the distribution itself
  Rat l2sq_spectral;  // from the eigenvalue table
  double half_l2_bound = 0;
};

/// Computes rows 0..kmax by exact convolution plus the eigenvalue table.
inline std::vector<ScanRow> scan_exact(const GroupSpec& g, int n, unsigned kmax,
                                       std::uint64_t cap = WreathSpace::default_state_cap()) {
  auto space = std::make_shared<const WreathSpace>(g, n, cap);
  GeneratingMeasure m = build_warp_measure(space);
  SpectrumTable table = build_full_spectrum(g, n);
  std::vector<ScanRow> rows;
  rows.reserve(kmax + 1);
  scan_walk<Rat>(m, kmax, [&](unsigned k, const Distribution<Rat>& d) {
    ScanRow r;
    r.k = k;
    r.tv = tv_distance(d);
    auto l2 = l2_distance(d);
    r.l2sq = l2.squared;
    r.l2sq_spectral = k == 0 ? Rat(spectral_trace(table, 0) - 1) : spectral_l2_sq(table, k);
    r.half_l2_bound = 0.5 * l2.value;
    rows.push_back(std::move(r));
  });
  return rows;
}

namespace detail {

inline int run_spectrum(const RunConfig& cfg, const GroupSpec& g, std::ostream& log) {
  SpectrumTable table = build_full_spectrum(g, cfg.n);
  std::ofstream f = open_output(cfg.out);
  f << export_spectrum(table);
  if (!f) throw std::invalid_argument("write to '" + cfg.out + "' failed");
  Int total = 0;
  for (const auto& a : table.atoms) total += a.multiplicity;
  log << "spectrum: " << table.atoms.size() << " atoms, total multiplicity " << total.get_str()
      << ", written to " << cfg.out << "\n";
  return 0;
}

inline int run_exact_scan(const RunConfig& cfg, const GroupSpec& g, std::ostream& log) {
  std::ofstream f = open_output(cfg.out);
  f << "k,tv,l2sq_exact,l2sq_spectral,half_l2_bound\n";
  if (cfg.mode == NumMode::rational) {
    std::vector<ScanRow> rows = scan_exact(g, cfg.n, cfg.kmax, cfg.state_cap);
    for (const ScanRow& r : rows) {
      if (cfg.exact_output)
        f << r.k << ',' << rat_string(r.tv) << ',' << rat_string(r.l2sq) << ','
          << rat_string(r.l2sq_spectral) << ',' << sig12(r.half_l2_bound) << '\n';
      else
        f << r.k << ',' << sig12(r.tv.get_d()) << ',' << sig12(r.l2sq.get_d()) << ','
          << sig12(r.l2sq_spectral.get_d()) << ',' << sig12(r.half_l2_bound) << '\n';
    }
  } else {
    auto space = std::make_shared<const WreathSpace>(g, cfg.n, cfg.state_cap);
    GeneratingMeasure m = build_warp_measure(space);
    SpectrumTable table = build_full_spectrum(g, cfg.n);
    std::vector<double> val, mult;
    std::vector<bool> is_triv;
    for (const auto& a : table.atoms) {
      val.push_back(a.value.get_d());
      mult.push_back(a.multiplicity.get_d());
      is_triv.push_back(is_trivial_diagram(g, a.mu));
    }
    scan_walk<double>(m, cfg.kmax, [&](unsigned k, const Distribution<double>& d) {
      double spectral = 0;
      for (std::size_t i = 0; i < val.size(); ++i) {
        if (k == 0) {
          if (!is_triv[i]) spectral += mult[i];
        } else if (!is_triv[i]) {
          spectral += mult[i] * std::pow(val[i], 2.0 * k);
        }
      }
      auto l2 = l2_distance(d);
      f << k << ',' << sig12(tv_distance(d)) << ',' << sig12(l2.squared) << ','
        << sig12(spectral) << ',' << sig12(0.5 * l2.value) << '\n';
    });
  }
  if (!f) throw std::invalid_argument("write to '" + cfg.out + "' failed");
  log << "exact-scan: k = 0.." << cfg.kmax << " written to " << cfg.out << "\n";
  return 0;
}

inline int run_mc_scan(const RunConfig& cfg, const GroupSpec& g, std::ostream& log) {
  if (cfg.out.empty()) throw std::invalid_argument("this command requires --out");
  if (cfg.n < 1) throw std::invalid_argument("mc-scan requires n >= 1");
  MCConfig mc;
  mc.group = g;
  mc.n = cfg.n;
  mc.trials = cfg.trials;
  mc.seed = cfg.seed;

  std::vector<unsigned> checkpoints;
  for (unsigned k = 0; k <= cfg.kmax; ++k) checkpoints.push_back(k);
  std::vector<MomentEstimate> est = fixed_point_moment_scan(mc, checkpoints);
  const std::string moments_path = cfg.out + ".moments.csv";
  {
    std::ofstream f = open_output(moments_path);
    f << "k,mean_f,second_moment_f,stderr\n";
    for (const MomentEstimate& e : est)
      f << e.k << ',' << sig12(e.mean) << ',' << sig12(e.second_moment) << ','
        << sig12(e.stderr_mean) << '\n';
    if (!f) throw std::invalid_argument("write to '" + moments_path + "' failed");
  }

  std::vector<std::uint64_t> coupon = twisted_coupon_samples(cfg.n, cfg.trials, cfg.seed);
  double mean_t = 0;
  for (std::uint64_t t : coupon) mean_t += static_cast<double>(t);
  mean_t /= static_cast<double>(coupon.size());
  const std::string coupon_path = cfg.out + ".coupon.csv";
  {
    std::ofstream f = open_output(coupon_path);
    f << "C,threshold,p_hat,stderr,bound\n";
    for (int c = 1; c <= 3; ++c) {
      const double thr = std::ceil(cfg.n * std::log(cfg.n) + c * cfg.n);
      TailEstimate t = tail_estimate(coupon, thr);
      const double bound = (std::exp(1.0) + 1.0) * std::exp(-0.5 * c);
      f << c << ',' << sig12(thr) << ',' << sig12(t.p_hat) << ',' << sig12(t.std_error) << ','
        << sig12(bound) << '\n';
    }
    if (!f) throw std::invalid_argument("write to '" + coupon_path + "' failed");
  }
  log << "mc-scan: " << cfg.trials << " trials, moments in " << moments_path << ", coupon tails in "
      << coupon_path << "\n";
  log << "mc-scan: mean twisted collection time " << sig12(mean_t) << " (n H_n = "
      << sig12(cfg.n * harmonic(cfg.n)) << ")\n";
  return 0;
}

inline int run_bounds(const RunConfig& cfg, const GroupSpec& g, std::ostream& log) {
  std::ofstream f = open_output(cfg.out);
  validate_bound_inputs({cfg.n, g.order, static_cast<int>(g.irreps.size()), 1.0});
  const double n = cfg.n;
  const double log_n = std::log(n);
  f << "n,g_order,k,ub_l2_key,ub_tv_spectral,ub_tv_coupling,lb_l2,lb_tv,asymptotic_flags\n";
  for (unsigned k = 1; k <= cfg.kmax; ++k) {
    BoundInputs b{cfg.n, g.order, static_cast<int>(g.irreps.size()), static_cast<double>(k)};
    f << cfg.n << ',' << g.order << ',' << k << ',';
    if (b.k >= std::max(n, n * log_n))
      f << sig12(ub_l2_key_ineq(b));
    else
      f << csv_nan();
    f << ',';
    const double c_spec = (b.k - n * log_n - 0.5 * n * std::log(g.order - 1.0)) / n;
    f << (c_spec > 0 ? sig12(ub_tv_spectral(c_spec)) : csv_nan()) << ',';
    const double c_coup = (b.k - n * log_n) / n;
    f << (c_coup > 1 ? sig12(ub_tv_coupling(c_coup, cfg.a_const)) : csv_nan()) << ',';
    f << sig12(lb_l2(b)) << ',';
    f << (cfg.n >= 3 && k >= 2 ? sig12(lb_tv(b)) : csv_nan()) << ',';
    f << bound_name(BoundKind::lb_l2) << ';' << bound_name(BoundKind::lb_tv) << '\n';
  }
  if (!f) throw std::invalid_argument("write to '" + cfg.out + "' failed");
  log << "bounds: k = 1.." << cfg.kmax << " written to " << cfg.out << "\n";
  return 0;
}

inline int run_verify(const RunConfig& cfg, const GroupSpec& g, std::ostream& log) {
  int failures = 0;
  std::string first_failed;
  auto report = [&](const std::string& name, bool ok, const std::string& detail) {
    if (ok) {
      log << "ok " << name << (detail.empty() ? "" : " (" + detail + ")") << "\n";
    } else {
      ++failures;
      if (first_failed.empty()) first_failed = name;
      log << "FAIL " << name << ": " << detail << "\n";
    }
  };

  auto space = std::make_shared<const WreathSpace>(g, cfg.n, cfg.state_cap);
  GeneratingMeasure m = build_warp_measure(space);

  {
    Rat mass = 0;
    for (const auto& a : m.atoms) mass += a.second;
    report("measure-mass", mass == 1, mass == 1 ? std::to_string(m.atoms.size()) + " atoms"
                                                : "total mass " + rat_string(mass));
  }
  {
    std::vector<Rat> by_index(space->size(), Rat(0));
    for (const auto& a : m.atoms) by_index[space->index_of(a.first)] += a.second;
    bool sym = true;
    std::string detail;
    for (const auto& a : m.atoms) {
      const Rat& direct = by_index[space->index_of(a.first)];
      const Rat& inverse = by_index[space->index_of(w_inv(g, a.first))];
      if (direct != inverse) {
        sym = false;
        detail = "an atom and its inverse carry different mass";
        break;
      }
    }
    report("measure-symmetry", sym, detail);
  }

  SpectrumTable table = build_full_spectrum(g, cfg.n);
  {
    Int total = 0;
    for (const auto& a : table.atoms) total += a.multiplicity;
    bool ok = total == space->size_exact();
    report("spectrum-completeness", ok,
           ok ? "multiplicities sum to " + total.get_str()
              : "multiplicities sum to " + total.get_str() + ", state count is " +
                    space->size_exact().get_str());
  }
  {
    int top = 0;
    bool in_range = true;
    for (const auto& a : table.atoms) {
      if (a.value == 1) top += static_cast<int>(a.multiplicity.get_ui());
      if (a.value > 1 || a.value < -1) in_range = false;
    }
    std::string detail;
    if (top != 1)
      detail = "eigenvalue 1 has multiplicity " + std::to_string(top);
    else if (!in_range)
      detail = "an eigenvalue lies outside [-1, 1]";
    report("spectrum-range", top == 1 && in_range, detail);
  }

  const unsigned k_trace = std::min(12u, cfg.kmax);
  const unsigned k_planch = std::min(20u, cfg.kmax);
  const unsigned k_proj = std::min(15u, cfg.kmax);
  const unsigned k_top = std::max({k_trace, k_planch, k_proj});
  const std::uint64_t id_index = space->index_of(space->identity());

  std::vector<Rat> id_weight(k_top + 1), tv_full(k_top + 1), l2sq(k_top + 1);
  std::vector<std::vector<Rat>> projected(k_top + 1);
  scan_walk<Rat>(m, k_top, [&](unsigned k, const Distribution<Rat>& d) {
    id_weight[k] = d.weights[id_index];
    tv_full[k] = tv_distance(d);
    l2sq[k] = l2_distance(d).squared;
    projected[k] = project_to_sn(d).weights;
  });

  {
    bool ok = true;
    std::string detail = "k = 0.." + std::to_string(k_trace);
    for (unsigned k = 0; k <= k_trace; ++k) {
      if (spectral_trace(table, k) != Rat(space->size_exact()) * id_weight[k]) {
        ok = false;
        detail = "trace identity fails at k = " + std::to_string(k);
        break;
      }
    }
    report("trace-moment", ok, detail);
  }
  {
    bool ok = true;
    std::string detail = "k = 1.." + std::to_string(k_planch);
    for (unsigned k = 1; k <= k_planch; ++k) {
      if (spectral_l2_sq(table, k) != l2sq[k]) {
        ok = false;
        detail = "squared-l2 identity fails at k = " + std::to_string(k);
        break;
      }
    }
    report("plancherel", ok, detail);
  }
  {
    bool ok = true;
    std::string detail = "k = 0.." + std::to_string(k_proj);
    GeneratingMeasure sn = build_transpose_top_measure(cfg.n, cfg.state_cap);
    std::vector<std::vector<Rat>> sn_dist(k_proj + 1);
    std::vector<Rat> sn_tv(k_proj + 1);
    scan_walk<Rat>(sn, k_proj, [&](unsigned k, const Distribution<Rat>& d) {
      sn_dist[k] = d.weights;
      sn_tv[k] = tv_distance(d);
    });
    for (unsigned k = 0; k <= k_proj && ok; ++k) {
      if (projected[k] != sn_dist[k]) {
        ok = false;
        detail = "projection differs from the factor walk at k = " + std::to_string(k);
      } else if (tv_full[k] < sn_tv[k]) {
        ok = false;
        detail = "projection increases total variation at k = " + std::to_string(k);
      }
    }
    report("projection", ok, detail);
  }

  if (failures > 0) {
    log << "verify: FAILED (" << first_failed << ")\n";
    return 2;
  }
  log << "verify: all identities hold\n";
  return 0;
}

}  // namespace detail

/// Executes one command against `log`; returns the process exit code.
/// 0 success, 1 usage or validation problem, 2 identity check failure,
/// 3 state space over capacity.
inline int run(const RunConfig& cfg, std::ostream& log) {
  try {
    GroupSpec g = parse_group_spec(cfg.group);
    switch (cfg.command) {
      case Command::spectrum:
        return detail::run_spectrum(cfg, g, log);
      case Command::exact_scan:
        return detail::run_exact_scan(cfg, g, log);
      case Command::mc_scan:
        return detail::run_mc_scan(cfg, g, log);
      case Command::bounds:
        return detail::run_bounds(cfg, g, log);
      case Command::verify:
        return detail::run_verify(cfg, g, log);
    }
    return 1;
  } catch (const capacity_error& e) {
    log << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    log << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace wreathmix
