#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "wreathmix/cli.hpp"

using namespace wreathmix;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  REQUIRE(f.good());
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) out.push_back(line);
  return out;
}

std::vector<std::string> fields_of(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  return out;
}

}  // namespace

TEST_CASE("group specifications parse or are rejected") {
  REQUIRE(parse_group_spec("cyclic:4").order == 4);
  REQUIRE(parse_group_spec("symmetric:3").order == 6);

  const std::string path = "cli_z2.json";
  {
    std::ofstream f(path);
    f << R"({"name":"z2","order":2,"identity":0,
             "mul":[[0,1],[1,0]],"irrep_dims":[1,1],"trivial_index":0})";
  }
  REQUIRE(parse_group_spec("cayley:" + path).order == 2);
  std::remove(path.c_str());

  REQUIRE_THROWS_AS(parse_group_spec("cyclic"), std::invalid_argument);
  REQUIRE_THROWS_AS(parse_group_spec("cyclic:x"), std::invalid_argument);
  REQUIRE_THROWS_AS(parse_group_spec("cyclic:3x"), std::invalid_argument);
  REQUIRE_THROWS_AS(parse_group_spec("hexagonal:4"), std::invalid_argument);
}

TEST_CASE("the exact scan writes frozen rows in both numeric modes") {
  RunConfig cfg;
  cfg.command = Command::exact_scan;
  cfg.group = "cyclic:2";
  cfg.n = 2;
  cfg.kmax = 3;
  cfg.out = "cli_scan.csv";
  cfg.exact_output = true;

  std::ostringstream log;
  REQUIRE(run(cfg, log) == 0);
  auto rows = lines_of(slurp(cfg.out));
  REQUIRE(rows.size() == 5);
  REQUIRE(rows[0] == "k,tv,l2sq_exact,l2sq_spectral,half_l2_bound");
  REQUIRE(rows[1] == "0,7/8,7/1,7/1,1.32287565553");
  REQUIRE(rows[2] == "1,1/2,1/1,1/1,0.5");
  auto k2 = fields_of(rows[3]);
  REQUIRE(k2[2] == "1/4");
  REQUIRE(k2[3] == "1/4");

  SECTION("decimal rendering of the same rows") {
    cfg.exact_output = false;
    REQUIRE(run(cfg, log) == 0);
    auto dec = lines_of(slurp(cfg.out));
    REQUIRE(dec[1] == "0,0.875,7,7,1.32287565553");
    REQUIRE(dec[2] == "1,0.5,1,1,0.5");
  }
  SECTION("floating mode agrees with the exact columns to print precision") {
    cfg.exact_output = false;
    cfg.mode = NumMode::floating;
    REQUIRE(run(cfg, log) == 0);
    auto flt = lines_of(slurp(cfg.out));
    REQUIRE(flt[0] == "k,tv,l2sq_exact,l2sq_spectral,half_l2_bound");
    REQUIRE(flt[1] == "0,0.875,7,7,1.32287565553");
    REQUIRE(flt[2] == "1,0.5,1,1,0.5");
  }
  std::remove(cfg.out.c_str());
}

TEST_CASE("the identity battery reports every check by name") {
  RunConfig cfg;
  cfg.command = Command::verify;
  cfg.group = "cyclic:2";
  cfg.n = 2;
  cfg.kmax = 12;

  std::ostringstream log;
  REQUIRE(run(cfg, log) == 0);
  const std::string text = log.str();
  for (const char* name : {"measure-mass", "measure-symmetry", "spectrum-completeness",
                           "spectrum-range", "trace-moment", "plancherel", "projection"}) {
    REQUIRE(text.find(std::string("ok ") + name) != std::string::npos);
  }
  REQUIRE(text.find("verify: all identities hold") != std::string::npos);
  REQUIRE(text.find("FAIL") == std::string::npos);
}

TEST_CASE("the spectrum command writes the frozen table") {
  RunConfig cfg;
  cfg.command = Command::spectrum;
  cfg.group = "cyclic:2";
  cfg.n = 2;
  cfg.out = "cli_spec.txt";

  std::ostringstream log;
  REQUIRE(run(cfg, log) == 0);
  REQUIRE(slurp(cfg.out) ==
          "1/1, 1, [(2)|()], (0,1,2)\n"
          "1/2, 2, [(1)|(1)], (0,1,1)\n"
          "1/2, 1, [()|(2)], (1,1,2)\n"
          "0/1, 2, [(1)|(1)], (1,1,1)\n"
          "0/1, 1, [(1,1)|()], (0,2,1)\n"
          "-1/2, 1, [()|(1,1)], (1,2,1)\n");
  REQUIRE(log.str().find("total multiplicity 8") != std::string::npos);
  std::remove(cfg.out.c_str());
}

TEST_CASE("simulation outputs are reproducible by seed") {
  RunConfig cfg;
  cfg.command = Command::mc_scan;
  cfg.group = "cyclic:2";
  cfg.n = 5;
  cfg.kmax = 3;
  cfg.trials = 2000;
  cfg.seed = 9;
  cfg.out = "cli_mc_a";

  std::ostringstream log;
  REQUIRE(run(cfg, log) == 0);
  const std::string moments_a = slurp("cli_mc_a.moments.csv");
  const std::string coupon_a = slurp("cli_mc_a.coupon.csv");

  cfg.out = "cli_mc_b";
  REQUIRE(run(cfg, log) == 0);
  REQUIRE(slurp("cli_mc_b.moments.csv") == moments_a);
  REQUIRE(slurp("cli_mc_b.coupon.csv") == coupon_a);

  cfg.out = "cli_mc_c";
  cfg.seed = 10;
  REQUIRE(run(cfg, log) == 0);
  REQUIRE(slurp("cli_mc_c.moments.csv") != moments_a);

  auto mrows = lines_of(moments_a);
  REQUIRE(mrows[0] == "k,mean_f,second_moment_f,stderr");
  REQUIRE(mrows.size() == 5);
  REQUIRE(fields_of(mrows[1])[0] == "0");
  REQUIRE(fields_of(mrows[1])[1] == "5");
  REQUIRE(fields_of(mrows[1])[3] == "0");

  auto crows = lines_of(coupon_a);
  REQUIRE(crows[0] == "C,threshold,p_hat,stderr,bound");
  REQUIRE(crows.size() == 4);
  // thresholds ceil(5 log 5 + C*5) for C = 1, 2, 3
  REQUIRE(fields_of(crows[1])[1] == "14");
  REQUIRE(fields_of(crows[2])[1] == "19");
  REQUIRE(fields_of(crows[3])[1] == "24");
  REQUIRE(fields_of(crows[1])[4] == sig12((std::exp(1.0) + 1.0) * std::exp(-0.5)));

  for (const char* p : {"cli_mc_a.moments.csv", "cli_mc_a.coupon.csv", "cli_mc_b.moments.csv",
                        "cli_mc_b.coupon.csv", "cli_mc_c.moments.csv", "cli_mc_c.coupon.csv"})
    std::remove(p);
}

TEST_CASE("the bounds table marks steps outside each bound's reach") {
  RunConfig cfg;
  cfg.command = Command::bounds;
  cfg.group = "cyclic:3";
  cfg.n = 5;
  cfg.kmax = 15;
  cfg.out = "cli_bounds.csv";

  std::ostringstream log;
  REQUIRE(run(cfg, log) == 0);
  auto rows = lines_of(slurp(cfg.out));
  REQUIRE(rows.size() == 16);
  REQUIRE(rows[0] == "n,g_order,k,ub_l2_key,ub_tv_spectral,ub_tv_coupling,lb_l2,lb_tv,asymptotic_flags");

  for (unsigned k = 1; k <= 15; ++k) {
    auto f = fields_of(rows[k]);
    REQUIRE(f.size() == 9);
    REQUIRE(f[0] == "5");
    REQUIRE(f[1] == "3");
    REQUIRE(f[2] == std::to_string(k));
    // admissibility: k >= 5 log 5 ~ 8.05 for the l2 majorant, shifted by
    // (5/2) log 2 for the spectral form, by 5 more for the coupling form
    REQUIRE((f[3] == "nan") == (k <= 8));
    REQUIRE((f[4] == "nan") == (k <= 9));
    REQUIRE((f[5] == "nan") == (k <= 13));
    REQUIRE(f[6] != "nan");
    REQUIRE((f[7] == "nan") == (k == 1));
    REQUIRE(f[8] == "lb_l2;lb_tv");
  }

  const double n = 5;
  auto r14 = fields_of(rows[14]);
  REQUIRE(r14[5] == sig12(ub_tv_coupling((14.0 - n * std::log(n)) / n, 2.0)));
  auto r9 = fields_of(rows[9]);
  REQUIRE(r9[3] == sig12(ub_l2_key_ineq({5, 3, 3, 9.0, 0})));
  REQUIRE(r9[6] == sig12(lb_l2({5, 3, 3, 9.0, 0})));
  std::remove(cfg.out.c_str());

  SECTION("a one-element color group is rejected up front") {
    cfg.group = "cyclic:1";
    std::ostringstream err;
    REQUIRE(run(cfg, err) == 1);
    REQUIRE(err.str().find("error:") != std::string::npos);
  }
}

TEST_CASE("process exit codes separate failure classes") {
  std::ostringstream log;

  RunConfig too_big;
  too_big.command = Command::verify;
  too_big.group = "cyclic:99";
  too_big.n = 5;
  REQUIRE(run(too_big, log) == 3);

  RunConfig no_out;
  no_out.command = Command::exact_scan;
  no_out.group = "cyclic:2";
  no_out.n = 2;
  no_out.out = "";
  REQUIRE(run(no_out, log) == 1);

  RunConfig bad_group;
  bad_group.command = Command::verify;
  bad_group.group = "frieze:7";
  REQUIRE(run(bad_group, log) == 1);

  RunConfig bad_path;
  bad_path.command = Command::spectrum;
  bad_path.group = "cyclic:2";
  bad_path.n = 2;
  bad_path.out = "no_such_dir_xyz/out.txt";
  REQUIRE(run(bad_path, log) == 1);
}
