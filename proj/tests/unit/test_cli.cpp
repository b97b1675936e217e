#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "nlsdp/cli.hpp"

namespace fs = std::filesystem;
using nlsdp::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("nlsdp_cli_test_" + name);
  fs::remove_all(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> lines(const fs::path& p) {
  std::ifstream in(p);
  std::vector<std::string> out;
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

const std::vector<std::string> kFigure{"--p", "3", "--lambda1", "-1", "--lambda2", "-1", "--Z", "2", "--omega", "-0.25"};

std::vector<std::string> cmd(std::string sub, const fs::path& out, std::vector<std::string> extra = {}) {
  std::vector<std::string> a{std::move(sub)};
  a.insert(a.end(), kFigure.begin(), kFigure.end());
  a.insert(a.end(), extra.begin(), extra.end());
  a.push_back("--out");
  a.push_back(out.string());
  return a;
}

// Comment preamble naming the columns, then the header row.
void check_csv_header(const fs::path& p, const std::string& header) {
  const auto ls = lines(p);
  REQUIRE(ls.size() > 2);
  CHECK(ls[0].rfind("# ", 0) == 0);
  bool has_columns = false;
  std::size_t i = 0;
  for (; i < ls.size() && ls[i].rfind("#", 0) == 0; ++i) {
    if (ls[i].rfind("# columns:", 0) == 0) has_columns = true;
  }
  CHECK(has_columns);
  REQUIRE(i < ls.size());
  CHECK(ls[i] == header);
}

}  // namespace

TEST_CASE("regime verdicts and exit codes") {
  const fs::path d = scratch("regime");
  Result r = call(cmd("regime", d));
  CHECK(r.code == 0);
  CHECK(r.out.rfind("StandingWaveExists", 0) == 0);
  CHECK(fs::exists(d / "regime.json"));
  CHECK(fs::exists(d / "manifest.json"));

  r = call({"regime", "--p", "3", "--lambda1", "-1", "--lambda2", "-1", "--Z", "1", "--omega", "0.5", "--out", d.string()});
  CHECK(r.code == 1);
  CHECK(r.out.rfind("EmptyOmegaPositive", 0) == 0);

  r = call({"regime", "--bogus", "1"});
  CHECK(r.code == 64);
  CHECK_FALSE(r.err.empty());
  CHECK(call({}).code == 64);
  CHECK(call({"profile", "--p", "3", "--omega", "-0.25", "--h", "-1"}).code == 64);

  // p <= 1 is a validation error.
  r = call({"regime", "--p", "1", "--out", d.string()});
  CHECK(r.code == 1);

  // Asking for a profile outside the regime.
  r = call({"profile", "--omega", "0.5", "--out", d.string()});
  CHECK(r.code == 1);
  CHECK(r.err.find("regime") != std::string::npos);
}

TEST_CASE("profile output") {
  const fs::path d = scratch("profile");
  const Result r = call(cmd("profile", d, {"--L", "5", "--h", "0.01"}));
  REQUIRE(r.code == 0);
  CHECK(fs::exists(d / "profile.csv"));
  CHECK(fs::exists(d / "manifest.json"));
  check_csv_header(d / "profile.csv", "x,phi,dphi");
  const auto ls = lines(d / "profile.csv");
  CHECK(ls[1].find("p=3 ") != std::string::npos);
  CHECK(ls[1].find("lambda1=-1") != std::string::npos);
  // The row at x = 0 carries the peak.
  bool found = false;
  for (const auto& l : ls) {
    if (l.rfind("0,", 0) == 0) {
      CHECK(l.find("0.962834868045836") != std::string::npos);
      found = true;
    }
  }
  CHECK(found);

  const auto m = nlohmann::json::parse(slurp(d / "manifest.json"));
  CHECK(m["subcommand"] == "profile");
  CHECK(m["params"]["p"] == 3.0);
  CHECK(m["omega"] == -0.25);
  CHECK(m.contains("version"));
  CHECK(m["outputs"].size() == 2);
}

TEST_CASE("verify and phaseplane") {
  const fs::path d = scratch("verify");
  REQUIRE(call(cmd("verify", d)).code == 0);
  const auto v = nlohmann::json::parse(slurp(d / "verify.json"));
  CHECK(v["max_interior_residual"].get<double>() <= 1e-6);
  CHECK(v["jump_residual"].get<double>() <= 1e-11);

  REQUIRE(call(cmd("phaseplane", d, {"--step", "0.01", "--x-tail", "10"})).code == 0);
  check_csv_header(d / "phaseplane.csv", "phi,dphi,branch");
  const auto ls = lines(d / "phaseplane.csv");
  int jumps = 0;
  for (const auto& l : ls) jumps += l.find(",jump") != std::string::npos ? 1 : 0;
  CHECK(jumps == 2);
}

TEST_CASE("evolve, minimize and stability outputs") {
  const fs::path d = scratch("runs");
  REQUIRE(call(cmd("evolve", d, {"--L", "20", "--h", "0.05", "--dt", "0.01", "--T", "0.5", "--record-every", "5",
                                 "--snapshot-every", "10", "--perturb", "bump:0.01"})).code == 0);
  check_csv_header(d / "diagnostics.csv", "t,charge,energy,action,orbital_dist");
  check_csv_header(d / "snapshots.csv", "t,x,re_u,im_u");
  CHECK(lines(d / "diagnostics.csv").back().rfind("0.5,", 0) == 0);

  CHECK(call(cmd("evolve", d, {"--perturb", "wobble:1"})).code == 64);

  REQUIRE(call(cmd("minimize", d, {"--L", "20", "--h", "0.05", "--restarts", "1"})).code == 0);
  check_csv_header(d / "descent.csv", "iter,value,grad_norm");
  const auto f = nlohmann::json::parse(slurp(d / "flow.json"));
  CHECK(f["converged"] == true);
  CHECK(f["value"].get<double>() < 0.0);

  REQUIRE(call(cmd("stability", d, {"--L", "20", "--h", "0.05", "--dt", "0.01", "--T", "0.5", "--eps", "0.001,0.01",
                                    "--kinds", "bump,noise"})).code == 0);
  check_csv_header(d / "stability_curve.csv", "eps,kind,max_orbital_dist,T,seed");
  CHECK(lines(d / "stability_curve.csv").size() >= 4);
  const std::string all = slurp(d / "stability_curve.csv");
  CHECK(all.find("finite horizon") != std::string::npos);
}

TEST_CASE("determinism and replay") {
  const fs::path a = scratch("det_a"), b = scratch("det_b"), c = scratch("det_c");
  const std::vector<std::string> extra{"--L", "20", "--h", "0.05", "--dt", "0.01", "--T", "0.3", "--perturb", "noise:0.01"};
  auto args = cmd("evolve", a, extra);
  args.push_back("--seed");
  args.push_back("5");
  REQUIRE(call(args).code == 0);
  args = cmd("evolve", b, extra);
  args.push_back("--seed");
  args.push_back("5");
  REQUIRE(call(args).code == 0);
  CHECK(slurp(a / "diagnostics.csv") == slurp(b / "diagnostics.csv"));
  CHECK(slurp(a / "manifest.json") == slurp(b / "manifest.json"));

  REQUIRE(call({"replay", (a / "manifest.json").string(), "--out", c.string()}).code == 0);
  CHECK(slurp(a / "diagnostics.csv") == slurp(c / "diagnostics.csv"));
  CHECK(slurp(a / "manifest.json") == slurp(c / "manifest.json"));

  const auto m = nlohmann::json::parse(slurp(a / "manifest.json"));
  CHECK(m["seed"] == 5);
  for (const auto& s : m["args"]) CHECK(s.get<std::string>() != "--out");
}

TEST_CASE("output directory from the environment") {
  const fs::path d = scratch("env");
  ::setenv("NLSDP_OUT", d.string().c_str(), 1);
  const Result r = call({"regime"});
  ::unsetenv("NLSDP_OUT");
  CHECK(r.code == 0);
  CHECK(fs::exists(d / "regime.json"));
}
