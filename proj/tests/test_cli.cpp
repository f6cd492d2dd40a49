#include "hartree/cli.hpp"
#include "hartree/errors.hpp"
#include "support.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace hartree;
namespace fs = std::filesystem;

namespace {

const fs::path source_dir = HARTREE_SOURCE_DIR;

int run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "hartree");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  return cli::run(static_cast<int>(argv.size()), argv.data());
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("shipped configurations load and validate") {
  for (const char* name : {"case1.json", "case2.json", "case3.json"}) {
    CAPTURE(name);
    const auto c = cli::load_run_config(source_dir / "configs" / name);
    CHECK_NOTHROW(cli::validate(c));
    CHECK(c.ks == std::vector<int>{6});
    CHECK(c.ring_model == RingSumModel::Exact);
  }
}

TEST_CASE("run documents round trip") {
  const auto dir = test::scratch_dir("cli_roundtrip");
  cli::RunConfig c;
  c.params = test::case1_params();
  c.ks = {4, 8};
  c.variant = Variant::AAP;
  c.r = 12.5;
  c.grid = {30.0, 96};
  write_json_file(cli::to_json(c), dir / "run.json");
  const auto back = cli::load_run_config(dir / "run.json");
  CHECK(back.ks == c.ks);
  CHECK(back.variant == Variant::AAP);
  CHECK(back.r.value() == 12.5);
  CHECK_FALSE(back.rho.has_value());
  CHECK(back.grid.n_per_axis == 96);
  CHECK(back.params.beta == c.params.beta);
  CHECK(back.params.potentials[2].m == c.params.potentials[2].m);
}

TEST_CASE("invalid run documents are rejected before any computation") {
  const auto dir = test::scratch_dir("cli_invalid");
  auto kind = [&](const std::string& text) {
    std::ofstream(dir / "bad.json") << text;
    try {
      cli::validate(cli::load_run_config(dir / "bad.json"));
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Numeric;
  };
  CHECK(kind("{\"k\": [1]}") == ErrorKind::Validation);
  CHECK(kind("{\"variant\": \"PAP\"}") == ErrorKind::Validation);
  CHECK(kind("{\"ring_sum_model\": \"fast\"}") == ErrorKind::Validation);
  CHECK(kind("{\"params\": {\"mu\": [1, 1, -1]}}") == ErrorKind::Validation);
  CHECK(kind("{\"radial\": {\"n_points\": 10}}") == ErrorKind::Validation);
  CHECK(kind("{\"k\": [2,") == ErrorKind::Validation);
  CHECK(kind("{\"k\": \"six\"}") == ErrorKind::Validation);
}

TEST_CASE("exit codes") {
  const auto dir = test::scratch_dir("cli_exit");
  const std::string out = (dir / "out").string(), cache = (dir / "cache").string();
  CHECK(run_cli({"landscape", "--out", out, "--cache", cache}) == 0);  // no k: nothing to do
  CHECK(run_cli({"report", "--k", "6", "--variant", "XYZ", "--out", out, "--cache", cache}) == 2);
  CHECK(run_cli({"ground-state", "--r-max", "5", "--n-radial", "500", "--out", out, "--cache", cache}) == 3);
  CHECK(run_cli({"construct", "--k", "9", "--out", out, "--cache", cache}) == 2);
  CHECK(run_cli({"ring-kernel", "--k", "2,8", "--x", "1", "--y", "2", "--out", out}) == 0);
  const std::string csv = slurp(dir / "out" / "ring_kernel.csv");
  CHECK(csv.rfind("k,x,y,g,", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
  CHECK(fs::exists(dir / "out" / "run_info.json"));
}

TEST_CASE("ground-state cache falls back on corruption") {
  const auto dir = test::scratch_dir("cli_cache");
  cli::RunConfig c;
  c.cache_dir = dir;
  std::ostringstream log;
  const auto w = cli::cached_ground_state(c, log);
  const fs::path file = dir / "w_rmax30_n3000.csv";
  REQUIRE(fs::exists(file));
  CHECK(log.str().empty());

  const auto again = cli::cached_ground_state(c, log);
  CHECK(again.values == w.values);
  CHECK(again.tail_rate == w.tail_rate);
  CHECK(log.str().empty());

  std::string text = slurp(file);
  const auto pos = text.find('\n', text.size() / 2) - 1;
  text[pos] = text[pos] == '3' ? '4' : '3';
  std::ofstream(file) << text;
  const auto fixed = cli::cached_ground_state(c, log);
  CHECK(log.str().find("warning") != std::string::npos);
  CHECK(fixed.values == w.values);
}

TEST_CASE("report is deterministic and complete") {
  auto c = cli::load_run_config(source_dir / "configs" / "case1.json");
  const auto dir = test::scratch_dir("cli_report");
  c.cache_dir = dir / "cache";
  std::ostringstream out, log;
  c.out_dir = dir / "a";
  CHECK(cli::cmd_report(c, out, log) == 0);
  c.out_dir = dir / "b";
  CHECK(cli::cmd_report(c, out, log) == 0);
  const std::string a = slurp(dir / "a" / "report_k6_PPP.json"), b = slurp(dir / "b" / "report_k6_PPP.json");
  CHECK(a == b);
  const json r = json::parse(a);
  CHECK(r["status"]["all"].get<bool>());
  CHECK(r["verdict"]["theorem_case"] == "case1");
  CHECK(r["probe"]["dominated"] == 8);
  CHECK(r["constants"].contains("provenance"));
  CHECK(r["peak_radii"]["in_window"].get<bool>());
}

TEST_CASE("report records section failures") {
  auto c = cli::load_run_config(source_dir / "configs" / "case1.json");
  const auto dir = test::scratch_dir("cli_report_fail");
  c.cache_dir = dir / "cache";
  c.out_dir = dir / "out";
  c.ks = {7};
  c.variant = Variant::AAA;
  std::ostringstream out, log;
  CHECK(cli::cmd_report(c, out, log) == 1);
  const json r = read_json_file(dir / "out" / "report_k7_AAA.json");
  CHECK_FALSE(r["status"]["all"].get<bool>());
  CHECK(r["probe"]["status"] == "error");
  CHECK(r["constants"].is_object());
}
