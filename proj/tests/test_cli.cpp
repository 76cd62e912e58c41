#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli_app.hpp"
#include "hofa/json_io.hpp"
#include "test_util.hpp"

using namespace hofa;
namespace fs = std::filesystem;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path temp_dir() {
  const fs::path dir = fs::temp_directory_path() / "hofa_cli_tests";
  fs::create_directories(dir);
  return dir;
}

json report_without_timings(const std::string& stdout_text) {
  json j = json::parse(stdout_text);
  j.erase("timings");
  return j;
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("gen emits files every consumer accepts") {
  const fs::path dir = temp_dir();
  const std::string phase_file = (dir / "phase7.json").string();
  const std::string pm1_file = (dir / "pm1.json").string();

  CHECK(run_cli({"gen", "--group", "7", "--kind", "phase", "--coeffs", "0,0,1", "--out",
                 phase_file}).code == 0);
  CHECK(run_cli({"--seed", "42", "gen", "--group", "6", "--kind", "random-pm1", "--out",
                 pm1_file}).code == 0);

  CHECK(run_cli({"norm", "--group", "7", "--k", "3", "--fn", phase_file, "--method", "both"}).code == 0);
  CHECK(run_cli({"spectrum", "--group", "7", "--fn", phase_file, "--degree", "2", "--top", "5"}).code == 0);
  CHECK(run_cli({"decompose", "--group", "7", "--k", "3", "--fn", phase_file, "--delta", "0.15",
                 "--max-iter", "100"}).code == 0);
  CHECK(run_cli({"norm", "--group", "6", "--k", "2", "--fn", pm1_file}).code == 0);
  CHECK(run_cli({"decompose", "--group", "6", "--k", "2", "--fn", pm1_file, "--delta", "0.3",
                 "--mode", "truncate"}).code == 0);
}

TEST_CASE("degree-2 phase has U_3 = 1 through the CLI") {
  const fs::path dir = temp_dir();
  const std::string f = (dir / "quad7.json").string();
  REQUIRE(run_cli({"gen", "--group", "7", "--kind", "phase", "--coeffs", "0,0,1", "--out", f}).code == 0);
  const RunResult r = run_cli({"norm", "--group", "7", "--k", "3", "--fn", f, "--method", "both"});
  REQUIRE(r.code == 0);
  const json report = json::parse(r.out);
  CHECK(report.at("schema") == "hofa/1");
  CHECK(std::abs(report.at("outputs").at("U_k").get<double>() - 1.0) <= 1e-9);
  CHECK(report.at("outputs").at("agreement").get<double>() <= 1e-9);
}

TEST_CASE("seeded generation is reproducible byte for byte") {
  const fs::path dir = temp_dir();
  const std::string f1 = (dir / "r1.json").string();
  const std::string f2 = (dir / "r2.json").string();
  REQUIRE(run_cli({"--seed", "42", "gen", "--group", "11", "--kind", "random-pm1", "--out", f1}).code == 0);
  REQUIRE(run_cli({"--seed", "42", "gen", "--group", "11", "--kind", "random-pm1", "--out", f2}).code == 0);
  CHECK(read_file(f1) == read_file(f2));
  CHECK(!read_file(f1).empty());

  const std::string n1 = (dir / "n1.json").string();
  const std::string n2 = (dir / "n2.json").string();
  REQUIRE(run_cli({"--seed", "7", "gen", "--group", "7", "--kind", "noisy-phase", "--coeffs",
                   "0,1", "--noise", "0.05", "--out", n1}).code == 0);
  REQUIRE(run_cli({"--seed", "7", "gen", "--group", "7", "--kind", "noisy-phase", "--coeffs",
                   "0,1", "--noise", "0.05", "--out", n2}).code == 0);
  CHECK(read_file(n1) == read_file(n2));
  const GroupFunction noisy = function_from_json(json::parse(read_file(n1)));
  const GroupFunction clean = linear_character(noisy.group, 1);
  CHECK(sup_distance(noisy, clean) <= 0.05 + 1e-12);
}

TEST_CASE("payloads are byte-identical across thread counts") {
  const fs::path dir = temp_dir();
  const std::string f = (dir / "big.json").string();
  REQUIRE(run_cli({"--seed", "3", "gen", "--group", "17", "--kind", "random-pm1", "--out", f}).code == 0);

  const std::vector<std::vector<std::string>> invocations = {
      {"norm", "--group", "17", "--k", "3", "--fn", f, "--method", "both"},
      {"spectrum", "--group", "17", "--fn", f, "--degree", "1", "--top", "17"},
      {"cube-check", "--group", "5", "--k", "3"},
  };
  for (const auto& argv : invocations) {
    setenv("HOFA_THREADS", "1", 1);
    const RunResult one = run_cli(argv);
    setenv("HOFA_THREADS", "4", 1);
    const RunResult four = run_cli(argv);
    unsetenv("HOFA_THREADS");
    REQUIRE(one.code == 0);
    REQUIRE(four.code == 0);
    CHECK(canonical_dump(report_without_timings(one.out)) ==
          canonical_dump(report_without_timings(four.out)));
  }
}

TEST_CASE("kernel subcommands") {
  const fs::path dir = temp_dir();
  const auto z7 = FiniteAbelianGroup::make({7});
  std::map<Monomial, std::int64_t, MonomialLess> c;
  c[Monomial{2}] = 1;
  const PolynomialPhase phi = make_phase(7, 1, std::move(c));
  const GroupFunction q = phase_eval(phi, z7);
  const Kernel k = outer_kernel(q, q);
  const std::string kfile = (dir / "K.json").string();
  {
    std::ofstream out(kfile);
    out << canonical_dump(kernel_to_json(k)) << "\n";
  }

  const RunResult spec = run_cli({"kernel", "--op", "spectrum", "--in", kfile});
  REQUIRE(spec.code == 0);
  const json sj = json::parse(spec.out);
  REQUIRE(sj.at("outputs").at("eigenspaces").size() == 1);
  CHECK(std::abs(sj.at("outputs").at("eigenspaces")[0].at("eigenvalue").get<double>() - 1.0) < 1e-9);

  const RunResult mem = run_cli({"kernel", "--op", "membership", "--k", "2", "--in", kfile});
  REQUIRE(mem.code == 0);
  CHECK(json::parse(mem.out).at("outputs").at("ok").get<bool>());

  const RunResult rec = run_cli({"kernel", "--op", "recover", "--k", "2", "--in", kfile});
  REQUIRE(rec.code == 0);
  const json rj = json::parse(rec.out);
  REQUIRE(rj.at("outputs").at("phases").size() == 1);
  CHECK(rj.at("outputs").at("phases")[0].at("coeffs").at("2").get<std::int64_t>() == 1);
}

TEST_CASE("csv spectrum output") {
  const fs::path dir = temp_dir();
  const std::string f = (dir / "chi.json").string();
  const std::string csv = (dir / "spec.csv").string();
  REQUIRE(run_cli({"gen", "--group", "5", "--kind", "phase", "--coeffs", "0,1", "--out", f}).code == 0);
  REQUIRE(run_cli({"spectrum", "--group", "5", "--fn", f, "--degree", "1", "--csv", csv}).code == 0);

  std::ifstream in(csv);
  std::string header;
  std::getline(in, header);
  CHECK(header == "xi_index,re,im,magnitude");
  int rows = 0;
  double top_mag = 0.0;
  std::int64_t top_xi = -1;
  std::string line;
  while (std::getline(in, line)) {
    ++rows;
    std::stringstream ss(line);
    std::string xi_s, re_s, im_s, mag_s;
    std::getline(ss, xi_s, ',');
    std::getline(ss, re_s, ',');
    std::getline(ss, im_s, ',');
    std::getline(ss, mag_s, ',');
    if (std::stod(mag_s) > top_mag) {
      top_mag = std::stod(mag_s);
      top_xi = std::stoll(xi_s);
    }
  }
  CHECK(rows == 5);
  CHECK(top_xi == 1);
  CHECK(top_mag == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("validation failures exit with code 2") {
  const fs::path dir = temp_dir();

  CHECK(run_cli({"frobnicate"}).code == 2);
  CHECK(run_cli({"norm", "--k", "2"}).code == 2);  // missing --fn

  const std::string bad = (dir / "bad.json").string();
  {
    std::ofstream out(bad);
    out << "{not json";
  }
  CHECK(run_cli({"norm", "--group", "5", "--k", "2", "--fn", bad}).code == 2);

  const std::string quad = (dir / "quad5.json").string();
  REQUIRE(run_cli({"gen", "--group", "5", "--kind", "phase", "--coeffs", "0,0,1", "--out", quad}).code == 0);

  const RunResult cap = run_cli({"norm", "--group", "5", "--k", "9", "--fn", quad, "--method", "definition"});
  CHECK(cap.code == 2);
  CHECK(cap.err.find("5^18") != std::string::npos);

  CHECK(run_cli({"norm", "--group", "7", "--k", "2", "--fn", quad}).code == 2);  // group mismatch
  CHECK(run_cli({"gen", "--group", "6", "--kind", "phase", "--coeffs", "1", "--out",
                 (dir / "x.json").string()}).code == 2);  // not an odd prime group
  CHECK(run_cli({"kernel", "--op", "nonsense", "--in", quad}).code == 2);
}

TEST_CASE("report schema shape") {
  const fs::path dir = temp_dir();
  const std::string f = (dir / "s.json").string();
  REQUIRE(run_cli({"--seed", "9", "gen", "--group", "5", "--kind", "indicator", "--set", "0,1",
                   "--out", f}).code == 0);
  const RunResult r = run_cli({"--seed", "9", "norm", "--group", "5", "--k", "2", "--fn", f});
  REQUIRE(r.code == 0);
  const json report = json::parse(r.out);
  for (const char* key : {"schema", "command", "inputs", "outputs", "seed", "timings"}) {
    CHECK(report.contains(key));
  }
  CHECK(report.at("schema").get<std::string>() == "hofa/1");
  CHECK(report.at("command").get<std::string>() == "norm");
  CHECK(report.at("seed").get<std::uint64_t>() == 9);

  // indicator of {0,1} in Z_5 has values (1,1,0,0,0)
  const GroupFunction ind = function_from_json(json::parse(read_file(f)));
  for (std::int64_t i = 0; i < 5; ++i)
    CHECK(ind[i] == cplx{i < 2 ? 1.0 : 0.0, 0.0});
}
