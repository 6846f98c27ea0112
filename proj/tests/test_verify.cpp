#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "burnside/cli.hpp"
#include "burnside/verify.hpp"

using namespace burnside;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name) : path("/tmp/burnside_test_" + name) {}
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("all checks pass at (3,3)") {
  const GroupParams params(3, 3);
  CHECK(verify_subgroup_classification(params).pass);
  CHECK(verify_mult_table(params).pass);
  CHECK(verify_delta_powers(params, 4).pass);
  CHECK(verify_qn(params, 4).pass);

  const VerificationReport report = run_verification(params, 4);
  CHECK(report.all_pass());
  CHECK(report.checks.size() == 4);
  CHECK(report_exit_code(report) == 0);
  for (std::size_t i = 1; i < report.checks.size(); ++i)
    CHECK(report.checks[i - 1].name < report.checks[i].name);
}

TEST_CASE("a corrupted closed table is detected and named") {
  const GroupParams params(3, 3);
  const CheckResult result = verify_mult_table(params, [](const GroupParams& p, const BasisLabel& x,
                                                          const BasisLabel& y) {
    LabelCombination c = closed_mul(p, x, y);
    if (x == BasisLabel::beta(p, 2, 1) && y == BasisLabel::beta(p, 1, 0))
      c.terms.front().first += 1;  // flip one coefficient
    return c;
  });
  CHECK_FALSE(result.pass);
  CHECK(result.detail.find("beta_{2,1}") != std::string::npos);
  CHECK(result.detail.find("beta_{1,0}") != std::string::npos);

  VerificationReport report{params, 4, {result}, {}};
  CHECK(report_exit_code(report) == 1);
}

TEST_CASE("verification rejects m = 2") {
  CHECK_THROWS_AS(verify_subgroup_classification(GroupParams(3, 2)), UnsupportedParamsError);
}

TEST_CASE("cli: qn prints the quotient and exits 0") {
  std::ostringstream out, err;
  const int code = run_cli({"qn", "--p", "3", "--m", "3", "--n", "2"}, out, err);
  CHECK(code == 0);
  CHECK(out.str().find("C_3^11") != std::string::npos);
}

TEST_CASE("cli: invalid parameters exit 2") {
  std::ostringstream out, err;
  CHECK(run_cli({"qn", "--p", "4", "--m", "3"}, out, err) == 2);
  CHECK(err.str().find("odd prime") != std::string::npos);

  err.str("");
  CHECK(run_cli({"verify", "--p", "3", "--m", "2"}, out, err) == 2);
  CHECK(run_cli({"qn", "--p", "3"}, out, err) == 2);          // missing --m
  CHECK(run_cli({"qn", "--p", "3", "--m", "3", "--n", "99"}, out, err) == 2);
  CHECK(run_cli({"blah", "--p", "3", "--m", "3"}, out, err) == 2);
  CHECK(run_cli({"qn", "--p", "13", "--m", "3"}, out, err) == 2);  // order cap
}

TEST_CASE("cli: m = 2 runs generically with a warning") {
  std::ostringstream out, err;
  const int code = run_cli({"qn", "--p", "3", "--m", "2", "--n", "1"}, out, err);
  CHECK(code == 0);
  CHECK(err.str().find("warning") != std::string::npos);
  CHECK(out.str().find("Q_1(H(3,2)) = ") != std::string::npos);
}

TEST_CASE("cli: verify exits 0 and writes a deterministic JSON report") {
  TempFile a("report_a.json"), b("report_b.json");
  std::ostringstream out1, out2, err;
  CHECK(run_cli({"verify", "--p", "3", "--m", "3", "--max-n", "3", "--json", a.path}, out1, err) == 0);
  CHECK(run_cli({"verify", "--p", "3", "--m", "3", "--max-n", "3", "--json", b.path}, out2, err) == 0);

  auto ja = nlohmann::ordered_json::parse(slurp(a.path));
  auto jb = nlohmann::ordered_json::parse(slurp(b.path));
  CHECK(ja.contains("wall_time_ms"));
  ja.erase("wall_time_ms");
  jb.erase("wall_time_ms");
  CHECK(ja.dump() == jb.dump());

  CHECK(ja["params"]["p"] == 3);
  CHECK(ja["params"]["m"] == 3);
  CHECK(ja["checks"].size() == 4);
  for (const auto& check : ja["checks"]) CHECK(check["status"] == "pass");
  CHECK(ja["results"]["status"] == "pass");
}

TEST_CASE("cli: qn JSON reports are byte-identical and big ints are strings") {
  TempFile a("qn_a.json"), b("qn_b.json");
  std::ostringstream out, err;
  CHECK(run_cli({"qn", "--p", "3", "--m", "3", "--n", "2", "--json", a.path}, out, err) == 0);
  CHECK(run_cli({"qn", "--p", "3", "--m", "3", "--n", "2", "--json", b.path}, out, err) == 0);
  CHECK(slurp(a.path) == slurp(b.path));

  const auto j = nlohmann::ordered_json::parse(slurp(a.path));
  CHECK(j["results"]["invariants"]["free_rank"] == 0);
  CHECK(j["results"]["invariants"]["divisors"].size() == 11);
  for (const auto& d : j["results"]["invariants"]["divisors"]) CHECK(d == "3");
}

TEST_CASE("cli: delta emits HNF rows as decimal strings") {
  TempFile f("delta.json");
  std::ostringstream out, err;
  CHECK(run_cli({"delta", "--p", "3", "--m", "3", "--n", "2", "--json", f.path}, out, err) == 0);
  const auto j = nlohmann::ordered_json::parse(slurp(f.path));
  CHECK(j["results"]["n"] == 2);
  CHECK(j["results"]["basis"].size() == 11);
  CHECK(j["results"]["basis"][0].size() == 11);
  for (const auto& row : j["results"]["basis"])
    for (const auto& entry : row) CHECK(entry.is_string());
}

TEST_CASE("cli: marks and subgroups subcommands run") {
  std::ostringstream out, err;
  CHECK(run_cli({"marks", "--p", "3", "--m", "3"}, out, err) == 0);
  CHECK(out.str().find("table of marks") != std::string::npos);
  out.str("");
  CHECK(run_cli({"subgroups", "--p", "5", "--m", "3"}, out, err) == 0);
  CHECK(out.str().find("20 subgroups in 16 conjugacy classes") != std::string::npos);
}
