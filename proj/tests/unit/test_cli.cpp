#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ksand_cli/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = ksand::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("count example sweeps agree") {
  auto r = run({"count", "--primes", "3..101", "--moduli", "1/1,2/1,3/1", "--format", "csv"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string header;
  std::getline(lines, header);
  CHECK(header == "p,a,b,c,closed_form,character_sum,agree,t_naive_ns,t_conv_ns\r");
  int rows = 0;
  for (std::string line; std::getline(lines, line);) {
    ++rows;
    CHECK(line.find(",true,0,0") != std::string::npos);
  }
  CHECK(rows == 25);
}

TEST_CASE("count skips primes dividing a denominator") {
  auto r = run({"count", "--primes", "3,5,7", "--moduli", "1/3,2,5"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["skipped_primes"] == nlohmann::json::array({3}));
  CHECK(j["rows"].size() == 2);
}

TEST_CASE("identical seeds give byte-identical output") {
  std::vector<std::string> args{"count", "--primes", "3..31", "--random", "4", "--seed", "9"};
  auto a = run(args), b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  auto t = args;
  t.insert(t.end(), {"--threads", "4"});
  CHECK(run(t).out == a.out);
  std::vector<std::string> v{"verify-maps", "--trials", "5", "--seed", "3"};
  auto va = run(v), vb = run(v);
  CHECK(va.code == 0);
  CHECK(va.out == vb.out);
  auto other = run({"count", "--primes", "3..31", "--random", "4", "--seed", "10"});
  CHECK(other.out != a.out);
}

TEST_CASE("output file") {
  auto path = std::filesystem::temp_directory_path() / "ksand_cli_test.json";
  std::filesystem::remove(path);
  auto r = run({"periods", "--output", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  auto j = nlohmann::json::parse(in);
  CHECK(j["failed"] == 0);
  CHECK(j["rows"].size() == 12);
  std::filesystem::remove(path);
}

TEST_CASE("fibers example and census diff") {
  auto r = run({"fibers", "--id", "J1", "--l1", "2/1", "--l2", "3/1"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["summary"]["census"] == nlohmann::json({{"I8", 2}, {"I1", 8}}));
  CHECK(j["diff"]["missing"].empty());
  auto printed = run({"fibers", "--id", "Y_PRIME_RANK18_PRINTED", "--params", "17/5,-23/11"});
  CHECK(printed.code == 0);  // no embedded census for the typeset variant
  auto special = run({"fibers", "--id", "J1", "--params", "2,2"});
  CHECK(special.code == 1);
  CHECK(run({"fibers", "--id", "J1", "--l1", "2"}).code == 2);
  CHECK(run({"fibers", "--id", "LEGENDRE17", "--params", "1,2,3"}).code == 2);
}

TEST_CASE("isogeny example") {
  auto r = run({"isogeny", "--rosenhain", "2/1,3/1,7/1"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["A"] == "6");
  CHECK(j["B"] == "8");
  CHECK(j["C"] == "5");
  CHECK(j["D"] == "19");
  CHECK(j["D_squared"] == "361");
  CHECK(j["D_identity"] == true);
  CHECK(j["nu_reciprocity"] == true);
  auto r6 = nlohmann::json::parse(run({"isogeny", "--rosenhain", "2,3,6"}).out);
  CHECK(r6["nu"] == "10");
  CHECK(r6["L_prime"] == nlohmann::json::array({"26/3", "7", "2"}));
  CHECK(run({"isogeny", "--rosenhain", "2,2,6"}).code == 2);
}

TEST_CASE("relations report the failed relations with exit 1") {
  auto r = run({"relations", "--rosenhain", "2,3,6"});
  CHECK(r.code == 1);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["criterion_met"] == false);
  CHECK(j["consistent_designation"] == "none");
  CHECK(j["observed_s_equals_y2_minus_1"] == true);
}

TEST_CASE("jacobian and periods") {
  auto r = run({"jacobian", "--primes", "7", "--coeffs", "0,-1,0,0,0,1", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out.find("7,0 6 0 0 0 1,8,78,64,true,true") != std::string::npos);
  CHECK(run({"jacobian", "--primes", "7", "--coeffs", "0,0,1,0,0,1"}).code == 2);
  CHECK(run({"jacobian", "--primes", "5,7", "--random", "3"}).code == 2);
  CHECK(run({"jacobian", "--primes", "5,7", "--random", "3", "--seed", "1"}).code == 0);
  CHECK(run({"periods", "--lambda", "2,5/2", "--format", "csv"}).code == 0);
  CHECK(run({"periods", "--lambda", "1/2"}).code == 2);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"count", "--primes", "4"}).code == 2);
  CHECK(run({"count", "--primes", "3..7"}).code == 2);
  CHECK(run({"count", "--primes", "3..7", "--random", "2"}).code == 2);
  CHECK(run({"count", "--primes", "3..7", "--moduli", "1,2"}).code == 2);
  CHECK(run({"count", "--primes", "3..7", "--moduli", "1,2,3", "--format", "xml"}).code == 2);
  CHECK(run({"verify-maps"}).code == 2);
  CHECK(run({"verify-maps", "--seed", "1", "--map", "NOPE"}).code == 2);
  CHECK(run({"verify-maps", "--seed", "1", "--p", "100"}).code == 2);
  CHECK(run({"surface"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("surface dumps") {
  auto r = run({"surface", "--list", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out.find("MIRROR_G2G3") != std::string::npos);
  auto s = nlohmann::json::parse(run({"surface", "--id", "MIRROR_G2G3", "--lambda", "2"}).out);
  CHECK(s["model"]["kind"] == "weierstrass");
}

TEST_CASE("csv quoting") {
  auto r = run({"isogeny", "--rosenhain", "2,3,6", "--format", "csv"});
  CHECK(r.out.find("L,\"[\"\"10/3\"\",\"\"5/2\"\",\"\"2\"\"]\"") != std::string::npos);
}

TEST_CASE("single map and chain") {
  CHECK(run({"verify-maps", "--seed", "1", "--map", "PSI", "--trials", "10"}).code == 0);
  CHECK(run({"verify-maps", "--seed", "1", "--chain", "RANK18_A", "--trials", "10"}).code == 0);
  CHECK(run({"bench", "--primes", "101", "--repeat", "1"}).code == 0);
}
