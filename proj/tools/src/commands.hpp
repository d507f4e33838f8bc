#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace ksand::cli {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Common {
  std::string format = "json";
  std::string output;
  int threads = 1;
};

struct CountOpts {
  std::string primes;
  std::string moduli;
  int random = 0;
  std::optional<std::uint64_t> seed;
  bool timing = false;
};

struct VerifyOpts {
  std::uint64_t p = 2147483647ull;
  int trials = 100;
  std::optional<std::uint64_t> seed;
  std::string rank18 = "2,3";
  std::string rank17 = "7,3,-5";
  std::string map;
  std::string chain;
};

struct ModelOpts {
  std::string id;
  std::string params;
  std::string l1, l2, l3, lambda;
  bool list = false;
};

struct IsogenyOpts {
  std::string rosenhain;
  int sign = 1;
};

struct RelationsOpts {
  std::string rosenhain;
  std::string primes = "3..50";
  int sign = 1;
};

struct JacobianOpts {
  std::string primes;
  std::string coeffs;
  int random = 0;
  int degree = 6;
  std::optional<std::uint64_t> seed;
};

struct PeriodsOpts {
  std::string lambdas = "2,5/2,3,10";
  double tol = 1e-10;
};

struct BenchOpts {
  std::string primes = "101,1009,10007";
  int repeat = 3;
  std::optional<std::uint64_t> seed;
};

// A table rendered as JSON (the document) or CSV (header + rows).
struct Output {
  nlohmann::json document;
  std::vector<std::string> csv_header;
  std::vector<std::vector<std::string>> csv_rows;
  int exit_code = 0;
};

std::vector<std::uint64_t> parse_primes(const std::string& spec);

Output cmd_count(const CountOpts& o, const Common& c);
Output cmd_verify_maps(const VerifyOpts& o, const Common& c);
Output cmd_fibers(const ModelOpts& o, const Common& c);
Output cmd_surface(const ModelOpts& o, const Common& c);
Output cmd_isogeny(const IsogenyOpts& o, const Common& c);
Output cmd_relations(const RelationsOpts& o, const Common& c);
Output cmd_jacobian(const JacobianOpts& o, const Common& c);
Output cmd_periods(const PeriodsOpts& o, const Common& c);
Output cmd_bench(const BenchOpts& o, const Common& c);

// RFC 4180 quoting.
std::string csv_field(const std::string& s);
void write_output(const Output& out, const Common& c, std::ostream& os);

}  // namespace ksand::cli
