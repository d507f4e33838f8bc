#include "ksand_cli/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <ostream>

#include "commands.hpp"
#include "ksand/moduli.hpp"

namespace ksand::cli {

namespace {

int env_threads() {
  if (const char* s = std::getenv("KSAND_THREADS")) {
    int n = std::atoi(s);
    if (n > 0) return n;
  }
  return 1;
}

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--output,-o", c.output, "write the report here instead of stdout");
  sub->add_option("--threads", c.threads, "worker threads (default: KSAND_THREADS or 1)")
      ->check(CLI::Range(1, 256));
}

void add_model(CLI::App* sub, ModelOpts& m) {
  sub->add_option("--id", m.id, "catalog id");
  sub->add_option("--params", m.params, "comma-separated rationals in catalog order");
  sub->add_option("--l1", m.l1);
  sub->add_option("--l2", m.l2);
  sub->add_option("--l3", m.l3);
  sub->add_option("--lambda", m.lambda);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Kummer sandwich fibrations, maps and point counts", "ksand"};
  app.require_subcommand(1);

  Common common;
  common.threads = env_threads();
  CountOpts count;
  VerifyOpts verify;
  ModelOpts fibers, surface;
  IsogenyOpts isogeny;
  RelationsOpts relations;
  JacobianOpts jacobian;
  PeriodsOpts periods;
  BenchOpts bench;

  auto* c_count = app.add_subcommand("count", "closed form vs character sum over a prime sweep");
  c_count->add_option("--primes", count.primes, "3..101 or 3,5,7")->required();
  c_count->add_option("--moduli", count.moduli, "a,b,c as rationals");
  c_count->add_option("--random", count.random, "random triples per prime")->check(CLI::PositiveNumber);
  c_count->add_option("--seed", count.seed);
  c_count->add_flag("--timing", count.timing, "fill the t_naive_ns and t_conv_ns columns");
  add_common(c_count, common);

  auto* c_verify = app.add_subcommand("verify-maps", "sample points through every cataloged map");
  c_verify->add_option("--p", verify.p, "prime for sampling");
  c_verify->add_option("--trials", verify.trials);
  c_verify->add_option("--seed", verify.seed);
  c_verify->add_option("--rank18", verify.rank18, "l1,l2");
  c_verify->add_option("--rank17", verify.rank17, "L1,L2,L3");
  c_verify->add_option("--map", verify.map, "single map id");
  c_verify->add_option("--chain", verify.chain, "single chain id");
  add_common(c_verify, common);

  auto* c_fibers = app.add_subcommand("fibers", "singular fibers and census diff");
  add_model(c_fibers, fibers);
  add_common(c_fibers, common);

  auto* c_surface = app.add_subcommand("surface", "dump a catalog model");
  add_model(c_surface, surface);
  c_surface->add_flag("--list", surface.list, "list catalog ids");
  add_common(c_surface, common);

  auto* c_isogeny = app.add_subcommand("isogeny", "Richelot transform, quartic parameters and twist factor");
  c_isogeny->add_option("--rosenhain", isogeny.rosenhain, "l1,l2,l3")->required();
  c_isogeny->add_option("--sign", isogeny.sign, "branch of sqrt(l1 l2 l3)");
  add_common(c_isogeny, common);

  auto* c_rel = app.add_subcommand("relations", "counting relations between the twisted pencils");
  c_rel->add_option("--rosenhain", relations.rosenhain, "l1,l2,l3 with square product")->required();
  c_rel->add_option("--primes", relations.primes);
  c_rel->add_option("--sign", relations.sign);
  add_common(c_rel, common);

  auto* c_jac = app.add_subcommand("jacobian", "genus-two Jacobian orders");
  c_jac->add_option("--primes", jacobian.primes)->required();
  c_jac->add_option("--coeffs", jacobian.coeffs, "c0,...,c6 ascending");
  c_jac->add_option("--random", jacobian.random, "random curves per prime")->check(CLI::PositiveNumber);
  c_jac->add_option("--degree", jacobian.degree, "5 or 6 for --random");
  c_jac->add_option("--seed", jacobian.seed);
  add_common(c_jac, common);

  auto* c_periods = app.add_subcommand("periods", "hypergeometric period identities");
  c_periods->add_option("--lambda", periods.lambdas, "comma-separated values > 1");
  c_periods->add_option("--tol", periods.tol);
  add_common(c_periods, common);

  auto* c_bench = app.add_subcommand("bench", "timing table for the counting kernels");
  c_bench->add_option("--primes", bench.primes);
  c_bench->add_option("--repeat", bench.repeat);
  c_bench->add_option("--seed", bench.seed);
  add_common(c_bench, common);

  std::vector<std::string> argv_store{"ksand"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    Output result;
    if (c_count->parsed()) result = cmd_count(count, common);
    else if (c_verify->parsed()) result = cmd_verify_maps(verify, common);
    else if (c_fibers->parsed()) result = cmd_fibers(fibers, common);
    else if (c_surface->parsed()) result = cmd_surface(surface, common);
    else if (c_isogeny->parsed()) result = cmd_isogeny(isogeny, common);
    else if (c_rel->parsed()) result = cmd_relations(relations, common);
    else if (c_jac->parsed()) result = cmd_jacobian(jacobian, common);
    else if (c_periods->parsed()) result = cmd_periods(periods, common);
    else result = cmd_bench(bench, common);
    write_output(result, common, out);
    return result.exit_code;
  } catch (const UsageError& e) {
    err << "ksand: " << e.what() << "\n";
    return kUsage;
  } catch (const DegenerateInput& e) {
    err << "ksand: degenerate input: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "ksand: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "ksand: check failed: " << e.what() << "\n";
    return kCheckFailed;
  }
}

}  // namespace ksand::cli
