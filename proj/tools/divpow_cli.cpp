// Command-line front-end: one subcommand per verification suite, JSON
// reports, deterministic seeds. Exit code 0 when every assertion passes,
// 1 when any fails, 2 on usage errors.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "divpow/stab.hpp"
#include "divpow/suites.hpp"

using divpow::suites::Report;

namespace {

struct OutputOptions {
  std::string out_path;
  bool pretty = false;
};

int emit(const Report& rep, const OutputOptions& opts) {
  nlohmann::json j = rep.to_json();
  std::string text = opts.pretty ? j.dump(2) : j.dump();
  if (opts.out_path.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream out(opts.out_path);
    if (!out) {
      std::cerr << "cannot open output path: " << opts.out_path << "\n";
      return 2;
    }
    out << text << "\n";
  }
  return rep.pass() ? 0 : 1;
}

void add_output_flags(CLI::App* cmd, OutputOptions& opts) {
  cmd->add_option("--out", opts.out_path, "write the JSON report to this file");
  cmd->add_flag("--pretty", opts.pretty, "indent the JSON report");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification suites for divided-power and blow-up computations"};
  app.require_subcommand(1);

  OutputOptions opts;
  int exit_code = 0;

  // verify-kummer
  {
    auto* cmd = app.add_subcommand("verify-kummer",
                                   "carry counts vs valuations, digit-wise multinomials");
    auto max_sum = std::make_shared<int>(12);
    auto primes = std::make_shared<std::vector<std::int64_t>>(std::vector<std::int64_t>{2, 3, 5});
    cmd->add_option("--max-sum", *max_sum, "largest part-list sum")->capture_default_str();
    cmd->add_option("--primes", *primes, "primes to test")->delimiter(',')->capture_default_str();
    add_output_flags(cmd, opts);
    cmd->callback([&, max_sum, primes] {
      exit_code = emit(divpow::suites::run_kummer(*max_sum, *primes), opts);
    });
  }

  // verify-gamma
  {
    auto* cmd = app.add_subcommand("verify-gamma", "divided-power relations and canonical maps");
    auto chars = std::make_shared<std::vector<std::int64_t>>(std::vector<std::int64_t>{0, 2, 3, 5});
    auto max_dim = std::make_shared<int>(3);
    auto max_degree = std::make_shared<int>(4);
    auto samples = std::make_shared<int>(200);
    auto comp_deg = std::make_shared<int>(6);
    auto seed = std::make_shared<std::uint64_t>(1);
    cmd->add_option("--chars", *chars, "characteristics (0 = rationals)")->delimiter(',')->capture_default_str();
    cmd->add_option("--max-dim", *max_dim)->capture_default_str();
    cmd->add_option("--max-degree", *max_degree)->capture_default_str();
    cmd->add_option("--samples", *samples)->capture_default_str();
    cmd->add_option("--composite-max-degree", *comp_deg)->capture_default_str();
    cmd->add_option("--seed", *seed)->capture_default_str();
    add_output_flags(cmd, opts);
    cmd->callback([&, chars, max_dim, max_degree, samples, comp_deg, seed] {
      exit_code = emit(
          divpow::suites::run_gamma(*chars, *max_dim, *max_degree, *samples, *comp_deg, *seed),
          opts);
    });
  }

  // verify-pairing
  {
    auto* cmd = app.add_subcommand("verify-pairing", "duality pairing pure-symbol formula");
    auto chars = std::make_shared<std::vector<std::int64_t>>(std::vector<std::int64_t>{0, 2, 3, 5});
    auto max_dim = std::make_shared<int>(3);
    auto max_degree = std::make_shared<int>(4);
    auto samples = std::make_shared<int>(200);
    auto seed = std::make_shared<std::uint64_t>(2);
    cmd->add_option("--chars", *chars)->delimiter(',')->capture_default_str();
    cmd->add_option("--max-dim", *max_dim)->capture_default_str();
    cmd->add_option("--max-degree", *max_degree)->capture_default_str();
    cmd->add_option("--samples", *samples)->capture_default_str();
    cmd->add_option("--seed", *seed)->capture_default_str();
    add_output_flags(cmd, opts);
    cmd->callback([&, chars, max_dim, max_degree, samples, seed] {
      exit_code =
          emit(divpow::suites::run_pairing(*chars, *max_dim, *max_degree, *samples, *seed), opts);
    });
  }

  // verify-free-tensor
  {
    auto* cmd = app.add_subcommand("verify-free-tensor",
                                   "trivial-stabilizer tensor: tangent solve and point scan");
    auto characteristic = std::make_shared<std::int64_t>(2);
    auto dim = std::make_shared<int>(3);
    auto exps = std::make_shared<std::vector<std::int64_t>>();
    cmd->add_option("--char", *characteristic, "0 for the rationals")->capture_default_str();
    cmd->add_option("--dim", *dim)->capture_default_str();
    cmd->add_option("--a", *exps, "exponent sequence a_1,...,a_{d+1}")->delimiter(',');
    add_output_flags(cmd, opts);
    cmd->callback([&, characteristic, dim, exps] {
      std::optional<std::vector<std::int64_t>> a;
      if (!exps->empty()) a = *exps;
      exit_code = emit(divpow::suites::run_free_tensor(*characteristic, *dim, std::move(a),
                                                       divpow::default_enum_guard()),
                       opts);
    });
  }

  // verify-divprod
  {
    auto* cmd = app.add_subcommand("verify-divprod",
                                   "multiplication-map injectivity and tuple separation");
    auto chars = std::make_shared<std::vector<std::int64_t>>(std::vector<std::int64_t>{2, 3});
    auto max_dim = std::make_shared<int>(3);
    auto max_sum = std::make_shared<int>(12);
    auto tau_char = std::make_shared<std::int64_t>(3);
    auto tau_exps = std::make_shared<std::vector<std::int64_t>>(std::vector<std::int64_t>{3, 9});
    cmd->add_option("--chars", *chars)->delimiter(',')->capture_default_str();
    cmd->add_option("--max-dim", *max_dim)->capture_default_str();
    cmd->add_option("--max-sum", *max_sum)->capture_default_str();
    cmd->add_option("--tau-char", *tau_char)->capture_default_str();
    cmd->add_option("--tau-a", *tau_exps)->delimiter(',')->capture_default_str();
    add_output_flags(cmd, opts);
    cmd->callback([&, chars, max_dim, max_sum, tau_char, tau_exps] {
      exit_code = emit(
          divpow::suites::run_divprod(*chars, *max_dim, *max_sum, *tau_char, *tau_exps), opts);
    });
  }

  // verify-tannaka-shape
  {
    auto* cmd = app.add_subcommand("verify-tannaka-shape",
                                   "degree-shift shape separation and stabilizer dimensions");
    auto max_m = std::make_shared<int>(8);
    auto chars = std::make_shared<std::vector<std::int64_t>>(std::vector<std::int64_t>{0, 2, 3});
    auto dims = std::make_shared<std::vector<int>>(std::vector<int>{2, 3, 4});
    cmd->add_option("--max-m", *max_m)->capture_default_str();
    cmd->add_option("--chars", *chars)->delimiter(',')->capture_default_str();
    cmd->add_option("--dims", *dims)->delimiter(',')->capture_default_str();
    add_output_flags(cmd, opts);
    cmd->callback([&, max_m, chars, dims] {
      exit_code = emit(divpow::suites::run_tannaka_shape(*max_m, *chars, *dims), opts);
    });
  }

  // chow-phi
  {
    auto* cmd = app.add_subcommand("chow-phi",
                                   "blow-up product table and the image obstruction search");
    auto ambient = std::make_shared<std::int64_t>(10);
    auto dims = std::make_shared<std::vector<std::int64_t>>(std::vector<std::int64_t>{2, 3});
    auto degs = std::make_shared<std::vector<std::int64_t>>(std::vector<std::int64_t>{1, 5});
    auto bound = std::make_shared<int>(3);
    auto list_candidates = std::make_shared<bool>(false);
    cmd->add_option("--ambient", *ambient)->capture_default_str();
    cmd->add_option("--dims", *dims, "two center dimensions")->delimiter(',')->capture_default_str();
    cmd->add_option("--degs", *degs, "two center degrees")->delimiter(',')->capture_default_str();
    cmd->add_option("--bound", *bound)->capture_default_str();
    cmd->add_flag("--list-candidates", *list_candidates,
                  "record every candidate with its obstruction branch");
    add_output_flags(cmd, opts);
    cmd->callback([&, ambient, dims, degs, bound, list_candidates] {
      if (dims->size() != 2 || degs->size() != 2)
        throw CLI::ValidationError("chow-phi", "--dims and --degs take exactly two values");
      exit_code = emit(divpow::suites::run_chow_phi(*ambient, (*dims)[0], (*dims)[1], (*degs)[0],
                                                    (*degs)[1], *bound, *list_candidates),
                       opts);
    });
  }

  // count-bundle
  {
    auto* cmd = app.add_subcommand("count-bundle",
                                   "projective bundle point counts; sweeps by default");
    auto a = std::make_shared<std::int64_t>(0);
    auto m = std::make_shared<std::int64_t>(0);
    auto q = std::make_shared<std::int64_t>(0);
    auto max_exp = std::make_shared<int>(8);
    auto qs = std::make_shared<std::vector<std::int64_t>>(
        std::vector<std::int64_t>{2, 3, 4, 5, 8, 9});
    auto swap_max = std::make_shared<int>(10);
    cmd->add_option("--a", *a, "base exponent; with --m and --q prints one count");
    cmd->add_option("--m", *m, "fiber exponent");
    cmd->add_option("--q", *q, "field size (prime power)");
    cmd->add_option("--max-exp", *max_exp)->capture_default_str();
    cmd->add_option("--qs", *qs)->delimiter(',')->capture_default_str();
    cmd->add_option("--swap-max", *swap_max)->capture_default_str();
    add_output_flags(cmd, opts);
    cmd->callback([&, a, m, q, max_exp, qs, swap_max] {
      if (*a != 0 || *m != 0 || *q != 0) {
        if (*a < 2 || *m < 2 || *q < 2)
          throw CLI::ValidationError("count-bundle", "need --a, --m, --q all >= 2");
        exit_code = emit(divpow::suites::run_bundle_single(*a, *m, *q), opts);
      } else {
        exit_code = emit(divpow::suites::run_bundle_counts(*max_exp, *qs, *swap_max), opts);
      }
    });
  }

  // verify-nakayama
  {
    auto* cmd = app.add_subcommand("verify-nakayama",
                                   "exhaustive residue-lifting checks over the dual numbers");
    auto seed = std::make_shared<std::uint64_t>(3);
    cmd->add_option("--seed", *seed)->capture_default_str();
    add_output_flags(cmd, opts);
    cmd->callback(
        [&, seed] { exit_code = emit(divpow::suites::run_nakayama(*seed), opts); });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
