#include <CLI11.hpp>

#include <cstdio>
#include <exception>
#include <iostream>
#include <string>

#include "peps/exact.hpp"
#include "peps/expansion.hpp"
#include "peps/guards.hpp"
#include "peps/moments.hpp"
#include "peps/registry.hpp"
#include "peps/serialize.hpp"
#include "peps/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

const peps::RegisteredStatistic& lookup_stat(const std::string& name) {
  const peps::StatRegistry& registry = peps::builtin_statistics();
  if (!registry.contains(name)) {
    std::string known;
    for (const std::string& n : registry.names()) {
      if (!known.empty()) known += ", ";
      known += n;
    }
    throw CLI::ValidationError("--stat", "unknown statistic '" + name + "' (known: " + known + ")");
  }
  return registry.lookup(name);
}

int run_expand(const std::string& stat_name, int max_size, const std::string& format) {
  const peps::RegisteredStatistic& stat = lookup_stat(stat_name);
  if (max_size > stat.meta.max_supported_size) {
    std::cerr << "error: statistic '" << stat_name << "' supports --max-size up to "
              << stat.meta.max_supported_size << "\n";
    return kExitUsage;
  }
  peps::PatternExpansion expansion = peps::expand(stat.evaluator, max_size);
  if (format == "csv") {
    std::cout << peps::expansion_to_csv(expansion);
  } else {
    std::cout << peps::expansion_to_json(expansion) << "\n";
  }
  return kExitOk;
}

int run_verify(const std::string& kind, int max_n) {
  using peps::VerifyReport;
  bool failed = false;
  if (kind == "ie") {
    auto reports = peps::verify_ie(max_n < 0 ? 4 : max_n);
    std::cout << peps::ie_reports_to_json(reports) << "\n";
    for (const auto& r : reports) failed |= !r.ok();
    return failed ? kExitVerifyFailed : kExitOk;
  }

  std::vector<VerifyReport> reports;
  if (kind == "lifts") {
    reports.push_back(peps::verify_lifts(max_n < 0 ? 4 : max_n));
  } else if (kind == "vargas") {
    reports.push_back(peps::verify_vargas(max_n < 0 ? 5 : max_n));
  } else if (kind == "moments") {
    int bound = max_n < 0 ? 5 : max_n;
    reports.push_back(peps::verify_moment_consistency(4, bound));
    reports.push_back(peps::verify_kappa_properties(8, bound));
    reports.push_back(peps::verify_binom_expected(3, bound + 1));
    reports.push_back(peps::verify_moment_finiteness(3));
  } else if (kind == "positivity") {
    reports.push_back(peps::verify_positivity(max_n < 0 ? 4 : max_n));
  } else {
    std::cerr << "error: unknown verification '" << kind
              << "' (expected ie, vargas, positivity, moments, or lifts)\n";
    return kExitUsage;
  }

  std::cout << "[\n";
  for (size_t i = 0; i < reports.size(); ++i) {
    const VerifyReport& r = reports[i];
    std::cout << "  {\"name\": \"" << r.name << "\", \"checks\": " << r.checks
              << ", \"violations\": [";
    for (size_t v = 0; v < r.violations.size(); ++v) {
      std::cout << (v ? ", " : "") << "\"" << r.violations[v] << "\"";
    }
    std::cout << "], \"notes\": [";
    for (size_t v = 0; v < r.notes.size(); ++v) {
      std::cout << (v ? ", " : "") << "\"" << r.notes[v] << "\"";
    }
    std::cout << "]}" << (i + 1 < reports.size() ? "," : "") << "\n";
    failed |= !r.ok();
  }
  std::cout << "]\n";
  return failed ? kExitVerifyFailed : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact pattern expansions of permutation statistics"};
  app.require_subcommand(1);
  app.footer("Size guards default to permutations of size 8 and reduced words of 12 letters;\n"
             "set PEPS_MAX_N to raise them. Permutations are written as contiguous digits\n"
             "(\"3421\"), comma-separated entries (\"10,3,...\"), or \"e\" for the empty one.");

  std::string stat_name;
  std::string pattern_text;
  std::string perm_text;
  std::string format = "json";
  int max_size = 3;
  bool with_inverse = false;

  CLI::App* cmd_expand = app.add_subcommand("expand", "Pattern expansion of a statistic");
  cmd_expand->add_option("--stat", stat_name, "statistic name")->required();
  cmd_expand->add_option("--max-size", max_size, "largest pattern size")->required();
  cmd_expand->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  CLI::App* cmd_coeff = app.add_subcommand("coeff", "One expansion coefficient");
  cmd_coeff->add_option("--stat", stat_name, "statistic name")->required();
  cmd_coeff->add_option("--pattern", pattern_text, "pattern in one-line notation")->required();

  CLI::App* cmd_eval = app.add_subcommand("eval", "Evaluate a statistic");
  cmd_eval->add_option("--stat", stat_name, "statistic name")->required();
  cmd_eval->add_option("--perm", perm_text, "permutation in one-line notation")->required();

  CLI::App* cmd_matrix = app.add_subcommand("matrix", "Change-of-basis matrix [p](w)");
  cmd_matrix->add_option("--max-size", max_size, "largest pattern size")->required();
  cmd_matrix->add_flag("--inverse", with_inverse, "also compute the exact inverse");
  cmd_matrix->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  int order = 1;
  bool binomial = false;
  bool want_expansion = false;
  int expected_n = -1;
  CLI::App* cmd_moments = app.add_subcommand("moments", "Moment statistics");
  cmd_moments->add_option("--order", order, "moment order m >= 1")->required();
  cmd_moments->add_flag("--binomial", binomial, "binomial variant");
  CLI::Option* opt_expansion =
      cmd_moments->add_flag("--expansion", want_expansion, "print the closed-form expansion");
  cmd_moments->add_option("--expected", expected_n, "expected value on S_n (closed form)")
      ->excludes(opt_expansion);

  CLI::App* cmd_essential = app.add_subcommand("essential", "Essential reduced words");
  cmd_essential->add_option("--perm", perm_text, "permutation")->required();

  CLI::App* cmd_partition =
      app.add_subcommand("partition", "Reduced words grouped by essential index set");
  cmd_partition->add_option("--perm", perm_text, "permutation")->required();

  std::string verify_kind;
  int verify_max_n = -1;
  CLI::App* cmd_verify = app.add_subcommand("verify", "Batch verification");
  cmd_verify->add_option("kind", verify_kind, "ie, vargas, positivity, moments, or lifts")
      ->required();
  cmd_verify->add_option("--max-n", verify_max_n, "size bound for the batch");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (cmd_expand->parsed()) return run_expand(stat_name, max_size, format);

    if (cmd_coeff->parsed()) {
      const peps::RegisteredStatistic& stat = lookup_stat(stat_name);
      peps::Permutation p = peps::Permutation::parse(pattern_text);
      std::cout << peps::to_decimal(peps::coefficient(stat.evaluator, p)) << "\n";
      return kExitOk;
    }

    if (cmd_eval->parsed()) {
      const peps::RegisteredStatistic& stat = lookup_stat(stat_name);
      peps::Permutation w = peps::Permutation::parse(perm_text);
      std::cout << peps::to_decimal(stat.evaluator.eval(w)) << "\n";
      return kExitOk;
    }

    if (cmd_matrix->parsed()) {
      peps::BasisMatrix m = peps::basis_matrix(max_size, with_inverse);
      std::cout << (format == "csv" ? peps::basis_matrix_to_csv(m)
                                    : peps::basis_matrix_to_json(m) + "\n");
      return kExitOk;
    }

    if (cmd_moments->parsed()) {
      peps::MomentSpec spec{order, binomial};
      if (want_expansion) {
        std::cout << peps::expansion_to_json(peps::moment_expansion(spec)) << "\n";
        return kExitOk;
      }
      if (expected_n >= 0) {
        if (binomial && order % 2 == 0) {  // closed form exists for even binomial orders
          std::cout << peps::to_decimal(peps::expected_binom_moment(order / 2, expected_n))
                    << "\n";
        } else {
          peps::StatisticEvaluator stat = peps::int_statistic(
              "moment", [spec](const peps::Permutation& w) { return peps::moment(spec, w); });
          std::cout << peps::to_decimal(peps::expected_value_exhaustive(stat, expected_n)) << "\n";
        }
        return kExitOk;
      }
      std::cerr << "error: choose --expansion or --expected N\n";
      return kExitUsage;
    }

    if (cmd_essential->parsed()) {
      peps::Permutation w = peps::Permutation::parse(perm_text);
      std::cout << peps::essential_to_json(w, peps::essential_words(w)) << "\n";
      return kExitOk;
    }

    if (cmd_partition->parsed()) {
      peps::Permutation w = peps::Permutation::parse(perm_text);
      std::cout << peps::partition_to_json(w, peps::partition_by_essential_set(w)) << "\n";
      return kExitOk;
    }

    if (cmd_verify->parsed()) return run_verify(verify_kind, verify_max_n);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const peps::SizeGuardExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}
