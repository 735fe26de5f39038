// posetcodes: binary linear codes from down-sets of two disjoint chains.
//
// Exit status: 0 success, 1 verification or I/O failure, 2 usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "posetcodes/errors.hpp"
#include "posetcodes/poset.hpp"
#include "posetcodes/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct CodeArgs {
  unsigned n = 0;
  unsigned m = 0;
  std::optional<unsigned> i;
  std::optional<unsigned> j;

  void attach(CLI::App* cmd) {
    cmd->add_option("--n", n, "ground-set size (total of both chains)")->required();
    cmd->add_option("--m", m, "size of the first chain, 1 <= m < n")->required();
    cmd->add_option("--i", i, "top of the ideal in chain one, 1 <= i <= m");
    cmd->add_option("--j", j, "top of the ideal in chain two, m+1 <= j <= n");
  }

  std::pair<posetcodes::TwoChainPoset, posetcodes::IdealSpec> resolve() const {
    if (i && *i == 0) throw posetcodes::ParameterError("--i must be at least 1");
    if (j && *j == 0) throw posetcodes::ParameterError("--j must be at least m+1");
    posetcodes::TwoChainPoset p(m, n);
    auto ideal = posetcodes::IdealSpec::from_tops(i.value_or(0), j.value_or(0));
    ideal.validate(p);
    return {p, ideal};
  }
};

posetcodes::VerifyMode parse_verify(const std::string& s) {
  if (s == "auto") return posetcodes::VerifyMode::Auto;
  if (s == "none") return posetcodes::VerifyMode::None;
  if (s == "charsum") return posetcodes::VerifyMode::Charsum;
  return posetcodes::VerifyMode::Direct;
}

std::set<posetcodes::OptimalityKind> parse_classes(const std::string& list) {
  std::set<posetcodes::OptimalityKind> out;
  std::stringstream ss(list);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (token.empty()) continue;
    const auto k = posetcodes::parse_token(token);
    if (!k)
      throw posetcodes::ParameterError("unknown class '" + token +
                                       "' (expected griesmer, distance-optimal, almost-optimal, unresolved)");
    out.insert(*k);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Binary linear codes from down-sets of the disjoint union of two chains"};
  app.require_subcommand(1);

  CodeArgs construct_args;
  std::string emit = "text";
  std::string verify = "auto";
  bool lookup_best = false;
  auto* construct = app.add_subcommand("construct", "build one code and report its parameters");
  construct_args.attach(construct);
  construct->add_option("--emit", emit, "output format")->check(CLI::IsMember({"text", "json"}));
  construct->add_option("--verify", verify, "oracle verification depth")
      ->check(CLI::IsMember({"auto", "none", "charsum", "direct"}));
  construct->add_flag("--lookup-best", lookup_best,
                      "reserved: compare against an external best-known-codes table");

  unsigned sweep_n_max = 0;
  std::string sweep_classes;
  std::string sweep_out;
  auto* sweep = app.add_subcommand("sweep", "classify every legal parameter point as CSV");
  sweep->add_option("--n-max", sweep_n_max, "largest n to include")->required();
  sweep->add_option("--classes", sweep_classes,
                    "comma-separated filter: griesmer,distance-optimal,almost-optimal,unresolved");
  sweep->add_option("--out", sweep_out, "CSV path (default stdout)");

  CodeArgs matrix_args;
  std::string matrix_out;
  auto* matrix = app.add_subcommand("matrix", "write the generator matrix as 0/1 text");
  matrix_args.attach(matrix);
  matrix->add_option("--out", matrix_out, "output path")->required();

  unsigned selftest_n_max = 10;
  bool selftest_quiet = false;
  auto* selftest = app.add_subcommand("selftest", "closed forms vs exhaustive oracles");
  selftest->add_option("--n-max", selftest_n_max, "largest n to check");
  selftest->add_flag("--quiet", selftest_quiet, "summary only");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (construct->parsed()) {
      const auto [p, ideal] = construct_args.resolve();
      if (lookup_best)
        std::cerr << "--lookup-best: no best-known-codes source is configured; skipping\n";
      const auto report = posetcodes::build_report(p, ideal, parse_verify(verify));
      std::cout << (emit == "json" ? posetcodes::render_json(report) : posetcodes::render_text(report));
      if (!report.consistent()) {
        for (const auto& m : report.mismatches) std::cerr << "verification mismatch: " << m << '\n';
        return kExitFailure;
      }
      return kExitOk;
    }

    if (sweep->parsed()) {
      const auto rows = posetcodes::sweep(sweep_n_max, parse_classes(sweep_classes));
      if (sweep_out.empty()) {
        posetcodes::write_sweep_csv(std::cout, rows);
        return kExitOk;
      }
      std::ofstream out(sweep_out);
      if (!out) {
        std::cerr << "cannot open " << sweep_out << " for writing\n";
        return kExitFailure;
      }
      posetcodes::write_sweep_csv(out, rows);
      if (!out) {
        std::cerr << "write failed: " << sweep_out << '\n';
        return kExitFailure;
      }
      return kExitOk;
    }

    if (matrix->parsed()) {
      const auto [p, ideal] = matrix_args.resolve();
      std::ofstream out(matrix_out, std::ios::binary);
      if (!out) {
        std::cerr << "cannot open " << matrix_out << " for writing\n";
        return kExitFailure;
      }
      posetcodes::write_generator_matrix(out, p, ideal);
      out.close();
      if (!out) {
        std::cerr << "write failed: " << matrix_out << '\n';
        return kExitFailure;
      }
      return kExitOk;
    }

    if (selftest->parsed()) {
      const auto summary =
          posetcodes::run_selftest(selftest_n_max, selftest_quiet ? nullptr : &std::cout);
      std::cout << "selftest: " << summary.instances << " instances (" << summary.direct_checked
                << " direct-checked), " << summary.family_checks << " optimality checks, "
                << summary.failures << " failures\n";
      if (!summary.passed()) {
        std::cout << "first failure: " << *summary.first_failure << '\n';
        return kExitFailure;
      }
      return kExitOk;
    }
  } catch (const posetcodes::ParameterError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const posetcodes::CapacityError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
