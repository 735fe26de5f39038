#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "posetcodes/distribution.hpp"
#include "posetcodes/griesmer.hpp"
#include "posetcodes/poset.hpp"

namespace posetcodes {

// How far a report's analytic distribution was confirmed.
enum class Verification { AnalyticOnly, CharsumChecked, DirectChecked };
std::string_view to_string(Verification v);

// Requested verification depth for build_report.
enum class VerifyMode { Auto, None, Charsum, Direct };

struct CodeReport {
  unsigned n = 0;
  unsigned m = 0;
  IdealSpec ideal;
  std::uint64_t length = 0;
  unsigned dimension = 0;
  std::uint64_t min_distance = 0;  // 0 for the zero code
  WeightDistribution distribution;
  std::string weight_enumerator;
  OptimalityClass optimality;
  Verification verified = Verification::AnalyticOnly;
  bool extension_flag = false;
  // Empty when every requested check agreed with the closed form.
  std::vector<std::string> mismatches;

  bool consistent() const { return mismatches.empty(); }
};

// Builds the report from the closed forms and confirms it with the
// requested oracles. Auto runs the char-sum oracle for n <= 28 and the
// direct oracle additionally for n <= 14. Throws ParameterError when the
// mode is not available at this n.
CodeReport build_report(const TwoChainPoset& p, const IdealSpec& ideal,
                        VerifyMode mode = VerifyMode::Auto);

// JSON with keys in CodeReport field order, two-space indent, trailing
// newline. Re-rendering a parsed document gives identical bytes.
std::string render_json(const CodeReport& r);
std::string render_text(const CodeReport& r);
// Canonical re-render of a JSON report produced by render_json.
std::string rerender_json(const std::string& json_text);

// Analytic classification of one parameter point, as a sweep row.
struct SweepRow {
  unsigned n = 0;
  unsigned m = 0;
  IdealSpec ideal;
  std::uint64_t length = 0;
  unsigned dimension = 0;
  std::uint64_t min_distance = 0;
  OptimalityKind kind = OptimalityKind::Unresolved;
  unsigned num_weights = 0;
};

inline constexpr const char* kSweepHeader = "n,m,i,j,length,dim,d,class,num_weights";

// Every legal (n, m, ideal) with 2 <= n <= n_max, lexicographic in
// (n, m, i, j) with missing i/j first. Points are evaluated concurrently;
// output order is deterministic. An empty filter keeps every class.
std::vector<SweepRow> sweep(unsigned n_max, const std::set<OptimalityKind>& keep = {});
std::string render_csv_row(const SweepRow& row);
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

// Generator matrix text: n lines of |D| '0'/'1' characters, row r is
// coordinate r+1 of each column in ascending order, '\n' after each line.
// Streams D without materializing it.
void write_generator_matrix(std::ostream& out, const TwoChainPoset& p, const IdealSpec& ideal);

struct SelftestSummary {
  unsigned instances = 0;
  unsigned direct_checked = 0;
  unsigned family_checks = 0;
  unsigned failures = 0;
  std::optional<std::string> first_failure;
  bool passed() const { return failures == 0; }
};

// Closed form vs oracles for every legal instance up to n_max, rank vs
// A_0, frequency mass, and both optimality families. Progress lines go to
// log when non-null.
SelftestSummary run_selftest(unsigned n_max, std::ostream* log = nullptr);

}  // namespace posetcodes
