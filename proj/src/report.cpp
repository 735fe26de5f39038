#include "posetcodes/report.hpp"

#include "json.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "posetcodes/analytic.hpp"
#include "posetcodes/code_builder.hpp"
#include "posetcodes/errors.hpp"
#include "posetcodes/oracle.hpp"

namespace posetcodes {

using ordered_json = nlohmann::ordered_json;

std::string_view to_string(Verification v) {
  switch (v) {
    case Verification::AnalyticOnly:
      return "analytic-only";
    case Verification::CharsumChecked:
      return "charsum-checked";
    case Verification::DirectChecked:
      return "direct-checked";
  }
  return "?";
}

namespace {

std::string_view kind_token(IdealKind k) {
  switch (k) {
    case IdealKind::Empty:
      return "empty";
    case IdealKind::ChainOne:
      return "chain-one";
    case IdealKind::ChainTwo:
      return "chain-two";
    case IdealKind::BothChains:
      return "both-chains";
  }
  return "?";
}

OptimalityClass classify_code(std::uint64_t length, unsigned dimension, std::uint64_t d) {
  if (length == 0 || dimension == 0 || d == 0)
    return {OptimalityKind::Unresolved, "zero code; no minimum distance"};
  return classify(length, dimension, d);
}

std::uint64_t min_distance_or_zero(const WeightDistribution& w) {
  return weight_count(w) == 0 ? 0 : min_distance(w);
}

}  // namespace

CodeReport build_report(const TwoChainPoset& p, const IdealSpec& ideal, VerifyMode mode) {
  ideal.validate(p);
  const unsigned n = p.n();

  bool run_charsum = false;
  bool run_direct = false;
  switch (mode) {
    case VerifyMode::Auto:
      run_charsum = n <= kMaterializeMaxN;
      run_direct = n <= kDirectOracleMaxN;
      break;
    case VerifyMode::None:
      break;
    case VerifyMode::Charsum:
      if (n > kMaterializeMaxN)
        throw ParameterError("--verify charsum requires n <= " + std::to_string(kMaterializeMaxN));
      run_charsum = true;
      break;
    case VerifyMode::Direct:
      if (n > kDirectOracleMaxN)
        throw ParameterError("--verify direct requires n <= " + std::to_string(kDirectOracleMaxN));
      run_charsum = true;
      run_direct = true;
      break;
  }

  CodeReport r;
  r.n = n;
  r.m = p.m();
  r.ideal = ideal;
  r.extension_flag = ideal.kind() == IdealKind::Empty;
  r.length = analytic_params(p, ideal).length;
  r.distribution = analytic_distribution(p, ideal);
  r.weight_enumerator = render_enumerator(r.distribution);
  r.min_distance = min_distance_or_zero(r.distribution);
  const unsigned analytic_dim = dimension_from_distribution(r.distribution);
  r.dimension = analytic_dim;

  if (!r.distribution.is_complete())
    r.mismatches.push_back("analytic frequency mass " + std::to_string(r.distribution.total()) +
                           " != 2^n");

  std::optional<unsigned> rank;
  if (run_charsum) {
    const WeightDistribution c = oracle::charsum_distribution(p, ideal);
    if (c != r.distribution) r.mismatches.push_back("char-sum oracle gives " + c.to_string());
    r.verified = Verification::CharsumChecked;
  }
  if (run_direct) {
    const DefiningSet d = build_defining_set(p, ideal);
    if (d.size() != r.length)
      r.mismatches.push_back("|D| = " + std::to_string(d.size()) + " differs from length");
    const WeightDistribution w = oracle::direct_distribution(d);
    if (w != r.distribution) r.mismatches.push_back("direct oracle gives " + w.to_string());
    rank = static_cast<unsigned>(f2_rank(generator_matrix(d)));
    r.verified = Verification::DirectChecked;
  } else if (run_charsum) {
    rank = defining_set_rank(p, ideal);
  }
  if (rank) {
    r.dimension = *rank;
    if (*rank != analytic_dim)
      r.mismatches.push_back("F2 rank " + std::to_string(*rank) + " disagrees with A_0 (dimension " +
                             std::to_string(analytic_dim) + ")");
  }

  try {
    r.optimality = classify_code(r.length, r.dimension, r.min_distance);
  } catch (const ParameterError& e) {
    r.optimality = {OptimalityKind::Unresolved, e.what()};
    r.mismatches.push_back(e.what());
  }
  return r;
}

namespace {

ordered_json to_json(const CodeReport& r) {
  ordered_json j;
  j["n"] = r.n;
  j["m"] = r.m;
  ordered_json ideal;
  ideal["kind"] = kind_token(r.ideal.kind());
  if (r.ideal.chain_one_height() != 0) ideal["i"] = r.ideal.chain_one_height();
  if (r.ideal.chain_two_top() != 0) ideal["j"] = r.ideal.chain_two_top();
  j["ideal"] = ideal;
  j["length"] = r.length;
  j["dimension"] = r.dimension;
  j["min_distance"] = r.min_distance;
  ordered_json freq = ordered_json::object();
  ordered_json weights = ordered_json::array();
  for (const auto& [w, f] : r.distribution.frequencies()) {
    freq[std::to_string(w)] = f;
    weights.push_back(w);
  }
  j["weight_distribution"] = freq;
  j["weights"] = weights;
  j["weight_enumerator"] = r.weight_enumerator;
  j["optimality"] = {{"class", to_string(r.optimality.kind)}, {"rationale", r.optimality.rationale}};
  j["verified"] = to_string(r.verified);
  j["extension_flag"] = r.extension_flag;
  return j;
}

}  // namespace

std::string render_json(const CodeReport& r) { return to_json(r).dump(2) + "\n"; }

std::string rerender_json(const std::string& json_text) {
  return ordered_json::parse(json_text).dump(2) + "\n";
}

std::string render_text(const CodeReport& r) {
  std::ostringstream os;
  os << "poset:        m=" << r.m << ", n=" << r.n << '\n';
  os << "ideal:        " << r.ideal.to_string() << '\n';
  os << "parameters:   [" << r.length << ", " << r.dimension << ", " << r.min_distance << "]\n";
  os << "enumerator:   " << r.weight_enumerator << '\n';
  os << "distribution: " << r.distribution.to_string() << '\n';
  os << "weights:      " << weight_count(r.distribution) << " nonzero\n";
  os << "optimality:   " << to_string(r.optimality.kind) << " (" << r.optimality.rationale << ")\n";
  os << "verified:     " << to_string(r.verified) << '\n';
  if (r.extension_flag) os << "extension:    empty ideal (simplex code)\n";
  for (const auto& m : r.mismatches) os << "MISMATCH:     " << m << '\n';
  return os.str();
}

std::vector<SweepRow> sweep(unsigned n_max, const std::set<OptimalityKind>& keep) {
  if (n_max < 2 || n_max > kMaxN)
    throw ParameterError("--n-max must lie in [2, " + std::to_string(kMaxN) + "]");

  struct Point {
    unsigned n, m;
    IdealSpec ideal;
  };
  std::vector<Point> points;
  for (unsigned n = 2; n <= n_max; ++n)
    for (unsigned m = 1; m < n; ++m)
      for (const IdealSpec& ideal : all_ideals(TwoChainPoset(m, n))) points.push_back({n, m, ideal});

  std::vector<SweepRow> rows(points.size());
  const auto count = static_cast<std::int64_t>(points.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t k = 0; k < count; ++k) {
    const Point& pt = points[static_cast<std::size_t>(k)];
    const TwoChainPoset p(pt.m, pt.n);
    const WeightDistribution dist = analytic_distribution(p, pt.ideal);
    SweepRow& row = rows[static_cast<std::size_t>(k)];
    row.n = pt.n;
    row.m = pt.m;
    row.ideal = pt.ideal;
    row.length = analytic_params(p, pt.ideal).length;
    row.dimension = dimension_from_distribution(dist);
    row.min_distance = min_distance_or_zero(dist);
    row.kind = classify_code(row.length, row.dimension, row.min_distance).kind;
    row.num_weights = weight_count(dist);
  }

  if (keep.empty()) return rows;
  std::vector<SweepRow> kept;
  for (const SweepRow& r : rows)
    if (keep.count(r.kind)) kept.push_back(r);
  return kept;
}

std::string render_csv_row(const SweepRow& row) {
  std::ostringstream os;
  const unsigned i = row.ideal.chain_one_height();
  const unsigned j = row.ideal.chain_two_top();
  os << row.n << ',' << row.m << ',';
  if (i) os << i;
  os << ',';
  if (j) os << j;
  os << ',' << row.length << ',' << row.dimension << ',' << row.min_distance << ','
     << to_token(row.kind) << ',' << row.num_weights;
  return os.str();
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << kSweepHeader << '\n';
  for (const SweepRow& r : rows) out << render_csv_row(r) << '\n';
}

void write_generator_matrix(std::ostream& out, const TwoChainPoset& p, const IdealSpec& ideal) {
  if (p.n() > kMaterializeMaxN)
    throw CapacityError("generator matrix export is capped at n <= " +
                        std::to_string(kMaterializeMaxN));
  std::vector<BitVector> members = ideal_members(p, ideal);
  std::sort(members.begin(), members.end());
  const std::uint64_t total = 1ULL << p.n();
  std::string line;
  line.reserve(total);
  for (unsigned r = 0; r < p.n(); ++r) {
    line.clear();
    auto skip = members.begin();
    for (std::uint64_t x = 0; x < total; ++x) {
      if (skip != members.end() && skip->bits() == x) {
        ++skip;
        continue;
      }
      line.push_back(((x >> r) & 1U) ? '1' : '0');
    }
    line.push_back('\n');
    out << line;
  }
}

SelftestSummary run_selftest(unsigned n_max, std::ostream* log) {
  if (n_max < 2 || n_max > kMaterializeMaxN)
    throw ParameterError("--n-max must lie in [2, " + std::to_string(kMaterializeMaxN) + "]");
  SelftestSummary s;
  auto fail = [&](const std::string& what) {
    ++s.failures;
    if (!s.first_failure) s.first_failure = what;
  };

  for (unsigned n = 2; n <= n_max; ++n) {
    unsigned at_n = 0;
    for (unsigned m = 1; m < n; ++m) {
      const TwoChainPoset p(m, n);
      for (const IdealSpec& ideal : all_ideals(p)) {
        ++s.instances;
        ++at_n;
        const std::string where = "n=" + std::to_string(n) + " m=" + std::to_string(m) +
                                  " ideal " + ideal.to_string() + ": ";
        const WeightDistribution a = analytic_distribution(p, ideal);
        const std::uint64_t length = analytic_params(p, ideal).length;
        if (!a.is_complete()) fail(where + "frequency mass " + std::to_string(a.total()));
        const WeightDistribution c = oracle::charsum_distribution(p, ideal);
        if (c != a) fail(where + "char-sum " + c.to_string() + " vs closed form " + a.to_string());
        const unsigned dim = dimension_from_distribution(a);
        unsigned rank = 0;
        if (n <= kDirectOracleMaxN) {
          ++s.direct_checked;
          const DefiningSet d = build_defining_set(p, ideal);
          if (d.size() != length) fail(where + "|D| " + std::to_string(d.size()) + " vs length");
          const WeightDistribution w = oracle::direct_distribution(d);
          if (w != a) fail(where + "direct " + w.to_string() + " vs closed form " + a.to_string());
          rank = static_cast<unsigned>(f2_rank(generator_matrix(d)));
        } else {
          rank = defining_set_rank(p, ideal);
        }
        if (rank != dim)
          fail(where + "rank " + std::to_string(rank) + " vs dimension from A_0 " + std::to_string(dim));
      }
    }
    if (log) *log << "n=" << n << ": " << at_n << " instances checked\n";
  }

  for (unsigned n = 2; n <= n_max; ++n) {
    std::vector<FamilyCheck> checks = verify_chain_one_optimality(n, true).checks;
    if (n >= 3) {
      auto more = verify_two_chain_optimality(n, true).checks;
      checks.insert(checks.end(), more.begin(), more.end());
    }
    for (const FamilyCheck& c : checks) {
      ++s.family_checks;
      if (!c.passed) fail("n=" + std::to_string(n) + " " + c.label + ": " + c.detail);
      if (log) *log << "n=" << n << " " << c.label << ": " << (c.passed ? "ok" : "FAIL") << " "
                    << c.detail << '\n';
    }
  }
  return s;
}

}  // namespace posetcodes
