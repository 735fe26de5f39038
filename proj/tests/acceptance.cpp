// Acceptance suite. Usage: acceptance [criterion-number]
// Prints one PASS/FAIL line per criterion; exit status 0 iff all selected
// criteria pass.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "brute.hpp"
#include "cli_process.hpp"
#include "posetcodes/analytic.hpp"
#include "posetcodes/code_builder.hpp"
#include "posetcodes/griesmer.hpp"
#include "posetcodes/oracle.hpp"
#include "posetcodes/report.hpp"

using namespace posetcodes;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool passed = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      notes.push_back("FAILED: " + what);
    }
  }
  void note(const std::string& what) { notes.push_back(what); }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string params_text(std::uint64_t length, unsigned k, std::uint64_t d) {
  std::ostringstream os;
  os << '[' << length << ", " << k << ", " << d << ']';
  return os.str();
}

void check_example(Outcome& out, const IdealSpec& ideal, const std::string& cli_args, std::uint64_t length,
                   std::uint64_t d, const WeightDistribution& expected, const std::string& enumerator,
                   bool timed) {
  const auto p = build_poset(4, 6);
  const auto start = Clock::now();
  const CodeReport r = build_report(p, ideal, VerifyMode::Direct);
  const double elapsed = seconds_since(start);

  out.require(r.consistent(), "closed form and both oracles agree");
  out.require(r.length == length && r.dimension == 6 && r.min_distance == d,
              "parameters " + params_text(length, 6, d) + ", got " +
                  params_text(r.length, r.dimension, r.min_distance));
  out.require(r.distribution == expected, "distribution " + expected.to_string() + ", got " +
                                               r.distribution.to_string());
  out.require(r.weight_enumerator == enumerator, "enumerator " + enumerator);
  out.require(r.verified == Verification::DirectChecked, "verified by the direct oracle");

  const auto direct = oracle::direct_distribution(build_defining_set(p, ideal));
  const auto charsum = oracle::charsum_distribution(p, ideal);
  out.require(direct == expected, "direct oracle reproduces the distribution");
  out.require(charsum == expected, "char-sum oracle reproduces the distribution");

  if (timed) {
    out.require(elapsed < 1.0, "in-process runtime < 1 s, took " + std::to_string(elapsed));
    out.note("in-process runtime " + std::to_string(elapsed) + " s");
  }

  const auto cli_start = Clock::now();
  const ProcessResult cli = run_cli(cli_args);
  const double cli_elapsed = seconds_since(cli_start);
  out.require(cli.exit_code == 0, "`" + cli_args + "` exits 0");
  out.require(cli.out.find(params_text(length, 6, d)) != std::string::npos, "CLI reports parameters");
  out.require(cli.out.find(enumerator) != std::string::npos, "CLI reports the enumerator");
  if (timed) {
    out.require(cli_elapsed < 1.0, "CLI runtime < 1 s, took " + std::to_string(cli_elapsed));
    out.note("CLI runtime " + std::to_string(cli_elapsed) + " s");
  }
}

Outcome criterion_1() {
  Outcome out;
  check_example(out, IdealSpec::chain_one(4), "construct --n 6 --m 4 --i 4", 59, 28,
                WeightDistribution(6, {{0, 1}, {28, 4}, {29, 16}, {30, 24}, {31, 16}, {32, 3}}),
                "1 + 4z^28 + 16z^29 + 24z^30 + 16z^31 + 3z^32", true);
  return out;
}

Outcome criterion_2() {
  Outcome out;
  check_example(
      out, IdealSpec::both(3, 6), "construct --n 6 --m 4 --i 3 --j 6", 52, 23,
      WeightDistribution(6, {{0, 1}, {23, 2}, {24, 2}, {25, 10}, {26, 24}, {27, 14}, {28, 4}, {29, 6}, {32, 1}}),
      "1 + 2z^23 + 2z^24 + 10z^25 + 24z^26 + 14z^27 + 4z^28 + 6z^29 + z^32", false);
  return out;
}

Outcome criterion_3() {
  Outcome out;
  const auto start = Clock::now();
  unsigned instances = 0;
  unsigned distribution_failures = 0;
  std::vector<std::string> rank_failures;
  for (unsigned n = 2; n <= 12; ++n)
    for (unsigned m = 1; m < n; ++m) {
      const auto p = build_poset(m, n);
      for (const auto& ideal : all_ideals(p)) {
        ++instances;
        const std::string where =
            "n=" + std::to_string(n) + " m=" + std::to_string(m) + " " + ideal.to_string();
        const auto analytic = analytic_distribution(p, ideal);
        const auto charsum = oracle::charsum_distribution(p, ideal);
        const auto d = build_defining_set(p, ideal);
        const auto direct = oracle::direct_distribution(d);
        if (analytic != charsum || analytic != direct) {
          ++distribution_failures;
          out.require(false, where + ": closed form " + analytic.to_string() + ", char-sum " +
                                 charsum.to_string() + ", direct " + direct.to_string());
        }
        const auto rank = f2_rank(generator_matrix(d));
        if (rank != n) rank_failures.push_back(where + " rank " + std::to_string(rank) + " (|D|=" +
                                               std::to_string(d.size()) + ")");
      }
    }
  out.note(std::to_string(instances) + " instances, " + std::to_string(distribution_failures) +
           " distribution mismatches, " + std::to_string(rank_failures.size()) + " with rank != n");
  for (const auto& f : rank_failures) out.require(false, "f2_rank == n at " + f);
  out.note("elapsed " + std::to_string(seconds_since(start)) + " s");
  return out;
}

std::optional<WeightDistribution> oracle_for(const TwoChainPoset& p, const IdealSpec& ideal) {
  if (p.n() <= kDirectOracleMaxN) return oracle::direct_distribution(build_defining_set(p, ideal));
  return oracle::charsum_distribution(p, ideal);
}

void check_instance(Outcome& out, unsigned n, unsigned m, const IdealSpec& ideal, std::uint64_t length,
                    std::uint64_t d, OptimalityKind kind) {
  const auto p = build_poset(m, n);
  const std::string where = "n=" + std::to_string(n) + " m=" + std::to_string(m) + " " + ideal.to_string();
  const auto params = analytic_params(p, ideal);
  const auto dist = analytic_distribution(p, ideal);
  const auto observed_d = min_distance(dist);
  out.require(params.length == length, where + ": length " + std::to_string(length) + ", got " +
                                           std::to_string(params.length));
  out.require(observed_d == d, where + ": d " + std::to_string(d) + ", got " + std::to_string(observed_d));
  const auto oracle = oracle_for(p, ideal);
  out.require(oracle && min_distance(*oracle) == observed_d, where + ": oracle confirms d");
  const auto cls = classify(params.length, params.dimension, observed_d);
  out.require(cls.kind == kind, where + ": class " + std::string(to_string(kind)) + ", got " +
                                    std::string(to_string(cls.kind)) + " (" + cls.rationale + ")");
}

Outcome criterion_4() {
  Outcome out;
  const OptimalityKind kinds[] = {OptimalityKind::Griesmer, OptimalityKind::DistanceOptimalByGriesmer,
                                  OptimalityKind::AlmostOptimalByGriesmer};
  unsigned checked = 0;
  for (unsigned n = 3; n <= 12; ++n)
    for (unsigned i = 1; i <= 3; ++i) {
      if (i >= n) {
        out.note("n=" + std::to_string(n) + " i=" + std::to_string(i) + ": no poset with i <= m < n, skipped");
        continue;
      }
      check_instance(out, n, i, IdealSpec::chain_one(i), (1ULL << n) - i - 1, (1ULL << (n - 1)) - i,
                     kinds[i - 1]);
      ++checked;
    }
  out.note(std::to_string(checked) + " instances");
  return out;
}

Outcome criterion_5() {
  Outcome out;
  for (unsigned n = 3; n <= 12; ++n) {
    const std::uint64_t full = 1ULL << n;
    const std::uint64_t half = 1ULL << (n - 1);
    check_instance(out, n, 2, IdealSpec::both(1, 3), full - 4, half - 2, OptimalityKind::Griesmer);
    if (n < 4) continue;
    check_instance(out, n, 2, IdealSpec::both(2, 3), full - 6, half - 3,
                   OptimalityKind::DistanceOptimalByGriesmer);
    check_instance(out, n, 2, IdealSpec::both(2, 4), full - 9, half - 6,
                   OptimalityKind::AlmostOptimalByGriesmer);
    out.require(griesmer_sum(n, half - 5) == full - 9, "griesmer_sum(n, 2^(n-1)-5) = 2^n-9 at n=" + std::to_string(n));
  }
  return out;
}

Outcome criterion_6() {
  Outcome out;
  out.require(griesmer_sum(6, 29) == 59, "griesmer_sum(6, 29) = 59");
  for (unsigned n = 4; n <= 10; ++n)
    out.require(griesmer_sum(n, (1ULL << (n - 1)) - 1) == (1ULL << n) - 2,
                "griesmer_sum(n, 2^(n-1)-1) = 2^n-2 at n=" + std::to_string(n));
  for (unsigned k = 1; k <= 16; ++k)
    out.require(griesmer_sum(k, 1ULL << (k - 1)) == (1ULL << k) - 1,
                "griesmer_sum(k, 2^(k-1)) = 2^k-1 at k=" + std::to_string(k));
  return out;
}

Outcome criterion_7() {
  Outcome out;
  // Frequency mass on every distribution the library constructs.
  unsigned masses = 0;
  for (unsigned n = 2; n <= 12; ++n)
    for (unsigned m = 1; m < n; ++m) {
      const auto p = build_poset(m, n);
      for (const auto& ideal : all_ideals(p)) {
        const std::uint64_t full = 1ULL << n;
        const auto d = build_defining_set(p, ideal);
        for (const auto& w : {analytic_distribution(p, ideal), oracle::charsum_distribution(p, ideal),
                              oracle::direct_distribution(d)}) {
          ++masses;
          if (w.total() != full)
            out.require(false, "mass 2^n at n=" + std::to_string(n) + " " + ideal.to_string());
        }
      }
    }
  out.note(std::to_string(masses) + " distributions with mass 2^n");

  // Linearity on 1000 random (u, v) pairs.
  std::mt19937_64 rng(7);
  unsigned linear_failures = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const unsigned n = 2 + static_cast<unsigned>(rng() % 11);
    const unsigned m = 1 + static_cast<unsigned>(rng() % (n - 1));
    const auto p = build_poset(m, n);
    const auto ideals = all_ideals(p);
    const auto d = build_defining_set(p, ideals[rng() % ideals.size()]);
    const std::uint64_t mask = (1ULL << n) - 1;
    const BitVector u{rng() & mask};
    const BitVector v{rng() & mask};
    if (codeword(u ^ v, d) != (codeword(u, d) ^ codeword(v, d))) ++linear_failures;
  }
  out.require(linear_failures == 0, "codeword linearity on 1000 random pairs");

  // Closed form vs member sum on every sign vector, n <= 12.
  unsigned long long evaluations = 0;
  unsigned closed_form_failures = 0;
  for (unsigned n = 2; n <= 12; ++n)
    for (unsigned m = 1; m < n; ++m) {
      const auto p = build_poset(m, n);
      const auto down_sets = brute::all_down_sets(m, n);
      for (const auto& ideal : all_ideals(p)) {
        const std::uint64_t top = ideal.as_set(p).bits();
        std::vector<std::uint64_t> fam;
        for (std::uint64_t s : down_sets)
          if ((s & ~top) == 0) fam.push_back(s);
        std::vector<int> signs(n);
        for (std::uint64_t u = 0; u < (1ULL << n); ++u) {
          long long expected = 0;
          for (std::uint64_t member : fam) expected += (brute::bit_count(member & u) & 1U) ? -1 : 1;
          for (unsigned k = 0; k < n; ++k) signs[k] = ((u >> k) & 1U) ? -1 : 1;
          ++evaluations;
          if (generating_value(p, ideal, signs) != expected ||
              generating_value_at(p, ideal, BitVector{u}) != expected)
            ++closed_form_failures;
        }
      }
    }
  out.require(closed_form_failures == 0, "generating polynomial closed form == member sum");
  out.note(std::to_string(evaluations) + " sign-vector evaluations");

  // Every down-set is empty or one of the three forms, n <= 10.
  for (unsigned n = 2; n <= 10; ++n)
    for (unsigned m = 1; m < n; ++m) {
      const auto p = build_poset(m, n);
      std::vector<std::uint64_t> forms;
      for (const auto& ideal : all_ideals(p)) forms.push_back(ideal.as_set(p).bits());
      std::sort(forms.begin(), forms.end());
      auto census = brute::all_down_sets(m, n);
      for (std::uint64_t s = 0; s < (1ULL << n); ++s)
        if (p.is_down_set(BitVector{s}) != std::binary_search(census.begin(), census.end(), s))
          out.require(false, "is_down_set agrees with brute force at n=" + std::to_string(n));
      out.require(census == forms, "down-set census at m=" + std::to_string(m) + " n=" + std::to_string(n));
    }
  return out;
}

Outcome criterion_8() {
  Outcome out;
  const ProcessResult self = run_cli("selftest --n-max 10 --quiet");
  out.require(self.exit_code == 0, "`selftest --n-max 10` exits 0");
  out.note(self.out.substr(0, self.out.find('\n')));

  const auto dir = fs::temp_directory_path() / "posetcodes_acceptance";
  fs::create_directories(dir);
  const auto path = dir / "matrix.txt";
  const ProcessResult mat = run_cli("matrix --n 2 --m 1 --i 1 --out '" + path.string() + "'");
  out.require(mat.exit_code == 0, "`matrix --n 2 --m 1 --i 1` exits 0");
  auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
  };
  out.require(slurp(path) == slurp(fs::path(POSETCODES_FIXTURES) / "matrix_n2_m1_i1.txt"),
              "matrix file is byte-identical to the fixture");
  return out;
}

struct Criterion {
  int id;
  const char* title;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {1, "ideal [4] in m=4, n=6: [59, 6, 28] and its distribution", criterion_1},
      {2, "ideal [3] u ([6]\\[4]): [52, 6, 23] and its distribution", criterion_2},
      {3, "closed form == char-sum == direct, rank == n, all points n <= 12", criterion_3},
      {4, "ideal [i], i = 1, 2, 3: Griesmer / distance-optimal / almost-optimal, n = 3..12", criterion_4},
      {5, "two-chain families (m,i,j) = (2,1,3), (2,2,3), (2,2,4), n <= 12", criterion_5},
      {6, "Griesmer sum identities", criterion_6},
      {7, "property suite: mass, linearity, closed form, down-set census", criterion_7},
      {8, "determinism: selftest --n-max 10, matrix fixture", criterion_8},
  };

  const int only = argc > 1 ? std::atoi(argv[1]) : 0;
  bool all_passed = true;
  for (const auto& c : criteria) {
    if (only != 0 && c.id != only) continue;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    for (const auto& note : o.notes) std::cout << "    " << note << '\n';
    std::cout << (o.passed ? "[PASS] " : "[FAIL] ") << "criterion " << c.id << ": " << c.title << '\n';
    all_passed = all_passed && o.passed;
  }
  return all_passed ? 0 : 1;
}
