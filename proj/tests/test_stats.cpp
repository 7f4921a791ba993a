#include "chordgenus/bounds.hpp"
#include "chordgenus/error.hpp"
#include "chordgenus/procedure.hpp"
#include "chordgenus/rng.hpp"
#include "chordgenus/stats.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace chordgenus;

namespace {

oracle::Chords as_pairs(const PartialDiagram& d) {
  oracle::Chords out;
  for (const auto& c : d.chords()) out.push_back({c.tail.label(), c.head.label()});
  std::sort(out.begin(), out.end());
  return out;
}

/// Exact stats recomputed from the permutation enumerator and the attachment-table walk.
struct OracleStats {
  Rational d_mean;
  std::map<std::uint32_t, Rational> loops_by_size;
  std::map<std::uint32_t, std::uint64_t> genus;
};

OracleStats oracle_stats(std::int64_t n) {
  const auto all = oracle::all_diagrams(n);
  std::int64_t sum_d = 0;
  std::map<std::uint32_t, std::int64_t> loops;
  OracleStats out;
  for (const auto& c : all) {
    const auto ls = oracle::loops(n, c);
    sum_d += static_cast<std::int64_t>(ls.size());
    for (const auto& [size, edges] : ls) ++loops[size];
    ++out.genus[static_cast<std::uint32_t>((n + 2 - static_cast<std::int64_t>(ls.size())) / 2)];
  }
  const auto count = static_cast<std::int64_t>(all.size());
  out.d_mean = Rational(sum_d, count);
  for (std::uint32_t k = 1; k <= n; ++k) out.loops_by_size[k] = Rational(loops[k], count);
  return out;
}

}  // namespace

TEST_CASE("enumerate_diagrams visits each diagram once") {
  std::vector<std::string> n1;
  CHECK(enumerate_diagrams(1, [&](const Diagram& d) { n1.push_back(format_diagram(d)); }) == 2);
  CHECK(n1 == std::vector<std::string>{"n=1;(1,2)", "n=1;(2,1)"});

  for (std::int64_t n = 2; n <= 4; ++n) {
    std::set<oracle::Chords> seen;
    const auto visits = enumerate_diagrams(static_cast<std::uint32_t>(n),
                                           [&](const Diagram& d) { seen.insert(as_pairs(d)); });
    CHECK(visits == seen.size());
    CHECK(seen == oracle::all_diagrams(n));
  }
  CHECK(enumerate_diagrams(5, [](const Diagram&) {}) == 30240);
  CHECK_THROWS_AS(enumerate_diagrams(8, [](const Diagram&) {}), ChordError);
  CHECK_THROWS_AS(enumerate_diagrams(0, [](const Diagram&) {}), ChordError);
}

TEST_CASE("exact_stats for n = 1") {
  const ExactStats s = exact_stats(1);
  CHECK(s.count == 2);
  CHECK(s.d_mean == Rational(3));
  CHECK(s.genus_histogram == std::map<std::uint32_t, std::uint64_t>{{0, 2}});
  CHECK(s.loops_by_size.at(1) == Rational(3));
  CHECK(s.genus_mean() == Rational(0));
}

TEST_CASE("exact_stats matches the oracle enumeration") {
  for (std::int64_t n = 2; n <= 4; ++n) {
    const auto expected = oracle_stats(n);
    const ExactStats s = exact_stats(static_cast<std::uint32_t>(n));
    CHECK(s.d_mean == expected.d_mean);
    CHECK(s.loops_by_size == expected.loops_by_size);
    CHECK(s.genus_histogram == expected.genus);
    CHECK(s.count == diagram_count(static_cast<std::uint32_t>(n)));
  }
  CHECK_THROWS_AS(exact_stats(8), ChordError);
}

TEST_CASE("exact_stats does not depend on the thread count") {
  const ExactStats a = exact_stats(5, 1);
  const ExactStats b = exact_stats(5, 4);
  CHECK(a.d_mean == b.d_mean);
  CHECK(a.genus_histogram == b.genus_histogram);
  CHECK(a.loops_by_size == b.loops_by_size);
}

TEST_CASE("choice tree averages reproduce the exact d_n") {
  for (std::uint32_t n = 1; n <= 3; ++n) {
    std::int64_t sum = 0;
    const auto leaves = choice_tree(n);
    for (const auto& leaf : leaves) sum += boundary_count(leaf.diagram);
    CHECK(Rational(sum, static_cast<std::int64_t>(leaves.size())) == exact_stats(n).d_mean);
  }
}

TEST_CASE("exact reports: all rows exact and passing") {
  for (std::uint32_t n = 1; n <= 5; ++n) {
    const auto report = bound_report(exact_stats(n));
    CHECK_FALSE(report.has_failure());
    CHECK(report.count(CheckStatus::Insufficient) == 0);
    for (const auto& c : report.checks) CHECK_FALSE(c.se.has_value());
  }
}

TEST_CASE("accumulator merge is associative and order-independent") {
  const std::uint32_t n = 12;
  std::vector<McAccumulator> parts;
  for (int i = 0; i < 3; ++i) {
    McAccumulator acc(n);
    for (std::uint64_t s = 0; s < 40; ++s) {
      const auto run = run_procedure(n, derive_seed(static_cast<std::uint64_t>(i), s));
      auto loops = oracle::loops(n, as_pairs(run.diagram));
      acc.add_sample(loops);
    }
    parts.push_back(acc);
  }
  McAccumulator left = parts[0];
  left.merge(parts[1]);
  left.merge(parts[2]);
  McAccumulator right = parts[1];
  right.merge(parts[2]);
  McAccumulator right_all = parts[0];
  right_all.merge(right);
  McAccumulator reversed = parts[2];
  reversed.merge(parts[1]);
  reversed.merge(parts[0]);
  CHECK(left == right_all);
  CHECK(left == reversed);
  CHECK(left.samples() == 120);
  CHECK_THROWS_AS(left.merge(McAccumulator(n + 1)), ChordError);
}

TEST_CASE("mc_stats: per-sample observables and determinism") {
  const std::uint32_t n = 30;
  const std::uint64_t samples = 200;
  const McStats one = mc_stats(n, samples, 42, 1);
  const McStats three = mc_stats(n, samples, 42, 3);
  CHECK(one.totals == three.totals);
  CHECK(one.d_mean == three.d_mean);

  // Same estimate from the oracle walk of each generated diagram.
  std::uint64_t sum_d = 0;
  std::vector<std::uint64_t> loops(n + 1, 0);
  for (std::uint64_t i = 0; i < samples; ++i) {
    const auto run = run_procedure(n, derive_seed(42, i));
    for (const auto& [size, edges] : oracle::loops(n, as_pairs(run.diagram))) {
      ++sum_d;
      ++loops[size];
    }
  }
  CHECK(one.totals.sum_d() == sum_d);
  CHECK(one.totals.loops() == loops);
  CHECK(one.d_mean == doctest::Approx(static_cast<double>(sum_d) / samples));

  std::uint64_t edges = 0;
  for (auto e : one.totals.edges()) edges += e;
  CHECK(edges == 4ULL * n * samples);

  double l_sum = 0;
  double p_sum = 0;
  for (const auto& row : one.rows) {
    l_sum += row.loops.value;
    p_sum += row.edge_share.value;
  }
  CHECK(l_sum == doctest::Approx(one.d_mean));
  CHECK(p_sum == doctest::Approx(1.0));
  CHECK(one.ci99_lo < one.d_mean);
  CHECK(one.ci99_hi > one.d_mean);
  CHECK_THROWS_AS(mc_stats(n, 0, 1), ChordError);
}

TEST_CASE("mc_stats at n = 2 agrees with the exact mean") {
  const McStats s = mc_stats(2, 100000, 7, 1);
  const double exact = boost::rational_cast<double>(exact_stats(2).d_mean);
  CHECK(std::abs(s.d_mean - exact) < 3 * s.d_se());
}

TEST_CASE("checked_size_limit") {
  CHECK(checked_size_limit(1) == 1);
  CHECK(checked_size_limit(50) == 7);
  CHECK(checked_size_limit(10000) == 100);
  CHECK(checked_size_limit(1000000) == 10000);
  const McStats s = mc_stats(100, 20, 3, 1);
  for (std::uint32_t k = 1; k <= 10; ++k) {
    CHECK(std::any_of(s.rows.begin(), s.rows.end(), [&](const SizeRow& r) { return r.k == k; }));
  }
}

TEST_CASE("plug_mc_stats rows and determinism") {
  const PlugStats a = plug_mc_stats(200, 20, 300, 9, 1);
  const PlugStats b = plug_mc_stats(200, 20, 300, 9, 2);
  REQUIRE(a.rows.size() == 20);
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    CHECK(a.rows[i].k == i + 1);
    CHECK(a.rows[i].plugs.value == b.rows[i].plugs.value);
    CHECK(a.rows[i].negative_entrance.value == b.rows[i].negative_entrance.value);
    CHECK(a.rows[i].positive_entrance.value >= 0);
    CHECK(a.rows[i].positive_entrance.value <= 1);
  }
  CHECK_THROWS_AS(plug_mc_stats(10, 11, 5, 1), ChordError);
  CHECK_THROWS_AS(plug_mc_stats(10, 5, 0, 1), ChordError);
}

TEST_CASE("plug_mc_stats matches a direct replay of the runs") {
  const std::uint32_t n = 40;
  const std::uint32_t k_max = 10;
  const std::uint64_t runs = 150;
  const PlugStats s = plug_mc_stats(n, k_max, runs, 77, 1);
  std::vector<double> plugs(k_max + 1, 0), hp(k_max + 1, 0);
  for (std::uint64_t r = 0; r < runs; ++r) {
    ProcedureState state(n, derive_seed(77, r));
    for (std::uint32_t k = 1; k <= k_max; ++k) {
      state.step();
      plugs[k] += state.plug_count();
      hp[k] += state.concluding_dot_entrances().positive;
    }
  }
  for (std::uint32_t k = 1; k <= k_max; ++k) {
    CHECK(s.rows[k - 1].plugs.value == doctest::Approx(plugs[k] / runs));
    CHECK(s.rows[k - 1].positive_entrance.value == doctest::Approx(hp[k] / runs));
  }
}

TEST_CASE("bound report statuses") {
  const McStats small = mc_stats(60, 50, 1, 1);
  const auto report = bound_report(small);
  bool has_sandwich = false;
  for (const auto& c : report.checks) has_sandwich |= c.name.rfind("k L_k/4n", 0) == 0;
  CHECK(has_sandwich);
  CHECK_FALSE(report.has_failure());
  const std::string text = format_report(report);
  CHECK(text.find("summary:") != std::string::npos);
}
