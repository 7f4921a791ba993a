#include "chordgenus/error.hpp"
#include "chordgenus/plugs.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace chordgenus;

namespace {

EdgeRef pos(std::uint32_t s) { return {Dot(s), Sign::Positive}; }
EdgeRef neg(std::uint32_t s) { return {Dot(s), Sign::Negative}; }

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const ChordError& e) {
    return e.kind();
  }
  FAIL("expected a ChordError");
  return ErrorKind::IoError;
}

}  // namespace

TEST_CASE("find_plugs: a chord over one dot makes a positive plug") {
  const auto plugs = find_plugs(parse_diagram("n=3;(1,3)"));
  REQUIRE(plugs.size() == 1);
  CHECK(plugs[0].entrance == Dot(2));
  CHECK(plugs[0].sign == Sign::Positive);
  CHECK(plugs[0].segment.edges == std::vector<EdgeRef>{neg(2), neg(3)});
}

TEST_CASE("find_plugs: two crossing chords make a negative plug") {
  // The mirror image through dot 6 is a second negative plug.
  const auto plugs = find_plugs(parse_diagram("n=3;(2,4),(5,3)"));
  REQUIRE(plugs.size() == 2);
  CHECK(plugs[0].entrance == Dot(1));
  CHECK(plugs[0].sign == Sign::Negative);
  CHECK(plugs[0].segment.edges == std::vector<EdgeRef>{pos(1), pos(4), pos(3), neg(2)});
  CHECK(plugs[1].entrance == Dot(6));
  CHECK(plugs[1].sign == Sign::Negative);
}

TEST_CASE("find_plugs: none without chords or on full diagrams") {
  CHECK(find_plugs(parse_diagram("n=2;")).empty());
  CHECK(find_plugs(parse_diagram("(1,3),(2,4)")).empty());
}

TEST_CASE("neighbors") {
  const auto empty = parse_diagram("n=2;");
  CHECK(neighbors(empty, Dot(1)) == std::set<Dot>{Dot(2), Dot(4)});
  const auto one = parse_diagram("n=3;(1,3)");
  CHECK(neighbors(one, Dot(2)).count(Dot(2)) == 1);
  CHECK(kind_of([&] { neighbors(one, Dot(1)); }) == ErrorKind::NotVacant);
}

TEST_CASE("plug properties on random partial diagrams") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 500; ++trial) {
    const std::int64_t n = 2 + static_cast<std::int64_t>(rng() % 10);
    const std::int64_t k = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(n));
    const auto p = make_partial(static_cast<std::uint32_t>(n), oracle::random_partial(n, k, rng));
    const auto parts = decompose(p);
    std::map<std::uint32_t, std::set<Sign>> signs_at;
    for (const auto& plug : find_plugs(p)) {
      CHECK(p.is_vacant(plug.entrance));
      CHECK(plug.segment.start_dot == plug.entrance);
      CHECK(plug.segment.end_dot == plug.entrance);
      const bool found = std::any_of(parts.segments.begin(), parts.segments.end(),
                                     [&](const Segment& s) { return s.edges == plug.segment.edges; });
      CHECK(found);
      CHECK(neighbors(p, plug.entrance).count(plug.entrance) == 1);
      signs_at[plug.entrance.label()].insert(plug.sign);
    }
    // Two plugs at one entrance share a sign.
    for (const auto& [dot, signs] : signs_at) CHECK(signs.size() == 1);
    for (Dot d : p.vacant_dots()) CHECK(neighbors(p, d).size() <= 4);
  }
}

TEST_CASE("lemma1_check preconditions") {
  const auto p = parse_diagram("n=3;(1,3)");
  CHECK(kind_of([&] { lemma1_check(p, Dot(2), pos(1), Dot(2), {Dot(2), Dot(2)}); }) ==
        ErrorKind::PreconditionViolated);
  CHECK(kind_of([&] { lemma1_check(p, Dot(1), pos(6), Dot(2), {Dot(1), Dot(2)}); }) ==
        ErrorKind::PreconditionViolated);
  CHECK(kind_of([&] { lemma1_check(p, Dot(4), pos(1), Dot(2), {Dot(4), Dot(2)}); }) ==
        ErrorKind::PreconditionViolated);
  CHECK(kind_of([&] { lemma1_check(p, Dot(4), pos(3), Dot(2), {Dot(4), Dot(5)}); }) ==
        ErrorKind::PreconditionViolated);
}

TEST_CASE("lemma1_check: closing through a plug entrance") {
  // Dot 2 is the entrance of the plug [2,1]- [3,2]-. Joining a = 4 to it by
  // (2,4) sends [3,4]+ through the plug and out along [4,3]-, then on to
  // the other exit [4,5]+.
  const auto p = parse_diagram("n=3;(1,3)");
  const auto v = lemma1_check(p, Dot(4), pos(3), Dot(2), {Dot(2), Dot(4)});
  CHECK(v.exits_reached == std::vector<EdgeRef>{neg(4), pos(4)});
  CHECK(v.b_positive_entrance);
  CHECK_FALSE(v.b_negative_entrance);
  CHECK(v.first_lemma_holds());
  CHECK_FALSE(v.second_lemma_applies());

  const auto w = lemma1_check(p, Dot(4), pos(3), Dot(2), {Dot(4), Dot(2)});
  CHECK_FALSE(w.reaches_exit());
}

TEST_CASE("lemma sweeps find no counterexamples on small cases") {
  const auto small = lemma_sweep_exhaustive(2, 1);
  CHECK(small.cases > 0);
  CHECK(small.first_lemma_counterexamples == 0);
  CHECK(small.second_lemma_counterexamples == 0);

  const auto three = lemma_sweep_exhaustive(3, 1);
  CHECK(three.exits_reached > 0);
  CHECK(three.first_lemma_counterexamples == 0);
  CHECK(three.second_lemma_counterexamples == 0);

  const auto random = lemma_sweep_random(2000, 5, 3, 9);
  CHECK(random.cases == 2000);
  CHECK(random.first_lemma_counterexamples == 0);
  CHECK(random.second_lemma_counterexamples == 0);
  CHECK_THROWS_AS(lemma_sweep_random(1, 1, 0, 3), ChordError);
}
