#include "chordgenus/plugs.hpp"

#include "chordgenus/error.hpp"
#include "chordgenus/rng.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace chordgenus {

std::vector<Plug> find_plugs(const PartialDiagram& diagram) {
  std::vector<Plug> out;
  for (auto& seg : decompose(diagram).segments) {
    if (seg.start_dot != seg.end_dot) continue;
    const Sign sign =
        seg.edges.front().sign == seg.edges.back().sign ? Sign::Positive : Sign::Negative;
    const Dot entrance = seg.start_dot;
    out.push_back({std::move(seg), entrance, sign});
  }
  return out;
}

std::set<Dot> neighbors(const PartialDiagram& diagram, Dot d) {
  if (!diagram.is_vacant(d)) {
    throw ChordError(ErrorKind::NotVacant, "dot " + std::to_string(d.label()) + " is occupied");
  }
  std::set<Dot> out;
  for (const auto& seg : decompose(diagram).segments) {
    if (seg.start_dot == d) out.insert(seg.end_dot);
    if (seg.end_dot == d) out.insert(seg.start_dot);
  }
  return out;
}

LemmaVerdict lemma1_check(const PartialDiagram& diagram, Dot a, EdgeRef entering, Dot b,
                          OrientedChord added) {
  const std::uint32_t dots = diagram.dot_count();
  auto fail = [](const std::string& clause) {
    throw ChordError(ErrorKind::PreconditionViolated, clause);
  };
  if (a == b) fail("a and b must be distinct");
  if (!diagram.is_vacant(a)) fail("a must be vacant");
  if (!diagram.is_vacant(b)) fail("b must be vacant");
  const EdgeRef from_below{a.shifted(-1, dots), Sign::Positive};
  const EdgeRef from_above{a.shifted(1, dots), Sign::Negative};
  if (entering != from_below && entering != from_above) fail("entering edge must end at a");
  const bool joins = (added.tail == a && added.head == b) || (added.tail == b && added.head == a);
  if (!joins) fail("added chord must join a and b");

  LemmaVerdict verdict;
  verdict.entering_sign = entering.sign;

  const PartialDiagram extended = diagram.with_chord(added);
  EdgeRef e = entering;
  while (true) {
    const WalkStep next = successor(extended, e);
    if (std::holds_alternative<SegmentEnd>(next)) break;
    e = std::get<NextEdge>(next).edge;
    if (e == entering) break;
    if (e.start == a) verdict.exits_reached.push_back(e);
  }

  for (const auto& seg : decompose(diagram).segments) {
    if (seg.start_dot == seg.end_dot) {
      const bool positive = seg.edges.front().sign == seg.edges.back().sign;
      if (seg.start_dot == b) (positive ? verdict.b_positive_entrance : verdict.b_negative_entrance) = true;
      if (seg.start_dot == a) verdict.a_is_entrance = true;
    }
    if ((seg.start_dot == a && seg.end_dot == b) || (seg.start_dot == b && seg.end_dot == a)) {
      verdict.a_b_neighbors = true;
    }
  }
  return verdict;
}

namespace {

void tally(LemmaSweep& sweep, const LemmaVerdict& v) {
  ++sweep.cases;
  if (v.reaches_exit()) ++sweep.exits_reached;
  if (!v.first_lemma_holds()) ++sweep.first_lemma_counterexamples;
  if (v.second_lemma_applies()) ++sweep.second_lemma_cases;
  if (!v.second_lemma_holds()) ++sweep.second_lemma_counterexamples;
}

/// All (a, entering, b, added) configurations on one partial diagram.
void sweep_configurations(const PartialDiagram& p, LemmaSweep& sweep) {
  const std::uint32_t dots = p.dot_count();
  const auto vacant = p.vacant_dots();
  for (Dot a : vacant) {
    const EdgeRef entering[] = {{a.shifted(-1, dots), Sign::Positive},
                                {a.shifted(1, dots), Sign::Negative}};
    for (Dot b : vacant) {
      if (b == a) continue;
      for (const auto& e : entering) {
        tally(sweep, lemma1_check(p, a, e, b, {a, b}));
        tally(sweep, lemma1_check(p, a, e, b, {b, a}));
      }
    }
  }
}

}  // namespace

LemmaSweep lemma_sweep_exhaustive(std::uint32_t order, std::uint32_t max_chords) {
  LemmaSweep sweep;
  const std::uint32_t dots = 2 * order;
  std::vector<std::pair<std::int64_t, std::int64_t>> chords;
  std::vector<bool> used(dots, false);

  // Each dot, lowest first, is either left vacant or paired with a higher dot.
  std::function<void(std::uint32_t)> recurse = [&](std::uint32_t dot) {
    if (dot == dots) {
      const auto p = make_partial(order, chords);
      if (p.vacant_count() >= 2) sweep_configurations(p, sweep);
      return;
    }
    if (used[dot]) {
      recurse(dot + 1);
      return;
    }
    recurse(dot + 1);
    if (chords.size() == max_chords) return;
    used[dot] = true;
    for (std::uint32_t other = dot + 1; other < dots; ++other) {
      if (used[other]) continue;
      used[other] = true;
      for (bool reversed : {false, true}) {
        const std::int64_t lo = dot + 1;
        const std::int64_t hi = other + 1;
        chords.emplace_back(reversed ? hi : lo, reversed ? lo : hi);
        recurse(dot + 1);
        chords.pop_back();
      }
      used[other] = false;
    }
    used[dot] = false;
  };
  recurse(0);
  return sweep;
}

LemmaSweep lemma_sweep_random(std::uint64_t cases, std::uint64_t seed, std::uint32_t min_order,
                              std::uint32_t max_order) {
  if (min_order < 1 || max_order < min_order) {
    throw ChordError(ErrorKind::PreconditionViolated, "need 1 <= min_order <= max_order");
  }
  LemmaSweep sweep;
  SeededStream rng(seed);
  std::vector<std::uint32_t> labels;
  for (std::uint64_t c = 0; c < cases; ++c) {
    const auto n = static_cast<std::uint32_t>(min_order + rng.below(max_order - min_order + 1));
    const auto k = static_cast<std::uint32_t>(rng.below(n));  // leaves >= 2 vacant dots
    const std::uint32_t dots = 2 * n;
    labels.resize(dots);
    std::iota(labels.begin(), labels.end(), 1u);
    for (std::uint32_t i = dots - 1; i > 0; --i) {
      std::swap(labels[i], labels[rng.below(i + 1)]);
    }
    std::vector<std::pair<std::int64_t, std::int64_t>> chords;
    for (std::uint32_t i = 0; i < k; ++i) chords.emplace_back(labels[2 * i], labels[2 * i + 1]);
    const auto p = make_partial(n, chords);
    const Dot a(labels[2 * k]);
    const Dot b(labels[2 * k + 1 + rng.below(dots - 2 * k - 1)]);
    const EdgeRef e = rng.bit() ? EdgeRef{a.shifted(-1, dots), Sign::Positive}
                                : EdgeRef{a.shifted(1, dots), Sign::Negative};
    const OrientedChord q = rng.bit() ? OrientedChord{a, b} : OrientedChord{b, a};
    tally(sweep, lemma1_check(p, a, e, b, q));
  }
  return sweep;
}

}  // namespace chordgenus
