#pragma once

// Plugs: segments that leave and return to the same vacant dot (the
// entrance). A plug is positive when its first and last edges share a sign.

#include "chordgenus/boundary_walk.hpp"
#include "chordgenus/diagram.hpp"

#include <cstdint>
#include <set>
#include <vector>

namespace chordgenus {

struct Plug {
  Segment segment;
  Dot entrance;
  Sign sign;  // Positive: first and last edges agree
};

std::vector<Plug> find_plugs(const PartialDiagram& diagram);

/// Vacant dots sharing a segment with d (d itself when d is a plug entrance).
std::set<Dot> neighbors(const PartialDiagram& diagram, Dot d);

/// Outcome of adding chord `added` (joining vacant a and b) to `diagram` and
/// walking from the edge `entering` that ends at a.
struct LemmaVerdict {
  /// Exiting edges at a ([a,a+1]+ or [a,a-1]-) reached by the walk, in order.
  std::vector<EdgeRef> exits_reached;
  Sign entering_sign = Sign::Positive;
  bool b_positive_entrance = false;
  bool b_negative_entrance = false;
  bool a_is_entrance = false;
  bool a_b_neighbors = false;

  bool reaches_exit() const { return !exits_reached.empty(); }
  bool b_is_entrance() const { return b_positive_entrance || b_negative_entrance; }
  /// Reaching an exit forces b to be a plug entrance.
  bool first_lemma_holds() const { return !reaches_exit() || b_is_entrance(); }
  /// An exit of the opposite sign to `entering` was reached and b has no positive plug.
  bool second_lemma_applies() const {
    if (b_positive_entrance) return false;
    for (const auto& e : exits_reached) {
      if (e.sign != entering_sign) return true;
    }
    return false;
  }
  /// When it applies: a and b are neighbors, or a is a plug entrance.
  bool second_lemma_holds() const {
    return !second_lemma_applies() || a_b_neighbors || a_is_entrance;
  }
};

/// Throws PreconditionViolated naming the failed clause: a, b vacant and
/// distinct; `entering` is [a-1,a]+ or [a+1,a]-; `added` joins a and b.
LemmaVerdict lemma1_check(const PartialDiagram& diagram, Dot a, EdgeRef entering, Dot b,
                          OrientedChord added);

struct LemmaSweep {
  std::uint64_t cases = 0;
  std::uint64_t exits_reached = 0;
  std::uint64_t second_lemma_cases = 0;
  std::uint64_t first_lemma_counterexamples = 0;
  std::uint64_t second_lemma_counterexamples = 0;
};

/// Every partial diagram of order n with at most max_chords chords and every
/// (a, entering, b, added) satisfying the preconditions.
LemmaSweep lemma_sweep_exhaustive(std::uint32_t order, std::uint32_t max_chords);

/// `cases` random configurations with n drawn from [min_order, max_order] and
/// a uniformly random partial diagram with at least two vacant dots.
LemmaSweep lemma_sweep_random(std::uint64_t cases, std::uint64_t seed, std::uint32_t min_order,
                              std::uint32_t max_order);

}  // namespace chordgenus
