#pragma once

// Chord-by-chord uniform generation.
//
// The pointer starts at e_1 = [1,2]+. Each step joins the concluding dot p of
// the pointer's segment to a uniformly chosen other vacant dot b, with a
// uniformly chosen orientation. When the pointer's segment closes into a loop
// the pointer moves to the first edge (in edge_order) that still lies in a
// segment. After n steps every edge is in a loop and there is no pointer.
//
// Random draws per step, in order: index into the sorted list of vacant dots
// other than p, then one bit (set: chord (b, p), clear: chord (p, b)).

#include "chordgenus/boundary_walk.hpp"
#include "chordgenus/detail/edges.hpp"
#include "chordgenus/diagram.hpp"
#include "chordgenus/rng.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace chordgenus {

struct Closure {
  std::uint32_t step;  // 1-based
  std::uint32_t loop_size;
  std::uint32_t edge_count;

  friend constexpr bool operator==(const Closure&, const Closure&) = default;
};

struct StepEvent {
  OrientedChord chosen_chord;
  std::optional<Loop> closed_loop;     // the pointer's segment closed at this step
  std::optional<EdgeRef> new_pointer;  // set when closed and steps remain
  std::uint32_t positive_plugs_completed = 0;
  std::uint32_t negative_plugs_completed = 0;
};

/// Which plug kinds have a given vacant dot as entrance.
struct EntranceKinds {
  bool positive = false;
  bool negative = false;
};

class ProcedureState {
 public:
  ProcedureState(std::uint32_t order, std::uint64_t seed);

  std::uint32_t order() const noexcept { return order_; }
  std::uint32_t steps_taken() const noexcept { return static_cast<std::uint32_t>(chords_.size()); }
  bool complete() const noexcept { return chords_.size() == order_; }

  std::optional<EdgeRef> pointer() const;
  /// Initial and concluding dots q, p of the pointer's segment. Not complete.
  Dot initial_dot() const;
  Dot concluding_dot() const;
  /// Vacant dots other than p, sorted: the choices for the next chord's second dot.
  std::vector<Dot> eligible_dots() const;

  /// One random step.
  StepEvent step();
  /// One step with the second dot forced to eligible_dots()[choice] and the
  /// orientation forced to (b, p) when `reversed`, otherwise (p, b).
  StepEvent apply(std::uint32_t choice, bool reversed);

  PartialDiagram partial() const;
  std::span<const OrientedChord> chords() const noexcept { return chords_; }
  std::span<const Closure> closures() const noexcept { return closures_; }

  std::uint32_t positive_plugs() const noexcept { return positive_plugs_; }
  std::uint32_t negative_plugs() const noexcept { return negative_plugs_; }
  std::uint32_t plug_count() const noexcept { return positive_plugs_ + negative_plugs_; }
  /// Plugs other than the pointer's own segment whose entrance is the
  /// concluding dot p. Both false once complete.
  EntranceKinds concluding_dot_entrances() const;

 private:
  std::int32_t select_vacant(std::uint32_t rank) const;
  std::uint32_t vacant_rank(std::int32_t dot) const;
  void fenwick_add(std::int32_t dot, std::int32_t delta);
  std::int32_t concluding() const { return m_.end(seg_last_[pointer_first_]); }
  Loop mark_loop(std::int32_t first, bool keep_edges);

  std::uint32_t order_;
  detail::EdgeMath m_;
  SeededStream rng_;

  std::vector<std::int32_t> partner_;
  std::vector<std::uint8_t> is_tail_;
  std::vector<std::int32_t> next_;
  std::vector<std::int32_t> prev_;
  // Valid only at segment boundaries: seg_last_ at a segment's first edge,
  // seg_first_ at its last edge.
  std::vector<std::int32_t> seg_last_;
  std::vector<std::int32_t> seg_first_;
  std::vector<std::uint8_t> in_loop_;
  std::vector<std::int32_t> fenwick_;
  std::vector<std::uint32_t> chord_stamp_;
  std::uint32_t stamp_ = 0;
  std::int32_t cursor_ = 0;

  std::int32_t pointer_ = 0;
  std::int32_t pointer_first_ = 0;

  std::uint32_t positive_plugs_ = 0;
  std::uint32_t negative_plugs_ = 0;

  std::vector<OrientedChord> chords_;
  std::vector<Closure> closures_;
};

inline ProcedureState init_procedure(std::uint32_t order, std::uint64_t seed) {
  return ProcedureState(order, seed);
}

/// The segment of decompose(state.partial()) that contains the pointer.
/// Throws PointerInLoop if the pointer is not in a segment.
Segment pointer_segment(const ProcedureState& state);

struct RunResult {
  Diagram diagram;
  std::vector<Closure> closures;
};

RunResult run_procedure(std::uint32_t order, std::uint64_t seed);

struct Choice {
  Dot second_dot;
  bool reversed;  // chord is (second_dot, p) rather than (p, second_dot)

  friend constexpr bool operator==(const Choice&, const Choice&) = default;
};

struct ChoiceLeaf {
  std::vector<Choice> path;
  Diagram diagram;
};

/// Every sequence of choices of the procedure and its leaf diagram. n <= 4.
std::vector<ChoiceLeaf> choice_tree(std::uint32_t order);

}  // namespace chordgenus
