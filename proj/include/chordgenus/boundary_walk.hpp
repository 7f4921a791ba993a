#pragma once

// Boundary walk on the glued annulus.
//
// Gluing the squares of a chord (a, b) attaches the end of one boundary edge
// to the start of another:
//   [a-1,a] - [b,b+1],  [b+1,b] - [a,a+1],  [a+1,a] - [b,b-1],  [b-1,b] - [a,a-1].
// Equivalently, arriving at an occupied dot y whose partner is z, continue
// from z with the same sign when y is the tail and the opposite sign when y is
// the head. Following attachments splits the 4n edges into loops (closed
// boundary components) and segments (maximal paths between vacant dots).

#include "chordgenus/detail/edges.hpp"
#include "chordgenus/diagram.hpp"

#include <cstdint>
#include <variant>
#include <vector>

namespace chordgenus {

struct NextEdge {
  EdgeRef edge;
  friend constexpr bool operator==(const NextEdge&, const NextEdge&) = default;
};

struct SegmentEnd {
  Dot dot;
  friend constexpr bool operator==(const SegmentEnd&, const SegmentEnd&) = default;
};

using WalkStep = std::variant<NextEdge, SegmentEnd>;

struct Loop {
  std::vector<EdgeRef> edges;  // cyclic, starting at the edge first in edge_order
  std::size_t size = 0;        // distinct chords visited

  std::size_t edge_count() const noexcept { return edges.size(); }
};

struct Segment {
  std::vector<EdgeRef> edges;
  Dot start_dot;  // vacant
  Dot end_dot;    // vacant

  std::size_t edge_count() const noexcept { return edges.size(); }
};

struct WalkDecomposition {
  std::vector<Loop> loops;        // ordered by first edge
  std::vector<Segment> segments;  // ordered by first edge
};

WalkStep successor(const PartialDiagram& diagram, EdgeRef e);

WalkDecomposition decompose(const PartialDiagram& diagram);

/// d(D): number of boundary components of the glued surface.
std::uint32_t boundary_count(const Diagram& diagram);

/// g(D) = (n + 2 - d(D)) / 2.
std::uint32_t genus(const Diagram& diagram);

/// d(D) computed by gluing endpoint markers with a union-find, without the
/// successor rule. Used as an independent check on boundary_count.
std::uint32_t gluing_oracle_d(const Diagram& diagram);

namespace detail {

/// Reusable scratch for walking all loops of full diagrams without allocating.
class LoopWalker {
 public:
  /// Calls visit(size, edge_count) once per loop, in edge order of the loop's
  /// first edge. partner/is_tail are the 0-based tables of a full diagram.
  template <typename Visit>
  void walk(std::int32_t dots, const std::int32_t* partner, const std::uint8_t* is_tail,
            Visit&& visit) {
    const EdgeMath m{dots};
    const std::int32_t edges = m.edge_count();
    prepare(dots);
    const std::uint64_t walk_id = next_stamp();
    for (std::int32_t s = 0; s < edges; ++s) {
      if (edge_seen_[s] == walk_id) continue;
      const std::uint64_t loop_id = next_stamp();
      std::uint32_t size = 0;
      std::uint32_t length = 0;
      std::int32_t e = s;
      do {
        edge_seen_[e] = walk_id;
        ++length;
        const std::int32_t y = m.end(e);
        const std::int32_t key = y < partner[y] ? y : partner[y];
        if (dot_seen_[key] != loop_id) {
          dot_seen_[key] = loop_id;
          ++size;
        }
        e = m.successor(e, partner, is_tail);
      } while (e != s);
      visit(size, length);
    }
  }

  std::uint32_t count(std::int32_t dots, const std::int32_t* partner, const std::uint8_t* is_tail) {
    std::uint32_t loops = 0;
    walk(dots, partner, is_tail, [&](std::uint32_t, std::uint32_t) { ++loops; });
    return loops;
  }

 private:
  void prepare(std::int32_t dots) {
    if (dot_seen_.size() != static_cast<std::size_t>(dots)) {
      dot_seen_.assign(static_cast<std::size_t>(dots), 0);
      edge_seen_.assign(2 * static_cast<std::size_t>(dots), 0);
      stamp_ = 0;
    }
  }
  std::uint64_t next_stamp() { return ++stamp_; }

  std::vector<std::uint64_t> edge_seen_;
  std::vector<std::uint64_t> dot_seen_;
  std::uint64_t stamp_ = 0;
};

}  // namespace detail

}  // namespace chordgenus
