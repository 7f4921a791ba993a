#pragma once

// Oriented chord diagrams on 2n dots.
//
// Dots are labeled 1..2n around the circle and all +-1 arithmetic on labels
// wraps modulo 2n. An oriented chord is an ordered pair (tail, head). A
// partial diagram (k chords on 2n dots) leaves 2n - 2k dots vacant; a full
// diagram has k = n.
//
// The annulus around the circle has 4n boundary edges. The positive edge
// starting at a is [a, a+1]; the negative edge starting at a is [a, a-1].
// An edge is identified by (start, sign), so for n = 1 the positive [1,2]
// and the negative [1,2] are different edges.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace chordgenus {

/// Largest supported order n. Keeps 4n edge indices inside int32.
inline constexpr std::uint32_t kMaxOrder = 1u << 26;

class Dot {
 public:
  constexpr Dot() = default;
  constexpr explicit Dot(std::uint32_t label) : label_(label) {}

  constexpr std::uint32_t label() const noexcept { return label_; }

  /// Label shifted by delta, wrapped into 1..dot_count.
  constexpr Dot shifted(std::int64_t delta, std::uint32_t dot_count) const noexcept {
    const std::int64_t m = dot_count;
    std::int64_t v = (static_cast<std::int64_t>(label_) - 1 + delta) % m;
    if (v < 0) v += m;
    return Dot(static_cast<std::uint32_t>(v + 1));
  }

  friend constexpr auto operator<=>(Dot, Dot) = default;

 private:
  std::uint32_t label_ = 1;
};

enum class Sign : std::uint8_t { Positive, Negative };

constexpr Sign opposite(Sign s) noexcept {
  return s == Sign::Positive ? Sign::Negative : Sign::Positive;
}

struct OrientedChord {
  Dot tail;
  Dot head;

  friend constexpr bool operator==(const OrientedChord&, const OrientedChord&) = default;
};

enum class Role : std::uint8_t { Tail, Head };

struct Occupant {
  std::size_t chord;  // index into PartialDiagram::chords()
  Role role;

  friend constexpr bool operator==(const Occupant&, const Occupant&) = default;
};

struct EdgeRef {
  Dot start;
  Sign sign = Sign::Positive;

  /// start + 1 for positive edges, start - 1 for negative ones.
  Dot end(std::uint32_t order) const noexcept {
    return start.shifted(sign == Sign::Positive ? 1 : -1, 2 * order);
  }

  friend constexpr bool operator==(const EdgeRef&, const EdgeRef&) = default;
};

/// Position of an edge in edge_order(order), 0-based.
std::size_t edge_index(EdgeRef e, std::uint32_t order);
EdgeRef edge_at(std::size_t index, std::uint32_t order);

/// Canonical order e_1..e_4n: positive edges [1,2], [2,3], ..., [2n,1], then
/// negative edges [2,1], [3,2], ..., [1,2n].
std::vector<EdgeRef> edge_order(std::uint32_t order);

/// "[a,b]+" / "[a,b]-"
std::string format_edge(EdgeRef e, std::uint32_t order);

class PartialDiagram {
 public:
  std::uint32_t order() const noexcept { return order_; }
  std::uint32_t dot_count() const noexcept { return 2 * order_; }
  std::size_t chord_count() const noexcept { return chords_.size(); }
  std::size_t vacant_count() const noexcept { return dot_count() - 2 * chords_.size(); }
  bool is_full() const noexcept { return chords_.size() == order_; }

  std::span<const OrientedChord> chords() const noexcept { return chords_; }

  std::optional<Occupant> occupant(Dot d) const;
  bool is_vacant(Dot d) const;
  /// Other end of the chord at d. d must be occupied.
  Dot partner(Dot d) const;
  /// Vacant dots in increasing label order.
  std::vector<Dot> vacant_dots() const;

  /// New diagram with one more chord; validated like make_partial.
  PartialDiagram with_chord(OrientedChord chord) const;

  /// 0-based tables: partner index or -1 when vacant, and 1 where the dot is a tail.
  std::span<const std::int32_t> partner_table() const noexcept { return partner_; }
  std::span<const std::uint8_t> tail_table() const noexcept { return is_tail_; }

  /// Same n and same chord set (chord order ignored).
  friend bool operator==(const PartialDiagram& a, const PartialDiagram& b) {
    return a.order_ == b.order_ && a.partner_ == b.partner_ && a.is_tail_ == b.is_tail_;
  }

 protected:
  PartialDiagram() = default;

 private:
  friend PartialDiagram make_partial(std::uint32_t,
                                     std::span<const std::pair<std::int64_t, std::int64_t>>);
  void add(std::int64_t tail, std::int64_t head);

  std::uint32_t order_ = 0;
  std::vector<OrientedChord> chords_;
  std::vector<std::int32_t> partner_;
  std::vector<std::uint8_t> is_tail_;
  std::vector<std::int32_t> chord_of_;
};

/// A partial diagram with no vacant dots.
class Diagram : public PartialDiagram {
 public:
  explicit Diagram(PartialDiagram full);
};

PartialDiagram make_partial(std::uint32_t order,
                            std::span<const std::pair<std::int64_t, std::int64_t>> chords);
Diagram make_diagram(std::uint32_t order,
                     std::span<const std::pair<std::int64_t, std::int64_t>> chords);

/// |D_n| = (2n)!/n!
boost::multiprecision::cpp_int diagram_count(std::uint32_t order);

/// Grammar: ["n=" INT ";"] "(" INT "," INT ")" { "," "(" INT "," INT ")" }.
/// Without the prefix, n is the number of pairs. Whitespace between tokens is
/// ignored. "n=3;" with no pairs is accepted as the empty 3-diagram.
PartialDiagram parse_diagram(std::string_view text);
/// Always emits "n=<n>;" followed by chords in stored order.
std::string format_diagram(const PartialDiagram& diagram);

}  // namespace chordgenus
