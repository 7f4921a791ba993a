#pragma once

// Index arithmetic shared by the walkers. Dots are 0-based here (label - 1)
// and edges are their 0-based positions in edge_order: positive edge i runs
// i -> i+1, negative edge 2n+j runs j+1 -> j.

#include <cstdint>

namespace chordgenus::detail {

struct EdgeMath {
  std::int32_t dots;  // 2n

  constexpr std::int32_t edge_count() const noexcept { return 2 * dots; }
  constexpr bool positive(std::int32_t e) const noexcept { return e < dots; }
  constexpr std::int32_t start(std::int32_t e) const noexcept {
    return e < dots ? e : (e - dots + 1) % dots;
  }
  constexpr std::int32_t end(std::int32_t e) const noexcept {
    return e < dots ? (e + 1) % dots : e - dots;
  }
  constexpr std::int32_t edge(std::int32_t start, bool positive) const noexcept {
    return positive ? start : dots + (start + dots - 1) % dots;
  }
  /// [d-1, d], positive.
  constexpr std::int32_t in_positive(std::int32_t d) const noexcept { return (d + dots - 1) % dots; }
  /// [d+1, d], negative.
  constexpr std::int32_t in_negative(std::int32_t d) const noexcept { return dots + d; }

  /// Attachment across the chord at the end dot of e, or -1 if that dot is vacant.
  constexpr std::int32_t successor(std::int32_t e, const std::int32_t* partner,
                                   const std::uint8_t* is_tail) const noexcept {
    const std::int32_t y = end(e);
    const std::int32_t z = partner[y];
    if (z < 0) return -1;
    const bool pos = positive(e) == (is_tail[y] != 0);
    return edge(z, pos);
  }
};

}  // namespace chordgenus::detail
