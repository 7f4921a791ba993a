#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace chordgenus {

/// Seeded stream: std::mt19937_64 (output fully specified by the C++
/// standard) with bounded draws by rejection, so transcripts are identical
/// across platforms and standard libraries.
class SeededStream {
 public:
  static constexpr std::string_view kGeneratorName = "mt19937_64";

  explicit SeededStream(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, bound). bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    // Reject the low (2^64 mod bound) outputs so x % bound is exactly uniform.
    const std::uint64_t threshold = (0 - bound) % bound;
    while (true) {
      const std::uint64_t x = engine_();
      if (x >= threshold) return x % bound;
    }
  }

  bool bit() { return (engine_() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

/// SplitMix64 finalizer.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Seed for sample `index` of a run seeded with `master`.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) noexcept {
  return splitmix64(splitmix64(master) ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

}  // namespace chordgenus
