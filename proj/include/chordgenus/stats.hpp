#pragma once

// Exact enumeration for small n and seeded Monte Carlo estimation.
//
// Monte Carlo accumulators hold integer sums only, so merging is exact,
// associative and order-independent; estimates are identical for any thread
// count. Sample i of a run seeded with s uses the procedure seed
// derive_seed(s, i).

#include "chordgenus/diagram.hpp"

#include <boost/rational.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace chordgenus {

using Rational = boost::rational<std::int64_t>;

inline constexpr std::uint32_t kMaxEnumerationOrder = 7;

/// Visits every diagram of order n once: the lowest unpaired dot takes each
/// higher free partner in increasing order, recursively; for each pairing the
/// orientations run through all 2^n choices, chord i reversed when bit
/// (n-1-i) is set. Returns the number of visits. n <= 7.
std::uint64_t enumerate_diagrams(std::uint32_t order,
                                 const std::function<void(const Diagram&)>& visit);

struct ExactStats {
  std::uint32_t n = 0;
  boost::multiprecision::cpp_int count;
  Rational d_mean;
  std::map<std::uint32_t, std::uint64_t> genus_histogram;
  std::map<std::uint32_t, Rational> loops_by_size;  // L_k

  Rational genus_mean() const { return (Rational(n) + 2 - d_mean) / 2; }
};

ExactStats exact_stats(std::uint32_t order, unsigned threads = 1);

/// Mergeable integer sums over samples.
class McAccumulator {
 public:
  explicit McAccumulator(std::uint32_t order);

  /// One sample, given as (loop size, edge count) per loop.
  void add_sample(std::span<const std::pair<std::uint32_t, std::uint32_t>> loops);
  void merge(const McAccumulator& other);

  std::uint32_t order() const noexcept { return order_; }
  std::uint64_t samples() const noexcept { return samples_; }
  std::uint64_t sum_d() const noexcept { return sum_d_; }
  std::uint64_t sum_d_squared() const noexcept { return sum_d2_; }
  /// Indexed by loop size k (index 0 unused).
  const std::vector<std::uint64_t>& loops() const noexcept { return loops_; }
  const std::vector<std::uint64_t>& loops_squared() const noexcept { return loops2_; }
  const std::vector<std::uint64_t>& edges() const noexcept { return edges_; }
  const std::vector<std::uint64_t>& edges_squared() const noexcept { return edges2_; }

  friend bool operator==(const McAccumulator&, const McAccumulator&) = default;

 private:
  std::uint32_t order_;
  std::uint64_t samples_ = 0;
  std::uint64_t sum_d_ = 0;
  std::uint64_t sum_d2_ = 0;
  std::vector<std::uint64_t> loops_;
  std::vector<std::uint64_t> loops2_;
  std::vector<std::uint64_t> edges_;
  std::vector<std::uint64_t> edges2_;
  std::vector<std::uint32_t> scratch_count_;
  std::vector<std::uint32_t> scratch_edges_;
};

struct Estimate {
  double value = 0;
  double se = 0;
};

struct SizeRow {
  std::uint32_t k;
  Estimate loops;  // L_k
  Estimate edge_share;  // P_k
};

struct McStats {
  std::uint32_t n = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  double d_mean = 0;
  double d_stddev = 0;
  double ci99_lo = 0;
  double ci99_hi = 0;
  /// Every k with an observed loop, plus every k up to checked_size_limit(n).
  std::vector<SizeRow> rows;
  McAccumulator totals{1};

  double d_se() const;
};

/// Largest k covered by the loop-size bounds: max(n/100, sqrt(n)), capped at n.
std::uint32_t checked_size_limit(std::uint32_t order);

McStats summarize(const McAccumulator& totals, std::uint64_t seed);

/// threads == 0 uses the machine's parallelism.
McStats mc_stats(std::uint32_t order, std::uint64_t samples, std::uint64_t seed,
                 unsigned threads = 0);

struct PlugRow {
  std::uint32_t k;
  Estimate plugs;           // plugs present after step k
  Estimate positive_completed;  // G+_k
  Estimate negative_completed;  // G-_k
  Estimate positive_entrance;   // H+_k
  Estimate negative_entrance;   // H-_k
};

struct PlugStats {
  std::uint32_t n = 0;
  std::uint32_t k_max = 0;
  std::uint64_t runs = 0;
  std::uint64_t seed = 0;
  std::vector<PlugRow> rows;  // k = 1..k_max
};

PlugStats plug_mc_stats(std::uint32_t order, std::uint32_t k_max, std::uint64_t runs,
                        std::uint64_t seed, unsigned threads = 0);

/// Threads to use: `requested`, or hardware concurrency when 0.
unsigned resolve_threads(unsigned requested);

}  // namespace chordgenus
