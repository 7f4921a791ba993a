#include "chordgenus/stats.hpp"

#include "chordgenus/boundary_walk.hpp"
#include "chordgenus/error.hpp"
#include "chordgenus/procedure.hpp"
#include "chordgenus/rng.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace chordgenus {

namespace {

void check_enumerable(std::uint32_t order) {
  if (order == 0) throw ChordError(ErrorKind::InvalidOrder, "n must be positive");
  if (order > kMaxEnumerationOrder) {
    throw ChordError(ErrorKind::TooLarge, "enumeration supports n <= " +
                                              std::to_string(kMaxEnumerationOrder));
  }
}

/// Calls on_pairing(pairs) for every pairing of the 0-based dots, pairs given
/// as (low, high) in pairing order. With first_partner >= 0 only pairings
/// that match dot 0 with first_partner are visited.
template <typename OnPairing>
void for_each_pairing(std::uint32_t order, std::int32_t first_partner, OnPairing&& on_pairing) {
  const std::int32_t dots = static_cast<std::int32_t>(2 * order);
  std::vector<std::pair<std::int32_t, std::int32_t>> pairs;
  std::vector<std::uint8_t> used(static_cast<std::size_t>(dots), 0);
  pairs.reserve(order);

  auto recurse = [&](auto&& self) -> void {
    std::int32_t low = 0;
    while (low < dots && used[low]) ++low;
    if (low == dots) {
      on_pairing(pairs);
      return;
    }
    used[low] = 1;
    for (std::int32_t high = low + 1; high < dots; ++high) {
      if (used[high]) continue;
      if (low == 0 && first_partner >= 0 && high != first_partner) continue;
      used[high] = 1;
      pairs.emplace_back(low, high);
      self(self);
      pairs.pop_back();
      used[high] = 0;
    }
    used[low] = 0;
  };
  recurse(recurse);
}

/// Fills partner/tail tables for orientation `mask` of a pairing.
void orient(std::span<const std::pair<std::int32_t, std::int32_t>> pairs, std::uint32_t mask,
            std::vector<std::int32_t>& partner, std::vector<std::uint8_t>& is_tail) {
  const auto n = static_cast<std::uint32_t>(pairs.size());
  for (std::uint32_t i = 0; i < n; ++i) {
    const auto [lo, hi] = pairs[i];
    const bool reversed = (mask >> (n - 1 - i)) & 1u;
    partner[lo] = hi;
    partner[hi] = lo;
    is_tail[lo] = reversed ? 0 : 1;
    is_tail[hi] = reversed ? 1 : 0;
  }
}

double sample_se(long double sum, long double sum_sq, std::uint64_t count) {
  if (count < 2) return 0.0;
  const long double n = static_cast<long double>(count);
  long double var = (sum_sq - sum * sum / n) / (n - 1);
  if (var < 0) var = 0;
  return static_cast<double>(std::sqrt(var / n));
}

Estimate estimate(std::uint64_t sum, std::uint64_t sum_sq, std::uint64_t count,
                  long double scale = 1.0L) {
  if (count == 0) return {};
  const long double s = static_cast<long double>(sum) * scale;
  const long double s2 = static_cast<long double>(sum_sq) * scale * scale;
  return {static_cast<double>(s / static_cast<long double>(count)), sample_se(s, s2, count)};
}

}  // namespace

unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

std::uint64_t enumerate_diagrams(std::uint32_t order,
                                 const std::function<void(const Diagram&)>& visit) {
  check_enumerable(order);
  std::uint64_t visits = 0;
  std::vector<std::pair<std::int64_t, std::int64_t>> chords(order);
  for_each_pairing(order, -1, [&](const auto& pairs) {
    for (std::uint32_t mask = 0; mask < (1u << order); ++mask) {
      for (std::uint32_t i = 0; i < order; ++i) {
        const bool reversed = (mask >> (order - 1 - i)) & 1u;
        const std::int64_t lo = pairs[i].first + 1;
        const std::int64_t hi = pairs[i].second + 1;
        chords[i] = reversed ? std::pair{hi, lo} : std::pair{lo, hi};
      }
      visit(make_diagram(order, chords));
      ++visits;
    }
  });
  return visits;
}

ExactStats exact_stats(std::uint32_t order, unsigned threads) {
  check_enumerable(order);
  const auto dots = static_cast<std::int32_t>(2 * order);

  struct Partial {
    std::uint64_t count = 0;
    std::uint64_t sum_d = 0;
    std::vector<std::uint64_t> genus;
    std::vector<std::uint64_t> loops;
  };

  // One branch per partner of dot 1; branches are independent.
  auto run_branch = [&](std::int32_t first_partner) {
    Partial acc;
    acc.genus.assign(order + 2, 0);
    acc.loops.assign(order + 1, 0);
    std::vector<std::int32_t> partner(static_cast<std::size_t>(dots));
    std::vector<std::uint8_t> is_tail(static_cast<std::size_t>(dots));
    detail::LoopWalker walker;
    for_each_pairing(order, first_partner, [&](const auto& pairs) {
      for (std::uint32_t mask = 0; mask < (1u << order); ++mask) {
        orient(pairs, mask, partner, is_tail);
        std::uint32_t d = 0;
        walker.walk(dots, partner.data(), is_tail.data(), [&](std::uint32_t size, std::uint32_t) {
          ++d;
          ++acc.loops[size];
        });
        ++acc.count;
        acc.sum_d += d;
        ++acc.genus[(order + 2 - d) / 2];
      }
    });
    return acc;
  };

  std::vector<Partial> branches(static_cast<std::size_t>(dots - 1));
  const unsigned workers = std::min<unsigned>(resolve_threads(threads), static_cast<unsigned>(dots - 1));
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t b = w; b < branches.size(); b += workers) {
        branches[b] = run_branch(static_cast<std::int32_t>(b) + 1);
      }
    });
  }
  for (auto& t : pool) t.join();

  Partial total;
  total.genus.assign(order + 2, 0);
  total.loops.assign(order + 1, 0);
  for (const auto& b : branches) {
    total.count += b.count;
    total.sum_d += b.sum_d;
    for (std::size_t g = 0; g < total.genus.size(); ++g) total.genus[g] += b.genus[g];
    for (std::size_t k = 0; k < total.loops.size(); ++k) total.loops[k] += b.loops[k];
  }

  ExactStats out;
  out.n = order;
  out.count = total.count;
  const auto count = static_cast<std::int64_t>(total.count);
  out.d_mean = Rational(static_cast<std::int64_t>(total.sum_d), count);
  for (std::size_t g = 0; g < total.genus.size(); ++g) {
    if (total.genus[g] > 0) out.genus_histogram[static_cast<std::uint32_t>(g)] = total.genus[g];
  }
  for (std::size_t k = 1; k < total.loops.size(); ++k) {
    out.loops_by_size[static_cast<std::uint32_t>(k)] =
        Rational(static_cast<std::int64_t>(total.loops[k]), count);
  }
  return out;
}

// ---------------------------------------------------------------------------

McAccumulator::McAccumulator(std::uint32_t order)
    : order_(order),
      loops_(order + 1, 0),
      loops2_(order + 1, 0),
      edges_(order + 1, 0),
      edges2_(order + 1, 0),
      scratch_count_(order + 1, 0),
      scratch_edges_(order + 1, 0) {}

void McAccumulator::add_sample(std::span<const std::pair<std::uint32_t, std::uint32_t>> loops) {
  const std::uint64_t d = loops.size();
  ++samples_;
  sum_d_ += d;
  sum_d2_ += d * d;
  for (const auto& [size, length] : loops) {
    ++scratch_count_[size];
    scratch_edges_[size] += length;
  }
  for (const auto& [size, length] : loops) {
    const std::uint64_t c = scratch_count_[size];
    if (c == 0) continue;  // already flushed
    const std::uint64_t e = scratch_edges_[size];
    loops_[size] += c;
    loops2_[size] += c * c;
    edges_[size] += e;
    edges2_[size] += e * e;
    scratch_count_[size] = 0;
    scratch_edges_[size] = 0;
  }
}

void McAccumulator::merge(const McAccumulator& other) {
  if (other.order_ != order_) {
    throw ChordError(ErrorKind::PreconditionViolated, "cannot merge accumulators of different n");
  }
  samples_ += other.samples_;
  sum_d_ += other.sum_d_;
  sum_d2_ += other.sum_d2_;
  for (std::size_t k = 0; k < loops_.size(); ++k) {
    loops_[k] += other.loops_[k];
    loops2_[k] += other.loops2_[k];
    edges_[k] += other.edges_[k];
    edges2_[k] += other.edges2_[k];
  }
}

double McStats::d_se() const {
  return samples > 0 ? d_stddev / std::sqrt(static_cast<double>(samples)) : 0.0;
}

std::uint32_t checked_size_limit(std::uint32_t order) {
  const auto root = static_cast<std::uint32_t>(std::sqrt(static_cast<double>(order)));
  return std::min(order, std::max(order / 100, root));
}

McStats summarize(const McAccumulator& totals, std::uint64_t seed) {
  McStats out;
  out.n = totals.order();
  out.samples = totals.samples();
  out.seed = seed;
  out.totals = totals;
  const std::uint64_t count = totals.samples();
  if (count == 0) return out;

  const Estimate d = estimate(totals.sum_d(), totals.sum_d_squared(), count);
  out.d_mean = d.value;
  out.d_stddev = d.se * std::sqrt(static_cast<double>(count));
  constexpr double z99 = 2.5758293035489004;
  out.ci99_lo = d.value - z99 * d.se;
  out.ci99_hi = d.value + z99 * d.se;

  const long double edge_scale = 1.0L / (4.0L * out.n);
  const std::uint32_t limit = checked_size_limit(out.n);
  for (std::uint32_t k = 1; k <= out.n; ++k) {
    if (k > limit && totals.loops()[k] == 0) continue;
    out.rows.push_back({k, estimate(totals.loops()[k], totals.loops_squared()[k], count),
                        estimate(totals.edges()[k], totals.edges_squared()[k], count, edge_scale)});
  }
  return out;
}

McStats mc_stats(std::uint32_t order, std::uint64_t samples, std::uint64_t seed, unsigned threads) {
  if (order == 0) throw ChordError(ErrorKind::InvalidOrder, "n must be positive");
  if (samples == 0) throw ChordError(ErrorKind::PreconditionViolated, "samples must be positive");
  const unsigned workers =
      static_cast<unsigned>(std::min<std::uint64_t>(resolve_threads(threads), samples));

  std::vector<McAccumulator> partials(workers, McAccumulator(order));
  auto work = [&](unsigned w) {
    detail::LoopWalker walker;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> loops;
    const std::uint64_t begin = samples * w / workers;
    const std::uint64_t end = samples * (w + 1) / workers;
    for (std::uint64_t i = begin; i < end; ++i) {
      const RunResult run = run_procedure(order, derive_seed(seed, i));
      loops.clear();
      walker.walk(static_cast<std::int32_t>(run.diagram.dot_count()),
                  run.diagram.partner_table().data(), run.diagram.tail_table().data(),
                  [&](std::uint32_t size, std::uint32_t length) { loops.emplace_back(size, length); });
      partials[w].add_sample(loops);
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }

  McAccumulator total(order);
  for (const auto& p : partials) total.merge(p);
  return summarize(total, seed);
}

// ---------------------------------------------------------------------------

PlugStats plug_mc_stats(std::uint32_t order, std::uint32_t k_max, std::uint64_t runs,
                        std::uint64_t seed, unsigned threads) {
  if (order == 0) throw ChordError(ErrorKind::InvalidOrder, "n must be positive");
  if (k_max == 0 || k_max > order) {
    throw ChordError(ErrorKind::PreconditionViolated, "k_max must be in 1..n");
  }
  if (runs == 0) throw ChordError(ErrorKind::PreconditionViolated, "runs must be positive");

  // Per step: sums and sums of squares of plugs, G+, G-, and sums of H+, H-.
  struct Sums {
    std::vector<std::uint64_t> plugs, plugs2, gp, gp2, gm, gm2, hp, hm;
    explicit Sums(std::size_t k)
        : plugs(k), plugs2(k), gp(k), gp2(k), gm(k), gm2(k), hp(k), hm(k) {}
  };

  const unsigned workers =
      static_cast<unsigned>(std::min<std::uint64_t>(resolve_threads(threads), runs));
  std::vector<Sums> partials(workers, Sums(k_max + 1));
  auto work = [&](unsigned w) {
    Sums& s = partials[w];
    const std::uint64_t begin = runs * w / workers;
    const std::uint64_t end = runs * (w + 1) / workers;
    for (std::uint64_t r = begin; r < end; ++r) {
      ProcedureState state(order, derive_seed(seed, r));
      for (std::uint32_t k = 1; k <= k_max; ++k) {
        const StepEvent ev = state.step();
        const std::uint64_t plugs = state.plug_count();
        const std::uint64_t gp = ev.positive_plugs_completed;
        const std::uint64_t gm = ev.negative_plugs_completed;
        const EntranceKinds h = state.concluding_dot_entrances();
        s.plugs[k] += plugs;
        s.plugs2[k] += plugs * plugs;
        s.gp[k] += gp;
        s.gp2[k] += gp * gp;
        s.gm[k] += gm;
        s.gm2[k] += gm * gm;
        s.hp[k] += h.positive ? 1 : 0;
        s.hm[k] += h.negative ? 1 : 0;
      }
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }

  Sums total(k_max + 1);
  for (const auto& p : partials) {
    for (std::uint32_t k = 0; k <= k_max; ++k) {
      total.plugs[k] += p.plugs[k];
      total.plugs2[k] += p.plugs2[k];
      total.gp[k] += p.gp[k];
      total.gp2[k] += p.gp2[k];
      total.gm[k] += p.gm[k];
      total.gm2[k] += p.gm2[k];
      total.hp[k] += p.hp[k];
      total.hm[k] += p.hm[k];
    }
  }

  PlugStats out;
  out.n = order;
  out.k_max = k_max;
  out.runs = runs;
  out.seed = seed;
  for (std::uint32_t k = 1; k <= k_max; ++k) {
    out.rows.push_back({k, estimate(total.plugs[k], total.plugs2[k], runs),
                        estimate(total.gp[k], total.gp2[k], runs),
                        estimate(total.gm[k], total.gm2[k], runs),
                        estimate(total.hp[k], total.hp[k], runs),
                        estimate(total.hm[k], total.hm[k], runs)});
  }
  return out;
}

}  // namespace chordgenus
