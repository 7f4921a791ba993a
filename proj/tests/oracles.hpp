#pragma once

// Independent reference implementations used only by the tests. None of them
// call into the library's walkers or enumerators.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Chords = std::vector<std::pair<std::int64_t, std::int64_t>>;
/// (start dot, +1 or -1)
using Edge = std::pair<std::int64_t, int>;

inline std::int64_t wrap(std::int64_t v, std::int64_t dots) { return ((v - 1) % dots + dots) % dots + 1; }

/// Attachment table written out from the four gluings of each chord (a, b):
///   [a-1,a]+ -> [b,b+1]+   [b+1,b]- -> [a,a+1]+
///   [a+1,a]- -> [b,b-1]-   [b-1,b]+ -> [a,a-1]-
inline std::map<Edge, Edge> attachments(std::int64_t n, const Chords& chords) {
  const std::int64_t dots = 2 * n;
  std::map<Edge, Edge> next;
  for (const auto& [a, b] : chords) {
    next[{wrap(a - 1, dots), +1}] = {b, +1};
    next[{wrap(b + 1, dots), -1}] = {a, +1};
    next[{wrap(a + 1, dots), -1}] = {b, -1};
    next[{wrap(b - 1, dots), +1}] = {a, -1};
  }
  return next;
}

inline std::vector<Edge> all_edges(std::int64_t n) {
  std::vector<Edge> out;
  for (std::int64_t d = 1; d <= 2 * n; ++d) {
    out.push_back({d, +1});
    out.push_back({d, -1});
  }
  return out;
}

/// Loops of a full diagram as (distinct chords, edge count), by direct walking
/// of the attachment table.
inline std::vector<std::pair<std::uint32_t, std::uint32_t>> loops(std::int64_t n, const Chords& chords) {
  const auto next = attachments(n, chords);
  std::map<std::int64_t, std::size_t> chord_of;
  for (std::size_t i = 0; i < chords.size(); ++i) {
    chord_of[chords[i].first] = i;
    chord_of[chords[i].second] = i;
  }
  std::set<Edge> seen;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (const Edge& s : all_edges(n)) {
    if (seen.count(s)) continue;
    std::set<std::size_t> visited_chords;
    std::uint32_t length = 0;
    Edge e = s;
    do {
      seen.insert(e);
      ++length;
      visited_chords.insert(chord_of.at(wrap(e.first + e.second, 2 * n)));
      e = next.at(e);
    } while (e != s);
    out.push_back({static_cast<std::uint32_t>(visited_chords.size()), length});
  }
  return out;
}

inline std::uint32_t d(std::int64_t n, const Chords& chords) {
  return static_cast<std::uint32_t>(loops(n, chords).size());
}

/// All oriented diagrams of order n, by pairing up consecutive entries of
/// every permutation of the dots. Canonical form: chords sorted.
inline std::set<Chords> all_diagrams(std::int64_t n) {
  std::vector<std::int64_t> perm(static_cast<std::size_t>(2 * n));
  std::iota(perm.begin(), perm.end(), 1);
  std::set<Chords> out;
  do {
    Chords c;
    for (std::size_t i = 0; i < perm.size(); i += 2) c.push_back({perm[i], perm[i + 1]});
    std::sort(c.begin(), c.end());
    out.insert(c);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

inline Chords random_diagram(std::int64_t n, std::mt19937_64& rng) {
  std::vector<std::int64_t> perm(static_cast<std::size_t>(2 * n));
  std::iota(perm.begin(), perm.end(), 1);
  std::shuffle(perm.begin(), perm.end(), rng);
  Chords c;
  for (std::size_t i = 0; i < perm.size(); i += 2) c.push_back({perm[i], perm[i + 1]});
  return c;
}

/// Random partial diagram with k chords.
inline Chords random_partial(std::int64_t n, std::int64_t k, std::mt19937_64& rng) {
  Chords c = random_diagram(n, rng);
  c.resize(static_cast<std::size_t>(k));
  return c;
}

}  // namespace oracle
