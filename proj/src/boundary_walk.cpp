#include "chordgenus/boundary_walk.hpp"

#include "chordgenus/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace chordgenus {

namespace {

using detail::EdgeMath;

EdgeRef to_ref(const EdgeMath& m, std::int32_t e) {
  return {Dot(static_cast<std::uint32_t>(m.start(e)) + 1),
          m.positive(e) ? Sign::Positive : Sign::Negative};
}

}  // namespace

WalkStep successor(const PartialDiagram& diagram, EdgeRef e) {
  const EdgeMath m{static_cast<std::int32_t>(diagram.dot_count())};
  const auto idx = static_cast<std::int32_t>(edge_index(e, diagram.order()));
  const auto next = m.successor(idx, diagram.partner_table().data(), diagram.tail_table().data());
  if (next < 0) return SegmentEnd{Dot(static_cast<std::uint32_t>(m.end(idx)) + 1)};
  return NextEdge{to_ref(m, next)};
}

WalkDecomposition decompose(const PartialDiagram& diagram) {
  const EdgeMath m{static_cast<std::int32_t>(diagram.dot_count())};
  const std::int32_t* partner = diagram.partner_table().data();
  const std::uint8_t* tail = diagram.tail_table().data();
  const std::int32_t edges = m.edge_count();

  WalkDecomposition out;
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(edges), 0);

  for (std::int32_t s = 0; s < edges; ++s) {
    if (partner[m.start(s)] >= 0) continue;
    Segment seg;
    seg.start_dot = Dot(static_cast<std::uint32_t>(m.start(s)) + 1);
    std::int32_t e = s;
    std::int32_t last = s;
    while (e >= 0) {
      seen[e] = 1;
      seg.edges.push_back(to_ref(m, e));
      last = e;
      e = m.successor(e, partner, tail);
    }
    seg.end_dot = Dot(static_cast<std::uint32_t>(m.end(last)) + 1);
    out.segments.push_back(std::move(seg));
  }

  std::vector<std::int32_t> chord_seen(static_cast<std::size_t>(m.dots), -1);
  for (std::int32_t s = 0; s < edges; ++s) {
    if (seen[s]) continue;
    Loop loop;
    const auto loop_id = static_cast<std::int32_t>(out.loops.size());
    std::int32_t e = s;
    do {
      seen[e] = 1;
      loop.edges.push_back(to_ref(m, e));
      const std::int32_t y = m.end(e);
      const std::int32_t key = std::min(y, partner[y]);
      if (chord_seen[key] != loop_id) {
        chord_seen[key] = loop_id;
        ++loop.size;
      }
      e = m.successor(e, partner, tail);
    } while (e != s);
    out.loops.push_back(std::move(loop));
  }
  return out;
}

std::uint32_t boundary_count(const Diagram& diagram) {
  detail::LoopWalker walker;
  return walker.count(static_cast<std::int32_t>(diagram.dot_count()), diagram.partner_table().data(),
                      diagram.tail_table().data());
}

std::uint32_t genus(const Diagram& diagram) {
  return (diagram.order() + 2 - boundary_count(diagram)) / 2;
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t size) : parent_(size), rank_(size, 0) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::uint8_t> rank_;
};

}  // namespace

std::uint32_t gluing_oracle_d(const Diagram& diagram) {
  const std::uint32_t n = diagram.order();
  const std::uint32_t dots = 2 * n;

  // Markers 2i (start) and 2i+1 (end) for the edge at position i of edge_order.
  // Edges are located by their endpoint labels so this never consults the
  // walk's successor rule.
  auto positive = [&](std::uint32_t from) {  // [from, from+1]
    return edge_index({Dot(from), Sign::Positive}, n);
  };
  auto negative = [&](std::uint32_t from) {  // [from, from-1]
    return edge_index({Dot(from), Sign::Negative}, n);
  };
  auto start_marker = [](std::size_t edge) { return 2 * edge; };
  auto end_marker = [](std::size_t edge) { return 2 * edge + 1; };
  auto plus = [&](std::uint32_t a) { return Dot(a).shifted(1, dots).label(); };
  auto minus = [&](std::uint32_t a) { return Dot(a).shifted(-1, dots).label(); };

  UnionFind uf(8 * static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < 4 * static_cast<std::size_t>(n); ++i) {
    uf.unite(start_marker(i), end_marker(i));
  }
  for (const auto& c : diagram.chords()) {
    const std::uint32_t a = c.tail.label();
    const std::uint32_t b = c.head.label();
    // [a-1,a] - [b,b+1]
    uf.unite(end_marker(positive(minus(a))), start_marker(positive(b)));
    // [b+1,b] - [a,a+1]
    uf.unite(end_marker(negative(plus(b))), start_marker(positive(a)));
    // [a+1,a] - [b,b-1]
    uf.unite(end_marker(negative(plus(a))), start_marker(negative(b)));
    // [b-1,b] - [a,a-1]
    uf.unite(end_marker(positive(minus(b))), start_marker(negative(a)));
  }

  std::set<std::size_t> roots;
  for (std::size_t i = 0; i < 8 * static_cast<std::size_t>(n); ++i) roots.insert(uf.find(i));
  return static_cast<std::uint32_t>(roots.size());
}

}  // namespace chordgenus
