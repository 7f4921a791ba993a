#include "chordgenus/procedure.hpp"

#include "chordgenus/error.hpp"

#include <algorithm>
#include <array>
#include <bit>

namespace chordgenus {

ProcedureState::ProcedureState(std::uint32_t order, std::uint64_t seed)
    : order_(order), m_{static_cast<std::int32_t>(2 * order)}, rng_(seed) {
  if (order == 0 || order > kMaxOrder) {
    throw ChordError(ErrorKind::InvalidOrder, "n must be in 1.." + std::to_string(kMaxOrder));
  }
  const auto dots = static_cast<std::size_t>(m_.dots);
  const auto edges = static_cast<std::size_t>(m_.edge_count());
  partner_.assign(dots, -1);
  is_tail_.assign(dots, 0);
  next_.assign(edges, -1);
  prev_.assign(edges, -1);
  seg_last_.resize(edges);
  seg_first_.resize(edges);
  for (std::size_t e = 0; e < edges; ++e) {
    seg_last_[e] = static_cast<std::int32_t>(e);
    seg_first_[e] = static_cast<std::int32_t>(e);
  }
  in_loop_.assign(edges, 0);
  chord_stamp_.assign(dots, 0);
  // Fenwick tree over vacancy, all ones: node i covers (i - lowbit(i), i].
  fenwick_.assign(dots + 1, 0);
  for (std::size_t i = 1; i <= dots; ++i) fenwick_[i] = static_cast<std::int32_t>(i & (~i + 1));
  chords_.reserve(order);
}

std::optional<EdgeRef> ProcedureState::pointer() const {
  if (complete()) return std::nullopt;
  return edge_at(static_cast<std::size_t>(pointer_), order_);
}

Dot ProcedureState::initial_dot() const {
  if (complete()) throw ChordError(ErrorKind::ProcedureComplete, "no pointer after the last step");
  return Dot(static_cast<std::uint32_t>(m_.start(pointer_first_)) + 1);
}

Dot ProcedureState::concluding_dot() const {
  if (complete()) throw ChordError(ErrorKind::ProcedureComplete, "no pointer after the last step");
  return Dot(static_cast<std::uint32_t>(concluding()) + 1);
}

std::vector<Dot> ProcedureState::eligible_dots() const {
  std::vector<Dot> out;
  if (complete()) return out;
  const std::int32_t p = concluding();
  for (std::int32_t d = 0; d < m_.dots; ++d) {
    if (partner_[d] < 0 && d != p) out.emplace_back(static_cast<std::uint32_t>(d) + 1);
  }
  return out;
}

void ProcedureState::fenwick_add(std::int32_t dot, std::int32_t delta) {
  for (auto i = static_cast<std::size_t>(dot) + 1; i < fenwick_.size(); i += i & (~i + 1)) {
    fenwick_[i] += delta;
  }
}

std::uint32_t ProcedureState::vacant_rank(std::int32_t dot) const {
  std::int32_t sum = 0;
  for (auto i = static_cast<std::size_t>(dot); i > 0; i -= i & (~i + 1)) sum += fenwick_[i];
  return static_cast<std::uint32_t>(sum);
}

std::int32_t ProcedureState::select_vacant(std::uint32_t rank) const {
  const std::size_t size = fenwick_.size() - 1;
  std::size_t pos = 0;
  auto remaining = static_cast<std::int32_t>(rank);
  for (std::size_t step = std::bit_floor(size); step > 0; step >>= 1) {
    if (pos + step <= size && fenwick_[pos + step] <= remaining) {
      pos += step;
      remaining -= fenwick_[pos];
    }
  }
  return static_cast<std::int32_t>(pos);
}

StepEvent ProcedureState::step() {
  if (complete()) throw ChordError(ErrorKind::ProcedureComplete, "all n chords placed");
  const std::uint64_t choices = 2ULL * (order_ - steps_taken()) - 1;
  const auto choice = static_cast<std::uint32_t>(rng_.below(choices));
  const bool reversed = rng_.bit();
  return apply(choice, reversed);
}

Loop ProcedureState::mark_loop(std::int32_t first, bool keep_edges) {
  // Loops not kept are only marked; their edges are left empty.
  Loop loop;
  ++stamp_;
  std::int32_t e = first;
  std::int32_t smallest = first;
  std::vector<std::int32_t> ids;
  do {
    in_loop_[e] = 1;
    if (keep_edges) ids.push_back(e);
    smallest = std::min(smallest, e);
    const std::int32_t y = m_.end(e);
    const std::int32_t key = std::min(y, partner_[y]);
    if (chord_stamp_[key] != stamp_) {
      chord_stamp_[key] = stamp_;
      ++loop.size;
    }
    e = next_[e];
  } while (e != first);
  if (keep_edges) {
    std::rotate(ids.begin(), std::find(ids.begin(), ids.end(), smallest), ids.end());
    loop.edges.reserve(ids.size());
    for (auto id : ids) loop.edges.push_back(edge_at(static_cast<std::size_t>(id), order_));
  }
  return loop;
}

StepEvent ProcedureState::apply(std::uint32_t choice, bool reversed) {
  if (complete()) throw ChordError(ErrorKind::ProcedureComplete, "all n chords placed");
  const std::int32_t p = concluding();
  const std::uint32_t choices = 2 * (order_ - steps_taken()) - 1;
  if (choice >= choices) {
    throw ChordError(ErrorKind::PreconditionViolated,
                     "choice " + std::to_string(choice) + " >= " + std::to_string(choices));
  }
  const std::uint32_t rank_p = vacant_rank(p);
  const std::int32_t b = select_vacant(choice >= rank_p ? choice + 1 : choice);
  const std::int32_t tail = reversed ? b : p;
  const std::int32_t head = reversed ? p : b;

  // Segments touched by the new chord, identified by their first edge: the
  // four starting at p or b and the four ending there (possibly the same).
  std::array<std::int32_t, 8> first{};
  std::array<std::int32_t, 8> last{};
  std::size_t count = 0;
  auto add_old = [&](std::int32_t f) {
    for (std::size_t i = 0; i < count; ++i) {
      if (first[i] == f) return;
    }
    first[count] = f;
    last[count] = seg_last_[f];
    ++count;
  };
  for (std::int32_t d : {p, b}) {
    add_old(m_.edge(d, true));
    add_old(m_.edge(d, false));
  }
  for (std::int32_t d : {p, b}) {
    add_old(seg_first_[m_.in_positive(d)]);
    add_old(seg_first_[m_.in_negative(d)]);
  }
  auto find_old = [&](std::int32_t f) {
    for (std::size_t i = 0; i < count; ++i) {
      if (first[i] == f) return i;
    }
    throw ChordError(ErrorKind::PreconditionViolated, "segment bookkeeping out of sync");
  };
  auto count_plug = [&](std::int32_t f, std::int32_t l, int delta) {
    if (m_.start(f) != m_.end(l)) return false;
    auto& counter = m_.positive(f) == m_.positive(l) ? positive_plugs_ : negative_plugs_;
    counter = static_cast<std::uint32_t>(static_cast<int>(counter) + delta);
    return true;
  };
  for (std::size_t i = 0; i < count; ++i) count_plug(first[i], last[i], -1);

  partner_[tail] = head;
  partner_[head] = tail;
  is_tail_[tail] = 1;
  fenwick_add(p, -1);
  fenwick_add(b, -1);
  chords_.push_back({Dot(static_cast<std::uint32_t>(tail) + 1), Dot(static_cast<std::uint32_t>(head) + 1)});
  for (std::int32_t d : {p, b}) {
    for (std::int32_t in : {m_.in_positive(d), m_.in_negative(d)}) {
      const std::int32_t out = m_.successor(in, partner_.data(), is_tail_.data());
      next_[in] = out;
      prev_[out] = in;
    }
  }

  StepEvent event;
  event.chosen_chord = chords_.back();
  auto joined = [&](std::int32_t dot) { return dot == p || dot == b; };
  std::array<bool, 8> visited{};
  std::array<std::int32_t, 8> new_first{};
  new_first.fill(-1);

  // Chains entering from a vacant dot other than p, b become the new segments.
  for (std::size_t i = 0; i < count; ++i) {
    if (joined(m_.start(first[i]))) continue;
    std::size_t cur = i;
    visited[cur] = true;
    new_first[cur] = first[i];
    while (joined(m_.end(last[cur]))) {
      cur = find_old(next_[last[cur]]);
      visited[cur] = true;
      new_first[cur] = first[i];
    }
    seg_last_[first[i]] = last[cur];
    seg_first_[last[cur]] = first[i];
    if (count_plug(first[i], last[cur], +1)) {
      if (m_.positive(first[i]) == m_.positive(last[cur])) {
        ++event.positive_plugs_completed;
      } else {
        ++event.negative_plugs_completed;
      }
    }
  }

  // Whatever is left cycles through p and b: new loops.
  const std::size_t pointer_old = find_old(pointer_first_);
  for (std::size_t i = 0; i < count; ++i) {
    if (visited[i]) continue;
    bool has_pointer = false;
    std::size_t cur = i;
    do {
      visited[cur] = true;
      has_pointer = has_pointer || cur == pointer_old;
      cur = find_old(next_[last[cur]]);
    } while (cur != i);
    Loop loop = mark_loop(first[i], has_pointer);
    if (has_pointer) {
      closures_.push_back({steps_taken(), static_cast<std::uint32_t>(loop.size),
                           static_cast<std::uint32_t>(loop.edge_count())});
      event.closed_loop = std::move(loop);
    }
  }

  if (event.closed_loop) {
    if (!complete()) {
      while (in_loop_[cursor_]) ++cursor_;
      pointer_ = cursor_;
      std::int32_t f = pointer_;
      while (prev_[f] >= 0) f = prev_[f];
      pointer_first_ = f;
      event.new_pointer = edge_at(static_cast<std::size_t>(pointer_), order_);
    }
  } else {
    pointer_first_ = new_first[pointer_old];
  }
  return event;
}

PartialDiagram ProcedureState::partial() const {
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
  pairs.reserve(chords_.size());
  for (const auto& c : chords_) pairs.emplace_back(c.tail.label(), c.head.label());
  return make_partial(order_, pairs);
}

EntranceKinds ProcedureState::concluding_dot_entrances() const {
  EntranceKinds kinds;
  if (complete()) return kinds;
  const std::int32_t p = concluding();
  for (std::int32_t out : {m_.edge(p, true), m_.edge(p, false)}) {
    if (out == pointer_first_) continue;
    const std::int32_t l = seg_last_[out];
    if (m_.end(l) != p) continue;
    if (m_.positive(out) == m_.positive(l)) {
      kinds.positive = true;
    } else {
      kinds.negative = true;
    }
  }
  return kinds;
}

Segment pointer_segment(const ProcedureState& state) {
  const auto ptr = state.pointer();
  if (!ptr) throw ChordError(ErrorKind::ProcedureComplete, "no pointer after the last step");
  const auto parts = decompose(state.partial());
  for (const auto& seg : parts.segments) {
    if (std::find(seg.edges.begin(), seg.edges.end(), *ptr) != seg.edges.end()) return seg;
  }
  throw ChordError(ErrorKind::PointerInLoop, "pointer " + format_edge(*ptr, state.order()) +
                                                 " does not lie in a segment");
}

RunResult run_procedure(std::uint32_t order, std::uint64_t seed) {
  ProcedureState state(order, seed);
  while (!state.complete()) state.step();
  return {Diagram(state.partial()), {state.closures().begin(), state.closures().end()}};
}

namespace {

void expand(const ProcedureState& state, std::vector<Choice>& path, std::vector<ChoiceLeaf>& out) {
  if (state.complete()) {
    out.push_back({path, Diagram(state.partial())});
    return;
  }
  const auto eligible = state.eligible_dots();
  for (std::uint32_t i = 0; i < eligible.size(); ++i) {
    for (bool reversed : {false, true}) {
      ProcedureState next = state;
      next.apply(i, reversed);
      path.push_back({eligible[i], reversed});
      expand(next, path, out);
      path.pop_back();
    }
  }
}

}  // namespace

std::vector<ChoiceLeaf> choice_tree(std::uint32_t order) {
  if (order > 4) throw ChordError(ErrorKind::TooLarge, "choice_tree supports n <= 4");
  std::vector<ChoiceLeaf> out;
  std::vector<Choice> path;
  expand(ProcedureState(order, 0), path, out);
  return out;
}

}  // namespace chordgenus
