#include "chordgenus/diagram.hpp"

#include "chordgenus/error.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace chordgenus {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidOrder: return "InvalidOrder";
    case ErrorKind::DotOutOfRange: return "DotOutOfRange";
    case ErrorKind::DuplicateDot: return "DuplicateDot";
    case ErrorKind::TooManyChords: return "TooManyChords";
    case ErrorKind::IncompleteDiagram: return "IncompleteDiagram";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::EdgeNotOfThisDiagram: return "EdgeNotOfThisDiagram";
    case ErrorKind::ProcedureComplete: return "ProcedureComplete";
    case ErrorKind::PointerInLoop: return "PointerInLoop";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotVacant: return "NotVacant";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

std::size_t edge_index(EdgeRef e, std::uint32_t order) {
  const std::uint32_t dots = 2 * order;
  if (e.start.label() < 1 || e.start.label() > dots) {
    throw ChordError(ErrorKind::EdgeNotOfThisDiagram,
                     "edge start " + std::to_string(e.start.label()) + " outside 1.." +
                         std::to_string(dots));
  }
  const std::uint32_t s = e.start.label() - 1;
  if (e.sign == Sign::Positive) return s;
  return dots + (s + dots - 1) % dots;
}

EdgeRef edge_at(std::size_t index, std::uint32_t order) {
  const std::uint32_t dots = 2 * order;
  if (index >= 2 * static_cast<std::size_t>(dots)) {
    throw ChordError(ErrorKind::EdgeNotOfThisDiagram, "edge index out of range");
  }
  if (index < dots) return {Dot(static_cast<std::uint32_t>(index) + 1), Sign::Positive};
  const auto j = static_cast<std::uint32_t>(index - dots);
  return {Dot((j + 1) % dots + 1), Sign::Negative};
}

std::vector<EdgeRef> edge_order(std::uint32_t order) {
  std::vector<EdgeRef> out;
  out.reserve(4 * static_cast<std::size_t>(order));
  for (std::size_t i = 0; i < 4 * static_cast<std::size_t>(order); ++i) out.push_back(edge_at(i, order));
  return out;
}

std::string format_edge(EdgeRef e, std::uint32_t order) {
  std::ostringstream os;
  os << '[' << e.start.label() << ',' << e.end(order).label() << ']'
     << (e.sign == Sign::Positive ? '+' : '-');
  return os.str();
}

// ---------------------------------------------------------------------------

std::optional<Occupant> PartialDiagram::occupant(Dot d) const {
  if (d.label() < 1 || d.label() > dot_count()) {
    throw ChordError(ErrorKind::DotOutOfRange, "dot " + std::to_string(d.label()));
  }
  const auto i = d.label() - 1;
  if (partner_[i] < 0) return std::nullopt;
  return Occupant{static_cast<std::size_t>(chord_of_[i]), is_tail_[i] ? Role::Tail : Role::Head};
}

bool PartialDiagram::is_vacant(Dot d) const { return !occupant(d).has_value(); }

Dot PartialDiagram::partner(Dot d) const {
  if (is_vacant(d)) {
    throw ChordError(ErrorKind::PreconditionViolated,
                     "dot " + std::to_string(d.label()) + " is vacant and has no partner");
  }
  return Dot(static_cast<std::uint32_t>(partner_[d.label() - 1]) + 1);
}

std::vector<Dot> PartialDiagram::vacant_dots() const {
  std::vector<Dot> out;
  out.reserve(vacant_count());
  for (std::uint32_t i = 0; i < dot_count(); ++i) {
    if (partner_[i] < 0) out.emplace_back(i + 1);
  }
  return out;
}

void PartialDiagram::add(std::int64_t tail, std::int64_t head) {
  const std::int64_t dots = dot_count();
  for (std::int64_t v : {tail, head}) {
    if (v < 1 || v > dots) {
      throw ChordError(ErrorKind::DotOutOfRange,
                       "dot " + std::to_string(v) + " outside 1.." + std::to_string(dots));
    }
  }
  if (tail == head) {
    throw ChordError(ErrorKind::DuplicateDot,
                     "chord (" + std::to_string(tail) + "," + std::to_string(head) +
                         ") uses one dot twice");
  }
  for (std::int64_t v : {tail, head}) {
    if (partner_[v - 1] >= 0) {
      throw ChordError(ErrorKind::DuplicateDot, "dot " + std::to_string(v) + " is in two chords");
    }
  }
  if (chords_.size() == order_) {
    throw ChordError(ErrorKind::TooManyChords, "more than n=" + std::to_string(order_) + " chords");
  }
  const auto t = static_cast<std::int32_t>(tail - 1);
  const auto h = static_cast<std::int32_t>(head - 1);
  const auto idx = static_cast<std::int32_t>(chords_.size());
  chords_.push_back({Dot(static_cast<std::uint32_t>(tail)), Dot(static_cast<std::uint32_t>(head))});
  partner_[t] = h;
  partner_[h] = t;
  is_tail_[t] = 1;
  chord_of_[t] = idx;
  chord_of_[h] = idx;
}

PartialDiagram PartialDiagram::with_chord(OrientedChord chord) const {
  PartialDiagram out = *this;
  out.add(chord.tail.label(), chord.head.label());
  return out;
}

PartialDiagram make_partial(std::uint32_t order,
                            std::span<const std::pair<std::int64_t, std::int64_t>> chords) {
  if (order == 0 || order > kMaxOrder) {
    throw ChordError(ErrorKind::InvalidOrder,
                     "n must be in 1.." + std::to_string(kMaxOrder) + ", got " + std::to_string(order));
  }
  if (chords.size() > order) {
    throw ChordError(ErrorKind::TooManyChords, std::to_string(chords.size()) +
                                                   " chords for n=" + std::to_string(order));
  }
  PartialDiagram p;
  p.order_ = order;
  p.partner_.assign(2 * static_cast<std::size_t>(order), -1);
  p.is_tail_.assign(2 * static_cast<std::size_t>(order), 0);
  p.chord_of_.assign(2 * static_cast<std::size_t>(order), -1);
  p.chords_.reserve(chords.size());
  for (const auto& [t, h] : chords) p.add(t, h);
  return p;
}

Diagram::Diagram(PartialDiagram full) : PartialDiagram(std::move(full)) {
  if (!is_full()) {
    throw ChordError(ErrorKind::IncompleteDiagram,
                     std::to_string(chord_count()) + " of n=" + std::to_string(order()) +
                         " chords present");
  }
}

Diagram make_diagram(std::uint32_t order,
                     std::span<const std::pair<std::int64_t, std::int64_t>> chords) {
  return Diagram(make_partial(order, chords));
}

boost::multiprecision::cpp_int diagram_count(std::uint32_t order) {
  if (order == 0) throw ChordError(ErrorKind::InvalidOrder, "n must be positive");
  boost::multiprecision::cpp_int c = 1;
  for (std::uint32_t i = order + 1; i <= 2 * order; ++i) c *= i;
  return c;
}

// ---------------------------------------------------------------------------

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  PartialDiagram parse() {
    std::optional<std::int64_t> order;
    skip_ws();
    if (peek() == 'n') {
      ++pos_;
      expect('=');
      order = integer();
      expect(';');
    }
    std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
    skip_ws();
    if (!at_end() || !order) {
      pairs.push_back(pair());
      while (true) {
        skip_ws();
        if (at_end()) break;
        expect(',');
        pairs.push_back(pair());
      }
    }
    const std::int64_t n = order ? *order : static_cast<std::int64_t>(pairs.size());
    if (n < 1 || n > kMaxOrder) {
      throw ChordError(ErrorKind::InvalidOrder, "n=" + std::to_string(n));
    }
    return make_partial(static_cast<std::uint32_t>(n), pairs);
  }

 private:
  std::pair<std::int64_t, std::int64_t> pair() {
    expect('(');
    const auto a = integer();
    expect(',');
    const auto b = integer();
    expect(')');
    return {a, b};
  }

  std::int64_t integer() {
    skip_ws();
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr == first) fail("integer");
    pos_ += static_cast<std::size_t>(ptr - first);
    return v;
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) fail(std::string("'") + c + "'");
    ++pos_;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  [[noreturn]] void fail(const std::string& wanted) const {
    throw ChordError(ErrorKind::SyntaxError,
                     "expected " + wanted + " at offset " + std::to_string(pos_) + " in \"" +
                         std::string(text_) + "\"");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

PartialDiagram parse_diagram(std::string_view text) { return Parser(text).parse(); }

std::string format_diagram(const PartialDiagram& diagram) {
  std::string out = "n=" + std::to_string(diagram.order()) + ";";
  bool first = true;
  for (const auto& c : diagram.chords()) {
    if (!first) out += ',';
    first = false;
    out += '(' + std::to_string(c.tail.label()) + ',' + std::to_string(c.head.label()) + ')';
  }
  return out;
}

}  // namespace chordgenus
