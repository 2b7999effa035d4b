#include "strlink/moves.hpp"

#include <optional>

#include "strlink/error.hpp"

namespace strlink {

namespace {

using Events = std::vector<TangleEvent>;

bool is_crossing(const TangleEvent& e) { return e.kind == EventKind::Crossing; }

bool matches_r1(std::span<const TangleEvent> ev, int i) {
  if (i < 0 || i + 2 >= static_cast<int>(ev.size())) return false;
  const auto &a = ev[i], &b = ev[i + 1], &c = ev[i + 2];
  return a.kind == EventKind::Cup && is_crossing(b) && c.kind == EventKind::Cap &&
         a.pos == b.pos + 1 && c.pos == a.pos;
}

bool matches_r2(std::span<const TangleEvent> ev, int i) {
  if (i < 0 || i + 1 >= static_cast<int>(ev.size())) return false;
  const auto &a = ev[i], &b = ev[i + 1];
  return is_crossing(a) && is_crossing(b) && a.pos == b.pos && a.sign == -b.sign;
}

bool matches_zigzag(std::span<const TangleEvent> ev, int i) {
  if (i < 0 || i + 1 >= static_cast<int>(ev.size())) return false;
  const auto &a = ev[i], &b = ev[i + 1];
  return a.kind == EventKind::Cup && b.kind == EventKind::Cap &&
         (b.pos == a.pos - 1 || b.pos == a.pos + 1);
}

// Replacement for an R3 triangle at i, if there is one.
std::optional<std::array<TangleEvent, 3>> r3_replacement(std::span<const TangleEvent> ev, int i) {
  if (i < 0 || i + 2 >= static_cast<int>(ev.size())) return std::nullopt;
  const auto &a = ev[i], &b = ev[i + 1], &c = ev[i + 2];
  if (!is_crossing(a) || !is_crossing(b) || !is_crossing(c)) return std::nullopt;
  if (a.pos != c.pos || (b.pos != a.pos + 1 && b.pos != a.pos - 1)) return std::nullopt;
  const int p = a.pos, q = b.pos;
  if (a.sign == b.sign && b.sign == c.sign)
    return std::array{TangleEvent::crossing(q, a.sign), TangleEvent::crossing(p, a.sign),
                      TangleEvent::crossing(q, a.sign)};
  if (c.sign == -a.sign)
    return std::array{TangleEvent::crossing(q, -a.sign), TangleEvent::crossing(p, b.sign),
                      TangleEvent::crossing(q, a.sign)};
  return std::nullopt;
}

// Slots touched by an event just above (upper) or just below (lower) it, as
// [pos, pos + extent).  Cups have no lower extent and caps no upper extent.
int upper_extent(const TangleEvent& e) { return e.kind == EventKind::Cap ? 0 : 2; }
int lower_extent(const TangleEvent& e) { return e.kind == EventKind::Cup ? 0 : 2; }

// Swapped pair for events e1 (lower) and e2 (upper), if their supports are disjoint.
std::optional<std::array<TangleEvent, 2>> far_commuted(const TangleEvent& e1, const TangleEvent& e2) {
  if (e2.pos >= e1.pos + upper_extent(e1)) {
    TangleEvent lo = e2, hi = e1;
    lo.pos -= e1.width_delta();
    return std::array{lo, hi};
  }
  if (e2.pos + lower_extent(e2) <= e1.pos) {
    TangleEvent lo = e2, hi = e1;
    hi.pos += e2.width_delta();
    return std::array{lo, hi};
  }
  return std::nullopt;
}

[[noreturn]] void illegal(const Move& m, const std::string& why) {
  input_error(std::string("illegal ") + to_string(m.kind) + " at event " +
              std::to_string(m.index) + ": " + why);
}

void check_insert_site(const StringLinkDiagram& d, const Move& m, int max_slot_offset) {
  const int count = static_cast<int>(d.events().size());
  if (m.index < 0 || m.index > count) illegal(m, "event index out of range");
  const int width = d.layout().widths[m.index];
  if (m.slot < 1 || m.slot + max_slot_offset > width)
    illegal(m, "slot " + std::to_string(m.slot) + " not available at width " + std::to_string(width));
  if (m.sign != 1 && m.sign != -1) illegal(m, "sign must be +1 or -1");
}

}  // namespace

const char* to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::R1Insert: return "R1-insert";
    case MoveKind::R1Remove: return "R1-remove";
    case MoveKind::R2Insert: return "R2-insert";
    case MoveKind::R2Remove: return "R2-remove";
    case MoveKind::R3: return "R3";
    case MoveKind::ZigzagInsert: return "zigzag-insert";
    case MoveKind::ZigzagRemove: return "zigzag-remove";
    case MoveKind::FarCommute: return "far-commute";
  }
  return "?";
}

StringLinkDiagram apply_move(const StringLinkDiagram& d, const Move& m) {
  const auto ev = d.events();
  Events out(ev.begin(), ev.end());
  const auto at = out.begin() + m.index;
  switch (m.kind) {
    case MoveKind::R1Insert: {
      check_insert_site(d, m, 0);
      const int p = m.slot;
      out.insert(at, {TangleEvent::cup(p + 1), TangleEvent::crossing(p, m.sign), TangleEvent::cap(p + 1)});
      break;
    }
    case MoveKind::R1Remove:
      if (!matches_r1(ev, m.index)) illegal(m, "no kink here");
      out.erase(at, at + 3);
      break;
    case MoveKind::R2Insert: {
      check_insert_site(d, m, 1);
      out.insert(at, {TangleEvent::crossing(m.slot, m.sign), TangleEvent::crossing(m.slot, -m.sign)});
      break;
    }
    case MoveKind::R2Remove:
      if (!matches_r2(ev, m.index)) illegal(m, "no cancelling crossing pair here");
      out.erase(at, at + 2);
      break;
    case MoveKind::R3: {
      const auto rep = r3_replacement(ev, m.index);
      if (!rep) illegal(m, "no braid triangle here");
      std::copy(rep->begin(), rep->end(), at);
      break;
    }
    case MoveKind::ZigzagInsert: {
      check_insert_site(d, m, 0);
      const int p = m.slot;
      if (m.sign > 0)
        out.insert(at, {TangleEvent::cup(p + 1), TangleEvent::cap(p)});
      else
        out.insert(at, {TangleEvent::cup(p), TangleEvent::cap(p + 1)});
      break;
    }
    case MoveKind::ZigzagRemove:
      if (!matches_zigzag(ev, m.index)) illegal(m, "no cup/cap zigzag here");
      out.erase(at, at + 2);
      break;
    case MoveKind::FarCommute: {
      if (m.index < 0 || m.index + 1 >= static_cast<int>(ev.size()))
        illegal(m, "event index out of range");
      const auto swapped = far_commuted(ev[m.index], ev[m.index + 1]);
      if (!swapped) illegal(m, "events share a slot");
      out[m.index] = (*swapped)[0];
      out[m.index + 1] = (*swapped)[1];
      break;
    }
  }
  return StringLinkDiagram(d.strands(), std::move(out));
}

std::vector<Move> enumerate_moves(const StringLinkDiagram& d) {
  const auto ev = d.events();
  const int count = static_cast<int>(ev.size());
  const auto& widths = d.layout().widths;
  std::vector<Move> moves;
  for (int i = 0; i <= count; ++i) {
    const int w = widths[i];
    for (int sign : {1, -1}) {
      for (int p = 1; p <= w; ++p) {
        moves.push_back({MoveKind::R1Insert, i, p, sign});
        moves.push_back({MoveKind::ZigzagInsert, i, p, sign});
      }
      for (int p = 1; p + 1 <= w; ++p) moves.push_back({MoveKind::R2Insert, i, p, sign});
    }
  }
  for (int i = 0; i < count; ++i) {
    if (matches_r1(ev, i)) moves.push_back({MoveKind::R1Remove, i, 1, 1});
    if (matches_r2(ev, i)) moves.push_back({MoveKind::R2Remove, i, 1, 1});
    if (r3_replacement(ev, i)) moves.push_back({MoveKind::R3, i, 1, 1});
    if (matches_zigzag(ev, i)) moves.push_back({MoveKind::ZigzagRemove, i, 1, 1});
    if (i + 1 < count && far_commuted(ev[i], ev[i + 1]))
      moves.push_back({MoveKind::FarCommute, i, 1, 1});
  }
  return moves;
}

}  // namespace strlink
