#include "strlink/tangle.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "strlink/error.hpp"

namespace strlink {

namespace {

enum class LinkKind { None, Straight, DiagonalA, DiagonalB, Cup, Cap };

struct NodeLink {
  int target = -1;
  int event = -1;
  LinkKind kind = LinkKind::None;
};

// A node is the piece of strand crossing the horizontal line at some level
// and slot.  Level t sits just below event t.
struct Node {
  NodeLink up, down;
};

struct Graph {
  std::vector<int> widths;
  std::vector<int> offsets;
  std::vector<Node> nodes;

  int id(int level, int slot) const { return offsets[level] + slot - 1; }
};

Graph build_graph(int n, std::span<const TangleEvent> events) {
  Graph g;
  g.widths.push_back(n);
  for (std::size_t t = 0; t < events.size(); ++t) {
    const TangleEvent& e = events[t];
    const int w = g.widths.back();
    std::ostringstream where;
    where << "event " << t + 1 << " (" << to_text(e) << ")";
    if (e.pos < 1) input_error(where.str() + ": slot must be >= 1");
    switch (e.kind) {
      case EventKind::Crossing:
        if (e.sign != 1 && e.sign != -1) input_error(where.str() + ": crossing sign must be +-1");
        if (e.pos + 1 > w)
          input_error(where.str() + ": slot " + std::to_string(e.pos + 1) + " exceeds width " +
                      std::to_string(w));
        break;
      case EventKind::Cap:
        if (e.pos + 1 > w)
          input_error(where.str() + ": slot " + std::to_string(e.pos + 1) + " exceeds width " +
                      std::to_string(w));
        break;
      case EventKind::Cup:
        if (e.pos > w + 1)
          input_error(where.str() + ": cup position exceeds width " + std::to_string(w) + " + 1");
        break;
    }
    g.widths.push_back(w + e.width_delta());
  }
  if (g.widths.back() != n)
    input_error("final width " + std::to_string(g.widths.back()) + " differs from strand count " +
                std::to_string(n));

  int total = 0;
  for (int w : g.widths) {
    g.offsets.push_back(total);
    total += w;
  }
  g.nodes.resize(total);

  auto connect = [&](int lower, int upper, int event, LinkKind kind) {
    g.nodes[lower].up = {upper, event, kind};
    g.nodes[upper].down = {lower, event, kind};
  };

  for (std::size_t t = 0; t < events.size(); ++t) {
    const TangleEvent& e = events[t];
    const int level = static_cast<int>(t);
    const int w = g.widths[t];
    const int ev = static_cast<int>(t);
    switch (e.kind) {
      case EventKind::Crossing:
        for (int s = 1; s <= w; ++s) {
          if (s == e.pos)
            connect(g.id(level, s), g.id(level + 1, s + 1), ev, LinkKind::DiagonalA);
          else if (s == e.pos + 1)
            connect(g.id(level, s), g.id(level + 1, s - 1), ev, LinkKind::DiagonalB);
          else
            connect(g.id(level, s), g.id(level + 1, s), ev, LinkKind::Straight);
        }
        break;
      case EventKind::Cup: {
        for (int s = 1; s <= w; ++s)
          connect(g.id(level, s), g.id(level + 1, s < e.pos ? s : s + 2), ev, LinkKind::Straight);
        const int a = g.id(level + 1, e.pos), b = g.id(level + 1, e.pos + 1);
        g.nodes[a].down = {b, ev, LinkKind::Cup};
        g.nodes[b].down = {a, ev, LinkKind::Cup};
        break;
      }
      case EventKind::Cap: {
        for (int s = 1; s <= w; ++s) {
          if (s == e.pos || s == e.pos + 1) continue;
          connect(g.id(level, s), g.id(level + 1, s < e.pos ? s : s - 2), ev, LinkKind::Straight);
        }
        const int a = g.id(level, e.pos), b = g.id(level, e.pos + 1);
        g.nodes[a].up = {b, ev, LinkKind::Cap};
        g.nodes[b].up = {a, ev, LinkKind::Cap};
        break;
      }
    }
  }
  return g;
}

std::shared_ptr<const Layout> trace(int n, std::span<const TangleEvent> events) {
  const Graph g = build_graph(n, events);
  auto layout = std::make_shared<Layout>();
  layout->widths = g.widths;
  layout->strands.resize(n);
  layout->event_crossing.assign(events.size(), -1);

  const int top = static_cast<int>(events.size());
  std::vector<char> visited(g.nodes.size(), 0);
  // passages per event: [diagonal A, diagonal B] as (strand, passage index)
  std::vector<std::array<std::pair<int, int>, 2>> at_event(events.size(), {{{-1, -1}, {-1, -1}}});

  for (int i = 0; i < n; ++i) {
    int node = g.id(0, i + 1);
    bool up = true;
    auto& passages = layout->strands[i];
    while (true) {
      visited[node] = 1;
      const NodeLink& link = up ? g.nodes[node].up : g.nodes[node].down;
      if (link.kind == LinkKind::None) break;
      switch (link.kind) {
        case LinkKind::Cap:
          up = false;
          break;
        case LinkKind::Cup:
          up = true;
          break;
        case LinkKind::DiagonalA:
        case LinkKind::DiagonalB: {
          const bool diag_a = link.kind == LinkKind::DiagonalA;
          const TangleEvent& e = events[link.event];
          const bool over = diag_a == (e.sign > 0);
          at_event[link.event][diag_a ? 0 : 1] = {i, static_cast<int>(passages.size())};
          passages.push_back({-1, over, up, diag_a});
          break;
        }
        default:
          break;
      }
      node = link.target;
    }
    // Ended at a node without continuation: a bottom or top endpoint.
    int level = 0;
    while (level + 1 < static_cast<int>(g.offsets.size()) && g.offsets[level + 1] <= node) ++level;
    const int slot = node - g.offsets[level] + 1;
    if (level != top || !up) {
      input_error("strand from bottom endpoint " + std::to_string(i + 1) +
                  " returns to bottom endpoint " + std::to_string(slot));
    }
    if (slot != i + 1) {
      input_error("strand permutation is not the identity: bottom endpoint " +
                  std::to_string(i + 1) + " exits at top endpoint " + std::to_string(slot));
    }
  }
  for (std::size_t v = 0; v < visited.size(); ++v)
    if (!visited[v]) input_error("diagram contains a closed component");

  for (std::size_t t = 0; t < events.size(); ++t) {
    if (events[t].kind != EventKind::Crossing) continue;
    const auto [a, b] = at_event[t];
    const Passage& pa = layout->strands[a.first][a.second];
    const Passage& pb = layout->strands[b.first][b.second];
    CrossingInfo info;
    info.event = static_cast<int>(t);
    info.sign = events[t].sign * (pa.upward ? 1 : -1) * (pb.upward ? 1 : -1);
    const auto over = pa.over ? a : b;
    const auto under = pa.over ? b : a;
    info.over_strand = over.first;
    info.over_passage = over.second;
    info.under_strand = under.first;
    info.under_passage = under.second;
    const int index = static_cast<int>(layout->crossings.size());
    layout->event_crossing[t] = index;
    layout->strands[a.first][a.second].crossing = index;
    layout->strands[b.first][b.second].crossing = index;
    layout->crossings.push_back(info);
  }
  return layout;
}

}  // namespace

StringLinkDiagram::StringLinkDiagram(int n, std::vector<TangleEvent> events)
    : n_(n), events_(std::move(events)) {
  if (n < 0) input_error("strand count must be non-negative");
  layout_ = trace(n_, events_);
}

int StringLinkDiagram::framing(int i) const {
  int f = 0;
  for (const CrossingInfo& c : layout_->crossings)
    if (c.over_strand == i - 1 && c.under_strand == i - 1) f += c.sign;
  return f;
}

int StringLinkDiagram::under_count(int i, int j) const {
  int total = 0;
  for (const CrossingInfo& c : layout_->crossings)
    if (c.under_strand == i - 1 && c.over_strand == j - 1) total += c.sign;
  return total;
}

std::string to_text(const TangleEvent& e) {
  switch (e.kind) {
    case EventKind::Crossing:
      return "x" + std::to_string(e.pos) + (e.sign > 0 ? "+" : "-");
    case EventKind::Cup:
      return "u" + std::to_string(e.pos);
    case EventKind::Cap:
      return "n" + std::to_string(e.pos);
  }
  return {};
}

std::string to_text(const StringLinkDiagram& d) {
  std::string out = "strands " + std::to_string(d.strands()) + ";";
  for (const TangleEvent& e : d.events()) out += " " + to_text(e);
  return out;
}

namespace {

int parse_int(std::string_view s, std::string_view token) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    input_error("syntax error: bad integer in '" + std::string(token) + "'");
  return value;
}

std::vector<std::string_view> split_ws(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j > i) out.push_back(text.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

StringLinkDiagram parse_tangle(std::string_view text) {
  const auto semi = text.find(';');
  if (semi == std::string_view::npos) input_error("syntax error: missing ';' after header");
  const auto header = split_ws(text.substr(0, semi));
  if (header.size() != 2 || header[0] != "strands")
    input_error("syntax error: header must be 'strands <n>;'");
  const int n = parse_int(header[1], header[1]);

  std::vector<TangleEvent> events;
  for (std::string_view tok : split_ws(text.substr(semi + 1))) {
    if (tok.size() < 2) input_error("syntax error: bad event '" + std::string(tok) + "'");
    switch (tok[0]) {
      case 'x': {
        const char s = tok.back();
        if (s != '+' && s != '-')
          input_error("syntax error: crossing '" + std::string(tok) + "' needs a trailing + or -");
        events.push_back(TangleEvent::crossing(parse_int(tok.substr(1, tok.size() - 2), tok),
                                               s == '+' ? 1 : -1));
        break;
      }
      case 'u':
        events.push_back(TangleEvent::cup(parse_int(tok.substr(1), tok)));
        break;
      case 'n':
        events.push_back(TangleEvent::cap(parse_int(tok.substr(1), tok)));
        break;
      default:
        input_error("syntax error: unknown event '" + std::string(tok) + "'");
    }
  }
  return StringLinkDiagram(n, std::move(events));
}

StringLinkDiagram stack(const StringLinkDiagram& a, const StringLinkDiagram& b) {
  if (a.strands() != b.strands())
    input_error("cannot stack a " + std::to_string(b.strands()) + "-strand diagram over a " +
                std::to_string(a.strands()) + "-strand diagram");
  std::vector<TangleEvent> events(a.events().begin(), a.events().end());
  events.insert(events.end(), b.events().begin(), b.events().end());
  return StringLinkDiagram(a.strands(), std::move(events));
}

std::vector<TangleEvent> shifted(std::span<const TangleEvent> local, int base) {
  std::vector<TangleEvent> out(local.begin(), local.end());
  for (TangleEvent& e : out) e.pos += base - 1;
  return out;
}

}  // namespace strlink
