#include "strlink/link_diagram.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "strlink/error.hpp"

namespace strlink {

LinkDiagram::LinkDiagram(std::vector<PDCrossing> crossings, std::vector<int> loops)
    : crossings_(std::move(crossings)), loops_(std::move(loops)) {
  std::map<int, int> successor;
  std::map<int, int> in_count;
  auto add_step = [&](int from, int to) {
    if (!successor.emplace(from, to).second)
      input_error("arc " + std::to_string(from) + " leaves more than one crossing");
    if (++in_count[to] > 1)
      input_error("arc " + std::to_string(to) + " enters more than one crossing");
  };
  for (const PDCrossing& c : crossings_) {
    if (c.sign != 1 && c.sign != -1) input_error("PD crossing sign must be +-1");
    add_step(c.arcs[0], c.arcs[2]);
    add_step(c.over_in(), c.over_out());
  }
  for (const auto& [arc, next] : successor)
    if (!in_count.count(arc))
      input_error("arc " + std::to_string(arc) + " occurs only once among the crossings");
  for (const auto& [arc, count] : in_count)
    if (!successor.count(arc))
      input_error("arc " + std::to_string(arc) + " occurs only once among the crossings");

  std::set<int> loop_set;
  for (int a : loops_) {
    if (successor.count(a)) input_error("loop arc " + std::to_string(a) + " also occurs in a crossing");
    if (!loop_set.insert(a).second) input_error("loop arc " + std::to_string(a) + " repeated");
  }

  // Successor map goes from an arc's head crossing to the next arc; following
  // it from the smallest arc of each orbit gives the traversal order.
  std::set<int> seen;
  std::vector<std::vector<int>> comps;
  for (const auto& [start, unused] : successor) {
    if (seen.count(start)) continue;
    std::vector<int> comp;
    int a = start;
    do {
      seen.insert(a);
      comp.push_back(a);
      a = successor.at(a);
    } while (a != start);
    comps.push_back(std::move(comp));
  }
  for (int a : loop_set) comps.push_back({a});
  std::sort(comps.begin(), comps.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
  components_ = std::move(comps);
  for (std::size_t c = 0; c < components_.size(); ++c)
    for (int a : components_[c]) arc_component_.emplace_back(a, static_cast<int>(c));
  std::sort(arc_component_.begin(), arc_component_.end());
}

int LinkDiagram::component_of_arc(int arc) const {
  auto it = std::lower_bound(arc_component_.begin(), arc_component_.end(),
                             std::make_pair(arc, -1));
  if (it == arc_component_.end() || it->first != arc)
    input_error("unknown arc " + std::to_string(arc));
  return it->second;
}

int LinkDiagram::linking_number(int a, int b) const {
  int total = 0;
  for (const PDCrossing& c : crossings_) {
    const int under = component_of_arc(c.arcs[0]);
    const int over = component_of_arc(c.over_in());
    if ((under == a && over == b) || (under == b && over == a)) total += c.sign;
  }
  return total / 2;
}

void validate(const AmbientPresentation& ambient) {
  for (std::size_t i = 0; i < ambient.components.size(); ++i) {
    const SurgeryComponent& s = ambient.components[i];
    if (s.framing != 1 && s.framing != -1)
      input_error("surgery component " + std::to_string(i + 1) + " has framing " +
                  std::to_string(s.framing) + "; only +-1 is supported");
    if (s.knot.component_count() != 1)
      input_error("surgery component " + std::to_string(i + 1) + " is not a knot");
  }
}

namespace {

struct PathPiece {
  int strand;  // 0-based
  bool reversed;
};

struct Step {
  int crossing;
  bool lower_left;
  bool upward;
  int in_arc = 0;
  int out_arc = 0;
};

LinkDiagram emit(const StringLinkDiagram& d, const std::vector<std::vector<PathPiece>>& paths) {
  const Layout& layout = d.layout();
  std::vector<char> used(d.strands(), 0);
  for (const auto& path : paths)
    for (const PathPiece& p : path) used[p.strand] = 1;

  auto kept = [&](int crossing) {
    const CrossingInfo& c = layout.crossings[crossing];
    return used[c.over_strand] && used[c.under_strand];
  };

  // Per crossing: the steps on diagonal A and diagonal B.
  std::vector<std::array<Step, 2>> at(layout.crossings.size());
  std::vector<int> loops;
  int next_arc = 1;
  for (const auto& path : paths) {
    std::vector<Step> steps;
    for (const PathPiece& piece : path) {
      const auto& passages = layout.strands[piece.strand];
      const int m = static_cast<int>(passages.size());
      for (int t = 0; t < m; ++t) {
        const Passage& p = passages[piece.reversed ? m - 1 - t : t];
        if (!kept(p.crossing)) continue;
        steps.push_back({p.crossing, p.lower_left, piece.reversed ? !p.upward : p.upward});
      }
    }
    const int len = static_cast<int>(steps.size());
    if (len == 0) {
      loops.push_back(next_arc++);
      continue;
    }
    for (int t = 0; t < len; ++t) {
      steps[t].in_arc = next_arc + t;
      steps[t].out_arc = next_arc + (t + 1) % len;
      at[steps[t].crossing][steps[t].lower_left ? 0 : 1] = steps[t];
    }
    next_arc += len;
  }

  std::vector<PDCrossing> pd;
  for (std::size_t c = 0; c < layout.crossings.size(); ++c) {
    if (!kept(static_cast<int>(c))) continue;
    const int geometric = d.events()[layout.crossings[c].event].sign;
    const Step& a = at[c][0];
    const Step& b = at[c][1];
    // corners in counterclockwise order: lower-right, upper-right, upper-left, lower-left
    std::array<int, 4> corner{};
    corner[3] = a.upward ? a.in_arc : a.out_arc;
    corner[1] = a.upward ? a.out_arc : a.in_arc;
    corner[0] = b.upward ? b.in_arc : b.out_arc;
    corner[2] = b.upward ? b.out_arc : b.in_arc;
    const Step& under = geometric > 0 ? b : a;
    int start = 0;
    if (&under == &a)
      start = a.upward ? 3 : 1;
    else
      start = b.upward ? 0 : 2;
    PDCrossing x;
    for (int k = 0; k < 4; ++k) x.arcs[k] = corner[(start + k) % 4];
    x.sign = geometric * (a.upward ? 1 : -1) * (b.upward ? 1 : -1);
    pd.push_back(x);
  }
  return LinkDiagram(std::move(pd), std::move(loops));
}

}  // namespace

LinkDiagram close(const StringLinkDiagram& d, std::span<const int> strands) {
  if (strands.empty()) input_error("closure needs at least one strand");
  std::set<int> chosen;
  for (int s : strands) {
    if (s < 1 || s > d.strands())
      input_error("strand index " + std::to_string(s) + " out of range 1.." +
                  std::to_string(d.strands()));
    if (!chosen.insert(s).second) input_error("strand index " + std::to_string(s) + " repeated");
  }
  std::vector<std::vector<PathPiece>> paths;
  for (int s : chosen) paths.push_back({{s - 1, false}});
  return emit(d, paths);
}

LinkDiagram close(const StringLinkDiagram& d, std::initializer_list<int> strands) {
  return close(d, std::span<const int>(strands.begin(), strands.size()));
}

LinkDiagram plat_close(const StringLinkDiagram& d) {
  if (d.strands() != 2)
    input_error("plat closure needs a 2-strand diagram, got " + std::to_string(d.strands()));
  return plat_close_pair(d, 1, 2);
}

LinkDiagram plat_close_pair(const StringLinkDiagram& d, int i, int j) {
  if (i == j || i < 1 || j < 1 || i > d.strands() || j > d.strands())
    input_error("plat closure needs two distinct strands in range");
  if (i > j) std::swap(i, j);
  return emit(d, {{{i - 1, false}, {j - 1, true}}});
}

}  // namespace strlink
