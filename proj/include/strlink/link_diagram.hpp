#pragma once

#include <array>
#include <span>
#include <vector>

#include "strlink/tangle.hpp"

namespace strlink {

// PD-style crossing: the four incident arcs in counterclockwise order starting
// from the incoming under-arc, so arcs[2] is the outgoing under-arc.  The over
// strand runs arcs[3] -> arcs[1] when sign > 0 and arcs[1] -> arcs[3] otherwise.
struct PDCrossing {
  std::array<int, 4> arcs{};
  int sign = 1;

  int over_in() const { return sign > 0 ? arcs[3] : arcs[1]; }
  int over_out() const { return sign > 0 ? arcs[1] : arcs[3]; }

  friend bool operator==(const PDCrossing&, const PDCrossing&) = default;
};

// Oriented link diagram.  Every arc id appears exactly twice among the
// crossings, except the ids in `loops`, which are crossing-free components.
class LinkDiagram {
 public:
  LinkDiagram() = default;
  LinkDiagram(std::vector<PDCrossing> crossings, std::vector<int> loops = {});

  std::span<const PDCrossing> crossings() const { return crossings_; }
  std::span<const int> loops() const { return loops_; }

  // Arcs of each component in traversal order, starting at the component's
  // smallest arc id; components ordered by that id.
  const std::vector<std::vector<int>>& components() const { return components_; }

  int crossing_count() const { return static_cast<int>(crossings_.size()); }
  int component_count() const { return static_cast<int>(components_.size()); }
  int component_of_arc(int arc) const;

  // Half the signed count of crossings between components a and b (0-based).
  int linking_number(int a, int b) const;

 private:
  std::vector<PDCrossing> crossings_;
  std::vector<int> loops_;
  std::vector<std::vector<int>> components_;
  std::vector<std::pair<int, int>> arc_component_;  // sorted (arc, component)
};

struct SurgeryComponent {
  LinkDiagram knot;
  int framing = 1;
};

// Surgery description of the ambient homology ball: knots split from the
// string link and from each other, each with framing +-1.  Splitness is
// declared by the format, not checked.
struct AmbientPresentation {
  std::vector<SurgeryComponent> components;
};

// Throws Error(Input) unless every component is a one-component diagram with framing +-1.
void validate(const AmbientPresentation& ambient);

// Sublink of the closure consisting of the selected strands (1-based).
LinkDiagram close(const StringLinkDiagram& d, std::span<const int> strands);
LinkDiagram close(const StringLinkDiagram& d, std::initializer_list<int> strands);

// Plat closure of a 2-strand diagram.
LinkDiagram plat_close(const StringLinkDiagram& d);

// Plat closure of the 2-strand sublink on strands i, j (1-based, i != j).
LinkDiagram plat_close_pair(const StringLinkDiagram& d, int i, int j);

}  // namespace strlink
