#pragma once

// Framed string links in D^2 x I as Morse event words.
//
// A diagram is read bottom-to-top.  Slots are 1-based positions along the
// horizontal line at a given height; the width starts and ends at n.
//
//   x<k>+   crossing of slots k,k+1, strand from lower-left to upper-right over
//   x<k>-   crossing of slots k,k+1, strand from lower-right to upper-left over
//   u<k>    cup: two new strands appear at slots k,k+1
//   n<k>    cap: strands at slots k,k+1 are joined
//
// Framing is the blackboard framing: the self-writhe of each strand.

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace strlink {

enum class EventKind { Crossing, Cup, Cap };

struct TangleEvent {
  EventKind kind = EventKind::Crossing;
  int pos = 1;   // 1-based slot
  int sign = 0;  // geometric sign of a crossing, 0 for cups and caps

  static TangleEvent crossing(int pos, int sign) { return {EventKind::Crossing, pos, sign}; }
  static TangleEvent cup(int pos) { return {EventKind::Cup, pos, 0}; }
  static TangleEvent cap(int pos) { return {EventKind::Cap, pos, 0}; }

  // Width change produced by the event.
  int width_delta() const {
    return kind == EventKind::Cup ? 2 : kind == EventKind::Cap ? -2 : 0;
  }

  friend bool operator==(const TangleEvent&, const TangleEvent&) = default;
};

// One passage of a strand through a crossing.
struct Passage {
  int crossing = 0;         // index into Layout::crossings
  bool over = false;
  bool upward = true;       // direction of travel in the diagram plane
  bool lower_left = false;  // on the lower-left/upper-right diagonal
};

struct CrossingInfo {
  int event = 0;  // index into the event word
  int sign = 0;   // oriented crossing sign
  int over_strand = 0;  // 0-based strand indices
  int under_strand = 0;
  int over_passage = 0;  // index into Layout::strands[over_strand]
  int under_passage = 0;
};

// Traced structure of a valid diagram.
struct Layout {
  std::vector<std::vector<Passage>> strands;  // passages bottom-to-top along each strand
  std::vector<CrossingInfo> crossings;        // in event order
  std::vector<int> event_crossing;            // event index -> crossing index or -1
  std::vector<int> widths;                    // width below each event, plus the top width
};

class StringLinkDiagram {
 public:
  // Validates width bookkeeping and the string-link condition; throws Error(Input).
  StringLinkDiagram(int n, std::vector<TangleEvent> events);

  static StringLinkDiagram trivial(int n) { return StringLinkDiagram(n, {}); }

  int strands() const { return n_; }
  std::span<const TangleEvent> events() const { return events_; }
  const Layout& layout() const { return *layout_; }

  int crossing_count() const { return static_cast<int>(layout_->crossings.size()); }

  // Self-writhe of strand i (1-based).
  int framing(int i) const;
  // Sum of signs of crossings where strand i passes under strand j, i != j (1-based).
  int under_count(int i, int j) const;

  friend bool operator==(const StringLinkDiagram& a, const StringLinkDiagram& b) {
    return a.n_ == b.n_ && a.events_ == b.events_;
  }

 private:
  int n_;
  std::vector<TangleEvent> events_;
  std::shared_ptr<const Layout> layout_;
};

StringLinkDiagram parse_tangle(std::string_view text);
std::string to_text(const StringLinkDiagram& d);
std::string to_text(const TangleEvent& e);

// b stacked over a.
StringLinkDiagram stack(const StringLinkDiagram& a, const StringLinkDiagram& b);

// Events of `local` shifted so that its slot 1 sits at slot `base`; the result
// is meant to be spliced into a wider diagram.
std::vector<TangleEvent> shifted(std::span<const TangleEvent> local, int base);

}  // namespace strlink
