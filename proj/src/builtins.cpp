#include "strlink/builtins.hpp"

#include <algorithm>
#include <set>

#include "strlink/error.hpp"

namespace strlink {

namespace {

// Long right-handed trefoil (closure of a 2-braid with three positive
// crossings, cut open), followed by three negative kinks to bring the
// writhe to 0.
constexpr std::string_view kTrefoil = "strands 1; u2 x1+ x1+ x1+ n2 u2 x1- n2 u2 x1- n2 u2 x1- n2";

// Closure of the 3-braid s1 s2^-1 s1 s2^-1 s1 with the third position closed
// by a cup/cap pair; a negative kink on strand 2 cancels its writhe.
constexpr std::string_view kWhitehead = "strands 2; u3 x1+ x2- x1+ x2- x1+ n3 u3 x2- n3";

// Pure braid (s2 s1^-1)^3; its closure is the Borromean rings with mu_123 = +1.
// Mirroring does not change mu_123, reversing the word negates it.
constexpr std::string_view kBorromean = "strands 3; x2+ x1- x2+ x1- x2+ x1-";

constexpr std::string_view kLeftTrefoil = "strands 1; u2 x1- x1- x1- n2";

void check_indices(int n, std::span<const int> idx) {
  if (n < 1) input_error("strand count must be >= 1");
  std::set<int> seen;
  for (int i : idx) {
    if (i < 1 || i > n)
      input_error("index " + std::to_string(i) + " out of range 1.." + std::to_string(n));
    if (!seen.insert(i).second) input_error("index " + std::to_string(i) + " repeated");
  }
}

std::vector<TangleEvent> local_events(std::string_view text) {
  const StringLinkDiagram d = parse_tangle(text);
  return {d.events().begin(), d.events().end()};
}

// Brings the strand at slot `from` leftwards to slot `to` (< from), passing
// over the strands in between.
void gather(std::vector<TangleEvent>& out, int from, int to) {
  for (int p = from - 1; p >= to; --p) out.push_back(TangleEvent::crossing(p, -1));
}

// Inverse of gather(out, from, to).
void release(std::vector<TangleEvent>& out, int from, int to) {
  for (int p = to; p <= from - 1; ++p) out.push_back(TangleEvent::crossing(p, +1));
}

std::vector<TangleEvent> reversed(std::vector<TangleEvent> events) {
  std::reverse(events.begin(), events.end());
  return events;
}

}  // namespace

StringLinkDiagram trefoil_insert(int n, int i) {
  const int idx[] = {i};
  check_indices(n, idx);
  return StringLinkDiagram(n, shifted(local_events(kTrefoil), i));
}

StringLinkDiagram whitehead(int n, int i, int j) {
  const int idx[] = {i, j};
  check_indices(n, idx);
  if (i > j) std::swap(i, j);
  std::vector<TangleEvent> events;
  gather(events, j, i + 1);
  const auto local = shifted(local_events(kWhitehead), i);
  events.insert(events.end(), local.begin(), local.end());
  release(events, j, i + 1);
  return StringLinkDiagram(n, std::move(events));
}

StringLinkDiagram borromean(int n, int i, int j, int k) {
  const int idx[] = {i, j, k};
  check_indices(n, idx);
  std::array<int, 3> sorted{i, j, k};
  std::sort(sorted.begin(), sorted.end());
  const auto [a, b, c] = sorted;
  // mu is alternating in its indices: an odd ordering needs the reversed braid.
  const bool odd = ((i > j) + (i > k) + (j > k)) % 2 == 1;

  std::vector<TangleEvent> events;
  gather(events, b, a + 1);
  gather(events, c, a + 2);
  auto local = shifted(local_events(kBorromean), a);
  if (odd) local = reversed(std::move(local));
  events.insert(events.end(), local.begin(), local.end());
  release(events, c, a + 2);
  release(events, b, a + 1);
  return StringLinkDiagram(n, std::move(events));
}

AmbientPresentation poincare() {
  return AmbientPresentation{{SurgeryComponent{close(parse_tangle(kLeftTrefoil), {1}), -1}}};
}

Builtin builtin(std::string_view name, int n, std::span<const int> indices) {
  auto need = [&](std::size_t count) {
    if (indices.size() != count)
      input_error(std::string(name) + " takes " + std::to_string(count) + " indices, got " +
                  std::to_string(indices.size()));
  };
  if (name == "trefoil_insert") {
    need(1);
    return trefoil_insert(n, indices[0]);
  }
  if (name == "whitehead") {
    need(2);
    return whitehead(n, indices[0], indices[1]);
  }
  if (name == "borromean") {
    need(3);
    return borromean(n, indices[0], indices[1], indices[2]);
  }
  if (name == "poincare") {
    need(0);
    return poincare();
  }
  input_error("unknown built-in '" + std::string(name) + "'");
}

}  // namespace strlink
