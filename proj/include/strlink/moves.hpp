#pragma once

// Local moves on event words.  Every move produces a diagram of the same
// framed string link; applying one at an illegal site throws Error(Input).
//
//   R1Insert     u<p+1> x<p>s n<p+1> inserted before event `index` (a kink of sign s)
//   R1Remove     removes that pattern starting at `index`
//   R2Insert     x<p>s x<p>-s inserted before `index`
//   R2Remove     removes x<p>s x<p>-s starting at `index`
//   R3           x<p>a x<q>b x<p>c  ->  x<q>a' x<p>b x<q>c'   with q = p +- 1
//   ZigzagInsert u<p+1> n<p> (sign > 0) or u<p> n<p+1> (sign < 0) inserted before `index`
//   ZigzagRemove removes either zigzag pattern starting at `index`
//   FarCommute   swaps events `index` and `index + 1` when they touch disjoint slots

#include <vector>

#include "strlink/tangle.hpp"

namespace strlink {

enum class MoveKind { R1Insert, R1Remove, R2Insert, R2Remove, R3, ZigzagInsert, ZigzagRemove, FarCommute };

struct Move {
  MoveKind kind = MoveKind::FarCommute;
  int index = 0;  // 0-based event index
  int slot = 1;   // used by the insert moves
  int sign = 1;   // used by R1Insert, R2Insert, ZigzagInsert

  friend bool operator==(const Move&, const Move&) = default;
};

StringLinkDiagram apply_move(const StringLinkDiagram& d, const Move& move);

// Every legal site of every move kind, in a deterministic order.
std::vector<Move> enumerate_moves(const StringLinkDiagram& d);

const char* to_string(MoveKind kind);

}  // namespace strlink
