#pragma once

// Fixed representatives of the four generator families of Y-shaped diagrams.
//
//   trefoil_insert(n, i)    0-framed right-handed trefoil tied into strand i
//   whitehead(n, i, j)      strands i, j close to a Whitehead link, framings 0
//   borromean(n, i, j, k)   strands i, j, k banded with Borromean rings, mu_ijk = +1
//   poincare()              -1 surgery on the left-handed trefoil
//
// Strands not named are straight.  Other strands are pushed out of the way by
// crossings over them, which are undone afterwards.

#include <span>
#include <string_view>
#include <variant>

#include "strlink/link_diagram.hpp"
#include "strlink/tangle.hpp"

namespace strlink {

StringLinkDiagram trefoil_insert(int n, int i);
StringLinkDiagram whitehead(int n, int i, int j);
StringLinkDiagram borromean(int n, int i, int j, int k);
AmbientPresentation poincare();

using Builtin = std::variant<StringLinkDiagram, AmbientPresentation>;

// Dispatch by name: "trefoil_insert", "whitehead", "borromean", "poincare".
Builtin builtin(std::string_view name, int n, std::span<const int> indices);

}  // namespace strlink
