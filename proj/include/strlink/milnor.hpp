#pragma once

// Wirtinger solving on string-link diagrams in the truncated Magnus ring,
// longitudes, linking numbers, framings and triple linking numbers.

#include <cstdint>
#include <vector>

#include "strlink/freegroup.hpp"
#include "strlink/tangle.hpp"

namespace strlink {

constexpr int kDefaultMagnusCap = 3;

// arcs[i][r] is the Wirtinger generator of the r-th arc of strand i (0-based),
// arcs being separated by under-passages; arcs[i][0] = 1 + X_{i+1}.
struct ArcAssignment {
  std::vector<std::vector<MagnusSeries>> arcs;
  int sweeps = 0;  // sweeps performed, including the one certifying the fixed point
};

// Fixed point of  out = over^{-sign} * in * over^{sign}  at every crossing,
// iterated strand by strand, bottom to top, from the initial assignment
// arc -> 1 + X_strand.
// Throws Error(ResourceLimit) after q + 2 sweeps without convergence.
ArcAssignment wirtinger_solve(const StringLinkDiagram& d, int degree_cap = kDefaultMagnusCap);

struct LongitudeData {
  std::vector<MagnusSeries> longitudes;     // framing-corrected
  std::vector<int> framings;                // self-writhe per strand
  std::vector<std::vector<std::int64_t>> linking;  // symmetric, zero diagonal
};

LongitudeData longitudes(const StringLinkDiagram& d, int degree_cap = kDefaultMagnusCap);

// Longitudes, one per strand: the Artin action x_i -> l_i^{-1} x_i l_i.
std::vector<MagnusSeries> artin_action(const StringLinkDiagram& d,
                                       int degree_cap = kDefaultMagnusCap);

// Coefficient of X_i X_j in the k-th longitude (1-based, distinct).  Throws
// Error(Precondition) if any framing or linking number of d is nonzero.
std::int64_t mu3(const StringLinkDiagram& d, int i, int j, int k,
                 int degree_cap = kDefaultMagnusCap);

// Same, from precomputed longitude data (preconditions checked likewise).
std::int64_t mu3(const LongitudeData& data, int i, int j, int k);

// Throws Error(Precondition) naming the first nonzero framing or linking number.
void require_algebraically_split(const LongitudeData& data);

}  // namespace strlink
