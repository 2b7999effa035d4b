#pragma once

// Classification data of framed string links up to Y_2-equivalence and
// clasp-pass equivalence, and the maps relating it to A_1(P_n).

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "strlink/algebra.hpp"
#include "strlink/conway.hpp"
#include "strlink/link_diagram.hpp"
#include "strlink/milnor.hpp"
#include "strlink/tangle.hpp"

namespace strlink {

struct ClassifyOptions {
  int magnus_cap = kDefaultMagnusCap;
  int crossing_cap = 20;

  ConwayOptions conway() const { return ConwayOptions{crossing_cap}; }
};

struct InvariantVector {
  std::map<std::array<int, 3>, std::int64_t> mu3;  // i<j<k, nonzero entries only
  std::map<std::pair<int, int>, int> sl2;          // i<j, value 1 only
  std::vector<int> arf;                            // per strand, 0/1
  int rochlin = 0;

  friend bool operator==(const InvariantVector&, const InvariantVector&) = default;
};

// Sum of the Arf invariants of the surgery knots, mod 2.  Throws
// Error(Input) unless every component is a knot with framing +-1.
int rochlin(const AmbientPresentation& ambient, const ClassifyOptions& options = {});

// Throws Error(Precondition) unless all framings and linking numbers vanish.
InvariantVector tau(const StringLinkDiagram& d, const AmbientPresentation* ambient = nullptr,
                    const ClassifyOptions& options = {});

struct ClassInput {
  StringLinkDiagram diagram;
  std::optional<AmbientPresentation> ambient;
};

bool y2_equivalent(const ClassInput& a, const ClassInput& b, const ClassifyOptions& options = {});

struct VassilievVector {
  std::map<std::array<int, 3>, std::int64_t> mu3;  // i<j<k, nonzero only
  std::map<std::pair<int, int>, std::int64_t> v2;  // i<j, nonzero only
  std::vector<std::int64_t> phi;                   // Casson invariant per strand

  friend bool operator==(const VassilievVector&, const VassilievVector&) = default;
};

VassilievVector vassiliev_vector(const StringLinkDiagram& d, const ClassifyOptions& options = {});
bool clasp_pass_equivalent(const StringLinkDiagram& a, const StringLinkDiagram& b,
                           const ClassifyOptions& options = {});

// Lambda^3 H + S^2 H  ->  Lambda^3 H + Lambda^2 H (mod 2) + H (mod 2):
// identity on Lambda^3 H, e_i.e_j -> e_i^e_j and e_i.e_i -> e_i mod 2.
// The Rochlin slot of the result is 0.
InvariantVector t_map(const VassilievVector& v);

// Coordinates of a normal form, read as an invariant vector.
InvariantVector to_invariant_vector(const NormalForm& nf);

// Permutation for mj_relabel: entry k (0-based) is the target e-index of the
// k-th surface basis vector in the order a_1..a_g, b_1..b_g.  The default
// sends a_i -> e_{2i-1} and b_i -> e_{2i}.
std::vector<int> default_mj_permutation(int genus);

// Relabels an element over the surface basis (as produced by
// parse_surface_element) into the string-link basis e_1..e_{2g}.
AlgebraElement mj_relabel(const AlgebraElement& x, const std::vector<int>& perm);
AlgebraElement mj_relabel(const AlgebraElement& x);

std::string to_string(const InvariantVector& v);

}  // namespace strlink
