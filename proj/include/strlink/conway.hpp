#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "strlink/link_diagram.hpp"
#include "strlink/tangle.hpp"

namespace strlink {

// Integer polynomial in z, coefficients a_0, a_1, ... with trailing zeros trimmed.
class ConwayPoly {
 public:
  ConwayPoly() = default;
  explicit ConwayPoly(std::vector<std::int64_t> coefficients);

  static ConwayPoly constant(std::int64_t c) { return ConwayPoly({c}); }

  std::int64_t a(int k) const {
    return k >= 0 && k < static_cast<int>(coeffs_.size()) ? coeffs_[k] : 0;
  }
  const std::vector<std::int64_t>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  ConwayPoly times_z() const;

  friend ConwayPoly operator+(const ConwayPoly& x, const ConwayPoly& y);
  friend ConwayPoly operator-(const ConwayPoly& x, const ConwayPoly& y);
  friend ConwayPoly operator*(const ConwayPoly& x, const ConwayPoly& y);
  friend bool operator==(const ConwayPoly&, const ConwayPoly&) = default;

  std::string to_string() const;

 private:
  void trim();
  std::vector<std::int64_t> coeffs_;
};

struct ConwayOptions {
  int crossing_cap = 20;
};

// Skein recursion with a descending-diagram base case and memoization on a
// canonical Gauss code.  Throws Error(ResourceLimit) above the crossing cap.
ConwayPoly conway(const LinkDiagram& link, const ConwayOptions& options = {});

// a_2 of a knot; throws Error(Input) unless the diagram has one component.
std::int64_t casson(const LinkDiagram& knot, const ConwayOptions& options = {});
int arf(const LinkDiagram& knot, const ConwayOptions& options = {});

// a_3 of a 2-component link with linking number 0.  Errors: wrong component
// count is Input, nonzero linking number is Precondition.
std::int64_t sato_levine(const LinkDiagram& link, const ConwayOptions& options = {});
int sato_levine_mod2(const LinkDiagram& link, const ConwayOptions& options = {});

// casson(plat closure) - casson(strand 1 closure) - casson(strand 2 closure).
std::int64_t v2(const StringLinkDiagram& d, const ConwayOptions& options = {});
// Same quantity for the 2-strand sublink on strands i, j of a wider diagram.
std::int64_t v2_pair(const StringLinkDiagram& d, int i, int j, const ConwayOptions& options = {});

}  // namespace strlink
