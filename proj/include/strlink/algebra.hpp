#pragma once

// The group A_1(P_n) of Y-shaped diagrams labelled by P_n = Z^n + Z/2,
// modulo multilinearity and the slide relation Y[z;z;w] = Y[s;z;w], where
// s = (0, 1).  normalize() computes coordinates in
//
//   Lambda^3 H  +  Lambda^2 H (mod 2)  +  H (mod 2)  +  Z/2
//
// with basis e_i^e_j^e_k (i<j<k), e_i^e_j (i<j), e_i, and the Y[s;s;s] class.

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace strlink {

struct Label {
  std::vector<std::int64_t> h;  // coefficients on e_1..e_n
  int eps = 0;                  // 0 or 1

  static Label e(int n, int i);  // 1-based
  static Label s(int n);
  bool is_zero() const;

  // Orders e1 before e2 before ... before s, so canonical rotations read naturally.
  friend std::strong_ordering operator<=>(const Label& a, const Label& b) {
    if (auto c = b.h <=> a.h; c != 0) return c;
    return a.eps <=> b.eps;
  }
  friend bool operator==(const Label&, const Label&) = default;
};

Label operator+(const Label& a, const Label& b);
Label operator-(const Label& a);

// Y[z1;z2;z3] up to cyclic rotation; stored in its minimal rotation.
struct YTerm {
  std::array<Label, 3> z;

  YTerm() = default;
  YTerm(Label a, Label b, Label c);

  friend auto operator<=>(const YTerm&, const YTerm&) = default;
  friend bool operator==(const YTerm&, const YTerm&) = default;
};

class AlgebraElement {
 public:
  explicit AlgebraElement(int n = 0) : n_(n) {}
  static AlgebraElement term(const YTerm& t, std::int64_t coefficient = 1);

  int dimension() const { return n_; }
  const std::map<YTerm, std::int64_t>& terms() const { return terms_; }

  // Adds c * t; throws Error(Input) on a label dimension mismatch.
  void add_term(const YTerm& t, std::int64_t c);

 private:
  int n_;
  std::map<YTerm, std::int64_t> terms_;  // no zero coefficients
};

AlgebraElement add(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement negate(const AlgebraElement& x);
AlgebraElement scale(const AlgebraElement& x, std::int64_t c);

struct NormalForm {
  int n = 0;
  std::map<std::array<int, 3>, std::int64_t> lambda3;  // i<j<k, nonzero
  std::map<std::pair<int, int>, int> lambda2;          // i<j, value 1 only
  std::vector<int> h2;                                 // length n, entries 0/1
  int rochlin = 0;

  explicit NormalForm(int n = 0) : n(n), h2(n, 0) {}
  bool is_zero() const;

  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

NormalForm operator+(const NormalForm& a, const NormalForm& b);

NormalForm normalize(const AlgebraElement& x);
bool equal(const AlgebraElement& x, const AlgebraElement& y);

// Grammar: sum of [integer] Y[label;label;label] terms, each label a Z-linear
// combination of e1..en and s (or "0").  Example: "2 Y[e1 - 2 e3 + s; e2; s] - Y[s;s;s]".
AlgebraElement parse_element(std::string_view text, int n);

// Same grammar over the surface basis a1..ag, b1..bg (and s).  Label
// coordinates are ordered a_1..a_g, b_1..b_g, so the result has dimension 2g.
AlgebraElement parse_surface_element(std::string_view text, int genus);

std::string to_string(const Label& z);
std::string to_string(const YTerm& t);
std::string to_string(const AlgebraElement& x);
std::string to_string(const NormalForm& nf);

// Image of a normal form under the basis substitution e_k -> e_{perm[k-1]}.
// perm must be a permutation of 1..n.
NormalForm permute_normal_form(const NormalForm& nf, const std::vector<int>& perm);

// Same substitution on labels.
AlgebraElement permute_element(const AlgebraElement& x, const std::vector<int>& perm);

// The canonical generators in basis order: Y[e_i;e_j;e_k] (i<j<k),
// Y[e_i;e_j;s] (i<j), Y[e_i;s;s], Y[s;s;s].
std::vector<YTerm> canonical_generators(int n);

}  // namespace strlink
