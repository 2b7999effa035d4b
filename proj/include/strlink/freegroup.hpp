#pragma once

// Free group words and their truncated Magnus expansions over Z.
//
// The Magnus expansion sends the generator x_i to 1 + X_i in the ring of
// non-commutative power series in X_1..X_n; series are truncated above a
// degree cap q.

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <vector>

namespace strlink {

using BigInt = boost::multiprecision::cpp_int;

struct Letter {
  int generator = 1;  // 1-based
  int exponent = 1;   // +-1

  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

Word reduce(const Word& w);
Word inverse(const Word& w);

// Monomial X_{m[0]} X_{m[1]} ... with 1-based generator indices.
using Monomial = std::vector<int>;

class MagnusSeries {
 public:
  // The constant series 1.
  explicit MagnusSeries(int degree_cap);

  static MagnusSeries one(int degree_cap) { return MagnusSeries(degree_cap); }
  static MagnusSeries zero(int degree_cap);
  // 1 + X_i
  static MagnusSeries generator(int i, int degree_cap);

  int degree_cap() const { return cap_; }
  const std::map<Monomial, BigInt>& terms() const { return terms_; }

  BigInt coefficient(const Monomial& m) const;
  // Sets a coefficient; zero erases, monomials longer than the cap are dropped.
  void set(const Monomial& m, BigInt value);

  MagnusSeries truncated(int degree_cap) const;
  // Terms of exactly the given degree.
  MagnusSeries degree_part(int degree) const;

  friend MagnusSeries operator+(const MagnusSeries& a, const MagnusSeries& b);
  friend MagnusSeries operator-(const MagnusSeries& a, const MagnusSeries& b);
  friend bool operator==(const MagnusSeries&, const MagnusSeries&) = default;

  std::string to_string() const;

 private:
  int cap_;
  std::map<Monomial, BigInt> terms_;
};

// Truncated product; throws Error(Input) when the caps differ.
MagnusSeries series_mul(const MagnusSeries& a, const MagnusSeries& b);
// Two-sided inverse; throws Error(Input) unless the constant term is 1.
MagnusSeries series_inverse(const MagnusSeries& a);
// a^k for any integer k; negative k needs an invertible a.
MagnusSeries series_pow(const MagnusSeries& a, int k);

MagnusSeries magnus(const Word& w, int degree_cap);

}  // namespace strlink
