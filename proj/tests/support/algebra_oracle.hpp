#pragma once

// Closed-form coordinates of a single Y-term, read off from the multilinear
// expansion without any rewriting.  Used to cross-check normalize().

#include <random>
#include <vector>

#include "strlink/algebra.hpp"

namespace strlink::testing {

inline std::int64_t minor3(const YTerm& t, int a, int b, int c) {
  const auto& x = t.z[0].h;
  const auto& y = t.z[1].h;
  const auto& z = t.z[2].h;
  return x[a] * (y[b] * z[c] - y[c] * z[b]) - x[b] * (y[a] * z[c] - y[c] * z[a]) +
         x[c] * (y[a] * z[b] - y[b] * z[a]);
}

inline int mod2(std::int64_t v) { return static_cast<int>(((v % 2) + 2) % 2); }

inline NormalForm oracle_normal_form(const YTerm& t, int n) {
  NormalForm nf(n);
  const auto& z = t.z;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        if (const std::int64_t m = minor3(t, a, b, c); m != 0) nf.lambda3[{a + 1, b + 1, c + 1}] = m;

  // Index multisets {a,a,b} and {a,b,b} of the pure part, and one s slot with
  // distinct e-indices, all land on e_a^e_b.
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      std::int64_t v = 0;
      for (int r = 0; r < 3; ++r) {
        const auto& p = z[r].h;
        const auto& q = z[(r + 1) % 3].h;
        const auto& w = z[(r + 2) % 3].h;
        // ordered triples with exactly one position differing
        v += p[a] * q[a] * w[b] + p[b] * q[b] * w[a];
        v += z[(r + 2) % 3].eps * (p[a] * q[b] + p[b] * q[a]);
      }
      if (mod2(v)) nf.lambda2[{a + 1, b + 1}] = 1;
    }
  for (int a = 0; a < n; ++a) {
    std::int64_t v = z[0].h[a] * z[1].h[a] * z[2].h[a];
    for (int r = 0; r < 3; ++r) {
      const auto& p = z[r].h;
      const auto& q = z[(r + 1) % 3].h;
      v += z[(r + 2) % 3].eps * p[a] * q[a];
      v += z[r].eps * z[(r + 1) % 3].eps * z[(r + 2) % 3].h[a];
    }
    nf.h2[a] = mod2(v);
  }
  nf.rochlin = z[0].eps * z[1].eps * z[2].eps;
  return nf;
}

inline NormalForm oracle_normal_form(const AlgebraElement& x) {
  NormalForm acc(x.dimension());
  for (const auto& [t, c] : x.terms()) {
    const NormalForm one = oracle_normal_form(t, x.dimension());
    for (std::int64_t k = 0; k < (c < 0 ? -c : c); ++k) {
      NormalForm term = one;
      if (c < 0)
        for (auto& [key, v] : term.lambda3) v = -v;
      acc = acc + term;
    }
  }
  return acc;
}

// Coordinates in basis order: Lambda^3, Lambda^2 (mod 2), H (mod 2), Rochlin.
inline std::vector<std::int64_t> flat_coordinates(const NormalForm& nf) {
  const int n = nf.n;
  std::vector<std::int64_t> v;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        auto it = nf.lambda3.find({i, j, k});
        v.push_back(it == nf.lambda3.end() ? 0 : it->second);
      }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) v.push_back(static_cast<std::int64_t>(nf.lambda2.count({i, j})));
  for (int i = 0; i < n; ++i) v.push_back(nf.h2[i]);
  v.push_back(nf.rochlin);
  return v;
}

inline Label random_label(std::mt19937_64& rng, int n, int range = 2) {
  std::uniform_int_distribution<int> coef(-range, range), bit(0, 1), sparse(0, 2);
  Label l;
  l.h.assign(n, 0);
  for (int i = 0; i < n; ++i)
    if (sparse(rng) == 0) l.h[i] = coef(rng);
  l.eps = bit(rng);
  return l;
}

inline AlgebraElement random_element(std::mt19937_64& rng, int n, int terms = 3) {
  std::uniform_int_distribution<int> coef(-2, 2);
  AlgebraElement x(n);
  for (int i = 0; i < terms; ++i)
    x.add_term(YTerm(random_label(rng, n), random_label(rng, n), random_label(rng, n)), coef(rng));
  return x;
}

}  // namespace strlink::testing
