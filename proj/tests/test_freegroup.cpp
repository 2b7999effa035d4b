#include <doctest.h>

#include <map>
#include <random>

#include "strlink/error.hpp"
#include "strlink/freegroup.hpp"

using namespace strlink;

namespace {

Word word(std::initializer_list<std::pair<int, int>> letters) {
  Word w;
  for (auto [g, e] : letters) w.push_back({g, e});
  return w;
}

MagnusSeries series(int cap, std::initializer_list<std::pair<Monomial, int>> terms) {
  MagnusSeries s = MagnusSeries::zero(cap);
  for (const auto& [m, c] : terms) s.set(m, c);
  return s;
}

// Naive expansion: every letter becomes its full truncated series and the
// product is taken term by term into a dense map, truncating only at the end.
std::map<Monomial, long long> naive_magnus(const Word& w, int cap) {
  std::map<Monomial, long long> acc{{{}, 1}};
  for (const Letter& l : w) {
    std::map<Monomial, long long> factor{{{}, 1}};
    if (l.exponent > 0) {
      factor[{l.generator}] = 1;
    } else {
      Monomial m;
      for (int k = 1; k <= cap; ++k) {
        m.push_back(l.generator);
        factor[m] = (k % 2 ? -1 : 1);
      }
    }
    std::map<Monomial, long long> next;
    for (const auto& [a, ca] : acc)
      for (const auto& [b, cb] : factor) {
        Monomial m = a;
        m.insert(m.end(), b.begin(), b.end());
        next[m] += ca * cb;
      }
    acc = std::move(next);
  }
  std::map<Monomial, long long> out;
  for (const auto& [m, c] : acc)
    if (static_cast<int>(m.size()) <= cap && c != 0) out[m] = c;
  return out;
}

std::map<Monomial, long long> as_map(const MagnusSeries& s) {
  std::map<Monomial, long long> out;
  for (const auto& [m, c] : s.terms()) out[m] = c.convert_to<long long>();
  return out;
}

Word random_word(std::mt19937_64& rng, int n, int len) {
  Word w;
  std::uniform_int_distribution<int> gen(1, n), sign(0, 1);
  for (int i = 0; i < len; ++i) w.push_back({gen(rng), sign(rng) ? 1 : -1});
  return w;
}

Word concat(const Word& a, const Word& b) {
  Word w = a;
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

}  // namespace

TEST_CASE("free reduction") {
  CHECK(reduce(word({{1, 1}, {1, -1}})).empty());
  CHECK(reduce(word({{1, 1}, {2, 1}, {2, -1}, {1, 1}})) == word({{1, 1}, {1, 1}}));
  const Word w = word({{1, 1}, {2, -1}, {1, 1}});
  CHECK(reduce(w) == w);
  CHECK(reduce(word({{1, 1}, {2, 1}, {2, -1}, {1, -1}, {3, 1}})) == word({{3, 1}}));
  CHECK(inverse(word({{1, 1}, {2, -1}})) == word({{2, 1}, {1, -1}}));
}

TEST_CASE("Magnus expansion of generators and commutators") {
  CHECK(magnus(word({{1, 1}}), 2) == series(2, {{{}, 1}, {{1}, 1}}));
  CHECK(magnus(word({{1, -1}}), 2) == series(2, {{{}, 1}, {{1}, -1}, {{1, 1}, 1}}));
  const Word comm = word({{1, 1}, {2, 1}, {1, -1}, {2, -1}});
  CHECK(magnus(comm, 2) == series(2, {{{}, 1}, {{1, 2}, 1}, {{2, 1}, -1}}));
  for (int cap = 1; cap <= 5; ++cap) CHECK(as_map(magnus(comm, cap)) == naive_magnus(comm, cap));
  CHECK(magnus(comm, 2).to_string() == "1 + X1X2 - X2X1");
}

TEST_CASE("series arithmetic") {
  const MagnusSeries a = series(2, {{{}, 1}, {{1}, 1}});
  const MagnusSeries b = series(2, {{{}, 1}, {{1}, -1}, {{1, 1}, 1}});
  CHECK(series_mul(a, b) == MagnusSeries::one(2));
  CHECK(series_mul(b, a) == MagnusSeries::one(2));
  CHECK(series_inverse(MagnusSeries::one(3)) == MagnusSeries::one(3));
  CHECK(series_mul(b, MagnusSeries::one(2)) == b);
  CHECK(series_inverse(a) == b);

  CHECK_THROWS_AS(series_mul(a, MagnusSeries::one(3)), Error);
  CHECK_THROWS_AS(series_inverse(MagnusSeries::zero(2)), Error);
  CHECK_THROWS_AS(MagnusSeries(0), Error);

  const MagnusSeries g = MagnusSeries::generator(2, 4);
  CHECK(series_mul(series_pow(g, 3), series_pow(g, -3)) == MagnusSeries::one(4));
}

TEST_CASE("the expansion is a homomorphism") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 240; ++trial) {
    const int cap = 2 + trial % 3;
    const Word u = random_word(rng, 3, 1 + trial % 7);
    const Word v = random_word(rng, 3, 1 + (trial * 5) % 6);
    CHECK(magnus(concat(u, v), cap) == series_mul(magnus(u, cap), magnus(v, cap)));
    CHECK(magnus(reduce(u), cap) == magnus(u, cap));
    CHECK(series_mul(magnus(u, cap), magnus(inverse(u), cap)) == MagnusSeries::one(cap));
  }
}

TEST_CASE("commutators have no degree-1 part; truncation is consistent") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const Word u = random_word(rng, 3, 4), v = random_word(rng, 3, 3);
    const Word c = concat(concat(u, v), concat(inverse(u), inverse(v)));
    const MagnusSeries m4 = magnus(c, 4);
    CHECK(m4.degree_part(1) == MagnusSeries::zero(4));
    for (int q = 1; q < 4; ++q) CHECK(m4.truncated(q) == magnus(c, q));
  }
}
