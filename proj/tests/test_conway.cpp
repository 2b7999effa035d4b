#include <doctest.h>

#include <functional>

#include "strlink/builtins.hpp"
#include "strlink/conway.hpp"
#include "strlink/error.hpp"
#include "support/oracles.hpp"
#include "support/random_diagrams.hpp"

using namespace strlink;

namespace {

const char* kTrefoil = "strands 1; u2 x1+ x1+ x1+ n2";
const char* kLeftTrefoil = "strands 1; u2 x1- x1- x1- n2";
const char* kFigureEight = "strands 1; u2 u3 x1+ x2- x1+ x2- n3 n2";

LinkDiagram knot(const char* text) { return close(parse_tangle(text), {1}); }

std::vector<long long> coeffs(const ConwayPoly& p) { return {p.coefficients().begin(), p.coefficients().end()}; }

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::Input;
}

}  // namespace

TEST_CASE("Conway polynomial of small knots and links") {
  CHECK(conway(knot("strands 1;")) == ConwayPoly({1}));
  CHECK(conway(close(StringLinkDiagram::trivial(2), {1, 2})).is_zero());
  CHECK(conway(knot(kTrefoil)) == ConwayPoly({1, 0, 1}));
  CHECK(conway(knot(kLeftTrefoil)) == ConwayPoly({1, 0, 1}));
  CHECK(conway(knot(kFigureEight)) == ConwayPoly({1, 0, -1}));
  CHECK(conway(close(parse_tangle("strands 2; x1+ x1+"), {1, 2})) == ConwayPoly({0, 1}));
  CHECK(conway(close(parse_tangle("strands 2; x1- x1-"), {1, 2})) == ConwayPoly({0, -1}));
  CHECK(conway(close(borromean(3, 1, 2, 3), {1, 2, 3})).a(4) != 0);
  CHECK(ConwayPoly({1, 0, -1}).to_string() == "1 - z^2");
  CHECK(ConwayPoly({0, 0, 0, -1}).to_string() == "-z^3");
  CHECK(ConwayPoly().to_string() == "0");
}

TEST_CASE("Casson and Arf") {
  CHECK(casson(knot("strands 1;")) == 0);
  CHECK(casson(knot(kTrefoil)) == 1);
  CHECK(casson(knot(kLeftTrefoil)) == 1);
  CHECK(casson(close(stack(trefoil_insert(1, 1), trefoil_insert(1, 1)), {1})) == 2);
  CHECK(arf(close(trefoil_insert(3, 2), {2})) == 1);
  CHECK(arf(knot("strands 1;")) == 0);
  CHECK(arf(knot(kFigureEight)) == 1);
  CHECK(kind_of([] { casson(close(StringLinkDiagram::trivial(2), {1, 2})); }) == ErrorKind::Input);
}

TEST_CASE("Sato-Levine invariant") {
  CHECK(sato_levine_mod2(close(whitehead(2, 1, 2), {1, 2})) == 1);
  CHECK(sato_levine_mod2(close(whitehead(4, 3, 1), {1, 3})) == 1);
  CHECK(sato_levine(close(StringLinkDiagram::trivial(2), {1, 2})) == 0);
  CHECK(sato_levine(close(borromean(3, 1, 2, 3), {1, 2})) == 0);
  CHECK(kind_of([] { sato_levine(close(parse_tangle("strands 2; x1+ x1+"), {1, 2})); }) ==
        ErrorKind::Precondition);
  CHECK(kind_of([] { sato_levine(knot(kTrefoil)); }) == ErrorKind::Input);
}

TEST_CASE("V2 of 2-strand string links") {
  CHECK(v2(StringLinkDiagram::trivial(2)) == 0);
  CHECK(v2(trefoil_insert(2, 1)) == 0);
  const std::int64_t w = v2(whitehead(2, 1, 2));
  CHECK(w % 2 != 0);
  CHECK(v2_pair(whitehead(3, 1, 3), 1, 3) == w);
  CHECK(kind_of([] { v2(StringLinkDiagram::trivial(3)); }) == ErrorKind::Input);
}

TEST_CASE("crossing cap") {
  ConwayOptions tight{2};
  CHECK(kind_of([&] { conway(knot(kTrefoil), tight); }) == ErrorKind::ResourceLimit);
}

TEST_CASE("agreement with the brute-force skein oracle") {
  CHECK(testing::brute_conway(knot(kTrefoil)) == std::vector<long long>{1, 0, 1});
  CHECK(testing::brute_conway(knot(kFigureEight)) == std::vector<long long>{1, 0, -1});
  testing::Rng rng(17);
  int checked = 0;
  while (checked < 120) {
    const int n = testing::uniform(rng, 1, 3);
    const StringLinkDiagram d = testing::random_string_link(rng, {n, testing::uniform(rng, 0, 2), 5});
    std::vector<int> all;
    for (int i = 1; i <= n; ++i) all.push_back(i);
    const LinkDiagram l = close(d, all);
    if (l.crossing_count() > 8) continue;
    ++checked;
    CHECK(coeffs(conway(l)) == testing::brute_conway(l));
  }
}

TEST_CASE("skein relation and parity constraints on random diagrams") {
  testing::Rng rng(23);
  for (int trial = 0; trial < 120; ++trial) {
    const StringLinkDiagram d = testing::random_string_link(rng, {2, testing::uniform(rng, 0, 2), 6});
    const auto xs = testing::crossing_events(d);
    if (xs.empty()) continue;
    const int e = xs[testing::uniform(rng, 0, static_cast<int>(xs.size()) - 1)];
    const int oriented = d.layout().crossings[d.layout().event_crossing[e]].sign;
    const LinkDiagram l = close(d, {1, 2});
    const LinkDiagram lo = close(testing::switched(d, {e}), {1, 2});
    const ConwayPoly plus = oriented > 0 ? conway(l) : conway(lo);
    const ConwayPoly minus = oriented > 0 ? conway(lo) : conway(l);
    // Switching keeps the arc labels, so the switched crossing is the only PD entry that moves.
    const testing::PdState st = testing::to_state(l), so = testing::to_state(lo);
    REQUIRE(st.x.size() == so.x.size());
    int k = -1;
    for (int i = 0; i < static_cast<int>(st.x.size()); ++i)
      if (st.x[i] != so.x[i]) k = i;
    REQUIRE(k >= 0);
    const testing::Poly zero = testing::BruteSkein().eval(testing::BruteSkein::smoothing(st, k));
    CHECK(coeffs(plus - minus) == testing::poly_add({}, zero, 1, 1));

    const ConwayPoly p = conway(l);
    const int comps = l.component_count();
    for (int i = 0; i <= 8; ++i)
      if ((i + comps) % 2 == 0) CHECK(p.a(i) == 0);
    if (comps == 2) CHECK(p.a(1) == l.linking_number(0, 1));
    const ConwayPoly k1 = conway(close(d, {1}));
    CHECK(k1.a(0) == 1);
  }
}
