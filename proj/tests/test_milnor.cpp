#include <doctest.h>

#include "strlink/builtins.hpp"
#include "strlink/error.hpp"
#include "strlink/link_diagram.hpp"
#include "strlink/milnor.hpp"
#include "support/random_diagrams.hpp"

using namespace strlink;

namespace {

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

TEST_CASE("Wirtinger solution of simple diagrams") {
  const ArcAssignment t = wirtinger_solve(StringLinkDiagram::trivial(3), 3);
  for (int i = 0; i < 3; ++i) {
    REQUIRE(t.arcs[i].size() == 1);
    CHECK(t.arcs[i][0] == MagnusSeries::generator(i + 1, 3));
  }
  CHECK(t.sweeps == 1);

  const ArcAssignment a = wirtinger_solve(parse_tangle("strands 2; x1+ x1+"), 3);
  CHECK(a.arcs[0].front() == MagnusSeries::generator(1, 3));
  CHECK(a.arcs[0].back().degree_part(1) == MagnusSeries::generator(1, 3).degree_part(1));
  CHECK(a.arcs[1].back().degree_part(1) == MagnusSeries::generator(2, 3).degree_part(1));
}

TEST_CASE("the fixed point is reached within the degree cap") {
  testing::Rng rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const StringLinkDiagram d = testing::random_string_link(rng, {3, 2, 8});
    for (int q = 2; q <= 4; ++q) CHECK(wirtinger_solve(d, q).sweeps <= q);
  }
}

TEST_CASE("longitudes, framings, linking numbers") {
  const LongitudeData triv = longitudes(StringLinkDiagram::trivial(3));
  for (int i = 0; i < 3; ++i) {
    CHECK(triv.longitudes[i] == MagnusSeries::one(3));
    CHECK(triv.framings[i] == 0);
    for (int j = 0; j < 3; ++j) CHECK(triv.linking[i][j] == 0);
  }

  const LongitudeData hopf = longitudes(parse_tangle("strands 2; x1+ x1+"));
  CHECK(hopf.linking[0][1] == 1);
  CHECK(hopf.linking[1][0] == 1);
  CHECK(hopf.framings == std::vector<int>{0, 0});

  for (int s : {1, -1}) {
    const StringLinkDiagram kink = parse_tangle(s > 0 ? "strands 1; u2 x1+ n2" : "strands 1; u2 x1- n2");
    const LongitudeData k = longitudes(kink);
    CHECK(k.framings[0] == s);
    CHECK(k.longitudes[0] == MagnusSeries::one(3));
  }
}

TEST_CASE("linking numbers agree with the closure and are symmetric") {
  testing::Rng rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    const StringLinkDiagram d = testing::random_string_link(rng, {3, 1, 7});
    const LongitudeData data = longitudes(d);
    const LinkDiagram l = close(d, {1, 2, 3});
    // closure components are ordered by smallest arc id, which follows strand order
    for (int i = 0; i < 3; ++i) {
      CHECK(data.longitudes[i].coefficient({i + 1}) == 0);
      for (int j = 0; j < 3; ++j) {
        if (i == j) continue;
        CHECK(data.linking[i][j] == data.linking[j][i]);
        CHECK(data.linking[i][j] == l.linking_number(i, j));
      }
    }
  }
}

TEST_CASE("triple linking numbers of the Borromean and Whitehead built-ins") {
  const StringLinkDiagram b = borromean(3, 1, 2, 3);
  CHECK(mu3(b, 1, 2, 3) == 1);
  CHECK(mu3(b, 2, 3, 1) == 1);
  CHECK(mu3(b, 3, 1, 2) == 1);
  CHECK(mu3(b, 2, 1, 3) == -1);
  CHECK(mu3(b, 1, 3, 2) == -1);
  CHECK(mu3(b, 3, 2, 1) == -1);
  CHECK(artin_action(b)[2].coefficient({1, 2}) == 1);
  for (const MagnusSeries& l : artin_action(b)) CHECK(l.degree_part(1) == MagnusSeries::zero(3));

  CHECK(mu3(borromean(3, 2, 1, 3), 2, 1, 3) == 1);
  CHECK(mu3(borromean(5, 4, 1, 3), 4, 1, 3) == 1);
  CHECK(mu3(whitehead(3, 1, 2), 1, 2, 3) == 0);
  CHECK(mu3(StringLinkDiagram::trivial(4), 1, 2, 4) == 0);
}

TEST_CASE("mu3 preconditions") {
  const StringLinkDiagram hopf = parse_tangle("strands 3; x1+ x1+");
  const std::string msg = [&] {
    try {
      mu3(hopf, 1, 2, 3);
    } catch (const Error& e) {
      return std::string(e.what());
    }
    return std::string();
  }();
  CHECK(msg.find("lk(1,2)") != std::string::npos);
  CHECK(kind_of([&] { mu3(hopf, 1, 2, 3); }) == ErrorKind::Precondition);
  CHECK(kind_of([] { mu3(parse_tangle("strands 3; u2 x1+ n2"), 1, 2, 3); }) == ErrorKind::Precondition);
  CHECK(kind_of([] { mu3(StringLinkDiagram::trivial(3), 1, 1, 3); }) == ErrorKind::Input);
  CHECK(kind_of([] { mu3(StringLinkDiagram::trivial(3), 1, 2, 4); }) == ErrorKind::Input);
}

TEST_CASE("mu3: symmetry, stability in the cap, additivity") {
  testing::Rng rng(33);
  for (int trial = 0; trial < 40; ++trial) {
    const StringLinkDiagram a = testing::random_split_link(rng, {3, testing::uniform(rng, 0, 2), 7}, 20);
    const StringLinkDiagram b = testing::random_split_link(rng, {3, testing::uniform(rng, 0, 2), 7}, 20);
    const LongitudeData la = longitudes(a, 3), la4 = longitudes(a, 4), lb = longitudes(b, 3);
    const LongitudeData lab = longitudes(stack(a, b), 3);
    const std::int64_t m = mu3(la, 1, 2, 3);
    CHECK(mu3(la, 2, 3, 1) == m);
    CHECK(mu3(la, 3, 1, 2) == m);
    CHECK(mu3(la, 2, 1, 3) == -m);
    CHECK(mu3(la4, 1, 2, 3) == m);
    CHECK(mu3(lab, 1, 2, 3) == m + mu3(lb, 1, 2, 3));
  }
}
