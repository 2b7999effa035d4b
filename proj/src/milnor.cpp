#include "strlink/milnor.hpp"

#include "strlink/error.hpp"

namespace strlink {

namespace {

// Number of under-passages strictly before each passage of each strand.
std::vector<std::vector<int>> under_ordinals(const Layout& layout) {
  std::vector<std::vector<int>> out;
  for (const auto& passages : layout.strands) {
    std::vector<int> ord;
    int count = 0;
    for (const Passage& p : passages) {
      ord.push_back(count);
      if (!p.over) ++count;
    }
    ord.push_back(count);  // total, i.e. index of the top arc
    out.push_back(std::move(ord));
  }
  return out;
}

std::int64_t to_int64(const BigInt& v) { return v.convert_to<std::int64_t>(); }

}  // namespace

ArcAssignment wirtinger_solve(const StringLinkDiagram& d, int degree_cap) {
  const Layout& layout = d.layout();
  const auto ord = under_ordinals(layout);
  ArcAssignment result;
  for (int i = 0; i < d.strands(); ++i)
    result.arcs.emplace_back(ord[i].back() + 1, MagnusSeries::generator(i + 1, degree_cap));

  // Each sweep walks every strand from its bottom endpoint, so the degree-d
  // part of every arc is final after d - 1 sweeps.  Event order would not do:
  // a strand running downward through a cup/cap pair would advance only one
  // crossing per sweep.
  std::vector<const CrossingInfo*> order;
  for (const auto& passages : layout.strands)
    for (const Passage& p : passages)
      if (!p.over) order.push_back(&layout.crossings[p.crossing]);

  const int max_sweeps = degree_cap + 2;
  for (int sweep = 1; sweep <= max_sweeps; ++sweep) {
    bool changed = false;
    for (const CrossingInfo* cp : order) {
      const CrossingInfo& c = *cp;
      const int r = ord[c.under_strand][c.under_passage];
      const MagnusSeries& over = result.arcs[c.over_strand][ord[c.over_strand][c.over_passage]];
      const MagnusSeries over_inv = series_inverse(over);
      const MagnusSeries& left = c.sign > 0 ? over_inv : over;
      const MagnusSeries& right = c.sign > 0 ? over : over_inv;
      MagnusSeries next = series_mul(series_mul(left, result.arcs[c.under_strand][r]), right);
      MagnusSeries& slot = result.arcs[c.under_strand][r + 1];
      if (next != slot) {
        slot = std::move(next);
        changed = true;
      }
    }
    if (!changed) {
      result.sweeps = sweep;
      return result;
    }
  }
  resource_error("Wirtinger iteration did not converge within " + std::to_string(max_sweeps) +
                 " sweeps");
}

LongitudeData longitudes(const StringLinkDiagram& d, int degree_cap) {
  const ArcAssignment arcs = wirtinger_solve(d, degree_cap);
  const Layout& layout = d.layout();
  const auto ord = under_ordinals(layout);
  const int n = d.strands();

  LongitudeData data;
  data.linking.assign(n, std::vector<std::int64_t>(n, 0));
  for (int i = 0; i < n; ++i) {
    MagnusSeries lambda = MagnusSeries::one(degree_cap);
    for (const Passage& p : layout.strands[i]) {
      if (p.over) continue;
      const CrossingInfo& c = layout.crossings[p.crossing];
      const MagnusSeries& over = arcs.arcs[c.over_strand][ord[c.over_strand][c.over_passage]];
      lambda = series_mul(lambda, c.sign > 0 ? over : series_inverse(over));
    }
    const int f = d.framing(i + 1);
    lambda = series_mul(lambda, series_pow(MagnusSeries::generator(i + 1, degree_cap), -f));
    data.framings.push_back(f);
    for (int j = 0; j < n; ++j)
      if (j != i) data.linking[i][j] = to_int64(lambda.coefficient({j + 1}));
    data.longitudes.push_back(std::move(lambda));
  }
  return data;
}

std::vector<MagnusSeries> artin_action(const StringLinkDiagram& d, int degree_cap) {
  return longitudes(d, degree_cap).longitudes;
}

void require_algebraically_split(const LongitudeData& data) {
  const int n = static_cast<int>(data.framings.size());
  for (int i = 0; i < n; ++i)
    if (data.framings[i] != 0)
      precondition_error("strand " + std::to_string(i + 1) + " has framing " +
                         std::to_string(data.framings[i]) + "; framings must vanish");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (data.linking[i][j] != 0)
        precondition_error("linking number lk(" + std::to_string(i + 1) + "," +
                           std::to_string(j + 1) + ") = " + std::to_string(data.linking[i][j]) +
                           " is nonzero");
}

std::int64_t mu3(const LongitudeData& data, int i, int j, int k) {
  const int n = static_cast<int>(data.longitudes.size());
  for (int x : {i, j, k})
    if (x < 1 || x > n)
      input_error("strand index " + std::to_string(x) + " out of range 1.." + std::to_string(n));
  if (i == j || j == k || i == k) input_error("triple linking number needs distinct indices");
  require_algebraically_split(data);
  if (data.longitudes[k - 1].degree_cap() < 2)
    input_error("triple linking numbers need a Magnus degree cap of at least 2");
  return to_int64(data.longitudes[k - 1].coefficient({i, j}));
}

std::int64_t mu3(const StringLinkDiagram& d, int i, int j, int k, int degree_cap) {
  return mu3(longitudes(d, degree_cap), i, j, k);
}

}  // namespace strlink
