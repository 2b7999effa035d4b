#include "strlink/classify.hpp"

#include "strlink/error.hpp"

namespace strlink {

int rochlin(const AmbientPresentation& ambient, const ClassifyOptions& options) {
  validate(ambient);
  int r = 0;
  for (const SurgeryComponent& c : ambient.components) r ^= arf(c.knot, options.conway());
  return r;
}

namespace {

std::map<std::array<int, 3>, std::int64_t> mu3_table(const LongitudeData& data) {
  const int n = static_cast<int>(data.longitudes.size());
  std::map<std::array<int, 3>, std::int64_t> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        if (const std::int64_t v = mu3(data, i, j, k); v != 0) out[{i, j, k}] = v;
  return out;
}

LongitudeData split_longitudes(const StringLinkDiagram& d, const ClassifyOptions& options) {
  LongitudeData data = longitudes(d, options.magnus_cap);
  require_algebraically_split(data);
  return data;
}

}  // namespace

InvariantVector tau(const StringLinkDiagram& d, const AmbientPresentation* ambient,
                    const ClassifyOptions& options) {
  const int n = d.strands();
  InvariantVector v;
  v.mu3 = mu3_table(split_longitudes(d, options));
  for (int i = 1; i <= n; ++i) v.arf.push_back(arf(close(d, {i}), options.conway()));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (sato_levine_mod2(close(d, {i, j}), options.conway())) v.sl2[{i, j}] = 1;
  v.rochlin = ambient ? rochlin(*ambient, options) : 0;
  return v;
}

bool y2_equivalent(const ClassInput& a, const ClassInput& b, const ClassifyOptions& options) {
  if (a.diagram.strands() != b.diagram.strands())
    input_error("strand counts differ: " + std::to_string(a.diagram.strands()) + " vs " +
                std::to_string(b.diagram.strands()));
  const auto amb = [](const ClassInput& x) { return x.ambient ? &*x.ambient : nullptr; };
  return tau(a.diagram, amb(a), options) == tau(b.diagram, amb(b), options);
}

VassilievVector vassiliev_vector(const StringLinkDiagram& d, const ClassifyOptions& options) {
  const int n = d.strands();
  VassilievVector v;
  v.mu3 = mu3_table(split_longitudes(d, options));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (const std::int64_t x = v2_pair(d, i, j, options.conway()); x != 0) v.v2[{i, j}] = x;
  for (int i = 1; i <= n; ++i) v.phi.push_back(casson(close(d, {i}), options.conway()));
  return v;
}

bool clasp_pass_equivalent(const StringLinkDiagram& a, const StringLinkDiagram& b,
                           const ClassifyOptions& options) {
  if (a.strands() != b.strands())
    input_error("strand counts differ: " + std::to_string(a.strands()) + " vs " +
                std::to_string(b.strands()));
  return vassiliev_vector(a, options) == vassiliev_vector(b, options);
}

InvariantVector t_map(const VassilievVector& v) {
  InvariantVector out;
  out.mu3 = v.mu3;
  for (const auto& [k, x] : v.v2)
    if (x % 2 != 0) out.sl2[k] = 1;
  for (std::int64_t x : v.phi) out.arf.push_back(static_cast<int>(((x % 2) + 2) % 2));
  return out;
}

InvariantVector to_invariant_vector(const NormalForm& nf) {
  InvariantVector out;
  out.mu3 = nf.lambda3;
  out.sl2 = nf.lambda2;
  out.arf = nf.h2;
  out.rochlin = nf.rochlin;
  return out;
}

std::vector<int> default_mj_permutation(int genus) {
  if (genus < 1) input_error("genus must be >= 1");
  std::vector<int> perm(2 * genus);
  for (int i = 1; i <= genus; ++i) {
    perm[i - 1] = 2 * i - 1;
    perm[genus + i - 1] = 2 * i;
  }
  return perm;
}

AlgebraElement mj_relabel(const AlgebraElement& x, const std::vector<int>& perm) {
  if (x.dimension() % 2 != 0)
    input_error("surface labels need even dimension, got " + std::to_string(x.dimension()));
  return permute_element(x, perm);
}

AlgebraElement mj_relabel(const AlgebraElement& x) {
  if (x.dimension() % 2 != 0 || x.dimension() == 0)
    input_error("surface labels need positive even dimension, got " + std::to_string(x.dimension()));
  return mj_relabel(x, default_mj_permutation(x.dimension() / 2));
}

std::string to_string(const InvariantVector& v) {
  std::string out = "mu3 {";
  bool first = true;
  for (const auto& [k, x] : v.mu3) {
    out += (first ? "" : ", ") + std::to_string(k[0]) + "," + std::to_string(k[1]) + "," +
           std::to_string(k[2]) + ": " + std::to_string(x);
    first = false;
  }
  out += "} sl2 {";
  first = true;
  for (const auto& [k, x] : v.sl2) {
    out += (first ? "" : ", ") + std::to_string(k.first) + "," + std::to_string(k.second) + ": " +
           std::to_string(x);
    first = false;
  }
  out += "} arf [";
  for (std::size_t i = 0; i < v.arf.size(); ++i) out += (i ? "," : "") + std::to_string(v.arf[i]);
  out += "] rochlin " + std::to_string(v.rochlin);
  return out;
}

}  // namespace strlink
