#include "strlink/conway.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

#include "strlink/error.hpp"

namespace strlink {

ConwayPoly::ConwayPoly(std::vector<std::int64_t> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

void ConwayPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

ConwayPoly ConwayPoly::times_z() const {
  if (coeffs_.empty()) return {};
  std::vector<std::int64_t> c(coeffs_.size() + 1, 0);
  std::copy(coeffs_.begin(), coeffs_.end(), c.begin() + 1);
  return ConwayPoly(std::move(c));
}

ConwayPoly operator+(const ConwayPoly& x, const ConwayPoly& y) {
  std::vector<std::int64_t> c(std::max(x.coeffs_.size(), y.coeffs_.size()), 0);
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = x.a(static_cast<int>(k)) + y.a(static_cast<int>(k));
  return ConwayPoly(std::move(c));
}

ConwayPoly operator-(const ConwayPoly& x, const ConwayPoly& y) {
  std::vector<std::int64_t> c(std::max(x.coeffs_.size(), y.coeffs_.size()), 0);
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = x.a(static_cast<int>(k)) - y.a(static_cast<int>(k));
  return ConwayPoly(std::move(c));
}

ConwayPoly operator*(const ConwayPoly& x, const ConwayPoly& y) {
  if (x.is_zero() || y.is_zero()) return {};
  std::vector<std::int64_t> c(x.coeffs_.size() + y.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < y.coeffs_.size(); ++j) c[i + j] += x.coeffs_[i] * y.coeffs_[j];
  return ConwayPoly(std::move(c));
}

std::string ConwayPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const std::int64_t c = coeffs_[k];
    if (c == 0) continue;
    const std::int64_t mag = c < 0 ? -c : c;
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (k == 0 || mag != 1) out += std::to_string(mag);
    if (k >= 1) out += "z";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

namespace {

// Signed Gauss code.  Entries are label * 2 + (over ? 1 : 0); each label
// occurs exactly twice across all components.
struct Gauss {
  std::vector<int> sign;
  std::vector<std::vector<int>> comps;
};

Gauss to_gauss(const LinkDiagram& link) {
  Gauss g;
  std::map<int, int> head;  // incoming arc -> entry
  const auto crossings = link.crossings();
  for (std::size_t c = 0; c < crossings.size(); ++c) {
    const int label = static_cast<int>(c);
    g.sign.push_back(crossings[c].sign);
    head[crossings[c].arcs[0]] = label * 2;
    head[crossings[c].over_in()] = label * 2 + 1;
  }
  for (const auto& comp : link.components()) {
    std::vector<int> seq;
    for (int arc : comp) {
      auto it = head.find(arc);
      if (it != head.end()) seq.push_back(it->second);
    }
    g.comps.push_back(std::move(seq));
  }
  return g;
}

// Removes Reidemeister I loops: a label whose two passages are adjacent.
void remove_kinks(Gauss& g) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& comp : g.comps) {
      const std::size_t len = comp.size();
      for (std::size_t k = 0; len >= 2 && k < len; ++k) {
        const std::size_t next = (k + 1) % len;
        if ((comp[k] >> 1) != (comp[next] >> 1)) continue;
        if (next == 0) {
          comp.pop_back();
          comp.erase(comp.begin());
        } else {
          comp.erase(comp.begin() + static_cast<std::ptrdiff_t>(k), comp.begin() + static_cast<std::ptrdiff_t>(k) + 2);
        }
        changed = true;
        break;
      }
      if (changed) break;
    }
  }
}

bool is_split(const Gauss& g) {
  const std::size_t m = g.comps.size();
  if (m <= 1) return false;
  std::vector<int> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<int> first(g.sign.size(), -1);
  for (std::size_t c = 0; c < m; ++c)
    for (int e : g.comps[c]) {
      int& f = first[e >> 1];
      if (f < 0)
        f = static_cast<int>(c);
      else
        parent[find(f)] = find(static_cast<int>(c));
    }
  const int root = find(0);
  for (std::size_t c = 1; c < m; ++c)
    if (find(static_cast<int>(c)) != root) return true;
  return false;
}

// Relabels crossings by first appearance and rotates each component to the
// lexicographically smallest code given the labels fixed by earlier components.
Gauss canonical(const Gauss& g) {
  std::vector<int> relabel(g.sign.size(), -1);
  int next = 0;
  Gauss out;
  for (const auto& comp : g.comps) {
    const std::size_t len = comp.size();
    std::vector<int> best;
    std::size_t best_rot = 0;
    for (std::size_t r = 0; r < len; ++r) {
      std::vector<int> trial = relabel;
      int tentative = next;
      std::vector<int> code;
      code.reserve(len);
      for (std::size_t k = 0; k < len; ++k) {
        const int e = comp[(r + k) % len];
        int& label = trial[e >> 1];
        if (label < 0) label = tentative++;
        code.push_back(label * 2 + (e & 1));
      }
      if (r == 0 || code < best) {
        best = std::move(code);
        best_rot = r;
      }
    }
    std::vector<int> seq;
    seq.reserve(len);
    for (std::size_t k = 0; k < len; ++k) {
      const int e = comp[(best_rot + k) % len];
      int& label = relabel[e >> 1];
      if (label < 0) label = next++;
      seq.push_back(label * 2 + (e & 1));
    }
    out.comps.push_back(std::move(seq));
  }
  out.sign.assign(next, 0);
  for (std::size_t old = 0; old < relabel.size(); ++old)
    if (relabel[old] >= 0) out.sign[relabel[old]] = g.sign[old];
  return out;
}

std::vector<int> key_of(const Gauss& g) {
  std::vector<int> key;
  key.push_back(static_cast<int>(g.comps.size()));
  for (const auto& c : g.comps) key.push_back(static_cast<int>(c.size()));
  for (const auto& c : g.comps) key.insert(key.end(), c.begin(), c.end());
  key.insert(key.end(), g.sign.begin(), g.sign.end());
  return key;
}

struct KeyHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (int x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

struct Location {
  int comp;
  int index;
};

std::pair<Location, Location> locate(const Gauss& g, int label) {
  Location first{-1, -1}, second{-1, -1};
  for (std::size_t c = 0; c < g.comps.size(); ++c)
    for (std::size_t k = 0; k < g.comps[c].size(); ++k)
      if ((g.comps[c][k] >> 1) == label) {
        Location here{static_cast<int>(c), static_cast<int>(k)};
        if (first.comp < 0)
          first = here;
        else
          second = here;
      }
  return {first, second};
}

Gauss switch_crossing(const Gauss& g, int label) {
  Gauss out = g;
  out.sign[label] = -out.sign[label];
  for (auto& comp : out.comps)
    for (int& e : comp)
      if ((e >> 1) == label) e ^= 1;
  return out;
}

std::vector<int> rotated_tail(const std::vector<int>& comp, int start) {
  std::vector<int> out;
  for (std::size_t k = 1; k < comp.size(); ++k) out.push_back(comp[(start + k) % comp.size()]);
  return out;
}

// Oriented resolution of a crossing.
Gauss smooth_crossing(const Gauss& g, int label) {
  const auto [p, q] = locate(g, label);
  Gauss out;
  out.sign = g.sign;
  if (p.comp == q.comp) {
    const auto& comp = g.comps[p.comp];
    const std::vector<int> tail = rotated_tail(comp, p.index);  // X c Y
    const std::size_t split = static_cast<std::size_t>(q.index - p.index - 1);
    std::vector<int> x(tail.begin(), tail.begin() + static_cast<std::ptrdiff_t>(split));
    std::vector<int> y(tail.begin() + static_cast<std::ptrdiff_t>(split) + 1, tail.end());
    for (std::size_t c = 0; c < g.comps.size(); ++c) {
      if (static_cast<int>(c) == p.comp)
        out.comps.push_back(x);
      else
        out.comps.push_back(g.comps[c]);
    }
    out.comps.push_back(std::move(y));
  } else {
    std::vector<int> merged = rotated_tail(g.comps[p.comp], p.index);
    const std::vector<int> other = rotated_tail(g.comps[q.comp], q.index);
    merged.insert(merged.end(), other.begin(), other.end());
    for (std::size_t c = 0; c < g.comps.size(); ++c) {
      if (static_cast<int>(c) == p.comp)
        out.comps.push_back(merged);
      else if (static_cast<int>(c) != q.comp)
        out.comps.push_back(g.comps[c]);
    }
  }
  return out;
}

class SkeinSolver {
 public:
  ConwayPoly eval(Gauss g) {
    remove_kinks(g);
    if (is_split(g)) return {};
    g = canonical(g);
    std::vector<int> key = key_of(g);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    // Switch every ascending crossing, relative to the fixed basepoints, in
    // traversal order.  Each switch contributes sign * z * (smoothing), and the
    // fully switched diagram is descending, hence an unlink.
    ConwayPoly result = ConwayPoly::constant(g.comps.size() == 1 ? 1 : 0);
    Gauss current = g;
    for (int bad : ascending_crossings(g)) {
      const ConwayPoly smoothed = eval(smooth_crossing(current, bad)).times_z();
      result = current.sign[bad] > 0 ? result + smoothed : result - smoothed;
      current = switch_crossing(current, bad);
    }
    memo_.emplace(std::move(key), result);
    return result;
  }

 private:
  // Crossings met as an under-passage on their first visit, walking the
  // components in order from their basepoints.  Empty iff the diagram is
  // descending.
  static std::vector<int> ascending_crossings(const Gauss& g) {
    std::vector<int> out;
    std::vector<char> seen(g.sign.size(), 0);
    for (const auto& comp : g.comps)
      for (int e : comp) {
        const int label = e >> 1;
        if (seen[label]) continue;
        seen[label] = 1;
        if (!(e & 1)) out.push_back(label);
      }
    return out;
  }

  std::unordered_map<std::vector<int>, ConwayPoly, KeyHash> memo_;
};

}  // namespace

ConwayPoly conway(const LinkDiagram& link, const ConwayOptions& options) {
  if (link.crossing_count() > options.crossing_cap)
    resource_error("diagram has " + std::to_string(link.crossing_count()) +
                   " crossings, above the crossing cap of " + std::to_string(options.crossing_cap));
  SkeinSolver solver;
  return solver.eval(to_gauss(link));
}

std::int64_t casson(const LinkDiagram& knot, const ConwayOptions& options) {
  if (knot.component_count() != 1)
    input_error("casson invariant needs a knot, got " + std::to_string(knot.component_count()) +
                " components");
  return conway(knot, options).a(2);
}

int arf(const LinkDiagram& knot, const ConwayOptions& options) {
  if (knot.component_count() != 1)
    input_error("arf invariant needs a knot, got " + std::to_string(knot.component_count()) +
                " components");
  return static_cast<int>(((conway(knot, options).a(2) % 2) + 2) % 2);
}

std::int64_t sato_levine(const LinkDiagram& link, const ConwayOptions& options) {
  if (link.component_count() != 2)
    input_error("Sato-Levine invariant needs a 2-component link, got " +
                std::to_string(link.component_count()) + " components");
  if (const int lk = link.linking_number(0, 1); lk != 0)
    precondition_error("Sato-Levine invariant needs linking number 0, got " + std::to_string(lk));
  return conway(link, options).a(3);
}

int sato_levine_mod2(const LinkDiagram& link, const ConwayOptions& options) {
  return static_cast<int>(((sato_levine(link, options) % 2) + 2) % 2);
}

std::int64_t v2_pair(const StringLinkDiagram& d, int i, int j, const ConwayOptions& options) {
  return casson(plat_close_pair(d, i, j), options) - casson(close(d, {i}), options) -
         casson(close(d, {j}), options);
}

std::int64_t v2(const StringLinkDiagram& d, const ConwayOptions& options) {
  if (d.strands() != 2)
    input_error("V2 needs a 2-strand diagram, got " + std::to_string(d.strands()));
  return v2_pair(d, 1, 2, options);
}

}  // namespace strlink
