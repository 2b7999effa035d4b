// strlink: command-line front end for the string-link invariant library.
//
// Exit codes: 0 success, 1 input error, 2 resource limit, 3 precondition
// violation, 4 selftest mismatch.

#include <unistd.h>

#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "strlink/algebra.hpp"
#include "strlink/builtins.hpp"
#include "strlink/classify.hpp"
#include "strlink/conway.hpp"
#include "strlink/error.hpp"
#include "strlink/json_io.hpp"
#include "strlink/milnor.hpp"

namespace {

using namespace strlink;

constexpr int kSelftestFailure = 4;

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Input: return 1;
    case ErrorKind::ResourceLimit: return 2;
    case ErrorKind::Precondition: return 3;
  }
  return 1;
}

bool use_color() { return std::getenv("NO_COLOR") == nullptr && isatty(STDOUT_FILENO); }

struct Globals {
  int magnus_cap = kDefaultMagnusCap;
  int crossing_cap = 20;

  ClassifyOptions options() const { return {magnus_cap, crossing_cap}; }
};

std::optional<AmbientPresentation> maybe_ambient(const std::string& path) {
  if (path.empty()) return std::nullopt;
  return load_ambient(read_file(path));
}

int cmd_invariants(const Globals& g, const std::string& file, const std::string& ambient_file) {
  const StringLinkDiagram d = load_tangle(read_file(file));
  const auto ambient = maybe_ambient(ambient_file);
  std::cout << to_json(tau(d, ambient ? &*ambient : nullptr, g.options())).dump() << "\n";
  return 0;
}

int cmd_classify(const Globals& g, const std::string& a_file, const std::string& b_file,
                 const std::string& relation, const std::string& amb_a, const std::string& amb_b) {
  const StringLinkDiagram a = load_tangle(read_file(a_file));
  const StringLinkDiagram b = load_tangle(read_file(b_file));
  bool same = false;
  if (relation == "y2") {
    same = y2_equivalent({a, maybe_ambient(amb_a)}, {b, maybe_ambient(amb_b)}, g.options());
  } else {
    if (!amb_a.empty() || !amb_b.empty())
      input_error("clasp-pass equivalence is defined for classical string links only");
    same = clasp_pass_equivalent(a, b, g.options());
  }
  std::cout << (same ? "EQUIVALENT" : "NOT EQUIVALENT") << "\n";
  return 0;
}

int cmd_conway(const Globals& g, const std::string& file, const std::vector<int>& strands, bool json) {
  const std::string content = read_file(file);
  LinkDiagram link;
  if (strands.empty()) {
    link = load_link(content);
  } else {
    link = close(load_tangle(content), strands);
  }
  const ConwayPoly p = conway(link, g.options().conway());
  if (json)
    std::cout << to_json(p).dump() << "\n";
  else
    std::cout << p.to_string() << "\n";
  return 0;
}

int cmd_milnor(const Globals& g, const std::string& file, const std::vector<int>& triple) {
  const StringLinkDiagram d = load_tangle(read_file(file));
  const LongitudeData data = longitudes(d, g.magnus_cap);
  if (!triple.empty()) {
    if (triple.size() != 3) input_error("--triple takes three indices i,j,k");
    std::cout << mu3(data, triple[0], triple[1], triple[2]) << "\n";
    return 0;
  }
  OrderedJson out;
  out["framings"] = data.framings;
  out["linking"] = data.linking;
  OrderedJson lon = OrderedJson::array();
  for (const MagnusSeries& s : data.longitudes) lon.push_back(s.to_string());
  out["longitudes"] = std::move(lon);
  std::cout << out.dump() << "\n";
  return 0;
}

int cmd_normalize(const std::string& expr, int n) {
  std::cout << to_json(normalize(parse_element(expr, n))).dump() << "\n";
  return 0;
}

int cmd_mj(const std::string& expr, int genus, std::vector<int> perm) {
  const AlgebraElement x = parse_surface_element(expr, genus);
  if (perm.empty()) perm = default_mj_permutation(genus);
  const AlgebraElement y = mj_relabel(x, perm);
  OrderedJson out;
  out["element"] = to_string(y);
  out["normal_form"] = to_json(normalize(y));
  std::cout << out.dump() << "\n";
  return 0;
}

int cmd_generators(const std::string& name, int n, const std::vector<int>& indices) {
  const Builtin b = builtin(name, n, indices);
  if (const auto* d = std::get_if<StringLinkDiagram>(&b))
    std::cout << to_text(*d) << "\n";
  else
    std::cout << to_json(std::get<AmbientPresentation>(b)).dump() << "\n";
  return 0;
}

int cmd_selftest(const Globals& g) {
  const bool color = use_color();
  int failures = 0;
  auto report = [&](const std::string& name, bool ok) {
    const char* tag = ok ? "PASS" : "FAIL";
    if (color) std::cout << (ok ? "\033[32m" : "\033[31m") << tag << "\033[0m";
    else std::cout << tag;
    std::cout << "  " << name << "\n";
    if (!ok) ++failures;
  };
  auto check = [&](const std::string& name, const std::function<bool()>& f) {
    try {
      report(name, f());
    } catch (const std::exception& e) {
      report(name + " (" + e.what() + ")", false);
    }
  };
  const ClassifyOptions opt = g.options();

  check("borromean(3;1,2,3): mu123 = 1, all else 0", [&] {
    InvariantVector want;
    want.mu3[{1, 2, 3}] = 1;
    want.arf = {0, 0, 0};
    return tau(borromean(3, 1, 2, 3), nullptr, opt) == want;
  });
  check("whitehead(2;1,2): sl2_12 = 1, all else 0", [&] {
    InvariantVector want;
    want.sl2[{1, 2}] = 1;
    want.arf = {0, 0};
    return tau(whitehead(2, 1, 2), nullptr, opt) == want;
  });
  check("trefoil_insert(2;1): arf_1 = 1, all else 0", [&] {
    InvariantVector want;
    want.arf = {1, 0};
    return tau(trefoil_insert(2, 1), nullptr, opt) == want;
  });
  check("poincare: rochlin = 1, all else 0", [&] {
    InvariantVector want;
    want.arf = {0, 0, 0};
    want.rochlin = 1;
    const AmbientPresentation p = poincare();
    return tau(StringLinkDiagram::trivial(3), &p, opt) == want;
  });
  check("conway(trefoil) = 1 + z^2", [&] {
    return conway(close(parse_tangle("strands 1; u2 x1+ x1+ x1+ n2"), {1}), opt.conway()) ==
           ConwayPoly({1, 0, 1});
  });
  check("conway(figure-eight) = 1 - z^2", [&] {
    return conway(close(parse_tangle("strands 1; u2 u3 x1+ x2- x1+ x2- n3 n2"), {1}), opt.conway()) ==
           ConwayPoly({1, 0, -1});
  });
  check("normalize(Y[e1;e1;e1]) = e1 (mod 2)", [&] {
    NormalForm want(2);
    want.h2 = {1, 0};
    return normalize(parse_element("Y[e1;e1;e1]", 2)) == want;
  });
  std::cout << (failures == 0 ? "selftest passed" : "selftest FAILED") << "\n";
  return failures == 0 ? 0 : kSelftestFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants and classification of framed string links"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  Globals g;
  app.add_option("--magnus-cap", g.magnus_cap, "Magnus expansion degree cap")->check(CLI::Range(2, 12));
  app.add_option("--crossing-cap", g.crossing_cap, "Conway recursion crossing cap")->check(CLI::Range(1, 200));

  std::function<int()> run;

  std::string file, file_b, ambient, ambient_b, relation = "y2", expr, name;
  std::vector<int> ints;
  int n = 0, genus = 0;
  bool json = false;

  auto* inv = app.add_subcommand("invariants", "tau invariants of a string link as JSON");
  inv->add_option("file", file, "tangle text or JSON")->required();
  inv->add_option("--ambient", ambient, "ambient surgery presentation (JSON)");
  inv->callback([&] { run = [&] { return cmd_invariants(g, file, ambient); }; });

  auto* cls = app.add_subcommand("classify", "compare two string links");
  cls->add_option("a", file, "first string link")->required();
  cls->add_option("b", file_b, "second string link")->required();
  cls->add_option("--relation", relation, "y2 or clasp-pass")
      ->check(CLI::IsMember({"y2", "clasp-pass"}));
  cls->add_option("--ambient-a", ambient, "ambient presentation for the first input");
  cls->add_option("--ambient-b", ambient_b, "ambient presentation for the second input");
  cls->callback([&] { run = [&] { return cmd_classify(g, file, file_b, relation, ambient, ambient_b); }; });

  auto* cw = app.add_subcommand("conway", "Conway polynomial of a link or of a closure");
  cw->add_option("file", file, "tangle text/JSON or PD JSON")->required();
  cw->add_option("--strands", ints, "close only these strands (comma separated)")->delimiter(',');
  cw->add_flag("--json", json, "JSON output");
  cw->callback([&] { run = [&] { return cmd_conway(g, file, ints, json); }; });

  auto* mil = app.add_subcommand("milnor", "framings, linking numbers, longitudes, triple linking");
  mil->add_option("file", file, "tangle text or JSON")->required();
  mil->add_option("--triple", ints, "i,j,k: print mu_ijk")->delimiter(',');
  mil->callback([&] { run = [&] { return cmd_milnor(g, file, ints); }; });

  auto* alg = app.add_subcommand("algebra-normalize", "normal form of an element of A_1(P_n)");
  alg->add_option("expr", expr, "element, e.g. \"2 Y[e1+e2; s; e3] - Y[s;s;s]\"")->required();
  alg->add_option("--n", n, "number of strands")->required();
  alg->callback([&] { run = [&] { return cmd_normalize(expr, n); }; });

  auto* mj = app.add_subcommand("mj", "relabel a surface-basis element into the string-link basis");
  mj->add_option("expr", expr, "element over a1..ag, b1..bg and s")->required();
  mj->add_option("--genus", genus, "surface genus")->required();
  mj->add_option("--perm", ints, "targets of a1..ag, b1..bg (comma separated)")->delimiter(',');
  mj->callback([&] { run = [&] { return cmd_mj(expr, genus, ints); }; });

  auto* gen = app.add_subcommand("generators", "print a built-in representative");
  gen->add_option("name", name, "trefoil_insert, whitehead, borromean or poincare")->required();
  gen->add_option("--n", n, "number of strands")->default_val(1);
  gen->add_option("--indices", ints, "strand indices (comma separated)")->delimiter(',');
  gen->callback([&] { run = [&] { return cmd_generators(name, n, ints); }; });

  auto* self = app.add_subcommand("selftest", "check the built-in golden values");
  self->callback([&] { run = [&] { return cmd_selftest(g); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    return run();
  } catch (const strlink::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  }
}
