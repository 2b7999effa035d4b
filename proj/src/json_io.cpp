#include "strlink/json_io.hpp"

#include <fstream>
#include <sstream>

#include "strlink/error.hpp"

namespace strlink {

namespace {

bool looks_like_json(std::string_view s) {
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{' || c == '[';
  }
  return false;
}

Json parse_json(std::string_view content) {
  try {
    return Json::parse(content);
  } catch (const Json::parse_error& e) {
    input_error(std::string("malformed JSON: ") + e.what());
  }
}

int int_field(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer())
    input_error(std::string("expected integer field \"") + key + "\"");
  return j.at(key).get<int>();
}

std::string key3(const std::array<int, 3>& k) {
  return std::to_string(k[0]) + "," + std::to_string(k[1]) + "," + std::to_string(k[2]);
}

std::string key2(const std::pair<int, int>& k) {
  return std::to_string(k.first) + "," + std::to_string(k.second);
}

}  // namespace

StringLinkDiagram tangle_from_json(const Json& j) {
  if (!j.is_object()) input_error("tangle JSON must be an object");
  const int n = int_field(j, "strands");
  std::vector<TangleEvent> events;
  if (j.contains("events")) {
    if (!j.at("events").is_array()) input_error("\"events\" must be an array");
    for (const Json& e : j.at("events")) {
      if (!e.is_object() || !e.contains("kind") || !e.at("kind").is_string())
        input_error("each event needs a string \"kind\"");
      const std::string kind = e.at("kind").get<std::string>();
      const int pos = int_field(e, "pos");
      if (kind == "crossing") {
        const int sign = int_field(e, "sign");
        if (sign != 1 && sign != -1) input_error("crossing sign must be +1 or -1");
        events.push_back(TangleEvent::crossing(pos, sign));
      } else if (kind == "cup") {
        events.push_back(TangleEvent::cup(pos));
      } else if (kind == "cap") {
        events.push_back(TangleEvent::cap(pos));
      } else {
        input_error("unknown event kind \"" + kind + "\"");
      }
    }
  }
  return StringLinkDiagram(n, std::move(events));
}

LinkDiagram link_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("pd") || !j.at("pd").is_array())
    input_error("PD JSON needs a \"pd\" array");
  std::vector<PDCrossing> crossings;
  for (const Json& c : j.at("pd")) {
    if (!c.is_array() || c.size() != 5) input_error("each PD crossing is [a, b, c, d, sign]");
    PDCrossing x;
    for (int k = 0; k < 4; ++k) {
      if (!c[k].is_number_integer()) input_error("PD arc ids must be integers");
      x.arcs[k] = c[k].get<int>();
    }
    if (!c[4].is_number_integer()) input_error("PD sign must be an integer");
    x.sign = c[4].get<int>();
    crossings.push_back(x);
  }
  std::vector<int> loops;
  if (j.contains("loops")) {
    if (!j.at("loops").is_array()) input_error("\"loops\" must be an array");
    for (const Json& l : j.at("loops")) {
      if (!l.is_number_integer()) input_error("loop ids must be integers");
      loops.push_back(l.get<int>());
    }
  }
  return LinkDiagram(std::move(crossings), std::move(loops));
}

namespace {

LinkDiagram knot_from_json(const Json& k) {
  if (k.is_string()) {
    const StringLinkDiagram d = parse_tangle(k.get<std::string>());
    std::vector<int> all(d.strands());
    for (int i = 0; i < d.strands(); ++i) all[i] = i + 1;
    return close(d, all);
  }
  if (k.is_object() && k.contains("pd")) return link_from_json(k);
  if (k.is_object() && k.contains("strands")) {
    const StringLinkDiagram d = tangle_from_json(k);
    std::vector<int> all(d.strands());
    for (int i = 0; i < d.strands(); ++i) all[i] = i + 1;
    return close(d, all);
  }
  input_error("\"knot\" must be tangle text, tangle JSON or PD JSON");
}

}  // namespace

AmbientPresentation ambient_from_json(const Json& j) {
  if (!j.is_array()) input_error("ambient presentation must be a JSON array");
  AmbientPresentation a;
  for (const Json& c : j) {
    if (!c.is_object() || !c.contains("knot")) input_error("each surgery component needs \"knot\"");
    a.components.push_back({knot_from_json(c.at("knot")), int_field(c, "framing")});
  }
  validate(a);
  return a;
}

StringLinkDiagram load_tangle(std::string_view content) {
  return looks_like_json(content) ? tangle_from_json(parse_json(content)) : parse_tangle(content);
}

LinkDiagram load_link(std::string_view content) {
  if (!looks_like_json(content)) return knot_from_json(Json(std::string(content)));
  return knot_from_json(parse_json(content));
}

AmbientPresentation load_ambient(std::string_view content) {
  return ambient_from_json(parse_json(content));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) input_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

OrderedJson to_json(const StringLinkDiagram& d) {
  OrderedJson events = OrderedJson::array();
  for (const TangleEvent& e : d.events()) {
    OrderedJson ev;
    ev["kind"] = e.kind == EventKind::Crossing ? "crossing" : e.kind == EventKind::Cup ? "cup" : "cap";
    ev["pos"] = e.pos;
    if (e.kind == EventKind::Crossing) ev["sign"] = e.sign;
    events.push_back(std::move(ev));
  }
  OrderedJson out;
  out["strands"] = d.strands();
  out["events"] = std::move(events);
  return out;
}

OrderedJson to_json(const LinkDiagram& link) {
  OrderedJson pd = OrderedJson::array();
  for (const PDCrossing& c : link.crossings())
    pd.push_back({c.arcs[0], c.arcs[1], c.arcs[2], c.arcs[3], c.sign});
  OrderedJson out;
  out["pd"] = std::move(pd);
  if (!link.loops().empty()) out["loops"] = std::vector<int>(link.loops().begin(), link.loops().end());
  return out;
}

OrderedJson to_json(const AmbientPresentation& ambient) {
  OrderedJson out = OrderedJson::array();
  for (const SurgeryComponent& c : ambient.components) {
    OrderedJson comp;
    comp["knot"] = to_json(c.knot);
    comp["framing"] = c.framing;
    out.push_back(std::move(comp));
  }
  return out;
}

OrderedJson to_json(const InvariantVector& v) {
  OrderedJson out;
  out["mu3"] = OrderedJson::object();
  for (const auto& [k, x] : v.mu3) out["mu3"][key3(k)] = x;
  out["sl2"] = OrderedJson::object();
  for (const auto& [k, x] : v.sl2) out["sl2"][key2(k)] = x;
  out["arf"] = v.arf;
  out["rochlin"] = v.rochlin;
  return out;
}

OrderedJson to_json(const VassilievVector& v) {
  OrderedJson out;
  out["mu3"] = OrderedJson::object();
  for (const auto& [k, x] : v.mu3) out["mu3"][key3(k)] = x;
  out["v2"] = OrderedJson::object();
  for (const auto& [k, x] : v.v2) out["v2"][key2(k)] = x;
  out["phi"] = v.phi;
  return out;
}

OrderedJson to_json(const NormalForm& nf) {
  OrderedJson out = OrderedJson::object();
  if (!nf.lambda3.empty()) {
    OrderedJson l3;
    for (const auto& [k, x] : nf.lambda3) l3[key3(k)] = x;
    out["lambda3"] = std::move(l3);
  }
  if (!nf.lambda2.empty()) {
    OrderedJson l2;
    for (const auto& [k, x] : nf.lambda2) l2[key2(k)] = x;
    out["lambda2"] = std::move(l2);
  }
  if (std::any_of(nf.h2.begin(), nf.h2.end(), [](int x) { return x != 0; })) out["h2"] = nf.h2;
  if (nf.rochlin) out["rochlin"] = nf.rochlin;
  return out;
}

OrderedJson to_json(const ConwayPoly& p) {
  OrderedJson out;
  out["coefficients"] = p.coefficients();
  out["text"] = p.to_string();
  return out;
}

}  // namespace strlink
