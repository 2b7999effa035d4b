#pragma once

// JSON and text input/output.
//
// Tangle JSON:   {"strands": n, "events": [{"kind": "crossing", "pos": k, "sign": s}, ...]}
//                kinds "crossing", "cup", "cap"; "sign" only for crossings.
// PD JSON:       {"pd": [[a, b, c, d, sign], ...], "loops": [arc, ...]}
// Ambient JSON:  [{"knot": <tangle text | tangle JSON | PD JSON>, "framing": +-1}, ...]
//                A tangle knot is closed on all strands.

#include <string>
#include <string_view>

#include <json.hpp>

#include "strlink/algebra.hpp"
#include "strlink/classify.hpp"
#include "strlink/conway.hpp"
#include "strlink/link_diagram.hpp"
#include "strlink/tangle.hpp"

namespace strlink {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

StringLinkDiagram tangle_from_json(const Json& j);
LinkDiagram link_from_json(const Json& j);
AmbientPresentation ambient_from_json(const Json& j);

// Accepts tangle text or tangle JSON.
StringLinkDiagram load_tangle(std::string_view content);
// Accepts tangle text, tangle JSON, or PD JSON; tangles are closed on all strands.
LinkDiagram load_link(std::string_view content);
AmbientPresentation load_ambient(std::string_view content);

// Reads a whole file; throws Error(Input) if it cannot be opened.
std::string read_file(const std::string& path);

OrderedJson to_json(const StringLinkDiagram& d);
OrderedJson to_json(const LinkDiagram& link);
OrderedJson to_json(const AmbientPresentation& ambient);
OrderedJson to_json(const InvariantVector& v);
OrderedJson to_json(const VassilievVector& v);
// Zero parts are omitted, so the zero element is {}.
OrderedJson to_json(const NormalForm& nf);
OrderedJson to_json(const ConwayPoly& p);

}  // namespace strlink
