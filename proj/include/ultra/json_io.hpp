#pragma once

#include <string>

#include "json.hpp"
#include "ultra/embeddings.hpp"
#include "ultra/monoid.hpp"
#include "ultra/path.hpp"
#include "ultra/ramsey.hpp"
#include "ultra/space.hpp"
#include "ultra/indivisibility.hpp"
#include "ultra/tree.hpp"

namespace ultra {

// Key order follows insertion so output bytes are reproducible.
using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Json to_json(const ExtRational& r);
Rational rational_from_json(const Json& j);
ExtRational ext_rational_from_json(const Json& j);

// {"labels":[...], "dist":[["0","1/2",...],...]}; labels may be omitted.
Json to_json(const FiniteUltraSpace& space);
FiniteUltraSpace space_from_json(const Json& j);
FiniteMetricSpace metric_from_json(const Json& j);

// {"diam":"p/q", "degree": k | "unbounded", "children":[...]}; degree and
// children are omitted on leaves.
Json to_json(const SchemeNode& node);
TreeScheme scheme_from_json(const Json& j);

Json to_json(const SpectrumSet& s);
Json to_json(const Ball& b);
Json to_json(const ValuedTree& t);
// {"root":i, "nodes":[{"parent":i|null, "value":"p/q", "label":..., "children":[...]}]}
ValuedTree tree_from_json(const Json& j);
Json to_json(const PartialMap& f);
PartialMap partial_map_from_json(const Json& j, const FiniteUltraSpace& source,
                                 const FiniteUltraSpace& target);

// {"alpha":"inf"|"p/q", "pure":[{"points":[...],"diam":"p/q"},...]};
// bottom is {"alpha":..., "bottom":true}.
Json to_json(const PathOrBottom& p);
Json to_json(const AlphaPath& p);
PathOrBottom path_from_json(const Json& j, const HostPtr& host);
AlphaPath alpha_path_from_json(const Json& j, const HostPtr& host);

Json to_json(const WeightedWord& w);
Json to_json(const ExtensionReport& r, const FiniteUltraSpace& space);
Json to_json(const IndivisibilityReport& r);
Json to_json(const WellFoundednessReport& r);
Json to_json(const DivisibilityResult& r);
Json to_json(const LawReport& r);

// Parses text, mapping syntax errors to ParseError.
Json parse_json(const std::string& text);

}  // namespace ultra
