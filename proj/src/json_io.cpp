#include "ultra/json_io.hpp"

#include "ultra/error.hpp"

namespace ultra {

Json to_json(const Rational& r) { return format_rational(r); }
Json to_json(const ExtRational& r) { return format_ext_rational(r); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  throw ParseError("expected a rational string, got " + j.dump());
}

ExtRational ext_rational_from_json(const Json& j) {
  if (j.is_string()) return parse_ext_rational(j.get<std::string>());
  return rational_from_json(j);
}

Json to_json(const FiniteUltraSpace& space) {
  Json out;
  out["labels"] = space.labels();
  Json rows = Json::array();
  for (PointId i = 0; i < space.size(); ++i) {
    Json row = Json::array();
    for (PointId k = 0; k < space.size(); ++k) row.push_back(to_json(space.dist(i, k)));
    rows.push_back(std::move(row));
  }
  out["dist"] = std::move(rows);
  return out;
}

namespace {

std::pair<RationalMatrix, std::vector<std::string>> read_matrix(const Json& j) {
  if (!j.is_object() || !j.contains("dist") || !j["dist"].is_array()) {
    throw ParseError("space JSON needs a \"dist\" array");
  }
  RationalMatrix d;
  for (const auto& row : j["dist"]) {
    if (!row.is_array()) throw ParseError("each row of \"dist\" must be an array");
    std::vector<Rational> r;
    for (const auto& e : row) r.push_back(rational_from_json(e));
    d.push_back(std::move(r));
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    for (const auto& l : j["labels"]) {
      if (!l.is_string()) throw ParseError("labels must be strings");
      labels.push_back(l.get<std::string>());
    }
  }
  return {std::move(d), std::move(labels)};
}

SchemeNode node_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("diam")) throw ParseError("scheme node needs \"diam\"");
  SchemeNode n;
  n.diam = rational_from_json(j["diam"]);
  if (j.contains("degree")) {
    const auto& d = j["degree"];
    if (d.is_string() && d.get<std::string>() == "unbounded") {
      n.degree = Degree::unbounded();
    } else if (d.is_number_unsigned()) {
      n.degree = Degree::finite(d.get<std::uint64_t>());
    } else {
      throw ParseError("degree must be a positive integer or \"unbounded\"");
    }
  } else if (n.diam != 0) {
    throw ParseError("internal scheme node needs \"degree\"");
  }
  if (j.contains("children")) {
    for (const auto& c : j["children"]) n.children.push_back(node_from_json(c));
  }
  return n;
}

Json path_json(const DescriptorPath& p) { return Json(p); }

Json labels_of(const std::vector<std::string>& v) { return Json(v); }

}  // namespace

FiniteUltraSpace space_from_json(const Json& j) {
  auto [d, labels] = read_matrix(j);
  return validate_ultrametric(d, std::move(labels));
}

FiniteMetricSpace metric_from_json(const Json& j) {
  auto [d, labels] = read_matrix(j);
  return validate_metric(d, std::move(labels));
}

Json to_json(const SchemeNode& node) {
  Json out;
  out["diam"] = to_json(node.diam);
  if (!node.is_leaf()) {
    if (node.degree.is_unbounded()) {
      out["degree"] = "unbounded";
    } else {
      out["degree"] = *node.degree.count;
    }
    Json children = Json::array();
    for (const auto& c : node.children) children.push_back(to_json(c));
    out["children"] = std::move(children);
  }
  return out;
}

TreeScheme scheme_from_json(const Json& j) { return TreeScheme::make(node_from_json(j)); }

Json to_json(const SpectrumSet& s) {
  Json out = Json::array();
  for (const auto& v : s.values) out.push_back(to_json(v));
  return out;
}

Json to_json(const Ball& b) {
  Json out;
  out["points"] = b.points;
  out["diam"] = to_json(b.diameter);
  return out;
}

Json to_json(const ValuedTree& t) {
  Json nodes = Json::array();
  for (const auto& n : t.nodes()) {
    Json e;
    e["parent"] = n.parent ? Json(*n.parent) : Json(nullptr);
    e["value"] = to_json(n.value);
    if (n.children.empty()) e["label"] = n.label;
    e["children"] = n.children;
    nodes.push_back(std::move(e));
  }
  Json out;
  out["root"] = t.root();
  out["nodes"] = std::move(nodes);
  return out;
}

ValuedTree tree_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("nodes") || !j["nodes"].is_array()) {
    throw ParseError("tree JSON needs a \"nodes\" array");
  }
  std::vector<std::optional<std::size_t>> parents;
  std::vector<Rational> values;
  std::vector<std::string> labels;
  for (const auto& n : j["nodes"]) {
    if (!n.is_object() || !n.contains("value")) throw ParseError("tree node needs \"value\"");
    const auto& par = n.contains("parent") ? n["parent"] : Json(nullptr);
    if (par.is_null()) {
      parents.emplace_back();
    } else if (par.is_number_unsigned()) {
      parents.emplace_back(par.get<std::size_t>());
    } else {
      throw ParseError("tree parent must be an index or null");
    }
    values.push_back(rational_from_json(n["value"]));
    labels.push_back(n.contains("label") && n["label"].is_string() ? n["label"].get<std::string>()
                                                                    : std::string());
  }
  return ValuedTree::make(std::move(parents), std::move(values), std::move(labels));
}

Json to_json(const PartialMap& f) {
  Json out = Json::array();
  for (const auto& [x, fx] : f.pairs()) out.push_back(Json::array({x, fx}));
  return out;
}

PartialMap partial_map_from_json(const Json& j, const FiniteUltraSpace& source,
                                 const FiniteUltraSpace& target) {
  if (!j.is_array()) throw ParseError("map must be an array of [x, y] pairs");
  std::vector<PartialMap::Pair> pairs;
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_unsigned() ||
        !p[1].is_number_unsigned()) {
      throw ParseError("map entries must be [x, y] index pairs");
    }
    pairs.emplace_back(p[0].get<std::size_t>(), p[1].get<std::size_t>());
  }
  return PartialMap::make(source, target, std::move(pairs));
}

Json to_json(const AlphaPath& p) {
  Json out;
  out["alpha"] = to_json(p.alpha());
  Json pure = Json::array();
  for (auto b : p.pure()) pure.push_back(to_json(p.host()->nerve().ball(b)));
  out["pure"] = std::move(pure);
  return out;
}

Json to_json(const PathOrBottom& p) {
  if (const auto* b = std::get_if<BottomPath>(&p)) {
    Json out;
    out["alpha"] = to_json(b->alpha);
    out["bottom"] = true;
    return out;
  }
  return to_json(std::get<AlphaPath>(p));
}

PathOrBottom path_from_json(const Json& j, const HostPtr& host) {
  if (!j.is_object() || !j.contains("alpha")) throw ParseError("path JSON needs \"alpha\"");
  const auto alpha = ext_rational_from_json(j["alpha"]);
  if (j.contains("bottom") && j["bottom"] == true) return BottomPath{alpha};
  if (!j.contains("pure") || !j["pure"].is_array()) throw ParseError("path JSON needs \"pure\"");
  std::vector<Ball> gens;
  for (const auto& b : j["pure"]) {
    if (!b.is_object() || !b.contains("points")) throw ParseError("ball JSON needs \"points\"");
    Ball ball;
    for (const auto& p : b["points"]) {
      if (!p.is_number_unsigned()) throw ParseError("ball points must be indices");
      ball.points.push_back(p.get<std::size_t>());
    }
    std::sort(ball.points.begin(), ball.points.end());
    if (ball.points.empty()) throw ParseError("empty ball");
    if (ball.points.back() >= host->space().size()) throw Error("ball point out of range");
    ball.diameter = least_ball_containing(host->space(), ball.points).diameter;
    if (b.contains("diam") && rational_from_json(b["diam"]) != ball.diameter) {
      throw Error("ball diameter does not match its points");
    }
    gens.push_back(std::move(ball));
  }
  return path_from_balls(host, gens, alpha);
}

AlphaPath alpha_path_from_json(const Json& j, const HostPtr& host) {
  auto p = path_from_json(j, host);
  if (std::holds_alternative<BottomPath>(p)) throw Error("expected a path, got bottom");
  return std::get<AlphaPath>(p);
}

Json to_json(const WeightedWord& w) { return Json(w.coords); }

Json to_json(const ExtensionReport& r, const FiniteUltraSpace& space) {
  NerveTree tree(space);
  Json out;
  Json crit;
  crit["holds"] = r.singleton_extension;
  if (r.singleton_failure) {
    crit["witness"] = {{"map", to_json(r.singleton_failure->f)},
                       {"target", r.singleton_failure->target}};
  }
  out["singleton_extension"] = std::move(crit);
  Json step;
  step["holds"] = r.one_step_extension;
  if (r.one_step_failure) {
    step["witness"] = {{"y", r.one_step_failure->y},
                       {"image", r.one_step_failure->image},
                       {"x", r.one_step_failure->x}};
  }
  out["one_step_extension"] = std::move(step);
  Json up;
  up["holds"] = r.up_directed;
  if (r.up_directed_failure) {
    up["witness"] = {{"ball", to_json(tree.ball(r.up_directed_failure->ball))},
                     {"a", r.up_directed_failure->a},
                     {"b", r.up_directed_failure->b}};
  }
  out["up_directed"] = std::move(up);
  Json sons = Json::array();
  for (const auto& s : r.son_embeddings) {
    sons.push_back({{"ball", to_json(tree.ball(s.ball))},
                    {"son", s.son},
                    {"embeds_into", s.count},
                    {"sons", s.sons}});
  }
  out["son_embeddings"] = std::move(sons);
  if (r.least_multiplicity) {
    out["least_multiplicity"] = {{"y", r.least_multiplicity->y},
                                 {"x", r.least_multiplicity->x},
                                 {"count", r.least_multiplicity->count}};
  } else {
    out["least_multiplicity"] = nullptr;
  }
  return out;
}

Json to_json(const IndivisibilityReport& r) {
  auto cond = [](bool holds) {
    Json c;
    c["holds"] = holds;
    return c;
  };
  Json out;
  auto c1 = cond(r.singleton_extension);
  if (r.singleton_extension_failure) {
    const auto& w = *r.singleton_extension_failure;
    c1["witness"] = {{"y", path_json(w.y)},
                     {"image", path_json(w.y_image)},
                     {"descriptor", path_json(w.descriptor)},
                     {"son_type", w.son_type}};
  }
  out["singleton_extension"] = std::move(c1);
  out["well_founded"] = cond(r.well_founded);
  auto c3 = cond(r.infinitely_many_sons);
  if (r.finite_degree_at) c3["witness"] = {{"descriptor", path_json(*r.finite_degree_at)}};
  out["infinitely_many_sons"] = std::move(c3);
  auto c4 = cond(r.up_directed);
  if (r.up_directed_failure) {
    const auto& w = *r.up_directed_failure;
    c4["witness"] = {{"descriptor", path_json(w.descriptor)},
                     {"a", path_json(w.a)},
                     {"b", path_json(w.b)}};
  }
  out["up_directed"] = std::move(c4);
  auto da = cond(r.dominated_ball);
  if (r.dominated_ball_failure) {
    const auto& w = *r.dominated_ball_failure;
    da["witness"] = {{"y", path_json(w.y)}, {"image", path_json(w.y_image)}, {"x", path_json(w.x)}};
  }
  out["dominated_ball"] = std::move(da);
  auto db = cond(r.ball_into_dominators);
  if (r.ball_into_dominators_failure) {
    const auto& w = *r.ball_into_dominators_failure;
    db["witness"] = {{"descriptor", path_json(w.descriptor)}, {"a", path_json(w.a)}};
  }
  out["ball_into_dominators"] = std::move(db);
  out["satisfied"] = r.satisfied();
  return out;
}

Json to_json(const WellFoundednessReport& r) {
  Json out;
  out["diameter"] = to_json(r.diameter);
  out["diameter_attained"] = r.diameter_attained;
  out["well_founded"] = r.well_founded;
  out["no_increasing_ball_sequence"] = r.no_increasing_ball_sequence;
  out["max_ball_chain"] = r.max_ball_chain;
  out["satisfied"] = r.satisfied();
  return out;
}

Json to_json(const DivisibilityResult& r) {
  Json out;
  out["verdict"] = verdict_name(r.verdict);
  out["colorings_checked"] = r.colorings_checked;
  if (r.witness) {
    out["witness"] = {{"k", r.witness->k}, {"parts", r.witness->parts}};
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

Json to_json(const LawReport& r) {
  Json laws = Json::array();
  for (const auto& l : r.laws) {
    Json e;
    e["law"] = l.law;
    e["holds"] = l.ok();
    e["checked"] = l.checked;
    e["skipped"] = l.skipped;
    if (l.counterexample) e["counterexample"] = labels_of(*l.counterexample);
    laws.push_back(std::move(e));
  }
  Json out;
  out["laws"] = std::move(laws);
  out["holds"] = r.ok();
  return out;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace ultra
