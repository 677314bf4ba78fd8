#include <algorithm>
#include <functional>

#include "ultra/error.hpp"
#include "ultra/tree.hpp"

namespace ultra {

namespace {

constexpr std::size_t kMaxMaterializedPoints = 1u << 11;

void check_node(SchemeNode& node, const std::string& where) {
  if (node.diam < 0) throw ValidationError("negative diameter at " + where, {});
  if (node.is_leaf()) {
    if (!node.children.empty()) {
      throw ValidationError("leaf descriptor with children at " + where, {});
    }
    node.degree = Degree::finite(1);
    return;
  }
  if (!node.degree.is_unbounded()) {
    auto k = *node.degree.count;
    if (k < 2) throw ValidationError("degree below 2 at " + where, {});
    if (k < node.children.size()) {
      throw ValidationError("degree below the number of listed child types at " + where, {});
    }
  }
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    auto& c = node.children[i];
    if (!(c.diam < node.diam)) {
      throw ValidationError("diameter does not decrease below " + where, {});
    }
    check_node(c, where + "/" + std::to_string(i));
  }
}

const std::vector<SchemeNode>& point_son() {
  static const std::vector<SchemeNode> leaf{SchemeNode{Rational(0), Degree::finite(1), {}}};
  return leaf;
}

}  // namespace

TreeScheme TreeScheme::make(SchemeNode root) {
  check_node(root, "root");
  TreeScheme s;
  s.root_ = std::move(root);
  return s;
}

const std::vector<SchemeNode>& son_types(const SchemeNode& node) {
  return node.children.empty() ? point_son() : node.children;
}

std::uint64_t materialized_degree(const SchemeNode& node, std::size_t width) {
  if (node.is_leaf()) return 0;
  if (!node.degree.is_unbounded()) return *node.degree.count;
  return std::max<std::uint64_t>(width, node.children.size());
}

FiniteUltraSpace scheme_materialize(const TreeScheme& scheme, std::size_t width) {
  if (width < 2) throw Error("width must be at least 2");
  struct Point {
    std::vector<std::uint64_t> path;
    std::vector<const SchemeNode*> nodes;  // descriptor at each depth
  };
  std::vector<Point> points;
  Point cur;
  std::function<void(const SchemeNode&)> expand = [&](const SchemeNode& node) {
    cur.nodes.push_back(&node);
    if (node.is_leaf()) {
      if (points.size() >= kMaxMaterializedPoints) {
        throw Error("materialized space exceeds " + std::to_string(kMaxMaterializedPoints) +
                    " points");
      }
      points.push_back(cur);
    } else {
      const auto& types = son_types(node);
      auto deg = materialized_degree(node, width);
      for (std::uint64_t i = 0; i < deg; ++i) {
        cur.path.push_back(i);
        expand(types[i % types.size()]);
        cur.path.pop_back();
      }
    }
    cur.nodes.pop_back();
  };
  expand(scheme.root());

  const std::size_t n = points.size();
  RationalMatrix d(n, std::vector<Rational>(n, Rational(0)));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    std::string label = "(";
    for (std::size_t k = 0; k < points[i].path.size(); ++k) {
      if (k) label += ",";
      label += std::to_string(points[i].path[k]);
    }
    labels.push_back(label + ")");
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto& a = points[i].path;
      const auto& b = points[j].path;
      std::size_t l = 0;
      while (l < a.size() && l < b.size() && a[l] == b[l]) ++l;
      d[i][j] = d[j][i] = points[i].nodes[l]->diam;
    }
  }
  return validate_ultrametric(d, std::move(labels));
}

}  // namespace ultra
