#include "ultra/tree.hpp"

#include <algorithm>
#include <sstream>

#include "ultra/error.hpp"

namespace ultra {

ValuedTree ValuedTree::make(std::vector<std::optional<std::size_t>> parents,
                            std::vector<Rational> values, std::vector<std::string> labels) {
  const std::size_t m = parents.size();
  if (m == 0) throw ValidationError("empty tree", {});
  if (values.size() != m) throw ValidationError("value count does not match node count", {});
  if (!labels.empty() && labels.size() != m) {
    throw ValidationError("label count does not match node count", {});
  }
  ValuedTree t;
  t.nodes_.resize(m);
  std::optional<std::size_t> root;
  for (std::size_t i = 0; i < m; ++i) {
    t.nodes_[i].parent = parents[i];
    t.nodes_[i].value = values[i];
    if (!labels.empty()) t.nodes_[i].label = labels[i];
    if (values[i] < 0) throw ValidationError("negative node value", {i});
    if (!parents[i]) {
      if (root) throw ValidationError("tree has more than one root", {*root, i});
      root = i;
    } else if (*parents[i] >= m || *parents[i] == i) {
      throw ValidationError("bad parent link", {i});
    }
  }
  if (!root) throw ValidationError("tree has no root", {});
  t.root_ = *root;
  for (std::size_t i = 0; i < m; ++i)
    if (parents[i]) t.nodes_[*parents[i]].children.push_back(i);

  // Every node must reach the root; values decrease strictly along edges.
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t v = i, steps = 0;
    while (t.nodes_[v].parent) {
      auto p = *t.nodes_[v].parent;
      if (!(t.nodes_[p].value > t.nodes_[v].value)) {
        throw ValidationError("value does not strictly decrease from node " + std::to_string(p) +
                                  " to node " + std::to_string(v),
                              {p, v});
      }
      v = p;
      if (++steps > m) throw ValidationError("parent links contain a cycle", {i});
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    const auto& nd = t.nodes_[i];
    if (nd.children.empty() && nd.value != 0) {
      throw ValidationError("leaf " + std::to_string(i) + " has nonzero value", {i});
    }
    if (nd.children.size() == 1) {
      throw ValidationError("internal node " + std::to_string(i) + " has a single child", {i});
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (t.nodes_[i].label.empty() && t.nodes_[i].children.empty())
      t.nodes_[i].label = std::to_string(i);
  }
  return t;
}

std::vector<std::size_t> ValuedTree::leaves() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    if (nodes_[i].children.empty()) out.push_back(i);
  return out;
}

std::string ValuedTree::to_dot() const {
  std::ostringstream os;
  os << "digraph valued_tree {\n";
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    os << "  n" << i << " [label=\"δ=" << format_rational(nodes_[i].value);
    if (nodes_[i].children.empty()) os << "\\n" << nodes_[i].label;
    os << "\"];\n";
  }
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    for (auto c : nodes_[i].children) os << "  n" << i << " -> n" << c << ";\n";
  os << "}\n";
  return os.str();
}

ValuedTree space_to_tree(const FiniteUltraSpace& space) {
  NerveTree nt(space);
  std::vector<std::optional<std::size_t>> parents(nt.size());
  std::vector<Rational> values(nt.size());
  std::vector<std::string> labels(nt.size());
  for (std::size_t i = 0; i < nt.size(); ++i) {
    parents[i] = nt.parent(i);
    values[i] = nt.diameter(i);
    const auto& b = nt.ball(i);
    if (b.points.size() == 1) labels[i] = space.label(b.center());
  }
  // Singletons all have diameter 0 and come last in nerve order, sorted by
  // point index, so leaf order is point order.
  return ValuedTree::make(std::move(parents), std::move(values), std::move(labels));
}

FiniteUltraSpace tree_to_space(const ValuedTree& tree) {
  const auto& nodes = tree.nodes();
  auto leaves = tree.leaves();
  std::vector<std::size_t> depth(nodes.size(), 0);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    std::size_t v = i;
    while (nodes[v].parent) {
      v = *nodes[v].parent;
      ++depth[i];
    }
  }
  auto meet = [&](std::size_t a, std::size_t b) {
    while (depth[a] > depth[b]) a = *nodes[a].parent;
    while (depth[b] > depth[a]) b = *nodes[b].parent;
    while (a != b) {
      a = *nodes[a].parent;
      b = *nodes[b].parent;
    }
    return a;
  };
  const std::size_t n = leaves.size();
  RationalMatrix d(n, std::vector<Rational>(n, Rational(0)));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(nodes[leaves[i]].label);
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) d[i][j] = nodes[meet(leaves[i], leaves[j])].value;
  }
  return validate_ultrametric(d, std::move(labels));
}

}  // namespace ultra
