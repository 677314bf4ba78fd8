#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ultra/rational.hpp"
#include "ultra/space.hpp"

namespace ultra {

// Finite ultrametric tree: values strictly decrease from parent to child,
// leaves carry value 0 and internal nodes have at least two children.
// Leaves, in node-index order, are the points of the associated space.
class ValuedTree {
 public:
  struct Node {
    std::optional<std::size_t> parent;
    Rational value;
    std::string label;  // meaningful on leaves
    std::vector<std::size_t> children;
  };

  // Builds and checks the invariants. Exactly one node has no parent.
  static ValuedTree make(std::vector<std::optional<std::size_t>> parents,
                         std::vector<Rational> values, std::vector<std::string> labels = {});

  const std::vector<Node>& nodes() const noexcept { return nodes_; }
  std::size_t root() const noexcept { return root_; }
  std::vector<std::size_t> leaves() const;
  std::string to_dot() const;

 private:
  std::vector<Node> nodes_;
  std::size_t root_ = 0;
};

ValuedTree space_to_tree(const FiniteUltraSpace& space);
FiniteUltraSpace tree_to_space(const ValuedTree& tree);

// Number of sons of a scheme descriptor; nullopt stands for unboundedly many.
struct Degree {
  std::optional<std::uint64_t> count;

  static Degree unbounded() { return Degree{}; }
  static Degree finite(std::uint64_t k) { return Degree{k}; }
  bool is_unbounded() const noexcept { return !count.has_value(); }
  friend bool operator==(const Degree&, const Degree&) = default;
};

// Ball descriptor of a countable space. An internal descriptor (diam > 0)
// has `degree` sons; son i has the type children[i mod children.size()], or
// is a single point when `children` is empty. Leaves have diam 0.
struct SchemeNode {
  Rational diam;
  Degree degree = Degree::finite(1);
  std::vector<SchemeNode> children;

  bool is_leaf() const noexcept { return diam == 0; }
  friend bool operator==(const SchemeNode&, const SchemeNode&) = default;
};

class TreeScheme {
 public:
  // Checks: leaves have diam 0 and no children; internal degrees are >= 2
  // and cover the listed child types; diameters strictly decrease downward.
  static TreeScheme make(SchemeNode root);

  const SchemeNode& root() const noexcept { return root_; }
  friend bool operator==(const TreeScheme&, const TreeScheme&) = default;

 private:
  SchemeNode root_;
};

// Son types of an internal descriptor, with the implicit point son made
// explicit.
const std::vector<SchemeNode>& son_types(const SchemeNode& node);

// Number of sons once unbounded degrees are replaced by the width (raised to
// the number of listed child types so every type occurs).
std::uint64_t materialized_degree(const SchemeNode& node, std::size_t width);

// Expands the scheme into a finite space. Points are the son-index paths,
// ordered lexicographically and labelled "(i0,i1,...)"; a larger width
// yields a space into which the smaller one embeds by coordinate inclusion.
FiniteUltraSpace scheme_materialize(const TreeScheme& scheme, std::size_t width);

}  // namespace ultra
