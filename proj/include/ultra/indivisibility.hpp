#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ultra/tree.hpp"

namespace ultra {

// A descriptor is named by the child-type indices leading to it from the
// root; a point type is a path ending at a leaf descriptor (the implicit
// point son of a childless descriptor has index 0).
using DescriptorPath = std::vector<std::size_t>;

struct SchemeUpDirectedFailure {
  DescriptorPath descriptor;
  DescriptorPath a, b;  // point types below it with no common upper bound
};

struct SchemeExtensionFailure {
  DescriptorPath y, y_image;   // point types with Spec(y) ⊆ Spec(y_image)
  DescriptorPath descriptor;   // ancestor of y whose son type cannot be placed
  std::size_t son_type;
};

struct SchemeDominationFailure {
  DescriptorPath y, y_image, x;
};

struct SchemeBallFailure {
  DescriptorPath descriptor;
  DescriptorPath a;
};

// Conditions on the countable space described by a scheme. Sons are counted
// without multiplicity in the extension condition and in the two
// alternative conditions; degrees only enter through the sons condition.
struct IndivisibilityReport {
  bool well_founded = true;  // a scheme has finite depth
  bool infinitely_many_sons = true;
  std::optional<DescriptorPath> finite_degree_at;
  bool up_directed = true;  // spectra below each ball
  std::optional<SchemeUpDirectedFailure> up_directed_failure;
  bool singleton_extension = true;
  std::optional<SchemeExtensionFailure> singleton_extension_failure;
  // Alternative pair of conditions, equivalent to extension plus
  // up-directedness when every internal degree is unbounded.
  bool dominated_ball = true;
  std::optional<SchemeDominationFailure> dominated_ball_failure;
  bool ball_into_dominators = true;
  std::optional<SchemeBallFailure> ball_into_dominators_failure;

  bool satisfied() const {
    return well_founded && infinitely_many_sons && up_directed && singleton_extension;
  }
};

IndivisibilityReport check_theorem6(const TreeScheme& scheme);

// Number of descriptors on the longest root-to-leaf path.
std::size_t scheme_depth(const TreeScheme& scheme);

}  // namespace ultra
