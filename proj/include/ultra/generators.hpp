#pragma once

#include <cstddef>
#include <vector>

#include "ultra/rational.hpp"
#include "ultra/space.hpp"
#include "ultra/tree.hpp"

namespace ultra {

// Levels w(μ_0) > ... > w(μ_{k-1}) > 0 with a per-level bound on the
// coordinate values.
struct LevelSpec {
  std::vector<Rational> levels;
  std::vector<Degree> degrees;

  // Checks nonempty, strictly decreasing, positive; finite degrees >= 2.
  static LevelSpec make(std::vector<Rational> levels, std::vector<Degree> degrees);
  static LevelSpec unbounded(std::vector<Rational> levels);
  std::size_t size() const noexcept { return levels.size(); }
  friend bool operator==(const LevelSpec&, const LevelSpec&) = default;
};

// One descriptor per level, each with a single child type.
TreeScheme uniform_scheme(const LevelSpec& spec);

// Points are the elements of V, d(u, v) = max(u, v).
FiniteUltraSpace max_space(const SpectrumSet& v);

// Words with coordinate at level μ below min(a_μ, width); the distance is the
// weight of the least differing level. Labels are the words "(c0,c1,...)".
FiniteUltraSpace omega_space(const LevelSpec& spec, std::size_t width);

// Width truncation of the homogeneous space with spectrum V.
FiniteUltraSpace ultv_approx(const SpectrumSet& v, std::size_t width);

// Subsets F of V \ {max V} containing 0, by size then lexicographically.
std::vector<SpectrumSet> prop2_families(const SpectrumSet& v, std::size_t family_cap);

// Disjoint union of ultv_approx(F, width) over prop2_families, blocks at
// distance max V from each other. Labels are "F<block>:<word>".
FiniteUltraSpace prop2_space(const SpectrumSet& v, std::size_t width, std::size_t family_cap);

}  // namespace ultra
