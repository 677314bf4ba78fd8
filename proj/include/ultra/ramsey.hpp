#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "ultra/space.hpp"
#include "ultra/tree.hpp"

namespace ultra {

// Largest ultrametric below d: the least possible largest step over chains.
FiniteUltraSpace subdominant_dstar(const FiniteMetricSpace& space);

struct Coloring {
  std::size_t k = 2;
  std::vector<std::size_t> parts;  // color per point
};

enum class Verdict { Indivisible, Divisible, Undetermined };
const char* verdict_name(Verdict v);

struct DivisibilityOptions {
  // Exhaustive mode refuses inputs with k^n above this bound.
  std::uint64_t guard = std::uint64_t{1} << 20;
  // Past the guard, scan the first `budget` colorings instead; a scan that
  // finds no witness ends Undetermined.
  bool heuristic = false;
  std::uint64_t budget = std::uint64_t{1} << 16;
};

struct DivisibilityResult {
  Verdict verdict = Verdict::Undetermined;
  std::optional<Coloring> witness;  // a coloring with no monochromatic copy
  std::uint64_t colorings_checked = 0;
};

// Colorings are scanned with point 0 fixed to color 0, lexicographically
// (last point fastest).
DivisibilityResult check_divisible(const FiniteUltraSpace& space,
                                   const FiniteUltraSpace& pattern, std::size_t k,
                                   const DivisibilityOptions& options = {});

// Whether some color class of `coloring` holds an isometric copy of pattern.
bool has_monochromatic_copy(const FiniteUltraSpace& space, const FiniteUltraSpace& pattern,
                            const Coloring& coloring);

struct WellFoundednessReport {
  Rational diameter;
  bool diameter_attained = true;
  bool well_founded = true;  // (Nerv, ⊇)
  bool no_increasing_ball_sequence = true;
  std::size_t max_ball_chain = 0;
  bool satisfied() const {
    return diameter_attained && well_founded && no_increasing_ball_sequence;
  }
};

WellFoundednessReport check_theorem4(const FiniteUltraSpace& space);
WellFoundednessReport check_theorem4(const TreeScheme& scheme);

}  // namespace ultra
