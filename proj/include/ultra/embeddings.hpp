#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "ultra/space.hpp"

namespace ultra {

// Finite injective distance-preserving map between two spaces, kept sorted
// by source point.
class PartialMap {
 public:
  using Pair = std::pair<PointId, PointId>;

  PartialMap() = default;
  // Checks ranges, injectivity and distance preservation.
  static PartialMap make(const FiniteUltraSpace& source, const FiniteUltraSpace& target,
                         std::vector<Pair> pairs);

  const std::vector<Pair>& pairs() const noexcept { return pairs_; }
  std::size_t size() const noexcept { return pairs_.size(); }
  bool empty() const noexcept { return pairs_.empty(); }
  std::optional<PointId> image(PointId x) const;
  bool defined_at(PointId x) const { return image(x).has_value(); }
  friend bool operator==(const PartialMap&, const PartialMap&) = default;

 private:
  std::vector<Pair> pairs_;
};

struct EmbeddingSearch {
  // Target points that may be used; empty means all.
  std::vector<bool> allowed;
  // Pairs the embedding must contain.
  std::vector<PartialMap::Pair> fixed;
};

// Least total embedding in the order: source points by index, candidates by
// index, backtracking.
std::optional<PartialMap> find_isometric_embedding(const FiniteUltraSpace& source,
                                                   const FiniteUltraSpace& target,
                                                   const EmbeddingSearch& search = {});

bool embeds(const FiniteUltraSpace& source, const FiniteUltraSpace& target);

struct SpecFailure {
  PointId point;
  Rational missing;
  friend bool operator==(const SpecFailure&, const SpecFailure&) = default;
};

// nullopt when Spec(source, x) ⊆ Spec(target, f(x)) for every x in Dom(f).
std::optional<SpecFailure> local_spec_failure(const PartialMap& f, const FiniteUltraSpace& source,
                                              const FiniteUltraSpace& target);
inline bool is_local_spec_embedding(const PartialMap& f, const FiniteUltraSpace& source,
                                    const FiniteUltraSpace& target) {
  return !local_spec_failure(f, source, target).has_value();
}

// M(x) = {y : Spec(x) ⊆ Spec(y)}, ascending.
std::vector<PointId> spec_dominators(const FiniteUltraSpace& space, PointId x);

// One step of the nearest-point extension: x goes to the least candidate at
// distance r = d(x, Dom f) from f(y0) with a dominating spectrum, outside the
// open r-balls around the images of the nearest domain points.
std::optional<PartialMap> extend_one_point(const PartialMap& f, PointId x,
                                           const FiniteUltraSpace& space);

// Greedy point-by-point extension in index order. On failure returns the
// first point that could not be placed.
struct GreedyOutcome {
  std::optional<PartialMap> total;
  std::optional<PointId> stuck_at;
};
GreedyOutcome extend_greedily(const PartialMap& f, const FiniteUltraSpace& space);

// --- report on a finite space ---------------------------------------------

struct SingletonExtensionFailure {
  PartialMap f;   // {y ↦ y'}
  PointId target;  // first point the nearest-point extension cannot place
};

struct OneStepFailure {
  PointId y, image, x;
};

struct UpDirectedFailure {
  std::size_t ball;  // nerve index
  PointId a, b;
};

struct SonEmbeddingCount {
  std::size_t ball;  // nerve index
  std::size_t son;   // position among sons(ball)
  std::size_t count; // sons of `ball` the son embeds into (itself included)
  std::size_t sons;  // number of sons of `ball`
};

struct MultiplicityCount {
  PointId y, x;
  // Largest set in M(x) ∩ S(y, d(x,y)) with pairwise distance d(x,y).
  std::size_t count;
};

struct ExtensionReport {
  // Every singleton spec-embedding extends to a total self-embedding.
  bool singleton_extension = true;
  std::optional<SingletonExtensionFailure> singleton_failure;
  // Every singleton spec-embedding extends to each further point.
  bool one_step_extension = true;
  std::optional<OneStepFailure> one_step_failure;
  // Ball-relative multispectra are up-directed.
  bool up_directed = true;
  std::optional<UpDirectedFailure> up_directed_failure;
  std::vector<SonEmbeddingCount> son_embeddings;
  // Minimum over pairs x ≠ y; absent for a singleton space.
  std::optional<MultiplicityCount> least_multiplicity;
};

ExtensionReport check_extension_properties(const FiniteUltraSpace& space);

// Multiplicity reaches `k` for every pair. In a truncation of width w the
// count is at most w - 1: the candidates lie in distinct sons of the ball
// around g(y), excluding the son of g(y) itself.
bool multiplicity_at_least(const ExtensionReport& report, std::size_t k);

// For y, y', x with Spec(y) ⊆ Spec(y'), some x' ∈ B'(y', d(x,y)) has
// Spec(x) ⊆ Spec(x'). Returns the least failing (y, y', x).
std::optional<OneStepFailure> dominated_ball_failure(const FiniteUltraSpace& space);

// Every nerve ball B embeds into B ∩ M(a) for each a ∈ B. Returns the least
// failing (ball, a).
std::optional<std::pair<std::size_t, PointId>> ball_into_dominators_failure(
    const FiniteUltraSpace& space);

// Self-isometries act transitively.
bool is_point_homogeneous(const FiniteUltraSpace& space);

}  // namespace ultra
