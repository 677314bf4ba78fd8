#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ultra/generators.hpp"
#include "ultra/path.hpp"
#include "ultra/space.hpp"

namespace ultra {

// Level weights, strictly decreasing and positive; may be empty (the
// one-point monoid).
using Levels = std::shared_ptr<const std::vector<Rational>>;

Levels make_levels(std::vector<Rational> weights);

// Finitely supported map from levels to naturals.
struct WeightedWord {
  Levels levels;
  std::vector<std::uint64_t> coords;

  std::string label() const;  // "(c0,c1,...)"
  friend bool operator==(const WeightedWord& a, const WeightedWord& b) {
    return *a.levels == *b.levels && a.coords == b.coords;
  }
};

WeightedWord zero_word(const Levels& levels);
WeightedWord make_word(const Levels& levels, std::vector<std::uint64_t> coords);
WeightedWord add_words(const WeightedWord& f, const WeightedWord& g);
// Weight of the least level where f and g differ; 0 when equal.
Rational word_distance(const WeightedWord& f, const WeightedWord& g);

// Levels = Spec \ {0} decreasing; the coordinate at level r is the position
// of the point's open r-ball inside its closed r-ball, balls ordered by least
// member. Point 0 maps to the zero word.
struct OmegaEmbedding {
  Levels levels;
  std::vector<WeightedWord> words;  // by point
};
OmegaEmbedding embed_into_omega(const FiniteUltraSpace& space);

// Sums of at most k members of X, zero included; sorted by coordinates.
std::vector<WeightedWord> star_closure(const Levels& levels, const std::vector<WeightedWord>& x,
                                       std::size_t k);

// Pairwise longest common prefixes (e ∧ e, i.e. e itself, included), sorted.
using WordPrefix = std::vector<std::uint64_t>;
std::vector<WordPrefix> meet_tree(const std::vector<WeightedWord>& x);
// Longest chain of proper prefixes inside the set, counted in elements.
std::size_t max_prefix_chain(const std::vector<WordPrefix>& tree);

// Finite window of ω^[λ]: words with coordinates below min(a_μ, width),
// points in lexicographic order (the order of omega_space). Sums leaving the
// window are undefined rather than clamped.
class WordWindow {
 public:
  static std::shared_ptr<const WordWindow> make(const LevelSpec& spec, std::size_t width);

  const LevelSpec& spec() const noexcept { return spec_; }
  std::size_t width() const noexcept { return width_; }
  const Levels& levels() const noexcept { return levels_; }
  const FiniteUltraSpace& space() const { return host_->space(); }
  const HostPtr& host() const noexcept { return host_; }
  std::size_t size() const noexcept { return words_.size(); }
  const WeightedWord& word(PointId p) const { return words_[p]; }
  std::optional<PointId> index_of(const WeightedWord& w) const;
  std::optional<PointId> add(PointId a, PointId b) const;
  PointId zero() const noexcept { return 0; }

  // Sum of nerve balls: the closed ball of radius max(δ, δ') around the sum
  // of their least members, which is the window part of the untruncated
  // ball sum. nullopt when that ball leaves the window.
  std::optional<std::size_t> ball_sum(std::size_t b1, std::size_t b2) const;

 private:
  WordWindow() = default;
  LevelSpec spec_;
  std::size_t width_ = 0;
  Levels levels_;
  HostPtr host_;
  std::vector<WeightedWord> words_;
  std::vector<std::uint64_t> bounds_;
  std::vector<std::int64_t> ball_sums_;  // nerve × nerve, -1 when undefined
};
using WindowPtr = std::shared_ptr<const WordWindow>;

// Least common nerve ball if its diameter is below α, else nullopt (⊥).
std::optional<std::size_t> ball_meet(const NerveTree& tree, std::size_t b1, std::size_t b2,
                                     const ExtRational& alpha);

// Merge of two slim sets sharing their least diameter: for each a in the
// union of their spectra, the sum of the members selected at a. nullopt when
// a ball sum leaves the window.
std::optional<AlphaPath> slim_sum(const WordWindow& window, const std::vector<std::size_t>& gens1,
                                  const std::vector<std::size_t>& gens2,
                                  const ExtRational& alpha);
// Same on the pure generators. Both paths must lie in the same L_{α,β}.
std::optional<AlphaPath> path_sum(const WordWindow& window, const AlphaPath& p,
                                  const AlphaPath& q);

// --- law suites --------------------------------------------------------------

struct LawResult {
  LawResult() = default;
  explicit LawResult(std::string name) : law(std::move(name)) {}

  std::string law;
  std::uint64_t checked = 0;
  std::uint64_t skipped = 0;  // tuples with a sum outside the window
  std::optional<std::vector<std::string>> counterexample;
  bool ok() const { return !counterexample.has_value(); }
};

struct LawReport {
  std::vector<LawResult> laws;
  bool ok() const;
};

// Word level: compatibility of + with d_w, the non-expansive inequality,
// associativity and commutativity, all over in-window tuples.
LawReport check_word_laws(const WordWindow& window);
// Ball level: diameter of sums, distributivity over ∧_α, monotonicity.
LawReport check_ball_laws(const WordWindow& window, const ExtRational& alpha);
// Path level on Path_α of the window: associativity, commutativity, neutral
// φ(0), φ(x+y) = φ(x)+φ(y), compatibility of +_α with d_α.
LawReport check_path_laws(const WordWindow& window, const ExtRational& alpha);

}  // namespace ultra
