#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ultra/rational.hpp"

namespace ultra {

using PointId = std::size_t;
using RationalMatrix = std::vector<std::vector<Rational>>;

// A finite ultrametric space with exact distances. Instances only come out of
// validate_ultrametric, so every FiniteUltraSpace satisfies the strong
// triangle inequality.
class FiniteUltraSpace {
 public:
  std::size_t size() const noexcept { return n_; }
  const Rational& dist(PointId i, PointId j) const { return dist_[i * n_ + j]; }
  const std::string& label(PointId i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  RationalMatrix matrix() const;

  friend bool operator==(const FiniteUltraSpace&, const FiniteUltraSpace&) = default;

 private:
  friend FiniteUltraSpace validate_ultrametric(const RationalMatrix&, std::vector<std::string>);
  friend FiniteUltraSpace restrict_space(const FiniteUltraSpace&, std::span<const PointId>);

  FiniteUltraSpace() = default;

  std::size_t n_ = 0;
  std::vector<Rational> dist_;
  std::vector<std::string> labels_;
};

// Labels default to the decimal point indices when empty.
FiniteUltraSpace validate_ultrametric(const RationalMatrix& dist,
                                      std::vector<std::string> labels = {});

// Induced subspace on `points`, in the given order.
FiniteUltraSpace restrict_space(const FiniteUltraSpace& space, std::span<const PointId> points);

// Sorted set of distances; always contains 0.
struct SpectrumSet {
  std::vector<Rational> values;

  bool contains(const Rational& r) const;
  bool subset_of(const SpectrumSet& other) const;
  friend bool operator==(const SpectrumSet&, const SpectrumSet&) = default;
};

SpectrumSet make_spectrum(std::vector<Rational> values);

SpectrumSet spectrum(const FiniteUltraSpace& space);
SpectrumSet spectrum(const FiniteUltraSpace& space, PointId at);
std::vector<SpectrumSet> multispectrum(const FiniteUltraSpace& space);

// A closed ball of the nerve. Identity is the point set; the diameter is
// carried along.
struct Ball {
  std::vector<PointId> points;  // sorted
  Rational diameter;

  PointId center() const { return points.front(); }
  bool contains(PointId p) const;
  bool includes(const Ball& other) const;  // this ⊇ other
  friend bool operator==(const Ball& a, const Ball& b) { return a.points == b.points; }
};

Ball closed_ball(const FiniteUltraSpace& space, PointId center, const Rational& radius);
std::vector<PointId> open_ball(const FiniteUltraSpace& space, PointId center,
                               const Rational& radius);
Ball least_ball_containing(const FiniteUltraSpace& space, std::span<const PointId> points);
bool is_nerve_ball(const FiniteUltraSpace& space, const Ball& ball);

// Nerve ordered by decreasing diameter, then least point index.
std::vector<Ball> nerve(const FiniteUltraSpace& space);

// Partition of a nontrivial nerve ball into open balls of radius δ(ball),
// ordered by least member.
std::vector<Ball> sons(const FiniteUltraSpace& space, const Ball& ball);

// The nerve with its tree structure (reverse inclusion) precomputed. Ball
// indices follow nerve() order, so index 0 is the whole space.
class NerveTree {
 public:
  explicit NerveTree(const FiniteUltraSpace& space);

  std::size_t size() const noexcept { return balls_.size(); }
  const Ball& ball(std::size_t i) const { return balls_[i]; }
  const std::vector<Ball>& balls() const noexcept { return balls_; }
  const Rational& diameter(std::size_t i) const { return balls_[i].diameter; }
  std::optional<std::size_t> parent(std::size_t i) const;
  const std::vector<std::size_t>& children(std::size_t i) const { return children_[i]; }
  std::size_t depth(std::size_t i) const { return depth_[i]; }
  std::size_t root() const noexcept { return 0; }

  bool contains(std::size_t outer, std::size_t inner) const;
  bool comparable(std::size_t a, std::size_t b) const {
    return contains(a, b) || contains(b, a);
  }
  // Least ball containing both.
  std::size_t join(std::size_t a, std::size_t b) const;
  std::size_t singleton(PointId p) const { return leaf_of_[p]; }
  // Ancestor of ball i (or i itself) with the given diameter, if any.
  std::optional<std::size_t> ancestor_with_diameter(std::size_t i, const Rational& d) const;
  std::optional<std::size_t> index_of(const Ball& ball) const;
  // Longest strictly increasing chain of balls (counted in balls).
  std::size_t height() const;

 private:
  std::vector<Ball> balls_;
  std::vector<std::size_t> parent_;  // root maps to itself
  std::vector<std::vector<std::size_t>> children_;
  std::vector<std::size_t> depth_;
  std::vector<std::size_t> enter_, exit_;
  std::vector<std::size_t> leaf_of_;
};

// A finite metric space that need not be ultrametric (input to d*).
class FiniteMetricSpace {
 public:
  std::size_t size() const noexcept { return n_; }
  const Rational& dist(PointId i, PointId j) const { return dist_[i * n_ + j]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  RationalMatrix matrix() const;

 private:
  friend FiniteMetricSpace validate_metric(const RationalMatrix&, std::vector<std::string>);
  FiniteMetricSpace() = default;

  std::size_t n_ = 0;
  std::vector<Rational> dist_;
  std::vector<std::string> labels_;
};

FiniteMetricSpace validate_metric(const RationalMatrix& dist,
                                  std::vector<std::string> labels = {});

}  // namespace ultra
