#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ultra/rational.hpp"
#include "ultra/space.hpp"

namespace ultra {

// A space together with its nerve tree. Paths refer to balls by nerve index.
class PathHost {
 public:
  static std::shared_ptr<const PathHost> make(FiniteUltraSpace space);

  const FiniteUltraSpace& space() const noexcept { return space_; }
  const NerveTree& nerve() const noexcept { return nerve_; }
  std::string ball_label(std::size_t ball) const;

 private:
  explicit PathHost(FiniteUltraSpace space) : space_(std::move(space)), nerve_(space_) {}
  FiniteUltraSpace space_;
  NerveTree nerve_;
};

using HostPtr = std::shared_ptr<const PathHost>;

// An α-path, stored as its pure generating sequence: nerve balls with
// strictly decreasing diameters, consecutive ones incomparable, the first
// below α.
class AlphaPath {
 public:
  const HostPtr& host() const noexcept { return host_; }
  const ExtRational& alpha() const noexcept { return alpha_; }
  const std::vector<std::size_t>& pure() const noexcept { return pure_; }
  std::size_t length() const noexcept { return pure_.size(); }
  std::size_t init() const { return pure_.front(); }
  std::size_t end() const { return pure_.back(); }
  const Rational& delta() const;  // diameter of the last ball
  const Rational& mu() const;     // diameter of the first ball
  const Rational& beta(std::size_t i) const;  // diameter of the i-th ball

  // The represented set of balls, ascending nerve index.
  std::vector<std::size_t> balls() const;
  SpectrumSet spec() const;
  std::string label() const;

  friend bool operator==(const AlphaPath& a, const AlphaPath& b) {
    return a.host_ == b.host_ && a.alpha_ == b.alpha_ && a.pure_ == b.pure_;
  }
  friend bool operator<(const AlphaPath& a, const AlphaPath& b) { return a.pure_ < b.pure_; }

 private:
  friend AlphaPath path_from_slim(const HostPtr&, std::vector<std::size_t>, const ExtRational&);
  AlphaPath(HostPtr host, ExtRational alpha, std::vector<std::size_t> pure)
      : host_(std::move(host)), alpha_(alpha), pure_(std::move(pure)) {}

  HostPtr host_;
  ExtRational alpha_;
  std::vector<std::size_t> pure_;
};

struct BottomPath {
  ExtRational alpha;
  friend bool operator==(const BottomPath&, const BottomPath&) = default;
};

using PathOrBottom = std::variant<AlphaPath, BottomPath>;

// Reduces a slim set of nerve balls below α to its pure sequence.
AlphaPath path_from_slim(const HostPtr& host, std::vector<std::size_t> gens,
                         const ExtRational& alpha);
AlphaPath path_from_balls(const HostPtr& host, const std::vector<Ball>& gens,
                          const ExtRational& alpha);

// Balls ⋃ ]_{β_{i-1}} ← B_i] for a slim set, without reduction.
std::vector<std::size_t> represented_set(const HostPtr& host, std::vector<std::size_t> gens,
                                         const ExtRational& alpha);

// Three-condition test: does `gens` generate `path`?
bool generates(const std::vector<std::size_t>& gens, const AlphaPath& path);

AlphaPath phi(const HostPtr& host, PointId x, const ExtRational& alpha);

bool path_leq(const AlphaPath& p, const AlphaPath& q);
PathOrBottom path_infimum(const PathOrBottom& p, const PathOrBottom& q);
ExtRational path_delta(const PathOrBottom& p);
ExtRational path_distance(const PathOrBottom& p, const PathOrBottom& q);

// All (α, β)-paths, lexicographic on pure sequences.
std::vector<AlphaPath> enumerate_paths(const HostPtr& host, const ExtRational& alpha,
                                       const Rational& beta);

// p minus the balls below β (an α-path); β must be a diameter of p.
AlphaPath truncate_above(const AlphaPath& p, const Rational& beta);
// The balls of p below β, as a β-path; nullopt when there are none.
std::optional<AlphaPath> truncate_below(const AlphaPath& p, const Rational& beta);
// I ∪ J for a δ(I)-path J.
AlphaPath concat(const AlphaPath& i, const AlphaPath& j);

// Distance matrix of a list of paths as a validated space; labels are the
// path labels.
FiniteUltraSpace path_space(const std::vector<AlphaPath>& paths);

// The ball I ∗ L_{r,0} of Path(M) containing p, with I the part of p at or
// above r. Members are in enumeration order.
struct PathBall {
  AlphaPath top;  // I
  Rational r;
  std::vector<AlphaPath> members;
};
PathBall path_ball(const AlphaPath& p, const Rational& r);

// Images of b1's members under J ↦ I' ∪ (J ∖ I).
std::vector<AlphaPath> path_ball_isometry(const PathBall& b1, const PathBall& b2);

}  // namespace ultra
