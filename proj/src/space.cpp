#include "ultra/space.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "ultra/error.hpp"
#include "minimax.hpp"

namespace ultra {

namespace {

std::vector<std::string> default_labels(std::size_t n, std::vector<std::string> labels) {
  if (labels.empty()) {
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  }
  if (labels.size() != n) {
    throw ValidationError("label count " + std::to_string(labels.size()) +
                              " does not match point count " + std::to_string(n),
                          {});
  }
  return labels;
}

// Shape, diagonal, symmetry and positivity. Returns the flattened matrix.
std::vector<Rational> check_basic(const RationalMatrix& dist) {
  const std::size_t n = dist.size();
  if (n == 0) throw ValidationError("empty space", {});
  std::vector<Rational> flat;
  flat.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (dist[i].size() != n) {
      throw ValidationError("row " + std::to_string(i) + " has " +
                                std::to_string(dist[i].size()) + " entries, expected " +
                                std::to_string(n),
                            {i});
    }
    flat.insert(flat.end(), dist[i].begin(), dist[i].end());
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (flat[i * n + i] != 0) {
      throw ValidationError("nonzero diagonal at " + std::to_string(i), {i, i});
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (flat[i * n + j] < 0) {
        throw ValidationError("negative distance at (" + std::to_string(i) + "," +
                                  std::to_string(j) + ")",
                              {i, j});
      }
      if (flat[i * n + j] != flat[j * n + i]) {
        throw ValidationError("asymmetric distance at (" + std::to_string(i) + "," +
                                  std::to_string(j) + ")",
                              {i, j});
      }
      if (i != j && flat[i * n + j] == 0) {
        throw ValidationError("zero distance between distinct points " + std::to_string(i) +
                                  " and " + std::to_string(j),
                              {i, j});
      }
    }
  }
  return flat;
}

std::string triple_text(std::size_t i, std::size_t j, std::size_t k) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
}

}  // namespace

FiniteUltraSpace validate_ultrametric(const RationalMatrix& dist, std::vector<std::string> labels) {
  auto flat = check_basic(dist);
  const std::size_t n = dist.size();
  // d is ultrametric iff it equals its minimax closure; the cubic scan only
  // runs to name the least failing triple.
  const bool ultra = detail::minimax_closure(n, flat) == flat;
  for (std::size_t i = 0; i < n && !ultra; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        if (flat[i * n + k] > std::max(flat[i * n + j], flat[j * n + k])) {
          throw ValidationError("strong triangle inequality fails on " + triple_text(i, j, k),
                                {i, j, k});
        }
      }
    }
  }
  FiniteUltraSpace space;
  space.n_ = n;
  space.dist_ = std::move(flat);
  space.labels_ = default_labels(n, std::move(labels));
  return space;
}

FiniteUltraSpace restrict_space(const FiniteUltraSpace& space, std::span<const PointId> points) {
  if (points.empty()) throw Error("cannot restrict to an empty point set");
  FiniteUltraSpace sub;
  sub.n_ = points.size();
  sub.dist_.reserve(sub.n_ * sub.n_);
  for (auto p : points) {
    if (p >= space.size()) throw Error("point index out of range");
    sub.labels_.push_back(space.label(p));
    for (auto q : points) sub.dist_.push_back(space.dist(p, q));
  }
  return sub;
}

RationalMatrix FiniteUltraSpace::matrix() const {
  RationalMatrix m(n_, std::vector<Rational>(n_));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) m[i][j] = dist(i, j);
  return m;
}

// --- spectra ---------------------------------------------------------------

bool SpectrumSet::contains(const Rational& r) const {
  return std::binary_search(values.begin(), values.end(), r);
}

bool SpectrumSet::subset_of(const SpectrumSet& other) const {
  return std::includes(other.values.begin(), other.values.end(), values.begin(), values.end());
}

SpectrumSet make_spectrum(std::vector<Rational> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  if (values.empty() || values.front() != 0) {
    throw Error("a spectrum must contain 0");
  }
  return SpectrumSet{std::move(values)};
}

SpectrumSet spectrum(const FiniteUltraSpace& space, PointId at) {
  if (at >= space.size()) {
    throw Error("point index " + std::to_string(at) + " out of range");
  }
  std::vector<Rational> v;
  v.reserve(space.size());
  for (PointId x = 0; x < space.size(); ++x) v.push_back(space.dist(at, x));
  return make_spectrum(std::move(v));
}

SpectrumSet spectrum(const FiniteUltraSpace& space) {
  std::vector<Rational> v;
  for (PointId a = 0; a < space.size(); ++a)
    for (PointId x = a; x < space.size(); ++x) v.push_back(space.dist(a, x));
  return make_spectrum(std::move(v));
}

std::vector<SpectrumSet> multispectrum(const FiniteUltraSpace& space) {
  std::vector<SpectrumSet> out;
  out.reserve(space.size());
  for (PointId a = 0; a < space.size(); ++a) out.push_back(spectrum(space, a));
  return out;
}

// --- balls -----------------------------------------------------------------

bool Ball::contains(PointId p) const {
  return std::binary_search(points.begin(), points.end(), p);
}

bool Ball::includes(const Ball& other) const {
  return std::includes(points.begin(), points.end(), other.points.begin(), other.points.end());
}

Ball closed_ball(const FiniteUltraSpace& space, PointId center, const Rational& radius) {
  Ball b;
  b.diameter = 0;
  for (PointId x = 0; x < space.size(); ++x) {
    const auto& d = space.dist(center, x);
    if (d <= radius) {
      b.points.push_back(x);
      b.diameter = std::max(b.diameter, d);
    }
  }
  return b;
}

std::vector<PointId> open_ball(const FiniteUltraSpace& space, PointId center,
                               const Rational& radius) {
  std::vector<PointId> out;
  for (PointId x = 0; x < space.size(); ++x)
    if (space.dist(center, x) < radius) out.push_back(x);
  return out;
}

Ball least_ball_containing(const FiniteUltraSpace& space, std::span<const PointId> points) {
  if (points.empty()) throw Error("least ball of an empty set");
  Rational r = 0;
  for (auto p : points) r = std::max(r, space.dist(points.front(), p));
  return closed_ball(space, points.front(), r);
}

bool is_nerve_ball(const FiniteUltraSpace& space, const Ball& ball) {
  if (ball.points.empty() || ball.points.back() >= space.size()) return false;
  if (!std::is_sorted(ball.points.begin(), ball.points.end())) return false;
  auto b = closed_ball(space, ball.center(), ball.diameter);
  return b.points == ball.points && b.diameter == ball.diameter;
}

std::vector<Ball> nerve(const FiniteUltraSpace& space) {
  std::set<std::vector<PointId>> seen;
  std::vector<Ball> out;
  for (PointId a = 0; a < space.size(); ++a) {
    for (const auto& r : spectrum(space, a).values) {
      auto b = closed_ball(space, a, r);
      if (seen.insert(b.points).second) out.push_back(std::move(b));
    }
  }
  std::sort(out.begin(), out.end(), [](const Ball& x, const Ball& y) {
    if (x.diameter != y.diameter) return x.diameter > y.diameter;
    return x.points.front() < y.points.front();
  });
  return out;
}

std::vector<Ball> sons(const FiniteUltraSpace& space, const Ball& ball) {
  if (!is_nerve_ball(space, ball)) throw Error("sons(): argument is not a nerve ball");
  if (ball.diameter == 0) throw Error("sons(): trivial ball has no sons");
  std::vector<Ball> out;
  std::vector<bool> used(space.size(), false);
  for (auto p : ball.points) {
    if (used[p]) continue;
    Ball son;
    son.diameter = 0;
    for (auto q : ball.points) {
      if (space.dist(p, q) < ball.diameter) {
        used[q] = true;
        son.points.push_back(q);
        son.diameter = std::max(son.diameter, space.dist(p, q));
      }
    }
    out.push_back(std::move(son));
  }
  return out;
}

// --- nerve tree --------------------------------------------------------------

NerveTree::NerveTree(const FiniteUltraSpace& space) : balls_(nerve(space)) {
  const std::size_t m = balls_.size();
  parent_.assign(m, 0);
  children_.assign(m, {});
  depth_.assign(m, 0);
  leaf_of_.assign(space.size(), 0);
  std::vector<std::size_t> owner(space.size(), 0);
  for (std::size_t i = 1; i < m; ++i) {
    const auto& pts = balls_[i].points;
    std::size_t p = owner[pts.front()];
    for (auto x : pts) {
      if (owner[x] != p) throw Error("nerve is not laminar");
    }
    if (!balls_[p].includes(balls_[i]) || balls_[p].points.size() == pts.size()) {
      throw Error("nerve is not laminar");
    }
    parent_[i] = p;
    children_[p].push_back(i);
    depth_[i] = depth_[p] + 1;
    for (auto x : pts) owner[x] = i;
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (balls_[i].points.size() == 1) leaf_of_[balls_[i].points.front()] = i;
  }
  enter_.assign(m, 0);
  exit_.assign(m, 0);
  std::size_t clock = 0;
  std::function<void(std::size_t)> walk = [&](std::size_t v) {
    enter_[v] = clock++;
    for (auto c : children_[v]) walk(c);
    exit_[v] = clock++;
  };
  walk(0);
}

std::optional<std::size_t> NerveTree::parent(std::size_t i) const {
  if (i == 0) return std::nullopt;
  return parent_[i];
}

bool NerveTree::contains(std::size_t outer, std::size_t inner) const {
  return enter_[outer] <= enter_[inner] && exit_[inner] <= exit_[outer];
}

std::size_t NerveTree::join(std::size_t a, std::size_t b) const {
  while (depth_[a] > depth_[b]) a = parent_[a];
  while (depth_[b] > depth_[a]) b = parent_[b];
  while (a != b) {
    a = parent_[a];
    b = parent_[b];
  }
  return a;
}

std::optional<std::size_t> NerveTree::ancestor_with_diameter(std::size_t i,
                                                             const Rational& d) const {
  while (true) {
    if (balls_[i].diameter == d) return i;
    if (balls_[i].diameter > d || i == 0) return std::nullopt;
    i = parent_[i];
  }
}

std::optional<std::size_t> NerveTree::index_of(const Ball& ball) const {
  if (ball.points.empty() || ball.points.front() >= leaf_of_.size()) return std::nullopt;
  std::size_t i = leaf_of_[ball.points.front()];
  while (true) {
    if (balls_[i].points == ball.points) return i;
    if (balls_[i].points.size() > ball.points.size() || i == 0) return std::nullopt;
    i = parent_[i];
  }
}

std::size_t NerveTree::height() const {
  std::size_t h = 0;
  for (auto d : depth_) h = std::max(h, d + 1);
  return h;
}

// --- general metric gate -------------------------------------------------------

FiniteMetricSpace validate_metric(const RationalMatrix& dist, std::vector<std::string> labels) {
  auto flat = check_basic(dist);
  const std::size_t n = dist.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (flat[i * n + k] > flat[i * n + j] + flat[j * n + k]) {
          throw ValidationError("triangle inequality fails on " + triple_text(i, j, k),
                                {i, j, k});
        }
      }
  FiniteMetricSpace space;
  space.n_ = n;
  space.dist_ = std::move(flat);
  space.labels_ = default_labels(n, std::move(labels));
  return space;
}

RationalMatrix FiniteMetricSpace::matrix() const {
  RationalMatrix m(n_, std::vector<Rational>(n_));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) m[i][j] = dist(i, j);
  return m;
}

}  // namespace ultra
