#include "ultra/embeddings.hpp"

#include <algorithm>
#include <stdexcept>

#include "ultra/error.hpp"

namespace ultra {

PartialMap PartialMap::make(const FiniteUltraSpace& source, const FiniteUltraSpace& target,
                            std::vector<Pair> pairs) {
  std::sort(pairs.begin(), pairs.end());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto [x, fx] = pairs[i];
    if (x >= source.size() || fx >= target.size()) throw Error("map point out of range");
    for (std::size_t j = 0; j < i; ++j) {
      const auto [y, fy] = pairs[j];
      if (y == x) throw Error("map defined twice at " + std::to_string(x));
      if (fy == fx) throw Error("map is not injective");
      if (source.dist(x, y) != target.dist(fx, fy)) {
        throw Error("map does not preserve the distance between " + std::to_string(y) +
                    " and " + std::to_string(x));
      }
    }
  }
  PartialMap f;
  f.pairs_ = std::move(pairs);
  return f;
}

std::optional<PointId> PartialMap::image(PointId x) const {
  auto it = std::lower_bound(pairs_.begin(), pairs_.end(), Pair{x, 0});
  if (it != pairs_.end() && it->first == x) return it->second;
  return std::nullopt;
}

namespace {

class Backtracker {
 public:
  Backtracker(const FiniteUltraSpace& s, const FiniteUltraSpace& t, std::vector<bool> allowed)
      : s_(s), t_(t), allowed_(std::move(allowed)), image_(s.size(), kNone),
        used_(t.size(), false) {}

  bool assign(PointId x, PointId fx) {
    if (fx >= t_.size() || used_[fx] || !allowed_[fx] || image_[x] != kNone) return false;
    if (!consistent(x, fx)) return false;
    image_[x] = fx;
    used_[fx] = true;
    order_.push_back(x);
    return true;
  }

  bool run() {
    free_.clear();
    for (PointId x = 0; x < s_.size(); ++x)
      if (image_[x] == kNone) free_.push_back(x);
    return search(0);
  }

  std::vector<PartialMap::Pair> pairs() const {
    std::vector<PartialMap::Pair> out;
    for (PointId x = 0; x < s_.size(); ++x) out.emplace_back(x, image_[x]);
    return out;
  }

 private:
  static constexpr PointId kNone = static_cast<PointId>(-1);

  bool consistent(PointId x, PointId fx) const {
    for (auto y : order_)
      if (s_.dist(x, y) != t_.dist(fx, image_[y])) return false;
    return true;
  }

  bool search(std::size_t k) {
    if (k == free_.size()) return true;
    const PointId x = free_[k];
    for (PointId c = 0; c < t_.size(); ++c) {
      if (used_[c] || !allowed_[c] || !consistent(x, c)) continue;
      image_[x] = c;
      used_[c] = true;
      order_.push_back(x);
      if (search(k + 1)) return true;
      order_.pop_back();
      used_[c] = false;
      image_[x] = kNone;
    }
    return false;
  }

  const FiniteUltraSpace& s_;
  const FiniteUltraSpace& t_;
  std::vector<bool> allowed_;
  std::vector<PointId> image_;
  std::vector<bool> used_;
  std::vector<PointId> order_;
  std::vector<PointId> free_;
};

// Pairwise distances of `source` that `target` must realize.
bool spectrum_fits(const FiniteUltraSpace& source, const FiniteUltraSpace& target) {
  return spectrum(source).subset_of(spectrum(target));
}

std::vector<std::vector<bool>> dominance(const std::vector<SpectrumSet>& specs) {
  const std::size_t n = specs.size();
  std::vector<std::vector<bool>> dom(n, std::vector<bool>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) dom[a][b] = specs[a].subset_of(specs[b]);
  return dom;
}

}  // namespace

std::optional<PartialMap> find_isometric_embedding(const FiniteUltraSpace& source,
                                                   const FiniteUltraSpace& target,
                                                   const EmbeddingSearch& search) {
  std::vector<bool> allowed = search.allowed;
  if (allowed.empty()) allowed.assign(target.size(), true);
  if (allowed.size() != target.size()) throw Error("allowed mask has the wrong size");
  const auto usable = static_cast<std::size_t>(std::count(allowed.begin(), allowed.end(), true));
  if (source.size() > usable) return std::nullopt;
  if (!spectrum_fits(source, target)) return std::nullopt;
  Backtracker bt(source, target, std::move(allowed));
  for (const auto& [x, fx] : search.fixed) {
    if (x >= source.size()) throw Error("fixed pair out of range");
    if (!bt.assign(x, fx)) return std::nullopt;
  }
  if (!bt.run()) return std::nullopt;
  return PartialMap::make(source, target, bt.pairs());
}

bool embeds(const FiniteUltraSpace& source, const FiniteUltraSpace& target) {
  return find_isometric_embedding(source, target).has_value();
}

std::optional<SpecFailure> local_spec_failure(const PartialMap& f, const FiniteUltraSpace& source,
                                              const FiniteUltraSpace& target) {
  for (const auto& [x, fx] : f.pairs()) {
    const auto sx = spectrum(source, x);
    const auto sfx = spectrum(target, fx);
    for (const auto& r : sx.values)
      if (!sfx.contains(r)) return SpecFailure{x, r};
  }
  return std::nullopt;
}

std::vector<PointId> spec_dominators(const FiniteUltraSpace& space, PointId x) {
  if (x >= space.size()) throw Error("point out of range");
  const auto sx = spectrum(space, x);
  std::vector<PointId> out;
  for (PointId y = 0; y < space.size(); ++y)
    if (sx.subset_of(spectrum(space, y))) out.push_back(y);
  return out;
}

std::optional<PartialMap> extend_one_point(const PartialMap& f, PointId x,
                                           const FiniteUltraSpace& space) {
  if (x >= space.size()) throw Error("point out of range");
  if (f.defined_at(x)) throw Error("point " + std::to_string(x) + " is already in the domain");
  if (!is_local_spec_embedding(f, space, space)) throw Error("map is not a spec-embedding");
  const auto candidates = spec_dominators(space, x);
  auto extended = [&](PointId image) {
    auto pairs = f.pairs();
    pairs.emplace_back(x, image);
    return PartialMap::make(space, space, std::move(pairs));
  };
  if (f.empty()) return extended(candidates.front());

  Rational r = space.dist(x, f.pairs().front().first);
  for (const auto& [y, fy] : f.pairs()) r = std::min(r, space.dist(x, y));
  std::vector<PointId> nearest;  // A_0, ascending
  for (const auto& [y, fy] : f.pairs())
    if (space.dist(x, y) == r) nearest.push_back(y);
  const PointId centre = *f.image(nearest.front());
  for (auto c : candidates) {
    if (space.dist(centre, c) != r) continue;
    bool excluded = false;
    for (auto y : nearest) {
      if (space.dist(*f.image(y), c) < r) {
        excluded = true;
        break;
      }
    }
    if (!excluded) return extended(c);
  }
  return std::nullopt;
}

GreedyOutcome extend_greedily(const PartialMap& f, const FiniteUltraSpace& space) {
  PartialMap cur = f;
  for (PointId x = 0; x < space.size(); ++x) {
    if (cur.defined_at(x)) continue;
    auto next = extend_one_point(cur, x, space);
    if (!next) return {std::nullopt, x};
    cur = std::move(*next);
  }
  return {std::move(cur), std::nullopt};
}

ExtensionReport check_extension_properties(const FiniteUltraSpace& space) {
  const std::size_t n = space.size();
  const auto specs = multispectrum(space);
  const auto dom = dominance(specs);
  ExtensionReport rep;

  for (PointId y = 0; y < n && rep.singleton_extension; ++y) {
    for (PointId y2 = 0; y2 < n; ++y2) {
      if (!dom[y][y2]) continue;
      EmbeddingSearch search;
      search.fixed = {{y, y2}};
      if (find_isometric_embedding(space, space, search)) continue;
      auto f = PartialMap::make(space, space, {{y, y2}});
      auto greedy = extend_greedily(f, space);
      if (!greedy.stuck_at) {
        throw std::logic_error("greedy extension succeeded where exhaustive search failed");
      }
      rep.singleton_extension = false;
      rep.singleton_failure = SingletonExtensionFailure{std::move(f), *greedy.stuck_at};
      break;
    }
  }

  for (PointId y = 0; y < n && rep.one_step_extension; ++y) {
    for (PointId y2 = 0; y2 < n && rep.one_step_extension; ++y2) {
      if (!dom[y][y2]) continue;
      for (PointId x = 0; x < n; ++x) {
        if (x == y) continue;
        bool found = false;
        for (PointId x2 = 0; x2 < n && !found; ++x2)
          found = x2 != y2 && space.dist(x2, y2) == space.dist(x, y) && dom[x][x2];
        if (!found) {
          rep.one_step_extension = false;
          rep.one_step_failure = OneStepFailure{y, y2, x};
          break;
        }
      }
    }
  }

  NerveTree tree(space);
  for (std::size_t bi = 0; bi < tree.size() && rep.up_directed; ++bi) {
    const auto& pts = tree.ball(bi).points;
    std::vector<SpectrumSet> rel;
    for (auto a : pts) {
      std::vector<Rational> v;
      for (auto b : pts) v.push_back(space.dist(a, b));
      rel.push_back(make_spectrum(std::move(v)));
    }
    for (std::size_t i = 0; i < pts.size() && rep.up_directed; ++i) {
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        auto u = rel[i].values;
        u.insert(u.end(), rel[j].values.begin(), rel[j].values.end());
        const auto uni = make_spectrum(std::move(u));
        bool found = false;
        for (std::size_t k = 0; k < pts.size() && !found; ++k) found = uni.subset_of(rel[k]);
        if (!found) {
          rep.up_directed = false;
          rep.up_directed_failure = UpDirectedFailure{bi, pts[i], pts[j]};
          break;
        }
      }
    }
  }

  for (std::size_t bi = 0; bi < tree.size(); ++bi) {
    if (tree.diameter(bi) == 0) continue;
    const auto sn = sons(space, tree.ball(bi));
    std::vector<FiniteUltraSpace> parts;
    for (const auto& s : sn) parts.push_back(restrict_space(space, s.points));
    for (std::size_t i = 0; i < sn.size(); ++i) {
      std::size_t count = 0;
      for (std::size_t j = 0; j < sn.size(); ++j) count += embeds(parts[i], parts[j]) ? 1 : 0;
      rep.son_embeddings.push_back({bi, i, count, sn.size()});
    }
  }

  for (PointId y = 0; y < n; ++y) {
    for (PointId x = 0; x < n; ++x) {
      if (x == y) continue;
      const Rational r = space.dist(x, y);
      std::vector<PointId> picked;
      for (PointId z = 0; z < n; ++z) {
        if (space.dist(y, z) != r || !dom[x][z]) continue;
        bool separate = true;
        for (auto w : picked) separate = separate && space.dist(w, z) == r;
        if (separate) picked.push_back(z);
      }
      if (!rep.least_multiplicity || picked.size() < rep.least_multiplicity->count) {
        rep.least_multiplicity = MultiplicityCount{y, x, picked.size()};
      }
    }
  }
  return rep;
}

bool multiplicity_at_least(const ExtensionReport& report, std::size_t k) {
  return !report.least_multiplicity || report.least_multiplicity->count >= k;
}

std::optional<OneStepFailure> dominated_ball_failure(const FiniteUltraSpace& space) {
  const std::size_t n = space.size();
  const auto dom = dominance(multispectrum(space));
  for (PointId y = 0; y < n; ++y) {
    for (PointId y2 = 0; y2 < n; ++y2) {
      if (!dom[y][y2]) continue;
      for (PointId x = 0; x < n; ++x) {
        const Rational r = space.dist(x, y);
        bool found = false;
        for (PointId x2 = 0; x2 < n && !found; ++x2)
          found = space.dist(y2, x2) <= r && dom[x][x2];
        if (!found) return OneStepFailure{y, y2, x};
      }
    }
  }
  return std::nullopt;
}

std::optional<std::pair<std::size_t, PointId>> ball_into_dominators_failure(
    const FiniteUltraSpace& space) {
  const auto dom = dominance(multispectrum(space));
  NerveTree tree(space);
  for (std::size_t bi = 0; bi < tree.size(); ++bi) {
    const auto& pts = tree.ball(bi).points;
    const auto sub = restrict_space(space, pts);
    for (auto a : pts) {
      EmbeddingSearch search;
      search.allowed.assign(space.size(), false);
      for (auto b : pts) search.allowed[b] = dom[a][b];
      if (!find_isometric_embedding(sub, space, search)) return std::pair{bi, a};
    }
  }
  return std::nullopt;
}

bool is_point_homogeneous(const FiniteUltraSpace& space) {
  for (PointId y = 1; y < space.size(); ++y) {
    EmbeddingSearch search;
    search.fixed = {{0, y}};
    if (!find_isometric_embedding(space, space, search)) return false;
  }
  return true;
}

}  // namespace ultra
