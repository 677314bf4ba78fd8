#include "ultra/path.hpp"

#include <algorithm>
#include <functional>

#include "ultra/error.hpp"

namespace ultra {

std::shared_ptr<const PathHost> PathHost::make(FiniteUltraSpace space) {
  return std::shared_ptr<const PathHost>(new PathHost(std::move(space)));
}

std::string PathHost::ball_label(std::size_t ball) const {
  std::string out = "{";
  const auto& pts = nerve_.ball(ball).points;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) out += ",";
    out += space_.label(pts[i]);
  }
  return out + "}";
}

const Rational& AlphaPath::delta() const { return beta(pure_.size() - 1); }
const Rational& AlphaPath::mu() const { return beta(0); }
const Rational& AlphaPath::beta(std::size_t i) const {
  return host_->nerve().diameter(pure_.at(i));
}

std::vector<std::size_t> AlphaPath::balls() const {
  return represented_set(host_, pure_, alpha_);
}

SpectrumSet AlphaPath::spec() const {
  std::vector<Rational> v{Rational(0)};
  for (auto b : balls()) v.push_back(host_->nerve().diameter(b));
  return make_spectrum(std::move(v));
}

std::string AlphaPath::label() const {
  std::string out;
  for (std::size_t i = 0; i < pure_.size(); ++i) {
    if (i) out += ">";
    out += host_->ball_label(pure_[i]);
  }
  return out;
}

namespace {

void sort_by_diameter(const NerveTree& t, std::vector<std::size_t>& gens) {
  std::sort(gens.begin(), gens.end(), [&](std::size_t a, std::size_t b) {
    if (t.diameter(a) != t.diameter(b)) return t.diameter(a) > t.diameter(b);
    return a < b;
  });
}

void check_slim(const NerveTree& t, const std::vector<std::size_t>& sorted,
                const ExtRational& alpha) {
  if (sorted.empty()) throw Error("a path needs at least one generator");
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] >= t.size()) throw Error("generator is not a nerve ball");
    if (i && t.diameter(sorted[i]) == t.diameter(sorted[i - 1])) {
      throw Error("generators are not slim: two balls of diameter " +
                  format_rational(t.diameter(sorted[i])));
    }
  }
  if (!(ExtRational(t.diameter(sorted.front())) < alpha)) {
    throw Error("generator diameter is not below alpha");
  }
}

const HostPtr& same_host(const AlphaPath& p, const AlphaPath& q) {
  if (p.host() != q.host()) throw Error("paths live over different hosts");
  if (p.alpha() != q.alpha()) throw Error("paths have different alpha");
  return p.host();
}

}  // namespace

std::vector<std::size_t> represented_set(const HostPtr& host, std::vector<std::size_t> gens,
                                         const ExtRational& alpha) {
  const auto& t = host->nerve();
  sort_by_diameter(t, gens);
  check_slim(t, gens, alpha);
  std::vector<std::size_t> out;
  ExtRational above = alpha;
  for (auto g : gens) {
    for (std::optional<std::size_t> b = g; b && ExtRational(t.diameter(*b)) < above;
         b = t.parent(*b)) {
      out.push_back(*b);
    }
    above = t.diameter(g);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

AlphaPath path_from_slim(const HostPtr& host, std::vector<std::size_t> gens,
                         const ExtRational& alpha) {
  if (!host) throw Error("missing host");
  const auto& t = host->nerve();
  sort_by_diameter(t, gens);
  check_slim(t, gens, alpha);
  std::vector<std::size_t> pure;
  for (auto g : gens) {
    while (!pure.empty() && t.contains(pure.back(), g)) pure.pop_back();
    pure.push_back(g);
  }
  return AlphaPath(host, alpha, std::move(pure));
}

AlphaPath path_from_balls(const HostPtr& host, const std::vector<Ball>& gens,
                          const ExtRational& alpha) {
  std::vector<std::size_t> idx;
  for (const auto& b : gens) {
    auto i = host->nerve().index_of(b);
    if (!i) throw Error("generator is not a nerve ball");
    idx.push_back(*i);
  }
  return path_from_slim(host, std::move(idx), alpha);
}

bool generates(const std::vector<std::size_t>& gens_in, const AlphaPath& path) {
  const auto& t = path.host()->nerve();
  auto gens = gens_in;
  sort_by_diameter(t, gens);
  if (gens.empty()) return false;
  for (std::size_t i = 1; i < gens.size(); ++i)
    if (t.diameter(gens[i]) == t.diameter(gens[i - 1])) return false;
  const auto set = path.balls();
  for (auto g : gens)
    if (!std::binary_search(set.begin(), set.end(), g)) return false;
  if (gens.back() != path.end()) return false;
  for (auto b : set) {
    ExtRational above = path.alpha();
    for (auto g : gens) {
      const auto& db = t.diameter(b);
      if (ExtRational(db) < above && db >= t.diameter(g) && !t.contains(b, g)) return false;
      above = t.diameter(g);
    }
  }
  return true;
}

AlphaPath phi(const HostPtr& host, PointId x, const ExtRational& alpha) {
  if (x >= host->space().size()) throw Error("point out of range");
  return path_from_slim(host, {host->nerve().singleton(x)}, alpha);
}

bool path_leq(const AlphaPath& p, const AlphaPath& q) {
  const auto& t = same_host(p, q)->nerve();
  const auto& a = p.pure();
  const auto& b = q.pure();
  if (a.size() > b.size()) return false;
  const std::size_t last = a.size() - 1;
  if (!std::equal(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(last), b.begin())) {
    return false;
  }
  return t.contains(a[last], b[last]);
}

ExtRational path_delta(const PathOrBottom& p) {
  if (const auto* b = std::get_if<BottomPath>(&p)) return b->alpha;
  return std::get<AlphaPath>(p).delta();
}

PathOrBottom path_infimum(const PathOrBottom& pv, const PathOrBottom& qv) {
  const auto* p = std::get_if<AlphaPath>(&pv);
  const auto* q = std::get_if<AlphaPath>(&qv);
  const ExtRational pa = p ? p->alpha() : std::get<BottomPath>(pv).alpha;
  const ExtRational qa = q ? q->alpha() : std::get<BottomPath>(qv).alpha;
  if (pa != qa) throw Error("paths have different alpha");
  if (!p || !q) return BottomPath{pa};
  const auto& host = same_host(*p, *q);
  const auto& t = host->nerve();
  if (path_leq(*p, *q)) return *p;
  if (path_leq(*q, *p)) return *q;
  if (p->init() == q->init()) {
    const auto& b0 = p->init();
    const auto a = path_from_slim(host, {b0}, pa);
    const Rational beta = t.diameter(b0);
    auto inner = path_infimum(*truncate_below(*p, beta), *truncate_below(*q, beta));
    if (std::holds_alternative<BottomPath>(inner)) return a;
    return concat(a, std::get<AlphaPath>(inner));
  }
  const auto b = t.join(p->init(), q->init());
  if (ExtRational(t.diameter(b)) < pa) return path_from_slim(host, {b}, pa);
  return BottomPath{pa};
}

ExtRational path_distance(const PathOrBottom& p, const PathOrBottom& q) {
  return path_delta(path_infimum(p, q));
}

std::vector<AlphaPath> enumerate_paths(const HostPtr& host, const ExtRational& alpha,
                                       const Rational& beta) {
  if (!(ExtRational(beta) < alpha)) throw Error("beta must be below alpha");
  const auto& t = host->nerve();
  std::vector<AlphaPath> out;
  std::vector<std::size_t> seq;
  std::function<void()> grow = [&]() {
    if (!seq.empty() && t.diameter(seq.back()) == beta) {
      out.push_back(path_from_slim(host, seq, alpha));
      return;
    }
    for (std::size_t b = 0; b < t.size(); ++b) {
      const auto& d = t.diameter(b);
      if (d < beta) continue;
      if (seq.empty()) {
        if (!(ExtRational(d) < alpha)) continue;
      } else {
        if (!(d < t.diameter(seq.back())) || t.comparable(b, seq.back())) continue;
      }
      seq.push_back(b);
      grow();
      seq.pop_back();
    }
  };
  grow();
  return out;
}

AlphaPath truncate_above(const AlphaPath& p, const Rational& beta) {
  const auto& t = p.host()->nerve();
  const auto& pure = p.pure();
  std::vector<std::size_t> kept;
  std::size_t i = 0;
  while (i < pure.size() && t.diameter(pure[i]) >= beta) kept.push_back(pure[i++]);
  if (!kept.empty() && t.diameter(kept.back()) == beta) {
    return path_from_slim(p.host(), kept, p.alpha());
  }
  if (i == pure.size()) throw Error("truncation level is not a diameter of the path");
  auto anc = t.ancestor_with_diameter(pure[i], beta);
  const ExtRational above = i ? ExtRational(t.diameter(pure[i - 1])) : p.alpha();
  if (!anc || !(ExtRational(beta) < above)) {
    throw Error("truncation level is not a diameter of the path");
  }
  kept.push_back(*anc);
  return path_from_slim(p.host(), kept, p.alpha());
}

std::optional<AlphaPath> truncate_below(const AlphaPath& p, const Rational& beta) {
  if (!(ExtRational(beta) < p.alpha())) throw Error("truncation level must be below alpha");
  const auto& t = p.host()->nerve();
  std::vector<std::size_t> tail;
  for (auto b : p.pure())
    if (t.diameter(b) < beta) tail.push_back(b);
  if (tail.empty()) return std::nullopt;
  return path_from_slim(p.host(), std::move(tail), beta);
}

AlphaPath concat(const AlphaPath& i, const AlphaPath& j) {
  if (i.host() != j.host()) throw Error("paths live over different hosts");
  if (j.alpha() != ExtRational(i.delta())) throw Error("second path must be a delta(first)-path");
  auto gens = i.pure();
  gens.insert(gens.end(), j.pure().begin(), j.pure().end());
  return path_from_slim(i.host(), std::move(gens), i.alpha());
}

FiniteUltraSpace path_space(const std::vector<AlphaPath>& paths) {
  const std::size_t n = paths.size();
  if (n == 0) throw Error("no paths");
  RationalMatrix d(n, std::vector<Rational>(n, Rational(0)));
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < n; ++a) {
    labels.push_back(paths[a].label());
    for (std::size_t b = a + 1; b < n; ++b) {
      const auto dist = path_distance(paths[a], paths[b]);
      if (dist.is_infinite()) throw Error("infinite path distance");
      d[a][b] = d[b][a] = dist.value();
    }
  }
  return validate_ultrametric(d, std::move(labels));
}

PathBall path_ball(const AlphaPath& p, const Rational& r) {
  if (!p.alpha().is_infinite()) throw Error("path balls are taken in Path(M), alpha = inf");
  if (p.delta() != 0) throw Error("path must end at a point");
  if (!(r > 0)) throw Error("ball radius must be positive");
  if (!spectrum(p.host()->space()).contains(r)) throw Error("radius is not a distance of the host");
  if (!p.spec().contains(r)) throw Error("radius is not a diameter of the path");
  PathBall ball{truncate_above(p, r), r, {}};
  for (const auto& j : enumerate_paths(p.host(), r, 0)) ball.members.push_back(concat(ball.top, j));
  std::sort(ball.members.begin(), ball.members.end());
  return ball;
}

std::vector<AlphaPath> path_ball_isometry(const PathBall& b1, const PathBall& b2) {
  if (b1.r != b2.r) throw Error("path balls have different diameters");
  std::vector<AlphaPath> out;
  for (const auto& j : b1.members) out.push_back(concat(b2.top, *truncate_below(j, b1.r)));
  return out;
}

}  // namespace ultra
