#include "ultra/monoid.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <unordered_map>

#include "ultra/error.hpp"

namespace ultra {

Levels make_levels(std::vector<Rational> weights) {
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (!(weights[i] > 0)) throw Error("level weights must be positive");
    if (i && !(weights[i] < weights[i - 1])) throw Error("level weights must strictly decrease");
  }
  return std::make_shared<const std::vector<Rational>>(std::move(weights));
}

std::string WeightedWord::label() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(coords[i]);
  }
  return out + ")";
}

WeightedWord zero_word(const Levels& levels) {
  return WeightedWord{levels, std::vector<std::uint64_t>(levels->size(), 0)};
}

WeightedWord make_word(const Levels& levels, std::vector<std::uint64_t> coords) {
  if (coords.size() != levels->size()) throw Error("word length does not match level count");
  return WeightedWord{levels, std::move(coords)};
}

WeightedWord add_words(const WeightedWord& f, const WeightedWord& g) {
  if (*f.levels != *g.levels) throw Error("words over different levels");
  WeightedWord out{f.levels, f.coords};
  for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] += g.coords[i];
  return out;
}

Rational word_distance(const WeightedWord& f, const WeightedWord& g) {
  if (*f.levels != *g.levels) throw Error("words over different levels");
  for (std::size_t i = 0; i < f.coords.size(); ++i)
    if (f.coords[i] != g.coords[i]) return (*f.levels)[i];
  return Rational(0);
}

OmegaEmbedding embed_into_omega(const FiniteUltraSpace& space) {
  const auto spec = spectrum(space);
  std::vector<Rational> weights(spec.values.rbegin(), spec.values.rend() - 1);
  OmegaEmbedding out{make_levels(std::move(weights)), {}};
  const auto& levels = *out.levels;
  const std::size_t n = space.size();
  for (PointId p = 0; p < n; ++p) {
    WeightedWord w = zero_word(out.levels);
    for (std::size_t j = 0; j < levels.size(); ++j) {
      const Rational& r = levels[j];
      // Least members of the open r-balls inside B'(p, r), in order.
      std::vector<PointId> leaders;
      PointId mine = 0;
      for (PointId q = 0; q < n; ++q) {
        if (space.dist(p, q) > r) continue;
        PointId lead = q;
        for (PointId s = 0; s < q; ++s) {
          if (space.dist(p, s) <= r && space.dist(q, s) < r) {
            lead = s;
            break;
          }
        }
        if (lead == q) leaders.push_back(q);
        if (q == p) mine = lead;
      }
      w.coords[j] = static_cast<std::uint64_t>(
          std::find(leaders.begin(), leaders.end(), mine) - leaders.begin());
    }
    out.words.push_back(std::move(w));
  }
  return out;
}

std::vector<WeightedWord> star_closure(const Levels& levels, const std::vector<WeightedWord>& x,
                                       std::size_t k) {
  for (const auto& w : x)
    if (*w.levels != *levels) throw Error("words over different levels");
  std::set<std::vector<std::uint64_t>> seen{zero_word(levels).coords};
  std::vector<std::vector<std::uint64_t>> frontier{zero_word(levels).coords};
  for (std::size_t step = 0; step < k; ++step) {
    std::vector<std::vector<std::uint64_t>> next;
    for (const auto& f : frontier) {
      for (const auto& g : x) {
        auto s = add_words(WeightedWord{levels, f}, g).coords;
        if (seen.insert(s).second) next.push_back(std::move(s));
      }
    }
    frontier = std::move(next);
  }
  std::vector<WeightedWord> out;
  for (const auto& c : seen) out.push_back(WeightedWord{levels, c});
  return out;
}

std::vector<WordPrefix> meet_tree(const std::vector<WeightedWord>& x) {
  std::set<WordPrefix> out;
  for (const auto& e : x) {
    for (const auto& f : x) {
      if (*e.levels != *f.levels) throw Error("words over different levels");
      std::size_t l = 0;
      while (l < e.coords.size() && e.coords[l] == f.coords[l]) ++l;
      out.insert(WordPrefix(e.coords.begin(), e.coords.begin() + static_cast<std::ptrdiff_t>(l)));
    }
  }
  return {out.begin(), out.end()};
}

std::size_t max_prefix_chain(const std::vector<WordPrefix>& tree) {
  std::vector<const WordPrefix*> order;
  for (const auto& p : tree) order.push_back(&p);
  std::stable_sort(order.begin(), order.end(),
                   [](const WordPrefix* a, const WordPrefix* b) { return a->size() < b->size(); });
  std::vector<std::size_t> best(order.size(), 1);
  std::size_t top = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const auto& a = *order[j];
      const auto& b = *order[i];
      if (a.size() < b.size() && std::equal(a.begin(), a.end(), b.begin())) {
        best[i] = std::max(best[i], best[j] + 1);
      }
    }
    top = std::max(top, best[i]);
  }
  return top;
}

// --- windows ---------------------------------------------------------------

std::shared_ptr<const WordWindow> WordWindow::make(const LevelSpec& spec, std::size_t width) {
  std::shared_ptr<WordWindow> w(new WordWindow());
  w->spec_ = spec;
  w->width_ = width;
  w->levels_ = make_levels(spec.levels);
  w->host_ = PathHost::make(omega_space(spec, width));
  for (const auto& a : spec.degrees) {
    w->bounds_.push_back(a.is_unbounded() ? width
                                          : std::min<std::uint64_t>(*a.count, width));
  }
  std::vector<std::uint64_t> c(spec.size(), 0);
  while (true) {
    w->words_.push_back(WeightedWord{w->levels_, c});
    std::size_t i = c.size();
    while (i > 0 && c[i - 1] + 1 == w->bounds_[i - 1]) c[--i] = 0;
    if (i == 0) break;
    ++c[i - 1];
  }
  if (w->words_.size() != w->space().size()) throw std::logic_error("window size mismatch");

  const auto& t = w->host_->nerve();
  const std::size_t m = t.size();
  w->ball_sums_.assign(m * m, -1);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      auto s = w->add(t.ball(a).center(), t.ball(b).center());
      if (!s) continue;
      const auto r = std::max(t.diameter(a), t.diameter(b));
      auto ball = t.ancestor_with_diameter(t.singleton(*s), r);
      if (!ball) throw std::logic_error("window ball sum has no ball of the expected diameter");
      w->ball_sums_[a * m + b] = static_cast<std::int64_t>(*ball);
    }
  }
  return w;
}

std::optional<PointId> WordWindow::index_of(const WeightedWord& w) const {
  if (*w.levels != *levels_) return std::nullopt;
  PointId idx = 0;
  for (std::size_t i = 0; i < w.coords.size(); ++i) {
    if (w.coords[i] >= bounds_[i]) return std::nullopt;
    idx = idx * bounds_[i] + w.coords[i];
  }
  return idx;
}

std::optional<PointId> WordWindow::add(PointId a, PointId b) const {
  return index_of(add_words(words_.at(a), words_.at(b)));
}

std::optional<std::size_t> WordWindow::ball_sum(std::size_t b1, std::size_t b2) const {
  const std::size_t m = host_->nerve().size();
  if (b1 >= m || b2 >= m) throw Error("not a nerve ball of the window");
  const auto s = ball_sums_[b1 * m + b2];
  if (s < 0) return std::nullopt;
  return static_cast<std::size_t>(s);
}

std::optional<std::size_t> ball_meet(const NerveTree& tree, std::size_t b1, std::size_t b2,
                                     const ExtRational& alpha) {
  const auto j = tree.join(b1, b2);
  if (ExtRational(tree.diameter(j)) < alpha) return j;
  return std::nullopt;
}

std::optional<AlphaPath> slim_sum(const WordWindow& window, const std::vector<std::size_t>& gens1,
                                  const std::vector<std::size_t>& gens2,
                                  const ExtRational& alpha) {
  const auto& t = window.host()->nerve();
  auto sorted = [&](std::vector<std::size_t> g) {
    if (g.empty()) throw Error("empty generator set");
    std::sort(g.begin(), g.end(), [&](std::size_t a, std::size_t b) {
      return t.diameter(a) > t.diameter(b);
    });
    return g;
  };
  const auto a = sorted(gens1);
  const auto b = sorted(gens2);
  if (t.diameter(a.back()) != t.diameter(b.back())) {
    throw Error("summands end at different diameters");
  }
  std::vector<Rational> levels;
  for (auto x : a) levels.push_back(t.diameter(x));
  for (auto x : b) levels.push_back(t.diameter(x));
  std::sort(levels.begin(), levels.end(), std::greater<>());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  auto select = [&](const std::vector<std::size_t>& g, const Rational& at) {
    for (auto x : g)
      if (t.diameter(x) <= at) return x;
    throw std::logic_error("no generator at or below the level");
  };
  std::vector<std::size_t> out;
  for (const auto& at : levels) {
    auto s = window.ball_sum(select(a, at), select(b, at));
    if (!s) return std::nullopt;
    out.push_back(*s);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return path_from_slim(window.host(), std::move(out), alpha);
}

std::optional<AlphaPath> path_sum(const WordWindow& window, const AlphaPath& p,
                                  const AlphaPath& q) {
  if (p.host() != window.host() || q.host() != window.host()) {
    throw Error("paths do not live over the window");
  }
  if (p.alpha() != q.alpha()) throw Error("paths have different alpha");
  if (p.delta() != q.delta()) throw Error("paths end at different diameters");
  return slim_sum(window, p.pure(), q.pure(), p.alpha());
}

// --- law suites --------------------------------------------------------------

bool LawReport::ok() const {
  return std::all_of(laws.begin(), laws.end(), [](const LawResult& l) { return l.ok(); });
}

namespace {

using Opt = std::optional<std::size_t>;

void fail(LawResult& law, std::vector<std::string> operands) {
  if (!law.counterexample) law.counterexample = std::move(operands);
}

}  // namespace

LawReport check_word_laws(const WordWindow& window) {
  const std::size_t n = window.size();
  const auto& sp = window.space();
  std::vector<std::int64_t> sum(n * n, -1);
  for (PointId a = 0; a < n; ++a)
    for (PointId b = 0; b < n; ++b)
      if (auto s = window.add(a, b)) sum[a * n + b] = static_cast<std::int64_t>(*s);
  auto lbl = [&](PointId p) { return window.word(p).label(); };

  LawResult left{"translation on the left preserves distance"};
  LawResult right{"translation on the right preserves distance"};
  LawResult comm{"commutativity"};
  LawResult assoc{"associativity"};
  LawResult nonexp{"d(x+x', y+y') <= max(d(x,y), d(x',y'))"};
  LawResult neutral{"neutral element"};
  for (PointId x = 0; x < n; ++x) {
    ++neutral.checked;
    if (sum[x * n] != static_cast<std::int64_t>(x) || sum[x] != static_cast<std::int64_t>(x)) {
      fail(neutral, {lbl(x)});
    }
    for (PointId y = 0; y < n; ++y) {
      const auto xy = sum[x * n + y], yx = sum[y * n + x];
      if (xy < 0 || yx < 0) {
        ++comm.skipped;
      } else {
        ++comm.checked;
        if (xy != yx) fail(comm, {lbl(x), lbl(y)});
      }
      for (PointId z = 0; z < n; ++z) {
        const auto zx = sum[z * n + x], zy = sum[z * n + y];
        if (zx < 0 || zy < 0) {
          ++left.skipped;
        } else {
          ++left.checked;
          if (sp.dist(zx, zy) != sp.dist(x, y)) fail(left, {lbl(z), lbl(x), lbl(y)});
        }
        const auto xz = sum[x * n + z], yz = sum[y * n + z];
        if (xz < 0 || yz < 0) {
          ++right.skipped;
        } else {
          ++right.checked;
          if (sp.dist(xz, yz) != sp.dist(x, y)) fail(right, {lbl(z), lbl(x), lbl(y)});
        }
        const auto yz2 = sum[y * n + z];
        const auto l = xy < 0 ? -1 : sum[static_cast<std::size_t>(xy) * n + z];
        const auto r = yz2 < 0 ? -1 : sum[x * n + static_cast<std::size_t>(yz2)];
        if (l < 0 || r < 0) {
          ++assoc.skipped;
        } else {
          ++assoc.checked;
          if (l != r) fail(assoc, {lbl(x), lbl(y), lbl(z)});
        }
      }
    }
  }
  for (PointId x = 0; x < n; ++x) {
    for (PointId x2 = 0; x2 < n; ++x2) {
      const auto s1 = sum[x * n + x2];
      for (PointId y = 0; y < n; ++y) {
        for (PointId y2 = 0; y2 < n; ++y2) {
          const auto s2 = sum[y * n + y2];
          if (s1 < 0 || s2 < 0) {
            ++nonexp.skipped;
            continue;
          }
          ++nonexp.checked;
          if (sp.dist(s1, s2) > std::max(sp.dist(x, y), sp.dist(x2, y2))) {
            fail(nonexp, {lbl(x), lbl(x2), lbl(y), lbl(y2)});
          }
        }
      }
    }
  }
  return LawReport{{left, right, comm, assoc, neutral, nonexp}};
}

LawReport check_ball_laws(const WordWindow& window, const ExtRational& alpha) {
  const auto& host = *window.host();
  const auto& t = host.nerve();
  const auto& sp = host.space();
  const std::size_t m = t.size();
  auto lbl = [&](std::size_t b) { return host.ball_label(b); };
  auto lbl_opt = [&](Opt b) { return b ? lbl(*b) : std::string("bottom"); };

  LawResult diam{"diameter of a ball sum is the larger diameter"};
  LawResult pointwise{"ball sum is the least ball containing the pointwise sums"};
  LawResult left{"C + (B meet B') = (C + B) meet (C + B')"};
  LawResult right{"(B meet B') + C = (B + C) meet (B' + C)"};
  LawResult mono{"ball sum is monotone under inclusion"};

  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      const auto s = window.ball_sum(a, b);
      if (!s) {
        ++diam.skipped;
        ++pointwise.skipped;
        continue;
      }
      ++diam.checked;
      if (t.diameter(*s) != std::max(t.diameter(a), t.diameter(b))) fail(diam, {lbl(a), lbl(b)});
      // Pointwise sums: all must be in the window and inside the sum, with
      // the same diameter.
      std::vector<PointId> pts;
      bool complete = true;
      for (auto x : t.ball(a).points) {
        for (auto y : t.ball(b).points) {
          if (auto z = window.add(x, y)) {
            pts.push_back(*z);
          } else {
            complete = false;
          }
        }
      }
      if (!complete) {
        ++pointwise.skipped;
        continue;
      }
      ++pointwise.checked;
      const auto least = least_ball_containing(sp, pts);
      if (!(least == t.ball(*s))) fail(pointwise, {lbl(a), lbl(b)});
    }
  }

  auto sum_opt = [&](Opt x, Opt y) -> std::optional<Opt> {  // outer nullopt: out of window
    if (!x || !y) return Opt{};
    auto s = window.ball_sum(*x, *y);
    if (!s) return std::nullopt;
    return Opt{*s};
  };
  auto meet_opt = [&](Opt x, Opt y) -> Opt {
    if (!x || !y) return std::nullopt;
    return ball_meet(t, *x, *y, alpha);
  };
  for (std::size_t c = 0; c < m; ++c) {
    for (std::size_t b = 0; b < m; ++b) {
      if (!(ExtRational(t.diameter(b)) < alpha) || !(ExtRational(t.diameter(c)) < alpha)) continue;
      for (std::size_t b2 = 0; b2 < m; ++b2) {
        if (!(ExtRational(t.diameter(b2)) < alpha)) continue;
        const auto meet = ball_meet(t, b, b2, alpha);
        {
          auto lhs = sum_opt(c, meet);
          auto cb = sum_opt(c, b), cb2 = sum_opt(c, b2);
          if (!lhs || !cb || !cb2) {
            ++left.skipped;
          } else {
            ++left.checked;
            if (*lhs != meet_opt(*cb, *cb2)) fail(left, {lbl(c), lbl(b), lbl(b2), lbl_opt(*lhs)});
          }
        }
        {
          auto lhs = sum_opt(meet, c);
          auto bc = sum_opt(b, c), b2c = sum_opt(b2, c);
          if (!lhs || !bc || !b2c) {
            ++right.skipped;
          } else {
            ++right.checked;
            if (*lhs != meet_opt(*bc, *b2c)) fail(right, {lbl(b), lbl(b2), lbl(c), lbl_opt(*lhs)});
          }
        }
      }
    }
  }

  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      const auto s = window.ball_sum(a, b);
      for (std::optional<std::size_t> a2 = a; a2; a2 = t.parent(*a2)) {
        for (std::optional<std::size_t> b2 = b; b2; b2 = t.parent(*b2)) {
          const auto s2 = window.ball_sum(*a2, *b2);
          if (!s || !s2) {
            ++mono.skipped;
            continue;
          }
          ++mono.checked;
          if (!t.contains(*s2, *s)) fail(mono, {lbl(a), lbl(b), lbl(*a2), lbl(*b2)});
        }
      }
    }
  }
  return LawReport{{diam, pointwise, left, right, mono}};
}

namespace {

constexpr std::size_t kMaxPure = 16;

// Paths of one L_{α,0} as fixed arrays of nerve indices, with diameters
// replaced by their rank in a descending list that also holds α.
class FastPaths {
 public:
  FastPaths(const WordWindow& window, const ExtRational& alpha)
      : window_(window), tree_(window.host()->nerve()) {
    std::vector<Rational> values = spectrum(window.space()).values;
    if (!alpha.is_infinite()) values.push_back(alpha.value());
    std::sort(values.begin(), values.end(), std::greater<>());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    auto rank_of = [&](const Rational& v) {
      return static_cast<int>(std::find(values.begin(), values.end(), v) - values.begin());
    };
    alpha_rank_ = alpha.is_infinite() ? -1 : rank_of(alpha.value());
    for (std::size_t b = 0; b < tree_.size(); ++b) rank_.push_back(rank_of(tree_.diameter(b)));
    values_ = values;
    paths = enumerate_paths(window.host(), alpha, 0);
    for (std::size_t i = 0; i < paths.size(); ++i) {
      Small s;
      if (paths[i].length() > kMaxPure) throw Error("path too long for the law checker");
      s.n = static_cast<std::uint8_t>(paths[i].length());
      for (std::size_t k = 0; k < s.n; ++k) s.b[k] = static_cast<std::uint16_t>(paths[i].pure()[k]);
      index_.emplace(key(s), static_cast<std::int32_t>(i));
      small_.push_back(s);
    }
  }

  std::size_t size() const { return small_.size(); }

  std::int32_t sum(std::size_t i, std::size_t j) const {
    const Small& p = small_[i];
    const Small& q = small_[j];
    std::array<int, 2 * kMaxPure> lv{};
    std::size_t nl = 0;
    for (std::size_t k = 0; k < p.n; ++k) lv[nl++] = rank_[p.b[k]];
    for (std::size_t k = 0; k < q.n; ++k) lv[nl++] = rank_[q.b[k]];
    std::sort(lv.begin(), lv.begin() + static_cast<std::ptrdiff_t>(nl));
    nl = static_cast<std::size_t>(std::unique(lv.begin(), lv.begin() + static_cast<std::ptrdiff_t>(nl)) -
                                  lv.begin());
    Small out;
    out.n = 0;
    std::size_t ip = 0, iq = 0;
    for (std::size_t k = 0; k < nl; ++k) {
      const int at = lv[k];  // larger rank = smaller diameter
      while (rank_[p.b[ip]] < at) ++ip;
      while (rank_[q.b[iq]] < at) ++iq;
      const auto s = window_.ball_sum(p.b[ip], q.b[iq]);
      if (!s) return -1;
      const auto ball = static_cast<std::uint16_t>(*s);
      if (out.n && out.b[out.n - 1] == ball) continue;
      if (out.n && rank_[out.b[out.n - 1]] == rank_[ball]) {
        throw std::logic_error("ball sums at two levels share a diameter");
      }
      while (out.n && tree_.contains(out.b[out.n - 1], ball)) --out.n;
      out.b[out.n++] = ball;
    }
    auto it = index_.find(key(out));
    if (it == index_.end()) throw std::logic_error("sum of paths is not an enumerated path");
    return it->second;
  }

  // Rank of d_α(p, q); alpha_rank for ⊥.
  int distance(std::size_t i, std::size_t j) const {
    const int r = inf(small_[i], small_[j], 0, alpha_rank_);
    return r == kBottom ? alpha_rank_ : r;
  }

  std::int32_t phi(PointId x) const {
    Small s;
    s.n = 1;
    s.b[0] = static_cast<std::uint16_t>(tree_.singleton(x));
    return index_.at(key(s));
  }

  std::vector<AlphaPath> paths;

 private:
  struct Small {
    std::uint8_t n = 0;
    std::array<std::uint16_t, kMaxPure> b{};
  };
  static constexpr int kBottom = -1000;

  static std::string key(const Small& s) {
    return std::string(reinterpret_cast<const char*>(s.b.data()), s.n * sizeof(std::uint16_t));
  }

  bool leq(const Small& p, const Small& q, std::size_t k) const {
    if (p.n > q.n) return false;
    for (std::size_t i = k; i + 1 < p.n; ++i)
      if (p.b[i] != q.b[i]) return false;
    return tree_.contains(p.b[p.n - 1], q.b[p.n - 1]);
  }

  int inf(const Small& p, const Small& q, std::size_t k, int alpha_rank) const {
    if (leq(p, q, k)) return rank_[p.b[p.n - 1]];
    if (leq(q, p, k)) return rank_[q.b[q.n - 1]];
    if (p.b[k] == q.b[k]) {
      const int r = inf(p, q, k + 1, rank_[p.b[k]]);
      return r == kBottom ? rank_[p.b[k]] : r;
    }
    const int j = rank_[tree_.join(p.b[k], q.b[k])];
    return j > alpha_rank ? j : kBottom;
  }

  const WordWindow& window_;
  const NerveTree& tree_;
  std::vector<int> rank_;
  std::vector<Rational> values_;
  int alpha_rank_ = -1;
  std::vector<Small> small_;
  std::unordered_map<std::string, std::int32_t> index_;
};

}  // namespace

LawReport check_path_laws(const WordWindow& window, const ExtRational& alpha) {
  FastPaths fp(window, alpha);
  const std::size_t n = fp.size();
  auto lbl = [&](std::size_t i) { return fp.paths[i].label(); };

  std::vector<std::int32_t> sum(n * n);
  std::vector<std::uint8_t> dist(n * n);
  std::vector<std::vector<std::int32_t>> defined(n);  // right operands with a sum
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      sum[i * n + j] = fp.sum(i, j);
      dist[i * n + j] = static_cast<std::uint8_t>(fp.distance(i, j) + 1);
      if (sum[i * n + j] >= 0) defined[i].push_back(static_cast<std::int32_t>(j));
    }
  }

  LawResult neutral{"phi(0) is neutral"};
  LawResult comm{"commutativity"};
  LawResult morph{"phi(x + y) = phi(x) + phi(y)"};
  LawResult assoc{"associativity"};
  LawResult compat{"translation preserves path distance"};

  const auto zero = static_cast<std::size_t>(fp.phi(window.zero()));
  for (std::size_t i = 0; i < n; ++i) {
    ++neutral.checked;
    if (sum[i * n + zero] != static_cast<std::int32_t>(i) ||
        sum[zero * n + i] != static_cast<std::int32_t>(i)) {
      fail(neutral, {lbl(i)});
    }
    for (std::size_t j = 0; j < n; ++j) {
      const auto a = sum[i * n + j], b = sum[j * n + i];
      if (a < 0 || b < 0) {
        ++comm.skipped;
        continue;
      }
      ++comm.checked;
      if (a != b) fail(comm, {lbl(i), lbl(j)});
    }
  }

  for (PointId x = 0; x < window.size(); ++x) {
    for (PointId y = 0; y < window.size(); ++y) {
      const auto xy = window.add(x, y);
      const auto s = sum[static_cast<std::size_t>(fp.phi(x)) * n + static_cast<std::size_t>(fp.phi(y))];
      if (!xy) {
        ++morph.skipped;
        if (s >= 0) fail(morph, {window.word(x).label(), window.word(y).label()});
        continue;
      }
      ++morph.checked;
      if (s != fp.phi(*xy)) fail(morph, {window.word(x).label(), window.word(y).label()});
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (auto j : defined[i]) {
      const auto s = static_cast<std::size_t>(sum[i * n + static_cast<std::size_t>(j)]);
      for (auto k : defined[s]) {
        const auto jk = sum[static_cast<std::size_t>(j) * n + static_cast<std::size_t>(k)];
        if (jk < 0) {
          ++assoc.skipped;
          continue;
        }
        const auto rhs = sum[i * n + static_cast<std::size_t>(jk)];
        if (rhs < 0) {
          ++assoc.skipped;
          continue;
        }
        ++assoc.checked;
        if (rhs != sum[s * n + static_cast<std::size_t>(k)]) {
          fail(assoc, {lbl(i), lbl(static_cast<std::size_t>(j)), lbl(static_cast<std::size_t>(k))});
        }
      }
    }
  }

  for (std::size_t j = 0; j < n; ++j) {
    const auto& row = defined[j];
    for (std::size_t a = 0; a < row.size(); ++a) {
      const auto ia = static_cast<std::size_t>(row[a]);
      const auto sa = static_cast<std::size_t>(sum[j * n + ia]);
      for (std::size_t b = a + 1; b < row.size(); ++b) {
        const auto ib = static_cast<std::size_t>(row[b]);
        const auto sb = static_cast<std::size_t>(sum[j * n + ib]);
        ++compat.checked;
        if (dist[sa * n + sb] != dist[ia * n + ib]) fail(compat, {lbl(j), lbl(ia), lbl(ib)});
      }
    }
  }
  return LawReport{{neutral, comm, morph, assoc, compat}};
}

}  // namespace ultra
