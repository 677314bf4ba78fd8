#include "ultra/indivisibility.hpp"

#include <map>

namespace ultra {

namespace {

// The scheme with implicit point sons made explicit.
struct Flat {
  struct Node {
    Rational diam;
    bool unbounded = false;
    std::optional<std::size_t> parent;
    std::vector<std::size_t> sons;  // one per son type
    DescriptorPath path;
  };
  std::vector<Node> nodes;
  std::vector<std::size_t> leaves;  // point types, DFS order

  explicit Flat(const TreeScheme& scheme) { add(scheme.root(), std::nullopt, {}); }

  std::size_t add(const SchemeNode& d, std::optional<std::size_t> parent, DescriptorPath path) {
    const std::size_t id = nodes.size();
    nodes.push_back({d.diam, d.degree.is_unbounded() && !d.is_leaf(), parent, {}, path});
    if (d.is_leaf()) {
      leaves.push_back(id);
      return id;
    }
    const auto& types = son_types(d);
    for (std::size_t i = 0; i < types.size(); ++i) {
      auto p = path;
      p.push_back(i);
      const auto child = add(types[i], id, std::move(p));
      nodes[id].sons.push_back(child);
    }
    return id;
  }

  bool is_point(std::size_t v) const { return nodes[v].sons.empty(); }

  // Internal ancestors of v (root first), v excluded.
  std::vector<std::size_t> ancestors(std::size_t v) const {
    std::vector<std::size_t> out;
    for (auto p = nodes[v].parent; p; p = nodes[*p].parent) out.push_back(*p);
    return {out.rbegin(), out.rend()};
  }

  bool below(std::size_t v, std::size_t top) const {  // top is v or an ancestor
    for (std::optional<std::size_t> p = v; p; p = nodes[*p].parent)
      if (*p == top) return true;
    return false;
  }

  // Spectrum of a point of type `leaf` inside a ball of type `top`.
  SpectrumSet spec(std::size_t leaf, std::size_t top = 0) const {
    std::vector<Rational> v{Rational(0)};
    for (auto a : ancestors(leaf))
      if (below(a, top)) v.push_back(nodes[a].diam);
    return make_spectrum(std::move(v));
  }

  std::vector<std::size_t> subtree(std::size_t v) const {
    std::vector<std::size_t> out{v};
    for (std::size_t i = 0; i < out.size(); ++i)
      for (auto s : nodes[out[i]].sons) out.push_back(s);
    return out;
  }

  std::optional<std::size_t> ancestor_with_diam(std::size_t leaf, const Rational& r) const {
    for (auto a : ancestors(leaf))
      if (nodes[a].diam == r) return a;
    return std::nullopt;
  }
};

// Whether a ball of type t embeds into a ball of type u using only points
// whose type passes `allowed`.
class EmbedOracle {
 public:
  EmbedOracle(const Flat& flat, std::vector<bool> allowed)
      : flat_(flat), allowed_(std::move(allowed)) {}

  bool embeds(std::size_t t, std::size_t u) {
    auto key = std::pair{t, u};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool ok = false;
    const auto& nt = flat_.nodes[t];
    if (flat_.is_point(t)) {
      for (auto v : flat_.subtree(u)) ok = ok || (flat_.is_point(v) && allowed_[v]);
    } else {
      for (auto c : flat_.subtree(u)) {
        if (flat_.nodes[c].diam != nt.diam || flat_.is_point(c)) continue;
        bool all = true;
        for (auto s : nt.sons) {
          bool some = false;
          for (auto v : flat_.nodes[c].sons) some = some || embeds(s, v);
          all = all && some;
        }
        if (all) {
          ok = true;
          break;
        }
      }
    }
    memo_[key] = ok;
    return ok;
  }

 private:
  const Flat& flat_;
  std::vector<bool> allowed_;
  std::map<std::pair<std::size_t, std::size_t>, bool> memo_;
};

}  // namespace

std::size_t scheme_depth(const TreeScheme& scheme) {
  Flat flat(scheme);
  std::size_t best = 0;
  for (auto l : flat.leaves) best = std::max(best, flat.ancestors(l).size() + 1);
  return best;
}

IndivisibilityReport check_theorem6(const TreeScheme& scheme) {
  const Flat flat(scheme);
  const std::size_t m = flat.nodes.size();
  IndivisibilityReport rep;

  for (std::size_t v = 0; v < m; ++v) {
    if (!flat.is_point(v) && !flat.nodes[v].unbounded) {
      rep.infinitely_many_sons = false;
      rep.finite_degree_at = flat.nodes[v].path;
      break;
    }
  }

  for (std::size_t v = 0; v < m && rep.up_directed; ++v) {
    if (flat.is_point(v)) continue;
    std::vector<std::size_t> pts;
    for (auto l : flat.leaves)
      if (flat.below(l, v)) pts.push_back(l);
    std::vector<SpectrumSet> rel;
    for (auto l : pts) rel.push_back(flat.spec(l, v));
    for (std::size_t i = 0; i < pts.size() && rep.up_directed; ++i) {
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        auto u = rel[i].values;
        u.insert(u.end(), rel[j].values.begin(), rel[j].values.end());
        const auto uni = make_spectrum(std::move(u));
        bool found = false;
        for (std::size_t k = 0; k < pts.size() && !found; ++k) found = uni.subset_of(rel[k]);
        if (!found) {
          rep.up_directed = false;
          rep.up_directed_failure = SchemeUpDirectedFailure{
              flat.nodes[v].path, flat.nodes[pts[i]].path, flat.nodes[pts[j]].path};
          break;
        }
      }
    }
  }

  const auto& leaves = flat.leaves;
  std::vector<SpectrumSet> spec;
  for (auto l : leaves) spec.push_back(flat.spec(l));

  EmbedOracle free_oracle(flat, std::vector<bool>(m, true));
  for (std::size_t i = 0; i < leaves.size() && rep.singleton_extension; ++i) {
    for (std::size_t j = 0; j < leaves.size() && rep.singleton_extension; ++j) {
      if (!spec[i].subset_of(spec[j])) continue;
      for (auto d : flat.ancestors(leaves[i])) {
        const auto e = *flat.ancestor_with_diam(leaves[j], flat.nodes[d].diam);
        const auto& dsons = flat.nodes[d].sons;
        std::optional<std::size_t> bad;
        for (std::size_t t = 0; t < dsons.size() && !bad; ++t) {
          bool some = false;
          for (auto u : flat.nodes[e].sons) some = some || free_oracle.embeds(dsons[t], u);
          if (!some) bad = t;
        }
        if (bad) {
          rep.singleton_extension = false;
          rep.singleton_extension_failure = SchemeExtensionFailure{
              flat.nodes[leaves[i]].path, flat.nodes[leaves[j]].path, flat.nodes[d].path, *bad};
          break;
        }
      }
    }
  }

  for (std::size_t i = 0; i < leaves.size() && rep.dominated_ball; ++i) {
    for (std::size_t j = 0; j < leaves.size() && rep.dominated_ball; ++j) {
      if (!spec[i].subset_of(spec[j])) continue;
      for (std::size_t k = 0; k < leaves.size(); ++k) {
        const auto common_i = flat.ancestors(leaves[i]);
        bool ok = true;
        for (auto a : common_i) {
          if (!flat.below(leaves[k], a)) continue;
          const auto e = *flat.ancestor_with_diam(leaves[j], flat.nodes[a].diam);
          bool found = false;
          for (std::size_t l = 0; l < leaves.size() && !found; ++l)
            found = flat.below(leaves[l], e) && spec[k].subset_of(spec[l]);
          ok = ok && found;
        }
        if (!ok) {
          rep.dominated_ball = false;
          rep.dominated_ball_failure = SchemeDominationFailure{
              flat.nodes[leaves[i]].path, flat.nodes[leaves[j]].path, flat.nodes[leaves[k]].path};
          break;
        }
      }
    }
  }

  for (std::size_t v = 0; v < m && rep.ball_into_dominators; ++v) {
    if (flat.is_point(v)) continue;
    for (std::size_t a = 0; a < leaves.size(); ++a) {
      if (!flat.below(leaves[a], v)) continue;
      std::vector<bool> allowed(m, false);
      for (std::size_t l = 0; l < leaves.size(); ++l)
        allowed[leaves[l]] = flat.below(leaves[l], v) && spec[a].subset_of(spec[l]);
      EmbedOracle oracle(flat, std::move(allowed));
      if (!oracle.embeds(v, v)) {
        rep.ball_into_dominators = false;
        rep.ball_into_dominators_failure =
            SchemeBallFailure{flat.nodes[v].path, flat.nodes[leaves[a]].path};
        break;
      }
    }
  }
  return rep;
}

}  // namespace ultra
