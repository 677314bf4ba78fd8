#include "ultra/ramsey.hpp"

#include "minimax.hpp"
#include "ultra/embeddings.hpp"
#include "ultra/error.hpp"
#include "ultra/indivisibility.hpp"

namespace ultra {

FiniteUltraSpace subdominant_dstar(const FiniteMetricSpace& space) {
  const std::size_t n = space.size();
  std::vector<Rational> flat;
  flat.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) flat.push_back(space.dist(i, j));
  const auto closed = detail::minimax_closure(n, flat);
  RationalMatrix d(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) d[i][j] = closed[i * n + j];
  return validate_ultrametric(d, space.labels());
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Indivisible: return "indivisible";
    case Verdict::Divisible: return "divisible";
    case Verdict::Undetermined: return "undetermined";
  }
  return "undetermined";
}

bool has_monochromatic_copy(const FiniteUltraSpace& space, const FiniteUltraSpace& pattern,
                            const Coloring& coloring) {
  if (coloring.parts.size() != space.size()) throw Error("coloring does not cover the space");
  for (std::size_t c = 0; c < coloring.k; ++c) {
    EmbeddingSearch search;
    search.allowed.resize(space.size());
    for (PointId p = 0; p < space.size(); ++p) search.allowed[p] = coloring.parts[p] == c;
    if (find_isometric_embedding(pattern, space, search)) return true;
  }
  return false;
}

DivisibilityResult check_divisible(const FiniteUltraSpace& space,
                                   const FiniteUltraSpace& pattern, std::size_t k,
                                   const DivisibilityOptions& options) {
  if (k < 2) throw Error("at least two colors are needed");
  const std::size_t n = space.size();
  bool within_guard = true;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n && within_guard; ++i) {
    if (total > options.guard / k) within_guard = false;
    total *= k;
  }
  within_guard = within_guard && total <= options.guard;
  if (!within_guard && !options.heuristic) {
    throw Error("k^n exceeds the exhaustive guard; pass the heuristic flag to scan a prefix");
  }
  const std::uint64_t limit = within_guard ? UINT64_MAX : options.budget;

  DivisibilityResult result;
  Coloring c{k, std::vector<std::size_t>(n, 0)};
  while (true) {
    if (result.colorings_checked == limit) return result;  // Undetermined
    ++result.colorings_checked;
    if (!has_monochromatic_copy(space, pattern, c)) {
      result.verdict = Verdict::Divisible;
      result.witness = c;
      return result;
    }
    std::size_t i = n;
    while (i > 1 && c.parts[i - 1] + 1 == k) c.parts[--i] = 0;
    if (i <= 1) break;
    ++c.parts[i - 1];
  }
  result.verdict = Verdict::Indivisible;  // every coloring was scanned
  return result;
}

WellFoundednessReport check_theorem4(const FiniteUltraSpace& space) {
  WellFoundednessReport rep;
  rep.diameter = spectrum(space).values.back();
  rep.max_ball_chain = NerveTree(space).height();
  return rep;
}

WellFoundednessReport check_theorem4(const TreeScheme& scheme) {
  WellFoundednessReport rep;
  rep.diameter = scheme.root().diam;
  rep.max_ball_chain = scheme_depth(scheme);
  return rep;
}

}  // namespace ultra
