#include "ultra/generators.hpp"

#include <algorithm>
#include <functional>

#include "ultra/error.hpp"

namespace ultra {

LevelSpec LevelSpec::make(std::vector<Rational> levels, std::vector<Degree> degrees) {
  if (levels.empty()) throw Error("level list is empty");
  if (levels.size() != degrees.size()) throw Error("level and degree counts differ");
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (!(levels[i] > 0)) throw Error("level values must be positive");
    if (i && !(levels[i] < levels[i - 1])) throw Error("level values must strictly decrease");
    if (!degrees[i].is_unbounded() && *degrees[i].count < 2) {
      throw Error("finite level degree must be at least 2");
    }
  }
  return LevelSpec{std::move(levels), std::move(degrees)};
}

LevelSpec LevelSpec::unbounded(std::vector<Rational> levels) {
  std::vector<Degree> degrees(levels.size(), Degree::unbounded());
  return make(std::move(levels), std::move(degrees));
}

namespace {

SchemeNode uniform_node(const LevelSpec& spec, std::size_t from,
                        const std::function<Degree(std::size_t)>& degree) {
  SchemeNode node{spec.levels[from], degree(from), {}};
  if (from + 1 < spec.size()) node.children.push_back(uniform_node(spec, from + 1, degree));
  return node;
}

}  // namespace

TreeScheme uniform_scheme(const LevelSpec& spec) {
  return TreeScheme::make(uniform_node(spec, 0, [&](std::size_t i) { return spec.degrees[i]; }));
}

FiniteUltraSpace max_space(const SpectrumSet& v) {
  if (v.values.empty() || v.values.front() != 0) throw Error("0 must belong to V");
  const auto& vals = v.values;
  const std::size_t n = vals.size();
  RationalMatrix d(n, std::vector<Rational>(n, Rational(0)));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(format_rational(vals[i]));
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) d[i][j] = std::max(vals[i], vals[j]);
    }
  }
  return validate_ultrametric(d, std::move(labels));
}

FiniteUltraSpace omega_space(const LevelSpec& spec, std::size_t width) {
  if (width < 2) throw Error("width must be at least 2");
  auto truncated = [&](std::size_t i) {
    const auto& a = spec.degrees[i];
    if (a.is_unbounded()) return Degree::unbounded();
    return Degree::finite(std::min<std::uint64_t>(*a.count, width));
  };
  return scheme_materialize(TreeScheme::make(uniform_node(spec, 0, truncated)), width);
}

FiniteUltraSpace ultv_approx(const SpectrumSet& v, std::size_t width) {
  if (v.values.empty() || v.values.front() != 0) throw Error("0 must belong to V");
  if (width < 2) throw Error("width must be at least 2");
  if (v.values.size() == 1) return validate_ultrametric({{Rational(0)}}, {"()"});
  std::vector<Rational> levels(v.values.rbegin(), v.values.rend() - 1);
  return omega_space(LevelSpec::unbounded(std::move(levels)), width);
}

std::vector<SpectrumSet> prop2_families(const SpectrumSet& v, std::size_t family_cap) {
  if (v.values.size() < 2) throw Error("V needs at least two elements");
  if (v.values.front() != 0) throw Error("0 must belong to V");
  // Optional members: V minus 0 and minus the maximum.
  std::vector<Rational> optional(v.values.begin() + 1, v.values.end() - 1);
  const std::size_t m = optional.size();
  std::vector<SpectrumSet> out;
  for (std::size_t k = 0; k <= m && out.size() < family_cap; ++k) {
    // Index combinations of size k in lexicographic order.
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (out.size() < family_cap) {
      std::vector<Rational> f{Rational(0)};
      for (auto i : idx) f.push_back(optional[i]);
      out.push_back(make_spectrum(std::move(f)));
      std::size_t pos = k;
      while (pos > 0 && idx[pos - 1] == m - k + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t i = pos; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  return out;
}

FiniteUltraSpace prop2_space(const SpectrumSet& v, std::size_t width, std::size_t family_cap) {
  if (family_cap < 1) throw Error("family cap must be positive");
  const auto families = prop2_families(v, family_cap);
  const Rational r = v.values.back();
  std::vector<FiniteUltraSpace> blocks;
  std::size_t n = 0;
  for (const auto& f : families) {
    blocks.push_back(ultv_approx(f, width));
    n += blocks.back().size();
  }
  RationalMatrix d(n, std::vector<Rational>(n, r));
  std::vector<std::string> labels;
  std::size_t offset = 0;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const auto& blk = blocks[b];
    for (std::size_t i = 0; i < blk.size(); ++i) {
      labels.push_back("F" + std::to_string(b) + ":" + blk.label(i));
      for (std::size_t j = 0; j < blk.size(); ++j) d[offset + i][offset + j] = blk.dist(i, j);
    }
    offset += blk.size();
  }
  return validate_ultrametric(d, std::move(labels));
}

}  // namespace ultra
