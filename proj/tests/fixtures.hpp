#pragma once

#include <string>
#include <utility>
#include <vector>

#include "oracles.hpp"
#include "ultra/generators.hpp"
#include "ultra/space.hpp"

namespace fixtures {

using ultra::FiniteUltraSpace;
using ultra::Rational;

inline Rational q(std::int64_t a, std::int64_t b = 1) { return Rational(a, b); }

inline ultra::RationalMatrix matrix(std::vector<std::vector<std::int64_t>> m) {
  ultra::RationalMatrix out;
  for (const auto& row : m) {
    std::vector<Rational> r;
    for (auto v : row) r.push_back(Rational(v));
    out.push_back(r);
  }
  return out;
}

// x, y at 1; z at 2 from both.
inline FiniteUltraSpace t3() {
  return ultra::validate_ultrametric(matrix({{0, 1, 2}, {1, 0, 2}, {2, 2, 0}}), {"x", "y", "z"});
}

inline FiniteUltraSpace singleton() { return ultra::validate_ultrametric(matrix({{0}}), {"a"}); }

inline FiniteUltraSpace equilateral(std::size_t n, std::int64_t d = 1) {
  std::vector<std::vector<std::int64_t>> m(n, std::vector<std::int64_t>(n, d));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 0;
  return ultra::validate_ultrametric(matrix(m));
}

// {x, y} at 1 and {z1, z2} at 1/2, the two pairs at 2.
inline FiniteUltraSpace four_point() {
  ultra::RationalMatrix d = matrix({{0, 1, 2, 2}, {1, 0, 2, 2}, {2, 2, 0, 0}, {2, 2, 0, 0}});
  d[2][3] = d[3][2] = q(1, 2);
  return ultra::validate_ultrametric(d, {"x", "y", "z1", "z2"});
}

// Sons {p, q, t} and {r, s}, each pairwise 1, cross distance 2.
inline FiniteUltraSpace five_point() {
  return ultra::validate_ultrametric(matrix({{0, 1, 1, 2, 2},
                                             {1, 0, 1, 2, 2},
                                             {1, 1, 0, 2, 2},
                                             {2, 2, 2, 0, 1},
                                             {2, 2, 2, 1, 0}}),
                                     {"p", "q", "t", "r", "s"});
}

inline std::vector<std::pair<std::string, FiniteUltraSpace>> named_spaces() {
  using ultra::make_spectrum;
  std::vector<std::pair<std::string, FiniteUltraSpace>> out{
      {"T3", t3()},
      {"singleton", singleton()},
      {"equilateral-3", equilateral(3)},
      {"equilateral-4", equilateral(4, 3)},
      {"four-point", four_point()},
      {"five-point", five_point()},
      {"max-space 0,1,2", ultra::max_space(make_spectrum({q(0), q(1), q(2)}))},
      {"max-space 0,1/2,3", ultra::max_space(make_spectrum({q(0), q(1, 2), q(3)}))},
      {"ultv 0,1,2 width 2", ultra::ultv_approx(make_spectrum({q(0), q(1), q(2)}), 2)},
      {"omega 3,1 degrees 3,2",
       ultra::omega_space(ultra::LevelSpec::make({q(3), q(1)}, {ultra::Degree::finite(3),
                                                                ultra::Degree::finite(2)}),
                          3)},
  };
  return out;
}

// Fixture hosts with at most six points: the named spaces plus seeded random
// ultrametrics.
inline std::vector<std::pair<std::string, FiniteUltraSpace>> small_hosts(std::uint64_t seed,
                                                                          std::size_t randoms) {
  auto out = named_spaces();
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < randoms; ++i) {
    out.emplace_back("random-" + std::to_string(i),
                     ultra::validate_ultrametric(oracle::random_ultrametric(rng, 6, 3)));
  }
  return out;
}

}  // namespace fixtures
