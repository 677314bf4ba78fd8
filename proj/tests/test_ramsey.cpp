#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "ultra/error.hpp"
#include "ultra/generators.hpp"
#include "ultra/ramsey.hpp"

using namespace ultra;
using fixtures::matrix;
using fixtures::q;

TEST_SUITE("ramsey") {
  TEST_CASE("subdominant ultrametric examples") {
    auto chain = validate_metric(matrix({{0, 1, 2}, {1, 0, 1}, {2, 1, 0}}));
    auto d = subdominant_dstar(chain);
    CHECK(d.dist(0, 2) == 1);
    CHECK(d.dist(0, 1) == 1);

    auto t3 = fixtures::t3();
    CHECK(subdominant_dstar(validate_metric(t3.matrix(), t3.labels())) == t3);
    auto one = subdominant_dstar(validate_metric(matrix({{0}})));
    CHECK(one.size() == 1);
  }

  TEST_CASE("property: d* equals the chain oracle, is ultrametric, below d and idempotent") {
    std::mt19937_64 rng(71);
    for (int it = 0; it < 60; ++it) {
      auto d = oracle::random_metric(rng, 7);
      auto m = validate_metric(d);
      auto s = subdominant_dstar(m);
      CHECK(s.matrix() == oracle::dstar_by_chains(d));
      CHECK(oracle::is_ultrametric(s.matrix()));
      for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = 0; j < d.size(); ++j) CHECK(s.dist(i, j) <= d[i][j]);
      CHECK(subdominant_dstar(validate_metric(s.matrix())) == s);
    }
  }

  TEST_CASE("divisibility examples") {
    auto t3 = fixtures::t3();
    auto one = check_divisible(t3, fixtures::singleton(), 2);
    CHECK(one.verdict == Verdict::Indivisible);
    CHECK_FALSE(one.witness);

    auto self = check_divisible(t3, t3, 2);
    CHECK(self.verdict == Verdict::Divisible);
    REQUIRE(self.witness);
    CHECK(self.witness->parts == std::vector<std::size_t>{0, 0, 1});
    CHECK_FALSE(has_monochromatic_copy(t3, t3, *self.witness));

    auto six = ultv_approx(make_spectrum({q(0), q(1)}), 6);
    auto pig = check_divisible(six, fixtures::equilateral(3), 2);
    CHECK(pig.verdict == Verdict::Indivisible);
    CHECK(pig.colorings_checked == 32);
  }

  TEST_CASE("size guard and heuristic mode") {
    auto big = ultv_approx(make_spectrum({q(0), q(1)}), 6);
    DivisibilityOptions tight;
    tight.guard = 16;
    CHECK_THROWS_AS(check_divisible(big, fixtures::equilateral(3), 2, tight), Error);

    DivisibilityOptions heur = tight;
    heur.heuristic = true;
    heur.budget = 4;
    auto r = check_divisible(big, fixtures::equilateral(3), 2, heur);
    CHECK(r.verdict == Verdict::Undetermined);
    CHECK(r.colorings_checked == 4);

    heur.budget = 1000;
    CHECK(check_divisible(big, fixtures::equilateral(3), 2, heur).verdict ==
          Verdict::Indivisible);
    auto four = check_divisible(big, fixtures::equilateral(4), 2, heur);
    CHECK(four.verdict == Verdict::Divisible);
    CHECK(std::string(verdict_name(four.verdict)) == "divisible");
    CHECK_THROWS_AS(check_divisible(big, big, 1), Error);
  }

  TEST_CASE("property: verdicts and witnesses agree with exhaustive coloring") {
    std::mt19937_64 rng(72);
    for (int it = 0; it < 40; ++it) {
      auto sd = oracle::random_ultrametric(rng, 6, 2);
      auto pd = oracle::random_ultrametric(rng, 3, 2);
      auto s = validate_ultrametric(sd), p = validate_ultrametric(pd);
      auto r = check_divisible(s, p, 2);
      // Oracle: least coloring (point 0 colored 0, last point fastest) with
      // no monochromatic copy.
      std::optional<std::vector<std::size_t>> least;
      const std::size_t n = sd.size();
      for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n - 1)) && !least; ++code) {
        std::vector<std::size_t> colors(n, 0);
        for (std::size_t i = 1; i < n; ++i) colors[i] = (code >> (n - 1 - i)) & 1;
        if (!oracle::has_monochromatic_copy(sd, pd, colors)) least = colors;
      }
      if (least) {
        REQUIRE(r.verdict == Verdict::Divisible);
        CHECK(r.witness->parts == *least);
      } else {
        CHECK(r.verdict == Verdict::Indivisible);
      }
    }
  }

  TEST_CASE("well-foundedness reports") {
    auto r = check_theorem4(fixtures::five_point());
    CHECK(r.satisfied());
    CHECK(r.diameter == 2);
    CHECK(r.max_ball_chain == 3);
    auto s = check_theorem4(uniform_scheme(LevelSpec::unbounded({q(2), q(1)})));
    CHECK(s.satisfied());
    CHECK(s.max_ball_chain == 3);
    CHECK(s.diameter == 2);
  }
}
