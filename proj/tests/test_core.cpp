#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "ultra/error.hpp"
#include "ultra/space.hpp"
#include "ultra/tree.hpp"

using namespace ultra;
using fixtures::matrix;
using fixtures::q;

namespace {

std::vector<std::vector<std::size_t>> point_sets(const std::vector<Ball>& balls) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& b : balls) out.push_back(b.points);
  return out;
}

}  // namespace

TEST_SUITE("core_spaces") {
  TEST_CASE("T3 is accepted and keeps its labels") {
    auto s = fixtures::t3();
    CHECK(s.size() == 3);
    CHECK(s.label(2) == "z");
    CHECK(s.dist(0, 2) == 2);
  }

  TEST_CASE("a chain violating the strong triangle inequality is rejected with its triple") {
    try {
      validate_ultrametric(matrix({{0, 1, 2}, {1, 0, 1}, {2, 1, 0}}));
      FAIL("accepted a non-ultrametric matrix");
    } catch (const ValidationError& e) {
      CHECK(e.witness() == std::vector<std::size_t>{0, 1, 2});
    }
  }

  TEST_CASE("malformed matrices are rejected") {
    CHECK_THROWS_AS(validate_ultrametric(matrix({{0, 1}, {2, 0}})), ValidationError);
    CHECK_THROWS_AS(validate_ultrametric(matrix({{1}})), ValidationError);
    CHECK_THROWS_AS(validate_ultrametric(matrix({{0, 0}, {0, 0}})), ValidationError);
    CHECK_THROWS_AS(validate_ultrametric(matrix({{0, 1}})), ValidationError);
    CHECK_THROWS_AS(validate_ultrametric({}), ValidationError);
    CHECK_THROWS_AS(validate_ultrametric(matrix({{0, -1}, {-1, 0}})), ValidationError);
  }

  TEST_CASE("singleton is valid") { CHECK(fixtures::singleton().size() == 1); }

  TEST_CASE("spectra of T3") {
    auto s = fixtures::t3();
    CHECK(spectrum(s, 0).values == std::vector<Rational>{q(0), q(1), q(2)});
    CHECK(spectrum(s, 2).values == std::vector<Rational>{q(0), q(2)});
    CHECK(spectrum(s).values == std::vector<Rational>{q(0), q(1), q(2)});
    auto ms = multispectrum(s);
    REQUIRE(ms.size() == 3);
    CHECK(ms[0] == ms[1]);
    CHECK_FALSE(ms[0] == ms[2]);
  }

  TEST_CASE("nerve examples") {
    auto n = nerve(fixtures::t3());
    CHECK(point_sets(n) == std::vector<std::vector<std::size_t>>{{0, 1, 2}, {0, 1}, {0}, {1}, {2}});
    CHECK(nerve(fixtures::singleton()).size() == 1);
    CHECK(nerve(fixtures::equilateral(3)).size() == 4);
  }

  TEST_CASE("sons of T3 balls") {
    auto s = fixtures::t3();
    auto n = nerve(s);
    CHECK(point_sets(sons(s, n[0])) == std::vector<std::vector<std::size_t>>{{0, 1}, {2}});
    CHECK(point_sets(sons(s, n[1])) == std::vector<std::vector<std::size_t>>{{0}, {1}});
    CHECK_THROWS_AS(sons(s, n[4]), Error);
  }

  TEST_CASE("nerve tree queries") {
    auto s = fixtures::five_point();
    NerveTree t(s);
    CHECK(t.size() == 8);
    CHECK(t.ball(t.root()).points.size() == 5);
    auto p = t.singleton(0), r = t.singleton(3);
    CHECK(t.join(p, r) == t.root());
    auto pq = t.join(p, t.singleton(1));
    CHECK(t.ball(pq).points == std::vector<std::size_t>{0, 1, 2});
    CHECK(t.ancestor_with_diameter(p, q(1)) == pq);
    CHECK_FALSE(t.ancestor_with_diameter(p, q(3, 2)).has_value());
    CHECK(t.contains(pq, p));
    CHECK_FALSE(t.contains(p, pq));
    CHECK(t.height() == 3);
  }

  TEST_CASE("property: random ultrametrics are accepted and their nerve matches the oracle") {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 150; ++it) {
      auto d = oracle::random_ultrametric(rng, 10, 4);
      REQUIRE(oracle::is_ultrametric(d));
      auto s = validate_ultrametric(d);
      std::set<std::vector<std::size_t>> got;
      for (const auto& b : nerve(s)) {
        got.insert(b.points);
        CHECK(b.diameter == oracle::diameter(d, b.points));
        CHECK(is_nerve_ball(s, b));
      }
      CHECK(got == oracle::nerve_sets(d));

      NerveTree t(s);
      for (std::size_t a = 0; a < t.size(); ++a) {
        for (std::size_t b = 0; b < t.size(); ++b) {
          std::vector<std::size_t> u;
          std::set_union(t.ball(a).points.begin(), t.ball(a).points.end(),
                         t.ball(b).points.begin(), t.ball(b).points.end(), std::back_inserter(u));
          CHECK(t.ball(t.join(a, b)) == least_ball_containing(s, u));
          CHECK(t.contains(a, b) == oracle::includes(t.ball(a).points, t.ball(b).points));
        }
      }
    }
  }

  TEST_CASE("property: sons partition their ball and sit at distance δ from each other") {
    std::mt19937_64 rng(12);
    for (int it = 0; it < 60; ++it) {
      auto s = validate_ultrametric(oracle::random_ultrametric(rng, 9, 4));
      for (const auto& b : nerve(s)) {
        if (b.points.size() == 1) continue;
        auto ss = sons(s, b);
        CHECK(ss.size() >= 2);
        std::vector<std::size_t> all;
        for (const auto& son : ss) all.insert(all.end(), son.points.begin(), son.points.end());
        std::sort(all.begin(), all.end());
        CHECK(all == b.points);
        for (std::size_t i = 0; i < ss.size(); ++i)
          for (std::size_t j = i + 1; j < ss.size(); ++j)
            CHECK(s.dist(ss[i].center(), ss[j].center()) == b.diameter);
      }
    }
  }

  TEST_CASE("property: perturbed matrices are rejected exactly when the oracle rejects") {
    std::mt19937_64 rng(13);
    int rejected = 0;
    for (int it = 0; it < 200; ++it) {
      auto d = oracle::random_ultrametric(rng, 7, 3);
      if (d.size() < 3) continue;
      std::uniform_int_distribution<std::size_t> pick(0, d.size() - 1);
      std::size_t i = pick(rng), j = pick(rng);
      if (i == j) continue;
      d[i][j] = d[j][i] = d[i][j] + Rational(1, 7);
      const bool ok = oracle::is_ultrametric(d);
      try {
        validate_ultrametric(d);
        CHECK(ok);
      } catch (const ValidationError& e) {
        CHECK_FALSE(ok);
        ++rejected;
        REQUIRE(e.witness().size() == 3);
        auto [a, b, c] = std::tuple(e.witness()[0], e.witness()[1], e.witness()[2]);
        CHECK(d[a][c] > std::max(d[a][b], d[b][c]));
      }
    }
    CHECK(rejected > 0);
  }

  TEST_CASE("metric validation accepts non-ultrametric metrics and rejects triangle failures") {
    CHECK(validate_metric(matrix({{0, 1, 2}, {1, 0, 1}, {2, 1, 0}})).size() == 3);
    CHECK_THROWS_AS(validate_metric(matrix({{0, 1, 3}, {1, 0, 1}, {3, 1, 0}})), ValidationError);
  }
}

TEST_SUITE("tree_codec") {
  TEST_CASE("T3 tree shape") {
    auto t = space_to_tree(fixtures::t3());
    const auto& root = t.nodes()[t.root()];
    CHECK(root.value == 2);
    REQUIRE(root.children.size() == 2);
    const auto& inner = t.nodes()[root.children[0]];
    CHECK(inner.value == 1);
    CHECK(inner.children.size() == 2);
    const auto& z = t.nodes()[root.children[1]];
    CHECK(z.value == 0);
    CHECK(z.label == "z");
    CHECK(tree_to_space(t) == fixtures::t3());
  }

  TEST_CASE("singleton and equilateral trees") {
    auto t1 = space_to_tree(fixtures::singleton());
    CHECK(t1.nodes().size() == 1);
    CHECK(t1.nodes()[0].value == 0);
    auto t2 = space_to_tree(fixtures::equilateral(3));
    CHECK(t2.nodes()[t2.root()].value == 1);
    CHECK(t2.nodes()[t2.root()].children.size() == 3);
  }

  TEST_CASE("hand-built tree gives the equilateral space") {
    auto t = ValuedTree::make({std::nullopt, 0, 0, 0}, {q(1), q(0), q(0), q(0)});
    auto s = tree_to_space(t);
    CHECK(s.size() == 3);
    CHECK(spectrum(s).values == std::vector<Rational>{q(0), q(1)});
  }

  TEST_CASE("invalid trees are rejected") {
    CHECK_THROWS_AS(ValuedTree::make({std::nullopt, 0}, {q(1), q(2)}), ValidationError);
    CHECK_THROWS_AS(ValuedTree::make({std::nullopt, std::nullopt}, {q(1), q(0)}),
                    ValidationError);
    CHECK_THROWS_AS(ValuedTree::make({1, 0}, {q(1), q(0)}), ValidationError);
  }

  TEST_CASE("DOT output names every node") {
    auto dot = space_to_tree(fixtures::t3()).to_dot();
    CHECK(dot.find("digraph") == 0);
    CHECK(dot.find("n4") != std::string::npos);
  }

  TEST_CASE("property: roundtrip and internal nodes match nerve balls") {
    std::mt19937_64 rng(21);
    for (int it = 0; it < 100; ++it) {
      auto d = oracle::random_ultrametric(rng, 12, 4);
      auto s = validate_ultrametric(d);
      auto t = space_to_tree(s);
      CHECK(tree_to_space(t) == s);
      std::size_t internal = 0;
      for (const auto& n : t.nodes()) internal += n.children.empty() ? 0 : 1;
      std::size_t nontrivial = 0;
      for (const auto& b : oracle::nerve_sets(d)) nontrivial += b.size() > 1 ? 1 : 0;
      CHECK(internal == nontrivial);
      CHECK(t.leaves().size() == s.size());
    }
  }
}
