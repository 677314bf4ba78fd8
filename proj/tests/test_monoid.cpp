#include "doctest.h"
#include "fixtures.hpp"
#include "monoid_oracle.hpp"
#include "ultra/embeddings.hpp"
#include "ultra/error.hpp"
#include "ultra/monoid.hpp"

using namespace ultra;
using fixtures::q;

namespace {

const ExtRational kInf = ExtRational::infinity();

std::vector<std::vector<std::uint64_t>> coords_of(const std::vector<WeightedWord>& ws) {
  std::vector<std::vector<std::uint64_t>> out;
  for (const auto& w : ws) out.push_back(w.coords);
  return out;
}

}  // namespace

TEST_SUITE("monoid_ext") {
  TEST_CASE("word arithmetic and distance") {
    auto lv = make_levels({q(2), q(1)});
    auto f = make_word(lv, {1, 0}), g = make_word(lv, {0, 3});
    CHECK(add_words(f, g).coords == std::vector<std::uint64_t>{1, 3});
    CHECK(word_distance(f, g) == 2);
    CHECK(word_distance(make_word(lv, {1, 1}), make_word(lv, {1, 2})) == 1);
    CHECK(word_distance(f, f) == 0);
    CHECK(add_words(f, zero_word(lv)) == f);
    CHECK(f.label() == "(1,0)");
    CHECK_THROWS_AS(make_word(lv, {1}), Error);
    CHECK_THROWS_AS(make_levels({q(1), q(2)}), Error);
    CHECK_THROWS_AS(add_words(f, make_word(make_levels({q(3), q(1)}), {0, 0})), Error);
  }

  TEST_CASE("embedding finite spaces into word spaces") {
    auto t3 = fixtures::t3();
    auto e = embed_into_omega(t3);
    CHECK(*e.levels == std::vector<Rational>{q(2), q(1)});
    CHECK(coords_of(e.words) == std::vector<std::vector<std::uint64_t>>{{0, 0}, {0, 1}, {1, 0}});

    auto s = embed_into_omega(fixtures::singleton());
    CHECK(s.levels->empty());
    REQUIRE(s.words.size() == 1);
    CHECK(s.words[0].coords.empty());

    auto eq = embed_into_omega(fixtures::equilateral(3));
    CHECK(*eq.levels == std::vector<Rational>{q(1)});
    CHECK(coords_of(eq.words) == std::vector<std::vector<std::uint64_t>>{{0}, {1}, {2}});
  }

  TEST_CASE("property: the word embedding is isometric") {
    std::mt19937_64 rng(61);
    for (int it = 0; it < 100; ++it) {
      auto s = validate_ultrametric(oracle::random_ultrametric(rng, 10, 4));
      auto e = embed_into_omega(s);
      CHECK(e.words[0] == zero_word(e.levels));
      for (PointId a = 0; a < s.size(); ++a)
        for (PointId b = 0; b < s.size(); ++b)
          CHECK(word_distance(e.words[a], e.words[b]) == s.dist(a, b));
    }
  }

  TEST_CASE("star closure") {
    auto lv = make_levels({q(2), q(1)});
    CHECK(coords_of(star_closure(lv, {make_word(lv, {1, 0})}, 2)) ==
          std::vector<std::vector<std::uint64_t>>{{0, 0}, {1, 0}, {2, 0}});
    CHECK(coords_of(star_closure(lv, {}, 3)) == std::vector<std::vector<std::uint64_t>>{{0, 0}});
    auto six = star_closure(lv, {make_word(lv, {1, 0}), make_word(lv, {0, 1})}, 2);
    CHECK(coords_of(six) ==
          std::vector<std::vector<std::uint64_t>>{{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {2, 0}});
  }

  TEST_CASE("meet tree") {
    auto lv = make_levels({q(2), q(1)});
    auto t = meet_tree({make_word(lv, {0, 0}), make_word(lv, {0, 1})});
    CHECK(std::find(t.begin(), t.end(), WordPrefix{0}) != t.end());
    CHECK(std::find(t.begin(), t.end(), WordPrefix{0, 1}) != t.end());
    CHECK(meet_tree({make_word(lv, {1, 2})}) == std::vector<WordPrefix>{{1, 2}});
    CHECK(max_prefix_chain(t) == 2);
  }

  TEST_CASE("window ball sums") {
    auto w = WordWindow::make(LevelSpec::unbounded({q(2), q(1)}), 3);
    const auto& t = w->host()->nerve();
    auto ball_with = [&](std::vector<std::uint64_t> c, const Rational& r) {
      auto p = w->index_of(make_word(w->levels(), c));
      REQUIRE(p);
      return *t.ancestor_with_diameter(t.singleton(*p), r);
    };
    // {f : f(0) = 1} + itself = {f : f(0) = 2}.
    auto b1 = ball_with({1, 0}, q(1));
    auto s = w->ball_sum(b1, b1);
    REQUIRE(s);
    CHECK(*s == ball_with({2, 0}, q(1)));
    CHECK(t.diameter(*s) == 1);
    // Singletons add as words.
    auto f = ball_with({0, 1}, q(0)), g = ball_with({1, 1}, q(0));
    CHECK(*w->ball_sum(f, g) == ball_with({1, 2}, q(0)));
    // Anything plus the whole window is the whole window.
    for (std::size_t b = 0; b < t.size(); ++b) CHECK(w->ball_sum(b, t.root()) == t.root());
    // Leaving the window is undefined.
    CHECK_FALSE(w->ball_sum(ball_with({2, 0}, q(1)), ball_with({1, 0}, q(1))));
  }

  TEST_CASE("path sums on a small window") {
    auto w = WordWindow::make(LevelSpec::unbounded({q(2), q(1)}), 3);
    auto h = w->host();
    auto zero = phi(h, w->zero(), kInf);
    for (PointId x = 0; x < w->size(); ++x) {
      auto px = phi(h, x, kInf);
      CHECK(path_sum(*w, zero, px) == px);
      for (PointId y = 0; y < w->size(); ++y) {
        auto s = w->add(x, y);
        auto ps = path_sum(*w, px, phi(h, y, kInf));
        REQUIRE(ps.has_value() == s.has_value());
        if (s) CHECK(*ps == phi(h, *s, kInf));
      }
    }
    auto other = PathHost::make(fixtures::t3());
    CHECK_THROWS_AS(path_sum(*w, zero, phi(other, 0, kInf)), Error);
    auto top = path_from_slim(h, {h->nerve().root()}, kInf);
    CHECK_THROWS_AS(path_sum(*w, zero, top), Error);
  }

  TEST_CASE("property: ball and path sums agree with the pointwise oracle") {
    for (auto [levels, width] : std::vector<std::pair<std::vector<Rational>, std::size_t>>{
             {{q(1)}, 4}, {{q(2), q(1)}, 3}, {{q(3), q(2), q(1)}, 3}, {{q(2), q(1, 2)}, 4}}) {
      auto w = WordWindow::make(LevelSpec::unbounded(levels), width);
      monoid_oracle::Window ow(*w);
      const auto& t = w->host()->nerve();
      for (std::size_t a = 0; a < t.size(); ++a) {
        for (std::size_t b = 0; b < t.size(); ++b) {
          const auto expect = ow.ball_sum(a, b);
          const auto got = w->ball_sum(a, b);
          REQUIRE(got.has_value() == expect.has_value());
          if (got) CHECK(*got == *expect);
        }
      }
      auto paths = enumerate_paths(w->host(), kInf, q(0));
      for (const auto& p : paths) {
        for (const auto& r : paths) {
          auto expect = ow.path_sum(p, r, kInf);
          auto got = path_sum(*w, p, r);
          REQUIRE(got.has_value() == expect.has_value());
          if (got) CHECK(ow.as_set(*got) == *expect);
        }
      }
    }
  }

  TEST_CASE("law suites hold on windows") {
    for (auto [levels, width] : std::vector<std::pair<std::vector<Rational>, std::size_t>>{
             {{q(1)}, 3}, {{q(2), q(1)}, 3}, {{q(3), q(2), q(1)}, 3}, {{q(2), q(1)}, 4}}) {
      auto w = WordWindow::make(LevelSpec::unbounded(levels), width);
      CHECK(check_word_laws(*w).ok());
      for (const auto& alpha : {kInf, ExtRational(levels.front())}) {
        auto balls = check_ball_laws(*w, alpha);
        CHECK(balls.ok());
        for (const auto& l : balls.laws) CHECK(l.checked > 0);
      }
      auto paths = check_path_laws(*w, kInf);
      CHECK(paths.ok());
      for (const auto& l : paths.laws) CHECK(l.checked > 0);
    }
  }

  TEST_CASE("finite degrees give a window with mixed bounds") {
    auto w = WordWindow::make(
        LevelSpec::make({q(2), q(1)}, {Degree::finite(2), Degree::unbounded()}), 3);
    CHECK(w->size() == 6);
    CHECK(w->index_of(make_word(w->levels(), {1, 2})) == 5);
    CHECK_FALSE(w->index_of(make_word(w->levels(), {2, 0})));
    CHECK(check_word_laws(*w).ok());
  }

  TEST_CASE("property: path spaces of windows have isometric same-diameter balls") {
    for (auto [levels, width] : std::vector<std::pair<std::vector<Rational>, std::size_t>>{
             {{q(1)}, 3}, {{q(2), q(1)}, 2}, {{q(2), q(1)}, 3}}) {
      auto w = WordWindow::make(LevelSpec::unbounded(levels), width);
      auto ps = path_space(enumerate_paths(w->host(), kInf, q(0)));
      NerveTree t(ps);
      std::map<Rational, std::vector<std::size_t>> by_diam;
      for (std::size_t b = 0; b < t.size(); ++b) by_diam[t.diameter(b)].push_back(b);
      for (const auto& [d, balls] : by_diam) {
        CAPTURE(d);
        const auto first = restrict_space(ps, t.ball(balls.front()).points);
        for (auto b : balls) {
          const auto other = restrict_space(ps, t.ball(b).points);
          REQUIRE(other.size() == first.size());
          CHECK(find_isometric_embedding(first, other));
          CHECK(t.children(b).size() == t.children(balls.front()).size());
        }
      }
      CHECK_FALSE(dominated_ball_failure(ps));
      CHECK_FALSE(ball_into_dominators_failure(ps));
    }
  }
}
