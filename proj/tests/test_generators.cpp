#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "ultra/embeddings.hpp"
#include "ultra/error.hpp"
#include "ultra/generators.hpp"
#include "ultra/tree.hpp"

using namespace ultra;
using fixtures::q;

namespace {

SpectrumSet v(std::vector<Rational> values) { return make_spectrum(std::move(values)); }

// Parses "(c0,c1,...)".
std::vector<std::uint64_t> coords(const std::string& label) {
  std::vector<std::uint64_t> out;
  std::string cur;
  for (char c : label.substr(1, label.size() - 2)) {
    if (c == ',') {
      out.push_back(std::stoull(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(std::stoull(cur));
  return out;
}

}  // namespace

TEST_SUITE("generators") {
  TEST_CASE("scheme materialization examples") {
    auto one = TreeScheme::make(SchemeNode{q(1), Degree::unbounded(), {}});
    auto s1 = scheme_materialize(one, 3);
    CHECK(s1.size() == 3);
    CHECK(spectrum(s1).values == std::vector<Rational>{q(0), q(1)});

    auto two = TreeScheme::make(
        SchemeNode{q(2), Degree::unbounded(), {SchemeNode{q(1), Degree::unbounded(), {}}}});
    auto s2 = scheme_materialize(two, 2);
    CHECK(s2.size() == 4);
    CHECK(s2.dist(0, 1) == 1);
    CHECK(s2.dist(0, 2) == 2);
    CHECK(s2.dist(2, 3) == 1);
    CHECK_THROWS_AS(scheme_materialize(two, 1), Error);
  }

  TEST_CASE("child types cycle through sons and finite degrees are kept") {
    SchemeNode a{q(1), Degree::unbounded(), {}};
    SchemeNode leaf{q(0), Degree::finite(1), {}};
    auto s = scheme_materialize(TreeScheme::make(SchemeNode{q(2), Degree::finite(3), {a, leaf}}), 2);
    // Sons: type a (2 points), point, type a (2 points).
    CHECK(s.size() == 5);
    CHECK(s.label(2) == "(1)");
    CHECK(s.dist(0, 1) == 1);
    CHECK(s.dist(3, 4) == 1);
    CHECK(s.dist(0, 2) == 2);
  }

  TEST_CASE("invalid schemes are rejected") {
    CHECK_THROWS_AS(TreeScheme::make(SchemeNode{q(1), Degree::finite(1), {}}), ValidationError);
    CHECK_THROWS_AS(
        TreeScheme::make(SchemeNode{q(1), Degree::unbounded(), {SchemeNode{q(2), {}, {}}}}),
        ValidationError);
    CHECK_THROWS_AS(TreeScheme::make(SchemeNode{q(0), Degree::unbounded(),
                                                {SchemeNode{q(0), {}, {}}}}),
                    ValidationError);
  }

  TEST_CASE("materialization is monotone in width") {
    std::vector<TreeScheme> schemes{
        uniform_scheme(LevelSpec::unbounded({q(2), q(1)})),
        uniform_scheme(LevelSpec::make({q(3), q(1)}, {Degree::finite(2), Degree::unbounded()})),
        TreeScheme::make(SchemeNode{q(3),
                                    Degree::unbounded(),
                                    {SchemeNode{q(2), Degree::unbounded(), {}},
                                     SchemeNode{q(1), Degree::finite(2), {}}}}),
    };
    for (const auto& s : schemes) {
      auto small = scheme_materialize(s, 2), large = scheme_materialize(s, 3);
      CHECK(embeds(small, large));
    }
  }

  TEST_CASE("max-space") {
    auto s = max_space(v({q(0), q(1), q(2)}));
    CHECK(s.size() == 3);
    CHECK(s.dist(0, 1) == 1);
    CHECK(s.dist(0, 2) == 2);
    CHECK(s.dist(1, 2) == 2);
    CHECK(max_space(v({q(0)})).size() == 1);
    CHECK(spectrum(max_space(v({q(0), q(1, 2), q(3)}))).values ==
          std::vector<Rational>{q(0), q(1, 2), q(3)});
    CHECK_THROWS_AS(max_space(v({q(1)})), Error);
  }

  TEST_CASE("omega-space") {
    auto s = omega_space(LevelSpec::unbounded({q(2), q(1)}), 2);
    CHECK(s.labels() == std::vector<std::string>{"(0,0)", "(0,1)", "(1,0)", "(1,1)"});
    CHECK(s.dist(0, 1) == 1);
    CHECK(s.dist(0, 3) == 2);
    auto e = omega_space(LevelSpec::unbounded({q(1)}), 5);
    CHECK(e.size() == 5);
    CHECK(spectrum(e).values == std::vector<Rational>{q(0), q(1)});
    CHECK_THROWS_AS(LevelSpec::unbounded({q(1), q(2)}), Error);
    CHECK_THROWS_AS(LevelSpec::unbounded({}), Error);
  }

  TEST_CASE("property: omega distance is the weight of the least differing level") {
    std::vector<LevelSpec> specs{
        LevelSpec::unbounded({q(3), q(2), q(1)}),
        LevelSpec::make({q(5, 2), q(1, 3)}, {Degree::finite(2), Degree::finite(4)}),
        LevelSpec::make({q(4), q(2), q(1)},
                        {Degree::unbounded(), Degree::finite(2), Degree::unbounded()}),
    };
    for (const auto& spec : specs) {
      for (std::size_t width : {2u, 3u}) {
        auto s = omega_space(spec, width);
        // omega_space caps finite degrees at the width; the scheme does not.
        std::vector<Degree> capped;
        for (const auto& dg : spec.degrees)
          capped.push_back(dg.is_unbounded() ? dg
                                             : Degree::finite(std::min<std::size_t>(*dg.count, width)));
        CHECK(s == scheme_materialize(uniform_scheme(LevelSpec::make(spec.levels, capped)), width));
        for (PointId a = 0; a < s.size(); ++a) {
          auto ca = coords(s.label(a));
          for (std::size_t l = 0; l < ca.size(); ++l) {
            const auto bound = spec.degrees[l].is_unbounded() ? width
                                                              : std::min<std::size_t>(
                                                                    *spec.degrees[l].count, width);
            CHECK(ca[l] < bound);
          }
          for (PointId b = 0; b < s.size(); ++b) {
            auto cb = coords(s.label(b));
            Rational expect(0);
            for (std::size_t l = 0; l < ca.size(); ++l) {
              if (ca[l] != cb[l]) {
                expect = spec.levels[l];
                break;
              }
            }
            CHECK(s.dist(a, b) == expect);
          }
        }
      }
    }
  }

  TEST_CASE("ultv approximations") {
    CHECK(ultv_approx(v({q(0), q(1), q(2)}), 2) ==
          omega_space(LevelSpec::unbounded({q(2), q(1)}), 2));
    CHECK(embeds(fixtures::t3(), ultv_approx(v({q(0), q(1), q(2)}), 2)));
    auto e = ultv_approx(v({q(0), q(1)}), 3);
    CHECK(e.size() == 3);
    CHECK(ultv_approx(v({q(0)}), 4).size() == 1);
  }

  TEST_CASE("property: spectra of generated spaces equal V") {
    std::vector<SpectrumSet> vs{v({q(0)}), v({q(0), q(1)}), v({q(0), q(1, 2), q(3)}),
                                v({q(0), q(1), q(2), q(7, 2)})};
    for (const auto& s : vs) {
      CHECK(spectrum(max_space(s)) == s);
      CHECK(spectrum(ultv_approx(s, 2)) == s);
      CHECK(spectrum(ultv_approx(s, 3)) == s);
    }
  }

  TEST_CASE("property: finite ultv approximations are point-homogeneous") {
    CHECK(is_point_homogeneous(ultv_approx(v({q(0), q(1), q(2)}), 3)));
    CHECK(is_point_homogeneous(ultv_approx(v({q(0), q(1), q(2), q(3)}), 2)));
    CHECK(is_point_homogeneous(omega_space(LevelSpec::unbounded({q(2), q(1)}), 2)));
    CHECK_FALSE(is_point_homogeneous(fixtures::t3()));
  }

  TEST_CASE("property: small spaces with spectrum in V embed into the approximation") {
    std::mt19937_64 rng(31);
    auto target = ultv_approx(v({q(0), q(1), q(2), q(3)}), 3);
    int tried = 0;
    for (int it = 0; it < 40; ++it) {
      auto d = oracle::random_ultrametric(rng, 6, 3);
      // Relabel distances onto {1,2,3} preserving order.
      std::set<Rational> sp = oracle::spectrum(d);
      std::map<Rational, Rational> to;
      std::int64_t k = 0;
      for (const auto& r : sp) to[r] = Rational(k++);
      for (auto& row : d)
        for (auto& x : row) x = to[x];
      auto s = validate_ultrametric(d);
      // Branching of at most 3 sons per ball is what width 3 allows.
      bool fits = true;
      for (const auto& b : nerve(s))
        if (b.points.size() > 1 && sons(s, b).size() > 3) fits = false;
      if (!fits) continue;
      ++tried;
      CHECK(embeds(s, target));
    }
    CHECK(tried > 10);
  }

  TEST_CASE("prop2 families and spaces") {
    auto fams = prop2_families(v({q(0), q(1), q(2)}), 2);
    REQUIRE(fams.size() == 2);
    CHECK(fams[0].values == std::vector<Rational>{q(0)});
    CHECK(fams[1].values == std::vector<Rational>{q(0), q(1)});
    auto s = prop2_space(v({q(0), q(1), q(2)}), 2, 2);
    CHECK(s.size() == 3);
    CHECK(spectrum(s).values == std::vector<Rational>{q(0), q(1), q(2)});
    CHECK(s.dist(0, 1) == 2);
    CHECK(s.dist(1, 2) == 1);

    auto single = prop2_families(v({q(0), q(5)}), 4);
    CHECK(single.size() == 1);
    auto blocks = prop2_space(v({q(0), q(5)}), 3, 4);
    CHECK(blocks.size() == 1);

    auto four = prop2_families(v({q(0), q(1), q(2), q(3)}), 10);
    REQUIRE(four.size() == 4);
    CHECK(four[1].values == std::vector<Rational>{q(0), q(1)});
    CHECK(four[2].values == std::vector<Rational>{q(0), q(2)});
    CHECK(four[3].values == std::vector<Rational>{q(0), q(1), q(2)});
    CHECK(spectrum(prop2_space(v({q(0), q(1), q(2), q(3)}), 2, 10)).values ==
          std::vector<Rational>{q(0), q(1), q(2), q(3)});
    CHECK_THROWS_AS(prop2_families(v({q(0)}), 2), Error);
  }
}
