#include <doctest.h>

#include "ciflie/error.hpp"
#include "helpers.hpp"

using namespace testing;

TEST_SUITE("degree") {
  TEST_CASE("rationals parse exactly and print as num/den") {
    CHECK(to_string(q("2/4")) == "1/2");
    CHECK(to_string(q("1")) == "1/1");
    CHECK(to_string(q("0")) == "0/1");
    CHECK(to_string(q("+3/9")) == "1/3");
    CHECK(to_string(q("-2/-4")) == "1/2");
    CHECK_THROWS_AS(q("1/0"), DomainError);
    CHECK_THROWS_AS(q("1/"), DomainError);
    CHECK_THROWS_AS(q("/2"), DomainError);
    CHECK_THROWS_AS(q("0.5"), DomainError);
    CHECK_THROWS_AS(q(""), DomainError);
    CHECK_THROWS_AS(q("1000000001"), DomainError);
    CHECK(q("1000000000/1000000000") == Rational(1));
  }

  TEST_CASE("degrees live in the unit square") {
    CHECK_THROWS_AS(Degree(q("3/2"), q("0")), DomainError);
    CHECK_THROWS_AS(Degree(q("0"), q("-1/3")), DomainError);
    CHECK(Degree::top() == Degree(1, 1));
    CHECK(Degree::bottom() == Degree(0, 0));
  }

  TEST_CASE("componentwise order is partial; meet and join are bounds") {
    const Degree a(q("1/2"), q("1/4")), b(q("1/3"), q("1/3"));
    CHECK_FALSE(deg_leq(a, b));
    CHECK_FALSE(deg_leq(b, a));
    CHECK(deg_meet(a, b) == Degree(q("1/3"), q("1/4")));
    CHECK(deg_join(a, b) == Degree(q("1/2"), q("1/3")));
    CHECK(deg_leq(deg_meet(a, b), a));
    CHECK(deg_leq(b, deg_join(a, b)));
  }

  TEST_CASE("lattice laws on a grid of twelfths") {
    std::vector<Degree> grid;
    for (int r = 0; r <= 12; r += 3) {
      for (int w = 0; w <= 12; w += 4) grid.emplace_back(Rational(r, 12), Rational(w, 12));
    }
    for (const auto& x : grid) {
      CHECK(deg_meet(x, x) == x);
      for (const auto& y : grid) {
        CHECK(deg_meet(x, y) == deg_meet(y, x));
        CHECK(deg_join(x, deg_meet(x, y)) == x);
        CHECK(deg_leq(x, y) == (deg_meet(x, y) == x));
        for (const auto& z : grid) CHECK(deg_join(deg_join(x, y), z) == deg_join(x, deg_join(y, z)));
      }
    }
  }

  TEST_CASE("family bounds report attainment") {
    const std::vector<Degree> chain{Degree(q("1/4"), q("1/4")), Degree(q("1/2"), q("1/2"))};
    CHECK(family_sup(chain).attained);
    CHECK(family_sup(chain).value == chain[1]);
    const std::vector<Degree> antichain{Degree(q("1/2"), q("1/4")), Degree(q("1/3"), q("1/3"))};
    const auto s = family_sup(antichain);
    CHECK_FALSE(s.attained);
    CHECK(s.value == Degree(q("1/2"), q("1/3")));
    CHECK_FALSE(family_inf(antichain).attained);
    CHECK_THROWS_AS(family_sup({}), DomainError);
  }

  TEST_CASE("CIF degrees obey the amplitude budget") {
    CHECK_NOTHROW(deg("2/3", "1/2", "1/3", "1"));
    CHECK_THROWS_AS(deg("3/4", "1/2", "1/2", "0"), BudgetViolation);
    CHECK(CIFDegree::trivial() == CIFDegree(Degree::bottom(), Degree::top()));
    CHECK(CIFDegree::pinned() == CIFDegree(Degree::top(), Degree::bottom()));
    CHECK(to_string(deg("2/3", "1/2", "1/4", "1/3")) == "(2/3,1/2);(1/4,1/3)");
  }
}
