#include <doctest.h>

#include "ciflie/error.hpp"
#include "helpers.hpp"

using namespace testing;

TEST_SUITE("superalgebra") {
  TEST_CASE("codes enumerate F_p^n with coordinate 0 least significant") {
    const auto H = heisenberg3();
    CHECK(H->cardinality() == 9);
    CHECK(H->encode(Vector{1, 0}) == 1);
    CHECK(H->encode(Vector{0, 1}) == 3);
    CHECK(H->encode(Vector{2, 2}) == 8);
    for (Code c = 0; c < H->cardinality(); ++c) CHECK(H->encode(H->decode(c)) == c);
    CHECK_THROWS_AS(H->encode(Vector{3, 0}), DimensionMismatch);
    CHECK_THROWS_AS(H->encode(Vector{1}), DimensionMismatch);
  }

  TEST_CASE("code arithmetic matches vector arithmetic") {
    const auto S = solvable3();
    for (Code x = 0; x < S->cardinality(); ++x) {
      const Vector vx = S->decode(x);
      CHECK(S->neg_code(x) == S->encode(S->neg(vx)));
      for (Elem a = 0; a < 3; ++a) CHECK(S->scale_code(a, x) == S->encode(S->scale(a, vx)));
      for (Code y = 0; y < S->cardinality(); ++y) {
        CHECK(S->add_codes(x, y) == S->encode(S->add(vx, S->decode(y))));
      }
    }
  }

  TEST_CASE("the reference algebras satisfy every axiom") {
    CHECK(validate_superalgebra(*heisenberg3()).ok());
    CHECK(validate_superalgebra(*solvable3()).ok());
    for (int p : {3, 5, 7, 13}) {
      CHECK(validate_superalgebra(algebras::heisenberg(PrimeField(p))).ok());
      CHECK(validate_superalgebra(algebras::solvable3(PrimeField(p))).ok());
    }
    CHECK_THROWS_AS(algebras::solvable3(PrimeField(2)), DomainError);
  }

  TEST_CASE("bracket is bilinear and respects super skew-symmetry on H") {
    const auto H = heisenberg3();
    const Vector e{1, 0}, f{0, 1};
    CHECK(bracket_eval(*H, f, f) == e);
    CHECK(bracket_eval(*H, e, f).is_zero());
    // [2f, f + e] = 2[f,f] = 2e
    CHECK(bracket_eval(*H, Vector{0, 2}, Vector{1, 1}) == Vector{2, 0});
  }

  TEST_CASE("upper triangle fill uses the graded sign") {
    // two even generators: [b2,b1] = -[b1,b2]
    const PrimeField F(5);
    const auto alg = Superalgebra::from_upper_triangle(F, {Parity::even, Parity::even}, {{{0, 1}, Vector{0, 1}}});
    CHECK(alg.structure(1, 0) == Vector{0, 4});
    // two odd generators: [b2,b1] = +[b1,b2]
    const auto odd = Superalgebra::from_upper_triangle(F, {Parity::even, Parity::odd, Parity::odd},
                                                       {{{1, 2}, Vector{1, 0, 0}}});
    CHECK(odd.structure(2, 1) == Vector{1, 0, 0});
  }

  TEST_CASE("grading violation is reported with its basis pair") {
    // [f,f] = f is odd, but odd x odd must land in the even part
    const auto bad = Superalgebra::from_upper_triangle(PrimeField(3), {Parity::even, Parity::odd},
                                                       {{{1, 1}, Vector{0, 1}}});
    const auto report = validate_superalgebra(bad);
    REQUIRE(report.has(Axiom::grading));
    CHECK(report.first(Axiom::grading)->witness == std::vector<std::size_t>{1, 1});
  }

  TEST_CASE("skew-symmetry violation from a hand-built table") {
    const PrimeField F(3);
    // [b1,b2] = b1 and [b2,b1] = b1 for two even generators
    std::vector<Vector> table{Vector{0, 0}, Vector{1, 0}, Vector{1, 0}, Vector{0, 0}};
    const Superalgebra bad(F, {Parity::even, Parity::even}, table);
    const auto report = validate_superalgebra(bad);
    CHECK(report.has(Axiom::skew_symmetry));
    CHECK(to_string(Axiom::skew_symmetry) == "skew-symmetry");
  }

  TEST_CASE("Jacobi violation is detected") {
    // even x,y,z with [x,y]=y, [y,z]=x, [x,z]=0: the cyclic sum is -x
    const PrimeField F(5);
    const auto bad = Superalgebra::from_upper_triangle(
        F, {Parity::even, Parity::even, Parity::even},
        {{{0, 1}, Vector{0, 1, 0}}, {{1, 2}, Vector{1, 0, 0}}});
    const auto report = validate_superalgebra(bad);
    CHECK(report.has(Axiom::jacobi));
    CHECK_FALSE(report.has(Axiom::grading));
  }

  TEST_CASE("abelian algebras and shape errors") {
    const auto A = abelian(3, {Parity::even, Parity::odd});
    CHECK(A->is_abelian());
    CHECK_FALSE(heisenberg3()->is_abelian());
    CHECK_THROWS_AS(Superalgebra::abelian(PrimeField(3), std::vector<Parity>(7, Parity::even)), DomainError);
    CHECK_THROWS_AS(Superalgebra(PrimeField(3), {Parity::even}, {}), DimensionMismatch);
  }

  TEST_CASE("graded split") {
    const auto S = solvable3();
    const auto [v0, v1] = graded_split(*S, Vector{1, 2, 1});
    CHECK(v0 == Vector{1, 2, 0});
    CHECK(v1 == Vector{0, 0, 1});
  }
}
