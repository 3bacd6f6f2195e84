#include <doctest.h>

#include "ciflie/error.hpp"
#include "ciflie/generators.hpp"
#include "ciflie/graded_map.hpp"
#include "helpers.hpp"

using namespace testing;

namespace {

const Vector e{1, 0}, e2{2, 0}, f{0, 1}, f2{0, 2};

}  // namespace

TEST_SUITE("cifset") {
  TEST_CASE("construction applies the default and the zero pin") {
    const auto H = heisenberg3();
    const CIFSet t = make(H, {});
    CHECK(t == CIFSet::trivial(H));
    CHECK(t.at(Vector{0, 0}) == CIFDegree::pinned());
    CHECK(t.at(e) == CIFDegree::trivial());

    const CIFDegree d = deg("2/3", "1/2", "1/4", "1/3");
    const CIFSet a = make(H, {{f, d}});
    for (Code x = 1; x < a.size(); ++x) CHECK(a.at_code(x) == (x == H->encode(f) ? d : CIFDegree::trivial()));
  }

  TEST_CASE("construction errors") {
    const auto H = heisenberg3();
    CHECK_THROWS_AS(make(H, {{f, deg("3/4", "1/2", "1/2", "0")}}), BudgetViolation);
    CHECK_THROWS_AS(make(H, {{Vector{0, 0}, CIFDegree::trivial()}}), ZeroPinViolation);
    CHECK_NOTHROW(make(H, {{Vector{0, 0}, CIFDegree::pinned()}}));
    CHECK_THROWS_AS(make(H, {{Vector{0, 0, 1}, CIFDegree::trivial()}}), DimensionMismatch);
    CHECK_THROWS_AS(make(H, {{f, CIFDegree::trivial()}, {f, CIFDegree::trivial()}}), DomainError);
    CHECK_THROWS_AS(CIFSet::from_table(H, std::vector<CIFDegree>(9)), ZeroPinViolation);
    CHECK_THROWS_AS(CIFSet::from_table(H, std::vector<CIFDegree>(3, CIFDegree::pinned())), DimensionMismatch);
    const auto big = std::make_shared<const Superalgebra>(
        Superalgebra::abelian(PrimeField(13), std::vector<Parity>(6, Parity::even)));
    CHECK_THROWS_AS(CIFSet::trivial(big), CarrierTooLarge);
  }

  TEST_CASE("subset order") {
    const auto H = heisenberg3();
    const CIFSet t = CIFSet::trivial(H);
    const CIFSet a = make(H, {{f, deg("1/2", "1/2", "1/4", "1/4")}, {f2, deg("1/2", "1/2", "1/4", "1/4")}});
    CHECK(subset_of(a, a));
    CHECK(subset_of(t, a));
    CHECK_FALSE(subset_of(a, t));
    CHECK_THROWS_AS(subset_of(a, CIFSet::trivial(solvable3())), SpaceMismatch);
  }

  TEST_CASE("homogeneity") {
    const auto H = heisenberg3();
    const CIFSet diag = make(H, {{e, deg("1/3", "1/3", "1/2", "1/2")}, {f, deg("1/2", "1/2", "1/4", "1/4")}});
    CHECK(is_homogeneous(diag));
    // r(y) <= r(x) while w(x) < w(y)
    const CIFSet bad = make(H, {{e, deg("1/2", "1/4", "0", "0")}, {f, deg("1/3", "1/3", "0", "0")}});
    const auto r = is_homogeneous(bad);
    CHECK_FALSE(r);
    CHECK(r.witness.size() == 2);
    CHECK(pair_homogeneous(bad, bad).holds == r.holds);
    CHECK(pair_homogeneous(diag, CIFSet::trivial(H)));
  }

  TEST_CASE("subspace predicate") {
    const auto H = heisenberg3();
    CHECK(is_cif_subspace(CIFSet::trivial(H)));
    // crisp subspace span{f} at TOP
    CHECK(is_cif_subspace(make(H, {{f, CIFDegree::pinned()}, {f2, CIFDegree::pinned()}})));

    const CIFSet s = make(H, {{f, deg("1/2", "1/2", "0", "0")}, {f2, deg("1/4", "1/4", "0", "0")}});
    const auto r = is_cif_subspace(s);
    REQUIRE_FALSE(r);
    REQUIRE(r.witness.size() == 1);
    CHECK(r.witness[0] == f);
    CHECK(r.scalar == 2);
  }

  TEST_CASE("graded predicate") {
    const auto H = heisenberg3();
    CHECK(is_z2_graded(CIFSet::trivial(H)));
    CHECK(is_z2_graded(make(H, {{e, CIFDegree::pinned()}, {e2, CIFDegree::pinned()}})));

    const CIFDegree half = deg("1/2", "1/2", "1/2", "1/2");
    const CIFSet s = make(H, {{e, half}, {e2, half}, {f, half}, {f2, half}}, deg("1/4", "1/4", "1/2", "1/2"));
    const auto r = is_z2_graded(s);
    REQUIRE_FALSE(r);
    CHECK(r.witness[0] == Vector{1, 1});
  }

  TEST_CASE("ideal predicate") {
    const auto H = heisenberg3();
    CHECK(is_cif_ideal(CIFSet::trivial(H)));

    // graded subspace with lambda(f) above lambda(e) = lambda([f,f])
    const CIFDegree hi = deg("2/3", "2/3", "1/4", "1/4");
    const CIFSet n = make(H, {{f, hi}, {f2, hi}}, deg("1/3", "1/3", "1/2", "1/2"));
    CHECK(is_cif_subspace(n));
    CHECK(is_z2_graded(n));
    const auto r = is_cif_ideal(n);
    REQUIRE_FALSE(r);
    CHECK(r.clause == "bracket (membership)");
    CHECK(r.witness == std::vector<Vector>{f, f});

    // on an abelian algebra every graded subspace is an ideal
    const auto A = abelian(3, {Parity::even, Parity::odd});
    CHECK(is_cif_ideal(make(A, {{f, hi}, {f2, hi}}, deg("1/3", "1/3", "1/2", "1/2"))));
  }

  TEST_CASE("component extensions") {
    const auto H = heisenberg3();
    const CIFDegree half = deg("1/2", "1/2", "1/3", "1/3");
    const CIFSet a = make(H, {{f, half}, {f2, half}});
    const CIFSet even = component_extension(a, Parity::even);
    const CIFSet odd = component_extension(a, Parity::odd);
    CHECK(even == CIFSet::trivial(H));
    CHECK(odd.at(f) == half);
    CHECK(odd.at(e) == CIFDegree::trivial());
    CHECK(component_extension(CIFSet::trivial(H), Parity::odd) == CIFSet::trivial(H));
    CHECK(is_direct_sum(even, odd));
    CHECK(intersection(even, odd) == CIFSet::trivial(H));
    CHECK_FALSE(is_direct_sum(a, a));
  }

  TEST_CASE("sum on F_3^1 matches enumerating the three decompositions") {
    const auto L = abelian(3, {Parity::even});
    const CIFSet a = make(L, {{Vector{1}, deg("1/2", "1/2", "1/4", "1/4")}});
    const CIFSet b = make(L, {{Vector{2}, deg("1/3", "1/3", "1/2", "1/2")}});
    const CIFSet s = cif_sum(a, b);
    CHECK(s.at(Vector{0}) == CIFDegree::pinned());
    // 1 = 0+1 = 1+0 = 2+2: only 1+0 clears BOTTOM
    CHECK(s.at(Vector{1}) == deg("1/2", "1/2", "1/4", "1/4"));
    // 2 = 0+2 = 1+1 = 2+0: only 0+2 clears BOTTOM
    CHECK(s.at(Vector{2}) == deg("1/3", "1/3", "1/2", "1/2"));
    CHECK(s.notes().empty());
  }

  TEST_CASE("sum flags a supremum that no decomposition attains") {
    const auto L = abelian(3, {Parity::even});
    const CIFSet a = make(L, {{Vector{1}, deg("1/2", "1/4", "0", "0")}});
    const CIFSet b = make(L, {{Vector{1}, deg("1/4", "1/2", "0", "0")}});
    const CIFSet s = cif_sum(a, b);
    CHECK(s.at(Vector{1}).mem() == Degree(q("1/2"), q("1/2")));
    CHECK(s.notes().size() == 1);
  }

  TEST_CASE("sum agrees with the decomposition oracle on generated inputs") {
    for (const auto& alg : {heisenberg3(), solvable3()}) {
      for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const GenConfig cfg = make_config(alg, seed);
        Rng rng(seed);
        const CIFSet a = gen_set(cfg, rng, SetKind::arbitrary);
        const CIFSet b = gen_set(cfg, rng, SetKind::arbitrary);
        CHECK(cif_sum(a, b) == brute_sum(a, b));
        const CIFSet c = gen_set(cfg, rng, SetKind::subspace);
        CHECK(cif_sum(c, CIFSet::trivial(alg)) == c);
        CHECK(subset_of(c, cif_sum(c, b)));
      }
    }
  }

  TEST_CASE("scalar action") {
    const auto H = heisenberg3();
    const CIFDegree d = deg("1/2", "1/3", "1/4", "1/5");
    const CIFSet a = make(H, {{f, d}});
    CHECK(scalar_action(1, a) == a);
    CHECK(scalar_action(0, a) == CIFSet::trivial(H));
    // 2^{-1} = 2 in F_3, so (2A)(2f) = A(f)
    CHECK(scalar_action(2, a).at(f2) == d);
    CHECK(scalar_action(2, a).at(f) == CIFDegree::trivial());
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      const CIFSet g = gen_arbitrary(make_config(solvable3(), seed));
      for (Elem x = 1; x < 3; ++x) {
        for (Elem y = 1; y < 3; ++y) CHECK(scalar_action(x, scalar_action(y, g)) == scalar_action((x * y) % 3, g));
      }
    }
  }

  TEST_CASE("intersection") {
    const auto H = heisenberg3();
    const CIFSet a = gen_cif_subspace(make_config(H, 3));
    CHECK(intersection(a, a) == a);
    CHECK(intersection(a, CIFSet::trivial(H)) == CIFSet::trivial(H));
  }

  TEST_CASE("image and preimage") {
    const auto H = heisenberg3();
    const CIFDegree d = deg("2/3", "1/2", "1/4", "1/3");
    const CIFSet a = make(H, {{f, d}});
    const auto phi = GradedMap::diagonal(H, {2, 1}, MapKind::anti_homomorphism);
    CHECK(image(phi, a) == a);
    CHECK(image(GradedMap::identity(H), a) == a);
    CHECK(preimage(GradedMap::identity(H), a) == a);

    const GradedMap zero(H, H, {Vector{0, 0}, Vector{0, 0}}, MapKind::plain);
    const CIFSet pulled = preimage(zero, a);
    for (Code x = 0; x < pulled.size(); ++x) CHECK(pulled.at_code(x) == CIFDegree::pinned());
    // off the image the degree is (BOTTOM; TOP)
    const CIFSet pushed = image(zero, a);
    CHECK(pushed.at(f) == CIFDegree::trivial());
    CHECK(pushed.at(Vector{0, 0}) == CIFDegree::pinned());
  }

  TEST_CASE("image matches fiber enumeration; both directions are monotone") {
    const auto S = solvable3();
    Rng rng(77);
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      const GenConfig cfg = make_config(S, seed);
      std::vector<Vector> images;
      for (std::size_t i = 0; i < 3; ++i) {
        Vector v = S->zero();
        for (std::size_t k = 0; k < 3; ++k) {
          if (S->parity(k) == S->parity(i)) v[k] = static_cast<Elem>(rng.below(3));
        }
        images.push_back(v);
      }
      const GradedMap m(S, S, images, MapKind::plain);
      const CIFSet big = gen_arbitrary(cfg);
      const CIFSet small = intersection(big, gen_arbitrary(make_config(S, seed + 1000)));
      const CIFSet img = image(m, big);
      for (Code y = 0; y < S->cardinality(); ++y) {
        const auto xs = fiber(m, S->decode(y));
        if (xs.empty()) {
          CHECK(img.at_code(y) == (y == 0 ? CIFDegree::pinned() : CIFDegree::trivial()));
          continue;
        }
        Rational best[4] = {0, 0, 1, 1};
        for (const auto& x : xs) {
          for (int k = 0; k < 4; ++k) {
            const auto& c = component(big.at(x), k);
            best[k] = k < 2 ? std::max(best[k], c) : std::min(best[k], c);
          }
        }
        CHECK(img.at_code(y) == CIFDegree(Degree(best[0], best[1]), Degree(best[2], best[3])));
      }
      CHECK(subset_of(image(m, small), img));
      CHECK(subset_of(preimage(m, small), preimage(m, big)));
    }
  }
}
