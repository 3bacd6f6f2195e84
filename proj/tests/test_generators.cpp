#include <doctest.h>

#include "ciflie/error.hpp"
#include "ciflie/generators.hpp"
#include "ciflie/subspace.hpp"
#include "helpers.hpp"

using namespace testing;

TEST_SUITE("generators") {
  TEST_CASE("pools are strict chains within the budget") {
    for (int len = 2; len <= 4; ++len) {
      for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const GenConfig cfg = make_config(heisenberg3(), seed, len);
        CHECK(pool_is_valid(cfg.degree_pool));
        CHECK(cfg.degree_pool.size() >= static_cast<std::size_t>(len + 1));
        CHECK(cfg.degree_pool.size() <= static_cast<std::size_t>(len + 2));
      }
    }
    CHECK_FALSE(pool_is_valid({deg("1/2", "1/2", "0", "0"), deg("1/2", "2/3", "0", "0")}));
  }

  TEST_CASE("chain length outside 2..4 is rejected") {
    CHECK_THROWS_AS(make_config(heisenberg3(), 0, 1), DomainError);
    CHECK_THROWS_AS(make_config(heisenberg3(), 0, 5), DomainError);
  }

  TEST_CASE("each kind satisfies its predicate") {
    for (const auto& alg : {heisenberg3(), solvable3(), abelian(5, {Parity::even, Parity::odd, Parity::odd})}) {
      for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const GenConfig cfg = make_config(alg, seed);
        Rng rng(seed);
        const CIFSet s = gen_set(cfg, rng, SetKind::subspace);
        const CIFSet g = gen_set(cfg, rng, SetKind::graded_subspace);
        const CIFSet i = gen_set(cfg, rng, SetKind::ideal);
        const CIFSet a = gen_set(cfg, rng, SetKind::arbitrary);
        CHECK(is_cif_subspace(s));
        CHECK(is_cif_subspace(g));
        CHECK(is_z2_graded(g));
        CHECK(is_cif_ideal(i));
        for (const auto* x : {&s, &g, &i, &a}) {
          CHECK(is_homogeneous(*x));
          CHECK(x->at_code(0) == CIFDegree::pinned());
          for (const auto* y : {&s, &g, &i, &a}) CHECK(pair_homogeneous(*x, *y));
        }
      }
    }
  }

  TEST_CASE("generation is deterministic") {
    const auto S = solvable3();
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      CHECK(make_config(S, seed).degree_pool == make_config(S, seed).degree_pool);
      CHECK(gen_cif_ideal(make_config(S, seed)) == gen_cif_ideal(make_config(S, seed)));
      CHECK(gen_arbitrary(make_config(S, seed)) == gen_arbitrary(make_config(S, seed)));
      CHECK(gen_anti_hom(make_config(S, seed)) == gen_anti_hom(make_config(S, seed)));
    }
  }

  TEST_CASE("ideal closure") {
    const auto S = solvable3();
    const std::vector<Vector> gens{Vector{0, 1, 0}};
    const SubspaceBasis b = ideal_closure(*S, gens);
    for (const auto& row : b.rows()) {
      for (std::size_t i = 0; i < S->dim(); ++i) {
        CHECK(b.contains(bracket_eval(*S, row, S->basis(i))));
        CHECK(b.contains(bracket_eval(*S, S->basis(i), row)));
      }
    }
    CHECK(b.contains(gens[0]));
    // [e1, e2] = e2 and nothing else reaches back out of span{e2}
    CHECK(b.dim() == 1);
    const std::vector<Vector> odd{Vector{0, 0, 1}};
    CHECK(ideal_closure(*S, odd).dim() == 2);
  }

  TEST_CASE("anti-homomorphisms are valid and surjective") {
    for (const auto& alg : {heisenberg3(), solvable3(), abelian(3, {Parity::even, Parity::odd})}) {
      for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const GradedMap m = gen_anti_hom(make_config(alg, seed));
        const auto v = validate_map(m);
        CHECK(m.kind() == MapKind::anti_homomorphism);
        CHECK(v.ok());
        CHECK(v.surjective);
      }
    }
  }
}
