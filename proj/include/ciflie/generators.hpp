#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ciflie/cifset.hpp"
#include "ciflie/graded_map.hpp"
#include "ciflie/rng.hpp"
#include "ciflie/subspace.hpp"

namespace ciflie {

/// Shared randomness for one family of generated objects. Sets drawn from the
/// same config take their degrees from one chain, which keeps them pairwise
/// homogeneous.
struct GenConfig {
  std::uint64_t seed = 0;
  AlgebraPtr algebra;
  int chain_length = 3;                 // deepest crisp chain, 2..4
  std::vector<CIFDegree> degree_pool;   // ascending in mem, descending in non
};

/// Builds a pool of chain_length + 1 intermediate degrees (denominator 12),
/// sometimes topped by (TOP; BOTTOM). Throws DomainError for chain lengths
/// outside 2..4.
GenConfig make_config(AlgebraPtr algebra, std::uint64_t seed, int chain_length = 3);

/// True when the pool is a strict chain in all four components.
bool pool_is_valid(const std::vector<CIFDegree>& pool);

enum class SetKind { arbitrary, subspace, graded_subspace, ideal };

/// A random set of the given kind. Subspaces come from crisp chains
/// W_1 > ... > W_k > {0}, one pool degree per level, deeper levels higher.
CIFSet gen_set(const GenConfig& cfg, Rng& rng, SetKind kind);

CIFSet gen_arbitrary(const GenConfig& cfg);
CIFSet gen_cif_subspace(const GenConfig& cfg);
CIFSet gen_graded_subspace(const GenConfig& cfg);
CIFSet gen_cif_ideal(const GenConfig& cfg);
std::pair<CIFSet, CIFSet> gen_pair(const GenConfig& cfg, SetKind kind = SetKind::subspace);

/// Smallest graded ideal containing the given homogeneous generators.
SubspaceBasis ideal_closure(const Superalgebra& alg, std::span<const Vector> gens);

/// A surjective anti-homomorphism V -> V: random invertible grading-preserving
/// matrices filtered by validate_map, then -id, then the identity on abelian
/// algebras. Throws Error if nothing qualifies.
GradedMap gen_anti_hom(const GenConfig& cfg, Rng& rng);
GradedMap gen_anti_hom(const GenConfig& cfg);

}  // namespace ciflie
