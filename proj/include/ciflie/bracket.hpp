#pragma once

#include <utility>
#include <vector>

#include "ciflie/cifset.hpp"
#include "ciflie/subspace.hpp"

namespace ciflie {

/// One scalar coordinate of a CIFDegree: amplitude and phase of the membership
/// degree, then of the non-membership degree.
enum class Component { r, w, r_hat, w_hat };

/// Level cuts of [A,B] for one component. Membership components use descending
/// thresholds and cuts span{[a,b] : c_A(a), c_B(b) >= t}; non-membership
/// components use ascending thresholds and <= cuts.
struct LevelCutLadder {
  Component component;
  std::vector<Rational> thresholds;
  std::vector<SubspaceBasis> cuts;  // cuts[i] belongs to thresholds[i]
};

LevelCutLadder level_cut_ladder(const CIFSet& a, const CIFSet& b, Component component);

/// [A,B] via level cuts. Each component is resolved on its own ladder, which is
/// the joint ladder whenever the degrees involved form a chain; when they do
/// not, the result carries a note.
CIFSet bracket_product(const CIFSet& a, const CIFSet& b);

/// Fixed-point realization of [A,B] that uses no span routine. Throws
/// CarrierTooLarge above kOracleMaxCarrier vectors.
inline constexpr Code kOracleMaxCarrier = 729;
CIFSet bracket_product_oracle(const CIFSet& a, const CIFSet& b);

/// ([A0,B0] + [A1,B1], [A0,B1] + [A1,B0]) built from component extensions.
/// Throws NotGraded unless both inputs are Z2-graded CIF subspaces.
std::pair<CIFSet, CIFSet> bracket_graded_parts(const CIFSet& a, const CIFSet& b);

}  // namespace ciflie
