#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ciflie/degree.hpp"
#include "ciflie/graded_map.hpp"
#include "ciflie/superalgebra.hpp"

namespace ciflie {

/// A complex intuitionistic fuzzy set on a finite superalgebra: one CIFDegree
/// per vector, indexed by Code, with the zero vector pinned to (TOP; BOTTOM).
///
/// Notes are provenance annotations (for instance a non-attained sup) and take
/// no part in equality.
class CIFSet {
 public:
  static constexpr Code kMaxCarrier = 65536;

  /// Validates the table size and the zero pin.
  static CIFSet from_table(AlgebraPtr space, std::vector<CIFDegree> table);
  static CIFSet trivial(AlgebraPtr space);

  const Superalgebra& space() const noexcept { return *space_; }
  const AlgebraPtr& space_ptr() const noexcept { return space_; }

  const CIFDegree& at(const Vector& x) const { return table_[space_->encode(x)]; }
  const CIFDegree& at_code(Code c) const { return table_[c]; }
  const Degree& mem(Code c) const { return table_[c].mem(); }
  const Degree& non(Code c) const { return table_[c].non(); }
  std::span<const CIFDegree> table() const noexcept { return table_; }
  Code size() const noexcept { return table_.size(); }

  const std::vector<std::string>& notes() const noexcept { return notes_; }
  void add_note(std::string note) { notes_.push_back(std::move(note)); }

  friend bool operator==(const CIFSet& a, const CIFSet& b) {
    return (a.space_ == b.space_ || *a.space_ == *b.space_) && a.table_ == b.table_;
  }

 private:
  CIFSet(AlgebraPtr space, std::vector<CIFDegree> table) : space_(std::move(space)), table_(std::move(table)) {}

  AlgebraPtr space_;
  std::vector<CIFDegree> table_;
  std::vector<std::string> notes_;
};

/// Throws CarrierTooLarge when the algebra has more than CIFSet::kMaxCarrier vectors.
void check_carrier(const Superalgebra& alg);

/// Total table with unlisted vectors mapped to `default_degree`. An explicit
/// zero entry must equal (TOP; BOTTOM). Duplicate vectors are rejected.
CIFSet make_cifset(AlgebraPtr space, std::span<const std::pair<Vector, CIFDegree>> entries,
                   const CIFDegree& default_degree);

/// Outcome of a structural predicate, with the first counterexample on failure.
struct PredicateReport {
  bool holds = true;
  std::string clause;           // which condition failed
  std::vector<Vector> witness;  // vectors involved
  std::optional<Elem> scalar;   // scalar involved, if any

  explicit operator bool() const noexcept { return holds; }
  std::string describe() const;
};

/// lambda_A <= lambda_B and rho_A >= rho_B everywhere.
bool subset_of(const CIFSet& a, const CIFSet& b);

/// r(x) <= r(y) iff w(x) <= w(y) on each side, for x in A and y in B.
PredicateReport pair_homogeneous(const CIFSet& a, const CIFSet& b);
PredicateReport is_homogeneous(const CIFSet& a);

PredicateReport is_cif_subspace(const CIFSet& a);
PredicateReport is_z2_graded(const CIFSet& a);
/// Subspace, Z2-graded, then lambda([x,y]) >= lambda(x) v lambda(y) and rho([x,y]) <= rho(x) ^ rho(y).
PredicateReport is_cif_ideal(const CIFSet& a);

/// Restriction of A to the chosen parity component, extended by (BOTTOM; TOP).
CIFSet component_extension(const CIFSet& a, Parity parity);

/// lambda_{A+B}(x) = sup_{x=a+b} lambda_A(a) ^ lambda_B(b), rho dually.
CIFSet cif_sum(const CIFSet& a, const CIFSet& b);

bool is_direct_sum(const CIFSet& a, const CIFSet& b);

/// lambda_{cA}(x) = lambda_A(c^{-1} x) for c != 0; the trivial set for c = 0.
CIFSet scalar_action(Elem c, const CIFSet& a);

CIFSet intersection(const CIFSet& a, const CIFSet& b);

/// Sup (resp. inf) over each fiber; (BOTTOM; TOP) off the image.
CIFSet image(const GradedMap& m, const CIFSet& a);
CIFSet preimage(const GradedMap& m, const CIFSet& b);

/// Throws SpaceMismatch unless both sets live on the same algebra.
void require_same_space(const CIFSet& a, const CIFSet& b);

}  // namespace ciflie
