#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ciflie/field.hpp"
#include "ciflie/superalgebra.hpp"

namespace ciflie {

/// A subspace of F_p^n held as a reduced row-echelon basis: nonzero rows,
/// strictly increasing pivot columns, pivot entries equal to one and zero
/// above and below every pivot.
class SubspaceBasis {
 public:
  SubspaceBasis(PrimeField field, std::size_t ambient_dim) : field_(field), ambient_dim_(ambient_dim) {}

  const PrimeField& field() const noexcept { return field_; }
  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  std::size_t dim() const noexcept { return rows_.size(); }
  const std::vector<Vector>& rows() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  bool contains(const Vector& x) const;

  /// Adds a generator, keeping the basis reduced. Returns true if the span grew.
  bool insert(const Vector& x);

  friend bool operator==(const SubspaceBasis& a, const SubspaceBasis& b) {
    return a.field_ == b.field_ && a.ambient_dim_ == b.ambient_dim_ && a.rows_ == b.rows_;
  }

 private:
  Vector reduce(Vector x) const;

  PrimeField field_;
  std::size_t ambient_dim_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

/// Reduced row-echelon basis of the linear span of `gens`.
SubspaceBasis span_closure(const Superalgebra& alg, std::span<const Vector> gens);

/// All p^dim elements of the subspace, in ascending code order.
std::vector<Code> enumerate_codes(const Superalgebra& alg, const SubspaceBasis& basis);

}  // namespace ciflie
