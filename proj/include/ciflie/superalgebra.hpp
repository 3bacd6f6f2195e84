#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ciflie/field.hpp"

namespace ciflie {

enum class Parity : std::uint8_t { even = 0, odd = 1 };

inline Parity operator+(Parity a, Parity b) noexcept {
  return static_cast<Parity>(static_cast<int>(a) ^ static_cast<int>(b));
}

/// Coordinates of a vector relative to the fixed basis of a superalgebra.
class Vector {
 public:
  Vector() = default;
  explicit Vector(std::vector<Elem> coords) : coords_(std::move(coords)) {}
  Vector(std::initializer_list<Elem> coords) : coords_(coords) {}

  static Vector zero(std::size_t n) { return Vector(std::vector<Elem>(n, 0)); }

  std::size_t size() const noexcept { return coords_.size(); }
  Elem operator[](std::size_t i) const { return coords_[i]; }
  Elem& operator[](std::size_t i) { return coords_[i]; }
  std::span<const Elem> coords() const noexcept { return coords_; }

  bool is_zero() const noexcept;

  friend bool operator==(const Vector&, const Vector&) = default;
  friend auto operator<=>(const Vector&, const Vector&) = default;

 private:
  std::vector<Elem> coords_;
};

std::string to_string(const Vector& v);

/// Index of a vector in the lexicographic enumeration of F_p^n (coordinate 0 is least significant).
using Code = std::uint64_t;

/// A finite-dimensional Z2-graded algebra over F_p given by structure constants.
///
/// Construction only checks shapes; the Lie superalgebra axioms are checked
/// by validate_superalgebra so that invalid tables can be inspected.
class Superalgebra {
 public:
  static constexpr std::size_t kMaxDim = 6;

  /// `structure[i * n + j]` holds the coordinates of [b_i, b_j].
  Superalgebra(PrimeField field, std::vector<Parity> parity, std::vector<Vector> structure);

  static Superalgebra abelian(PrimeField field, std::vector<Parity> parity);

  /// Builds the full table from the entries with i <= j; entries with i > j are
  /// filled by super skew-symmetry [b_j, b_i] = -(-1)^{|i||j|} [b_i, b_j].
  /// Missing pairs are zero.
  static Superalgebra from_upper_triangle(
      PrimeField field, std::vector<Parity> parity,
      const std::map<std::pair<std::size_t, std::size_t>, Vector>& upper);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return parity_.size(); }
  Parity parity(std::size_t i) const { return parity_[i]; }
  const std::vector<Parity>& parities() const noexcept { return parity_; }
  const Vector& structure(std::size_t i, std::size_t j) const { return structure_[i * dim() + j]; }
  bool is_abelian() const noexcept;

  Code cardinality() const noexcept { return cardinality_; }
  Vector decode(Code code) const;
  Code encode(const Vector& v) const;

  Vector zero() const { return Vector::zero(dim()); }
  Vector basis(std::size_t i) const;

  Vector add(const Vector& x, const Vector& y) const;
  Vector sub(const Vector& x, const Vector& y) const;
  Vector neg(const Vector& x) const;
  Vector scale(Elem a, const Vector& x) const;

  Code add_codes(Code x, Code y) const noexcept;
  Code scale_code(Elem a, Code x) const noexcept;
  Code neg_code(Code x) const noexcept;

  /// Throws DimensionMismatch unless v has dim() coordinates in [0, p).
  void check_member(const Vector& v) const;

  friend bool operator==(const Superalgebra& a, const Superalgebra& b) {
    return a.field_ == b.field_ && a.parity_ == b.parity_ && a.structure_ == b.structure_;
  }

 private:
  PrimeField field_;
  std::vector<Parity> parity_;
  std::vector<Vector> structure_;
  Code cardinality_ = 1;
};

using AlgebraPtr = std::shared_ptr<const Superalgebra>;

/// Bilinear extension of the structure constants.
Vector bracket_eval(const Superalgebra& alg, const Vector& x, const Vector& y);

/// Returns (x_0, x_1): the even and odd coordinate projections of x.
std::pair<Vector, Vector> graded_split(const Superalgebra& alg, const Vector& x);

enum class Axiom { grading, skew_symmetry, jacobi, anti_homomorphism };

std::string to_string(Axiom a);

struct Violation {
  Axiom axiom;
  std::vector<std::size_t> witness;  // basis indices
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
  bool has(Axiom a) const noexcept;
  const Violation* first(Axiom a) const noexcept;
};

/// Checks grading compatibility, super skew-symmetry and the graded Jacobi identity
/// on all homogeneous basis pairs and triples.
ValidationReport validate_superalgebra(const Superalgebra& alg);

/// Well-known algebras used by tests, generators and documentation.
namespace algebras {

/// e (even), f (odd), [f,f] = e.
Superalgebra heisenberg(PrimeField field);

/// e1, e2 (even), f (odd): [e1,e2] = e2, [e1,f] = f/2, [f,f] = e2 (needs p odd).
Superalgebra solvable3(PrimeField field);

}  // namespace algebras

}  // namespace ciflie
