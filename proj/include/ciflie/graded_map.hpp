#pragma once

#include <cstddef>
#include <vector>

#include "ciflie/superalgebra.hpp"

namespace ciflie {

enum class MapKind { plain, anti_homomorphism };

/// A linear map between superalgebras, stored as the target coordinates of the
/// image of each source basis vector.
class GradedMap {
 public:
  GradedMap(AlgebraPtr source, AlgebraPtr target, std::vector<Vector> images, MapKind kind);

  static GradedMap identity(AlgebraPtr alg, MapKind kind = MapKind::plain);
  static GradedMap scalar(AlgebraPtr alg, Elem c, MapKind kind = MapKind::plain);
  static GradedMap diagonal(AlgebraPtr alg, const std::vector<Elem>& diag, MapKind kind = MapKind::plain);

  const Superalgebra& source() const noexcept { return *source_; }
  const Superalgebra& target() const noexcept { return *target_; }
  const AlgebraPtr& source_ptr() const noexcept { return source_; }
  const AlgebraPtr& target_ptr() const noexcept { return target_; }
  const std::vector<Vector>& images() const noexcept { return images_; }
  MapKind kind() const noexcept { return kind_; }

  friend bool operator==(const GradedMap& a, const GradedMap& b) {
    return *a.source_ == *b.source_ && *a.target_ == *b.target_ && a.images_ == b.images_ && a.kind_ == b.kind_;
  }

 private:
  AlgebraPtr source_;
  AlgebraPtr target_;
  std::vector<Vector> images_;
  MapKind kind_;
};

struct MapValidation {
  ValidationReport report;  // grading and (for anti-homomorphisms) the anti condition
  bool surjective = false;

  bool ok() const noexcept { return report.ok(); }
};

MapValidation validate_map(const GradedMap& m);

Vector apply_map(const GradedMap& m, const Vector& x);

/// Every source vector mapped to y, in ascending code order (empty when y is not in the image).
std::vector<Vector> fiber(const GradedMap& m, const Vector& y);

/// Rank of the map's matrix.
std::size_t map_rank(const GradedMap& m);

}  // namespace ciflie
