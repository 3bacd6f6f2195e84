#include "ciflie/subspace.hpp"

#include <algorithm>

#include "ciflie/error.hpp"

namespace ciflie {

Vector SubspaceBasis::reduce(Vector x) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Elem c = x[pivots_[r]];
    if (c == 0) continue;
    const Vector& row = rows_[r];
    for (std::size_t k = 0; k < ambient_dim_; ++k) x[k] = field_.sub(x[k], field_.mul(c, row[k]));
  }
  return x;
}

bool SubspaceBasis::contains(const Vector& x) const {
  if (x.size() != ambient_dim_) throw DimensionMismatch("vector length differs from the ambient dimension");
  return reduce(x).is_zero();
}

bool SubspaceBasis::insert(const Vector& x) {
  if (x.size() != ambient_dim_) throw DimensionMismatch("vector length differs from the ambient dimension");
  Vector v = x;
  for (std::size_t k = 0; k < ambient_dim_; ++k) v[k] = field_.reduce(v[k]);
  v = reduce(std::move(v));
  auto lead = std::find_if(v.coords().begin(), v.coords().end(), [](Elem c) { return c != 0; });
  if (lead == v.coords().end()) return false;

  const auto pivot = static_cast<std::size_t>(lead - v.coords().begin());
  const Elem scale = field_.inv(v[pivot]);
  for (std::size_t k = 0; k < ambient_dim_; ++k) v[k] = field_.mul(scale, v[k]);

  // clear the new pivot column from the existing rows
  for (auto& row : rows_) {
    const Elem c = row[pivot];
    if (c == 0) continue;
    for (std::size_t k = 0; k < ambient_dim_; ++k) row[k] = field_.sub(row[k], field_.mul(c, v[k]));
  }

  const auto pos = static_cast<std::size_t>(std::lower_bound(pivots_.begin(), pivots_.end(), pivot) - pivots_.begin());
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
  pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), pivot);
  return true;
}

SubspaceBasis span_closure(const Superalgebra& alg, std::span<const Vector> gens) {
  SubspaceBasis basis(alg.field(), alg.dim());
  for (const auto& g : gens) {
    alg.check_member(g);
    basis.insert(g);
    if (basis.dim() == alg.dim()) break;
  }
  return basis;
}

std::vector<Code> enumerate_codes(const Superalgebra& alg, const SubspaceBasis& basis) {
  const int p = alg.field().modulus();
  std::vector<Code> row_codes;
  for (const auto& r : basis.rows()) row_codes.push_back(alg.encode(r));

  std::vector<Code> out{0};
  for (Code rc : row_codes) {
    const std::size_t count = out.size();
    for (int a = 1; a < p; ++a) {
      const Code scaled = alg.scale_code(a, rc);
      for (std::size_t i = 0; i < count; ++i) out.push_back(alg.add_codes(out[i], scaled));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ciflie
