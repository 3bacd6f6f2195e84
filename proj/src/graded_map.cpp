#include "ciflie/graded_map.hpp"

#include <algorithm>

#include "ciflie/error.hpp"

namespace ciflie {

GradedMap::GradedMap(AlgebraPtr source, AlgebraPtr target, std::vector<Vector> images, MapKind kind)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)), kind_(kind) {
  if (!source_ || !target_) throw DomainError("map needs a source and a target algebra");
  if (source_->field() != target_->field()) throw SpaceMismatch("source and target use different fields");
  if (images_.size() != source_->dim()) {
    throw DimensionMismatch("map needs one image per source basis vector");
  }
  for (auto& v : images_) {
    if (v.size() != target_->dim()) throw DimensionMismatch("image has the wrong number of target coordinates");
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = target_->field().reduce(v[k]);
  }
}

GradedMap GradedMap::identity(AlgebraPtr alg, MapKind kind) { return scalar(std::move(alg), 1, kind); }

GradedMap GradedMap::scalar(AlgebraPtr alg, Elem c, MapKind kind) {
  std::vector<Elem> diag(alg->dim(), c);
  return diagonal(std::move(alg), diag, kind);
}

GradedMap GradedMap::diagonal(AlgebraPtr alg, const std::vector<Elem>& diag, MapKind kind) {
  if (diag.size() != alg->dim()) throw DimensionMismatch("diagonal has the wrong length");
  std::vector<Vector> images;
  for (std::size_t i = 0; i < alg->dim(); ++i) {
    Vector v = alg->zero();
    v[i] = alg->field().reduce(diag[i]);
    images.push_back(v);
  }
  return GradedMap(alg, alg, std::move(images), kind);
}

Vector apply_map(const GradedMap& m, const Vector& x) {
  m.source().check_member(x);
  const auto& F = m.target().field();
  std::vector<std::int64_t> acc(m.target().dim(), 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    const Vector& img = m.images()[i];
    for (std::size_t k = 0; k < acc.size(); ++k) acc[k] += static_cast<std::int64_t>(x[i]) * img[k];
  }
  Vector y = m.target().zero();
  for (std::size_t k = 0; k < acc.size(); ++k) y[k] = F.reduce(acc[k]);
  return y;
}

namespace {

// Row-reduced augmented system [M | y] with M = target_dim x source_dim.
struct Echelon {
  std::vector<std::vector<Elem>> rows;  // each of length source_dim + 1
  std::vector<std::size_t> pivots;      // pivot column per row
  bool consistent = true;
};

Echelon eliminate(const GradedMap& m, const Vector& y) {
  const auto& F = m.target().field();
  const std::size_t ns = m.source().dim();
  const std::size_t nt = m.target().dim();
  std::vector<std::vector<Elem>> a(nt, std::vector<Elem>(ns + 1, 0));
  for (std::size_t r = 0; r < nt; ++r) {
    for (std::size_t c = 0; c < ns; ++c) a[r][c] = m.images()[c][r];
    a[r][ns] = y[r];
  }

  Echelon e;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ns && row < nt; ++col) {
    std::size_t sel = row;
    while (sel < nt && a[sel][col] == 0) ++sel;
    if (sel == nt) continue;
    std::swap(a[sel], a[row]);
    const Elem inv = F.inv(a[row][col]);
    for (auto& v : a[row]) v = F.mul(v, inv);
    for (std::size_t r = 0; r < nt; ++r) {
      if (r == row || a[r][col] == 0) continue;
      const Elem c = a[r][col];
      for (std::size_t k = 0; k <= ns; ++k) a[r][k] = F.sub(a[r][k], F.mul(c, a[row][k]));
    }
    e.pivots.push_back(col);
    ++row;
  }
  for (std::size_t r = row; r < nt; ++r) {
    if (a[r][ns] != 0) e.consistent = false;
  }
  a.resize(row);
  e.rows = std::move(a);
  return e;
}

}  // namespace

std::size_t map_rank(const GradedMap& m) { return eliminate(m, m.target().zero()).pivots.size(); }

std::vector<Vector> fiber(const GradedMap& m, const Vector& y) {
  m.target().check_member(y);
  const auto& F = m.source().field();
  const std::size_t ns = m.source().dim();
  const Echelon e = eliminate(m, y);
  if (!e.consistent) return {};

  Vector particular = m.source().zero();
  for (std::size_t r = 0; r < e.rows.size(); ++r) particular[e.pivots[r]] = e.rows[r][ns];

  std::vector<Vector> kernel;
  for (std::size_t free = 0; free < ns; ++free) {
    if (std::find(e.pivots.begin(), e.pivots.end(), free) != e.pivots.end()) continue;
    Vector k = m.source().zero();
    k[free] = 1;
    for (std::size_t r = 0; r < e.rows.size(); ++r) k[e.pivots[r]] = F.neg(e.rows[r][free]);
    kernel.push_back(k);
  }

  std::vector<Vector> out{particular};
  for (const auto& k : kernel) {
    const std::size_t count = out.size();
    for (int a = 1; a < F.modulus(); ++a) {
      const Vector step = m.source().scale(a, k);
      for (std::size_t i = 0; i < count; ++i) out.push_back(m.source().add(out[i], step));
    }
  }
  std::sort(out.begin(), out.end(),
            [&](const Vector& a, const Vector& b) { return m.source().encode(a) < m.source().encode(b); });
  return out;
}

MapValidation validate_map(const GradedMap& m) {
  MapValidation out;
  const auto& src = m.source();
  const auto& tgt = m.target();

  for (std::size_t i = 0; i < src.dim(); ++i) {
    const Vector& img = m.images()[i];
    for (std::size_t k = 0; k < tgt.dim(); ++k) {
      if (img[k] != 0 && tgt.parity(k) != src.parity(i)) {
        out.report.violations.push_back(
            {Axiom::grading, {i}, "image of b" + std::to_string(i + 1) + " leaves its parity component"});
        break;
      }
    }
  }

  if (m.kind() == MapKind::anti_homomorphism) {
    // phi([b_i,b_j]) = -[phi(b_i), phi(b_j)]
    for (std::size_t i = 0; i < src.dim(); ++i) {
      for (std::size_t j = 0; j < src.dim(); ++j) {
        const Vector lhs = apply_map(m, src.structure(i, j));
        const Vector rhs = tgt.neg(bracket_eval(tgt, m.images()[i], m.images()[j]));
        if (lhs != rhs) {
          out.report.violations.push_back({Axiom::anti_homomorphism, {i, j},
                                           "phi([b" + std::to_string(i + 1) + ",b" + std::to_string(j + 1) +
                                               "]) != -[phi(b" + std::to_string(i + 1) + "),phi(b" +
                                               std::to_string(j + 1) + ")]"});
        }
      }
    }
  }

  out.surjective = map_rank(m) == tgt.dim();
  return out;
}

}  // namespace ciflie
