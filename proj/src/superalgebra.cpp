#include "ciflie/superalgebra.hpp"

#include <sstream>

#include "ciflie/error.hpp"

namespace ciflie {

bool Vector::is_zero() const noexcept {
  for (Elem c : coords_) {
    if (c != 0) return false;
  }
  return true;
}

std::string to_string(const Vector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ')';
  return os.str();
}

Superalgebra::Superalgebra(PrimeField field, std::vector<Parity> parity, std::vector<Vector> structure)
    : field_(field), parity_(std::move(parity)), structure_(std::move(structure)) {
  const std::size_t n = parity_.size();
  if (n < 1 || n > kMaxDim) {
    throw DomainError("superalgebra dimension must be in [1, 6], got " + std::to_string(n));
  }
  if (structure_.size() != n * n) {
    throw DimensionMismatch("structure table must have n*n entries");
  }
  for (auto& v : structure_) {
    if (v.size() != n) throw DimensionMismatch("structure constant vector has wrong length");
    for (std::size_t k = 0; k < n; ++k) v[k] = field_.reduce(v[k]);
  }
  for (std::size_t i = 0; i < n; ++i) cardinality_ *= static_cast<Code>(field_.modulus());
}

Superalgebra Superalgebra::abelian(PrimeField field, std::vector<Parity> parity) {
  const std::size_t n = parity.size();
  return Superalgebra(field, std::move(parity), std::vector<Vector>(n * n, Vector::zero(n)));
}

Superalgebra Superalgebra::from_upper_triangle(
    PrimeField field, std::vector<Parity> parity,
    const std::map<std::pair<std::size_t, std::size_t>, Vector>& upper) {
  const std::size_t n = parity.size();
  std::vector<Vector> table(n * n, Vector::zero(n));
  for (const auto& [key, value] : upper) {
    auto [i, j] = key;
    if (i > j || j >= n) throw DomainError("upper-triangle entry out of range");
    if (value.size() != n) throw DimensionMismatch("structure constant vector has wrong length");
    Vector v = value;
    for (std::size_t k = 0; k < n; ++k) v[k] = field.reduce(v[k]);
    table[i * n + j] = v;
    if (i != j) {
      // [b_j, b_i] = -(-1)^{|i||j|} [b_i, b_j]
      const bool both_odd = parity[i] == Parity::odd && parity[j] == Parity::odd;
      Vector w(std::vector<Elem>(n, 0));
      for (std::size_t k = 0; k < n; ++k) w[k] = both_odd ? v[k] : field.neg(v[k]);
      table[j * n + i] = w;
    }
  }
  return Superalgebra(field, std::move(parity), std::move(table));
}

bool Superalgebra::is_abelian() const noexcept {
  for (const auto& v : structure_) {
    if (!v.is_zero()) return false;
  }
  return true;
}

Vector Superalgebra::decode(Code code) const {
  const auto p = static_cast<Code>(field_.modulus());
  Vector v = zero();
  for (std::size_t i = 0; i < dim(); ++i) {
    v[i] = static_cast<Elem>(code % p);
    code /= p;
  }
  return v;
}

Code Superalgebra::encode(const Vector& v) const {
  check_member(v);
  const auto p = static_cast<Code>(field_.modulus());
  Code code = 0;
  for (std::size_t i = dim(); i-- > 0;) code = code * p + static_cast<Code>(v[i]);
  return code;
}

Vector Superalgebra::basis(std::size_t i) const {
  Vector v = zero();
  v[i] = 1;
  return v;
}

void Superalgebra::check_member(const Vector& v) const {
  if (v.size() != dim()) {
    throw DimensionMismatch("vector has " + std::to_string(v.size()) + " coordinates, algebra has dimension " +
                            std::to_string(dim()));
  }
  for (Elem c : v.coords()) {
    if (c < 0 || c >= field_.modulus()) {
      throw DimensionMismatch("vector coordinate " + std::to_string(c) + " is not a reduced field element");
    }
  }
}

Vector Superalgebra::add(const Vector& x, const Vector& y) const {
  check_member(x);
  check_member(y);
  Vector r = zero();
  for (std::size_t i = 0; i < dim(); ++i) r[i] = field_.add(x[i], y[i]);
  return r;
}

Vector Superalgebra::sub(const Vector& x, const Vector& y) const {
  check_member(x);
  check_member(y);
  Vector r = zero();
  for (std::size_t i = 0; i < dim(); ++i) r[i] = field_.sub(x[i], y[i]);
  return r;
}

Vector Superalgebra::neg(const Vector& x) const {
  check_member(x);
  Vector r = zero();
  for (std::size_t i = 0; i < dim(); ++i) r[i] = field_.neg(x[i]);
  return r;
}

Vector Superalgebra::scale(Elem a, const Vector& x) const {
  check_member(x);
  a = field_.reduce(a);
  Vector r = zero();
  for (std::size_t i = 0; i < dim(); ++i) r[i] = field_.mul(a, x[i]);
  return r;
}

Code Superalgebra::add_codes(Code x, Code y) const noexcept {
  const auto p = static_cast<Code>(field_.modulus());
  Code out = 0;
  Code place = 1;
  for (std::size_t i = 0; i < dim(); ++i) {
    out += ((x % p + y % p) % p) * place;
    x /= p;
    y /= p;
    place *= p;
  }
  return out;
}

Code Superalgebra::scale_code(Elem a, Code x) const noexcept {
  const auto p = static_cast<Code>(field_.modulus());
  const auto s = static_cast<Code>(field_.reduce(a));
  Code out = 0;
  Code place = 1;
  for (std::size_t i = 0; i < dim(); ++i) {
    out += ((x % p) * s % p) * place;
    x /= p;
    place *= p;
  }
  return out;
}

Code Superalgebra::neg_code(Code x) const noexcept { return scale_code(field_.modulus() - 1, x); }

Vector bracket_eval(const Superalgebra& alg, const Vector& x, const Vector& y) {
  alg.check_member(x);
  alg.check_member(y);
  const auto& F = alg.field();
  const std::size_t n = alg.dim();
  std::vector<std::int64_t> acc(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j] == 0) continue;
      const Elem c = F.mul(x[i], y[j]);
      const Vector& s = alg.structure(i, j);
      for (std::size_t k = 0; k < n; ++k) acc[k] += static_cast<std::int64_t>(c) * s[k];
    }
  }
  Vector r = alg.zero();
  for (std::size_t k = 0; k < n; ++k) r[k] = F.reduce(acc[k]);
  return r;
}

std::pair<Vector, Vector> graded_split(const Superalgebra& alg, const Vector& x) {
  alg.check_member(x);
  Vector even = alg.zero();
  Vector odd = alg.zero();
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    (alg.parity(i) == Parity::even ? even : odd)[i] = x[i];
  }
  return {even, odd};
}

std::string to_string(Axiom a) {
  switch (a) {
    case Axiom::grading:
      return "grading";
    case Axiom::skew_symmetry:
      return "skew-symmetry";
    case Axiom::jacobi:
      return "jacobi";
    case Axiom::anti_homomorphism:
      return "anti-homomorphism";
  }
  return "unknown";
}

bool ValidationReport::has(Axiom a) const noexcept { return first(a) != nullptr; }

const Violation* ValidationReport::first(Axiom a) const noexcept {
  for (const auto& v : violations) {
    if (v.axiom == a) return &v;
  }
  return nullptr;
}

namespace {

int sign(const Superalgebra& alg, std::size_t i, std::size_t j) {
  return (alg.parity(i) == Parity::odd && alg.parity(j) == Parity::odd) ? -1 : 1;
}

}  // namespace

ValidationReport validate_superalgebra(const Superalgebra& alg) {
  ValidationReport report;
  const std::size_t n = alg.dim();
  const auto& F = alg.field();

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Parity target = alg.parity(i) + alg.parity(j);
      const Vector& s = alg.structure(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        if (s[k] != 0 && alg.parity(k) != target) {
          report.violations.push_back({Axiom::grading, {i, j},
                                       "[b" + std::to_string(i + 1) + ",b" + std::to_string(j + 1) +
                                           "] leaves the expected parity component"});
          break;
        }
      }
    }
  }

  // [x,y] + (-1)^{|x||y|} [y,x] = 0
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const int s = sign(alg, i, j);
      const Vector& xy = alg.structure(i, j);
      const Vector& yx = alg.structure(j, i);
      for (std::size_t k = 0; k < n; ++k) {
        if (F.reduce(static_cast<std::int64_t>(xy[k]) + s * yx[k]) != 0) {
          report.violations.push_back({Axiom::skew_symmetry, {i, j},
                                       "[b" + std::to_string(i + 1) + ",b" + std::to_string(j + 1) +
                                           "] is not super skew-symmetric"});
          break;
        }
      }
    }
  }

  // (-1)^{|x||z|}[x,[y,z]] + (-1)^{|y||x|}[y,[z,x]] + (-1)^{|z||y|}[z,[x,y]] = 0
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const Vector bi = alg.basis(i), bj = alg.basis(j), bk = alg.basis(k);
        const Vector t1 = bracket_eval(alg, bi, alg.structure(j, k));
        const Vector t2 = bracket_eval(alg, bj, alg.structure(k, i));
        const Vector t3 = bracket_eval(alg, bk, alg.structure(i, j));
        const int s1 = sign(alg, i, k), s2 = sign(alg, j, i), s3 = sign(alg, k, j);
        bool zero = true;
        for (std::size_t c = 0; c < n; ++c) {
          const std::int64_t v = static_cast<std::int64_t>(s1) * t1[c] + static_cast<std::int64_t>(s2) * t2[c] +
                                 static_cast<std::int64_t>(s3) * t3[c];
          if (F.reduce(v) != 0) {
            zero = false;
            break;
          }
        }
        if (!zero) {
          report.violations.push_back({Axiom::jacobi, {i, j, k},
                                       "graded Jacobi identity fails on (b" + std::to_string(i + 1) + ",b" +
                                           std::to_string(j + 1) + ",b" + std::to_string(k + 1) + ")"});
        }
      }
    }
  }
  return report;
}

namespace algebras {

Superalgebra heisenberg(PrimeField field) {
  return Superalgebra::from_upper_triangle(field, {Parity::even, Parity::odd}, {{{1, 1}, Vector{1, 0}}});
}

Superalgebra solvable3(PrimeField field) {
  if (field.modulus() == 2) throw DomainError("solvable3 needs an odd characteristic");
  const Elem half = field.inv(2);
  return Superalgebra::from_upper_triangle(field, {Parity::even, Parity::even, Parity::odd},
                                           {{{0, 1}, Vector{0, 1, 0}},
                                            {{0, 2}, Vector{0, 0, half}},
                                            {{2, 2}, Vector{0, 1, 0}}});
}

}  // namespace algebras

}  // namespace ciflie
