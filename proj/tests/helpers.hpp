#pragma once

#include <algorithm>
#include <array>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "ciflie/cifset.hpp"
#include "ciflie/degree.hpp"
#include "ciflie/superalgebra.hpp"

namespace testing {

using namespace ciflie;

inline AlgebraPtr heisenberg3() { return std::make_shared<const Superalgebra>(algebras::heisenberg(PrimeField(3))); }
inline AlgebraPtr solvable3() { return std::make_shared<const Superalgebra>(algebras::solvable3(PrimeField(3))); }
inline AlgebraPtr abelian(int p, std::vector<Parity> parity) {
  return std::make_shared<const Superalgebra>(Superalgebra::abelian(PrimeField(p), std::move(parity)));
}

inline Rational q(const char* s) { return parse_rational(s); }

inline CIFDegree deg(const char* r, const char* w, const char* rh, const char* wh) {
  return CIFDegree(Degree(q(r), q(w)), Degree(q(rh), q(wh)));
}

inline CIFSet make(AlgebraPtr alg, const std::vector<std::pair<Vector, CIFDegree>>& entries,
                   CIFDegree fallback = CIFDegree::trivial()) {
  return make_cifset(std::move(alg), entries, fallback);
}

// Scalar component of a degree pair, indexed r, w, r_hat, w_hat.
inline const Rational& component(const CIFDegree& d, int k) {
  switch (k) {
    case 0: return d.mem().r();
    case 1: return d.mem().w();
    case 2: return d.non().r();
    default: return d.non().w();
  }
}

// Codes reachable from 0 by adding generators: the span, found without any
// linear algebra.
inline std::vector<bool> additive_closure(const Superalgebra& alg, const std::vector<Code>& gens) {
  std::vector<bool> seen(alg.cardinality(), false);
  std::vector<Code> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    const Code z = stack.back();
    stack.pop_back();
    for (Code g : gens) {
      const Code n = alg.add_codes(z, g);
      if (!seen[n]) {
        seen[n] = true;
        stack.push_back(n);
      }
    }
  }
  return seen;
}

// [A,B] straight from the definition, one component at a time: the value at x
// is the best threshold t such that x is a sum of brackets [a,b] whose
// arguments both clear t.
inline CIFSet brute_bracket(const CIFSet& a, const CIFSet& b) {
  const auto& alg = a.space();
  const Code n = alg.cardinality();
  std::vector<Vector> vecs;
  for (Code x = 0; x < n; ++x) vecs.push_back(alg.decode(x));
  std::vector<std::vector<Code>> br(n, std::vector<Code>(n));
  for (Code x = 0; x < n; ++x) {
    for (Code y = 0; y < n; ++y) br[x][y] = alg.encode(bracket_eval(alg, vecs[x], vecs[y]));
  }

  std::vector<std::array<Rational, 4>> out(n);
  for (int k = 0; k < 4; ++k) {
    const bool mem = k < 2;
    std::vector<Rational> ts;
    for (Code x = 0; x < n; ++x) {
      ts.push_back(component(a.at_code(x), k));
      ts.push_back(component(b.at_code(x), k));
    }
    for (Code x = 0; x < n; ++x) out[x][k] = Rational(mem ? 0 : 1);
    for (const auto& t : ts) {
      std::vector<Code> gens;
      for (Code x = 0; x < n; ++x) {
        for (Code y = 0; y < n; ++y) {
          const auto& u = component(a.at_code(x), k);
          const auto& v = component(b.at_code(y), k);
          if (mem ? (u >= t && v >= t) : (u <= t && v <= t)) gens.push_back(br[x][y]);
        }
      }
      const auto reach = additive_closure(alg, gens);
      for (Code x = 0; x < n; ++x) {
        if (!reach[x]) continue;
        if (mem ? t > out[x][k] : t < out[x][k]) out[x][k] = t;
      }
    }
  }
  std::vector<CIFDegree> table;
  for (Code x = 0; x < n; ++x) table.emplace_back(Degree(out[x][0], out[x][1]), Degree(out[x][2], out[x][3]));
  return CIFSet::from_table(a.space_ptr(), std::move(table));
}

// Sum by listing every decomposition x = s + t with explicit vector arithmetic.
inline CIFSet brute_sum(const CIFSet& a, const CIFSet& b) {
  const auto& alg = a.space();
  std::vector<CIFDegree> table;
  for (Code x = 0; x < alg.cardinality(); ++x) {
    const Vector vx = alg.decode(x);
    std::array<Rational, 4> best{Rational(0), Rational(0), Rational(1), Rational(1)};
    for (Code s = 0; s < alg.cardinality(); ++s) {
      const Vector vs = alg.decode(s);
      const Vector vt = alg.sub(vx, vs);
      const auto& da = a.at(vs);
      const auto& db = b.at(vt);
      for (int k = 0; k < 4; ++k) {
        if (k < 2) {
          best[k] = std::max(best[k], std::min(component(da, k), component(db, k)));
        } else {
          best[k] = std::min(best[k], std::max(component(da, k), component(db, k)));
        }
      }
    }
    table.emplace_back(Degree(best[0], best[1]), Degree(best[2], best[3]));
  }
  return CIFSet::from_table(a.space_ptr(), std::move(table));
}

}  // namespace testing
