// Independent of the level-cut code: no span routine is used here.
#include "ciflie/bracket.hpp"
#include "ciflie/error.hpp"

namespace ciflie {

CIFSet bracket_product_oracle(const CIFSet& a, const CIFSet& b) {
  require_same_space(a, b);
  const auto& alg = a.space();
  const Code n = a.size();
  if (n > kOracleMaxCarrier) {
    throw CarrierTooLarge("oracle supports at most " + std::to_string(kOracleMaxCarrier) + " vectors, got " +
                          std::to_string(n));
  }
  const int p = alg.field().modulus();

  std::vector<Vector> vecs;
  vecs.reserve(n);
  for (Code x = 0; x < n; ++x) vecs.push_back(alg.decode(x));

  std::vector<Degree> lam(n, Degree::bottom());
  std::vector<Degree> rho(n, Degree::top());
  lam[0] = Degree::top();
  rho[0] = Degree::bottom();
  for (Code x = 0; x < n; ++x) {
    for (Code y = 0; y < n; ++y) {
      const Code br = alg.encode(bracket_eval(alg, vecs[x], vecs[y]));
      const Degree m = deg_meet(a.mem(x), b.mem(y));
      const Degree j = deg_join(a.non(x), b.non(y));
      for (int s = 1; s < p; ++s) {
        const Code z = alg.scale_code(s, br);
        lam[z] = deg_join(lam[z], m);
        rho[z] = deg_meet(rho[z], j);
      }
    }
  }

  // D(u+v) >= D(u) ^ D(v) until nothing moves
  for (bool changed = true; changed;) {
    changed = false;
    for (Code u = 0; u < n; ++u) {
      for (Code v = u; v < n; ++v) {
        const Code z = alg.add_codes(u, v);
        const Degree m = deg_join(lam[z], deg_meet(lam[u], lam[v]));
        const Degree j = deg_meet(rho[z], deg_join(rho[u], rho[v]));
        if (!(m == lam[z])) {
          lam[z] = m;
          changed = true;
        }
        if (!(j == rho[z])) {
          rho[z] = j;
          changed = true;
        }
      }
    }
  }

  std::vector<CIFDegree> table;
  table.reserve(n);
  for (Code x = 0; x < n; ++x) table.emplace_back(lam[x], rho[x]);
  return CIFSet::from_table(a.space_ptr(), std::move(table));
}

}  // namespace ciflie
