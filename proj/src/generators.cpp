#include "ciflie/generators.hpp"

#include <algorithm>
#include <numeric>

#include "ciflie/error.hpp"

namespace ciflie {

namespace {

constexpr std::int64_t kDen = 12;

Rational twelfths(std::int64_t n) { return Rational(n, kDen); }

// m distinct values from [lo, hi], ascending.
std::vector<std::int64_t> distinct_sorted(Rng& rng, std::size_t m, std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> all(static_cast<std::size_t>(hi - lo + 1));
  std::iota(all.begin(), all.end(), lo);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t j = i + rng.below(all.size() - i);
    std::swap(all[i], all[j]);
  }
  all.resize(m);
  std::sort(all.begin(), all.end());
  return all;
}

Vector random_vector(const Superalgebra& alg, Rng& rng) {
  Vector v = alg.zero();
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<Elem>(rng.below(alg.field().modulus()));
  return v;
}

// Random d-dimensional subspace of span(rows); d <= rows.size() and rows independent.
SubspaceBasis random_subspace_of(const Superalgebra& alg, Rng& rng, const std::vector<Vector>& rows,
                                 std::size_t d) {
  const auto& F = alg.field();
  SubspaceBasis out(F, alg.dim());
  while (out.dim() < d) {
    Vector v = alg.zero();
    for (const auto& r : rows) v = alg.add(v, alg.scale(static_cast<Elem>(rng.below(F.modulus())), r));
    out.insert(v);
  }
  return out;
}

std::vector<Vector> parity_basis(const Superalgebra& alg, Parity parity) {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    if (alg.parity(i) == parity) out.push_back(alg.basis(i));
  }
  return out;
}

std::vector<Vector> all_basis(const Superalgebra& alg) {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < alg.dim(); ++i) out.push_back(alg.basis(i));
  return out;
}

SubspaceBasis direct_sum(const Superalgebra& alg, const SubspaceBasis& e, const SubspaceBasis& o) {
  std::vector<Vector> gens = e.rows();
  gens.insert(gens.end(), o.rows().begin(), o.rows().end());
  return span_closure(alg, gens);
}

std::vector<SubspaceBasis> plain_chain(const Superalgebra& alg, Rng& rng, std::size_t k) {
  std::vector<SubspaceBasis> chain;
  if (k == 0) return chain;
  std::size_t d = static_cast<std::size_t>(rng.between(static_cast<std::int64_t>(k), static_cast<std::int64_t>(alg.dim())));
  chain.push_back(random_subspace_of(alg, rng, all_basis(alg), d));
  for (std::size_t level = 1; level < k; ++level) {
    d = static_cast<std::size_t>(
        rng.between(static_cast<std::int64_t>(k - level), static_cast<std::int64_t>(d) - 1));
    chain.push_back(random_subspace_of(alg, rng, chain.back().rows(), d));
  }
  return chain;
}

std::vector<SubspaceBasis> graded_chain(const Superalgebra& alg, Rng& rng, std::size_t k) {
  std::vector<SubspaceBasis> chain;
  if (k == 0) return chain;
  const auto even = parity_basis(alg, Parity::even);
  const auto odd = parity_basis(alg, Parity::odd);
  std::size_t e = 0, o = 0;
  do {
    e = rng.below(even.size() + 1);
    o = rng.below(odd.size() + 1);
  } while (e + o < k);

  SubspaceBasis se = random_subspace_of(alg, rng, even, e);
  SubspaceBasis so = random_subspace_of(alg, rng, odd, o);
  chain.push_back(direct_sum(alg, se, so));
  for (std::size_t level = 1; level < k; ++level) {
    const bool shrink_even = o == 0 || (e > 0 && rng.coin());
    if (shrink_even) {
      se = random_subspace_of(alg, rng, se.rows(), --e);
    } else {
      so = random_subspace_of(alg, rng, so.rows(), --o);
    }
    chain.push_back(direct_sum(alg, se, so));
  }
  return chain;
}

std::vector<SubspaceBasis> ideal_chain(const Superalgebra& alg, Rng& rng, std::size_t k) {
  std::vector<SubspaceBasis> chain;
  for (const auto& u : graded_chain(alg, rng, k)) {
    SubspaceBasis closed = ideal_closure(alg, u.rows());
    if (chain.empty() || !(chain.back() == closed)) chain.push_back(std::move(closed));
  }
  return chain;
}

CIFSet from_chain(const GenConfig& cfg, Rng& rng, const std::vector<SubspaceBasis>& chain) {
  const auto& alg = *cfg.algebra;
  const auto levels = distinct_sorted(rng, chain.size(), 0, static_cast<std::int64_t>(cfg.degree_pool.size()) - 1);
  std::vector<CIFDegree> table(alg.cardinality(), CIFDegree::trivial());
  for (Code x = 0; x < alg.cardinality(); ++x) {
    const Vector v = alg.decode(x);
    for (std::size_t level = chain.size(); level-- > 0;) {
      if (chain[level].contains(v)) {
        table[x] = cfg.degree_pool[static_cast<std::size_t>(levels[level])];
        break;
      }
    }
  }
  table[0] = CIFDegree::pinned();
  return CIFSet::from_table(cfg.algebra, std::move(table));
}

}  // namespace

bool pool_is_valid(const std::vector<CIFDegree>& pool) {
  for (std::size_t i = 1; i < pool.size(); ++i) {
    const auto& lo = pool[i - 1];
    const auto& hi = pool[i];
    if (!(lo.mem().r() < hi.mem().r() && lo.mem().w() < hi.mem().w())) return false;
    if (!(lo.non().r() > hi.non().r() && lo.non().w() > hi.non().w())) return false;
  }
  return true;
}

GenConfig make_config(AlgebraPtr algebra, std::uint64_t seed, int chain_length) {
  if (!algebra) throw DomainError("generator config needs an algebra");
  if (chain_length < 2 || chain_length > 4) {
    throw DomainError("chain length must lie in 2..4, got " + std::to_string(chain_length));
  }
  check_carrier(*algebra);
  Rng rng(seed);
  const std::size_t m = static_cast<std::size_t>(chain_length) + 1;

  const auto r = distinct_sorted(rng, m, 1, 10);
  const auto w = distinct_sorted(rng, m, 1, 10);
  auto w_hat = distinct_sorted(rng, m, 1, 10);
  std::reverse(w_hat.begin(), w_hat.end());
  // r_hat strictly decreasing with r + r_hat <= 1 and r_hat >= 1/12
  std::vector<std::int64_t> r_hat(m);
  r_hat[m - 1] = rng.between(1, kDen - r[m - 1]);
  for (std::size_t i = m - 1; i-- > 0;) r_hat[i] = rng.between(r_hat[i + 1] + 1, kDen - r[i]);

  GenConfig cfg{seed, std::move(algebra), chain_length, {}};
  for (std::size_t i = 0; i < m; ++i) {
    cfg.degree_pool.emplace_back(Degree(twelfths(r[i]), twelfths(w[i])), Degree(twelfths(r_hat[i]), twelfths(w_hat[i])));
  }
  if (rng.coin()) cfg.degree_pool.push_back(CIFDegree::pinned());
  return cfg;
}

SubspaceBasis ideal_closure(const Superalgebra& alg, std::span<const Vector> gens) {
  SubspaceBasis ideal = span_closure(alg, gens);
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<Vector> rows = ideal.rows();
    for (std::size_t j = 0; j < alg.dim(); ++j) {
      const Vector b = alg.basis(j);
      for (const auto& u : rows) {
        grew |= ideal.insert(bracket_eval(alg, b, u));
        grew |= ideal.insert(bracket_eval(alg, u, b));
      }
    }
  }
  return ideal;
}

CIFSet gen_set(const GenConfig& cfg, Rng& rng, SetKind kind) {
  const auto& alg = *cfg.algebra;
  const std::size_t k = std::min<std::size_t>(rng.below(static_cast<std::uint64_t>(cfg.chain_length) + 1), alg.dim());
  switch (kind) {
    case SetKind::arbitrary: {
      std::vector<CIFDegree> table(alg.cardinality());
      for (auto& d : table) {
        const auto pick = rng.below(cfg.degree_pool.size() + 1);
        d = pick == 0 ? CIFDegree::trivial() : cfg.degree_pool[pick - 1];
      }
      table[0] = CIFDegree::pinned();
      return CIFSet::from_table(cfg.algebra, std::move(table));
    }
    case SetKind::subspace: return from_chain(cfg, rng, plain_chain(alg, rng, k));
    case SetKind::graded_subspace: return from_chain(cfg, rng, graded_chain(alg, rng, k));
    case SetKind::ideal: return from_chain(cfg, rng, ideal_chain(alg, rng, k));
  }
  throw DomainError("unknown set kind");
}

CIFSet gen_arbitrary(const GenConfig& cfg) {
  Rng rng(cfg.seed);
  return gen_set(cfg, rng, SetKind::arbitrary);
}

CIFSet gen_cif_subspace(const GenConfig& cfg) {
  Rng rng(cfg.seed);
  return gen_set(cfg, rng, SetKind::subspace);
}

CIFSet gen_graded_subspace(const GenConfig& cfg) {
  Rng rng(cfg.seed);
  return gen_set(cfg, rng, SetKind::graded_subspace);
}

CIFSet gen_cif_ideal(const GenConfig& cfg) {
  Rng rng(cfg.seed);
  return gen_set(cfg, rng, SetKind::ideal);
}

std::pair<CIFSet, CIFSet> gen_pair(const GenConfig& cfg, SetKind kind) {
  Rng rng(cfg.seed);
  CIFSet a = gen_set(cfg, rng, kind);
  CIFSet b = gen_set(cfg, rng, kind);
  return {std::move(a), std::move(b)};
}

GradedMap gen_anti_hom(const GenConfig& cfg, Rng& rng) {
  const auto& alg = *cfg.algebra;
  const auto& F = alg.field();
  constexpr int kTries = 200;
  for (int t = 0; t < kTries; ++t) {
    std::vector<Vector> images;
    for (std::size_t i = 0; i < alg.dim(); ++i) {
      Vector v = random_vector(alg, rng);
      for (std::size_t k = 0; k < v.size(); ++k) {
        if (alg.parity(k) != alg.parity(i)) v[k] = 0;
      }
      images.push_back(std::move(v));
    }
    GradedMap m(cfg.algebra, cfg.algebra, std::move(images), MapKind::anti_homomorphism);
    const auto check = validate_map(m);
    if (check.ok() && check.surjective) return m;
  }
  for (const Elem c : {static_cast<Elem>(F.modulus() - 1), Elem{1}}) {
    GradedMap m = GradedMap::scalar(cfg.algebra, c, MapKind::anti_homomorphism);
    const auto check = validate_map(m);
    if (check.ok() && check.surjective) return m;
  }
  throw Error("no surjective anti-homomorphism found within " + std::to_string(kTries) + " tries");
}

GradedMap gen_anti_hom(const GenConfig& cfg) {
  Rng rng(cfg.seed);
  return gen_anti_hom(cfg, rng);
}

}  // namespace ciflie
