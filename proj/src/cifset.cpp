#include "ciflie/cifset.hpp"

#include <algorithm>
#include <sstream>

#include "ciflie/error.hpp"

namespace ciflie {

void check_carrier(const Superalgebra& alg) {
  if (alg.cardinality() > CIFSet::kMaxCarrier) {
    throw CarrierTooLarge("carrier has " + std::to_string(alg.cardinality()) + " vectors; CIF sets support at most " +
                          std::to_string(CIFSet::kMaxCarrier));
  }
}

CIFSet CIFSet::from_table(AlgebraPtr space, std::vector<CIFDegree> table) {
  if (!space) throw DomainError("CIF set needs an algebra");
  check_carrier(*space);
  if (table.size() != space->cardinality()) {
    throw DimensionMismatch("CIF set table has " + std::to_string(table.size()) + " entries, carrier has " +
                            std::to_string(space->cardinality()));
  }
  if (!(table[0] == CIFDegree::pinned())) {
    throw ZeroPinViolation("degree at the zero vector must be (TOP; BOTTOM), got " + to_string(table[0]));
  }
  return CIFSet(std::move(space), std::move(table));
}

CIFSet CIFSet::trivial(AlgebraPtr space) {
  if (!space) throw DomainError("CIF set needs an algebra");
  check_carrier(*space);
  std::vector<CIFDegree> table(space->cardinality(), CIFDegree::trivial());
  table[0] = CIFDegree::pinned();
  return CIFSet(std::move(space), std::move(table));
}

CIFSet make_cifset(AlgebraPtr space, std::span<const std::pair<Vector, CIFDegree>> entries,
                   const CIFDegree& default_degree) {
  if (!space) throw DomainError("CIF set needs an algebra");
  check_carrier(*space);
  std::vector<CIFDegree> table(space->cardinality(), default_degree);
  std::vector<bool> seen(space->cardinality(), false);
  for (const auto& [v, d] : entries) {
    const Code c = space->encode(v);
    if (seen[c]) throw DomainError("duplicate entry for vector " + to_string(v));
    seen[c] = true;
    if (c == 0 && !(d == CIFDegree::pinned())) {
      throw ZeroPinViolation("explicit zero entry must be (TOP; BOTTOM), got " + to_string(d));
    }
    table[c] = d;
  }
  table[0] = CIFDegree::pinned();
  return CIFSet::from_table(std::move(space), std::move(table));
}

void require_same_space(const CIFSet& a, const CIFSet& b) {
  if (a.space_ptr() != b.space_ptr() && !(a.space() == b.space())) {
    throw SpaceMismatch("CIF sets live on different superalgebras");
  }
}

std::string PredicateReport::describe() const {
  if (holds) return "holds";
  std::ostringstream os;
  os << "fails: " << clause;
  if (!witness.empty()) {
    os << " at";
    for (const auto& w : witness) os << ' ' << to_string(w);
  }
  if (scalar) os << " with scalar " << *scalar;
  return os.str();
}

namespace {

PredicateReport failure(std::string clause, std::vector<Vector> witness, std::optional<Elem> scalar = std::nullopt) {
  return PredicateReport{false, std::move(clause), std::move(witness), scalar};
}

std::vector<Vector> decode_all(const Superalgebra& alg) {
  std::vector<Vector> out;
  out.reserve(alg.cardinality());
  for (Code c = 0; c < alg.cardinality(); ++c) out.push_back(alg.decode(c));
  return out;
}

// Distinct degree values with the first vector carrying each.
std::vector<std::pair<Degree, Code>> distinct(const CIFSet& a, bool membership) {
  std::vector<std::pair<Degree, Code>> out;
  for (Code c = 0; c < a.size(); ++c) {
    const Degree& d = membership ? a.mem(c) : a.non(c);
    if (std::none_of(out.begin(), out.end(), [&](const auto& e) { return e.first == d; })) out.emplace_back(d, c);
  }
  return out;
}

}  // namespace

bool subset_of(const CIFSet& a, const CIFSet& b) {
  require_same_space(a, b);
  for (Code c = 0; c < a.size(); ++c) {
    if (!deg_leq(a.mem(c), b.mem(c)) || !deg_leq(b.non(c), a.non(c))) return false;
  }
  return true;
}

PredicateReport pair_homogeneous(const CIFSet& a, const CIFSet& b) {
  require_same_space(a, b);
  for (const bool membership : {true, false}) {
    const auto av = distinct(a, membership);
    const auto bv = distinct(b, membership);
    for (const auto& [u, x] : av) {
      for (const auto& [v, y] : bv) {
        if ((u.r() <= v.r()) != (u.w() <= v.w())) {
          return failure(membership ? "membership amplitude/phase order" : "non-membership amplitude/phase order",
                         {a.space().decode(x), b.space().decode(y)});
        }
      }
    }
  }
  return {};
}

PredicateReport is_homogeneous(const CIFSet& a) { return pair_homogeneous(a, a); }

PredicateReport is_cif_subspace(const CIFSet& a) {
  const auto& alg = a.space();
  const int p = alg.field().modulus();
  for (Code x = 0; x < a.size(); ++x) {
    for (int s = 0; s < p; ++s) {
      const Code sx = alg.scale_code(s, x);
      if (!deg_leq(a.mem(x), a.mem(sx))) return failure("scalar (membership)", {alg.decode(x)}, s);
      if (!deg_leq(a.non(sx), a.non(x))) return failure("scalar (non-membership)", {alg.decode(x)}, s);
    }
  }
  for (Code x = 0; x < a.size(); ++x) {
    for (Code y = x; y < a.size(); ++y) {
      const Code xy = alg.add_codes(x, y);
      if (!deg_leq(deg_meet(a.mem(x), a.mem(y)), a.mem(xy))) {
        return failure("additive (membership)", {alg.decode(x), alg.decode(y)});
      }
      if (!deg_leq(a.non(xy), deg_join(a.non(x), a.non(y)))) {
        return failure("additive (non-membership)", {alg.decode(x), alg.decode(y)});
      }
    }
  }
  return {};
}

PredicateReport is_z2_graded(const CIFSet& a) {
  const auto& alg = a.space();
  for (Code x = 0; x < a.size(); ++x) {
    const Vector v = alg.decode(x);
    const auto [v0, v1] = graded_split(alg, v);
    const Code x0 = alg.encode(v0), x1 = alg.encode(v1);
    if (!(a.mem(x) == deg_meet(a.mem(x0), a.mem(x1)))) return failure("graded (membership)", {v});
    if (!(a.non(x) == deg_join(a.non(x0), a.non(x1)))) return failure("graded (non-membership)", {v});
  }
  return {};
}

PredicateReport is_cif_ideal(const CIFSet& a) {
  if (auto r = is_cif_subspace(a); !r) {
    r.clause = "subspace: " + r.clause;
    return r;
  }
  if (auto r = is_z2_graded(a); !r) return r;

  const auto& alg = a.space();
  const auto vecs = decode_all(alg);
  for (Code x = 0; x < a.size(); ++x) {
    for (Code y = 0; y < a.size(); ++y) {
      const Code b = alg.encode(bracket_eval(alg, vecs[x], vecs[y]));
      if (!deg_leq(deg_join(a.mem(x), a.mem(y)), a.mem(b))) return failure("bracket (membership)", {vecs[x], vecs[y]});
      if (!deg_leq(a.non(b), deg_meet(a.non(x), a.non(y)))) {
        return failure("bracket (non-membership)", {vecs[x], vecs[y]});
      }
    }
  }
  return {};
}

CIFSet component_extension(const CIFSet& a, Parity parity) {
  const auto& alg = a.space();
  std::vector<CIFDegree> table(a.size(), CIFDegree::trivial());
  for (Code x = 0; x < a.size(); ++x) {
    const auto [v0, v1] = graded_split(alg, alg.decode(x));
    const bool inside = parity == Parity::even ? v1.is_zero() : v0.is_zero();
    if (inside) table[x] = a.at_code(x);
  }
  return CIFSet::from_table(a.space_ptr(), std::move(table));
}

CIFSet cif_sum(const CIFSet& a, const CIFSet& b) {
  require_same_space(a, b);
  const auto& alg = a.space();
  const Code n = a.size();
  std::vector<Code> negated(n);
  for (Code c = 0; c < n; ++c) negated[c] = alg.neg_code(c);

  std::vector<CIFDegree> table;
  table.reserve(n);
  std::vector<Degree> mems, nons;
  mems.reserve(n);
  nons.reserve(n);
  Code unattained = 0;
  std::optional<Code> first_unattained;
  for (Code x = 0; x < n; ++x) {
    mems.clear();
    nons.clear();
    for (Code s = 0; s < n; ++s) {
      const Code t = alg.add_codes(x, negated[s]);  // x = s + t
      mems.push_back(deg_meet(a.mem(s), b.mem(t)));
      nons.push_back(deg_join(a.non(s), b.non(t)));
    }
    const FamilyBound sup = family_sup(mems);
    const FamilyBound inf = family_inf(nons);
    if (!sup.attained || !inf.attained) {
      ++unattained;
      if (!first_unattained) first_unattained = x;
    }
    table.emplace_back(sup.value, inf.value);
  }
  CIFSet out = CIFSet::from_table(a.space_ptr(), std::move(table));
  if (first_unattained) {
    out.add_note("sum: sup/inf over decompositions not attained at " + std::to_string(unattained) +
                 " vector(s), first " + to_string(alg.decode(*first_unattained)) +
                 "; componentwise reading applied (inputs are not homogeneous with each other)");
  }
  return out;
}

bool is_direct_sum(const CIFSet& a, const CIFSet& b) {
  require_same_space(a, b);
  for (Code x = 1; x < a.size(); ++x) {
    if (!(deg_meet(a.mem(x), b.mem(x)) == Degree::bottom())) return false;
    if (!(deg_join(a.non(x), b.non(x)) == Degree::top())) return false;
  }
  return true;
}

CIFSet scalar_action(Elem c, const CIFSet& a) {
  const auto& alg = a.space();
  c = alg.field().reduce(c);
  if (c == 0) return CIFSet::trivial(a.space_ptr());
  const Elem inv = alg.field().inv(c);
  std::vector<CIFDegree> table;
  table.reserve(a.size());
  for (Code x = 0; x < a.size(); ++x) table.push_back(a.at_code(alg.scale_code(inv, x)));
  return CIFSet::from_table(a.space_ptr(), std::move(table));
}

CIFSet intersection(const CIFSet& a, const CIFSet& b) {
  require_same_space(a, b);
  std::vector<CIFDegree> table;
  table.reserve(a.size());
  for (Code x = 0; x < a.size(); ++x) {
    table.emplace_back(deg_meet(a.mem(x), b.mem(x)), deg_join(a.non(x), b.non(x)));
  }
  return CIFSet::from_table(a.space_ptr(), std::move(table));
}

namespace {

void require_on(const CIFSet& s, const AlgebraPtr& alg, const char* role) {
  if (s.space_ptr() != alg && !(s.space() == *alg)) {
    throw SpaceMismatch(std::string("CIF set does not live on the map's ") + role);
  }
}

std::vector<Code> map_codes(const GradedMap& m) {
  const auto& src = m.source();
  std::vector<Code> out;
  out.reserve(src.cardinality());
  for (Code x = 0; x < src.cardinality(); ++x) out.push_back(m.target().encode(apply_map(m, src.decode(x))));
  return out;
}

}  // namespace

CIFSet image(const GradedMap& m, const CIFSet& a) {
  require_on(a, m.source_ptr(), "source");
  check_carrier(m.target());
  const auto images = map_codes(m);
  const Code nt = m.target().cardinality();
  std::vector<Degree> mem(nt, Degree::bottom());
  std::vector<Degree> non(nt, Degree::top());
  for (Code x = 0; x < a.size(); ++x) {
    mem[images[x]] = deg_join(mem[images[x]], a.mem(x));
    non[images[x]] = deg_meet(non[images[x]], a.non(x));
  }

  // attainment: some fiber element reaches both bounds
  std::vector<bool> mem_hit(nt, false), non_hit(nt, false), in_image(nt, false);
  for (Code x = 0; x < a.size(); ++x) {
    in_image[images[x]] = true;
    if (a.mem(x) == mem[images[x]]) mem_hit[images[x]] = true;
    if (a.non(x) == non[images[x]]) non_hit[images[x]] = true;
  }

  std::vector<CIFDegree> table;
  table.reserve(nt);
  std::size_t unattained = 0;
  for (Code y = 0; y < nt; ++y) {
    table.emplace_back(mem[y], non[y]);
    if (in_image[y] && (!mem_hit[y] || !non_hit[y])) ++unattained;
  }
  CIFSet out = CIFSet::from_table(m.target_ptr(), std::move(table));
  if (unattained) {
    out.add_note("image: fiber sup/inf not attained at " + std::to_string(unattained) +
                 " vector(s); componentwise reading applied");
  }
  return out;
}

CIFSet preimage(const GradedMap& m, const CIFSet& b) {
  require_on(b, m.target_ptr(), "target");
  check_carrier(m.source());
  const auto images = map_codes(m);
  std::vector<CIFDegree> table;
  table.reserve(images.size());
  for (Code img : images) table.push_back(b.at_code(img));
  return CIFSet::from_table(m.source_ptr(), std::move(table));
}

}  // namespace ciflie
