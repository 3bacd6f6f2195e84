#include "ciflie/theorems.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <optional>

#include "ciflie/bracket.hpp"
#include "ciflie/error.hpp"

namespace ciflie {

std::string fnv1a_hex(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

using Outcome = std::optional<std::string>;

// One seeded instance: generates inputs and remembers them for the digest.
class Trial {
 public:
  Trial(const GenConfig& base, std::uint64_t seed)
      : seed_(seed), cfg_(make_config(base.algebra, seed, base.chain_length)), rng_(seed) {}

  std::uint64_t seed() const { return seed_; }
  const GenConfig& config() const { return cfg_; }

  CIFSet set(SetKind kind) {
    CIFSet s = gen_set(cfg_, rng_, kind);
    for (const auto& d : s.table()) inputs_ += to_string(d) + ' ';
    inputs_ += '|';
    return s;
  }

  GradedMap anti_hom() {
    GradedMap m = gen_anti_hom(cfg_, rng_);
    for (const auto& v : m.images()) inputs_ += to_string(v);
    inputs_ += '|';
    return m;
  }

  Elem scalar() {
    const auto a = static_cast<Elem>(rng_.below(cfg_.algebra->field().modulus()));
    inputs_ += "alpha=" + std::to_string(a) + '|';
    return a;
  }

  std::string digest() const { return fnv1a_hex(inputs_); }

 private:
  std::uint64_t seed_;
  GenConfig cfg_;
  Rng rng_;
  std::string inputs_;
};

using Law = std::function<Outcome(Trial&)>;

Outcome expect_equal(const std::string& what, const CIFSet& lhs, const CIFSet& rhs) {
  if (lhs == rhs) return std::nullopt;
  for (Code x = 0; x < lhs.size() && x < rhs.size(); ++x) {
    if (!(lhs.at_code(x) == rhs.at_code(x))) {
      return what + ": differs at " + to_string(lhs.space().decode(x)) + ", " + to_string(lhs.at_code(x)) +
             " vs " + to_string(rhs.at_code(x));
    }
  }
  return what + ": carriers differ";
}

Outcome expect_subset(const std::string& what, const CIFSet& a, const CIFSet& b) {
  for (Code x = 0; x < a.size(); ++x) {
    if (!deg_leq(a.mem(x), b.mem(x)) || !deg_leq(b.non(x), a.non(x))) {
      return what + ": not contained at " + to_string(a.space().decode(x)) + ", " + to_string(a.at_code(x)) +
             " vs " + to_string(b.at_code(x));
    }
  }
  return std::nullopt;
}

Outcome expect(const std::string& what, const PredicateReport& r) {
  if (r) return std::nullopt;
  return what + ": " + r.describe();
}

// alpha A1 + beta A2
CIFSet combine(Elem alpha, const CIFSet& a1, Elem beta, const CIFSet& a2) {
  return cif_sum(scalar_action(alpha, a1), scalar_action(beta, a2));
}

const std::vector<std::pair<std::string, Law>>& catalog() {
  static const std::vector<std::pair<std::string, Law>> laws = {
      {"mylemma-1",
       [](Trial& t) -> Outcome {
         const CIFSet a = t.set(SetKind::subspace), b = t.set(SetKind::subspace);
         return expect("A+B is a CIF subspace", is_cif_subspace(cif_sum(a, b)));
       }},
      {"sum-ideal",
       [](Trial& t) -> Outcome {
         const CIFSet a = t.set(SetKind::ideal), b = t.set(SetKind::ideal);
         return expect("A+B is a CIF ideal", is_cif_ideal(cif_sum(a, b)));
       }},
      {"lem-1",
       [](Trial& t) -> Outcome {
         const CIFSet a2 = t.set(SetKind::arbitrary), b2 = t.set(SetKind::arbitrary);
         const CIFSet a1 = intersection(a2, t.set(SetKind::arbitrary));
         const CIFSet b1 = intersection(b2, t.set(SetKind::arbitrary));
         return expect_subset("[A1,B1] <= [A2,B2]", bracket_product(a1, b1), bracket_product(a2, b2));
       }},
      {"lem-2",
       [](Trial& t) -> Outcome {
         const CIFSet b = t.set(SetKind::subspace);
         const CIFSet a1 = intersection(b, t.set(SetKind::arbitrary));
         const CIFSet a2 = intersection(b, t.set(SetKind::arbitrary));
         return expect_subset("A1+A2 <= B", cif_sum(a1, a2), b);
       }},
      {"lem-3",
       [](Trial& t) -> Outcome {
         const CIFSet a = t.set(SetKind::subspace), b = t.set(SetKind::subspace);
         return expect("[A,B] is a CIF subspace", is_cif_subspace(bracket_product(a, b)));
       }},
      {"lem-4",
       [](Trial& t) -> Outcome {
         const CIFSet a = t.set(SetKind::graded_subspace), b = t.set(SetKind::graded_subspace);
         const CIFSet ab = bracket_product(a, b);
         if (auto f = expect("[A,B] is a CIF subspace", is_cif_subspace(ab))) return f;
         if (auto f = expect("[A,B] is Z2-graded", is_z2_graded(ab))) return f;
         const auto [p0, p1] = bracket_graded_parts(a, b);
         if (!is_direct_sum(p0, p1)) return std::string("graded parts do not form a direct sum");
         return expect_equal("[A,B]_0 + [A,B]_1 = [A,B]", cif_sum(p0, p1), ab);
       }},
      {"lem-5",
       [](Trial& t) -> Outcome {
         const CIFSet a = t.set(SetKind::graded_subspace), b = t.set(SetKind::graded_subspace);
         return expect_equal("[A,B] = [B,A]", bracket_product(a, b), bracket_product(b, a));
       }},
      {"thrm-1",
       [](Trial& t) -> Outcome {
         const CIFSet a1 = t.set(SetKind::arbitrary), a2 = t.set(SetKind::arbitrary), b = t.set(SetKind::arbitrary);
         if (auto f = expect_equal("[A1+A2,B] = [A1,B]+[A2,B]", bracket_product(cif_sum(a1, a2), b),
                                   cif_sum(bracket_product(a1, b), bracket_product(a2, b)))) {
           return f;
         }
         return expect_equal("[B,A1+A2] = [B,A1]+[B,A2]", bracket_product(b, cif_sum(a1, a2)),
                             cif_sum(bracket_product(b, a1), bracket_product(b, a2)));
       }},
      {"thrm-2",
       [](Trial& t) -> Outcome {
         const CIFSet a = t.set(SetKind::subspace), b = t.set(SetKind::subspace);
         const Elem alpha = t.scalar();
         const CIFSet rhs = scalar_action(alpha, bracket_product(a, b));
         if (auto f = expect_equal("[aA,B] = a[A,B]", bracket_product(scalar_action(alpha, a), b), rhs)) return f;
         return expect_equal("[A,aB] = a[A,B]", bracket_product(a, scalar_action(alpha, b)), rhs);
       }},
      {"thrm-3",
       [](Trial& t) -> Outcome {
         const CIFSet a = t.set(SetKind::ideal), b = t.set(SetKind::ideal);
         return expect("[A,B] is a CIF ideal", is_cif_ideal(bracket_product(a, b)));
       }},
      {"thrm-4",
       [](Trial& t) -> Outcome {
         const CIFSet a = t.set(SetKind::ideal), b = t.set(SetKind::ideal);
         const GradedMap phi = t.anti_hom();
         return expect_subset("phi([A,B]) <= [phi(A),phi(B)]", image(phi, bracket_product(a, b)),
                              bracket_product(image(phi, a), image(phi, b)));
       }},
      {"thrm-9",
       [](Trial& t) -> Outcome {
         const CIFSet a1 = t.set(SetKind::subspace), a2 = t.set(SetKind::subspace), b = t.set(SetKind::subspace);
         const Elem alpha = t.scalar(), beta = t.scalar();
         if (auto f = expect_equal("[aA1+bA2,B] = a[A1,B]+b[A2,B]", bracket_product(combine(alpha, a1, beta, a2), b),
                                   combine(alpha, bracket_product(a1, b), beta, bracket_product(a2, b)))) {
           return f;
         }
         return expect_equal("[B,aA1+bA2] = a[B,A1]+b[B,A2]", bracket_product(b, combine(alpha, a1, beta, a2)),
                             combine(alpha, bracket_product(b, a1), beta, bracket_product(b, a2)));
       }},
      {"thrm-10",
       [](Trial& t) -> Outcome {
         const CIFSet a = t.set(SetKind::ideal);
         const GradedMap phi = t.anti_hom();
         const Elem alpha = t.scalar();
         const CIFSet lhs = image(phi, scalar_action(alpha, a));
         if (alpha == 0) {
           if (auto f = expect_equal("phi(0A) is trivial", lhs, CIFSet::trivial(phi.target_ptr()))) return f;
         }
         return expect_equal("phi(aA) = a phi(A)", lhs, scalar_action(alpha, image(phi, a)));
       }},
      {"thrm-11",
       [](Trial& t) -> Outcome {
         const CIFSet b = t.set(SetKind::ideal);
         const GradedMap phi = t.anti_hom();
         const Elem alpha = t.scalar();
         const CIFSet lhs = preimage(phi, scalar_action(alpha, b));
         if (alpha == 0) {
           if (auto f = expect_equal("phi^-1(0B) is trivial", lhs, CIFSet::trivial(phi.source_ptr()))) return f;
         }
         return expect_equal("phi^-1(aB) = a phi^-1(B)", lhs, scalar_action(alpha, preimage(phi, b)));
       }},
      {"thrm-15",
       [](Trial& t) -> Outcome {
         const CIFSet a = t.set(SetKind::ideal), b = t.set(SetKind::ideal);
         const GradedMap phi = t.anti_hom();
         return expect_equal("phi^-1(A+B) = phi^-1(A)+phi^-1(B)", preimage(phi, cif_sum(a, b)),
                             cif_sum(preimage(phi, a), preimage(phi, b)));
       }},
      {"preimg-bracket",
       [](Trial& t) -> Outcome {
         const CIFSet a = t.set(SetKind::ideal), b = t.set(SetKind::ideal);
         const GradedMap phi = t.anti_hom();
         return expect_subset("phi^-1([A,B]) <= [phi^-1(A),phi^-1(B)]", preimage(phi, bracket_product(a, b)),
                              bracket_product(preimage(phi, a), preimage(phi, b)));
       }},
      {"cor-image-bilinear",
       [](Trial& t) -> Outcome {
         const CIFSet a1 = t.set(SetKind::subspace), a2 = t.set(SetKind::subspace), b = t.set(SetKind::subspace);
         const GradedMap phi = t.anti_hom();
         const Elem alpha = t.scalar(), beta = t.scalar();
         const CIFSet pb = image(phi, b);
         return expect_equal("[phi(aA1+bA2),phi(B)] = a[phi(A1),phi(B)]+b[phi(A2),phi(B)]",
                             bracket_product(image(phi, combine(alpha, a1, beta, a2)), pb),
                             combine(alpha, bracket_product(image(phi, a1), pb), beta,
                                     bracket_product(image(phi, a2), pb)));
       }},
      {"cor-preimage-bilinear",
       [](Trial& t) -> Outcome {
         const CIFSet a1 = t.set(SetKind::subspace), a2 = t.set(SetKind::subspace), b = t.set(SetKind::subspace);
         const GradedMap phi = t.anti_hom();
         const Elem alpha = t.scalar(), beta = t.scalar();
         const CIFSet pb = preimage(phi, b);
         return expect_equal("[phi^-1(aA1+bA2),phi^-1(B)] = a[phi^-1(A1),phi^-1(B)]+b[phi^-1(A2),phi^-1(B)]",
                             bracket_product(preimage(phi, combine(alpha, a1, beta, a2)), pb),
                             combine(alpha, bracket_product(preimage(phi, a1), pb), beta,
                                     bracket_product(preimage(phi, a2), pb)));
       }},
  };
  return laws;
}

// A graded subspace that is not an ideal: a high degree on span{b_i} with
// [b_i, b_j] outside that span. Empty when the algebra has no such pair.
std::optional<CIFSet> non_ideal_line(const GenConfig& cfg) {
  const auto& alg = *cfg.algebra;
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    const std::vector<Vector> line{alg.basis(i)};
    const SubspaceBasis span = span_closure(alg, line);
    for (std::size_t j = 0; j < alg.dim(); ++j) {
      if (span.contains(alg.structure(i, j))) continue;
      std::vector<CIFDegree> table(alg.cardinality(), CIFDegree::trivial());
      for (Code c : enumerate_codes(alg, span)) table[c] = cfg.degree_pool.back();
      table[0] = CIFDegree::pinned();
      return CIFSet::from_table(cfg.algebra, std::move(table));
    }
  }
  return std::nullopt;
}

const std::vector<std::pair<std::string, Law>>& controls() {
  // Each law returns a witness when the mutated claim fails, which is the goal.
  static const std::vector<std::pair<std::string, Law>> laws = {
      {"reversed-lem-1",
       [](Trial& t) -> Outcome {
         const CIFSet a2 = t.set(SetKind::arbitrary), b2 = t.set(SetKind::arbitrary);
         const CIFSet a1 = intersection(a2, t.set(SetKind::arbitrary));
         const CIFSet b1 = intersection(b2, t.set(SetKind::arbitrary));
         return expect_subset("[A2,B2] <= [A1,B1]", bracket_product(a2, b2), bracket_product(a1, b1));
       }},
      {"ideal-on-arbitrary",
       [](Trial& t) -> Outcome { return expect("arbitrary set is an ideal", is_cif_ideal(t.set(SetKind::arbitrary))); }},
      {"subset-reversal",
       [](Trial& t) -> Outcome {
         const CIFSet a = t.set(SetKind::subspace);
         const CIFSet a1 = intersection(a, t.set(SetKind::arbitrary));
         return expect_subset("A <= A meet C", a, a1);
       }},
      {"zero-scalar-bracket",
       [](Trial& t) -> Outcome {
         const CIFSet a = t.set(SetKind::subspace), b = t.set(SetKind::subspace);
         return expect_equal("[0A,B] = [A,B]", bracket_product(scalar_action(0, a), b), bracket_product(a, b));
       }},
      {"non-ideal-line",
       [](Trial& t) -> Outcome {
         const auto line = non_ideal_line(t.config());
         if (!line) return std::nullopt;
         return expect("line set is an ideal", is_cif_ideal(*line));
       }},
  };
  return laws;
}

const Law* find_law(const std::vector<std::pair<std::string, Law>>& laws, std::string_view id) {
  for (const auto& [name, law] : laws) {
    if (name == id) return &law;
  }
  return nullptr;
}

}  // namespace

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& [name, law] : catalog()) out.push_back(name);
    return out;
  }();
  return ids;
}

bool is_known_theorem(std::string_view id) {
  return id == kNegControlsId || id == kAntiIdealId || find_law(catalog(), id) != nullptr;
}

TheoremReport check_theorem(std::string_view id, const GenConfig& cfg, std::size_t trials) {
  if (id == kNegControlsId) return negative_controls(cfg, trials);
  if (id == kAntiIdealId) {
    TheoremReport report{std::string(id), 0, {}, false, {}};
    report.notes.push_back("no definition of an anti-CIF ideal is available to test against; nothing was checked");
    return report;
  }
  const Law* law = find_law(catalog(), id);
  if (!law) throw UnknownTheorem("unknown theorem id '" + std::string(id) + "'");

  TheoremReport report{std::string(id), trials, {}, true, {}};
  for (std::size_t i = 0; i < trials; ++i) {
    Trial trial(cfg, mix_seed(cfg.seed, i));
    if (auto witness = (*law)(trial)) report.failures.push_back({trial.seed(), trial.digest(), *witness});
  }
  std::sort(report.failures.begin(), report.failures.end(),
            [](const TrialFailure& a, const TrialFailure& b) { return a.seed < b.seed; });
  return report;
}

TheoremReport negative_controls(const GenConfig& cfg, std::size_t trials) {
  TheoremReport report{std::string(kNegControlsId), 0, {}, true, {}};
  for (const auto& [name, law] : controls()) {
    bool detected = false;
    for (std::size_t i = 0; i < trials && !detected; ++i) {
      Trial trial(cfg, mix_seed(cfg.seed, i));
      ++report.trials;
      if (auto witness = law(trial)) {
        detected = true;
        report.notes.push_back(name + ": detected at trial " + std::to_string(i) + " (" + *witness + ")");
      }
    }
    if (!detected) {
      report.failures.push_back({cfg.seed, fnv1a_hex(name), name + ": mutated law survived " +
                                                               std::to_string(trials) + " trials"});
    }
  }
  return report;
}

}  // namespace ciflie
