#include "ciflie/bracket.hpp"

#include <algorithm>
#include <array>

#include "ciflie/error.hpp"

namespace ciflie {

namespace {

bool is_membership(Component c) { return c == Component::r || c == Component::w; }

const Rational& pick(const CIFDegree& d, Component c) {
  switch (c) {
    case Component::r: return d.mem().r();
    case Component::w: return d.mem().w();
    case Component::r_hat: return d.non().r();
    case Component::w_hat: return d.non().w();
  }
  return d.mem().r();
}

// Vectors whose component clears t: >= on the membership side, <= otherwise.
std::vector<Vector> level_set(const CIFSet& s, Component c, const Rational& t) {
  std::vector<Vector> out;
  const bool mem = is_membership(c);
  for (Code x = 0; x < s.size(); ++x) {
    const Rational& v = pick(s.at_code(x), c);
    if (mem ? v >= t : v <= t) out.push_back(s.space().decode(x));
  }
  return out;
}

// True when every two degrees in the pool are comparable.
bool is_chain(const std::vector<Degree>& pool) {
  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (std::size_t j = i + 1; j < pool.size(); ++j) {
      if (!deg_leq(pool[i], pool[j]) && !deg_leq(pool[j], pool[i])) return false;
    }
  }
  return true;
}

std::vector<Degree> distinct_values(const CIFSet& s, bool mem) {
  std::vector<Degree> out;
  for (const auto& d : s.table()) {
    const Degree& v = mem ? d.mem() : d.non();
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  }
  return out;
}

bool pool_is_chain(const CIFSet& a, const CIFSet& b, bool mem) {
  std::vector<Degree> pool;
  for (const auto& u : distinct_values(a, mem)) {
    for (const auto& v : distinct_values(b, mem)) {
      const Degree d = mem ? deg_meet(u, v) : deg_join(u, v);
      if (std::find(pool.begin(), pool.end(), d) == pool.end()) pool.push_back(d);
    }
  }
  return is_chain(pool);
}

}  // namespace

LevelCutLadder level_cut_ladder(const CIFSet& a, const CIFSet& b, Component component) {
  require_same_space(a, b);
  const auto& alg = a.space();
  const bool mem = is_membership(component);

  std::vector<Rational> ts;
  for (const CIFSet* s : {&a, &b}) {
    for (const auto& d : s->table()) ts.push_back(pick(d, component));
  }
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  if (mem) std::reverse(ts.begin(), ts.end());

  LevelCutLadder ladder{component, {}, {}};
  for (const auto& t : ts) {
    // [.,.] is bilinear, so brackets of spanning sets span the cut
    const auto la = level_set(a, component, t);
    const auto lb = level_set(b, component, t);
    const SubspaceBasis sa = span_closure(alg, la);
    const SubspaceBasis sb = span_closure(alg, lb);
    SubspaceBasis cut(alg.field(), alg.dim());
    for (const auto& u : sa.rows()) {
      for (const auto& v : sb.rows()) cut.insert(bracket_eval(alg, u, v));
    }
    ladder.thresholds.push_back(t);
    ladder.cuts.push_back(std::move(cut));
  }
  return ladder;
}

CIFSet bracket_product(const CIFSet& a, const CIFSet& b) {
  require_same_space(a, b);
  const auto& alg = a.space();
  const Code n = a.size();

  constexpr std::array comps{Component::r, Component::w, Component::r_hat, Component::w_hat};
  std::array<std::vector<Rational>, 4> value;
  for (std::size_t k = 0; k < comps.size(); ++k) {
    const bool mem = is_membership(comps[k]);
    value[k].assign(n, Rational(mem ? 0 : 1));
    std::vector<bool> done(n, false);
    const auto ladder = level_cut_ladder(a, b, comps[k]);
    for (std::size_t i = 0; i < ladder.thresholds.size(); ++i) {
      for (Code x : enumerate_codes(alg, ladder.cuts[i])) {
        if (done[x]) continue;
        done[x] = true;
        value[k][x] = ladder.thresholds[i];
      }
    }
  }

  std::vector<CIFDegree> table;
  table.reserve(n);
  for (Code x = 0; x < n; ++x) {
    table.emplace_back(Degree(value[0][x], value[1][x]), Degree(value[2][x], value[3][x]));
  }
  CIFSet out = CIFSet::from_table(a.space_ptr(), std::move(table));
  if (!pool_is_chain(a, b, true) || !pool_is_chain(a, b, false)) {
    out.add_note("bracket: argument degrees do not form a chain; amplitude and phase resolved on separate ladders");
  }
  return out;
}

std::pair<CIFSet, CIFSet> bracket_graded_parts(const CIFSet& a, const CIFSet& b) {
  for (const CIFSet* s : {&a, &b}) {
    if (auto r = is_cif_subspace(*s); !r) throw NotGraded("input is not a CIF subspace: " + r.describe());
    if (auto r = is_z2_graded(*s); !r) throw NotGraded("input is not Z2-graded: " + r.describe());
  }
  const CIFSet a0 = component_extension(a, Parity::even);
  const CIFSet a1 = component_extension(a, Parity::odd);
  const CIFSet b0 = component_extension(b, Parity::even);
  const CIFSet b1 = component_extension(b, Parity::odd);
  return {cif_sum(bracket_product(a0, b0), bracket_product(a1, b1)),
          cif_sum(bracket_product(a0, b1), bracket_product(a1, b0))};
}

}  // namespace ciflie
