#include <algorithm>
#include <charconv>
#include <map>
#include <set>

#include "ciflie/error.hpp"
#include "ciflie/workspace.hpp"

namespace ciflie {

const NamedSpace* Workspace::find_space(std::string_view name) const {
  for (const auto& s : spaces) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

const NamedSet* Workspace::find_set(std::string_view name) const {
  for (const auto& s : sets) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

const NamedMap* Workspace::find_map(std::string_view name) const {
  for (const auto& m : maps) {
    if (m.name == name) return &m;
  }
  return nullptr;
}

std::optional<std::string> Workspace::space_name(const AlgebraPtr& alg) const {
  for (const auto& s : spaces) {
    if (s.algebra == alg) return s.name;
  }
  for (const auto& s : spaces) {
    if (*s.algebra == *alg) return s.name;
  }
  return std::nullopt;
}

bool operator==(const Workspace& a, const Workspace& b) {
  if (!(a.field == b.field) || a.spaces.size() != b.spaces.size() || a.sets.size() != b.sets.size() ||
      a.maps.size() != b.maps.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.spaces.size(); ++i) {
    if (a.spaces[i].name != b.spaces[i].name || !(*a.spaces[i].algebra == *b.spaces[i].algebra)) return false;
  }
  for (std::size_t i = 0; i < a.sets.size(); ++i) {
    if (a.sets[i].name != b.sets[i].name || a.sets[i].space != b.sets[i].space || !(a.sets[i].set == b.sets[i].set)) {
      return false;
    }
  }
  for (std::size_t i = 0; i < a.maps.size(); ++i) {
    const auto &x = a.maps[i], &y = b.maps[i];
    if (x.name != y.name || x.source != y.source || x.target != y.target || !(x.map == y.map)) return false;
  }
  return true;
}

namespace {

constexpr std::int64_t kMaxLiteral = 1'000'000'000;

struct Token {
  std::string_view text;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; };
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && !is_space(line[i])) ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

struct PendingSpace {
  std::string name;
  std::size_t line;
  std::vector<Parity> parity;
  std::map<std::pair<std::size_t, std::size_t>, Vector> upper;
  AlgebraPtr algebra;  // set once the space is first used
};

struct PendingSet {
  std::string name;
  std::size_t space;
  std::size_t line;
  CIFDegree fallback;
  std::vector<std::pair<Vector, CIFDegree>> entries;
  std::set<Vector> seen;
};

class Parser {
 public:
  Workspace run(std::string_view text) {
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
      const std::size_t end = std::min(text.find('\n', start), text.size());
      ++line_no;
      std::string_view line = text.substr(start, end - start);
      if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
      line_ = line_no;
      toks_ = tokenize(line);
      end_col_ = line.size() + 1;
      if (!toks_.empty()) {
        try {
          statement();
        } catch (const ParseError&) {
          throw;
        } catch (const Error& e) {
          fail_at(line_, 1, e.what());
        }
      }
      start = end + 1;
    }
    line_ = line_no + 1;
    end_col_ = 1;
    if (!field_) fail_at(1, 1, "document has no field statement");
    for (std::size_t i = 0; i < spaces_.size(); ++i) finalize(i);

    Workspace ws;
    ws.field = *field_;
    for (const auto& s : spaces_) ws.spaces.push_back({s.name, s.algebra});
    for (const auto& s : sets_) {
      const auto& space = spaces_[s.space];
      try {
        ws.sets.push_back({s.name, space.name, make_cifset(space.algebra, s.entries, s.fallback)});
      } catch (const Error& e) {
        fail_at(s.line, 1, e.what());
      }
    }
    ws.maps = std::move(maps_);
    return ws;
  }

 private:
  [[noreturn]] void fail_at(std::size_t line, std::size_t col, const std::string& msg) const {
    throw ParseError(line, col, msg);
  }
  [[noreturn]] void fail(std::size_t tok, const std::string& msg) const {
    fail_at(line_, tok < toks_.size() ? toks_[tok].column : end_col_, msg);
  }

  std::string_view tok(std::size_t i, std::string_view what) const {
    if (i >= toks_.size()) fail(i, "expected " + std::string(what));
    return toks_[i].text;
  }

  void keyword(std::size_t i, std::string_view kw) const {
    if (tok(i, "'" + std::string(kw) + "'") != kw) fail(i, "expected '" + std::string(kw) + "'");
  }

  void no_more(std::size_t i) const {
    if (i < toks_.size()) fail(i, "unexpected token '" + std::string(toks_[i].text) + "'");
  }

  std::string name(std::size_t i) const {
    const auto t = tok(i, "a name");
    const auto ok_first = [](char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_'; };
    const auto ok_rest = [&](char c) { return ok_first(c) || (c >= '0' && c <= '9'); };
    if (!ok_first(t.front()) || !std::all_of(t.begin() + 1, t.end(), ok_rest)) {
      fail(i, "invalid name '" + std::string(t) + "'");
    }
    return std::string(t);
  }

  std::int64_t integer(std::size_t i, std::string_view what) const {
    const auto t = tok(i, what);
    const char* first = t.data();
    const char* last = t.data() + t.size();
    if (first != last && *first == '+') ++first;
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || first == last) fail(i, "expected " + std::string(what) + ", got '" + std::string(t) + "'");
    if (v > kMaxLiteral || v < -kMaxLiteral) fail(i, "integer out of range");
    return v;
  }

  std::int64_t integer_in(std::size_t i, std::string_view what, std::int64_t lo, std::int64_t hi) const {
    const std::int64_t v = integer(i, what);
    if (v < lo || v > hi) {
      fail(i, std::string(what) + " must lie in " + std::to_string(lo) + ".." + std::to_string(hi));
    }
    return v;
  }

  Elem element(std::size_t i) const { return field_->reduce(integer(i, "a coordinate")); }

  Rational rational(std::size_t i) const {
    const auto t = tok(i, "a rational");
    try {
      return parse_rational(t);
    } catch (const Error& e) {
      fail(i, e.what());
    }
  }

  CIFDegree degree(std::size_t i) const {
    const Rational r = rational(i), w = rational(i + 1), rh = rational(i + 2), wh = rational(i + 3);
    try {
      return CIFDegree(Degree(r, w), Degree(rh, wh));
    } catch (const Error& e) {
      fail(i, e.what());
    }
  }

  void need_field(std::size_t i) const {
    if (!field_) fail(i, "field must be declared first");
  }

  std::size_t space_index(std::size_t i) const {
    const std::string n = name(i);
    for (std::size_t k = 0; k < spaces_.size(); ++k) {
      if (spaces_[k].name == n) return k;
    }
    fail(i, "unknown space '" + n + "'");
  }

  void finalize(std::size_t k) {
    auto& s = spaces_[k];
    if (s.algebra) return;
    auto alg = std::make_shared<const Superalgebra>(Superalgebra::from_upper_triangle(*field_, s.parity, s.upper));
    const auto report = validate_superalgebra(*alg);
    if (!report.ok()) {
      const auto& v = report.violations.front();
      std::string where;
      for (std::size_t b : v.witness) where += (where.empty() ? "" : ",") + std::to_string(b + 1);
      fail_at(s.line, 1, "space " + s.name + " violates " + to_string(v.axiom) + " at basis (" + where + "): " +
                             v.message);
    }
    s.algebra = std::move(alg);
  }

  void statement() {
    const auto kw = toks_[0].text;
    if (kw == "field") return field_stmt();
    if (kw == "space") return space_stmt();
    if (kw == "bracket") return bracket_stmt();
    if (kw == "cifset") return cifset_stmt();
    if (kw == "entry") return entry_stmt();
    if (kw == "map") return map_stmt();
    fail(0, "unknown statement '" + std::string(kw) + "'");
  }

  void field_stmt() {
    if (field_) fail(0, "duplicate field statement");
    const std::int64_t p = integer(1, "a prime");
    if (p < 2 || p > 13 || !is_prime(static_cast<int>(p))) fail(1, "field modulus must be a prime in 2..13");
    no_more(2);
    field_ = PrimeField(static_cast<int>(p));
  }

  void space_stmt() {
    need_field(0);
    const std::string n = name(1);
    if (std::any_of(spaces_.begin(), spaces_.end(), [&](const auto& s) { return s.name == n; })) {
      fail(1, "duplicate space '" + n + "'");
    }
    keyword(2, "dim");
    const auto dim = static_cast<std::size_t>(integer_in(3, "dimension", 1, Superalgebra::kMaxDim));
    keyword(4, "parity");
    std::vector<Parity> parity;
    for (std::size_t i = 0; i < dim; ++i) {
      parity.push_back(integer_in(5 + i, "a parity bit", 0, 1) == 1 ? Parity::odd : Parity::even);
    }
    no_more(5 + dim);
    spaces_.push_back({n, line_, std::move(parity), {}, nullptr});
  }

  void bracket_stmt() {
    need_field(0);
    const std::size_t k = space_index(1);
    auto& s = spaces_[k];
    if (s.algebra) fail(1, "space '" + s.name + "' is already in use; declare brackets before using it");
    const std::int64_t n = static_cast<std::int64_t>(s.parity.size());
    const auto i = static_cast<std::size_t>(integer_in(2, "a basis index", 1, n));
    const auto j = static_cast<std::size_t>(integer_in(3, "a basis index", 1, n));
    if (i > j) fail(2, "bracket indices must satisfy i <= j");
    keyword(4, "->");
    Vector v = Vector::zero(s.parity.size());
    for (std::size_t c = 0; c < v.size(); ++c) v[c] = element(5 + c);
    no_more(5 + v.size());
    if (!s.upper.emplace(std::pair{i - 1, j - 1}, std::move(v)).second) fail(2, "duplicate bracket for this pair");
  }

  void cifset_stmt() {
    need_field(0);
    const std::string n = name(1);
    if (std::any_of(sets_.begin(), sets_.end(), [&](const auto& s) { return s.name == n; })) {
      fail(1, "duplicate cifset '" + n + "'");
    }
    keyword(2, "on");
    const std::size_t k = space_index(3);
    keyword(4, "default");
    const CIFDegree d = degree(5);
    no_more(9);
    finalize(k);
    try {
      check_carrier(*spaces_[k].algebra);
    } catch (const Error& e) {
      fail(3, e.what());
    }
    sets_.push_back({n, k, line_, d, {}, {}});
  }

  void entry_stmt() {
    need_field(0);
    const std::string n = name(1);
    auto it = std::find_if(sets_.begin(), sets_.end(), [&](const auto& s) { return s.name == n; });
    if (it == sets_.end()) fail(1, "unknown cifset '" + n + "'");
    const std::size_t dim = spaces_[it->space].parity.size();
    Vector v = Vector::zero(dim);
    for (std::size_t c = 0; c < dim; ++c) v[c] = element(2 + c);
    keyword(2 + dim, "deg");
    const CIFDegree d = degree(3 + dim);
    no_more(7 + dim);
    if (v.is_zero() && !(d == CIFDegree::pinned())) fail(3 + dim, "the zero vector must have degree 1 1 0 0");
    if (!it->seen.insert(v).second) fail(2, "duplicate entry for " + to_string(v));
    it->entries.emplace_back(std::move(v), d);
  }

  void map_stmt() {
    need_field(0);
    const std::string n = name(1);
    if (std::any_of(maps_.begin(), maps_.end(), [&](const auto& m) { return m.name == n; })) {
      fail(1, "duplicate map '" + n + "'");
    }
    const std::size_t src = space_index(2);
    keyword(3, "->");
    const std::size_t tgt = space_index(4);
    keyword(5, "kind");
    const auto kind_tok = tok(6, "'plain' or 'anti'");
    MapKind kind;
    if (kind_tok == "plain") {
      kind = MapKind::plain;
    } else if (kind_tok == "anti") {
      kind = MapKind::anti_homomorphism;
    } else {
      fail(6, "map kind must be 'plain' or 'anti'");
    }
    keyword(7, "rows");
    finalize(src);
    finalize(tgt);
    const auto& sa = spaces_[src].algebra;
    const auto& ta = spaces_[tgt].algebra;

    std::vector<Vector> images;
    std::size_t i = 8;
    while (images.size() < sa->dim()) {
      Vector v = Vector::zero(ta->dim());
      for (std::size_t c = 0; c < v.size(); ++c) v[c] = element(i++);
      images.push_back(std::move(v));
      const bool last = images.size() == sa->dim();
      if (last && i >= toks_.size()) break;
      keyword(i++, "/");
    }
    no_more(i);

    GradedMap m(sa, ta, std::move(images), kind);
    const auto check = validate_map(m);
    if (!check.ok()) fail(0, "map " + n + ": " + check.report.violations.front().message);
    maps_.push_back({n, spaces_[src].name, spaces_[tgt].name, std::move(m)});
  }

  std::optional<PrimeField> field_;
  std::vector<PendingSpace> spaces_;
  std::vector<PendingSet> sets_;
  std::vector<NamedMap> maps_;

  std::size_t line_ = 0;
  std::size_t end_col_ = 1;
  std::vector<Token> toks_;
};

}  // namespace

Workspace parse_spec(std::string_view text) { return Parser().run(text); }

}  // namespace ciflie
