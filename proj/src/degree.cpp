#include "ciflie/degree.hpp"

#include <algorithm>
#include <charconv>

#include "ciflie/error.hpp"

namespace ciflie {

namespace {

constexpr std::int64_t kMaxComponent = 1'000'000'000;

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (!s.empty() && s.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || first == last) {
    throw DomainError("malformed rational '" + std::string(whole) + "'");
  }
  if (v > kMaxComponent || v < -kMaxComponent) {
    throw DomainError("rational component out of range in '" + std::string(whole) + "'");
  }
  return v;
}

bool in_unit_interval(const Rational& q) { return q >= Rational(0) && q <= Rational(1); }

}  // namespace

std::string to_string(const Rational& q) {
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, text));
  const std::int64_t num = parse_int(text.substr(0, slash), text);
  const std::int64_t den = parse_int(text.substr(slash + 1), text);
  if (den == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

Degree::Degree(Rational r, Rational w) : r_(r), w_(w) {
  if (!in_unit_interval(r_) || !in_unit_interval(w_)) {
    throw DomainError("degree components must lie in [0,1], got (" + to_string(r_) + ", " + to_string(w_) + ")");
  }
}

std::string to_string(const Degree& d) { return "(" + to_string(d.r()) + "," + to_string(d.w()) + ")"; }

bool deg_leq(const Degree& a, const Degree& b) noexcept { return a.r() <= b.r() && a.w() <= b.w(); }

Degree deg_meet(const Degree& a, const Degree& b) { return Degree(std::min(a.r(), b.r()), std::min(a.w(), b.w())); }

Degree deg_join(const Degree& a, const Degree& b) { return Degree(std::max(a.r(), b.r()), std::max(a.w(), b.w())); }

FamilyBound family_sup(std::span<const Degree> ds) {
  if (ds.empty()) throw DomainError("family_sup of an empty family");
  Degree acc = ds.front();
  for (const auto& d : ds.subspan(1)) acc = deg_join(acc, d);
  const bool attained = std::find(ds.begin(), ds.end(), acc) != ds.end();
  return {acc, attained};
}

FamilyBound family_inf(std::span<const Degree> ds) {
  if (ds.empty()) throw DomainError("family_inf of an empty family");
  Degree acc = ds.front();
  for (const auto& d : ds.subspan(1)) acc = deg_meet(acc, d);
  const bool attained = std::find(ds.begin(), ds.end(), acc) != ds.end();
  return {acc, attained};
}

CIFDegree::CIFDegree(Degree mem, Degree non) : mem_(mem), non_(non) {
  // r + r_hat <= 1, compared as r <= 1 - r_hat to stay within 64 bits
  if (mem_.r() > Rational(1) - non_.r()) {
    throw BudgetViolation("membership amplitude " + to_string(mem_.r()) + " plus non-membership amplitude " +
                          to_string(non_.r()) + " exceeds 1");
  }
}

std::string to_string(const CIFDegree& d) { return to_string(d.mem()) + ";" + to_string(d.non()); }

}  // namespace ciflie
