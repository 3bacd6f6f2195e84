#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace ciflie {

using Rational = boost::rational<std::int64_t>;

/// "num/den" in lowest terms with a positive denominator.
std::string to_string(const Rational& q);

/// Parses "num/den" or an integer. Throws DomainError on malformed input,
/// a zero denominator, or components whose magnitude exceeds 10^9.
Rational parse_rational(std::string_view text);

/// An amplitude-phase pair (r, w) standing for r e^{i 2 pi w}, both in [0,1].
class Degree {
 public:
  constexpr Degree() = default;
  Degree(Rational r, Rational w);

  static Degree top() { return Degree(1, 1); }
  static Degree bottom() { return Degree(0, 0); }

  const Rational& r() const noexcept { return r_; }
  const Rational& w() const noexcept { return w_; }

  friend bool operator==(const Degree&, const Degree&) = default;

 private:
  Rational r_{0};
  Rational w_{0};
};

std::string to_string(const Degree& d);

/// Componentwise order: a.r <= b.r and a.w <= b.w. Partial.
bool deg_leq(const Degree& a, const Degree& b) noexcept;
Degree deg_meet(const Degree& a, const Degree& b);
Degree deg_join(const Degree& a, const Degree& b);

struct FamilyBound {
  Degree value;
  bool attained = false;  // some member equals `value`
};

/// Componentwise max (resp. min) of a nonempty family. Throws DomainError when empty.
FamilyBound family_sup(std::span<const Degree> ds);
FamilyBound family_inf(std::span<const Degree> ds);

/// Membership and non-membership degrees with mem.r + non.r <= 1.
class CIFDegree {
 public:
  CIFDegree() : mem_(Degree::bottom()), non_(Degree::top()) {}
  CIFDegree(Degree mem, Degree non);

  /// (BOTTOM; TOP): the value off the support of the trivial set.
  static CIFDegree trivial() { return {}; }
  /// (TOP; BOTTOM): the value every CIF set takes at zero.
  static CIFDegree pinned() { return CIFDegree(Degree::top(), Degree::bottom()); }

  const Degree& mem() const noexcept { return mem_; }
  const Degree& non() const noexcept { return non_; }

  friend bool operator==(const CIFDegree&, const CIFDegree&) = default;

 private:
  Degree mem_;
  Degree non_;
};

std::string to_string(const CIFDegree& d);

}  // namespace ciflie
