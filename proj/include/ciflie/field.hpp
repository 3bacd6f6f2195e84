#pragma once

#include <compare>
#include <cstdint>

namespace ciflie {

/// Field element, always held in the canonical range [0, p).
using Elem = std::int32_t;

/// The prime field F_p for 2 <= p <= 13.
class PrimeField {
 public:
  static constexpr int kMaxModulus = 13;

  explicit PrimeField(int p);

  int modulus() const noexcept { return p_; }

  Elem reduce(std::int64_t v) const noexcept {
    std::int64_t r = v % p_;
    return static_cast<Elem>(r < 0 ? r + p_ : r);
  }
  Elem add(Elem a, Elem b) const noexcept { return static_cast<Elem>((a + b) % p_); }
  Elem sub(Elem a, Elem b) const noexcept { return static_cast<Elem>((a - b + p_) % p_); }
  Elem neg(Elem a) const noexcept { return static_cast<Elem>((p_ - a) % p_); }
  Elem mul(Elem a, Elem b) const noexcept { return static_cast<Elem>((a * b) % p_); }

  /// Multiplicative inverse; throws DomainError for zero.
  Elem inv(Elem a) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  int p_;
};

bool is_prime(int n) noexcept;

}  // namespace ciflie
