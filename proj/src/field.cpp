#include "ciflie/field.hpp"

#include <string>

#include "ciflie/error.hpp"

namespace ciflie {

bool is_prime(int n) noexcept {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(int p) : p_(p) {
  if (p < 2 || p > kMaxModulus || !is_prime(p)) {
    throw DomainError("field modulus must be a prime in [2, 13], got " + std::to_string(p));
  }
}

Elem PrimeField::inv(Elem a) const {
  a = reduce(a);
  if (a == 0) throw DomainError("zero has no inverse");
  // Fermat: a^(p-2)
  Elem result = 1;
  Elem base = a;
  int e = p_ - 2;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

}  // namespace ciflie
