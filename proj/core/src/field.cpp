#include "kal/field.hpp"

namespace kal {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (std::uint64_t f = 5; f <= n / f; f += 6) {
    if (n % f == 0 || n % (f + 2) == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (!is_prime(p)) throw ParamError(std::to_string(p) + " is not prime");
}

std::uint64_t poly_eval(std::span<const std::uint64_t> coeffs, std::uint64_t a,
                        const PrimeField& field) {
  std::uint64_t acc = 0;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    acc = field.add(field.mul(acc, a), coeffs[k]);
  }
  return acc;
}

} // namespace kal
