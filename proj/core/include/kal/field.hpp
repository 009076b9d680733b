#ifndef KAL_FIELD_HPP
#define KAL_FIELD_HPP

#include <cstdint>
#include <span>

#include "kal/error.hpp"

namespace kal {

/// Deterministic primality by trial division. Exact for all 64-bit inputs;
/// the moduli used here are tiny.
bool is_prime(std::uint64_t n);

/// Arithmetic modulo a prime p. The modulus is verified at construction.
class PrimeField {
public:
  explicit PrimeField(std::uint64_t p);

  std::uint64_t p() const { return p_; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p_; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p_);
  }

private:
  std::uint64_t p_;
};

/// Horner evaluation of Σ coeffs[k]·a^k mod p. Inputs must be reduced mod p.
std::uint64_t poly_eval(std::span<const std::uint64_t> coeffs, std::uint64_t a,
                        const PrimeField& field);

} // namespace kal

#endif // KAL_FIELD_HPP
