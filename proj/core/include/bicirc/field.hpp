#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace bicirc {

/// GF(q) as explicit tables over element indices 0..q-1. Index 0 is zero,
/// 1 is one; for q = p^k an index is sum c_i p^i over the coefficients of a
/// polynomial in x reduced modulo the defining polynomial.
class FieldTable {
 public:
  std::uint32_t q() const { return q_; }
  std::uint32_t characteristic() const { return p_; }
  std::uint32_t extension_degree() const { return k_; }
  /// Coefficients low-degree-first, monic of degree k (just {0, 1} for prime fields).
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return add_[a * q_ + b]; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return mul_[a * q_ + b]; }
  std::uint32_t neg(std::uint32_t a) const { return neg_[a]; }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
  /// Throws std::domain_error for zero.
  std::uint32_t inv(std::uint32_t a) const;

  friend FieldTable make_field(std::uint32_t q);

 private:
  std::uint32_t q_ = 0, p_ = 0, k_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> add_, mul_, neg_, inv_;
};

/// q must be a prime power no larger than 1024; throws std::invalid_argument otherwise.
/// Extension fields use the lexicographically least monic irreducible polynomial.
FieldTable make_field(std::uint32_t q);

/// Returns {p, k} with q = p^k, or {0, 0} if q is not a prime power.
std::pair<std::uint32_t, std::uint32_t> prime_power_decomposition(std::uint64_t q);
bool is_prime(std::uint64_t n);

}  // namespace bicirc
