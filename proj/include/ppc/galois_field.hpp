#pragma once

#include <cstdint>
#include <vector>

namespace ppc {

/// Default cap on the field order accepted by GaloisField::build.
inline constexpr std::uint32_t kMaxFieldOrder = 1u << 16;

/**
 * Finite field GF(p^k).
 *
 * Elements are the integers 0..q-1, read as polynomials over GF(p) whose
 * base-p digits are the coefficients (least significant digit = constant
 * term). Multiplication goes through discrete exp/log tables built from a
 * primitive element; addition is digit-wise mod p.
 */
class GaloisField {
 public:
  using Element = std::uint32_t;

  /// Throws std::invalid_argument for non-prime p, k == 0 or p^k > max_order.
  static GaloisField build(std::uint32_t p, std::uint32_t k, std::uint32_t max_order = kMaxFieldOrder);

  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return k_; }
  std::uint32_t order() const noexcept { return q_; }

  /// Coefficients of the monic irreducible modulus, constant term first (size k+1).
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  Element add(Element a, Element b) const;
  Element neg(Element a) const;
  Element sub(Element a, Element b) const { return add(a, neg(b)); }
  Element mul(Element a, Element b) const;
  /// Throws std::domain_error for a == 0.
  Element inv(Element a) const;

  /// A generator of the multiplicative group.
  Element primitive() const noexcept { return exp_[1]; }

 private:
  GaloisField() = default;

  std::uint32_t p_ = 0;
  std::uint32_t k_ = 0;
  std::uint32_t q_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<Element> exp_;        // exp_[i] = g^i, length 2(q-1)
  std::vector<std::uint32_t> log_;  // log_[a] for a != 0
};

bool is_prime(std::uint64_t n);

/// Splits q into p^k; returns false when q is not a prime power (q < 2 included).
bool prime_power(std::uint64_t q, std::uint32_t& p, std::uint32_t& k);

}  // namespace ppc
