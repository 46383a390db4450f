#include "ppc/galois_field.hpp"

#include <stdexcept>
#include <string>

namespace ppc {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t f = 2; f * f <= n; ++f)
    if (n % f == 0) return false;
  return true;
}

bool prime_power(std::uint64_t q, std::uint32_t& p, std::uint32_t& k) {
  if (q < 2) return false;
  std::uint64_t f = 2;
  while (f * f <= q && q % f != 0) ++f;
  if (q % f != 0) f = q;
  std::uint32_t e = 0;
  while (q % f == 0) {
    q /= f;
    ++e;
  }
  if (q != 1) return false;
  p = static_cast<std::uint32_t>(f);
  k = e;
  return true;
}

namespace {

using Poly = std::vector<std::uint32_t>;  // constant term first

Poly digits(std::uint32_t value, std::uint32_t p, std::uint32_t len) {
  Poly out(len, 0);
  for (std::uint32_t i = 0; i < len; ++i) {
    out[i] = value % p;
    value /= p;
  }
  return out;
}

std::uint32_t pack(const Poly& poly, std::uint32_t p) {
  std::uint32_t value = 0;
  for (std::size_t i = poly.size(); i-- > 0;) value = value * p + poly[i];
  return value;
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::uint32_t r = 1;
  for (std::uint32_t e = p - 2, b = a; e; e >>= 1, b = static_cast<std::uint32_t>(std::uint64_t{b} * b % p))
    if (e & 1) r = static_cast<std::uint32_t>(std::uint64_t{r} * b % p);
  return r;
}

// Remainder of num modulo a monic-or-not den over GF(p); den must have a nonzero leading coefficient.
Poly poly_mod(Poly num, const Poly& den, std::uint32_t p) {
  const std::size_t dd = den.size() - 1;
  const std::uint32_t lead_inv = inv_mod(den[dd], p);
  for (std::size_t i = num.size(); i-- > dd;) {
    const std::uint32_t c = static_cast<std::uint32_t>(std::uint64_t{num[i]} * lead_inv % p);
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) {
      const std::size_t idx = i - dd + j;
      num[idx] = static_cast<std::uint32_t>((num[idx] + std::uint64_t{p - c} * den[j]) % p);
    }
  }
  num.resize(dd);
  return num;
}

bool is_zero(const Poly& poly) {
  for (auto c : poly)
    if (c) return false;
  return true;
}

bool irreducible(const Poly& f, std::uint32_t p) {
  const std::uint32_t k = static_cast<std::uint32_t>(f.size() - 1);
  for (std::uint32_t deg = 1; 2 * deg <= k; ++deg) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < deg; ++i) count *= p;
    for (std::uint64_t low = 0; low < count; ++low) {
      Poly g = digits(static_cast<std::uint32_t>(low), p, deg);
      g.push_back(1);
      if (is_zero(poly_mod(f, g, p))) return false;
    }
  }
  return true;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& modulus, std::uint32_t p) {
  Poly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{a[i]} * b[j]) % p);
  return poly_mod(prod, modulus, p);
}

}  // namespace

GaloisField GaloisField::build(std::uint32_t p, std::uint32_t k, std::uint32_t max_order) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
  if (k == 0) throw std::invalid_argument("field extension degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    q *= p;
    if (q > max_order)
      throw std::invalid_argument("field order " + std::to_string(p) + "^" + std::to_string(k) +
                                  " exceeds the configured maximum " + std::to_string(max_order));
  }

  GaloisField field;
  field.p_ = p;
  field.k_ = k;
  field.q_ = static_cast<std::uint32_t>(q);

  // Monic degree-k candidates in increasing base-p value of their lower coefficients;
  // the leading coefficient is fixed, so this is the lexicographic order read from x^k down.
  if (k == 1) {
    field.modulus_ = {0, 1};
  } else {
    for (std::uint32_t low = 0; low < q; ++low) {
      Poly f = digits(low, p, k);
      f.push_back(1);
      if (f[0] != 0 && irreducible(f, p)) {
        field.modulus_ = std::move(f);
        break;
      }
    }
  }

  const std::uint32_t group = field.q_ - 1;
  field.exp_.assign(2 * static_cast<std::size_t>(group == 0 ? 1 : group), 0);
  field.log_.assign(field.q_, 0);
  if (field.q_ == 2) {
    field.exp_ = {1, 1};
    field.log_[1] = 0;
    return field;
  }
  for (std::uint32_t g = 2; g < field.q_; ++g) {
    const Poly gen = digits(g, p, k);
    Poly cur = digits(1, p, k);
    std::uint32_t period = 0;
    bool primitive = true;
    std::vector<std::uint32_t> powers;
    powers.reserve(group);
    do {
      powers.push_back(pack(cur, p));
      cur = k == 1 ? Poly{static_cast<std::uint32_t>(std::uint64_t{cur[0]} * gen[0] % p)}
                   : poly_mulmod(cur, gen, field.modulus_, p);
      ++period;
      if (period < group && pack(cur, p) == 1) {
        primitive = false;
        break;
      }
    } while (period < group);
    if (!primitive) continue;
    for (std::uint32_t i = 0; i < group; ++i) {
      field.exp_[i] = powers[i];
      field.exp_[i + group] = powers[i];
      field.log_[powers[i]] = i;
    }
    return field;
  }
  throw std::logic_error("no primitive element found");
}

GaloisField::Element GaloisField::add(Element a, Element b) const {
  if (k_ == 1) return (a + b) % p_;
  if (p_ == 2) return a ^ b;
  Element out = 0;
  Element scale = 1;
  for (std::uint32_t i = 0; i < k_; ++i) {
    out += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return out;
}

GaloisField::Element GaloisField::neg(Element a) const {
  if (k_ == 1) return (p_ - a) % p_;
  if (p_ == 2) return a;
  Element out = 0;
  Element scale = 1;
  for (std::uint32_t i = 0; i < k_; ++i) {
    out += ((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return out;
}

GaloisField::Element GaloisField::mul(Element a, Element b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[log_[a] + log_[b]];
}

GaloisField::Element GaloisField::inv(Element a) const {
  if (a == 0) throw std::domain_error("zero has no multiplicative inverse");
  const std::uint32_t group = q_ - 1;
  return exp_[(group - log_[a]) % group];
}

}  // namespace ppc
