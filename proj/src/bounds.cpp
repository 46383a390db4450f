#include "ppc/bounds.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "ppc/errors.hpp"

namespace ppc {

std::set<std::uint32_t> ExponentProfile::exponents() const {
  std::set<std::uint32_t> out;
  for (const auto& [l, entry] : per_l) out.insert(l);
  return out;
}

void ExponentProfile::validate() const {
  if (per_l.empty()) throw std::invalid_argument("exponent profile is empty");
  for (const auto& [l, entry] : per_l)
    if (l == 0 || entry.degree == 0 || entry.extensions == 0)
      throw std::invalid_argument("exponent profile entry l=" + std::to_string(l) + " has a zero component");
}

double phi(const std::set<std::uint32_t>& exponents, double x) {
  double sum = 1.0;
  for (auto i : exponents) sum += std::pow(x, static_cast<double>(i));
  return sum;
}

double phi_prime(const std::set<std::uint32_t>& exponents, double x) {
  double sum = 0.0;
  for (auto i : exponents) sum += i * std::pow(x, static_cast<double>(i) - 1.0);
  return sum;
}

namespace {

// phi(x) - x phi'(x) = 1 + sum (1 - i) x^i
double root_function(const std::set<std::uint32_t>& exponents, double x) {
  double sum = 1.0;
  for (auto i : exponents) sum += (1.0 - static_cast<double>(i)) * std::pow(x, static_cast<double>(i));
  return sum;
}

}  // namespace

TauGamma solve_tau(const std::set<std::uint32_t>& exponents) {
  if (exponents.empty()) throw std::invalid_argument("exponent set is empty");
  if (*exponents.begin() < 2) throw std::invalid_argument("exponent 1 in E: phi - x phi' has no positive root");

  double lo = 0.0;
  double hi = 1e-6;
  while (root_function(exponents, hi) > 0.0) {
    lo = hi;
    hi *= 1.5;
    if (!std::isfinite(hi) || hi > 1e6)
      throw std::runtime_error("no sign change of phi - x phi' on (0, " + std::to_string(lo) + "]");
  }
  while (true) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (root_function(exponents, mid) > 0.0 ? lo : hi) = mid;
  }
  double tau = std::fabs(root_function(exponents, lo)) <= std::fabs(root_function(exponents, hi)) ? lo : hi;

  if (exponents.size() == 1) {
    const double m = *exponents.begin();
    const double closed = std::pow(m - 1.0, -1.0 / m);
    if (std::fabs(closed - tau) > 1e-10)
      throw std::logic_error("numeric root disagrees with the closed form for E={" +
                             std::to_string(*exponents.begin()) + "}");
    tau = closed;
  }
  return {tau, phi_prime(exponents, tau), std::fabs(root_function(exponents, tau))};
}

std::uint64_t ceil_tolerant(double x) {
  const double r = std::round(x);
  if (std::fabs(x - r) <= 1e-9 * std::max(1.0, std::fabs(x))) return static_cast<std::uint64_t>(r);
  return static_cast<std::uint64_t>(std::ceil(x));
}

BoundResult theorem1_colors(const ExponentProfile& profile) {
  profile.validate();
  const auto tg = solve_tau(profile.exponents());
  double sup = 0.0;
  for (const auto& [l, entry] : profile.per_l) {
    const double base = static_cast<double>(entry.degree) * static_cast<double>(entry.extensions);
    sup = std::max(sup, std::pow(base, 1.0 / l));
  }
  BoundResult out;
  out.tau = tg.tau;
  out.gamma = tg.gamma;
  out.raw = tg.gamma * sup;
  out.colors = ceil_tolerant(out.raw);
  return out;
}

double log_factorial(std::uint32_t m) {
  if (m <= 20) {
    std::uint64_t f = 1;
    for (std::uint32_t i = 2; i <= m; ++i) f *= i;
    return std::log(static_cast<double>(f));
  }
  return std::lgamma(static_cast<double>(m) + 1.0);
}

double color_value(std::uint32_t m, double degree) {
  if (m < 2) throw std::invalid_argument("color value needs m >= 2");
  const double md = m;
  return md / (md - 1.0) * std::exp((log_factorial(m) + std::log(degree) + std::log(md - 1.0)) / md);
}

OptimalM optimal_m_for_degree(double degree, std::uint32_t m_max) {
  if (m_max < 2) throw std::invalid_argument("m_max must be at least 2");
  if (!(degree > 0.0)) throw std::invalid_argument("degree must be positive");
  OptimalM best{2, color_value(2, degree)};
  for (std::uint32_t m = 3; m <= m_max; ++m) {
    const double v = color_value(m, degree);
    if (v < best.value) best = {m, v};
  }
  return best;
}

OptimalM optimal_m(std::uint32_t a, std::uint32_t b, std::uint32_t m_max) {
  if (a < 1) throw std::invalid_argument("a must be at least 1");
  if (b < 4) throw std::invalid_argument("b must be at least 4");
  return optimal_m_for_degree(static_cast<double>(a) * b, m_max);
}

std::uint64_t proposition1_colors(double log10_n, std::uint32_t a, std::uint32_t b, const ColorEstimator& estimator) {
  const auto estimate = estimator(log10_n, a, b);
  if (!estimate)
    throw Infeasible("no partial coloring estimate at log10 n = " + std::to_string(log10_n) +
                     ", a = " + std::to_string(a) + ", b = " + std::to_string(b));
  return std::max(*estimate, ceil_tolerant(optimal_m(a, b).value));
}

}  // namespace ppc
