#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>

namespace ppc {

/// Exponent set E with, per l, the bucket bound d_l and the largest extension count m among events with that l.
struct ExponentProfile {
  struct Entry {
    std::uint64_t degree = 1;      // d_l
    std::uint64_t extensions = 1;  // max m_i over events with l_i = l
  };
  std::map<std::uint32_t, Entry> per_l;

  std::set<std::uint32_t> exponents() const;
  /// Throws std::invalid_argument when E is empty or an entry is zero.
  void validate() const;
};

struct TauGamma {
  double tau = 0.0;
  double gamma = 0.0;
  /// |phi(tau) - tau phi'(tau)|.
  double residual = 0.0;
};

struct BoundResult {
  double tau = 0.0;
  double gamma = 0.0;
  /// gamma * sup_l (d_l m_l)^(1/l) before rounding up.
  double raw = 0.0;
  std::uint64_t colors = 0;
};

struct OptimalM {
  std::uint32_t m = 0;
  double value = 0.0;
};

/// 1 + sum_{i in E} x^i.
double phi(const std::set<std::uint32_t>& exponents, double x);
double phi_prime(const std::set<std::uint32_t>& exponents, double x);

/**
 * Positive root of phi_E(x) - x phi_E'(x) = 0 and gamma = phi_E'(tau).
 *
 * The root is bracketed by a geometric scan from 1e-6 and refined by
 * bisection down to adjacent doubles. For singleton E = {m} the closed
 * form (m-1)^(-1/m) is cross-checked to 1e-10 and returned, so that exact
 * cases such as E = {2} (tau = 1, gamma = 2) stay exact.
 * Throws std::invalid_argument when min(E) < 2 or E is empty.
 */
TauGamma solve_tau(const std::set<std::uint32_t>& exponents);

/// ceil(gamma * sup_l (d_l m_l)^(1/l)).
BoundResult theorem1_colors(const ExponentProfile& profile);

/// m/(m-1) * (m! * degree * (m-1))^(1/m); degree plays the role of a*b.
double color_value(std::uint32_t m, double degree);

/// Integer m in [2, m_max] minimizing color_value(m, a*b); ties go to the smaller m.
OptimalM optimal_m(std::uint32_t a, std::uint32_t b, std::uint32_t m_max = 50);
/// Same minimization for an arbitrary per-variable event degree.
OptimalM optimal_m_for_degree(double degree, std::uint32_t m_max);

/// Number of colors the estimator needs for a usable partial coloring at (n, a, b); nullopt if none.
using ColorEstimator = std::function<std::optional<std::uint64_t>(double log10_n, std::uint32_t a, std::uint32_t b)>;

/// max(estimate, ceil(min_m color_value)); throws Infeasible when the estimator reports none.
std::uint64_t proposition1_colors(double log10_n, std::uint32_t a, std::uint32_t b, const ColorEstimator& estimator);

/// ceil that treats values within 1e-9 (relative) of an integer as that integer.
std::uint64_t ceil_tolerant(double x);

/// ln(m!) exactly through m = 20, lgamma beyond.
double log_factorial(std::uint32_t m);

}  // namespace ppc
