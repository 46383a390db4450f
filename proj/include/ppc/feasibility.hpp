#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ppc/log_real.hpp"

namespace ppc {

/// (n, d, a, b) with n carried as a real log10 value.
struct FeasibilityParams {
  double log10_n = 0.0;
  std::uint32_t d = 8;
  std::uint32_t a = 1;
  std::uint32_t b = 4;
};

/**
 * K = 2^d C(22 ln n + d, d) d^(d/2) / [2 pi (n + 1 - 11 ln n - sqrt n)]^((d-1)/2),
 * the binomial with real top taken through the Gamma function.
 * Throws std::domain_error when the bracket is nonpositive.
 */
LogReal log_K(double log10_n, std::uint32_t d);

/// K^(a+1) (n^2+n+1) C(n^2+n, a+1). Requires a >= 1.
LogReal log_Pa(const FeasibilityParams& params);

/// K^(b+1) 11 ln n (n^2+n+1) C(n+1, b+1) (n^2+n-(b+1))^(b+1) / (n+1). Requires b+1 <= n+1.
LogReal log_Pb(const FeasibilityParams& params);

struct FeasibilityReport {
  bool feasible = false;
  LogReal pa;
  LogReal pb;
  /// P_a + P_b.
  LogReal total;
  /// 1 - (P_a + P_b) when positive.
  std::optional<LogReal> margin;
};

/// P_a + P_b < 1.
FeasibilityReport feasible(const FeasibilityParams& params);

/// feasible() with every precondition failure read as "not feasible".
bool feasible_or_false(const FeasibilityParams& params);

/// Search grid for min_order. b reaches well past 12 because the color constraint only binds around b = 24 at d = 8.
struct SearchGrid {
  std::uint32_t a_min = 1, a_max = 8;
  std::uint32_t b_min = 4, b_max = 64;
  std::uint32_t m_min = 2, m_max = 12;
  double tol = 0.01;
  double log10_lo = 0.30103;  // n = 2
  double log10_hi = 300.0;
};

/// Smallest log10 n (to grid.tol) at which (d, a, b) is feasible, or nullopt below grid.log10_hi.
std::optional<double> threshold_log10(std::uint32_t d, std::uint32_t a, std::uint32_t b, const SearchGrid& grid = {});

struct MinOrder {
  std::uint32_t d = 0;
  double log10_n_min = 0.0;
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  std::uint32_t m = 0;
  /// m/(m-1) (m! a b (m-1))^(1/m) at the witness.
  double color_value = 0.0;
};

/**
 * Smallest order over (a, b, m) with m/(m-1)(m! a b (m-1))^(1/m) <= d and
 * P_a + P_b < 1. Ties go to the first (a, b) in ascending order; m is the
 * color-optimal m for that (a, b). Throws Infeasible when nothing on the
 * grid qualifies.
 */
MinOrder min_order(std::uint32_t d, const SearchGrid& grid = {});

/// Least d in [d_lo, d_hi] with feasible(n, d, a, b); nullopt when none.
std::optional<std::uint32_t> least_colors(double log10_n, std::uint32_t a, std::uint32_t b, std::uint32_t d_lo = 2,
                                          std::uint32_t d_hi = 256);

}  // namespace ppc
