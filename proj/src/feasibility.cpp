#include "ppc/feasibility.hpp"

#include <cmath>
#include <future>
#include <stdexcept>
#include <string>

#include "ppc/bounds.hpp"
#include "ppc/errors.hpp"

namespace ppc {

namespace {

using real = long double;

constexpr real kLn10 = 2.302585092994045684017991454684364208L;
constexpr real kLn2 = 0.693147180559945309417232121458176568L;
constexpr real kLn2Pi = 1.837877066409345483560659472811235279L;

// ln(N - i) from ln N without forming N.
real log_minus(real log_n_big, real i) {
  const real ratio = i * std::exp(-log_n_big);
  if (ratio >= 1) throw std::domain_error("binomial top smaller than its bottom");
  return log_n_big + std::log1p(-ratio);
}

// ln C(N, k) for a huge real N and a small integer k: falling factorial over k!.
real log_binom_falling(real log_n_big, std::uint32_t k) {
  real sum = -std::lgamma(static_cast<real>(k) + 1);
  for (std::uint32_t i = 0; i < k; ++i) sum += log_minus(log_n_big, i);
  return sum;
}

struct Logs {
  real ln_n;     // ln n
  real inv_n;    // 1/n
  real ln_n2n1;  // ln(n^2 + n + 1)
  real ln_n2n;   // ln(n^2 + n)
  real ln_n1;    // ln(n + 1)
};

Logs logs_of(double log10_n) {
  Logs g;
  g.ln_n = static_cast<real>(log10_n) * kLn10;
  g.inv_n = std::exp(-g.ln_n);
  g.ln_n2n1 = 2 * g.ln_n + std::log1p(g.inv_n + g.inv_n * g.inv_n);
  g.ln_n2n = 2 * g.ln_n + std::log1p(g.inv_n);
  g.ln_n1 = g.ln_n + std::log1p(g.inv_n);
  return g;
}

void check_params(const FeasibilityParams& p) {
  if (p.d < 2) throw std::invalid_argument("d must be at least 2");
  if (p.a < 1) throw std::invalid_argument("a must be at least 1");
  if (p.b < 4) throw std::invalid_argument("b must be at least 4");
}

real log_k_raw(const Logs& g, std::uint32_t d) {
  if (g.ln_n <= 0) throw std::domain_error("K needs n > 1");
  const real dd = d;
  const real x = 22 * g.ln_n;
  const real log_binom = std::lgamma(x + dd + 1) - std::lgamma(dd + 1) - std::lgamma(x + 1);
  // n + 1 - 11 ln n - sqrt(n) = n (1 + (1 - 11 ln n)/n - 1/sqrt(n))
  const real rel = (1 - 11 * g.ln_n) * g.inv_n - std::exp(-g.ln_n / 2);
  if (rel <= -1) throw std::domain_error("n + 1 - 11 ln n - sqrt(n) is not positive");
  const real log_bracket = kLn2Pi + g.ln_n + std::log1p(rel);
  return dd * kLn2 + log_binom + dd / 2 * std::log(dd) - (dd - 1) / 2 * log_bracket;
}

}  // namespace

LogReal log_K(double log10_n, std::uint32_t d) {
  if (d < 2) throw std::invalid_argument("d must be at least 2");
  return LogReal::from_log(log_k_raw(logs_of(log10_n), d));
}

LogReal log_Pa(const FeasibilityParams& params) {
  check_params(params);
  const Logs g = logs_of(params.log10_n);
  const real k = log_k_raw(g, params.d);
  const std::uint32_t e = params.a + 1;
  return LogReal::from_log(e * k + g.ln_n2n1 + log_binom_falling(g.ln_n2n, e));
}

LogReal log_Pb(const FeasibilityParams& params) {
  check_params(params);
  const Logs g = logs_of(params.log10_n);
  const std::uint32_t e = params.b + 1;
  if (static_cast<real>(e) > std::exp(g.ln_n1) * (1 + 1e-15L))
    throw std::domain_error("b + 1 = " + std::to_string(e) + " exceeds n + 1");
  const real k = log_k_raw(g, params.d);
  // n^2 + n - (b+1) = n^2 (1 + 1/n - (b+1)/n^2)
  const real rel = g.inv_n - e * g.inv_n * g.inv_n;
  if (rel <= -1) throw std::domain_error("n^2 + n - (b + 1) is not positive");
  const real ln_tail = 2 * g.ln_n + std::log1p(rel);
  return LogReal::from_log(e * k + std::log(static_cast<real>(11)) + std::log(g.ln_n) + g.ln_n2n1 +
                           log_binom_falling(g.ln_n1, e) + e * ln_tail - g.ln_n1);
}

FeasibilityReport feasible(const FeasibilityParams& params) {
  FeasibilityReport report;
  report.pa = log_Pa(params);
  report.pb = log_Pb(params);
  report.total = report.pa + report.pb;
  report.feasible = report.total.log() < 0;
  if (report.feasible) report.margin = LogReal::from_log(std::log(-std::expm1(report.total.log())));
  return report;
}

bool feasible_or_false(const FeasibilityParams& params) {
  try {
    return feasible(params).feasible;
  } catch (const std::domain_error&) {
    return false;
  }
}

std::optional<double> threshold_log10(std::uint32_t d, std::uint32_t a, std::uint32_t b, const SearchGrid& grid) {
  constexpr double kScanStep = 0.5;
  auto ok = [&](double x) { return feasible_or_false({x, d, a, b}); };
  double prev = grid.log10_lo;
  if (ok(prev)) return prev;
  double hit = -1;
  for (double x = grid.log10_lo + kScanStep;; x += kScanStep) {
    if (x > grid.log10_hi) x = grid.log10_hi;
    if (ok(x)) {
      hit = x;
      break;
    }
    if (x >= grid.log10_hi) return std::nullopt;
    prev = x;
  }
  double lo = prev, hi = hit;
  while (hi - lo > grid.tol) {
    const double mid = 0.5 * (lo + hi);
    (ok(mid) ? hi : lo) = mid;
  }
  return hi;
}

namespace {

OptimalM best_m(std::uint32_t a, std::uint32_t b, const SearchGrid& grid) {
  OptimalM best{0, 0.0};
  for (std::uint32_t m = std::max(2u, grid.m_min); m <= grid.m_max; ++m) {
    const double v = color_value(m, static_cast<double>(a) * b);
    if (best.m == 0 || v < best.value) best = {m, v};
  }
  return best;
}

}  // namespace

MinOrder min_order(std::uint32_t d, const SearchGrid& grid) {
  if (grid.a_min < 1 || grid.b_min < 4 || grid.a_max < grid.a_min || grid.b_max < grid.b_min ||
      grid.m_max < std::max(2u, grid.m_min) || !(grid.tol > 0))
    throw std::invalid_argument("invalid search grid");

  // One task per a; each returns its best (threshold, b) in ascending b order.
  std::vector<std::future<std::optional<MinOrder>>> tasks;
  for (std::uint32_t a = grid.a_min; a <= grid.a_max; ++a)
    tasks.push_back(std::async(std::launch::async, [=, &grid]() -> std::optional<MinOrder> {
      std::optional<MinOrder> best;
      for (std::uint32_t b = grid.b_min; b <= grid.b_max; ++b) {
        const OptimalM om = best_m(a, b, grid);
        if (om.m == 0 || om.value > d) continue;
        const auto t = threshold_log10(d, a, b, grid);
        if (t && (!best || *t < best->log10_n_min)) best = MinOrder{d, *t, a, b, om.m, om.value};
      }
      return best;
    }));
  std::optional<MinOrder> best;
  for (auto& task : tasks) {
    const auto r = task.get();
    if (r && (!best || r->log10_n_min < best->log10_n_min)) best = r;
  }
  if (!best) throw Infeasible("no (a, b, m) on the grid is feasible for d = " + std::to_string(d));
  return *best;
}

std::optional<std::uint32_t> least_colors(double log10_n, std::uint32_t a, std::uint32_t b, std::uint32_t d_lo,
                                          std::uint32_t d_hi) {
  for (std::uint32_t d = std::max(2u, d_lo); d <= d_hi; ++d)
    if (feasible_or_false({log10_n, d, a, b})) return d;
  return std::nullopt;
}

}  // namespace ppc
