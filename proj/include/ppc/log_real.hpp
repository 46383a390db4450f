#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

namespace ppc {

/**
 * Nonnegative real stored as its natural log in extended precision.
 * Zero is an explicit state; products add logs, sums use log-sum-exp.
 */
class LogReal {
 public:
  using value_type = long double;

  LogReal() = default;  // zero

  static LogReal from_log(value_type log_value) {
    LogReal r;
    r.zero_ = false;
    r.log_ = log_value;
    return r;
  }
  static LogReal from_value(value_type x) {
    if (x < 0) throw std::domain_error("LogReal holds nonnegative values only");
    return x == 0 ? LogReal{} : from_log(std::log(x));
  }
  static LogReal one() { return from_log(0); }

  bool is_zero() const noexcept { return zero_; }
  /// -inf for zero.
  value_type log() const noexcept { return zero_ ? -std::numeric_limits<value_type>::infinity() : log_; }
  value_type value() const noexcept { return zero_ ? 0 : std::exp(log_); }

  LogReal& operator*=(const LogReal& o) {
    if (zero_ || o.zero_) return *this = LogReal{};
    log_ += o.log_;
    return *this;
  }
  LogReal& operator/=(const LogReal& o) {
    if (o.zero_) throw std::domain_error("LogReal division by zero");
    if (!zero_) log_ -= o.log_;
    return *this;
  }
  LogReal& operator+=(const LogReal& o) {
    if (o.zero_) return *this;
    if (zero_) return *this = o;
    const value_type hi = log_ > o.log_ ? log_ : o.log_;
    const value_type lo = log_ > o.log_ ? o.log_ : log_;
    log_ = hi + std::log1p(std::exp(lo - hi));
    return *this;
  }

  LogReal pow(value_type e) const {
    if (zero_) return e == 0 ? one() : LogReal{};
    return from_log(log_ * e);
  }

  friend LogReal operator*(LogReal a, const LogReal& b) { return a *= b; }
  friend LogReal operator/(LogReal a, const LogReal& b) { return a /= b; }
  friend LogReal operator+(LogReal a, const LogReal& b) { return a += b; }

  friend bool operator<(const LogReal& a, const LogReal& b) {
    if (b.zero_) return false;
    if (a.zero_) return true;
    return a.log_ < b.log_;
  }
  friend bool operator>(const LogReal& a, const LogReal& b) { return b < a; }

 private:
  bool zero_ = true;
  value_type log_ = 0;
};

}  // namespace ppc
