#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include <Eigen/Core>

namespace lbc {

/// Closed real interval with outward-rounded arithmetic.
///
/// Every operation widens its result by one ulp on each side, so the
/// enclosure stays valid under floating-point rounding. Anything that would
/// produce NaN (0*inf, inf-inf, division by an interval containing zero)
/// yields the entire real line instead.
class Interval {
 public:
  constexpr Interval() = default;
  // Implicit on purpose: constants mix freely with intervals in templated
  // expression code.
  constexpr Interval(double v) : lo_(v), hi_(v) {}  // NOLINT
  constexpr Interval(double lo, double hi) : lo_(lo), hi_(hi) {}

  static constexpr Interval entire() {
    return {-std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
  }

  [[nodiscard]] constexpr double lo() const { return lo_; }
  [[nodiscard]] constexpr double hi() const { return hi_; }
  [[nodiscard]] constexpr bool contains(double v) const { return lo_ <= v && v <= hi_; }
  [[nodiscard]] constexpr bool is_entire() const {
    return lo_ == -std::numeric_limits<double>::infinity() &&
           hi_ == std::numeric_limits<double>::infinity();
  }

  friend Interval operator+(const Interval& a, const Interval& b) {
    return widen(a.lo_ + b.lo_, a.hi_ + b.hi_);
  }
  friend Interval operator-(const Interval& a, const Interval& b) {
    return widen(a.lo_ - b.hi_, a.hi_ - b.lo_);
  }
  friend Interval operator-(const Interval& a) { return {-a.hi_, -a.lo_}; }
  friend Interval operator*(const Interval& a, const Interval& b) {
    const double p[4] = {a.lo_ * b.lo_, a.lo_ * b.hi_, a.hi_ * b.lo_, a.hi_ * b.hi_};
    return widen(*std::min_element(p, p + 4), *std::max_element(p, p + 4));
  }
  friend Interval operator/(const Interval& a, const Interval& b) {
    if (b.lo_ <= 0.0 && b.hi_ >= 0.0) return entire();
    return a * widen(1.0 / b.hi_, 1.0 / b.lo_);
  }

  Interval& operator+=(const Interval& o) { return *this = *this + o; }
  Interval& operator-=(const Interval& o) { return *this = *this - o; }
  Interval& operator*=(const Interval& o) { return *this = *this * o; }
  Interval& operator/=(const Interval& o) { return *this = *this / o; }

  friend bool operator==(const Interval& a, const Interval& b) {
    return a.lo_ == b.lo_ && a.hi_ == b.hi_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Interval& x) {
    return os << '[' << x.lo_ << ", " << x.hi_ << ']';
  }

 private:
  static Interval widen(double lo, double hi) {
    if (std::isnan(lo) || std::isnan(hi)) return entire();
    return {std::nextafter(lo, -std::numeric_limits<double>::infinity()),
            std::nextafter(hi, std::numeric_limits<double>::infinity())};
  }

  double lo_ = 0.0;
  double hi_ = 0.0;
};

inline double pow_int(double x, unsigned k) {
  double result = 1.0;
  for (unsigned i = 0; i < k; ++i) result *= x;
  return result;
}

/// x^k for a non-negative integer exponent. Computed from the endpoints, so
/// even powers of zero-straddling intervals stay tight; each endpoint is
/// widened by k+1 ulps to cover the k rounded multiplications.
inline Interval pow_int(const Interval& x, unsigned k) {
  if (k == 0) return Interval(1.0);
  if (k == 1) return x;
  if (x.is_entire()) return Interval::entire();
  double lo = 0.0;
  double hi = 0.0;
  if (k % 2 == 1 || x.lo() >= 0.0) {
    lo = pow_int(x.lo(), k);
    hi = pow_int(x.hi(), k);
  } else if (x.hi() <= 0.0) {
    lo = pow_int(x.hi(), k);
    hi = pow_int(x.lo(), k);
  } else {
    lo = 0.0;
    hi = pow_int(std::max(-x.lo(), x.hi()), k);
  }
  constexpr double inf = std::numeric_limits<double>::infinity();
  for (unsigned i = 0; i <= k; ++i) {
    if (lo != 0.0 || k % 2 == 1) lo = std::nextafter(lo, -inf);
    hi = std::nextafter(hi, inf);
  }
  return {lo, hi};
}

}  // namespace lbc

namespace Eigen {

template <>
struct NumTraits<lbc::Interval> : GenericNumTraits<lbc::Interval> {
  using Real = lbc::Interval;
  using NonInteger = lbc::Interval;
  using Nested = lbc::Interval;
  using Literal = lbc::Interval;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 4,
    MulCost = 8,
  };
  static inline Real epsilon() { return lbc::Interval(std::numeric_limits<double>::epsilon()); }
  static inline Real dummy_precision() { return lbc::Interval(1e-12); }
  static inline Real highest() { return lbc::Interval(std::numeric_limits<double>::max()); }
  static inline Real lowest() { return lbc::Interval(std::numeric_limits<double>::lowest()); }
  static inline int digits10() { return std::numeric_limits<double>::digits10; }
};

}  // namespace Eigen
