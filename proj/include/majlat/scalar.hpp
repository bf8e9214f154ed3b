#pragma once

// Numeric modes shared by every module.
//
// Exact mode uses GMP rationals; every comparison is exact. Float mode uses
// double and a single tolerance tau: a - b counts as zero iff |a - b| <= tau.
// The tolerance is thread-local so a computation can scope its own setting
// with ToleranceScope without affecting other threads.

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace majlat {

using Rational = mpq_class;

enum class NumericMode { Exact, Float };

inline constexpr double kDefaultTolerance = 1e-12;

double float_tolerance() noexcept;
void set_float_tolerance(double tau);

class ToleranceScope {
 public:
  explicit ToleranceScope(double tau);
  ~ToleranceScope();
  ToleranceScope(const ToleranceScope&) = delete;
  ToleranceScope& operator=(const ToleranceScope&) = delete;

 private:
  double saved_;
};

template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr NumericMode mode = NumericMode::Exact;
  static int cmp(const Rational& a, const Rational& b) {
    const int c = ::cmp(a, b);
    return (c > 0) - (c < 0);
  }
  static Rational from_int(long v) { return Rational(v); }
  static Rational ratio(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
  static double to_double(const Rational& v) { return v.get_d(); }
  // Accepts "12", "-0.525", "1.5e-3" and "p/q".
  static Rational parse(std::string_view text);
  // Terminating decimals are printed exactly; others are rounded to 20
  // fractional digits.
  static std::string to_decimal(const Rational& v);
  static std::string to_rational(const Rational& v) { return v.get_str(); }
  // Scale used when summing tolerance over d entries: zero in exact mode.
  static Rational tolerance() { return Rational(0); }
};

template <>
struct ScalarTraits<double> {
  static constexpr NumericMode mode = NumericMode::Float;
  static int cmp(double a, double b) {
    const double diff = a - b;
    const double tau = float_tolerance();
    if (diff > tau) return 1;
    if (diff < -tau) return -1;
    return 0;
  }
  static double from_int(long v) { return static_cast<double>(v); }
  static double ratio(long num, long den) {
    return static_cast<double>(num) / static_cast<double>(den);
  }
  static double to_double(double v) { return v; }
  static double parse(std::string_view text);
  // Shortest representation that round-trips.
  static std::string to_decimal(double v);
  static std::string to_rational(double v) { return to_decimal(v); }
  static double tolerance() { return float_tolerance(); }
};

template <class T>
int scalar_cmp(const T& a, const T& b) {
  return ScalarTraits<T>::cmp(a, b);
}
template <class T>
bool scalar_eq(const T& a, const T& b) {
  return scalar_cmp(a, b) == 0;
}
template <class T>
bool scalar_le(const T& a, const T& b) {
  return scalar_cmp(a, b) <= 0;
}
template <class T>
bool scalar_lt(const T& a, const T& b) {
  return scalar_cmp(a, b) < 0;
}

template <class T>
T parse_scalar(std::string_view text) {
  return ScalarTraits<T>::parse(text);
}

template <class T>
std::string to_decimal_string(const T& v) {
  return ScalarTraits<T>::to_decimal(v);
}

template <class T>
double to_double(const T& v) {
  return ScalarTraits<T>::to_double(v);
}

}  // namespace majlat
