#pragma once

// Dual scalar model: exact rationals where all data is rational, doubles with
// an absolute tolerance where trigonometry forces irrational coordinates.

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <variant>

namespace mixrep {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline constexpr double kDefaultTol = 1e-9;

struct invalid_parameter : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct invalid_input : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct infeasible_set : std::domain_error {
  using std::domain_error::domain_error;
};

template <class T>
struct NumTraits;

template <>
struct NumTraits<Rational> {
  static constexpr bool exact = true;
  static double to_double(const Rational& v) { return v.convert_to<double>(); }
};

template <>
struct NumTraits<double> {
  static constexpr bool exact = false;
  static double to_double(double v) { return v; }
};

template <class T>
concept Number = requires { NumTraits<T>::exact; };

template <Number T>
double to_double(const T& v) {
  return NumTraits<T>::to_double(v);
}

// Tolerance-aware comparisons. Exact types ignore `tol`.
template <Number T>
bool near_zero(const T& v, double tol = kDefaultTol) {
  if constexpr (NumTraits<T>::exact) {
    return v == 0;
  } else {
    return std::abs(v) <= tol;
  }
}

template <Number T>
bool approx_eq(const T& a, const T& b, double tol = kDefaultTol) {
  return near_zero<T>(a - b, tol);
}

template <Number T>
bool approx_le(const T& a, const T& b, double tol = kDefaultTol) {
  if constexpr (NumTraits<T>::exact) {
    return a <= b;
  } else {
    return a <= b + tol;
  }
}

// Strictly positive beyond tolerance.
template <Number T>
bool definitely_positive(const T& v, double tol = kDefaultTol) {
  if constexpr (NumTraits<T>::exact) {
    return v > 0;
  } else {
    return v > tol;
  }
}

template <Number T>
int tol_sign(const T& v, double tol = kDefaultTol) {
  if (near_zero(v, tol)) return 0;
  return v > 0 ? 1 : -1;
}

template <Number T>
T abs_value(const T& v) {
  return v < 0 ? T(-v) : v;
}

inline BigInt floor_of(const Rational& v) {
  BigInt q = numerator(v) / denominator(v);  // truncates toward zero
  if (q * denominator(v) > numerator(v)) q -= 1;
  return q;
}

inline BigInt ceil_of(const Rational& v) {
  return -floor_of(Rational(-v));
}

inline bool is_integer(const Rational& v) { return denominator(v) == 1; }

// "p/q" for non-integers, "p" for integers.
inline std::string format_rational(const Rational& v) {
  if (denominator(v) == 1) return numerator(v).str();
  return numerator(v).str() + "/" + denominator(v).str();
}

// 12 significant digits.
inline std::string format_double(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  std::string s = buf;
  if (s == "-0") s = "0";
  return s;
}

template <Number T>
std::string format_number(const T& v) {
  if constexpr (NumTraits<T>::exact) {
    return format_rational(v);
  } else {
    return format_double(v);
  }
}

// Runtime dual scalar. Mixed arithmetic promotes to float, and a float result
// carries the larger of the two tolerances.
class Scalar {
 public:
  Scalar() : value_(Rational(0)) {}
  Scalar(Rational v) : value_(std::move(v)) {}  // NOLINT
  Scalar(int v) : value_(Rational(v)) {}        // NOLINT
  Scalar(long long v) : value_(Rational(v)) {}  // NOLINT
  Scalar(double v, double tol = kDefaultTol) : value_(v), tol_(tol) {}  // NOLINT

  static Scalar ratio(long long p, long long q) {
    if (q == 0) throw invalid_parameter("zero denominator");
    return Scalar(Rational(p, q));
  }

  bool is_exact() const { return std::holds_alternative<Rational>(value_); }
  double tol() const { return is_exact() ? 0.0 : tol_; }

  const Rational& exact() const {
    if (!is_exact()) throw invalid_input("scalar is not exact");
    return std::get<Rational>(value_);
  }
  double as_double() const {
    return is_exact() ? std::get<Rational>(value_).convert_to<double>()
                      : std::get<double>(value_);
  }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    return combine(a, b, [](const auto& x, const auto& y) { return x + y; });
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) {
    return combine(a, b, [](const auto& x, const auto& y) { return x - y; });
  }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    return combine(a, b, [](const auto& x, const auto& y) { return x * y; });
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b) {
    if (b.is_exact() ? b.exact() == 0 : b.as_double() == 0.0) {
      throw invalid_parameter("division by zero");
    }
    return combine(a, b, [](const auto& x, const auto& y) { return x / y; });
  }
  Scalar operator-() const { return Scalar(0) - *this; }

  // Exact operands compare exactly; otherwise with the promoted tolerance.
  int compare(const Scalar& other) const {
    if (is_exact() && other.is_exact()) {
      const auto& a = exact();
      const auto& b = other.exact();
      return a < b ? -1 : (a > b ? 1 : 0);
    }
    const double t = std::max(tol(), other.tol());
    const double d = as_double() - other.as_double();
    if (std::abs(d) <= t) return 0;
    return d < 0 ? -1 : 1;
  }
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.compare(b) == 0; }
  friend bool operator<(const Scalar& a, const Scalar& b) { return a.compare(b) < 0; }
  friend bool operator<=(const Scalar& a, const Scalar& b) { return a.compare(b) <= 0; }
  friend bool operator>(const Scalar& a, const Scalar& b) { return a.compare(b) > 0; }
  friend bool operator>=(const Scalar& a, const Scalar& b) { return a.compare(b) >= 0; }

  std::string str() const {
    return is_exact() ? format_rational(exact()) : format_double(as_double());
  }

 private:
  template <class Op>
  static Scalar combine(const Scalar& a, const Scalar& b, Op op) {
    if (a.is_exact() && b.is_exact()) return Scalar(Rational(op(a.exact(), b.exact())));
    return Scalar(op(a.as_double(), b.as_double()), std::max(a.tol(), b.tol()));
  }

  std::variant<Rational, double> value_;
  double tol_ = kDefaultTol;
};

}  // namespace mixrep
