#pragma once

#include "mixrep/scalar.hpp"

#include <compare>
#include <limits>
#include <optional>
#include <string>

namespace mixrep {

/// Extended real: finite value, +inf or -inf. Totally ordered; arithmetic is
/// only defined between finite values.
template <Number T>
class ExtReal {
 public:
  enum class Kind { NegInf, Finite, PosInf };

  ExtReal(T v) : kind_(Kind::Finite), value_(std::move(v)) {}  // NOLINT
  static ExtReal pos_inf() { return ExtReal(Kind::PosInf); }
  static ExtReal neg_inf() { return ExtReal(Kind::NegInf); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  bool is_pos_inf() const { return kind_ == Kind::PosInf; }
  bool is_neg_inf() const { return kind_ == Kind::NegInf; }

  const T& value() const {
    if (!is_finite()) throw invalid_input("extended real is not finite");
    return value_;
  }

  double to_double() const {
    switch (kind_) {
      case Kind::PosInf: return std::numeric_limits<double>::infinity();
      case Kind::NegInf: return -std::numeric_limits<double>::infinity();
      default: return mixrep::to_double(value_);
    }
  }

  ExtReal operator-() const {
    switch (kind_) {
      case Kind::PosInf: return neg_inf();
      case Kind::NegInf: return pos_inf();
      default: return ExtReal(T(-value_));
    }
  }

  friend bool operator==(const ExtReal& a, const ExtReal& b) {
    if (a.kind_ != b.kind_) return false;
    return !a.is_finite() || a.value_ == b.value_;
  }

  friend std::strong_ordering operator<=>(const ExtReal& a, const ExtReal& b) {
    if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
    if (!a.is_finite()) return std::strong_ordering::equal;
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (b.value_ < a.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  std::string str() const {
    switch (kind_) {
      case Kind::PosInf: return "+inf";
      case Kind::NegInf: return "-inf";
      default: return format_number(value_);
    }
  }

 private:
  explicit ExtReal(Kind k) : kind_(k), value_(T(0)) {}

  Kind kind_;
  T value_;
};

}  // namespace mixrep
