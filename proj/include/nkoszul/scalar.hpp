#pragma once

#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include "nkoszul/param_fraction.hpp"
#include "nkoszul/rational.hpp"

namespace nkoszul {

/// Coefficient field element: an exact rational, or a rational function in
/// named parameters.
///
/// A value whose rational function is constant is always demoted to the
/// rational form, so equal values have identical representations.
class Scalar {
 public:
  Scalar() = default;
  Scalar(std::int64_t v) : r_(v) {}            // NOLINT(google-explicit-constructor)
  Scalar(const Rational& r) : r_(r) {}          // NOLINT(google-explicit-constructor)
  Scalar(const ParamFraction& f);               // NOLINT(google-explicit-constructor)

  /// The parameter with the given name, e.g. "q12".
  static Scalar param(std::string_view name);

  /// Parses an arithmetic expression over integers and parameter names:
  /// "3/4", "-q12", "(q12^2 - 1)/(q12 + 1)".
  static Scalar parse(std::string_view text);

  bool is_zero() const { return !f_ && r_.is_zero(); }
  bool is_one() const { return !f_ && r_.is_one(); }
  bool is_rational() const { return !f_; }
  const Rational& rational() const;
  ParamFraction to_fraction() const;

  std::string to_string() const;

  Scalar operator-() const;
  Scalar inverse() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
  Scalar& operator/=(const Scalar& b) { return *this = *this / b; }

  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  static Scalar from_fraction(ParamFraction f);
  Rational r_;
  std::shared_ptr<const ParamFraction> f_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace nkoszul
