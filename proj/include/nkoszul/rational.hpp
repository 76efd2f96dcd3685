#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace nkoszul {

/// Exact rational number.
///
/// Values that fit in a pair of 64-bit integers are kept inline; anything
/// larger falls back to a shared, immutable GMP rational. The representation
/// is canonical: a value is stored inline whenever it fits, and numerator and
/// denominator are always coprime with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);
  explicit Rational(const mpq_class& value);
  explicit Rational(const mpz_class& value);

  /// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed
  /// input and std::domain_error on a zero denominator.
  static Rational parse(std::string_view text);

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const;
  int sign() const;

  mpz_class numerator() const;
  mpz_class denominator() const;
  mpq_class to_mpq() const;

  /// "p/q", or "p" when the denominator is one.
  std::string to_string() const;

  Rational operator-() const;
  Rational inverse() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  std::size_t hash() const;

 private:
  static Rational from_mpq(mpq_class value);
  static Rational from_wide(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Binomial coefficient C(n, k); zero when k < 0 or k > n.
mpz_class binomial(long n, long k);

}  // namespace nkoszul

template <>
struct std::hash<nkoszul::Rational> {
  std::size_t operator()(const nkoszul::Rational& r) const noexcept { return r.hash(); }
};
