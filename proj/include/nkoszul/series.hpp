#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "nkoszul/scalar.hpp"

namespace nkoszul {

/// Thrown when a series with a non-invertible constant term is inverted.
class NotInvertibleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Coefficient rings for UniSeries. A ring supplies zero(d) and one() (the
// degree argument lets graded rings build a zero of the right grade), the
// ring operations, and the inverse of a unit constant term.

struct IntegerRing {
  using value_type = mpz_class;
  value_type zero(std::size_t) const { return 0; }
  value_type one() const { return 1; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  bool is_zero(const value_type& a) const { return a == 0; }
  bool equal(const value_type& a, const value_type& b) const { return a == b; }
  std::optional<value_type> unit_inverse(const value_type& a) const {
    if (a == 1 || a == -1) return a;
    return std::nullopt;
  }
  std::string to_string(const value_type& a) const { return a.get_str(); }
};

struct ScalarRing {
  using value_type = Scalar;
  value_type zero(std::size_t) const { return {}; }
  value_type one() const { return Scalar(1); }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  bool is_zero(const value_type& a) const { return a.is_zero(); }
  bool equal(const value_type& a, const value_type& b) const { return a == b; }
  std::optional<value_type> unit_inverse(const value_type& a) const {
    if (a.is_zero()) return std::nullopt;
    return a.inverse();
  }
  std::string to_string(const value_type& a) const { return a.to_string(); }
};

/// Univariate truncated power series c_0 + c_1 t + ... + c_D t^D over a
/// coefficient ring. Coefficients beyond D are never consulted.
template <class Ring>
class UniSeries {
 public:
  using value_type = typename Ring::value_type;

  UniSeries(Ring ring, std::size_t truncation) : ring_(std::move(ring)) {
    coeffs_.reserve(truncation + 1);
    for (std::size_t d = 0; d <= truncation; ++d) coeffs_.push_back(ring_.zero(d));
  }

  /// Series from explicit coefficients; missing degrees are zero.
  UniSeries(Ring ring, std::size_t truncation, std::vector<value_type> coeffs) : UniSeries(std::move(ring), truncation) {
    for (std::size_t d = 0; d < coeffs.size() && d <= truncation; ++d) coeffs_[d] = std::move(coeffs[d]);
  }

  static UniSeries one(Ring ring, std::size_t truncation) {
    UniSeries s(std::move(ring), truncation);
    s.coeffs_[0] = s.ring_.one();
    return s;
  }

  const Ring& ring() const { return ring_; }
  std::size_t truncation() const { return coeffs_.size() - 1; }
  const value_type& operator[](std::size_t d) const { return coeffs_.at(d); }
  void set(std::size_t d, value_type v) {
    if (d < coeffs_.size()) coeffs_[d] = std::move(v);
  }
  const std::vector<value_type>& coefficients() const { return coeffs_; }

  friend UniSeries mul(const UniSeries& a, const UniSeries& b) {
    const std::size_t trunc = std::min(a.truncation(), b.truncation());
    UniSeries out(a.ring_, trunc);
    for (std::size_t d = 0; d <= trunc; ++d) {
      value_type acc = a.ring_.zero(d);
      for (std::size_t i = 0; i <= d; ++i) {
        if (a.ring_.is_zero(a.coeffs_[i]) || a.ring_.is_zero(b.coeffs_[d - i])) continue;
        acc = a.ring_.add(acc, a.ring_.mul(a.coeffs_[i], b.coeffs_[d - i]));
      }
      out.coeffs_[d] = std::move(acc);
    }
    return out;
  }

  friend UniSeries add(const UniSeries& a, const UniSeries& b) {
    const std::size_t trunc = std::min(a.truncation(), b.truncation());
    UniSeries out(a.ring_, trunc);
    for (std::size_t d = 0; d <= trunc; ++d) out.coeffs_[d] = a.ring_.add(a.coeffs_[d], b.coeffs_[d]);
    return out;
  }

  /// Two-sided inverse; requires a unit constant term.
  friend UniSeries invert(const UniSeries& a) {
    auto inv0 = a.ring_.unit_inverse(a.coeffs_[0]);
    if (!inv0) throw NotInvertibleError("series constant term is not invertible");
    UniSeries out(a.ring_, a.truncation());
    out.coeffs_[0] = *inv0;
    for (std::size_t d = 1; d <= a.truncation(); ++d) {
      value_type acc = a.ring_.zero(d);
      for (std::size_t i = 1; i <= d; ++i) {
        if (a.ring_.is_zero(a.coeffs_[i]) || a.ring_.is_zero(out.coeffs_[d - i])) continue;
        acc = a.ring_.add(acc, a.ring_.mul(a.coeffs_[i], out.coeffs_[d - i]));
      }
      out.coeffs_[d] = a.ring_.neg(a.ring_.mul(*inv0, acc));
    }
    return out;
  }

  /// Coefficient-wise equality up to the smaller truncation.
  friend bool equals(const UniSeries& a, const UniSeries& b) {
    return first_difference(a, b) == std::nullopt;
  }

  friend std::optional<std::size_t> first_difference(const UniSeries& a, const UniSeries& b) {
    const std::size_t trunc = std::min(a.truncation(), b.truncation());
    for (std::size_t d = 0; d <= trunc; ++d)
      if (!a.ring_.equal(a.coeffs_[d], b.coeffs_[d])) return d;
    return std::nullopt;
  }

  /// Applies a coefficient-wise map into another ring.
  template <class OtherRing, class F>
  UniSeries<OtherRing> map(OtherRing other, F&& f) const {
    std::vector<typename OtherRing::value_type> vals;
    vals.reserve(coeffs_.size());
    for (const auto& c : coeffs_) vals.push_back(f(c));
    return UniSeries<OtherRing>(std::move(other), truncation(), std::move(vals));
  }

 private:
  Ring ring_;
  std::vector<value_type> coeffs_;
};

using IntSeries = UniSeries<IntegerRing>;
using ScalarSeries = UniSeries<ScalarRing>;

using Exponents = std::vector<std::uint32_t>;

/// Commutative truncated power series in n variables over Scalar, truncated
/// at total degree D.
class MultiSeries {
 public:
  MultiSeries(std::size_t variables, std::size_t truncation) : vars_(variables), trunc_(truncation) {}
  static MultiSeries constant(std::size_t variables, std::size_t truncation, const Scalar& c);
  /// c * t_i.
  static MultiSeries variable(std::size_t variables, std::size_t truncation, std::size_t i,
                              const Scalar& c = Scalar(1));

  std::size_t variables() const { return vars_; }
  std::size_t truncation() const { return trunc_; }
  const std::map<Exponents, Scalar>& terms() const { return terms_; }
  Scalar coefficient(const Exponents& e) const;
  /// Adds c to the coefficient of t^e; terms above the truncation are dropped.
  void add_term(const Exponents& e, const Scalar& c);

  friend MultiSeries operator+(const MultiSeries& a, const MultiSeries& b);
  friend MultiSeries operator-(const MultiSeries& a, const MultiSeries& b);
  friend MultiSeries operator*(const MultiSeries& a, const MultiSeries& b);
  MultiSeries operator-() const;
  friend MultiSeries invert(const MultiSeries& a);

  /// First exponent vector (in map order) where the two series differ, up
  /// to the smaller truncation.
  friend std::optional<Exponents> first_difference(const MultiSeries& a, const MultiSeries& b);
  friend bool equals(const MultiSeries& a, const MultiSeries& b) { return !first_difference(a, b); }

  /// Substitutes t_i = t for every i.
  ScalarSeries collapse() const;

 private:
  static std::size_t total(const Exponents& e);
  std::size_t vars_;
  std::size_t trunc_;
  std::map<Exponents, Scalar> terms_;
};

}  // namespace nkoszul
