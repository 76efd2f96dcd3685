#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nkoszul/rational.hpp"

namespace nkoszul {

/// Process-wide table of parameter names. Indices are assigned on first use
/// and never change, so polynomials built in different places agree on
/// variable numbering.
std::size_t param_index(std::string_view name);
std::string param_name(std::size_t index);

/// Exponent vector indexed by parameter id, with trailing zeros trimmed.
using Monomial = std::vector<std::uint32_t>;

/// Sparse multivariate polynomial over the rationals.
///
/// Terms are kept sorted in strictly decreasing lex order (parameter 0 most
/// significant) with no zero coefficients, so structural equality is value
/// equality.
class Polynomial {
 public:
  struct Term {
    Monomial exponents;
    Rational coeff;
    bool operator==(const Term&) const = default;
  };

  Polynomial() = default;
  Polynomial(const Rational& c);  // NOLINT(google-explicit-constructor)
  static Polynomial variable(std::size_t index);
  static Polynomial from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].exponents.empty()); }
  Rational constant_value() const;
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading() const { return terms_.front(); }

  /// Largest parameter id with a positive exponent, or nullopt for constants.
  std::optional<std::size_t> max_variable() const;
  std::uint32_t degree_in(std::size_t var) const;

  /// Coefficients c_k (free of var) with *this = sum_k c_k var^k.
  std::vector<Polynomial> coefficients_in(std::size_t var) const;
  static Polynomial from_coefficients(const std::vector<Polynomial>& coeffs, std::size_t var);

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial scaled(const Rational& c) const;

  /// Exact quotient a / b, or nullopt when b does not divide a.
  static std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b);

  /// Greatest common divisor, normalized to leading coefficient one
  /// (zero only when both inputs are zero).
  static Polynomial gcd(const Polynomial& a, const Polynomial& b);

  /// Divides by the leading coefficient.
  Polynomial monic() const;

  bool operator==(const Polynomial&) const = default;

  std::string to_string() const;

 private:
  void normalize();
  std::vector<Term> terms_;
};

/// Element of the rational function field Q(params), kept in lowest terms
/// with a monic denominator. Laurent monomials such as q^-1 are represented
/// as 1/q.
class ParamFraction {
 public:
  ParamFraction() : den_(Rational(1)) {}
  ParamFraction(const Polynomial& num);  // NOLINT(google-explicit-constructor)
  ParamFraction(const Polynomial& num, const Polynomial& den);

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  Rational constant_value() const;

  ParamFraction operator-() const;
  ParamFraction inverse() const;
  friend ParamFraction operator+(const ParamFraction& a, const ParamFraction& b);
  friend ParamFraction operator-(const ParamFraction& a, const ParamFraction& b);
  friend ParamFraction operator*(const ParamFraction& a, const ParamFraction& b);
  friend ParamFraction operator/(const ParamFraction& a, const ParamFraction& b);

  bool operator==(const ParamFraction&) const = default;

  std::string to_string() const;

 private:
  struct Canonical {};
  ParamFraction(Polynomial num, Polynomial den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}
  static ParamFraction reduce(Polynomial num, Polynomial den);
  Polynomial num_;
  Polynomial den_;
};

}  // namespace nkoszul
