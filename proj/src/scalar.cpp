#include "nkoszul/scalar.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace nkoszul {

Scalar::Scalar(const ParamFraction& f) { *this = from_fraction(f); }

Scalar Scalar::from_fraction(ParamFraction f) {
  Scalar s;
  if (f.is_constant()) {
    s.r_ = f.constant_value();
  } else {
    s.f_ = std::make_shared<const ParamFraction>(std::move(f));
  }
  return s;
}

Scalar Scalar::param(std::string_view name) {
  return from_fraction(ParamFraction(Polynomial::variable(param_index(name))));
}

const Rational& Scalar::rational() const {
  if (f_) throw std::logic_error("scalar is not rational: " + f_->to_string());
  return r_;
}

ParamFraction Scalar::to_fraction() const {
  if (f_) return *f_;
  return ParamFraction(Polynomial(r_));
}

std::string Scalar::to_string() const { return f_ ? f_->to_string() : r_.to_string(); }

Scalar Scalar::operator-() const {
  if (!f_) return Scalar(-r_);
  Scalar s;
  s.f_ = std::make_shared<const ParamFraction>(-*f_);
  return s;
}

Scalar Scalar::inverse() const {
  if (!f_) return Scalar(r_.inverse());
  return from_fraction(f_->inverse());
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (!a.f_ && !b.f_) return Scalar(a.r_ + b.r_);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  return Scalar::from_fraction(a.to_fraction() + b.to_fraction());
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  if (!a.f_ && !b.f_) return Scalar(a.r_ - b.r_);
  return a + (-b);
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (!a.f_ && !b.f_) return Scalar(a.r_ * b.r_);
  if (a.is_zero() || b.is_zero()) return Scalar();
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  return Scalar::from_fraction(a.to_fraction() * b.to_fraction());
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (!a.f_ && !b.f_) return Scalar(a.r_ / b.r_);
  if (b.is_zero()) throw std::domain_error("division by zero");
  return Scalar::from_fraction(a.to_fraction() / b.to_fraction());
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!a.f_ && !b.f_) return a.r_ == b.r_;
  if (a.f_ && b.f_) return *a.f_ == *b.f_;
  return false;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

// ------------------------------------------------------------------ parsing

namespace {

class ExpressionParser {
 public:
  explicit ExpressionParser(std::string_view text) : text_(text) {}

  Scalar parse() {
    Scalar v = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return v;
  }

 private:
  Scalar expression() {
    skip_space();
    bool negate = false;
    if (peek('-') || peek('+')) negate = text_[pos_++] == '-';
    Scalar v = term();
    if (negate) v = -v;
    while (true) {
      skip_space();
      if (peek('+')) {
        ++pos_;
        v += term();
      } else if (peek('-')) {
        ++pos_;
        v -= term();
      } else {
        return v;
      }
    }
  }

  Scalar term() {
    Scalar v = power();
    while (true) {
      skip_space();
      if (peek('*')) {
        ++pos_;
        v *= power();
      } else if (peek('/')) {
        ++pos_;
        Scalar d = power();
        if (d.is_zero()) throw std::domain_error("division by zero in '" + std::string(text_) + "'");
        v /= d;
      } else {
        return v;
      }
    }
  }

  Scalar power() {
    Scalar base = atom();
    skip_space();
    if (!peek('^')) return base;
    ++pos_;
    skip_space();
    bool neg = false;
    if (peek('-')) {
      neg = true;
      ++pos_;
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer exponent");
    long e = std::stol(std::string(text_.substr(start, pos_ - start)));
    Scalar r(1);
    for (long i = 0; i < e; ++i) r *= base;
    return neg ? r.inverse() : r;
  }

  Scalar atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Scalar v = expression();
      skip_space();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return v;
    }
    if (c == '-') {
      ++pos_;
      return -atom();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Scalar(Rational::parse(text_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      return Scalar::param(text_.substr(start, pos_ - start));
    }
    fail("unexpected character");
  }

  bool peek(char c) const { return pos_ < text_.size() && text_[pos_] == c; }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const char* what) const {
    throw std::invalid_argument(std::string("malformed scalar '") + std::string(text_) + "': " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar Scalar::parse(std::string_view text) { return ExpressionParser(text).parse(); }

}  // namespace nkoszul
