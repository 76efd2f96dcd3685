#include "nkoszul/rational.hpp"

#include <cctype>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace nkoszul {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

u128 uabs(i128 x) { return x < 0 ? static_cast<u128>(-x) : static_cast<u128>(x); }

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// INT64_MIN is excluded so that negation never overflows.
bool fits(u128 x) { return x <= static_cast<u128>(kMax); }

mpz_class to_mpz(i128 x) {
  bool neg = x < 0;
  u128 u = uabs(x);
  mpz_class hi = static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64));
  mpz_class lo = static_cast<unsigned long>(static_cast<std::uint64_t>(u));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

bool mpz_fits_int64(const mpz_class& z) {
  return mpz_sizeinbase(z.get_mpz_t(), 2) <= 63;
}

std::int64_t mpz_to_int64(const mpz_class& z) {
  // Caller guarantees |z| < 2^63.
  mpz_class a = abs(z);
  std::uint64_t lo = mpz_get_ui(a.get_mpz_t());
  if (sizeof(unsigned long) < 8) {
    mpz_class hi = a >> 32;
    lo = (static_cast<std::uint64_t>(mpz_get_ui(hi.get_mpz_t())) << 32) |
         (mpz_get_ui(a.get_mpz_t()) & 0xffffffffu);
  }
  auto v = static_cast<std::int64_t>(lo);
  return sgn(z) < 0 ? -v : v;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  *this = from_wide(num, den);
}

Rational::Rational(const mpq_class& value) { *this = from_mpq(value); }

Rational::Rational(const mpz_class& value) { *this = from_mpq(mpq_class(value)); }

Rational Rational::from_mpq(mpq_class value) {
  value.canonicalize();
  Rational r;
  if (mpz_fits_int64(value.get_num()) && mpz_fits_int64(value.get_den())) {
    r.num_ = mpz_to_int64(value.get_num());
    r.den_ = mpz_to_int64(value.get_den());
  } else {
    r.num_ = 0;
    r.den_ = 0;
    r.big_ = std::make_shared<const mpq_class>(std::move(value));
  }
  return r;
}

Rational Rational::from_wide(i128 num, i128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  u128 g = gcd128(uabs(num), static_cast<u128>(den));
  if (g > 1) {
    num /= static_cast<i128>(g);
    den /= static_cast<i128>(g);
  }
  if (num == 0) return Rational();
  if (fits(uabs(num)) && fits(static_cast<u128>(den))) {
    Rational r;
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
  }
  mpq_class q(to_mpz(num), to_mpz(den));
  return from_mpq(std::move(q));
}

Rational Rational::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  auto valid_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  auto slash = text.find('/');
  std::string_view num_text = trim(text.substr(0, slash));
  std::string_view den_text = slash == std::string_view::npos ? std::string_view("1") : trim(text.substr(slash + 1));
  if (!valid_int(num_text) || !valid_int(den_text))
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  auto strip_plus = [](std::string_view s) { return (!s.empty() && s.front() == '+') ? s.substr(1) : s; };
  mpz_class num(std::string(strip_plus(num_text)), 10);
  mpz_class den(std::string(strip_plus(den_text)), 10);
  if (den == 0) throw std::domain_error("rational with zero denominator");
  return from_mpq(mpq_class(num, den));
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

mpz_class Rational::numerator() const {
  return big_ ? mpz_class(big_->get_num()) : to_mpz(num_);
}

mpz_class Rational::denominator() const {
  return big_ ? mpz_class(big_->get_den()) : to_mpz(den_);
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(to_mpz(num_), to_mpz(den_));
}

std::string Rational::to_string() const {
  if (!big_) {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }
  if (big_->get_den() == 1) return big_->get_num().get_str();
  return big_->get_num().get_str() + "/" + big_->get_den().get_str();
}

Rational Rational::operator-() const {
  if (!big_) {
    Rational r = *this;
    r.num_ = -num_;
    return r;
  }
  return from_mpq(-*big_);
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (!big_) return from_wide(den_, num_);
  return from_mpq(1 / *big_);
}

Rational operator+(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.num_ == 0) return b;
    if (b.num_ == 0) return a;
    if (a.den_ == 1 && b.den_ == 1) return Rational::from_wide(static_cast<i128>(a.num_) + b.num_, 1);
    i128 num = static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_;
    i128 den = static_cast<i128>(a.den_) * b.den_;
    return Rational::from_wide(num, den);
  }
  return Rational::from_mpq(a.to_mpq() + b.to_mpq());
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.num_ == 0 || b.num_ == 0) return Rational();
    i128 num = static_cast<i128>(a.num_) * b.num_;
    i128 den = static_cast<i128>(a.den_) * b.den_;
    if (den == 1) return Rational::from_wide(num, 1);
    return Rational::from_wide(num, den);
  }
  return Rational::from_mpq(a.to_mpq() * b.to_mpq());
}

Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;  // canonical: inline and big never denote the same value
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    i128 lhs = static_cast<i128>(a.num_) * b.den_;
    i128 rhs = static_cast<i128>(b.num_) * a.den_;
    return lhs <=> rhs;
  }
  int c = cmp(a.to_mpq(), b.to_mpq());
  return c <=> 0;
}

std::size_t Rational::hash() const {
  if (!big_) {
    std::size_t h = std::hash<std::int64_t>{}(num_);
    return h ^ (std::hash<std::int64_t>{}(den_) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
  }
  return std::hash<std::string>{}(to_string());
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

mpz_class binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace nkoszul
