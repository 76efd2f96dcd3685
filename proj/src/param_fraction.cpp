#include "nkoszul/param_fraction.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace nkoszul {

namespace {

struct Registry {
  std::mutex mutex;
  std::vector<std::string> names;
  std::unordered_map<std::string, std::size_t> index;
};

Registry& registry() {
  static Registry r;
  return r;
}

int mono_cmp(const Monomial& a, const Monomial& b) {
  std::size_t len = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < len; ++i) {
    std::uint32_t x = i < a.size() ? a[i] : 0;
    std::uint32_t y = i < b.size() ? b[i] : 0;
    if (x != y) return x < y ? -1 : 1;
  }
  return 0;
}

struct MonoGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return mono_cmp(a, b) > 0; }
};

void trim(Monomial& m) {
  while (!m.empty() && m.back() == 0) m.pop_back();
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

std::optional<Monomial> mono_div(const Monomial& a, const Monomial& b) {
  if (b.size() > a.size()) {
    for (std::size_t i = a.size(); i < b.size(); ++i)
      if (b[i] != 0) return std::nullopt;
  }
  Monomial r(a);
  for (std::size_t i = 0; i < b.size() && i < a.size(); ++i) {
    if (a[i] < b[i]) return std::nullopt;
    r[i] -= b[i];
  }
  trim(r);
  return r;
}

// Pseudo-remainder of a by b as polynomials in one variable with polynomial
// coefficients (index = power).
std::vector<Polynomial> pseudo_remainder(std::vector<Polynomial> a, const std::vector<Polynomial>& b) {
  auto strip = [](std::vector<Polynomial>& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
  };
  strip(a);
  const std::size_t db = b.size() - 1;
  const Polynomial& lb = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    std::size_t da = a.size() - 1;
    Polynomial la = a.back();
    std::size_t shift = da - db;
    for (auto& c : a) c = c * lb;
    for (std::size_t k = 0; k <= db; ++k) a[k + shift] = a[k + shift] - la * b[k];
    strip(a);
  }
  return a;
}

Polynomial content_in(const Polynomial& p, std::size_t var) {
  Polynomial g;
  for (const auto& c : p.coefficients_in(var)) {
    if (c.is_zero()) continue;
    g = Polynomial::gcd(g, c);
    if (g.is_constant() && !g.is_zero()) break;
  }
  return g;
}

Polynomial exact(const Polynomial& a, const Polynomial& b) {
  auto q = Polynomial::divide_exact(a, b);
  if (!q) throw std::logic_error("polynomial division expected to be exact");
  return *q;
}

Polynomial primitive_part(const Polynomial& p, std::size_t var) {
  if (p.is_zero()) return p;
  return exact(p, content_in(p, var));
}

}  // namespace

std::size_t param_index(std::string_view name) {
  auto& r = registry();
  std::lock_guard lock(r.mutex);
  auto it = r.index.find(std::string(name));
  if (it != r.index.end()) return it->second;
  r.names.emplace_back(name);
  r.index.emplace(std::string(name), r.names.size() - 1);
  return r.names.size() - 1;
}

std::string param_name(std::size_t index) {
  auto& r = registry();
  std::lock_guard lock(r.mutex);
  if (index >= r.names.size()) throw std::out_of_range("unknown parameter index");
  return r.names[index];
}

// ---------------------------------------------------------------- Polynomial

Polynomial::Polynomial(const Rational& c) {
  if (!c.is_zero()) terms_.push_back({{}, c});
}

Polynomial Polynomial::variable(std::size_t index) {
  Monomial m(index + 1, 0);
  m[index] = 1;
  Polynomial p;
  p.terms_.push_back({std::move(m), Rational(1)});
  return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  Polynomial p;
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void Polynomial::normalize() {
  for (auto& t : terms_) trim(t.exponents);
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return mono_cmp(a.exponents, b.exponents) > 0; });
  std::vector<Term> merged;
  for (auto& t : terms_) {
    if (!merged.empty() && mono_cmp(merged.back().exponents, t.exponents) == 0) {
      merged.back().coeff += t.coeff;
    } else {
      merged.push_back(std::move(t));
    }
  }
  std::erase_if(merged, [](const Term& t) { return t.coeff.is_zero(); });
  terms_ = std::move(merged);
}

Rational Polynomial::constant_value() const {
  if (!is_constant()) throw std::logic_error("polynomial is not constant");
  return terms_.empty() ? Rational() : terms_[0].coeff;
}

std::optional<std::size_t> Polynomial::max_variable() const {
  std::optional<std::size_t> best;
  for (const auto& t : terms_) {
    if (!t.exponents.empty()) {
      std::size_t v = t.exponents.size() - 1;
      if (!best || v > *best) best = v;
    }
  }
  return best;
}

std::uint32_t Polynomial::degree_in(std::size_t var) const {
  std::uint32_t d = 0;
  for (const auto& t : terms_)
    if (var < t.exponents.size()) d = std::max(d, t.exponents[var]);
  return d;
}

std::vector<Polynomial> Polynomial::coefficients_in(std::size_t var) const {
  std::vector<std::vector<Term>> buckets(degree_in(var) + 1);
  for (const auto& t : terms_) {
    std::uint32_t e = var < t.exponents.size() ? t.exponents[var] : 0;
    Term s = t;
    if (var < s.exponents.size()) s.exponents[var] = 0;
    buckets[e].push_back(std::move(s));
  }
  std::vector<Polynomial> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(from_terms(std::move(b)));
  return out;
}

Polynomial Polynomial::from_coefficients(const std::vector<Polynomial>& coeffs, std::size_t var) {
  std::vector<Term> terms;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    for (const auto& t : coeffs[k].terms_) {
      Term s = t;
      if (k > 0) {
        if (s.exponents.size() <= var) s.exponents.resize(var + 1, 0);
        s.exponents[var] += static_cast<std::uint32_t>(k);
      }
      terms.push_back(std::move(s));
    }
  }
  return from_terms(std::move(terms));
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  Polynomial r;
  r.terms_.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms_.size() || j < b.terms_.size()) {
    int c = i == a.terms_.size()   ? -1
            : j == b.terms_.size() ? 1
                                   : mono_cmp(a.terms_[i].exponents, b.terms_[j].exponents);
    if (c > 0) {
      r.terms_.push_back(a.terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(b.terms_[j++]);
    } else {
      Rational s = a.terms_[i].coeff + b.terms_[j].coeff;
      if (!s.is_zero()) r.terms_.push_back({a.terms_[i].exponents, s});
      ++i;
      ++j;
    }
  }
  return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.is_constant()) return a.scaled(b.terms_[0].coeff);
  if (a.is_constant()) return b.scaled(a.terms_[0].coeff);
  std::map<Monomial, Rational, MonoGreater> acc;
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) {
      auto m = mono_mul(s.exponents, t.exponents);
      trim(m);
      acc[m] += s.coeff * t.coeff;
    }
  Polynomial r;
  for (auto& [m, c] : acc)
    if (!c.is_zero()) r.terms_.push_back({m, c});
  return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (c.is_zero()) return {};
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coeff *= c;
  return p;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (b.is_constant()) return a.scaled(b.terms_[0].coeff.inverse());
  Polynomial rem = a;
  std::vector<Term> quotient;
  const Term& lb = b.leading();
  while (!rem.is_zero()) {
    const Term& lr = rem.leading();
    auto m = mono_div(lr.exponents, lb.exponents);
    if (!m) return std::nullopt;
    Term t{*m, lr.coeff / lb.coeff};
    Polynomial step;
    step.terms_.push_back(t);
    rem = rem - step * b;
    quotient.push_back(std::move(t));
  }
  return from_terms(std::move(quotient));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(leading().coeff.inverse());
}

Polynomial Polynomial::gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Polynomial(Rational(1));
  auto va = a.max_variable();
  auto vb = b.max_variable();
  std::size_t v = std::max(*va, *vb);
  if (a.degree_in(v) == 0) return gcd(a, content_in(b, v));
  if (b.degree_in(v) == 0) return gcd(content_in(a, v), b);

  Polynomial ca = content_in(a, v);
  Polynomial cb = content_in(b, v);
  Polynomial c = gcd(ca, cb);
  auto pa = exact(a, ca).coefficients_in(v);
  auto pb = exact(b, cb).coefficients_in(v);
  if (pa.size() < pb.size()) std::swap(pa, pb);
  Polynomial g;
  while (true) {
    auto r = pseudo_remainder(pa, pb);
    if (r.empty()) {
      g = primitive_part(from_coefficients(pb, v), v);
      break;
    }
    if (r.size() == 1) {
      g = Polynomial(Rational(1));
      break;
    }
    pa = std::move(pb);
    pb = primitive_part(from_coefficients(r, v), v).coefficients_in(v);
  }
  return (c * g).monic();
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    bool neg = c.sign() < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < t.exponents.size(); ++i) {
      if (t.exponents[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += param_name(i);
      if (t.exponents[i] > 1) mono += "^" + std::to_string(t.exponents[i]);
    }
    if (mono.empty()) {
      out += c.to_string();
    } else if (c.is_one()) {
      out += mono;
    } else {
      out += c.to_string() + "*" + mono;
    }
  }
  return out;
}

// ------------------------------------------------------------- ParamFraction

ParamFraction::ParamFraction(const Polynomial& num) : num_(num), den_(Rational(1)) {}

ParamFraction::ParamFraction(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw std::domain_error("division by zero");
  *this = reduce(num, den);
}

ParamFraction ParamFraction::reduce(Polynomial num, Polynomial den) {
  if (num.is_zero()) return ParamFraction();
  Polynomial g = Polynomial::gcd(num, den);
  if (!g.is_constant()) {
    num = exact(num, g);
    den = exact(den, g);
  }
  Rational lc = den.leading().coeff;
  if (!lc.is_one()) {
    Rational inv = lc.inverse();
    num = num.scaled(inv);
    den = den.scaled(inv);
  }
  return ParamFraction(std::move(num), std::move(den), Canonical{});
}

Rational ParamFraction::constant_value() const {
  return num_.constant_value() / den_.constant_value();
}

ParamFraction ParamFraction::operator-() const { return ParamFraction(-num_, den_, Canonical{}); }

ParamFraction ParamFraction::inverse() const {
  if (num_.is_zero()) throw std::domain_error("division by zero");
  Rational lc = num_.leading().coeff.inverse();
  return ParamFraction(den_.scaled(lc), num_.scaled(lc), Canonical{});
}

ParamFraction operator+(const ParamFraction& a, const ParamFraction& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) {
    if (a.den_.is_constant()) return ParamFraction(a.num_ + b.num_, a.den_, ParamFraction::Canonical{});
    return ParamFraction::reduce(a.num_ + b.num_, a.den_);
  }
  Polynomial g = Polynomial::gcd(a.den_, b.den_);
  Polynomial bd = exact(b.den_, g);
  Polynomial ad = exact(a.den_, g);
  Polynomial num = a.num_ * bd + b.num_ * ad;
  Polynomial den = a.den_ * bd;
  if (num.is_zero()) return ParamFraction();
  Polynomial h = Polynomial::gcd(num, g);
  if (!h.is_constant()) {
    num = exact(num, h);
    den = exact(den, h);
  }
  return ParamFraction::reduce(std::move(num), std::move(den));
}

ParamFraction operator-(const ParamFraction& a, const ParamFraction& b) { return a + (-b); }

ParamFraction operator*(const ParamFraction& a, const ParamFraction& b) {
  if (a.is_zero() || b.is_zero()) return ParamFraction();
  Polynomial g1 = Polynomial::gcd(a.num_, b.den_);
  Polynomial g2 = Polynomial::gcd(b.num_, a.den_);
  Polynomial num = exact(a.num_, g1) * exact(b.num_, g2);
  Polynomial den = exact(a.den_, g2) * exact(b.den_, g1);
  Rational lc = den.leading().coeff;
  if (!lc.is_one()) {
    Rational inv = lc.inverse();
    num = num.scaled(inv);
    den = den.scaled(inv);
  }
  return ParamFraction(std::move(num), std::move(den), ParamFraction::Canonical{});
}

ParamFraction operator/(const ParamFraction& a, const ParamFraction& b) { return a * b.inverse(); }

std::string ParamFraction::to_string() const {
  if (den_.is_constant() && den_.constant_value().is_one()) return num_.to_string();
  auto wrap = [](const Polynomial& p) {
    std::string s = p.to_string();
    return p.terms().size() > 1 || s.find('/') != std::string::npos ? "(" + s + ")" : s;
  };
  return wrap(num_) + "/" + wrap(den_);
}

}  // namespace nkoszul
