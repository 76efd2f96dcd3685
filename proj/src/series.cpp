#include "nkoszul/series.hpp"

namespace nkoszul {

std::size_t MultiSeries::total(const Exponents& e) {
  std::size_t s = 0;
  for (auto x : e) s += x;
  return s;
}

MultiSeries MultiSeries::constant(std::size_t variables, std::size_t truncation, const Scalar& c) {
  MultiSeries s(variables, truncation);
  s.add_term(Exponents(variables, 0), c);
  return s;
}

MultiSeries MultiSeries::variable(std::size_t variables, std::size_t truncation, std::size_t i, const Scalar& c) {
  if (i >= variables) throw std::out_of_range("series variable index");
  MultiSeries s(variables, truncation);
  Exponents e(variables, 0);
  e[i] = 1;
  s.add_term(e, c);
  return s;
}

Scalar MultiSeries::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar() : it->second;
}

void MultiSeries::add_term(const Exponents& e, const Scalar& c) {
  if (e.size() != vars_) throw std::invalid_argument("exponent vector of the wrong length");
  if (c.is_zero() || total(e) > trunc_) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiSeries operator+(const MultiSeries& a, const MultiSeries& b) {
  if (a.vars_ != b.vars_) throw std::invalid_argument("series variable counts differ");
  MultiSeries out(a.vars_, std::min(a.trunc_, b.trunc_));
  for (const auto& [e, c] : a.terms_) out.add_term(e, c);
  for (const auto& [e, c] : b.terms_) out.add_term(e, c);
  return out;
}

MultiSeries MultiSeries::operator-() const {
  MultiSeries out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

MultiSeries operator-(const MultiSeries& a, const MultiSeries& b) { return a + (-b); }

MultiSeries operator*(const MultiSeries& a, const MultiSeries& b) {
  if (a.vars_ != b.vars_) throw std::invalid_argument("series variable counts differ");
  MultiSeries out(a.vars_, std::min(a.trunc_, b.trunc_));
  Exponents e(a.vars_);
  for (const auto& [ea, ca] : a.terms_) {
    std::size_t da = MultiSeries::total(ea);
    if (da > out.trunc_) continue;
    for (const auto& [eb, cb] : b.terms_) {
      if (da + MultiSeries::total(eb) > out.trunc_) continue;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MultiSeries invert(const MultiSeries& a) {
  const Exponents zero(a.vars_, 0);
  Scalar c0 = a.coefficient(zero);
  if (c0.is_zero()) throw NotInvertibleError("series constant term is zero");
  // a = c0 (1 - u) with u of positive order; 1/a = c0^{-1} sum_k u^k.
  Scalar inv0 = c0.inverse();
  MultiSeries u(a.vars_, a.trunc_);
  for (const auto& [e, c] : a.terms_)
    if (e != zero) u.add_term(e, -(c * inv0));
  MultiSeries result = MultiSeries::constant(a.vars_, a.trunc_, Scalar(1));
  MultiSeries power = result;
  for (std::size_t k = 1; k <= a.trunc_; ++k) {
    power = power * u;
    if (power.terms_.empty()) break;
    result = result + power;
  }
  for (auto& [e, c] : result.terms_) c = c * inv0;
  return result;
}

std::optional<Exponents> first_difference(const MultiSeries& a, const MultiSeries& b) {
  const std::size_t trunc = std::min(a.trunc_, b.trunc_);
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  auto skip = [&](auto& it, const auto& end) {
    while (it != end && MultiSeries::total(it->first) > trunc) ++it;
  };
  while (true) {
    skip(ia, a.terms_.end());
    skip(ib, b.terms_.end());
    bool ea = ia == a.terms_.end();
    bool eb = ib == b.terms_.end();
    if (ea && eb) return std::nullopt;
    if (ea) return ib->first;
    if (eb) return ia->first;
    if (ia->first < ib->first) return ia->first;
    if (ib->first < ia->first) return ib->first;
    if (!(ia->second == ib->second)) return ia->first;
    ++ia;
    ++ib;
  }
}

ScalarSeries MultiSeries::collapse() const {
  ScalarSeries out(ScalarRing{}, trunc_);
  std::vector<Scalar> coeffs(trunc_ + 1);
  for (const auto& [e, c] : terms_) coeffs[total(e)] += c;
  return ScalarSeries(ScalarRing{}, trunc_, std::move(coeffs));
}

}  // namespace nkoszul
