#include "pwcoh/polynomial.hpp"

namespace pwcoh {

Polynomial::Polynomial(int nvars) : nvars_(nvars) {
  if (nvars < 0 || nvars > Monomial::kMaxVars)
    throw std::invalid_argument("polynomial variable count out of range");
}

Polynomial Polynomial::constant(int nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Monomial(), c);
  return p;
}

Polynomial Polynomial::variable(int nvars, int v) {
  if (v < 0 || v >= nvars) throw std::invalid_argument("variable index out of range");
  Polynomial p(nvars);
  p.add_term(Monomial::var(v), 1);
  return p;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  for (int v = nvars_; v < Monomial::kMaxVars; ++v)
    if (m.exp(v) != 0) throw std::invalid_argument("monomial uses variable beyond ring");
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial out(nvars_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("polynomial ring mismatch");
  Polynomial out = *this;
  for (const auto& [m, c] : o.terms_) out.add_term(m, c);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("polynomial ring mismatch");
  Polynomial out = *this;
  for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("polynomial ring mismatch");
  Polynomial out(nvars_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) out.add_term(ma.times(mb), ca * cb);
  return out;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  Polynomial out(nvars_);
  if (c == 0) return out;
  for (const auto& [m, t] : terms_) out.terms_.emplace(m, t * c);
  return out;
}

Polynomial Polynomial::derivative(int v) const {
  if (v < 0 || v >= nvars_) throw std::invalid_argument("variable index out of range");
  Polynomial out(nvars_);
  for (const auto& [m, c] : terms_) {
    const int e = m.exp(v);
    if (e == 0) continue;
    out.add_term(m.with_exp(v, e - 1), c * e);
  }
  return out;
}

Rational Polynomial::eval(const std::vector<Rational>& x) const {
  if (static_cast<int>(x.size()) != nvars_)
    throw std::invalid_argument("evaluation point has wrong arity");
  // Lazily grown power tables keep repeated exponents cheap.
  std::vector<std::vector<Rational>> pow(nvars_, std::vector<Rational>{Rational(1)});
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational v = c;
    for (int var = 0; var < nvars_; ++var) {
      const int e = m.exp(var);
      auto& table = pow[var];
      while (static_cast<int>(table.size()) <= e) table.push_back(table.back() * x[var]);
      if (e > 0) v *= table[e];
    }
    total += v;
  }
  return total;
}

Polynomial Polynomial::subst_zero(int v) const {
  if (v < 0 || v >= nvars_) throw std::invalid_argument("variable index out of range");
  Polynomial out(nvars_);
  for (const auto& [m, c] : terms_)
    if (m.exp(v) == 0) out.add_term(m, c);
  return out;
}

Polynomial Polynomial::subst(int v, const Polynomial& replacement) const {
  if (v < 0 || v >= nvars_) throw std::invalid_argument("variable index out of range");
  if (replacement.nvars_ != nvars_) throw std::invalid_argument("polynomial ring mismatch");
  // Split into sum_e t_v^e * Q_e and reassemble with cached powers.
  std::map<int, Polynomial> by_exp;
  for (const auto& [m, c] : terms_) {
    const int e = m.exp(v);
    by_exp.try_emplace(e, nvars_).first->second.add_term(m.with_exp(v, 0), c);
  }
  Polynomial out(nvars_);
  Polynomial rpow = Polynomial::constant(nvars_, 1);
  int cur = 0;
  for (const auto& [e, q] : by_exp) {
    for (; cur < e; ++cur) rpow = rpow * replacement;
    out = out + rpow * q;
  }
  return out;
}

Polynomial Polynomial::relabel(const std::vector<int>& map, int new_nvars) const {
  if (static_cast<int>(map.size()) != nvars_) throw std::invalid_argument("relabel map has wrong arity");
  Polynomial out(new_nvars);
  for (const auto& [m, c] : terms_) {
    Monomial nm;
    for (int v = 0; v < nvars_; ++v) {
      const int e = m.exp(v);
      if (e == 0) continue;
      if (map[v] < 0) throw std::invalid_argument("relabel drops a variable that occurs");
      if (map[v] >= new_nvars) throw std::invalid_argument("relabel target out of range");
      if (nm.exp(map[v]) != 0) throw std::invalid_argument("relabel map not injective");
      nm = nm.with_exp(map[v], e);
    }
    out.add_term(nm, c);
  }
  return out;
}

Polynomial power(const Polynomial& base, int e) {
  if (e < 0) throw std::invalid_argument("negative polynomial power");
  Polynomial out = Polynomial::constant(base.nvars(), 1);
  for (int i = 0; i < e; ++i) out = out * base;
  return out;
}

}  // namespace pwcoh
