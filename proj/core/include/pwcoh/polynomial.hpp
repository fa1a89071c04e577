#pragma once

// Multivariate polynomials over Rational in a fixed number of variables.
// Exponents pack eight bits per variable into a single 64-bit key, so a
// polynomial supports up to 8 variables with exponents up to 255. That is
// ample for barycentric coordinates on low-dimensional simplices and keeps
// term maps cheap to compare and deterministic to iterate.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "pwcoh/rational.hpp"

namespace pwcoh {

class Monomial {
 public:
  static constexpr int kMaxVars = 8;
  static constexpr int kMaxExp = 255;

  Monomial() : key_(0) {}

  static Monomial var(int v, int e = 1) { return Monomial().with_exp(v, e); }

  int exp(int v) const {
    check_var(v);
    return static_cast<int>((key_ >> (8 * v)) & 0xffu);
  }

  Monomial with_exp(int v, int e) const {
    check_var(v);
    if (e < 0 || e > kMaxExp) throw std::invalid_argument("monomial exponent out of range");
    Monomial m;
    m.key_ = (key_ & ~(std::uint64_t{0xff} << (8 * v))) |
             (static_cast<std::uint64_t>(e) << (8 * v));
    return m;
  }

  Monomial times(const Monomial& o) const {
    Monomial m;
    for (int v = 0; v < kMaxVars; ++v) {
      const std::uint64_t s = ((key_ >> (8 * v)) & 0xffu) + ((o.key_ >> (8 * v)) & 0xffu);
      if (s > kMaxExp) throw std::overflow_error("monomial exponent overflow");
      m.key_ |= s << (8 * v);
    }
    return m;
  }

  int degree() const {
    int d = 0;
    for (int v = 0; v < kMaxVars; ++v) d += static_cast<int>((key_ >> (8 * v)) & 0xffu);
    return d;
  }

  std::uint64_t key() const { return key_; }
  auto operator<=>(const Monomial&) const = default;

 private:
  static void check_var(int v) {
    if (v < 0 || v >= kMaxVars) throw std::invalid_argument("monomial variable out of range");
  }
  std::uint64_t key_;
};

class Polynomial {
 public:
  explicit Polynomial(int nvars);

  static Polynomial constant(int nvars, const Rational& c);
  static Polynomial variable(int nvars, int v);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  // Total degree; -1 for the zero polynomial.
  int degree() const;
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  void add_term(const Monomial& m, const Rational& c);

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const Rational& c) const;
  bool operator==(const Polynomial& o) const = default;

  Polynomial derivative(int v) const;
  Rational eval(const std::vector<Rational>& x) const;

  // t_v := 0.
  Polynomial subst_zero(int v) const;
  // t_v := replacement (a polynomial in the same variable set).
  Polynomial subst(int v, const Polynomial& replacement) const;
  // Injective variable relabel into a ring with new_nvars variables;
  // map[v] is the new index, or -1 when t_v must not occur.
  Polynomial relabel(const std::vector<int>& map, int new_nvars) const;

 private:
  int nvars_;
  std::map<Monomial, Rational> terms_;
};

Polynomial power(const Polynomial& base, int e);

}  // namespace pwcoh
