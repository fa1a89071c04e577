#pragma once

// Polynomial differential forms on a single simplex with values in the
// exterior algebra of a fixed fiber. On a k-simplex with vertices at
// positions 0..k the redundant barycentric coordinates satisfy
// sum t_a = 1; the canonical presentation eliminates position 0 via
// t_0 = 1 - sum_{a>=1} t_a and dt_0 = -sum_{a>=1} dt_a, so a form is stored
// as a sum of terms  P(t_1..t_k) * dt_I ^ theta_J  with I inside {1..k}
// and J inside {1..n}, |I| + |J| = degree. Base and fiber generators all
// anticommute; a stored monomial lists dt's first, then theta's, each in
// ascending index order.
//
// Index bookkeeping: polynomial variable v and base mask bit v both stand
// for barycentric position v + 1; fiber mask bit b stands for theta^{b+1}.

#include <map>
#include <vector>

#include "pwcoh/combinatorics.hpp"
#include "pwcoh/lie_algebra.hpp"
#include "pwcoh/polynomial.hpp"
#include "pwcoh/rational.hpp"
#include "pwcoh/simplicial.hpp"

namespace pwcoh {

struct TermKey {
  Mask i_mask = 0;
  Mask j_mask = 0;
  auto operator<=>(const TermKey&) const = default;
};

class PolyForm {
 public:
  PolyForm(Simplex simplex, int fiber_dim, int degree);

  const Simplex& simplex() const { return simplex_; }
  int fiber_dim() const { return fiber_dim_; }
  int degree() const { return degree_; }
  // Dimension of the underlying simplex, i.e. the number of canonical vars.
  int base_dim() const { return simplex_.dimension(); }

  bool is_zero() const { return terms_.empty(); }
  // Max total degree of the coefficient polynomials; 0 for the zero form.
  int coefficient_degree() const;
  const std::map<TermKey, Polynomial>& terms() const { return terms_; }

  // Accumulates coeff * dt_I ^ theta_J; validates index ranges and degree.
  void add_term(Mask i_mask, Mask j_mask, const Polynomial& coeff);

  PolyForm operator-() const;
  PolyForm operator+(const PolyForm& o) const;
  PolyForm operator-(const PolyForm& o) const;
  PolyForm scaled(const Rational& c) const;
  bool operator==(const PolyForm&) const = default;

 private:
  Simplex simplex_;
  int fiber_dim_;
  int degree_;
  std::map<TermKey, Polynomial> terms_;
};

PolyForm wedge(const PolyForm& a, const PolyForm& b);

// d = d_deRham + d_CE:
//   d(P dt_I theta_J) = sum_a dP/dt_a dt_a^dt_I theta_J
//                     + (-1)^{|I|} P dt_I ^ d_CE(theta_J).
PolyForm differential(const PolyForm& w, const LieAlgebra& g);

// Pullback along the inclusion of a face: absent barycentric positions are
// set to t = 0, dt = 0 in the redundant presentation, then the result is
// re-canonicalized in the face's own coordinates. Fiber part untouched.
PolyForm restrict_to_face(const PolyForm& w, const Simplex& f);

// Pullback along the order-preserving affine bijection source -> target.
// Canonical coordinates are position-based, so this relabels the simplex.
PolyForm affine_pullback(const PolyForm& w, const Simplex& source, const Simplex& target);

// Smallest cutoff exponent m for which (1-t_j)^m phi*(w) is polynomial,
// where phi is the retraction of d away from its vertex at position j onto
// the opposite facet (the simplex of w). Always at least 1.
int required_cutoff_exponent(const PolyForm& w, const Simplex& d, int j);

// (1-t_j)^m * phi*(w) on d. Restricting the result to the facet opposite
// position j gives back w; m below required_cutoff_exponent is rejected.
PolyForm retraction_pullback_with_cutoff(const PolyForm& w, const Simplex& d, int j, int m);

struct FormArgument {
  std::vector<Rational> tangent;  // length k+1, coordinates sum to zero
  std::vector<Rational> fiber;    // length n
};

// Evaluates at a point of the closed simplex (redundant barycentric
// coordinates, length k+1) on degree() many arguments.
Rational evaluate(const PolyForm& w, const std::vector<Rational>& point,
                  const std::vector<FormArgument>& args);

}  // namespace pwcoh
