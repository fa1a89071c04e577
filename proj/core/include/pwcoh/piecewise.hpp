#pragma once

// Piecewise polynomial forms on a simplicial complex with a fixed fiber Lie
// algebra: one PolyForm per simplex, compatible under restriction to faces.
// Includes the global differential, restriction to subcomplexes, and the
// extension algorithms (over a full boundary, over part of a boundary, and
// from an arbitrary subcomplex).

#include <map>
#include <vector>

#include "pwcoh/lie_algebra.hpp"
#include "pwcoh/polyform.hpp"
#include "pwcoh/simplicial.hpp"

namespace pwcoh {

// A simplicial complex whose every simplex carries the same fiber algebra.
class AlgebroidComplex {
 public:
  // Rejects a fiber whose structure constants violate the Jacobi identity.
  AlgebroidComplex(SimplicialComplex base, LieAlgebra fiber);

  const SimplicialComplex& base() const { return base_; }
  const LieAlgebra& fiber() const { return fiber_; }

  bool operator==(const AlgebroidComplex&) const = default;

 private:
  SimplicialComplex base_;
  LieAlgebra fiber_;
};

class PiecewiseForm {
 public:
  // One part per simplex of the base, each of the given degree, each living
  // on its simplex with the fiber's dimension. Compatibility of the parts is
  // NOT enforced here; it is a separate, testable predicate.
  PiecewiseForm(AlgebroidComplex complex, int degree, std::map<Simplex, PolyForm> parts);

  static PiecewiseForm zero(const AlgebroidComplex& complex, int degree);

  const AlgebroidComplex& complex() const { return complex_; }
  int degree() const { return degree_; }
  const std::map<Simplex, PolyForm>& parts() const { return parts_; }
  const PolyForm& part(const Simplex& s) const;

  bool is_zero() const;
  // Max coefficient degree across parts; 0 for a zero or empty form.
  int coefficient_degree() const;

  // Replaces one part; the structural checks of the constructor apply.
  void set_part(const Simplex& s, const PolyForm& w);

  PiecewiseForm operator-() const;
  PiecewiseForm operator+(const PiecewiseForm& o) const;
  PiecewiseForm operator-(const PiecewiseForm& o) const;
  PiecewiseForm scaled(const Rational& c) const;
  bool operator==(const PiecewiseForm&) const = default;

 private:
  AlgebroidComplex complex_;
  int degree_;
  std::map<Simplex, PolyForm> parts_;
};

// True iff every part restricts to the part of each of its facets. Facet
// agreement propagates to all deeper faces since restriction is transitive.
bool validate_compatibility(const PiecewiseForm& w);

// Per-simplex differential; compatible input gives compatible output.
PiecewiseForm global_differential(const PiecewiseForm& w);

PiecewiseForm restrict_to_subcomplex(const PiecewiseForm& w, const SimplicialComplex& l);

// Spreads a single top-level form over the closure of its simplex.
PiecewiseForm spread_over_closure(const PolyForm& w, const LieAlgebra& fiber);

enum class FacetOrder { kAscending, kDescending };

struct BoundaryExtension {
  PiecewiseForm extension;                // on the closure of d
  std::vector<PiecewiseForm> residuals;   // boundary residual after each facet step
};

// Extends xi, given on the full boundary complex of d, to the closure of d.
// Facets are processed opposite vertex positions 0..k (or reversed); each
// step retracts the residual's facet part into the interior with the minimal
// cutoff exponent and subtracts it. After step s the residual vanishes on
// every facet processed so far, so the sweep terminates with residual zero
// and the result restricts to xi exactly.
BoundaryExtension extend_over_boundary_traced(const PiecewiseForm& xi, const Simplex& d,
                                              FacetOrder order = FacetOrder::kAscending);
PiecewiseForm extend_over_boundary(const PiecewiseForm& xi, const Simplex& d,
                                   FacetOrder order = FacetOrder::kAscending);

// Extends forms given on a subset of the facets of d (pairwise agreeing on
// shared faces) to the closure of d: uncovered vertices get zero, then
// uncovered faces are filled dimension by dimension via extend_over_boundary.
PiecewiseForm extend_partial_boundary(const std::map<Simplex, PolyForm>& facet_forms,
                                      const Simplex& d, const LieAlgebra& fiber);

// Extends w from a subcomplex of k to all of k, ascending by dimension.
// Restriction of the result to w's base gives back w exactly.
PiecewiseForm extend_from_subcomplex(const PiecewiseForm& w, const SimplicialComplex& k,
                                     FacetOrder order = FacetOrder::kAscending);

}  // namespace pwcoh
