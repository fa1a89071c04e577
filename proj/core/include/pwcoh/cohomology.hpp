#pragma once

// Finite-dimensional truncations of the complex of compatible piecewise
// forms, with exact Betti numbers and quotient bases.
//
// The truncation at coefficient degree N is a genuine subcomplex (the
// differential never raises coefficient degree), but its naive cohomology
// overcounts: a truncated cocycle may be the differential of a form of
// higher coefficient degree. Betti numbers therefore use the stabilized
// image: the dimension of d(Omega_M) within the truncation, with the source
// degree M raised until that dimension stops growing. Quotient bases use
// the same stabilized coboundary space, so class computations agree across
// truncations once the Betti data is stable.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "pwcoh/linalg.hpp"
#include "pwcoh/piecewise.hpp"

namespace pwcoh {

// Dimensions and differential matrices of one truncation, in deterministic
// bases (maximal simplex, base index set, monomial, fiber index set).
class TruncatedComplex {
 public:
  TruncatedComplex() = default;

  int truncation() const { return n_; }
  int max_degree() const { return max_degree_; }
  // 0 outside [0, max_degree].
  int dim(int p) const;
  // Matrix of d: degree p -> p+1; defined for p in [0, max_degree].
  const RationalMatrix& d(int p) const;

 private:
  friend class CohomologyEngine;
  int n_ = -1;
  int max_degree_ = -1;
  std::vector<int> dims_;
  std::vector<RationalMatrix> d_;
};

struct StabilizationReport {
  bool converged = false;
  std::vector<int> betti;   // meaningful when converged
  int truncation = -1;      // first N of the stable window
  int window = 0;
  int ceiling = 0;
  std::vector<std::pair<int, std::vector<int>>> history;  // (N, betti at N)
  std::string message;
};

class CohomologyEngine {
 public:
  explicit CohomologyEngine(AlgebroidComplex a);

  CohomologyEngine(const CohomologyEngine&) = delete;
  CohomologyEngine& operator=(const CohomologyEngine&) = delete;
  CohomologyEngine(CohomologyEngine&&) = default;

  const AlgebroidComplex& complex() const { return a_; }
  // Top degree that can carry a nonzero form: dim base + dim fiber.
  int max_form_degree() const { return max_form_degree_; }

  const TruncatedComplex& truncated(int n);
  int dim(int p, int n);

  // Materialized basis of the degree-p truncated space.
  std::vector<PiecewiseForm> assemble(int p, int n);

  // Coordinates of w in the truncated basis; rejects forms that exceed the
  // truncation or are not compatible.
  std::vector<Rational> express(const PiecewiseForm& w, int n);
  PiecewiseForm materialize(int p, int n, const std::vector<Rational>& coords);

  // Basis change of the inclusion of truncation n into m >= n, degree p.
  RationalMatrix inclusion_matrix(int p, int n, int m);

  // Stabilized-image Betti numbers at truncation n, degrees 0..max.
  std::vector<int> betti(int n);
  StabilizationReport stabilized_betti(int start, int window = 2, int ceiling = 6);

  // Basis of d(anything) within the degree-p truncation, source raised
  // until stable; columns are coordinates in the truncated basis.
  const RationalMatrix& stable_coboundary_basis(int p, int n);
  // Cocycles modulo the stabilized coboundaries.
  const QuotientBasis& cohomology_basis(int p, int n);

  // Class coordinates of a closed degree-p vector given in truncation-m
  // coordinates, with respect to cohomology_basis(p, n), n <= m. Returns
  // nullopt only when the coboundary part is invisible at truncation m.
  std::optional<std::vector<Rational>> class_coordinates(int p,
                                                         const std::vector<Rational>& z,
                                                         int m, int n);

 private:
  struct BaseTruncation {
    // Per maximal simplex: ambient coordinate list and lookup.
    std::vector<int> offsets;
    std::vector<std::vector<std::pair<Mask, Monomial>>> local;
    std::vector<std::map<std::pair<Mask, std::uint64_t>, int>> index;
    RationalMatrix basis;  // ambient x dim, compatible solutions
    int ambient = 0;
    int dim = 0;
  };
  struct Block {
    int q = 0;       // base exterior degree
    int jdeg = 0;    // fiber exterior degree, q + jdeg = p
    int offset = 0;
    int base_dim = 0;
    int jcount = 0;
  };
  struct StableImage {
    int source_truncation = -1;
    RationalMatrix basis;  // dim(p, n) x stable image dimension
  };

  const BaseTruncation& base(int q, int n);
  const RationalMatrix& base_differential(int q, int n);  // basis coords, q -> q+1
  std::vector<Block> blocks(int p, int n);
  const RationalMatrix& inclusion_block(int q, int n, int m);
  const StableImage& stable_image(int p, int n);

  AlgebroidComplex a_;
  std::vector<Simplex> maximal_;
  std::map<Simplex, int> maximal_index_;
  std::map<Simplex, int> parent_;  // first maximal simplex containing each simplex
  int max_form_degree_;
  std::map<std::pair<int, int>, BaseTruncation> base_cache_;
  std::map<std::pair<int, int>, RationalMatrix> ddr_cache_;
  std::map<int, TruncatedComplex> tower_cache_;
  std::map<std::tuple<int, int, int>, RationalMatrix> inclusion_cache_;
  std::map<std::pair<int, int>, StableImage> stable_cache_;
  std::map<std::pair<int, int>, QuotientBasis> quotient_cache_;

  friend RationalMatrix restriction_matrix(CohomologyEngine& src, CohomologyEngine& dst,
                                           int p, int n);
};

// Matrix of the restriction cochain map in truncated bases; dst's base must
// be a subcomplex of src's base over the same fiber.
RationalMatrix restriction_matrix(CohomologyEngine& src, CohomologyEngine& dst, int p, int n);

struct InducedMap {
  int degree = 0;
  QuotientBasis source;
  QuotientBasis target;
  RationalMatrix matrix;  // target representatives x source representatives
};

// Induced maps on cohomology of a cochain map given degreewise in truncated
// bases (f[p]: src degree p -> dst degree p, p = 0..size-1). Commutation
// with both differentials is checked exactly before anything is computed.
std::vector<InducedMap> induced_maps(const std::vector<RationalMatrix>& f,
                                     CohomologyEngine& src, CohomologyEngine& dst, int n);

// All monomials in nvars variables of total degree <= max_degree, ordered
// by (degree, packed key); the deterministic coordinate order everywhere.
std::vector<Monomial> monomials_up_to(int nvars, int max_degree);

}  // namespace pwcoh
