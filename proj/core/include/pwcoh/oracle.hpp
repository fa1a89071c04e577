#pragma once

#include <vector>

#include "pwcoh/lie_algebra.hpp"
#include "pwcoh/linalg.hpp"
#include "pwcoh/simplicial.hpp"

namespace pwcoh {

// Coboundary matrix of simplicial cochains from degree p to p+1. Bases are
// the simplices of each dimension in their natural order; the entry pairing
// a (p+1)-simplex with its i-th facet is (-1)^i.
RationalMatrix simplicial_coboundary(const SimplicialComplex& k, int p);

// Total complex of simplicial cochains with exterior fiber coefficients.
// Degree p collects the bidegrees (q, j) with q + j = p; the differential
// acts by the simplicial coboundary in q and by the fiber differential in j,
// the latter carrying a sign (-1)^q. Computed entirely from combinatorics,
// so it provides an independent check of the piecewise machinery.
class SimplicialFiberComplex {
 public:
  SimplicialFiberComplex(SimplicialComplex k, LieAlgebra g);

  const SimplicialComplex& base() const { return k_; }
  const LieAlgebra& fiber() const { return g_; }

  int max_degree() const { return max_degree_; }  // -1 for the empty complex
  int dim(int p) const;
  const RationalMatrix& d(int p) const;  // degree p to p+1

  std::vector<int> betti() const;

 private:
  SimplicialComplex k_;
  LieAlgebra g_;
  int max_degree_;
  std::vector<int> dims_;
  std::vector<RationalMatrix> d_;
};

// Betti numbers of the total complex, one entry per degree 0..max_degree.
std::vector<int> oracle_betti(const SimplicialComplex& k, const LieAlgebra& g);

}  // namespace pwcoh
