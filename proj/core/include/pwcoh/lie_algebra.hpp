#pragma once

// Finite-dimensional Lie algebras over the rationals, given by structure
// constants, together with their Chevalley-Eilenberg complex. Sign
// convention, fixed once here and consumed everywhere else:
//
//   d theta^k = - sum_{i<j} c_{ij}^k theta^i ^ theta^j
//
// extended to Lambda g* as a degree-1 derivation. d^2 = 0 iff the structure
// constants satisfy the Jacobi identity, which is exactly what validate()
// and the tests check. Indices are 0-based throughout the C++ API.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pwcoh/combinatorics.hpp"
#include "pwcoh/linalg.hpp"
#include "pwcoh/rational.hpp"

namespace pwcoh {

struct BracketEntry {
  int i;  // 0-based, i < j
  int j;
  int k;  // target basis index
  Rational c;
};

class LieAlgebra {
 public:
  // dim may be zero (trivial fiber). Entries must have 0 <= i < j < dim.
  LieAlgebra(int dim, const std::vector<BracketEntry>& entries);
  static LieAlgebra abelian(int dim) { return LieAlgebra(dim, {}); }

  int dim() const { return dim_; }

  // c_{ij}^k for any i, j (antisymmetric in i, j; zero on the diagonal).
  Rational structure_constant(int i, int j, int k) const;
  // [e_i, e_j] as a coefficient vector of length dim.
  std::vector<Rational> bracket(int i, int j) const;

  bool validate() const { return !jacobi_failure().has_value(); }
  // Human-readable description of the first failing Jacobi triple, if any.
  std::optional<std::string> jacobi_failure() const;

  // d theta^k expanded over 2-element masks: list of (mask {i,j}, -c_{ij}^k).
  std::vector<std::pair<Mask, Rational>> ce_diff_covector(int k) const;
  // Derivation extension of the above to the basis monomial theta_J.
  std::vector<std::pair<Mask, Rational>> ce_diff(Mask j_mask) const;

  bool operator==(const LieAlgebra&) const = default;

 private:
  int dim_;
  // Indexed by the pair (i, j), i < j, in lex order; each entry has dim comps.
  std::vector<std::vector<Rational>> table_;
  int pair_index(int i, int j) const;
};

// Matrix of d: Lambda^j g* -> Lambda^{j+1} g* in the subset bases ordered by
// subsets_of_size. Zero-dimensional when j > dim.
RationalMatrix ce_differential_matrix(const LieAlgebra& g, int j);

// Betti numbers of the Chevalley-Eilenberg complex, degrees 0..dim.
std::vector<int> ce_betti(const LieAlgebra& g);

}  // namespace pwcoh
