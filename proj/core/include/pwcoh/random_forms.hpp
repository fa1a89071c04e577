#pragma once

#include <cstdint>
#include <random>

#include "pwcoh/piecewise.hpp"
#include "pwcoh/polyform.hpp"

namespace pwcoh {

// Deterministic source of small random inputs for property tests. Every draw
// goes through one generator, so a fixed seed reproduces a whole suite.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [lo, hi], inclusive.
  int int_in(int lo, int hi);
  // Nonzero numerator in [-max_abs_num, max_abs_num], denominator in
  // [1, max_den].
  Rational rational(int max_abs_num, int max_den);

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

Polynomial random_polynomial(SeededRng& rng, int nvars, int max_degree,
                             int terms);

// A form of the given degree on s with a handful of random terms. The split
// between base and fiber exterior degrees is drawn uniformly from the
// admissible pairs; returns the zero form when the degree is not realizable.
PolyForm random_polyform(SeededRng& rng, const Simplex& s, int fiber_dim,
                         int degree, int max_coef_degree);

// Compatible form on the boundary complex of d: a random form on d itself
// restricted to every boundary face, so compatibility holds by construction.
PiecewiseForm random_boundary_form(SeededRng& rng, const Simplex& d,
                                   const LieAlgebra& fiber, int degree,
                                   int max_coef_degree);

// Closure of a random subset of the simplices of k; may be empty.
SimplicialComplex random_subcomplex(SeededRng& rng, const SimplicialComplex& k);

}  // namespace pwcoh
