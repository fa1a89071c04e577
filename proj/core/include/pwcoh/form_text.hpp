#pragma once

#include <optional>
#include <string>

#include "pwcoh/polyform.hpp"
#include "pwcoh/polynomial.hpp"

namespace pwcoh {

// Canonical text for a polynomial: one term per monomial in the internal
// (degree, key) order, each an explicit rational coefficient followed by its
// variables, joined by " + ". Example: "1 + -1/2 t2 + 2 t1^2 t3". Zero
// prints "0".
// Variables are the barycentric coordinates t1..tk of the simplex; t0 is
// eliminated and never appears.
std::string polynomial_text(const Polynomial& p);

// Parses the canonical polynomial text. Accepts exactly the shape printed by
// polynomial_text (ascending variable indices are not required, duplicates
// multiply). Returns nullopt on malformed input.
std::optional<Polynomial> parse_polynomial(const std::string& text, int nvars);

// Canonical text for a form: a sum of terms
//   (poly) * dt[positions] ^ theta[indices]
// with 1-based strictly ascending positions and indices. Zero prints "0".
std::string polyform_text(const PolyForm& w);

// Parses the canonical form text onto the given simplex. The declared degree
// must match every term. Returns nullopt on malformed input.
std::optional<PolyForm> parse_polyform(const std::string& text, const Simplex& s,
                                       int fiber_dim, int degree);

}  // namespace pwcoh
