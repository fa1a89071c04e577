#include "pwcoh/selfcheck.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "pwcoh/form_text.hpp"
#include "pwcoh/piecewise.hpp"
#include "pwcoh/polyform.hpp"
#include "pwcoh/random_forms.hpp"

namespace pwcoh {

namespace {

std::vector<LieAlgebra> fiber_menu() {
  std::vector<LieAlgebra> out;
  out.push_back(LieAlgebra::abelian(0));
  out.push_back(LieAlgebra::abelian(2));
  out.push_back(LieAlgebra(2, {{0, 1, 1, make_rational(1)}}));
  out.push_back(LieAlgebra(3, {{0, 1, 2, make_rational(1)},
                               {0, 2, 1, make_rational(-1)},
                               {1, 2, 0, make_rational(1)}}));
  return out;
}

LieAlgebra random_fiber(SeededRng& rng) {
  const auto menu = fiber_menu();
  return menu[static_cast<std::size_t>(
      rng.int_in(0, static_cast<int>(menu.size()) - 1))];
}

Simplex random_simplex(SeededRng& rng, int dim) {
  std::vector<int> v;
  int cur = rng.int_in(0, 2);
  for (int i = 0; i <= dim; ++i) {
    v.push_back(cur);
    cur += rng.int_in(1, 2);
  }
  return Simplex(std::move(v));
}

// A random simplex with vertices inside {0..4}, dimension 0..3.
Simplex random_pool_simplex(SeededRng& rng) {
  std::vector<int> pool{0, 1, 2, 3, 4};
  std::shuffle(pool.begin(), pool.end(), rng.engine());
  const int dim = rng.int_in(0, 3);
  std::vector<int> v(pool.begin(), pool.begin() + dim + 1);
  std::sort(v.begin(), v.end());
  return Simplex(std::move(v));
}

bool differential_squares_to_zero(SeededRng& rng, std::string& why) {
  const LieAlgebra g = random_fiber(rng);
  const Simplex s = random_simplex(rng, rng.int_in(0, 3));
  const int p = rng.int_in(0, std::min(4, s.dimension() + g.dim()));
  const PolyForm w = random_polyform(rng, s, g.dim(), p, 3);
  if (!differential(differential(w, g), g).is_zero()) {
    why = "second differential is nonzero";
    return false;
  }
  return true;
}

bool leibniz_rule(SeededRng& rng, std::string& why) {
  const LieAlgebra g = random_fiber(rng);
  const Simplex s = random_simplex(rng, rng.int_in(1, 3));
  const int top = s.dimension() + g.dim();
  const int p = rng.int_in(0, std::min(2, top));
  const int q = rng.int_in(0, std::min(2, top - p));
  const PolyForm a = random_polyform(rng, s, g.dim(), p, 2);
  const PolyForm b = random_polyform(rng, s, g.dim(), q, 2);

  const PolyForm lhs = differential(wedge(a, b), g);
  PolyForm rhs = wedge(differential(a, g), b);
  const PolyForm adb = wedge(a, differential(b, g));
  rhs = (p % 2 == 0) ? rhs + adb : rhs - adb;
  if (!(lhs == rhs)) {
    why = "derivation rule fails on a product";
    return false;
  }
  return true;
}

bool wedge_graded_commutative(SeededRng& rng, std::string& why) {
  const LieAlgebra g = random_fiber(rng);
  const Simplex s = random_simplex(rng, rng.int_in(1, 3));
  const int top = s.dimension() + g.dim();
  const int p = rng.int_in(0, std::min(2, top));
  const int q = rng.int_in(0, std::min(2, top - p));
  const PolyForm a = random_polyform(rng, s, g.dim(), p, 2);
  const PolyForm b = random_polyform(rng, s, g.dim(), q, 2);
  const PolyForm ba = wedge(b, a);
  if (!(wedge(a, b) == (p * q % 2 == 0 ? ba : ba.scaled(make_rational(-1))))) {
    why = "wedge is not graded commutative";
    return false;
  }
  return true;
}

bool restriction_chain_map(SeededRng& rng, std::string& why) {
  const LieAlgebra g = random_fiber(rng);
  const Simplex s = random_simplex(rng, rng.int_in(1, 3));
  const auto faces = s.proper_faces();
  const Simplex f = faces[static_cast<std::size_t>(
      rng.int_in(0, static_cast<int>(faces.size()) - 1))];
  const int p = rng.int_in(0, std::min(3, s.dimension() + g.dim()));
  const PolyForm w = random_polyform(rng, s, g.dim(), p, 2);
  if (!(restrict_to_face(differential(w, g), f) ==
        differential(restrict_to_face(w, f), g))) {
    why = "restriction does not commute with the differential";
    return false;
  }
  return true;
}

bool restriction_matches_evaluation(SeededRng& rng, std::string& why) {
  const LieAlgebra g = random_fiber(rng);
  const int kdim = rng.int_in(1, 3);
  const Simplex s = random_simplex(rng, kdim);
  const auto faces = s.proper_faces();
  const Simplex f = faces[static_cast<std::size_t>(
      rng.int_in(0, static_cast<int>(faces.size()) - 1))];
  const int fdim = f.dimension();
  const int p = rng.int_in(0, std::min(3, fdim + g.dim()));
  const PolyForm w = random_polyform(rng, s, g.dim(), p, 2);
  const PolyForm wf = restrict_to_face(w, f);

  std::vector<Rational> pf;
  Rational tot(0);
  for (int r = 0; r <= fdim; ++r) {
    pf.push_back(make_rational(rng.int_in(1, 5)));
    tot += pf.back();
  }
  for (auto& c : pf) c /= tot;

  std::vector<Rational> ps(static_cast<std::size_t>(kdim) + 1, Rational(0));
  for (int r = 0; r <= fdim; ++r)
    ps[static_cast<std::size_t>(*s.position_of(f.vertices()[static_cast<std::size_t>(r)]))] =
        pf[static_cast<std::size_t>(r)];

  std::vector<FormArgument> af, as;
  for (int a = 0; a < p; ++a) {
    FormArgument on_f, on_s;
    on_f.tangent.assign(static_cast<std::size_t>(fdim) + 1, Rational(0));
    Rational sum(0);
    for (int r = 1; r <= fdim; ++r) {
      on_f.tangent[static_cast<std::size_t>(r)] = rng.rational(3, 2);
      sum += on_f.tangent[static_cast<std::size_t>(r)];
    }
    on_f.tangent[0] = -sum;
    for (int b = 0; b < g.dim(); ++b) on_f.fiber.push_back(rng.rational(3, 2));

    on_s.tangent.assign(static_cast<std::size_t>(kdim) + 1, Rational(0));
    for (int r = 0; r <= fdim; ++r)
      on_s.tangent[static_cast<std::size_t>(
          *s.position_of(f.vertices()[static_cast<std::size_t>(r)]))] =
          on_f.tangent[static_cast<std::size_t>(r)];
    on_s.fiber = on_f.fiber;

    af.push_back(std::move(on_f));
    as.push_back(std::move(on_s));
  }

  if (evaluate(wf, pf, af) != evaluate(w, ps, as)) {
    why = "restriction disagrees with evaluation along the face";
    return false;
  }
  return true;
}

bool boundary_extension_round_trip(SeededRng& rng, std::string& why) {
  const LieAlgebra g = random_fiber(rng);
  const int kdim = rng.int_in(1, 3);
  const Simplex d = random_simplex(rng, kdim);
  const int p = rng.int_in(0, std::min(3, kdim - 1 + g.dim()));
  const PiecewiseForm xi = random_boundary_form(rng, d, g, p, 2);

  const BoundaryExtension traced = extend_over_boundary_traced(xi, d);
  if (!(restrict_to_subcomplex(traced.extension, boundary_complex(d)) == xi)) {
    why = "extension does not restrict back to the boundary data";
    return false;
  }
  if (!validate_compatibility(traced.extension)) {
    why = "extension is not compatible";
    return false;
  }
  for (std::size_t i = 0; i < traced.residuals.size(); ++i)
    for (int jpos = 0; jpos <= static_cast<int>(i); ++jpos)
      if (!traced.residuals[i].part(d.facet_opposite(jpos)).is_zero()) {
        why = "residual persists on a processed facet";
        return false;
      }
  return true;
}

bool subcomplex_extension_round_trip(SeededRng& rng, std::string& why) {
  const LieAlgebra g = random_fiber(rng);
  std::vector<Simplex> gens;
  const int ngen = rng.int_in(1, 3);
  for (int i = 0; i < ngen; ++i) gens.push_back(random_pool_simplex(rng));
  const SimplicialComplex k = SimplicialComplex::closure(gens);
  const SimplicialComplex l = random_subcomplex(rng, k);

  const Simplex big(k.vertex_ids());
  const int p = rng.int_in(0, std::min(3, big.dimension() + g.dim()));
  const PolyForm wb = random_polyform(rng, big, g.dim(), p, 2);
  std::map<Simplex, PolyForm> parts;
  for (const Simplex& f : l.simplices()) parts.emplace(f, restrict_to_face(wb, f));
  const PiecewiseForm wl(AlgebroidComplex(l, g), p, std::move(parts));

  const PiecewiseForm ext = extend_from_subcomplex(wl, k);
  if (!(restrict_to_subcomplex(ext, l) == wl)) {
    why = "extension does not restrict back to the subcomplex data";
    return false;
  }
  if (!validate_compatibility(ext)) {
    why = "extension is not compatible";
    return false;
  }
  return true;
}

bool retraction_round_trip(SeededRng& rng, std::string& why) {
  const LieAlgebra g = random_fiber(rng);
  const int kdim = rng.int_in(1, 3);
  const Simplex d = random_simplex(rng, kdim);
  const int j = rng.int_in(0, kdim);
  const Simplex f = d.facet_opposite(j);
  const int p = rng.int_in(0, std::min(3, kdim - 1 + g.dim()));
  const PolyForm w = random_polyform(rng, f, g.dim(), p, 2);

  const int m = required_cutoff_exponent(w, d, j);
  const PolyForm hat = retraction_pullback_with_cutoff(w, d, j, m);
  if (!(restrict_to_face(hat, f) == w)) {
    why = "cutoff pullback does not restrict back to its input";
    return false;
  }
  bool rejected = false;
  try {
    retraction_pullback_with_cutoff(w, d, j, m - 1);
  } catch (const std::invalid_argument&) {
    rejected = true;
  }
  if (!rejected) {
    why = "an undersized cutoff exponent was accepted";
    return false;
  }
  return true;
}

bool text_round_trip(SeededRng& rng, std::string& why) {
  const LieAlgebra g = random_fiber(rng);
  const Simplex s = random_simplex(rng, rng.int_in(0, 3));
  const int p = rng.int_in(0, std::min(4, s.dimension() + g.dim()));
  const PolyForm w = random_polyform(rng, s, g.dim(), p, 3);
  const auto back = parse_polyform(polyform_text(w), s, g.dim(), p);
  if (!back || !(*back == w)) {
    why = "form text did not round-trip: " + polyform_text(w);
    return false;
  }
  const Polynomial poly = random_polynomial(rng, s.dimension(), 3, 3);
  const auto pb = parse_polynomial(polynomial_text(poly), s.dimension());
  if (!pb || !(*pb == poly)) {
    why = "polynomial text did not round-trip: " + polynomial_text(poly);
    return false;
  }
  return true;
}

CheckResult run_suite(const std::string& name, std::uint64_t seed, int cases,
                      const std::function<bool(SeededRng&, std::string&)>& body) {
  CheckResult r;
  r.name = name;
  r.cases = cases;
  r.passed = true;
  for (int i = 0; i < cases; ++i) {
    SeededRng rng(seed + static_cast<std::uint64_t>(i) * 0x9e3779b97f4a7c15ull);
    std::string why;
    try {
      if (!body(rng, why)) {
        r.passed = false;
        r.detail = "case " + std::to_string(i) + (why.empty() ? "" : ": " + why);
        break;
      }
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = "case " + std::to_string(i) + " threw: " + e.what();
      break;
    }
  }
  return r;
}

}  // namespace

std::vector<CheckResult> run_selfcheck(std::uint64_t seed, int cases) {
  const std::vector<
      std::pair<std::string, std::function<bool(SeededRng&, std::string&)>>>
      suites = {
          {"differential_squares_to_zero", differential_squares_to_zero},
          {"leibniz_rule", leibniz_rule},
          {"wedge_graded_commutative", wedge_graded_commutative},
          {"restriction_chain_map", restriction_chain_map},
          {"restriction_matches_evaluation", restriction_matches_evaluation},
          {"boundary_extension_round_trip", boundary_extension_round_trip},
          {"subcomplex_extension_round_trip", subcomplex_extension_round_trip},
          {"retraction_round_trip", retraction_round_trip},
          {"text_round_trip", text_round_trip},
      };

  std::vector<CheckResult> out;
  std::uint64_t suite_seed = seed;
  for (const auto& [name, body] : suites) {
    suite_seed += 0x2545f4914f6cdd1dull;
    out.push_back(run_suite(name, suite_seed, cases, body));
  }
  return out;
}

}  // namespace pwcoh
