#include "pwcoh/piecewise.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pwcoh {

namespace {

std::string simplex_text(const Simplex& s) {
  std::ostringstream out;
  out << "[";
  const auto& vs = s.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i) out << (i ? "," : "") << vs[i];
  out << "]";
  return out.str();
}

}  // namespace

AlgebroidComplex::AlgebroidComplex(SimplicialComplex base, LieAlgebra fiber)
    : base_(std::move(base)), fiber_(std::move(fiber)) {
  if (const auto fail = fiber_.jacobi_failure())
    throw std::invalid_argument("fiber is not a Lie algebra: " + *fail);
}

PiecewiseForm::PiecewiseForm(AlgebroidComplex complex, int degree,
                             std::map<Simplex, PolyForm> parts)
    : complex_(std::move(complex)), degree_(degree), parts_(std::move(parts)) {
  if (degree < 0) throw std::invalid_argument("form degree must be nonnegative");
  if (parts_.size() != complex_.base().size())
    throw std::invalid_argument("need exactly one part per simplex");
  for (const auto& [s, w] : parts_) {
    if (!complex_.base().contains(s))
      throw std::invalid_argument("part on a simplex outside the base complex");
    if (w.simplex() != s) throw std::invalid_argument("part stored under the wrong simplex");
    if (w.degree() != degree_) throw std::invalid_argument("part degree mismatch");
    if (w.fiber_dim() != complex_.fiber().dim())
      throw std::invalid_argument("part fiber dimension mismatch");
  }
}

PiecewiseForm PiecewiseForm::zero(const AlgebroidComplex& complex, int degree) {
  std::map<Simplex, PolyForm> parts;
  for (const Simplex& s : complex.base().simplices())
    parts.emplace(s, PolyForm(s, complex.fiber().dim(), degree));
  return PiecewiseForm(complex, degree, std::move(parts));
}

const PolyForm& PiecewiseForm::part(const Simplex& s) const {
  const auto it = parts_.find(s);
  if (it == parts_.end())
    throw std::invalid_argument("no part on simplex " + simplex_text(s));
  return it->second;
}

bool PiecewiseForm::is_zero() const {
  return std::all_of(parts_.begin(), parts_.end(),
                     [](const auto& kv) { return kv.second.is_zero(); });
}

int PiecewiseForm::coefficient_degree() const {
  int d = 0;
  for (const auto& [s, w] : parts_) d = std::max(d, w.coefficient_degree());
  return d;
}

void PiecewiseForm::set_part(const Simplex& s, const PolyForm& w) {
  if (!complex_.base().contains(s))
    throw std::invalid_argument("part on a simplex outside the base complex");
  if (w.simplex() != s) throw std::invalid_argument("part stored under the wrong simplex");
  if (w.degree() != degree_) throw std::invalid_argument("part degree mismatch");
  if (w.fiber_dim() != complex_.fiber().dim())
    throw std::invalid_argument("part fiber dimension mismatch");
  parts_.insert_or_assign(s, w);
}

PiecewiseForm PiecewiseForm::operator-() const { return scaled(Rational(-1)); }

PiecewiseForm PiecewiseForm::operator+(const PiecewiseForm& o) const {
  if (complex_ != o.complex_ || degree_ != o.degree_)
    throw std::invalid_argument("form sum needs matching complex and degree");
  std::map<Simplex, PolyForm> parts;
  for (const auto& [s, w] : parts_) parts.emplace(s, w + o.part(s));
  return PiecewiseForm(complex_, degree_, std::move(parts));
}

PiecewiseForm PiecewiseForm::operator-(const PiecewiseForm& o) const { return *this + (-o); }

PiecewiseForm PiecewiseForm::scaled(const Rational& c) const {
  std::map<Simplex, PolyForm> parts;
  for (const auto& [s, w] : parts_) parts.emplace(s, w.scaled(c));
  return PiecewiseForm(complex_, degree_, parts);
}

bool validate_compatibility(const PiecewiseForm& w) {
  for (const auto& [s, part] : w.parts()) {
    if (s.dimension() == 0) continue;
    for (const Simplex& f : s.facets())
      if (restrict_to_face(part, f) != w.part(f)) return false;
  }
  return true;
}

PiecewiseForm global_differential(const PiecewiseForm& w) {
  std::map<Simplex, PolyForm> parts;
  for (const auto& [s, part] : w.parts())
    parts.emplace(s, differential(part, w.complex().fiber()));
  return PiecewiseForm(w.complex(), w.degree() + 1, std::move(parts));
}

PiecewiseForm restrict_to_subcomplex(const PiecewiseForm& w, const SimplicialComplex& l) {
  if (!is_subcomplex(l, w.complex().base()))
    throw std::invalid_argument("restriction target is not a subcomplex");
  std::map<Simplex, PolyForm> parts;
  for (const Simplex& s : l.simplices()) parts.emplace(s, w.part(s));
  return PiecewiseForm(AlgebroidComplex(l, w.complex().fiber()), w.degree(), std::move(parts));
}

PiecewiseForm spread_over_closure(const PolyForm& w, const LieAlgebra& fiber) {
  if (w.fiber_dim() != fiber.dim())
    throw std::invalid_argument("form fiber dimension does not match the algebra");
  const SimplicialComplex cl = SimplicialComplex::closure({w.simplex()});
  std::map<Simplex, PolyForm> parts;
  for (const Simplex& f : cl.simplices()) parts.emplace(f, restrict_to_face(w, f));
  return PiecewiseForm(AlgebroidComplex(cl, fiber), w.degree(), std::move(parts));
}

BoundaryExtension extend_over_boundary_traced(const PiecewiseForm& xi, const Simplex& d,
                                              FacetOrder order) {
  const SimplicialComplex bd = boundary_complex(d);
  if (xi.complex().base() != bd)
    throw std::invalid_argument("input must live on the boundary complex of the simplex");
  if (!validate_compatibility(xi))
    throw std::invalid_argument("boundary form is not compatible under restriction");

  const LieAlgebra& fiber = xi.complex().fiber();
  const AlgebroidComplex closed(SimplicialComplex::closure({d}), fiber);
  BoundaryExtension out{PiecewiseForm::zero(closed, xi.degree()), {}};
  if (d.dimension() == 0) return out;

  std::vector<int> sweep(d.dimension() + 1);
  for (std::size_t j = 0; j < sweep.size(); ++j) sweep[j] = static_cast<int>(j);
  if (order == FacetOrder::kDescending) std::reverse(sweep.begin(), sweep.end());

  PiecewiseForm residual = xi;
  for (int j : sweep) {
    const Simplex facet = d.facet_opposite(j);
    const PolyForm& w = residual.part(facet);
    const int m = required_cutoff_exponent(w, d, j);
    const PiecewiseForm hat =
        spread_over_closure(retraction_pullback_with_cutoff(w, d, j, m), fiber);
    out.extension = out.extension + hat;
    residual = residual - restrict_to_subcomplex(hat, bd);
    out.residuals.push_back(residual);
  }
  return out;
}

PiecewiseForm extend_over_boundary(const PiecewiseForm& xi, const Simplex& d, FacetOrder order) {
  return extend_over_boundary_traced(xi, d, order).extension;
}

PiecewiseForm extend_partial_boundary(const std::map<Simplex, PolyForm>& facet_forms,
                                      const Simplex& d, const LieAlgebra& fiber) {
  const auto facets = d.facets();
  int degree = 0;
  bool have_degree = false;
  for (const auto& [f, w] : facet_forms) {
    if (std::find(facets.begin(), facets.end(), f) == facets.end())
      throw std::invalid_argument(simplex_text(f) + " is not a facet of " + simplex_text(d));
    if (w.simplex() != f) throw std::invalid_argument("facet form stored under the wrong facet");
    if (w.fiber_dim() != fiber.dim())
      throw std::invalid_argument("facet form fiber dimension mismatch");
    if (have_degree && w.degree() != degree)
      throw std::invalid_argument("facet forms have mixed degrees");
    degree = w.degree();
    have_degree = true;
  }

  // Pairwise agreement on shared faces; facets of one simplex always share
  // their common vertex set as a face.
  for (auto it = facet_forms.begin(); it != facet_forms.end(); ++it) {
    for (auto jt = std::next(it); jt != facet_forms.end(); ++jt) {
      std::vector<int> shared;
      std::set_intersection(it->first.vertices().begin(), it->first.vertices().end(),
                            jt->first.vertices().begin(), jt->first.vertices().end(),
                            std::back_inserter(shared));
      if (shared.empty()) continue;
      const Simplex gamma(shared);
      if (restrict_to_face(it->second, gamma) != restrict_to_face(jt->second, gamma))
        throw std::invalid_argument("facet forms disagree on the shared face of " +
                                    simplex_text(it->first) + " and " + simplex_text(jt->first));
    }
  }

  const SimplicialComplex cl = SimplicialComplex::closure({d});
  std::map<Simplex, PolyForm> known;
  for (const auto& [f, w] : facet_forms) {
    known.insert_or_assign(f, w);
    for (const Simplex& g : f.proper_faces()) known.insert_or_assign(g, restrict_to_face(w, g));
  }

  // Fill in ascending dimension order; set_part order within a dimension is
  // immaterial since each step depends only on lower-dimensional parts.
  for (const Simplex& s : cl.simplices()) {
    if (known.count(s)) continue;
    if (s.dimension() == 0) {
      known.emplace(s, PolyForm(s, fiber.dim(), degree));
      continue;
    }
    const SimplicialComplex bd = boundary_complex(s);
    std::map<Simplex, PolyForm> bd_parts;
    for (const Simplex& f : bd.simplices()) bd_parts.emplace(f, known.at(f));
    const PiecewiseForm xi(AlgebroidComplex(bd, fiber), degree, std::move(bd_parts));
    known.emplace(s, extend_over_boundary(xi, s).part(s));
  }

  return PiecewiseForm(AlgebroidComplex(cl, fiber), degree, std::move(known));
}

PiecewiseForm extend_from_subcomplex(const PiecewiseForm& w, const SimplicialComplex& k,
                                     FacetOrder order) {
  if (!is_subcomplex(w.complex().base(), k))
    throw std::invalid_argument("the form's base is not a subcomplex of the target");
  const LieAlgebra& fiber = w.complex().fiber();

  std::map<Simplex, PolyForm> known = w.parts();
  for (const Simplex& s : k.simplices()) {
    if (known.count(s)) continue;
    if (s.dimension() == 0) {
      known.emplace(s, PolyForm(s, fiber.dim(), w.degree()));
      continue;
    }
    const SimplicialComplex bd = boundary_complex(s);
    std::map<Simplex, PolyForm> bd_parts;
    for (const Simplex& f : bd.simplices()) bd_parts.emplace(f, known.at(f));
    const PiecewiseForm xi(AlgebroidComplex(bd, fiber), w.degree(), std::move(bd_parts));
    known.emplace(s, extend_over_boundary(xi, s, order).part(s));
  }

  return PiecewiseForm(AlgebroidComplex(k, fiber), w.degree(), std::move(known));
}

}  // namespace pwcoh
