#include "pwcoh/random_forms.hpp"

#include <utility>
#include <vector>

#include "pwcoh/combinatorics.hpp"

namespace pwcoh {

int SeededRng::int_in(int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(engine_);
}

Rational SeededRng::rational(int max_abs_num, int max_den) {
  int num = int_in(-max_abs_num, max_abs_num);
  if (num == 0) num = 1;
  return make_rational(num, int_in(1, max_den));
}

Polynomial random_polynomial(SeededRng& rng, int nvars, int max_degree,
                             int terms) {
  Polynomial p(nvars);
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    if (nvars > 0) {
      const int d = rng.int_in(0, max_degree);
      for (int i = 0; i < d; ++i) {
        const int v = rng.int_in(0, nvars - 1);
        m = m.with_exp(v, m.exp(v) + 1);
      }
    }
    p.add_term(m, rng.rational(4, 3));
  }
  return p;
}

PolyForm random_polyform(SeededRng& rng, const Simplex& s, int fiber_dim,
                         int degree, int max_coef_degree) {
  const int k = s.dimension();
  PolyForm w(s, fiber_dim, degree);

  std::vector<std::pair<int, int>> splits;
  for (int qi = 0; qi <= std::min(k, degree); ++qi)
    if (degree - qi <= fiber_dim) splits.emplace_back(qi, degree - qi);
  if (splits.empty()) return w;

  const int nterms = rng.int_in(1, 3);
  for (int t = 0; t < nterms; ++t) {
    const auto [qi, qj] = splits[static_cast<std::size_t>(
        rng.int_in(0, static_cast<int>(splits.size()) - 1))];
    const auto i_options = subsets_of_size(k, qi);
    const auto j_options = subsets_of_size(fiber_dim, qj);
    const Mask i_mask = i_options[static_cast<std::size_t>(
        rng.int_in(0, static_cast<int>(i_options.size()) - 1))];
    const Mask j_mask = j_options[static_cast<std::size_t>(
        rng.int_in(0, static_cast<int>(j_options.size()) - 1))];
    w.add_term(i_mask, j_mask, random_polynomial(rng, k, max_coef_degree, 2));
  }
  return w;
}

PiecewiseForm random_boundary_form(SeededRng& rng, const Simplex& d,
                                   const LieAlgebra& fiber, int degree,
                                   int max_coef_degree) {
  const PolyForm w =
      random_polyform(rng, d, fiber.dim(), degree, max_coef_degree);
  const SimplicialComplex bd = boundary_complex(d);
  std::map<Simplex, PolyForm> parts;
  for (const Simplex& f : bd.simplices()) parts.emplace(f, restrict_to_face(w, f));
  return PiecewiseForm(AlgebroidComplex(bd, fiber), degree, std::move(parts));
}

SimplicialComplex random_subcomplex(SeededRng& rng, const SimplicialComplex& k) {
  std::vector<Simplex> chosen;
  for (const Simplex& s : k.simplices())
    if (rng.int_in(0, 2) == 0) chosen.push_back(s);
  return SimplicialComplex::closure(chosen);
}

}  // namespace pwcoh
