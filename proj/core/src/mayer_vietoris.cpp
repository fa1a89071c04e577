#include "pwcoh/mayer_vietoris.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "pwcoh/linalg.hpp"

namespace pwcoh {

namespace {

std::string simplex_text(const Simplex& s) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < s.vertices().size(); ++i) {
    if (i) os << " ";
    os << s.vertices()[i];
  }
  os << "]";
  return os.str();
}

RationalMatrix negated(const RationalMatrix& m) {
  return RationalMatrix(m.rows(), m.cols()) - m;
}

RationalMatrix block_diag(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) out.at(a.rows() + i, a.cols() + j) = b.at(i, j);
  return out;
}

// d(p) of the truncation; a correctly shaped zero matrix beyond the space's
// top degree, where every dimension vanishes.
RationalMatrix d_at(CohomologyEngine& e, int p, int n) {
  if (p < 0 || p > e.max_form_degree())
    return RationalMatrix(e.dim(p + 1, n), e.dim(p, n));
  return e.truncated(n).d(p);
}

int betti_at(const std::vector<int>& b, int p) {
  return (p >= 0 && p < static_cast<int>(b.size())) ? b[p] : 0;
}

// Ambient cochain coordinates of a combination of quotient representatives,
// reading `count` coefficients of v starting at position lo.
std::vector<Rational> rep_combination(const QuotientBasis& qb,
                                      const std::vector<Rational>& v, int lo,
                                      int count) {
  std::vector<Rational> out(static_cast<std::size_t>(qb.ambient), Rational(0));
  for (int c = 0; c < count; ++c)
    for (int i = 0; i < qb.ambient; ++i)
      out[static_cast<std::size_t>(i)] += v[static_cast<std::size_t>(lo + c)] *
                                          qb.representatives[static_cast<std::size_t>(c)]
                                                            [static_cast<std::size_t>(i)];
  return out;
}

}  // namespace

MVSetup::MVSetup(CoverDecomposition decomposition, LieAlgebra fiber)
    : cover_(std::move(decomposition)),
      fiber_(std::move(fiber)),
      whole_(AlgebroidComplex(cover_.whole, fiber_)),
      piece0_(AlgebroidComplex(cover_.k0, fiber_)),
      piece1_(AlgebroidComplex(cover_.k1, fiber_)),
      overlap_(AlgebroidComplex(cover_.overlap, fiber_)) {}

MVSetup::MVSetup(const SimplicialComplex& k0, const SimplicialComplex& k1,
                 LieAlgebra fiber)
    : MVSetup(pwcoh::cover(k0, k1), std::move(fiber)) {}

std::pair<PiecewiseForm, PiecewiseForm> lambda_map(const PiecewiseForm& w,
                                                   const MVSetup& s) {
  if (w.complex().base() != s.cover().whole || !(w.complex().fiber() == s.fiber()))
    throw std::invalid_argument("form does not live on the covered complex");
  return {restrict_to_subcomplex(w, s.cover().k0),
          restrict_to_subcomplex(w, s.cover().k1)};
}

PiecewiseForm mu_map(const PiecewiseForm& xi, const PiecewiseForm& eta,
                     const MVSetup& s) {
  if (xi.complex().base() != s.cover().k0 || eta.complex().base() != s.cover().k1)
    throw std::invalid_argument("inputs must live on the two cover pieces");
  if (!(xi.complex().fiber() == s.fiber()) || !(eta.complex().fiber() == s.fiber()))
    throw std::invalid_argument("fiber mismatch with the cover");
  if (xi.degree() != eta.degree())
    throw std::invalid_argument("degree mismatch between the two pieces");
  return restrict_to_subcomplex(eta, s.cover().overlap) -
         restrict_to_subcomplex(xi, s.cover().overlap);
}

std::pair<PiecewiseForm, PiecewiseForm> mu_preimage(const PiecewiseForm& gamma,
                                                    const MVSetup& s,
                                                    FacetOrder order) {
  if (gamma.complex().base() != s.cover().overlap ||
      !(gamma.complex().fiber() == s.fiber()))
    throw std::invalid_argument("input must live on the overlap");
  const Rational half = make_rational(1, 2);
  PiecewiseForm alpha =
      extend_from_subcomplex(gamma.scaled(-half), s.cover().k0, order);
  PiecewiseForm beta =
      extend_from_subcomplex(gamma.scaled(half), s.cover().k1, order);
  return {std::move(alpha), std::move(beta)};
}

PiecewiseForm glue(const PiecewiseForm& xi, const PiecewiseForm& eta,
                   const MVSetup& s) {
  if (xi.complex().base() != s.cover().k0 || eta.complex().base() != s.cover().k1)
    throw std::invalid_argument("inputs must live on the two cover pieces");
  if (!(xi.complex().fiber() == s.fiber()) || !(eta.complex().fiber() == s.fiber()))
    throw std::invalid_argument("fiber mismatch with the cover");
  if (xi.degree() != eta.degree())
    throw std::invalid_argument("degree mismatch between the two pieces");

  const PiecewiseForm a = restrict_to_subcomplex(xi, s.cover().overlap);
  const PiecewiseForm b = restrict_to_subcomplex(eta, s.cover().overlap);
  if (!(a == b)) {
    for (const Simplex& f : s.cover().overlap.simplices())
      if (!(a.part(f) == b.part(f)))
        throw std::invalid_argument("pieces disagree on the overlap at simplex " +
                                    simplex_text(f));
    throw std::invalid_argument("pieces disagree on the overlap");
  }

  std::map<Simplex, PolyForm> parts;
  for (const Simplex& f : s.cover().whole.simplices())
    parts.emplace(f, s.cover().k0.contains(f) ? xi.part(f) : eta.part(f));
  return PiecewiseForm(AlgebroidComplex(s.cover().whole, s.fiber()), xi.degree(),
                       std::move(parts));
}

PiecewiseForm connecting_hom(const PiecewiseForm& gamma, const MVSetup& s,
                             FacetOrder order) {
  if (!global_differential(gamma).is_zero())
    throw std::invalid_argument("connecting map needs a closed form");
  auto [alpha, beta] = mu_preimage(gamma, s, order);
  return glue(global_differential(alpha), global_differential(beta), s);
}

namespace {

// How far above the common truncation the connecting map may search for
// preimages before refusing.
constexpr int kDeltaHeadroom = 8;

// Class of the connecting map applied to one overlap class, given by its
// cochain coordinates at truncation n. Solves mu at a raised truncation M,
// applies the differential, pulls the result back through lambda, and reads
// off class coordinates; falls back to the explicit extension-based
// construction when no M within the headroom admits a solution.
std::optional<std::vector<Rational>> connecting_class(
    MVSetup& s, int p, const std::vector<Rational>& gamma, int n,
    const MVOptions& opt, std::string& detail) {
  for (int m = n; m <= n + kDeltaHeadroom; ++m) {
    const std::vector<Rational> g =
        (m == n) ? gamma : s.overlap().inclusion_matrix(p, n, m).apply(gamma);
    const RationalMatrix mu_m =
        hstack(negated(restriction_matrix(s.piece0(), s.overlap(), p, m)),
               restriction_matrix(s.piece1(), s.overlap(), p, m));
    const auto x = solve_in_span(g, mu_m);
    if (!x) continue;

    const int d0 = s.piece0().dim(p, m);
    const std::vector<Rational> x0(x->begin(), x->begin() + d0);
    const std::vector<Rational> x1(x->begin() + d0, x->end());
    std::vector<Rational> dx = d_at(s.piece0(), p, m).apply(x0);
    const auto dx1 = d_at(s.piece1(), p, m).apply(x1);
    dx.insert(dx.end(), dx1.begin(), dx1.end());

    const RationalMatrix lam_m =
        vstack(restriction_matrix(s.whole(), s.piece0(), p + 1, m),
               restriction_matrix(s.whole(), s.piece1(), p + 1, m));
    const auto y = solve_in_span(dx, lam_m);
    if (!y) throw std::logic_error("differential of a mu-preimage failed to glue");

    if (const auto cls = s.whole().class_coordinates(p + 1, *y, m, n)) return cls;
  }

  const PiecewiseForm gform = s.overlap().materialize(p, n, gamma);
  const PiecewiseForm dg = connecting_hom(gform, s, opt.order);
  const int m2 = std::max(n, dg.coefficient_degree());
  if (m2 > n + kDeltaHeadroom) {
    detail = "the extension-based connecting image needs coefficient degree " +
             std::to_string(dg.coefficient_degree()) +
             ", beyond the allowed truncation " + std::to_string(n + kDeltaHeadroom);
    return std::nullopt;
  }
  const auto z = s.whole().express(dg, m2);
  const auto cls = s.whole().class_coordinates(p + 1, z, m2, n);
  if (!cls)
    detail = "the connecting image at truncation " + std::to_string(m2) +
             " has no class decomposition over truncation " + std::to_string(n);
  return cls;
}

}  // namespace

LESReport verify_les_exactness(MVSetup& s, const MVOptions& opt) {
  LESReport rep;
  rep.stab_whole = s.whole().stabilized_betti(opt.n_start, opt.window, opt.ceiling);
  rep.stab_piece0 = s.piece0().stabilized_betti(opt.n_start, opt.window, opt.ceiling);
  rep.stab_piece1 = s.piece1().stabilized_betti(opt.n_start, opt.window, opt.ceiling);
  rep.stab_overlap = s.overlap().stabilized_betti(opt.n_start, opt.window, opt.ceiling);
  if (!rep.stab_whole.converged || !rep.stab_piece0.converged ||
      !rep.stab_piece1.converged || !rep.stab_overlap.converged) {
    rep.message =
        "Betti numbers did not stabilize for every space within the ceiling; "
        "raise the ceiling or widen the window.";
    return rep;
  }

  const int n = std::max({rep.stab_whole.truncation, rep.stab_piece0.truncation,
                          rep.stab_piece1.truncation, rep.stab_overlap.truncation});
  rep.truncation = n;
  const int top = s.whole().max_form_degree();

  // Betti numbers recomputed at the common truncation must agree with the
  // stabilized values, otherwise the plateaus were coincidental.
  const std::vector<int> bw = s.whole().betti(n);
  const std::vector<int> b0 = s.piece0().betti(n);
  const std::vector<int> b1 = s.piece1().betti(n);
  const std::vector<int> bl = s.overlap().betti(n);
  if (bw != rep.stab_whole.betti || b0 != rep.stab_piece0.betti ||
      b1 != rep.stab_piece1.betti || bl != rep.stab_overlap.betti) {
    rep.message =
        "Betti numbers moved between the stabilization window and the common "
        "truncation; widen the window.";
    return rep;
  }
  const auto pad = [top](std::vector<int> b) {
    b.resize(static_cast<std::size_t>(std::max(top + 1, 0)), 0);
    return b;
  };
  rep.betti_whole = pad(bw);
  rep.betti_piece0 = pad(b0);
  rep.betti_piece1 = pad(b1);
  rep.betti_overlap = pad(bl);

  if (top < 0) {
    rep.verified = true;
    rep.message = "long exact sequence verified (empty complex)";
    return rep;
  }

  // Cochain-level restriction matrices at the common truncation.
  std::vector<RationalMatrix> r0, r1, s0, s1, lam, mu;
  for (int p = 0; p <= top; ++p) {
    r0.push_back(restriction_matrix(s.whole(), s.piece0(), p, n));
    r1.push_back(restriction_matrix(s.whole(), s.piece1(), p, n));
    s0.push_back(restriction_matrix(s.piece0(), s.overlap(), p, n));
    s1.push_back(restriction_matrix(s.piece1(), s.overlap(), p, n));
    lam.push_back(vstack(r0.back(), r1.back()));
    mu.push_back(hstack(negated(s0.back()), s1.back()));
  }

  for (int p = 0; p <= top; ++p) {
    CochainChecks c;
    c.degree = p;
    const int rank_lam = rank(lam[static_cast<std::size_t>(p)]);
    c.lambda_injective = rank_lam == s.whole().dim(p, n);
    c.composite_zero =
        (mu[static_cast<std::size_t>(p)] * lam[static_cast<std::size_t>(p)]).is_zero();
    c.middle_exact = rank_lam == lam[static_cast<std::size_t>(p)].rows() -
                                     rank(mu[static_cast<std::size_t>(p)]);
    if (p < top) {
      const RationalMatrix d_pair =
          block_diag(d_at(s.piece0(), p, n), d_at(s.piece1(), p, n));
      c.lambda_commutes = lam[static_cast<std::size_t>(p) + 1] * d_at(s.whole(), p, n) ==
                          d_pair * lam[static_cast<std::size_t>(p)];
      c.mu_commutes = mu[static_cast<std::size_t>(p) + 1] * d_pair ==
                      d_at(s.overlap(), p, n) * mu[static_cast<std::size_t>(p)];
    } else {
      c.lambda_commutes = true;
      c.mu_commutes = true;
    }
    rep.cochain.push_back(c);
    if (!c.ok()) {
      rep.message = "cochain-level cover maps failed a structural check at degree " +
                    std::to_string(p);
      return rep;
    }
  }

  // Induced maps on cohomology; direct sums are handled componentwise, the
  // quotient basis of the sum being the concatenation of the two bases.
  const auto l0 = induced_maps(r0, s.whole(), s.piece0(), n);
  const auto l1 = induced_maps(r1, s.whole(), s.piece1(), n);
  const auto m0 = induced_maps(s0, s.piece0(), s.overlap(), n);
  const auto m1 = induced_maps(s1, s.piece1(), s.overlap(), n);
  for (int p = 0; p <= top; ++p) {
    rep.lambda_star.push_back(vstack(l0[static_cast<std::size_t>(p)].matrix,
                                     l1[static_cast<std::size_t>(p)].matrix));
    rep.mu_star.push_back(hstack(negated(m0[static_cast<std::size_t>(p)].matrix),
                                 m1[static_cast<std::size_t>(p)].matrix));
  }

  for (int p = 0; p <= top; ++p) {
    const int hl = betti_at(rep.betti_overlap, p);
    const int hk_up = betti_at(rep.betti_whole, p + 1);
    RationalMatrix delta(hk_up, hl);
    if (hl > 0 && hk_up > 0) {
      const QuotientBasis& qb = s.overlap().cohomology_basis(p, n);
      for (int c = 0; c < hl; ++c) {
        std::string detail;
        const auto col = connecting_class(
            s, p, qb.representatives[static_cast<std::size_t>(c)], n, opt, detail);
        if (!col) {
          rep.message = "the connecting map at degree " + std::to_string(p) +
                        " could not be evaluated: " + detail +
                        "; raise the ceiling or widen the window";
          return rep;
        }
        for (int r = 0; r < hk_up; ++r)
          delta.at(r, c) = (*col)[static_cast<std::size_t>(r)];
      }
    }
    rep.delta_star.push_back(std::move(delta));
  }

  // Exactness at every node. Incoming image lies in the outgoing kernel when
  // the composite vanishes; equality then follows from the rank count.
  const auto check_node = [&](int p, const std::string& node,
                              const std::string& in_name,
                              const std::string& out_name,
                              const RationalMatrix& in, const RationalMatrix& out,
                              int node_dim) {
    NodeVerdict v;
    v.degree = p;
    v.node = node;
    v.incoming = in_name;
    v.outgoing = out_name;
    v.incoming_rank = rank(in);
    v.kernel_dim = node_dim - rank(out);
    v.composite_zero = (out * in).is_zero();
    v.exact = v.composite_zero && v.incoming_rank == v.kernel_dim;
    return v;
  };

  const auto witness_at = [&](const NodeVerdict& v, int p, int which,
                              const RationalMatrix& in, const RationalMatrix& out) {
    std::vector<Rational> bad;
    if (!v.composite_zero) {
      const RationalMatrix comp = out * in;
      for (int c = 0; c < comp.cols() && bad.empty(); ++c)
        for (int r = 0; r < comp.rows(); ++r)
          if (!(comp.at(r, c) == 0)) {
            bad = in.column(c);
            break;
          }
    } else {
      for (const auto& kv : nullspace(out)) {
        if (!solve_in_span(kv, in)) {
          bad = kv;
          break;
        }
      }
    }
    if (bad.empty()) return;

    MVWitness w;
    w.node = v.node;
    w.degree = p;
    if (which == 0) {
      const QuotientBasis& qb = s.whole().cohomology_basis(p, n);
      w.forms.push_back(s.whole().materialize(
          p, n, rep_combination(qb, bad, 0, betti_at(rep.betti_whole, p))));
    } else if (which == 1) {
      const QuotientBasis& qa = s.piece0().cohomology_basis(p, n);
      const QuotientBasis& qc = s.piece1().cohomology_basis(p, n);
      const int c0 = betti_at(rep.betti_piece0, p);
      w.forms.push_back(
          s.piece0().materialize(p, n, rep_combination(qa, bad, 0, c0)));
      w.forms.push_back(s.piece1().materialize(
          p, n, rep_combination(qc, bad, c0, betti_at(rep.betti_piece1, p))));
    } else {
      const QuotientBasis& qb = s.overlap().cohomology_basis(p, n);
      w.forms.push_back(s.overlap().materialize(
          p, n, rep_combination(qb, bad, 0, betti_at(rep.betti_overlap, p))));
    }
    rep.witness = std::move(w);
  };

  bool all_exact = true;
  for (int p = 0; p <= top; ++p) {
    const std::string sp = std::to_string(p);
    const RationalMatrix zero_in(betti_at(rep.betti_whole, 0), 0);
    const RationalMatrix& in_whole =
        (p == 0) ? zero_in : rep.delta_star[static_cast<std::size_t>(p) - 1];

    NodeVerdict vw = check_node(p, "H^" + sp + "(whole)",
                                p == 0 ? "0" : "delta^" + std::to_string(p - 1),
                                "lambda^" + sp, in_whole,
                                rep.lambda_star[static_cast<std::size_t>(p)],
                                betti_at(rep.betti_whole, p));
    if (!vw.exact && !rep.witness)
      witness_at(vw, p, 0, in_whole, rep.lambda_star[static_cast<std::size_t>(p)]);
    all_exact = all_exact && vw.exact;
    rep.verdicts.push_back(std::move(vw));

    NodeVerdict vp = check_node(
        p, "H^" + sp + "(pieces)", "lambda^" + sp, "mu^" + sp,
        rep.lambda_star[static_cast<std::size_t>(p)],
        rep.mu_star[static_cast<std::size_t>(p)],
        betti_at(rep.betti_piece0, p) + betti_at(rep.betti_piece1, p));
    if (!vp.exact && !rep.witness)
      witness_at(vp, p, 1, rep.lambda_star[static_cast<std::size_t>(p)],
                 rep.mu_star[static_cast<std::size_t>(p)]);
    all_exact = all_exact && vp.exact;
    rep.verdicts.push_back(std::move(vp));

    NodeVerdict vl = check_node(p, "H^" + sp + "(overlap)", "mu^" + sp,
                                "delta^" + sp,
                                rep.mu_star[static_cast<std::size_t>(p)],
                                rep.delta_star[static_cast<std::size_t>(p)],
                                betti_at(rep.betti_overlap, p));
    if (!vl.exact && !rep.witness)
      witness_at(vl, p, 2, rep.mu_star[static_cast<std::size_t>(p)],
                 rep.delta_star[static_cast<std::size_t>(p)]);
    all_exact = all_exact && vl.exact;
    rep.verdicts.push_back(std::move(vl));
  }

  rep.verified = all_exact;
  rep.message = rep.verified
                    ? "long exact sequence verified at truncation " + std::to_string(n)
                    : "exactness failed at a node; see the verdicts and witness";
  return rep;
}

}  // namespace pwcoh
