#include "pwcoh/cohomology.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "pwcoh/polyform.hpp"

namespace pwcoh {

std::vector<Monomial> monomials_up_to(int nvars, int max_degree) {
  if (nvars < 0 || nvars > Monomial::kMaxVars)
    throw std::invalid_argument("variable count out of range");
  if (max_degree < 0) throw std::invalid_argument("negative degree bound");
  std::vector<Monomial> out{Monomial()};
  for (int v = 0; v < nvars; ++v) {
    std::vector<Monomial> next;
    for (const Monomial& m : out) {
      const int used = m.degree();
      for (int e = 0; e + used <= max_degree; ++e) next.push_back(m.with_exp(v, e));
    }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.key() < b.key();
  });
  return out;
}

int TruncatedComplex::dim(int p) const {
  if (p < 0 || p >= static_cast<int>(dims_.size())) return 0;
  return dims_[p];
}

const RationalMatrix& TruncatedComplex::d(int p) const {
  if (p < 0 || p >= static_cast<int>(d_.size()))
    throw std::out_of_range("differential degree out of range");
  return d_[p];
}

CohomologyEngine::CohomologyEngine(AlgebroidComplex a)
    : a_(std::move(a)), maximal_(a_.base().maximal_simplices()) {
  for (std::size_t i = 0; i < maximal_.size(); ++i)
    maximal_index_.emplace(maximal_[i], static_cast<int>(i));
  for (const Simplex& s : a_.base().simplices()) {
    for (std::size_t i = 0; i < maximal_.size(); ++i) {
      if (maximal_[i].has_face(s)) {
        parent_.emplace(s, static_cast<int>(i));
        break;
      }
    }
  }
  max_form_degree_ =
      a_.base().empty() ? -1 : a_.base().dimension() + a_.fiber().dim();
}

int CohomologyEngine::dim(int p, int n) { return truncated(n).dim(p); }

const CohomologyEngine::BaseTruncation& CohomologyEngine::base(int q, int n) {
  const auto key = std::make_pair(q, n);
  if (const auto it = base_cache_.find(key); it != base_cache_.end()) return it->second;

  BaseTruncation bt;
  const int r = static_cast<int>(maximal_.size());
  bt.offsets.resize(r, 0);
  bt.local.resize(r);
  bt.index.resize(r);
  int total = 0;
  for (int i = 0; i < r; ++i) {
    bt.offsets[i] = total;
    const int k = maximal_[i].dimension();
    if (q <= k) {
      const auto monos = monomials_up_to(k, n);
      for (Mask mask : subsets_of_size(k, q)) {
        for (const Monomial& mono : monos) {
          bt.index[i].emplace(std::make_pair(mask, mono.key()),
                              static_cast<int>(bt.local[i].size()));
          bt.local[i].emplace_back(mask, mono);
        }
      }
    }
    total += static_cast<int>(bt.local[i].size());
  }
  bt.ambient = total;

  // One constraint row per coordinate of each pairwise shared face: the two
  // restrictions must agree there. Shared faces are full vertex
  // intersections, which face-closedness keeps inside the complex.
  std::vector<std::vector<Rational>> rows;
  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j < r; ++j) {
      std::vector<int> shared;
      std::set_intersection(maximal_[i].vertices().begin(), maximal_[i].vertices().end(),
                            maximal_[j].vertices().begin(), maximal_[j].vertices().end(),
                            std::back_inserter(shared));
      if (shared.empty()) continue;
      const Simplex gamma(shared);
      const int kg = gamma.dimension();
      if (q > kg) continue;  // forms of this degree restrict to zero there

      std::map<std::pair<Mask, std::uint64_t>, int> gindex;
      {
        int gi = 0;
        const auto gmonos = monomials_up_to(kg, n);
        for (Mask mask : subsets_of_size(kg, q))
          for (const Monomial& mono : gmonos) gindex.emplace(std::make_pair(mask, mono.key()), gi++);
      }
      const std::size_t row_base = rows.size();
      rows.resize(row_base + gindex.size(), std::vector<Rational>(total, Rational(0)));

      for (const auto& [side, sgn] : {std::make_pair(i, 1), std::make_pair(j, -1)}) {
        const Simplex& ms = maximal_[side];
        for (std::size_t lidx = 0; lidx < bt.local[side].size(); ++lidx) {
          const auto& [mask, mono] = bt.local[side][lidx];
          PolyForm e(ms, 0, q);
          Polynomial pm(ms.dimension());
          pm.add_term(mono, Rational(1));
          e.add_term(mask, 0, pm);
          const PolyForm rf = restrict_to_face(e, gamma);
          for (const auto& [tkey, poly] : rf.terms()) {
            for (const auto& [m2, c] : poly.terms()) {
              const int gi = gindex.at(std::make_pair(tkey.i_mask, m2.key()));
              rows[row_base + gi][bt.offsets[side] + lidx] += c * sgn;
            }
          }
        }
      }
    }
  }

  const RationalMatrix constraints =
      rows.empty() ? RationalMatrix(0, total) : RationalMatrix::from_rows(rows);
  const auto kernel = nullspace(constraints);
  bt.dim = static_cast<int>(kernel.size());
  bt.basis = kernel.empty() ? RationalMatrix(total, 0) : RationalMatrix::from_columns(kernel);
  return base_cache_.emplace(key, std::move(bt)).first->second;
}

const RationalMatrix& CohomologyEngine::base_differential(int q, int n) {
  const auto key = std::make_pair(q, n);
  if (const auto it = ddr_cache_.find(key); it != ddr_cache_.end()) return it->second;

  const BaseTruncation& src = base(q, n);
  const BaseTruncation& dst = base(q + 1, n);
  RationalMatrix img(dst.ambient, src.dim);
  for (int c = 0; c < src.dim; ++c) {
    for (std::size_t i = 0; i < maximal_.size(); ++i) {
      const int k = maximal_[i].dimension();
      for (std::size_t lidx = 0; lidx < src.local[i].size(); ++lidx) {
        const Rational& v = src.basis.at(src.offsets[i] + static_cast<int>(lidx), c);
        if (v == 0) continue;
        const auto& [mask, mono] = src.local[i][lidx];
        for (int var = 0; var < k; ++var) {
          const int e = mono.exp(var);
          if (e == 0) continue;
          const auto fi = front_insert(mask, var);
          if (!fi) continue;
          const Monomial dmono = mono.with_exp(var, e - 1);
          const int didx = dst.index[i].at(std::make_pair(fi->mask, dmono.key()));
          img.at(dst.offsets[i] + didx, c) += v * e * fi->sign;
        }
      }
    }
  }

  RationalMatrix x(dst.dim, src.dim);
  const auto sols = solve_in_span_many(img, dst.basis);
  for (int c = 0; c < src.dim; ++c) {
    if (!sols[c]) throw std::logic_error("derivative of a compatible form failed to express");
    for (int rr = 0; rr < dst.dim; ++rr) x.at(rr, c) = (*sols[c])[rr];
  }
  return ddr_cache_.emplace(key, std::move(x)).first->second;
}

std::vector<CohomologyEngine::Block> CohomologyEngine::blocks(int p, int n) {
  std::vector<Block> out;
  const int ng = a_.fiber().dim();
  const int kdim = a_.base().dimension();
  int off = 0;
  for (int q = 0; q <= kdim; ++q) {
    const int jdeg = p - q;
    if (jdeg < 0 || jdeg > ng) continue;
    const BaseTruncation& bq = base(q, n);
    const int jcount = static_cast<int>(subsets_of_size(ng, jdeg).size());
    out.push_back({q, jdeg, off, bq.dim, jcount});
    off += bq.dim * jcount;
  }
  return out;
}

const TruncatedComplex& CohomologyEngine::truncated(int n) {
  if (n < 0) throw std::invalid_argument("negative truncation");
  if (const auto it = tower_cache_.find(n); it != tower_cache_.end()) return it->second;

  TruncatedComplex t;
  t.n_ = n;
  t.max_degree_ = max_form_degree_;
  const int top = max_form_degree_;
  t.dims_.assign(top >= 0 ? static_cast<std::size_t>(top) + 2 : 1, 0);
  for (int p = 0; p <= top; ++p) {
    int total = 0;
    for (const Block& b : blocks(p, n)) total += b.base_dim * b.jcount;
    t.dims_[p] = total;
  }

  const LieAlgebra& g = a_.fiber();
  for (int p = 0; p <= top; ++p) {
    RationalMatrix d(t.dims_[p + 1], t.dims_[p]);
    const auto src_blocks = blocks(p, n);
    const auto dst_blocks = blocks(p + 1, n);
    std::map<int, const Block*> dst_by_q;
    for (const Block& b : dst_blocks) dst_by_q.emplace(b.q, &b);

    for (const Block& b : src_blocks) {
      if (const auto it = dst_by_q.find(b.q + 1); it != dst_by_q.end()) {
        const Block& db = *it->second;
        const RationalMatrix& x = base_differential(b.q, n);
        for (int c = 0; c < b.base_dim; ++c) {
          for (int cc = 0; cc < db.base_dim; ++cc) {
            const Rational& v = x.at(cc, c);
            if (v == 0) continue;
            for (int ji = 0; ji < b.jcount; ++ji)
              d.at(db.offset + cc * db.jcount + ji, b.offset + c * b.jcount + ji) += v;
          }
        }
      }
      if (const auto it = dst_by_q.find(b.q); it != dst_by_q.end()) {
        const Block& db = *it->second;
        const RationalMatrix ce = ce_differential_matrix(g, b.jdeg);
        const int sign = (b.q % 2 == 0) ? 1 : -1;
        for (int c = 0; c < b.base_dim; ++c) {
          for (int jj = 0; jj < db.jcount; ++jj) {
            for (int ji = 0; ji < b.jcount; ++ji) {
              const Rational& v = ce.at(jj, ji);
              if (v == 0) continue;
              d.at(db.offset + c * db.jcount + jj, b.offset + c * b.jcount + ji) += v * sign;
            }
          }
        }
      }
    }
    t.d_.push_back(std::move(d));
  }

  for (int p = 0; p + 1 <= top; ++p) {
    if (!(t.d_[p + 1] * t.d_[p]).is_zero())
      throw std::logic_error("differential matrices do not square to zero");
  }
  return tower_cache_.emplace(n, std::move(t)).first->second;
}

const RationalMatrix& CohomologyEngine::inclusion_block(int q, int n, int m) {
  const auto key = std::make_tuple(q, n, m);
  if (const auto it = inclusion_cache_.find(key); it != inclusion_cache_.end())
    return it->second;

  const BaseTruncation& bn = base(q, n);
  const BaseTruncation& bm = base(q, m);
  RationalMatrix inc(bm.dim, bn.dim);
  if (n == m) {
    inc = RationalMatrix::identity(bn.dim);
  } else {
    RationalMatrix padded(bm.ambient, bn.dim);
    for (int c = 0; c < bn.dim; ++c) {
      for (std::size_t i = 0; i < maximal_.size(); ++i) {
        for (std::size_t lidx = 0; lidx < bn.local[i].size(); ++lidx) {
          const Rational& v = bn.basis.at(bn.offsets[i] + static_cast<int>(lidx), c);
          if (v == 0) continue;
          const auto& [mask, mono] = bn.local[i][lidx];
          padded.at(bm.offsets[i] + bm.index[i].at(std::make_pair(mask, mono.key())), c) = v;
        }
      }
    }
    const auto sols = solve_in_span_many(padded, bm.basis);
    for (int c = 0; c < bn.dim; ++c) {
      if (!sols[c]) throw std::logic_error("truncation inclusion failed to express");
      for (int rr = 0; rr < bm.dim; ++rr) inc.at(rr, c) = (*sols[c])[rr];
    }
  }
  return inclusion_cache_.emplace(key, std::move(inc)).first->second;
}

RationalMatrix CohomologyEngine::inclusion_matrix(int p, int n, int m) {
  if (m < n) throw std::invalid_argument("inclusion requires n <= m");
  const auto bn = blocks(p, n);
  const auto bm = blocks(p, m);
  RationalMatrix out(dim(p, m), dim(p, n));
  for (std::size_t bi = 0; bi < bn.size(); ++bi) {
    const Block& a = bn[bi];
    const Block& b = bm[bi];
    const RationalMatrix& inc = inclusion_block(a.q, n, m);
    for (int c = 0; c < a.base_dim; ++c) {
      for (int cc = 0; cc < b.base_dim; ++cc) {
        const Rational& v = inc.at(cc, c);
        if (v == 0) continue;
        for (int ji = 0; ji < a.jcount; ++ji)
          out.at(b.offset + cc * b.jcount + ji, a.offset + c * a.jcount + ji) = v;
      }
    }
  }
  return out;
}

const CohomologyEngine::StableImage& CohomologyEngine::stable_image(int p, int n) {
  const auto key = std::make_pair(p, n);
  if (const auto it = stable_cache_.find(key); it != stable_cache_.end()) return it->second;

  const int dp = dim(p, n);
  StableImage si;
  if (p <= 0 || dp == 0) {
    si.source_truncation = n;
    si.basis = RationalMatrix(dp, 0);
    return stable_cache_.emplace(key, std::move(si)).first->second;
  }

  constexpr int kHeadroom = 8;
  int prev = -1;
  for (int m = n; m <= n + kHeadroom; ++m) {
    const RationalMatrix& u = truncated(m).d(p - 1);
    int inter;
    if (m == n) {
      inter = rank(u);
    } else {
      const RationalMatrix v = inclusion_matrix(p, n, m);
      inter = rank(u) + dp - rank(hstack(u, v));
    }
    if (inter == prev) {
      const RationalMatrix v = inclusion_matrix(p, n, m);
      std::vector<std::vector<Rational>> cols;
      EchelonAccumulator acc(dp);
      for (const auto& ker : nullspace(hstack(u, v))) {
        std::vector<Rational> y(ker.begin() + u.cols(), ker.end());
        if (acc.add(y)) cols.push_back(std::move(y));
      }
      if (static_cast<int>(cols.size()) != inter)
        throw std::logic_error("stable image basis has unexpected dimension");
      si.source_truncation = m;
      si.basis = cols.empty() ? RationalMatrix(dp, 0) : RationalMatrix::from_columns(cols);
      return stable_cache_.emplace(key, std::move(si)).first->second;
    }
    prev = inter;
  }
  std::ostringstream msg;
  msg << "image of the differential into truncation " << n << " (degree " << p
      << ") kept growing through source degree " << n + kHeadroom
      << "; raise the truncation";
  throw std::runtime_error(msg.str());
}

const RationalMatrix& CohomologyEngine::stable_coboundary_basis(int p, int n) {
  return stable_image(p, n).basis;
}

std::vector<int> CohomologyEngine::betti(int n) {
  const TruncatedComplex& t = truncated(n);
  std::vector<int> out;
  for (int p = 0; p <= max_form_degree_; ++p) {
    const int z = t.dim(p) - rank(t.d(p));
    out.push_back(z - stable_image(p, n).basis.cols());
  }
  return out;
}

StabilizationReport CohomologyEngine::stabilized_betti(int start, int window, int ceiling) {
  if (window < 2) throw std::invalid_argument("stabilization window must be at least 2");
  if (start < 0) start = 0;
  StabilizationReport r;
  r.window = window;
  r.ceiling = ceiling;
  for (int nv = start; nv <= ceiling; ++nv) {
    r.history.emplace_back(nv, betti(nv));
    const int have = static_cast<int>(r.history.size());
    if (have >= window) {
      bool stable = true;
      for (int i = have - window; i + 1 < have; ++i)
        if (r.history[i].second != r.history[i + 1].second) stable = false;
      if (stable) {
        r.converged = true;
        r.betti = r.history.back().second;
        r.truncation = r.history[have - window].first;
        return r;
      }
    }
  }
  std::ostringstream msg;
  msg << "Betti numbers did not repeat across " << window
      << " consecutive truncations up to N=" << ceiling << "; raise the ceiling";
  r.message = msg.str();
  return r;
}

const QuotientBasis& CohomologyEngine::cohomology_basis(int p, int n) {
  const auto key = std::make_pair(p, n);
  if (const auto it = quotient_cache_.find(key); it != quotient_cache_.end())
    return it->second;
  const int dp = dim(p, n);
  RationalMatrix z(dp, 0);
  if (p >= 0 && p <= max_form_degree_) {
    const auto kernel = nullspace(truncated(n).d(p));
    if (!kernel.empty()) z = RationalMatrix::from_columns(kernel);
  }
  QuotientBasis qb = quotient_basis(z, stable_image(p, n).basis);
  return quotient_cache_.emplace(key, std::move(qb)).first->second;
}

std::optional<std::vector<Rational>> CohomologyEngine::class_coordinates(
    int p, const std::vector<Rational>& z, int m, int n) {
  if (m < n) throw std::invalid_argument("class coordinates need m >= n");
  if (static_cast<int>(z.size()) != dim(p, m))
    throw std::invalid_argument("vector has the wrong dimension for its truncation");
  if (p >= 0 && p <= max_form_degree_) {
    const auto dz = truncated(m).d(p).apply(z);
    for (const Rational& c : dz)
      if (c != 0) throw std::invalid_argument("class coordinates of a non-closed vector");
  }
  const QuotientBasis& qb = cohomology_basis(p, n);
  const int b = static_cast<int>(qb.representatives.size());
  RationalMatrix reps(dim(p, n), b);
  for (int c = 0; c < b; ++c)
    for (int rr = 0; rr < reps.rows(); ++rr) reps.at(rr, c) = qb.representatives[c][rr];
  const RationalMatrix reps_m = (m == n) ? reps : inclusion_matrix(p, n, m) * reps;
  const RationalMatrix gens = hstack(reps_m, stable_image(p, m).basis);
  const auto sol = solve_in_span(z, gens);
  if (!sol) return std::nullopt;
  return std::vector<Rational>(sol->begin(), sol->begin() + b);
}

std::vector<Rational> CohomologyEngine::express(const PiecewiseForm& w, int n) {
  if (w.complex() != a_) throw std::invalid_argument("form lives on a different complex");
  if (w.coefficient_degree() > n)
    throw std::invalid_argument("form exceeds the coefficient truncation");
  if (!validate_compatibility(w))
    throw std::invalid_argument("form is not compatible under restriction");
  const int p = w.degree();
  const auto bl = blocks(p, n);
  const int ng = a_.fiber().dim();

  std::vector<Rational> coords(dim(p, n), Rational(0));
  for (const Block& b : bl) {
    const BaseTruncation& bq = base(b.q, n);
    const auto jmasks = subsets_of_size(ng, b.jdeg);
    std::map<Mask, int> jindex;
    for (std::size_t ji = 0; ji < jmasks.size(); ++ji)
      jindex.emplace(jmasks[ji], static_cast<int>(ji));

    RationalMatrix targets(bq.ambient, b.jcount);
    for (std::size_t i = 0; i < maximal_.size(); ++i) {
      const PolyForm& part = w.part(maximal_[i]);
      for (const auto& [tkey, poly] : part.terms()) {
        if (popcount(tkey.i_mask) != b.q) continue;
        const int ji = jindex.at(tkey.j_mask);
        for (const auto& [mono, c] : poly.terms()) {
          const int lidx = bq.index[i].at(std::make_pair(tkey.i_mask, mono.key()));
          targets.at(bq.offsets[i] + lidx, ji) = c;
        }
      }
    }
    const auto sols = solve_in_span_many(targets, bq.basis);
    for (int ji = 0; ji < b.jcount; ++ji) {
      if (!sols[ji])
        throw std::invalid_argument("form is not in the compatible truncated space");
      for (int c = 0; c < b.base_dim; ++c)
        coords[b.offset + c * b.jcount + ji] = (*sols[ji])[c];
    }
  }
  return coords;
}

PiecewiseForm CohomologyEngine::materialize(int p, int n, const std::vector<Rational>& coords) {
  if (static_cast<int>(coords.size()) != dim(p, n))
    throw std::invalid_argument("coordinate vector has the wrong dimension");
  const int ng = a_.fiber().dim();

  std::vector<PolyForm> tops;
  tops.reserve(maximal_.size());
  for (const Simplex& ms : maximal_) tops.emplace_back(ms, ng, p);

  for (const Block& b : blocks(p, n)) {
    const BaseTruncation& bq = base(b.q, n);
    const auto jmasks = subsets_of_size(ng, b.jdeg);
    for (int c = 0; c < b.base_dim; ++c) {
      for (int ji = 0; ji < b.jcount; ++ji) {
        const Rational& val = coords[b.offset + c * b.jcount + ji];
        if (val == 0) continue;
        for (std::size_t i = 0; i < maximal_.size(); ++i) {
          for (std::size_t lidx = 0; lidx < bq.local[i].size(); ++lidx) {
            const Rational& bv = bq.basis.at(bq.offsets[i] + static_cast<int>(lidx), c);
            if (bv == 0) continue;
            const auto& [mask, mono] = bq.local[i][lidx];
            Polynomial pm(maximal_[i].dimension());
            pm.add_term(mono, bv * val);
            tops[i].add_term(mask, jmasks[ji], pm);
          }
        }
      }
    }
  }

  std::map<Simplex, PolyForm> parts;
  for (const Simplex& s : a_.base().simplices()) {
    if (const auto it = maximal_index_.find(s); it != maximal_index_.end()) {
      parts.emplace(s, tops[it->second]);
    } else {
      parts.emplace(s, restrict_to_face(tops[parent_.at(s)], s));
    }
  }
  return PiecewiseForm(a_, p, std::move(parts));
}

std::vector<PiecewiseForm> CohomologyEngine::assemble(int p, int n) {
  const int d = dim(p, n);
  std::vector<PiecewiseForm> out;
  out.reserve(d);
  std::vector<Rational> coords(d, Rational(0));
  for (int c = 0; c < d; ++c) {
    coords[c] = 1;
    out.push_back(materialize(p, n, coords));
    coords[c] = 0;
  }
  return out;
}

RationalMatrix restriction_matrix(CohomologyEngine& src, CohomologyEngine& dst, int p, int n) {
  if (!(src.a_.fiber() == dst.a_.fiber()))
    throw std::invalid_argument("restriction needs the same fiber on both sides");
  if (!is_subcomplex(dst.a_.base(), src.a_.base()))
    throw std::invalid_argument("restriction target is not a subcomplex of the source");

  const auto src_blocks = src.blocks(p, n);
  const auto dst_blocks = dst.blocks(p, n);
  std::map<int, const CohomologyEngine::Block*> dst_by_q;
  for (const auto& b : dst_blocks) dst_by_q.emplace(b.q, &b);

  RationalMatrix out(dst.dim(p, n), src.dim(p, n));
  for (const auto& sb : src_blocks) {
    const auto it = dst_by_q.find(sb.q);
    if (it == dst_by_q.end()) continue;  // deeper forms restrict to zero
    const auto& db = *it->second;
    const auto& bs = src.base(sb.q, n);
    const auto& bd = dst.base(sb.q, n);

    RationalMatrix amb(bd.ambient, bs.ambient);
    for (std::size_t di = 0; di < dst.maximal_.size(); ++di) {
      const Simplex& m = dst.maximal_[di];
      const int si = src.parent_.at(m);
      const Simplex& ms = src.maximal_[si];
      for (std::size_t lidx = 0; lidx < bs.local[si].size(); ++lidx) {
        const auto& [mask, mono] = bs.local[si][lidx];
        PolyForm e(ms, 0, sb.q);
        Polynomial pm(ms.dimension());
        pm.add_term(mono, Rational(1));
        e.add_term(mask, 0, pm);
        const PolyForm rf = restrict_to_face(e, m);
        for (const auto& [tkey, poly] : rf.terms()) {
          for (const auto& [m2, c] : poly.terms()) {
            const int didx = bd.index[di].at(std::make_pair(tkey.i_mask, m2.key()));
            amb.at(bd.offsets[di] + didx, bs.offsets[si] + static_cast<int>(lidx)) += c;
          }
        }
      }
    }

    const auto sols = solve_in_span_many(amb * bs.basis, bd.basis);
    for (int c = 0; c < sb.base_dim; ++c) {
      if (!sols[c]) throw std::logic_error("restriction of a compatible form failed to express");
      for (int cc = 0; cc < db.base_dim; ++cc) {
        const Rational& v = (*sols[c])[cc];
        if (v == 0) continue;
        for (int ji = 0; ji < sb.jcount; ++ji)
          out.at(db.offset + cc * db.jcount + ji, sb.offset + c * sb.jcount + ji) = v;
      }
    }
  }
  return out;
}

namespace {

// d(p) of the truncation, or an empty matrix when p is beyond the space's top
// degree (every dimension past the top is zero, so the shapes still line up).
const RationalMatrix& differential_or_empty(CohomologyEngine& e, int p, int n) {
  static const RationalMatrix kEmpty(0, 0);
  const TruncatedComplex& t = e.truncated(n);
  if (p < 0 || p > t.max_degree()) return kEmpty;
  return t.d(p);
}

}  // namespace

std::vector<InducedMap> induced_maps(const std::vector<RationalMatrix>& f,
                                     CohomologyEngine& src, CohomologyEngine& dst, int n) {
  const int needed = std::max(src.max_form_degree(), dst.max_form_degree()) + 1;
  if (static_cast<int>(f.size()) < needed)
    throw std::invalid_argument("cochain map needs a matrix for every degree");
  const int count = static_cast<int>(f.size());
  for (int p = 0; p < count; ++p) {
    if (f[p].rows() != dst.dim(p, n) || f[p].cols() != src.dim(p, n))
      throw std::invalid_argument("cochain map matrix has wrong dimensions");
  }
  for (int p = 0; p + 1 < count; ++p) {
    if (!(f[p + 1] * differential_or_empty(src, p, n) ==
          differential_or_empty(dst, p, n) * f[p]))
      throw std::invalid_argument("map does not commute with the differentials");
  }

  std::vector<InducedMap> out;
  for (int p = 0; p < count; ++p) {
    InducedMap im;
    im.degree = p;
    im.source = src.cohomology_basis(p, n);
    im.target = dst.cohomology_basis(p, n);
    const int bs = static_cast<int>(im.source.representatives.size());
    const int bt = static_cast<int>(im.target.representatives.size());
    im.matrix = RationalMatrix(bt, bs);
    for (int c = 0; c < bs; ++c) {
      const auto y = f[p].apply(im.source.representatives[c]);
      const auto cls = dst.class_coordinates(p, y, n, n);
      if (!cls) throw std::logic_error("image of a cocycle has no class decomposition");
      for (int rr = 0; rr < bt; ++rr) im.matrix.at(rr, c) = (*cls)[rr];
    }
    out.push_back(std::move(im));
  }
  return out;
}

}  // namespace pwcoh
