#include "pwcoh/polyform.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pwcoh {

namespace {

int parity_sign(int n) { return (n % 2 == 0) ? 1 : -1; }

// dt_M ^ dt_bit = sign * dt_{M with bit}: appended generator moves left past
// every present generator with a larger index.
std::optional<MaskInsert> back_insert(Mask m, int bit) {
  const Mask b = Mask{1} << bit;
  if (m & b) return std::nullopt;
  return MaskInsert{m | b, parity_sign(popcount(m >> (bit + 1)))};
}

Mask relabel_mask(Mask m, const std::vector<int>& var_map) {
  Mask out = 0;
  for (int v : mask_bits(m)) {
    if (v >= static_cast<int>(var_map.size()) || var_map[v] < 0)
      throw std::logic_error("mask bit survived with no relabel target");
    out |= Mask{1} << var_map[v];
  }
  return out;
}

}  // namespace

PolyForm::PolyForm(Simplex simplex, int fiber_dim, int degree)
    : simplex_(std::move(simplex)), fiber_dim_(fiber_dim), degree_(degree) {
  if (fiber_dim < 0 || fiber_dim > 30) throw std::invalid_argument("fiber dimension out of range");
  if (degree < 0) throw std::invalid_argument("form degree must be nonnegative");
  if (simplex_.dimension() > Monomial::kMaxVars)
    throw std::invalid_argument("simplex dimension exceeds supported variable count");
}

int PolyForm::coefficient_degree() const {
  int d = 0;
  for (const auto& [key, p] : terms_)
    if (p.degree() > d) d = p.degree();
  return d;
}

void PolyForm::add_term(Mask i_mask, Mask j_mask, const Polynomial& coeff) {
  if (coeff.nvars() != base_dim())
    throw std::invalid_argument("coefficient lives in the wrong polynomial ring");
  if (popcount(i_mask) + popcount(j_mask) != degree_)
    throw std::invalid_argument("term degree does not match the form degree");
  if (i_mask >> base_dim()) throw std::invalid_argument("base index out of range for simplex");
  if (fiber_dim_ < 32 && (j_mask >> fiber_dim_))
    throw std::invalid_argument("fiber index out of range");
  if (coeff.is_zero()) return;
  const TermKey key{i_mask, j_mask};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, coeff);
    return;
  }
  it->second = it->second + coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

PolyForm PolyForm::operator-() const {
  PolyForm out(simplex_, fiber_dim_, degree_);
  for (const auto& [key, p] : terms_) out.terms_.emplace(key, -p);
  return out;
}

PolyForm PolyForm::operator+(const PolyForm& o) const {
  if (simplex_ != o.simplex_ || fiber_dim_ != o.fiber_dim_ || degree_ != o.degree_)
    throw std::invalid_argument("form sum needs matching simplex, fiber and degree");
  PolyForm out = *this;
  for (const auto& [key, p] : o.terms_) out.add_term(key.i_mask, key.j_mask, p);
  return out;
}

PolyForm PolyForm::operator-(const PolyForm& o) const { return *this + (-o); }

PolyForm PolyForm::scaled(const Rational& c) const {
  PolyForm out(simplex_, fiber_dim_, degree_);
  if (c == 0) return out;
  for (const auto& [key, p] : terms_) out.terms_.emplace(key, p.scaled(c));
  return out;
}

PolyForm wedge(const PolyForm& a, const PolyForm& b) {
  if (a.simplex() != b.simplex() || a.fiber_dim() != b.fiber_dim())
    throw std::invalid_argument("wedge needs matching simplex and fiber");
  PolyForm out(a.simplex(), a.fiber_dim(), a.degree() + b.degree());
  for (const auto& [ka, pa] : a.terms()) {
    for (const auto& [kb, pb] : b.terms()) {
      if ((ka.i_mask & kb.i_mask) || (ka.j_mask & kb.j_mask)) continue;
      // theta_{J_a} moves past dt_{I_b}, then both families interleave.
      int sign = parity_sign(popcount(ka.j_mask) * popcount(kb.i_mask));
      sign *= shuffle_sign(ka.i_mask, kb.i_mask);
      sign *= shuffle_sign(ka.j_mask, kb.j_mask);
      out.add_term(ka.i_mask | kb.i_mask, ka.j_mask | kb.j_mask, (pa * pb).scaled(sign));
    }
  }
  return out;
}

PolyForm differential(const PolyForm& w, const LieAlgebra& g) {
  if (g.dim() != w.fiber_dim())
    throw std::invalid_argument("differential needs the fiber's Lie algebra");
  PolyForm out(w.simplex(), w.fiber_dim(), w.degree() + 1);
  const int k = w.base_dim();
  for (const auto& [key, p] : w.terms()) {
    for (int v = 0; v < k; ++v) {
      const Polynomial dp = p.derivative(v);
      if (dp.is_zero()) continue;
      const auto fi = front_insert(key.i_mask, v);
      if (!fi) continue;
      out.add_term(fi->mask, key.j_mask, dp.scaled(fi->sign));
    }
    const int cross = parity_sign(popcount(key.i_mask));
    for (const auto& [jm, c] : g.ce_diff(key.j_mask))
      out.add_term(key.i_mask, jm, p.scaled(c * cross));
  }
  return out;
}

PolyForm restrict_to_face(const PolyForm& w, const Simplex& f) {
  const Simplex& s = w.simplex();
  if (!s.has_face(f)) throw std::invalid_argument("restriction target is not a face");
  const int k = s.dimension();
  const int m = f.dimension();

  std::vector<int> pos;
  pos.reserve(m + 1);
  for (int v : f.vertices()) pos.push_back(*s.position_of(v));
  std::vector<char> kept(k + 1, 0);
  for (int p : pos) kept[p] = 1;
  const int s0 = pos[0];

  // Kept positions relabel order-preservingly, so masks pick up no sign.
  std::vector<int> var_map(k, -1);
  for (int r = 1; r <= m; ++r) var_map[pos[r] - 1] = r - 1;

  PolyForm out(f, w.fiber_dim(), w.degree());
  for (const auto& [key, p] : w.terms()) {
    bool dead = false;
    for (int v : mask_bits(key.i_mask))
      if (!kept[v + 1] && v + 1 != s0) {
        dead = true;
        break;
      }
    if (dead) continue;

    Polynomial q = p;
    for (int v = 0; v < k; ++v)
      if (!kept[v + 1]) q = q.subst_zero(v);
    if (q.is_zero()) continue;

    if (s0 == 0) {
      // The eliminated position of s stays eliminated: plain relabel.
      out.add_term(relabel_mask(key.i_mask, var_map), key.j_mask, q.relabel(var_map, m));
      continue;
    }

    // Position s0 becomes the eliminated position of f:
    // t_{s0} = 1 - sum of the other kept coordinates, dt_{s0} = -sum of dt's.
    const int v0 = s0 - 1;
    Polynomial repl = Polynomial::constant(k, 1);
    for (int r = 1; r <= m; ++r) repl = repl - Polynomial::variable(k, pos[r] - 1);
    q = q.subst(v0, repl);
    if (q.is_zero()) continue;
    q = q.relabel(var_map, m);

    std::vector<std::pair<Mask, int>> pieces;
    if (key.i_mask & (Mask{1} << v0)) {
      const Mask rest = key.i_mask & ~(Mask{1} << v0);
      const int extract = parity_sign(popcount(key.i_mask & ((Mask{1} << v0) - 1)));
      for (int r = 1; r <= m; ++r) {
        const auto fi = front_insert(rest, pos[r] - 1);
        if (!fi) continue;
        pieces.emplace_back(fi->mask, -extract * fi->sign);
      }
    } else {
      pieces.emplace_back(key.i_mask, 1);
    }
    for (const auto& [mask, sgn] : pieces)
      out.add_term(relabel_mask(mask, var_map), key.j_mask, q.scaled(sgn));
  }
  return out;
}

PolyForm affine_pullback(const PolyForm& w, const Simplex& source, const Simplex& target) {
  if (w.simplex() != target)
    throw std::invalid_argument("form does not live on the pullback target");
  if (source.dimension() != target.dimension())
    throw std::invalid_argument("affine pullback needs simplices of equal dimension");
  PolyForm out(source, w.fiber_dim(), w.degree());
  for (const auto& [key, p] : w.terms()) out.add_term(key.i_mask, key.j_mask, p);
  return out;
}

namespace {

// phi retracts d away from its vertex at position j onto the opposite facet.
// phi*(w) has denominators s = 1 - t_j; the symbolic result keeps, per term,
// a numerator polynomial for every denominator exponent ("deficit").
struct SymbolicPullback {
  std::map<TermKey, std::map<int, Polynomial>> parts;
  int max_deficit = 0;
};

SymbolicPullback retraction_symbolic(const PolyForm& w, const Simplex& d, int j) {
  const int k = d.dimension();
  if (j < 0 || j > k) throw std::invalid_argument("retraction vertex position out of range");
  if (d.facet_opposite(j) != w.simplex())
    throw std::invalid_argument("form does not live on the facet opposite the given position");

  // Facet position r sits at position a[r] of d; u_r pulls back to t_{a[r]}/s.
  std::vector<int> a(k);
  for (int r = 0; r < k; ++r) a[r] = (r < j) ? r : r + 1;
  std::vector<int> var_map(k - 1, -1);
  for (int r = 1; r < k; ++r) var_map[r - 1] = a[r] - 1;

  struct Piece {
    Mask mask;
    Polynomial num;
    int deficit;
    bool used_dtj;
  };

  SymbolicPullback out;
  for (const auto& [key, p] : w.terms()) {
    // Coefficient: each monomial of degree e contributes e denominators.
    std::map<int, Polynomial> coeff_parts;
    for (const auto& [mono, c] : p.terms()) {
      auto [it, fresh] = coeff_parts.try_emplace(mono.degree(), Polynomial(w.base_dim()));
      it->second.add_term(mono, c);
      (void)fresh;
    }

    // dt factors: du_r = dt_{a[r]}/s + t_{a[r]} dt_j / s^2, wedged in
    // ascending order. dt_j can appear at most once across the product.
    std::vector<Piece> pieces{{0, Polynomial::constant(k, 1), 0, false}};
    for (int v : mask_bits(key.i_mask)) {
      const int ab = a[v + 1] - 1;
      std::vector<Piece> next;
      for (const Piece& pc : pieces) {
        if (const auto bi = back_insert(pc.mask, ab))
          next.push_back({bi->mask, pc.num.scaled(bi->sign), pc.deficit + 1, pc.used_dtj});
        if (pc.used_dtj) continue;
        const Polynomial tnum = pc.num * Polynomial::variable(k, ab);
        if (j >= 1) {
          if (const auto bi = back_insert(pc.mask, j - 1))
            next.push_back({bi->mask, tnum.scaled(bi->sign), pc.deficit + 2, true});
        } else {
          // dt_0 = -sum of the other dt's.
          for (int b = 0; b < k; ++b) {
            if (const auto bi = back_insert(pc.mask, b))
              next.push_back({bi->mask, tnum.scaled(-bi->sign), pc.deficit + 2, true});
          }
        }
      }
      pieces = std::move(next);
    }

    for (const Piece& pc : pieces) {
      for (const auto& [e, qe] : coeff_parts) {
        const Polynomial num = pc.num * qe.relabel(var_map, k);
        if (num.is_zero()) continue;
        const int deficit = pc.deficit + e;
        const TermKey dest{pc.mask, key.j_mask};
        auto [it, fresh] = out.parts[dest].try_emplace(deficit, num);
        if (!fresh) it->second = it->second + num;
      }
    }
  }

  // Cancellation may empty slots; prune before reading off the max deficit.
  for (auto it = out.parts.begin(); it != out.parts.end();) {
    for (auto jt = it->second.begin(); jt != it->second.end();)
      jt = jt->second.is_zero() ? it->second.erase(jt) : std::next(jt);
    if (it->second.empty()) {
      it = out.parts.erase(it);
      continue;
    }
    out.max_deficit = std::max(out.max_deficit, it->second.rbegin()->first);
    ++it;
  }
  return out;
}

Polynomial cutoff_base(const Simplex& d, int j) {
  const int k = d.dimension();
  if (j >= 1) return Polynomial::constant(k, 1) - Polynomial::variable(k, j - 1);
  // s = 1 - t_0 = sum of the canonical coordinates.
  Polynomial s(k);
  for (int v = 0; v < k; ++v) s = s + Polynomial::variable(k, v);
  return s;
}

}  // namespace

int required_cutoff_exponent(const PolyForm& w, const Simplex& d, int j) {
  const auto sym = retraction_symbolic(w, d, j);
  return std::max(1, sym.max_deficit);
}

PolyForm retraction_pullback_with_cutoff(const PolyForm& w, const Simplex& d, int j, int m) {
  const auto sym = retraction_symbolic(w, d, j);
  const int required = std::max(1, sym.max_deficit);
  if (m < required) {
    std::ostringstream msg;
    msg << "cutoff exponent " << m << " leaves denominators uncleared; minimum is " << required;
    throw std::invalid_argument(msg.str());
  }
  const Polynomial s = cutoff_base(d, j);
  std::vector<Polynomial> spow{Polynomial::constant(d.dimension(), 1)};
  for (int e = 1; e <= m; ++e) spow.push_back(spow.back() * s);

  PolyForm out(d, w.fiber_dim(), w.degree());
  for (const auto& [key, slots] : sym.parts)
    for (const auto& [deficit, num] : slots)
      out.add_term(key.i_mask, key.j_mask, num * spow[m - deficit]);
  return out;
}

namespace {

Rational det_small(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return Rational(0);
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      const Rational f = m[r][c] / m[c][c];
      for (std::size_t cc = c; cc < n; ++cc) m[r][cc] -= f * m[c][cc];
    }
  }
  return det;
}

}  // namespace

Rational evaluate(const PolyForm& w, const std::vector<Rational>& point,
                  const std::vector<FormArgument>& args) {
  const int k = w.base_dim();
  if (static_cast<int>(point.size()) != k + 1)
    throw std::invalid_argument("point needs one barycentric coordinate per vertex");
  Rational sum = 0;
  for (const Rational& c : point) {
    if (c < 0) throw std::invalid_argument("barycentric coordinates must be nonnegative");
    sum += c;
  }
  if (sum != 1) throw std::invalid_argument("barycentric coordinates must sum to one");
  if (static_cast<int>(args.size()) != w.degree())
    throw std::invalid_argument("argument count must equal the form degree");
  for (const FormArgument& arg : args) {
    if (static_cast<int>(arg.tangent.size()) != k + 1)
      throw std::invalid_argument("tangent part needs one coordinate per vertex");
    Rational t = 0;
    for (const Rational& c : arg.tangent) t += c;
    if (t != 0) throw std::invalid_argument("tangent coordinates must sum to zero");
    if (static_cast<int>(arg.fiber.size()) != w.fiber_dim())
      throw std::invalid_argument("fiber part has the wrong dimension");
  }

  std::vector<Rational> x(point.begin() + 1, point.end());
  Rational total = 0;
  for (const auto& [key, p] : w.terms()) {
    std::vector<std::vector<Rational>> rows;
    for (int v : mask_bits(key.i_mask)) {
      std::vector<Rational> row;
      row.reserve(args.size());
      for (const FormArgument& arg : args) row.push_back(arg.tangent[v + 1]);
      rows.push_back(std::move(row));
    }
    for (int b : mask_bits(key.j_mask)) {
      std::vector<Rational> row;
      row.reserve(args.size());
      for (const FormArgument& arg : args) row.push_back(arg.fiber[b]);
      rows.push_back(std::move(row));
    }
    total += p.eval(x) * det_small(std::move(rows));
  }
  return total;
}

}  // namespace pwcoh
