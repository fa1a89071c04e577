#include "pwcoh/oracle.hpp"

#include <map>
#include <stdexcept>
#include <utility>

#include "pwcoh/combinatorics.hpp"

namespace pwcoh {

RationalMatrix simplicial_coboundary(const SimplicialComplex& k, int p) {
  const auto tops = k.of_dimension(p + 1);
  const auto bots = p < 0 ? std::vector<Simplex>{} : k.of_dimension(p);
  std::map<Simplex, int> col_of;
  for (std::size_t i = 0; i < bots.size(); ++i)
    col_of.emplace(bots[i], static_cast<int>(i));

  RationalMatrix m(static_cast<int>(tops.size()), static_cast<int>(bots.size()));
  for (std::size_t r = 0; r < tops.size(); ++r) {
    for (int i = 0; i <= p + 1; ++i) {
      const int c = col_of.at(tops[r].facet_opposite(i));
      m.at(static_cast<int>(r), c) += (i % 2 == 0) ? 1 : -1;
    }
  }
  return m;
}

SimplicialFiberComplex::SimplicialFiberComplex(SimplicialComplex k, LieAlgebra g)
    : k_(std::move(k)), g_(std::move(g)) {
  const int kdim = k_.dimension();
  const int ng = g_.dim();
  max_degree_ = k_.empty() ? -1 : kdim + ng;
  dims_.assign(max_degree_ >= 0 ? static_cast<std::size_t>(max_degree_) + 2 : 1, 0);

  const auto count = [&](int q) {
    return q < 0 ? 0 : static_cast<int>(k_.of_dimension(q).size());
  };
  const auto jcount = [&](int j) {
    return static_cast<int>(subsets_of_size(ng, j).size());
  };

  for (int p = 0; p <= max_degree_; ++p)
    for (int q = std::max(0, p - ng); q <= std::min(kdim, p); ++q)
      dims_[static_cast<std::size_t>(p)] += count(q) * jcount(p - q);

  // Per-degree column offsets of each bidegree block, ascending in q.
  const auto offsets = [&](int p) {
    std::map<int, int> off;
    int total = 0;
    for (int q = std::max(0, p - ng); q <= std::min(kdim, p); ++q) {
      off.emplace(q, total);
      total += count(q) * jcount(p - q);
    }
    return off;
  };

  for (int p = 0; p <= max_degree_; ++p) {
    const auto src = offsets(p);
    const auto dst = offsets(p + 1);
    RationalMatrix d(dims_[static_cast<std::size_t>(p) + 1],
                     dims_[static_cast<std::size_t>(p)]);

    for (const auto& [q, col_off] : src) {
      const int j = p - q;
      const int jc = jcount(j);

      if (const auto it = dst.find(q + 1); it != dst.end()) {
        const RationalMatrix cob = simplicial_coboundary(k_, q);
        for (int r = 0; r < cob.rows(); ++r)
          for (int c = 0; c < cob.cols(); ++c) {
            if (cob.at(r, c) == 0) continue;
            for (int jj = 0; jj < jc; ++jj)
              d.at(it->second + r * jc + jj, col_off + c * jc + jj) = cob.at(r, c);
          }
      }

      if (const auto it = dst.find(q); it != dst.end()) {
        const RationalMatrix ce = ce_differential_matrix(g_, j);
        const int sgn = (q % 2 == 0) ? 1 : -1;
        const int cq = count(q);
        for (int a = 0; a < cq; ++a)
          for (int r = 0; r < ce.rows(); ++r)
            for (int c = 0; c < ce.cols(); ++c) {
              if (ce.at(r, c) == 0) continue;
              d.at(it->second + a * ce.rows() + r, col_off + a * jc + c) =
                  ce.at(r, c) * sgn;
            }
      }
    }
    d_.push_back(std::move(d));
  }

  for (int p = 0; p + 1 <= max_degree_; ++p)
    if (!(d_[static_cast<std::size_t>(p) + 1] * d_[static_cast<std::size_t>(p)])
             .is_zero())
      throw std::logic_error("total differential does not square to zero");
}

int SimplicialFiberComplex::dim(int p) const {
  if (p < 0 || p >= static_cast<int>(dims_.size())) return 0;
  return dims_[static_cast<std::size_t>(p)];
}

const RationalMatrix& SimplicialFiberComplex::d(int p) const {
  if (p < 0 || p >= static_cast<int>(d_.size()))
    throw std::out_of_range("differential degree out of range");
  return d_[static_cast<std::size_t>(p)];
}

std::vector<int> SimplicialFiberComplex::betti() const {
  std::vector<int> out;
  int prev_rank = 0;
  for (int p = 0; p <= max_degree_; ++p) {
    const int rk = rank(d_[static_cast<std::size_t>(p)]);
    out.push_back(dim(p) - rk - prev_rank);
    prev_rank = rk;
  }
  return out;
}

std::vector<int> oracle_betti(const SimplicialComplex& k, const LieAlgebra& g) {
  return SimplicialFiberComplex(k, g).betti();
}

}  // namespace pwcoh
