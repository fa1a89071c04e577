#include "pwcoh/lie_algebra.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace pwcoh {

LieAlgebra::LieAlgebra(int dim, const std::vector<BracketEntry>& entries) : dim_(dim) {
  if (dim < 0 || dim > 30) throw std::invalid_argument("fiber dimension out of range");
  table_.assign(static_cast<std::size_t>(dim) * (dim - 1) / 2,
                std::vector<Rational>(dim, Rational(0)));
  for (const BracketEntry& e : entries) {
    if (e.i < 0 || e.j >= dim_ || e.i >= e.j)
      throw std::invalid_argument("bracket entry needs 0 <= i < j < dim");
    if (e.k < 0 || e.k >= dim_)
      throw std::invalid_argument("bracket target out of range");
    table_[pair_index(e.i, e.j)][e.k] += e.c;
  }
}

int LieAlgebra::pair_index(int i, int j) const {
  // (i, j) with i < j in lex order: all pairs with first index < i, then j.
  return i * dim_ - i * (i + 1) / 2 + (j - i - 1);
}

Rational LieAlgebra::structure_constant(int i, int j, int k) const {
  if (i < 0 || i >= dim_ || j < 0 || j >= dim_ || k < 0 || k >= dim_)
    throw std::invalid_argument("structure constant index out of range");
  if (i == j) return 0;
  if (i < j) return table_[pair_index(i, j)][k];
  return -table_[pair_index(j, i)][k];
}

std::vector<Rational> LieAlgebra::bracket(int i, int j) const {
  std::vector<Rational> out(dim_, Rational(0));
  for (int k = 0; k < dim_; ++k) out[k] = structure_constant(i, j, k);
  return out;
}

std::optional<std::string> LieAlgebra::jacobi_failure() const {
  // [[e_i,e_j],e_l] + [[e_j,e_l],e_i] + [[e_l,e_i],e_j] componentwise.
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j)
      for (int l = j + 1; l < dim_; ++l)
        for (int target = 0; target < dim_; ++target) {
          Rational sum = 0;
          for (int m = 0; m < dim_; ++m) {
            sum += structure_constant(i, j, m) * structure_constant(m, l, target);
            sum += structure_constant(j, l, m) * structure_constant(m, i, target);
            sum += structure_constant(l, i, m) * structure_constant(m, j, target);
          }
          if (sum != 0) {
            std::ostringstream os;
            os << "jacobi fails on basis triple (" << i << "," << j << "," << l
               << ") in component " << target << " with defect " << to_string(sum);
            return os.str();
          }
        }
  return std::nullopt;
}

std::vector<std::pair<Mask, Rational>> LieAlgebra::ce_diff_covector(int k) const {
  if (k < 0 || k >= dim_) throw std::invalid_argument("covector index out of range");
  std::vector<std::pair<Mask, Rational>> out;
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j) {
      const Rational c = structure_constant(i, j, k);
      if (c != 0) out.emplace_back((Mask{1} << i) | (Mask{1} << j), -c);
    }
  return out;
}

std::vector<std::pair<Mask, Rational>> LieAlgebra::ce_diff(Mask j_mask) const {
  std::map<Mask, Rational> acc;
  const std::vector<int> bits = mask_bits(j_mask);
  for (std::size_t r = 0; r < bits.size(); ++r) {
    const int slot_sign = (r % 2 == 0) ? 1 : -1;  // (-1)^{r} for the r-th generator
    const Mask rest = j_mask & ~(Mask{1} << bits[r]);
    for (const auto& [pair_mask, c] : ce_diff_covector(bits[r])) {
      // pair_mask = {i < j}; wedge theta^i ^ theta^j onto theta_rest in front.
      const std::vector<int> ij = mask_bits(pair_mask);
      const auto first = front_insert(rest, ij[1]);
      if (!first) continue;
      const auto second = front_insert(first->mask, ij[0]);
      if (!second) continue;
      const Rational v = c * slot_sign * first->sign * second->sign;
      acc[second->mask] += v;
    }
  }
  std::vector<std::pair<Mask, Rational>> out;
  for (const auto& [m, c] : acc)
    if (c != 0) out.emplace_back(m, c);
  return out;
}

RationalMatrix ce_differential_matrix(const LieAlgebra& g, int j) {
  const int n = g.dim();
  if (j < 0) throw std::invalid_argument("negative exterior degree");
  if (j > n) return RationalMatrix(0, 0);
  const std::vector<Mask> domain = subsets_of_size(n, j);
  const std::vector<Mask> range = subsets_of_size(n, j + 1);
  std::map<Mask, int> range_index;
  for (std::size_t i = 0; i < range.size(); ++i) range_index[range[i]] = static_cast<int>(i);

  RationalMatrix m(static_cast<int>(range.size()), static_cast<int>(domain.size()));
  for (std::size_t c = 0; c < domain.size(); ++c)
    for (const auto& [mask, v] : g.ce_diff(domain[c]))
      m.at(range_index.at(mask), static_cast<int>(c)) += v;
  return m;
}

std::vector<int> ce_betti(const LieAlgebra& g) {
  if (auto failure = g.jacobi_failure())
    throw std::invalid_argument("invalid lie algebra: " + *failure);
  const int n = g.dim();
  std::vector<int> ranks(n + 1, 0);  // rank of d_j for j = 0..n
  for (int j = 0; j < n; ++j) ranks[j] = rank(ce_differential_matrix(g, j));
  std::vector<int> betti(n + 1);
  for (int j = 0; j <= n; ++j) {
    long dim_j = 1;
    for (int t = 0; t < j; ++t) dim_j = dim_j * (n - t) / (t + 1);
    const int incoming = j == 0 ? 0 : ranks[j - 1];
    betti[j] = static_cast<int>(dim_j) - ranks[j] - incoming;
  }
  return betti;
}

}  // namespace pwcoh
