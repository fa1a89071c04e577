#include "pwcoh/simplicial.hpp"

#include <algorithm>
#include <stdexcept>

namespace pwcoh {

Simplex::Simplex(std::vector<int> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw std::invalid_argument("simplex needs at least one vertex");
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i] < 0) throw std::invalid_argument("negative vertex id");
    if (i > 0 && vertices_[i - 1] >= vertices_[i])
      throw std::invalid_argument("simplex vertices must be strictly increasing");
  }
}

bool Simplex::has_vertex(int v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

std::optional<int> Simplex::position_of(int v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) return std::nullopt;
  return static_cast<int>(it - vertices_.begin());
}

bool Simplex::has_face(const Simplex& f) const {
  return std::includes(vertices_.begin(), vertices_.end(), f.vertices_.begin(),
                       f.vertices_.end());
}

Simplex Simplex::facet_opposite(int position) const {
  if (position < 0 || position > dimension())
    throw std::invalid_argument("facet position out of range");
  if (dimension() == 0) throw std::invalid_argument("a vertex has no facets");
  std::vector<int> v;
  v.reserve(vertices_.size() - 1);
  for (int i = 0; i < static_cast<int>(vertices_.size()); ++i)
    if (i != position) v.push_back(vertices_[i]);
  return Simplex(std::move(v));
}

std::vector<Simplex> Simplex::facets() const {
  std::vector<Simplex> out;
  if (dimension() == 0) return out;
  for (int i = 0; i <= dimension(); ++i) out.push_back(facet_opposite(i));
  return out;
}

std::vector<Simplex> Simplex::proper_faces() const {
  std::set<Simplex> faces;
  const int n = static_cast<int>(vertices_.size());
  for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
    std::vector<int> v;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) v.push_back(vertices_[i]);
    faces.insert(Simplex(std::move(v)));
  }
  return {faces.begin(), faces.end()};
}

bool Simplex::operator<(const Simplex& o) const {
  if (vertices_.size() != o.vertices_.size()) return vertices_.size() < o.vertices_.size();
  return vertices_ < o.vertices_;
}

Simplex join(const Simplex& s, int vertex) {
  if (s.has_vertex(vertex)) throw std::invalid_argument("join vertex already present");
  std::vector<int> v = s.vertices();
  v.insert(std::upper_bound(v.begin(), v.end(), vertex), vertex);
  return Simplex(std::move(v));
}

SimplicialComplex::SimplicialComplex(std::set<Simplex> simplices)
    : simplices_(std::move(simplices)) {
  for (const Simplex& s : simplices_)
    for (const Simplex& f : s.facets())
      if (!simplices_.count(f))
        throw std::invalid_argument("simplex set is not closed under faces");
}

SimplicialComplex SimplicialComplex::closure(std::span<const Simplex> generators) {
  SimplicialComplex k;
  for (const Simplex& s : generators) {
    k.simplices_.insert(s);
    for (const Simplex& f : s.proper_faces()) k.simplices_.insert(f);
  }
  return k;
}

SimplicialComplex SimplicialComplex::closure(std::initializer_list<Simplex> generators) {
  return closure(std::span<const Simplex>(generators.begin(), generators.size()));
}

int SimplicialComplex::dimension() const {
  int d = -1;
  for (const Simplex& s : simplices_) d = std::max(d, s.dimension());
  return d;
}

std::vector<Simplex> SimplicialComplex::of_dimension(int d) const {
  std::vector<Simplex> out;
  for (const Simplex& s : simplices_)
    if (s.dimension() == d) out.push_back(s);
  return out;
}

std::vector<Simplex> SimplicialComplex::maximal_simplices() const {
  std::vector<Simplex> out;
  for (const Simplex& s : simplices_) {
    bool maximal = true;
    for (const Simplex& t : simplices_) {
      if (t.dimension() > s.dimension() && t.has_face(s)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(s);
  }
  return out;
}

std::vector<int> SimplicialComplex::vertex_ids() const {
  std::set<int> ids;
  for (const Simplex& s : simplices_)
    ids.insert(s.vertices().begin(), s.vertices().end());
  return {ids.begin(), ids.end()};
}

SimplicialComplex boundary_complex(const Simplex& s) {
  if (s.dimension() == 0) return {};
  std::vector<Simplex> f = s.facets();
  return SimplicialComplex::closure(std::span<const Simplex>(f.data(), f.size()));
}

bool is_subcomplex(const SimplicialComplex& l, const SimplicialComplex& k) {
  return std::includes(k.simplices().begin(), k.simplices().end(),
                       l.simplices().begin(), l.simplices().end());
}

SimplicialComplex complex_union(const SimplicialComplex& a, const SimplicialComplex& b) {
  std::set<Simplex> s = a.simplices();
  s.insert(b.simplices().begin(), b.simplices().end());
  return SimplicialComplex(std::move(s));
}

SimplicialComplex complex_intersection(const SimplicialComplex& a,
                                       const SimplicialComplex& b) {
  std::set<Simplex> s;
  std::set_intersection(a.simplices().begin(), a.simplices().end(),
                        b.simplices().begin(), b.simplices().end(),
                        std::inserter(s, s.begin()));
  return SimplicialComplex(std::move(s));
}

SimplicialComplex skeleton(const SimplicialComplex& k, int d) {
  if (d < 0) throw std::invalid_argument("skeleton dimension must be nonnegative");
  std::set<Simplex> s;
  for (const Simplex& x : k.simplices())
    if (x.dimension() <= d) s.insert(x);
  return SimplicialComplex(std::move(s));
}

CoverDecomposition cover(const SimplicialComplex& k0, const SimplicialComplex& k1) {
  return CoverDecomposition{k0, k1, complex_union(k0, k1), complex_intersection(k0, k1)};
}

}  // namespace pwcoh
