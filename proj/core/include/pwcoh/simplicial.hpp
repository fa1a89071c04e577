#pragma once

// Finite abstract simplicial complexes. A Simplex is a strictly increasing
// vertex list; a SimplicialComplex is a face-closed finite set of simplices.
// Iteration order everywhere is (dimension, lexicographic), which downstream
// code relies on for deterministic bases and facet sweeps.

#include <optional>
#include <set>
#include <span>
#include <vector>

namespace pwcoh {

class Simplex {
 public:
  explicit Simplex(std::vector<int> vertices);

  int dimension() const { return static_cast<int>(vertices_.size()) - 1; }
  const std::vector<int>& vertices() const { return vertices_; }

  bool has_vertex(int v) const;
  // Position of v in the vertex list, if present.
  std::optional<int> position_of(int v) const;
  bool has_face(const Simplex& f) const;

  // Facet opposite the vertex at `position`.
  Simplex facet_opposite(int position) const;
  std::vector<Simplex> facets() const;
  // Every proper nonempty face, ascending (dimension, lex).
  std::vector<Simplex> proper_faces() const;

  bool operator==(const Simplex&) const = default;
  // (dimension, lex) order.
  bool operator<(const Simplex& o) const;

 private:
  std::vector<int> vertices_;
};

Simplex join(const Simplex& s, int vertex);

class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  // Validates face-closedness.
  explicit SimplicialComplex(std::set<Simplex> simplices);
  // Closes the given simplices under taking faces.
  static SimplicialComplex closure(std::span<const Simplex> generators);
  static SimplicialComplex closure(std::initializer_list<Simplex> generators);

  bool empty() const { return simplices_.empty(); }
  std::size_t size() const { return simplices_.size(); }
  bool contains(const Simplex& s) const { return simplices_.count(s) > 0; }
  // -1 for the empty complex.
  int dimension() const;

  const std::set<Simplex>& simplices() const { return simplices_; }
  std::vector<Simplex> of_dimension(int d) const;
  std::vector<Simplex> maximal_simplices() const;
  std::vector<int> vertex_ids() const;

  bool operator==(const SimplicialComplex&) const = default;

 private:
  std::set<Simplex> simplices_;
};

SimplicialComplex boundary_complex(const Simplex& s);
bool is_subcomplex(const SimplicialComplex& l, const SimplicialComplex& k);
SimplicialComplex complex_union(const SimplicialComplex& a, const SimplicialComplex& b);
SimplicialComplex complex_intersection(const SimplicialComplex& a, const SimplicialComplex& b);
SimplicialComplex skeleton(const SimplicialComplex& k, int d);

struct CoverDecomposition {
  SimplicialComplex k0;
  SimplicialComplex k1;
  SimplicialComplex whole;    // k0 union k1
  SimplicialComplex overlap;  // k0 intersect k1
};

CoverDecomposition cover(const SimplicialComplex& k0, const SimplicialComplex& k1);

}  // namespace pwcoh
