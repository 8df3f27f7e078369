#pragma once

// Graphs, flag complexes, integer homology, connectivity verdicts and the
// Bestvina-Brady test for the diagonal character of a right-angled Artin
// group G(Gamma): chi = (1, ..., 1) lies in Sigma^n iff the flag complex of
// Gamma is (n-1)-connected.

#include "sigma/character_sphere.hpp"
#include "sigma/rational.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sigma::raag {

class SimpleGraph {
 public:
  /// Edges are index pairs; throws InvalidInput on loops, repeated edges,
  /// out-of-range indices or repeated vertex names.
  SimpleGraph(std::vector<std::string> vertices, std::vector<std::pair<std::size_t, std::size_t>> edges);

  static SimpleGraph complete(std::size_t m);
  static SimpleGraph cycle(std::size_t m);
  static SimpleGraph octahedron();

  std::size_t size() const { return vertices_.size(); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  /// Sorted pairs (i, j), i < j.
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
  bool adjacent(std::size_t i, std::size_t j) const { return adj_[i][j]; }
  /// Throws UnknownVertex.
  std::size_t index_of(const std::string& name) const;

 private:
  std::vector<std::string> vertices_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::vector<std::vector<bool>> adj_;
};

/// One edge "u v" per line; a line with a single name adds an isolated
/// vertex; '#' starts a comment. Vertices are numbered in order of first use.
SimpleGraph parse_edge_list(const std::string& text);

using Simplex = std::vector<std::size_t>;

class SimplicialComplex {
 public:
  /// Closes the given simplices under faces. Throws InvalidInput on empty
  /// simplices, repeated vertices or indices >= vertex_count.
  SimplicialComplex(std::size_t vertex_count, const std::vector<Simplex>& simplices);

  std::size_t vertex_count() const { return vertex_count_; }
  /// -1 for the empty complex.
  int dimension() const { return static_cast<int>(by_dim_.size()) - 1; }
  /// Sorted simplices of dimension d (empty past the top dimension).
  const std::vector<Simplex>& simplices(std::size_t d) const;
  std::size_t count(std::size_t d) const { return simplices(d).size(); }
  std::size_t total() const;

 private:
  std::size_t vertex_count_;
  std::vector<std::vector<Simplex>> by_dim_;
};

/// Simplices are the cliques of the graph; maximal cliques come from
/// Bron-Kerbosch with pivoting.
SimplicialComplex flag_complex(const SimpleGraph& g);

/// The 6-vertex triangulation of the real projective plane.
SimplicialComplex projective_plane_6();

struct DegreeHomology {
  std::size_t degree = 0;
  std::size_t betti = 0;          // rank of H_i
  std::size_t reduced_betti = 0;  // rank of the reduced group
  std::vector<Integer> torsion;   // invariant factors > 1, each dividing the next
};

struct HomologyProfile {
  std::vector<DegreeHomology> degrees;  // 0..max_degree

  bool reduced_vanishes(std::size_t i) const {
    return degrees[i].reduced_betti == 0 && degrees[i].torsion.empty();
  }
};

/// Integer homology in degrees 0..max_degree from the boundary matrices by
/// Smith normal form.
HomologyProfile homology(const SimplicialComplex& k, std::size_t max_degree);

/// Nonzero diagonal of the Smith normal form (positive, divisibility ordered).
std::vector<Integer> smith_invariants(std::vector<std::vector<Integer>> m);

enum class Tri { Yes, No, Unknown };
std::string to_string(Tri t);

struct TietzeCertificate {
  std::size_t generators = 0;  // of the edge-path presentation
  std::size_t relators = 0;
  std::size_t steps = 0;       // rewriting steps used
  bool trivial = false;        // every generator was eliminated
  std::size_t remaining_generators = 0;
  std::vector<std::string> log;  // one line per elimination
};

/// Edge-path presentation of pi_1 over a spanning tree, then Tietze moves:
/// drop generators that are trivial, and eliminate a generator occurring once
/// in a relator by substitution. Stops after `budget` rewriting steps.
TietzeCertificate simplify_fundamental_group(const SimplicialComplex& k, std::size_t budget = 10000);

struct ConnectivityVerdict {
  std::size_t level = 0;  // n, asking for (n-1)-connectedness
  std::size_t components = 0;
  bool connected = false;
  /// Only required (and computed) for n >= 2.
  std::optional<Tri> simply_connected;
  std::optional<TietzeCertificate> certificate;
  /// Reduced H_i = 0 for 1 <= i <= n-1 (degree 0 is the component count).
  bool homology_vanishing = true;
  std::optional<std::size_t> first_nonvanishing;
  Tri overall = Tri::Unknown;
};

/// n = 0 asks for a nonempty complex, n = 1 for connectedness, n >= 2 for
/// connectedness, simple connectivity and vanishing reduced homology up to
/// degree n - 1.
ConnectivityVerdict connectivity_verdict(const SimplicialComplex& k, std::size_t n, std::size_t budget = 10000);

enum class Membership { In, Out, Unknown };
std::string to_string(Membership m);

struct BestvinaBradyReport {
  Membership membership = Membership::Unknown;
  ConnectivityVerdict verdict;
};

BestvinaBradyReport bestvina_brady_report(const SimpleGraph& g, std::size_t n, std::size_t budget = 10000);
Membership bestvina_brady(const SimpleGraph& g, std::size_t n);

/// The diagonal character (1, ..., 1) in vertex coordinates.
sphere::Character diagonal_character(const SimpleGraph& g);

/// H_v = {chi : chi(v) > 0}; throws UnknownVertex.
sphere::OpenHemisphere coordinate_hemisphere(const SimpleGraph& g, const std::string& v);
sphere::OpenHemisphere coordinate_hemisphere(const SimpleGraph& g, std::size_t v);

}  // namespace sigma::raag
