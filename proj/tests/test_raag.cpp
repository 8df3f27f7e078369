#include "doctest.h"
#include "sigma/gen.hpp"

#include "sigma/error.hpp"
#include "sigma/raag.hpp"

#include <map>
#include <set>

using namespace sigma;
using namespace sigma::raag;

namespace {

SimpleGraph random_graph(gen::Gen& g, std::size_t n, int percent) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (g.integer(1, 100) <= percent) edges.emplace_back(i, j);
  return SimpleGraph(names, edges);
}

// Every vertex subset, checked for pairwise adjacency.
std::vector<std::size_t> brute_clique_counts(const SimpleGraph& g) {
  std::vector<std::size_t> counts;
  const std::size_t n = g.size();
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) s.push_back(i);
    bool clique = true;
    for (std::size_t a = 0; a < s.size() && clique; ++a)
      for (std::size_t b = a + 1; b < s.size() && clique; ++b) clique = g.adjacent(s[a], s[b]);
    if (!clique) continue;
    if (counts.size() < s.size()) counts.resize(s.size());
    ++counts[s.size() - 1];
  }
  return counts;
}

// Rank over Q of the boundary map in degree d, by Gaussian elimination.
std::size_t rational_rank(const SimplicialComplex& k, std::size_t d) {
  if (d == 0 || k.count(d) == 0) return 0;
  const auto& lower = k.simplices(d - 1);
  std::map<Simplex, std::size_t> index;
  for (std::size_t i = 0; i < lower.size(); ++i) index[lower[i]] = i;
  std::vector<std::vector<Rational>> m;
  for (const auto& s : k.simplices(d)) {
    std::vector<Rational> col(lower.size(), Rational(0));
    for (std::size_t i = 0; i < s.size(); ++i) {
      Simplex f = s;
      f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
      col[index[f]] = i % 2 ? -1 : 1;
    }
    m.push_back(col);
  }
  std::size_t rank = 0;
  const std::size_t cols = lower.size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t i = rank + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      const Rational f = m[i][c] / m[rank][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

Integer det(std::vector<std::vector<Integer>> a) {
  // Bareiss fraction-free elimination
  const std::size_t n = a.size();
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return n == 0 ? Integer(1) : sign * a[n - 1][n - 1];
}

// Invariant factors from determinantal divisors: s_k = d_k / d_{k-1} with
// d_k the gcd of all k x k minors.
std::vector<Integer> determinantal_invariants(const std::vector<std::vector<Integer>>& m) {
  const std::size_t rows = m.size(), cols = m[0].size();
  std::vector<Integer> d{Integer(1)};
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    Integer g = 0;
    std::vector<bool> rs(rows, false), cs(cols, false);
    std::fill(rs.begin(), rs.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
      std::fill(cs.begin(), cs.end(), false);
      std::fill(cs.begin(), cs.begin() + static_cast<std::ptrdiff_t>(k), true);
      do {
        std::vector<std::vector<Integer>> sub;
        for (std::size_t i = 0; i < rows; ++i) {
          if (!rs[i]) continue;
          sub.emplace_back();
          for (std::size_t j = 0; j < cols; ++j)
            if (cs[j]) sub.back().push_back(m[i][j]);
        }
        g = gcd(g, det(sub));
      } while (std::prev_permutation(cs.begin(), cs.end()));
    } while (std::prev_permutation(rs.begin(), rs.end()));
    if (g == 0) break;
    d.push_back(g < 0 ? Integer(-g) : g);
  }
  std::vector<Integer> s;
  for (std::size_t k = 1; k < d.size(); ++k) s.push_back(d[k] / d[k - 1]);
  return s;
}

bool graph_connected(const SimpleGraph& g) {
  if (g.size() == 0) return false;
  std::set<std::size_t> seen{0};
  std::vector<std::size_t> stack{0};
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t w = 0; w < g.size(); ++w)
      if (g.adjacent(v, w) && seen.insert(w).second) stack.push_back(w);
  }
  return seen.size() == g.size();
}

}  // namespace

TEST_CASE("graphs") {
  CHECK_THROWS_AS(SimpleGraph({"a", "b"}, {{0, 0}}), Error);
  CHECK_THROWS_AS(SimpleGraph({"a", "b"}, {{0, 1}, {1, 0}}), Error);
  CHECK_THROWS_AS(SimpleGraph({"a", "a"}, {}), Error);
  CHECK_THROWS_AS(SimpleGraph({"a"}, {{0, 3}}), Error);
  const auto g = parse_edge_list("# square\na b\nb c\nc d\nd a  # closing edge\n\nlonely\n");
  CHECK(g.size() == 5);
  CHECK(g.edges().size() == 4);
  CHECK(g.adjacent(g.index_of("a"), g.index_of("d")));
  CHECK_FALSE(g.adjacent(g.index_of("a"), g.index_of("c")));
  try {
    g.index_of("zzz");
    FAIL("expected UnknownVertex");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownVertex);
  }
  CHECK_THROWS_AS(parse_edge_list("a b c\n"), Error);
  CHECK_THROWS_AS(parse_edge_list("a a\n"), Error);
  CHECK(SimpleGraph::octahedron().edges().size() == 12);
}

TEST_CASE("flag complex examples") {
  const auto k4 = flag_complex(SimpleGraph::complete(4));
  CHECK(k4.total() == 15);
  CHECK(k4.dimension() == 3);
  const auto c4 = flag_complex(SimpleGraph::cycle(4));
  CHECK(c4.dimension() == 1);
  CHECK(c4.count(0) == 4);
  CHECK(c4.count(1) == 4);
  const auto oct = flag_complex(SimpleGraph::octahedron());
  CHECK(oct.count(2) == 8);
  CHECK(oct.dimension() == 2);
  CHECK(flag_complex(SimpleGraph({}, {})).dimension() == -1);
}

TEST_CASE("flag complex matches a subset scan") {
  gen::Gen g(61);
  for (int i = 0; i < 60; ++i) {
    const auto n = static_cast<std::size_t>(g.integer(1, 12));
    const auto gr = random_graph(g, n, static_cast<int>(g.integer(10, 90)));
    const auto k = flag_complex(gr);
    const auto counts = brute_clique_counts(gr);
    REQUIRE(static_cast<std::size_t>(k.dimension() + 1) == counts.size());
    for (std::size_t d = 0; d < counts.size(); ++d) CHECK(k.count(d) == counts[d]);
    for (const auto& [a, b] : gr.edges()) {
      const auto& edges = k.simplices(1);
      CHECK(std::find(edges.begin(), edges.end(), Simplex{a, b}) != edges.end());
    }
  }
}

TEST_CASE("smith invariants match determinantal divisors") {
  CHECK(smith_invariants({{Integer(2), Integer(4)}, {Integer(6), Integer(8)}}) == std::vector<Integer>{2, 4});
  CHECK(smith_invariants({{Integer(0)}}).empty());
  gen::Gen g(67);
  for (int i = 0; i < 300; ++i) {
    const auto rows = static_cast<std::size_t>(g.integer(1, 4)), cols = static_cast<std::size_t>(g.integer(1, 4));
    std::vector<std::vector<Integer>> m(rows, std::vector<Integer>(cols));
    for (auto& row : m)
      for (auto& x : row) x = g.integer(0, 3) == 0 ? 0 : g.integer(-9, 9);
    const auto s = smith_invariants(m);
    CHECK(s == determinantal_invariants(m));
    for (std::size_t j = 1; j < s.size(); ++j) CHECK(s[j] % s[j - 1] == 0);
  }
  // Entries past the machine range take the arbitrary-precision path.
  const Integer big = Integer(1) << 80;
  CHECK(smith_invariants({{big, Integer(0)}, {Integer(0), big * 3}}) == std::vector<Integer>{big, big * 3});
}

TEST_CASE("homology examples") {
  const SimplicialComplex triangle(3, {{0, 1}, {1, 2}, {0, 2}});
  const auto ht = homology(triangle, 2);
  CHECK(ht.degrees[0].betti == 1);
  CHECK(ht.degrees[0].reduced_betti == 0);
  CHECK(ht.degrees[1].reduced_betti == 1);
  CHECK(ht.degrees[1].torsion.empty());

  const auto ho = homology(flag_complex(SimpleGraph::octahedron()), 3);
  CHECK(ho.reduced_vanishes(0));
  CHECK(ho.reduced_vanishes(1));
  CHECK(ho.degrees[2].reduced_betti == 1);
  CHECK(ho.reduced_vanishes(3));

  const auto hp = homology(projective_plane_6(), 2);
  CHECK(hp.degrees[1].reduced_betti == 0);
  CHECK(hp.degrees[1].torsion == std::vector<Integer>{2});
  CHECK(hp.reduced_vanishes(2));
  CHECK(projective_plane_6().count(1) == 15);

  const SimplicialComplex two_points(2, {});
  CHECK(homology(two_points, 1).degrees[0].reduced_betti == 1);
}

TEST_CASE("homology against rank over Q and the Euler characteristic") {
  gen::Gen g(71);
  for (int i = 0; i < 60; ++i) {
    const auto gr = random_graph(g, static_cast<std::size_t>(g.integer(1, 10)), static_cast<int>(g.integer(20, 80)));
    const auto k = flag_complex(gr);
    const std::size_t top = static_cast<std::size_t>(k.dimension());
    const auto h = homology(k, top);
    long long chi_h = 0, chi_f = 0;
    for (std::size_t d = 0; d <= top; ++d) {
      const std::size_t expected = k.count(d) - rational_rank(k, d) - rational_rank(k, d + 1);
      CHECK(h.degrees[d].betti == expected);
      chi_h += (d % 2 ? -1 : 1) * static_cast<long long>(h.degrees[d].betti);
      chi_f += (d % 2 ? -1 : 1) * static_cast<long long>(k.count(d));
      for (std::size_t j = 1; j < h.degrees[d].torsion.size(); ++j)
        CHECK(h.degrees[d].torsion[j] % h.degrees[d].torsion[j - 1] == 0);
      for (const auto& t : h.degrees[d].torsion) CHECK(t > 1);
    }
    CHECK(chi_h == chi_f);
    CHECK(h.degrees[0].betti >= 1);
  }
}

TEST_CASE("fundamental group simplification") {
  const auto s2 = simplify_fundamental_group(flag_complex(SimpleGraph::octahedron()));
  CHECK(s2.generators == 12 - 5);
  CHECK(s2.relators == 8);
  CHECK(s2.trivial);
  CHECK(s2.log.size() == s2.generators);
  CHECK(s2.steps <= 10000);
  const auto circle = simplify_fundamental_group(flag_complex(SimpleGraph::cycle(5)));
  CHECK(circle.generators == 1);
  CHECK_FALSE(circle.trivial);
  const auto rp2 = simplify_fundamental_group(projective_plane_6());
  CHECK_FALSE(rp2.trivial);
  CHECK(rp2.remaining_generators == 1);
  const auto starved = simplify_fundamental_group(flag_complex(SimpleGraph::octahedron()), 0);
  CHECK_FALSE(starved.trivial);
}

TEST_CASE("connectivity verdicts") {
  for (std::size_t n = 0; n <= 5; ++n) CHECK(connectivity_verdict(flag_complex(SimpleGraph::complete(5)), n).overall == Tri::Yes);
  const auto c4 = connectivity_verdict(flag_complex(SimpleGraph::cycle(4)), 2);
  CHECK(c4.connected);
  CHECK(*c4.simply_connected == Tri::No);
  CHECK(c4.overall == Tri::No);
  CHECK(*c4.first_nonvanishing == 1);
  const auto oct = flag_complex(SimpleGraph::octahedron());
  CHECK(connectivity_verdict(oct, 2).overall == Tri::Yes);
  CHECK(connectivity_verdict(oct, 2).certificate->trivial);
  const auto o3 = connectivity_verdict(oct, 3);
  CHECK(o3.overall == Tri::No);
  CHECK(*o3.first_nonvanishing == 2);
  CHECK(*o3.simply_connected == Tri::Yes);
  CHECK(connectivity_verdict(projective_plane_6(), 2).overall == Tri::No);
  // Without a rewriting budget simple connectivity stays undecided.
  CHECK(connectivity_verdict(oct, 2, 0).overall == Tri::Unknown);
  CHECK(connectivity_verdict(SimplicialComplex(0, {}), 0).overall == Tri::No);
  CHECK(connectivity_verdict(SimplicialComplex(2, {}), 0).overall == Tri::Yes);
  CHECK(connectivity_verdict(SimplicialComplex(2, {}), 1).overall == Tri::No);
}

TEST_CASE("Bestvina-Brady examples") {
  for (std::size_t m = 1; m <= 5; ++m)
    for (std::size_t n = 0; n <= 4; ++n) CHECK(bestvina_brady(SimpleGraph::complete(m), n) == Membership::In);
  CHECK(bestvina_brady(SimpleGraph::cycle(4), 1) == Membership::In);
  CHECK(bestvina_brady(SimpleGraph::cycle(4), 2) == Membership::Out);
  CHECK(bestvina_brady(SimpleGraph::octahedron(), 2) == Membership::In);
  CHECK(bestvina_brady(SimpleGraph::octahedron(), 3) == Membership::Out);
  CHECK(to_string(Membership::Out) == "Out");
  CHECK(to_string(Tri::Unknown) == "Unknown");
}

TEST_CASE("Bestvina-Brady properties") {
  gen::Gen g(73);
  for (int i = 0; i < 80; ++i) {
    const auto gr = random_graph(g, static_cast<std::size_t>(g.integer(1, 9)), static_cast<int>(g.integer(20, 95)));
    CHECK((bestvina_brady(gr, 1) == Membership::In) == graph_connected(gr));
    // In at level n forces In below it.
    std::optional<std::size_t> first_not_in;
    for (std::size_t n = 0; n <= 4; ++n) {
      const auto m = bestvina_brady(gr, n);
      if (m != Membership::In && !first_not_in) first_not_in = n;
      if (first_not_in && m == Membership::In) FAIL("In above a level that is not In");
    }
  }
}

TEST_CASE("coordinate hemispheres") {
  const SimpleGraph g({"x", "y", "z"}, {{0, 1}});
  const auto h = coordinate_hemisphere(g, "x");
  CHECK(h.normal == sphere::SpherePoint::from_integers({1, 0, 0}));
  CHECK(h.opposite().normal == sphere::SpherePoint::from_integers({-1, 0, 0}));
  CHECK(h.contains(diagonal_character(g)));
  CHECK_FALSE(h.opposite().contains(diagonal_character(g)));
  CHECK_THROWS_AS(coordinate_hemisphere(g, "w"), Error);
  CHECK_THROWS_AS(coordinate_hemisphere(g, std::size_t{3}), Error);
}
