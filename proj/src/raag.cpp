#include "sigma/raag.hpp"

#include "sigma/error.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace sigma::raag {

// ---------------------------------------------------------------- graphs

SimpleGraph::SimpleGraph(std::vector<std::string> vertices, std::vector<std::pair<std::size_t, std::size_t>> edges)
    : vertices_(std::move(vertices)), adj_(vertices_.size(), std::vector<bool>(vertices_.size(), false)) {
  std::set<std::string> names(vertices_.begin(), vertices_.end());
  if (names.size() != vertices_.size()) throw Error(ErrorCode::InvalidInput, "repeated vertex name");
  for (auto [i, j] : edges) {
    if (i >= size() || j >= size()) throw Error(ErrorCode::InvalidInput, "edge endpoint out of range");
    if (i == j) throw Error(ErrorCode::InvalidInput, "loop at vertex '" + vertices_[i] + "'");
    if (adj_[i][j]) throw Error(ErrorCode::InvalidInput, "repeated edge " + vertices_[i] + "-" + vertices_[j]);
    adj_[i][j] = adj_[j][i] = true;
    edges_.emplace_back(std::min(i, j), std::max(i, j));
  }
  std::sort(edges_.begin(), edges_.end());
}

namespace {
std::vector<std::string> numbered(std::size_t m) {
  std::vector<std::string> v;
  for (std::size_t i = 0; i < m; ++i) v.push_back(std::to_string(i));
  return v;
}
}  // namespace

SimpleGraph SimpleGraph::complete(std::size_t m) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) e.emplace_back(i, j);
  return SimpleGraph(numbered(m), e);
}

SimpleGraph SimpleGraph::cycle(std::size_t m) {
  if (m < 3) throw Error(ErrorCode::InvalidInput, "a cycle needs at least 3 vertices");
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i < m; ++i) e.emplace_back(i, (i + 1) % m);
  return SimpleGraph(numbered(m), e);
}

// K_{2,2,2}: every vertex except its antipode i ^ 1.
SimpleGraph SimpleGraph::octahedron() {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i + 1; j < 6; ++j)
      if ((i ^ 1) != j) e.emplace_back(i, j);
  return SimpleGraph(numbered(6), e);
}

std::size_t SimpleGraph::index_of(const std::string& name) const {
  const auto it = std::find(vertices_.begin(), vertices_.end(), name);
  if (it == vertices_.end()) throw Error(ErrorCode::UnknownVertex, "no vertex '" + name + "'");
  return static_cast<std::size_t>(it - vertices_.begin());
}

SimpleGraph parse_edge_list(const std::string& text) {
  std::vector<std::string> names;
  std::map<std::string, std::size_t> index;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  auto id = [&](const std::string& s) {
    const auto [it, fresh] = index.emplace(s, names.size());
    if (fresh) names.push_back(s);
    return it->second;
  };
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = line.substr(0, line.find('#'));
    std::istringstream words(line);
    std::vector<std::string> w;
    for (std::string s; words >> s;) w.push_back(s);
    if (w.empty()) continue;
    if (w.size() > 2) throw Error(ErrorCode::InvalidInput, "line " + std::to_string(lineno) + ": expected 'u v'");
    const std::size_t a = id(w[0]);
    if (w.size() == 2) edges.emplace_back(a, id(w[1]));
  }
  return SimpleGraph(names, edges);
}

// ---------------------------------------------------------------- complexes

SimplicialComplex::SimplicialComplex(std::size_t vertex_count, const std::vector<Simplex>& simplices)
    : vertex_count_(vertex_count) {
  std::vector<std::set<Simplex>> faces;
  auto add = [&](const Simplex& s) {
    if (faces.size() < s.size()) faces.resize(s.size());
    faces[s.size() - 1].insert(s);
  };
  for (std::size_t v = 0; v < vertex_count; ++v) add({v});
  for (Simplex s : simplices) {
    if (s.empty()) throw Error(ErrorCode::InvalidInput, "empty simplex");
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw Error(ErrorCode::InvalidInput, "repeated vertex in a simplex");
    if (s.back() >= vertex_count) throw Error(ErrorCode::InvalidInput, "simplex vertex out of range");
    if (s.size() > 24) throw Error(ErrorCode::InvalidInput, "simplex too large to close under faces");
    // every nonempty subset
    const std::size_t n = s.size();
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      Simplex f;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (1u << i)) f.push_back(s[i]);
      add(f);
    }
  }
  for (const auto& level : faces) by_dim_.emplace_back(level.begin(), level.end());
}

const std::vector<Simplex>& SimplicialComplex::simplices(std::size_t d) const {
  static const std::vector<Simplex> none;
  return d < by_dim_.size() ? by_dim_[d] : none;
}

std::size_t SimplicialComplex::total() const {
  std::size_t n = 0;
  for (const auto& level : by_dim_) n += level.size();
  return n;
}

namespace {

void bron_kerbosch(const SimpleGraph& g, Simplex& r, std::vector<std::size_t> p, std::vector<std::size_t> x,
                   std::vector<Simplex>& out) {
  if (p.empty() && x.empty()) {
    if (!r.empty()) out.push_back(r);
    return;
  }
  // pivot: the vertex of P u X with the most neighbours in P
  std::size_t pivot = 0, best = 0;
  bool have = false;
  for (const auto* set : {&p, &x})
    for (std::size_t u : *set) {
      const std::size_t c = static_cast<std::size_t>(std::count_if(p.begin(), p.end(), [&](std::size_t w) { return g.adjacent(u, w); }));
      if (!have || c > best) pivot = u, best = c, have = true;
    }
  const std::vector<std::size_t> candidates = [&] {
    std::vector<std::size_t> c;
    for (std::size_t v : p)
      if (!g.adjacent(pivot, v)) c.push_back(v);
    return c;
  }();
  for (std::size_t v : candidates) {
    std::vector<std::size_t> p2, x2;
    for (std::size_t w : p)
      if (g.adjacent(v, w)) p2.push_back(w);
    for (std::size_t w : x)
      if (g.adjacent(v, w)) x2.push_back(w);
    r.push_back(v);
    bron_kerbosch(g, r, p2, x2, out);
    r.pop_back();
    p.erase(std::find(p.begin(), p.end(), v));
    x.push_back(v);
  }
}

}  // namespace

SimplicialComplex flag_complex(const SimpleGraph& g) {
  std::vector<Simplex> maximal;
  Simplex r;
  std::vector<std::size_t> all(g.size());
  std::iota(all.begin(), all.end(), 0);
  bron_kerbosch(g, r, all, {}, maximal);
  return SimplicialComplex(g.size(), maximal);
}

SimplicialComplex projective_plane_6() {
  return SimplicialComplex(6, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1},
                               {1, 2, 4}, {2, 3, 5}, {3, 4, 1}, {4, 5, 2}, {5, 1, 3}});
}

// ---------------------------------------------------------------- Smith normal form

namespace {

struct Overflow {};

// a - q * b, checked on machine integers.
inline long long mul_sub(long long a, long long q, long long b) {
  long long p, r;
  if (__builtin_mul_overflow(q, b, &p) || __builtin_sub_overflow(a, p, &r)) throw Overflow{};
  return r;
}
inline Integer mul_sub(const Integer& a, const Integer& q, const Integer& b) { return a - q * b; }

template <class T>
T magnitude(const T& x) {
  return x < 0 ? T(-x) : x;
}

// Diagonalizes by pivoting on the entry of least magnitude; returns the
// nonzero diagonal (not yet divisibility ordered).
template <class T>
std::vector<T> diagonalize(std::vector<std::vector<T>> a) {
  std::vector<T> diag;
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  for (std::size_t t = 0; t < rows && t < cols; ++t) {
    auto smallest = [&](bool whole) {
      std::optional<std::pair<std::size_t, std::size_t>> at;
      T best{};
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (!whole && i != t && j != t) continue;
          if (a[i][j] == 0) continue;
          const T m = magnitude(a[i][j]);
          if (!at || m < best) at = {i, j}, best = m;
          if (best == 1 && !whole) return at;
        }
      return at;
    };
    auto move = [&](std::pair<std::size_t, std::size_t> at) {
      std::swap(a[t], a[at.first]);
      if (at.second != t)
        for (auto& row : a) std::swap(row[t], row[at.second]);
    };
    const auto first = smallest(true);
    if (!first) break;
    move(*first);
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        const T q = a[i][t] / a[t][t];
        if (q != 0)
          for (std::size_t j = t; j < cols; ++j)
            if (a[t][j] != 0) a[i][j] = mul_sub(a[i][j], q, a[t][j]);
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        const T q = a[t][j] / a[t][t];
        if (q != 0)
          for (std::size_t i = t; i < rows; ++i)
            if (a[i][t] != 0) a[i][j] = mul_sub(a[i][j], q, a[i][t]);
        if (a[t][j] != 0) clean = false;
      }
      if (clean) break;
      move(*smallest(false));
    }
    diag.push_back(magnitude(a[t][t]));
  }
  return diag;
}

std::vector<Integer> invariant_factors(std::vector<Integer> d) {
  // (d_i, d_j) -> (gcd, lcm) until each divides the next
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      const Integer g = gcd(d[i], d[j]);
      if (g == d[i]) continue;
      const Integer l = d[i] / g * d[j];
      d[i] = g;
      d[j] = l;
    }
  return d;
}

}  // namespace

std::vector<Integer> smith_invariants(std::vector<std::vector<Integer>> m) {
  std::vector<Integer> diag;
  try {
    std::vector<std::vector<long long>> small;
    bool fits = true;
    for (const auto& row : m) {
      small.emplace_back();
      for (const auto& x : row) {
        if (x > Integer(std::numeric_limits<long long>::max()) || x < Integer(std::numeric_limits<long long>::min() + 1)) fits = false;
        small.back().push_back(fits ? static_cast<long long>(x) : 0);
      }
    }
    if (!fits) throw Overflow{};
    for (long long x : diagonalize(std::move(small))) diag.emplace_back(x);
  } catch (const Overflow&) {
    diag = diagonalize(std::move(m));
  }
  return invariant_factors(std::move(diag));
}

// ---------------------------------------------------------------- homology

namespace {

std::vector<std::vector<Integer>> boundary_matrix(const SimplicialComplex& k, std::size_t d) {
  const auto& lower = k.simplices(d - 1);
  const auto& upper = k.simplices(d);
  std::map<Simplex, std::size_t> index;
  for (std::size_t i = 0; i < lower.size(); ++i) index.emplace(lower[i], i);
  std::vector<std::vector<Integer>> m(lower.size(), std::vector<Integer>(upper.size(), Integer(0)));
  for (std::size_t j = 0; j < upper.size(); ++j)
    for (std::size_t i = 0; i < upper[j].size(); ++i) {
      Simplex face = upper[j];
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
      m[index.at(face)][j] = i % 2 ? -1 : 1;
    }
  return m;
}

}  // namespace

HomologyProfile homology(const SimplicialComplex& k, std::size_t max_degree) {
  // invariants of the boundary maps d_1 .. d_{max+1}
  std::vector<std::vector<Integer>> inv(max_degree + 2);
  for (std::size_t d = 1; d <= max_degree + 1; ++d)
    if (k.count(d) > 0) inv[d] = smith_invariants(boundary_matrix(k, d));
  HomologyProfile h;
  for (std::size_t d = 0; d <= max_degree; ++d) {
    DegreeHomology x;
    x.degree = d;
    const std::size_t n = k.count(d);
    const std::size_t rank_out = d == 0 ? 0 : inv[d].size();
    const std::size_t rank_in = inv[d + 1].size();
    x.betti = n - rank_out - rank_in;
    // the augmentation C_0 -> Z has rank 1 on a nonempty complex
    x.reduced_betti = d == 0 && n > 0 ? x.betti - 1 : x.betti;
    for (const auto& f : inv[d + 1])
      if (f > 1) x.torsion.push_back(f);
    h.degrees.push_back(std::move(x));
  }
  return h;
}

// ---------------------------------------------------------------- pi_1

namespace {

using Word = std::vector<int>;  // +-(generator + 1)

void free_reduce(Word& w) {
  Word out;
  for (int x : w) {
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  // cyclic reduction
  std::size_t lo = 0, hi = out.size();
  while (hi - lo >= 2 && out[lo] == -out[hi - 1]) ++lo, --hi;
  w.assign(out.begin() + static_cast<std::ptrdiff_t>(lo), out.begin() + static_cast<std::ptrdiff_t>(hi));
}

Word inverse(const Word& w) {
  Word r(w.rbegin(), w.rend());
  for (int& x : r) x = -x;
  return r;
}

}  // namespace

TietzeCertificate simplify_fundamental_group(const SimplicialComplex& k, std::size_t budget) {
  const std::size_t nv = k.vertex_count();
  // spanning forest by breadth-first search
  std::vector<std::vector<std::size_t>> nbr(nv);
  for (const auto& e : k.simplices(1)) {
    nbr[e[0]].push_back(e[1]);
    nbr[e[1]].push_back(e[0]);
  }
  std::set<std::pair<std::size_t, std::size_t>> tree;
  std::vector<bool> seen(nv, false);
  for (std::size_t root = 0; root < nv; ++root) {
    if (seen[root]) continue;
    seen[root] = true;
    std::vector<std::size_t> queue{root};
    for (std::size_t q = 0; q < queue.size(); ++q)
      for (std::size_t w : nbr[queue[q]])
        if (!seen[w]) {
          seen[w] = true;
          tree.emplace(std::min(queue[q], w), std::max(queue[q], w));
          queue.push_back(w);
        }
  }
  std::map<std::pair<std::size_t, std::size_t>, int> gen;
  std::vector<std::string> names;
  for (const auto& e : k.simplices(1)) {
    const std::pair<std::size_t, std::size_t> p{e[0], e[1]};
    if (tree.count(p)) continue;
    gen[p] = static_cast<int>(names.size()) + 1;
    names.push_back("e" + std::to_string(e[0]) + "-" + std::to_string(e[1]));
  }
  auto letter = [&](std::size_t a, std::size_t b) {
    const auto it = gen.find({a, b});
    return it == gen.end() ? 0 : it->second;
  };
  std::vector<Word> rels;
  for (const auto& t : k.simplices(2)) {
    Word w;
    for (int x : {letter(t[0], t[1]), letter(t[1], t[2]), -letter(t[0], t[2])})
      if (x != 0) w.push_back(x);
    rels.push_back(w);
  }

  TietzeCertificate cert;
  cert.generators = names.size();
  cert.relators = rels.size();
  std::vector<bool> alive(names.size(), true);
  std::size_t remaining = names.size();
  auto spell = [&](const Word& w) {
    std::string s;
    for (int x : w) s += (s.empty() ? "" : " ") + names[static_cast<std::size_t>(std::abs(x)) - 1] + (x < 0 ? "^-1" : "");
    return s.empty() ? std::string("1") : s;
  };

  for (;;) {
    for (auto& r : rels) free_reduce(r);
    rels.erase(std::remove_if(rels.begin(), rels.end(), [](const Word& w) { return w.empty(); }), rels.end());
    if (remaining == 0 || cert.steps >= budget) break;
    // a generator occurring exactly once in some relator, shortest relator first
    std::optional<std::pair<std::size_t, std::size_t>> pick;  // relator, position
    for (std::size_t r = 0; r < rels.size(); ++r) {
      if (pick && rels[r].size() >= rels[pick->first].size()) continue;
      std::map<int, std::size_t> count;
      for (int x : rels[r]) ++count[std::abs(x)];
      for (std::size_t i = 0; i < rels[r].size(); ++i)
        if (count[std::abs(rels[r][i])] == 1) {
          pick = {r, i};
          break;
        }
    }
    if (!pick) break;
    Word r = rels[pick->first];
    std::rotate(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(pick->second), r.end());
    const int g = std::abs(r[0]);
    // g^e w = 1 gives g = w^-1 for e = 1 and g = w for e = -1
    const Word rest(r.begin() + 1, r.end());
    const Word value = r[0] > 0 ? inverse(rest) : rest;
    const Word value_inv = inverse(value);
    rels.erase(rels.begin() + static_cast<std::ptrdiff_t>(pick->first));
    for (auto& w : rels) {
      Word out;
      for (int x : w) {
        if (std::abs(x) != g) {
          out.push_back(x);
          continue;
        }
        const Word& v = x > 0 ? value : value_inv;
        out.insert(out.end(), v.begin(), v.end());
        ++cert.steps;
      }
      w = std::move(out);
    }
    ++cert.steps;
    alive[static_cast<std::size_t>(g) - 1] = false;
    --remaining;
    cert.log.push_back(names[static_cast<std::size_t>(g) - 1] + " = " + spell(value));
  }
  cert.remaining_generators = remaining;
  cert.trivial = remaining == 0;
  return cert;
}

// ---------------------------------------------------------------- verdicts

std::string to_string(Tri t) {
  switch (t) {
    case Tri::Yes: return "Yes";
    case Tri::No: return "No";
    case Tri::Unknown: return "Unknown";
  }
  return "?";
}

std::string to_string(Membership m) {
  switch (m) {
    case Membership::In: return "In";
    case Membership::Out: return "Out";
    case Membership::Unknown: return "Unknown";
  }
  return "?";
}

ConnectivityVerdict connectivity_verdict(const SimplicialComplex& k, std::size_t n, std::size_t budget) {
  ConnectivityVerdict v;
  v.level = n;
  const std::size_t nv = k.vertex_count();
  std::vector<std::size_t> parent(nv);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  v.components = nv;
  for (const auto& e : k.simplices(1)) {
    const std::size_t a = find(e[0]), b = find(e[1]);
    if (a != b) parent[a] = b, --v.components;
  }
  v.connected = v.components == 1;
  if (n == 0) {
    v.overall = nv > 0 ? Tri::Yes : Tri::No;
    return v;
  }
  if (n == 1) {
    v.overall = v.connected ? Tri::Yes : Tri::No;
    return v;
  }
  const HomologyProfile h = homology(k, n - 1);
  for (std::size_t i = 1; i <= n - 1; ++i)
    if (!h.reduced_vanishes(i)) {
      v.homology_vanishing = false;
      v.first_nonvanishing = i;
      break;
    }
  if (!v.connected) {
    v.simply_connected = Tri::No;
  } else if (!h.reduced_vanishes(1)) {
    v.simply_connected = Tri::No;
  } else {
    v.certificate = simplify_fundamental_group(k, budget);
    v.simply_connected = v.certificate->trivial ? Tri::Yes : Tri::Unknown;
  }
  if (!v.connected || !v.homology_vanishing || *v.simply_connected == Tri::No)
    v.overall = Tri::No;
  else
    v.overall = *v.simply_connected;
  return v;
}

BestvinaBradyReport bestvina_brady_report(const SimpleGraph& g, std::size_t n, std::size_t budget) {
  BestvinaBradyReport r;
  r.verdict = connectivity_verdict(flag_complex(g), n, budget);
  r.membership = r.verdict.overall == Tri::Yes  ? Membership::In
                 : r.verdict.overall == Tri::No ? Membership::Out
                                                : Membership::Unknown;
  return r;
}

Membership bestvina_brady(const SimpleGraph& g, std::size_t n) { return bestvina_brady_report(g, n).membership; }

sphere::Character diagonal_character(const SimpleGraph& g) {
  return sphere::Character(RationalVector(g.size(), Rational(1)));
}

sphere::OpenHemisphere coordinate_hemisphere(const SimpleGraph& g, std::size_t v) {
  if (v >= g.size()) throw Error(ErrorCode::UnknownVertex, "vertex index " + std::to_string(v) + " out of range");
  std::vector<long long> e(g.size(), 0);
  e[v] = 1;
  return {sphere::SpherePoint::from_integers(e)};
}

sphere::OpenHemisphere coordinate_hemisphere(const SimpleGraph& g, const std::string& v) {
  return coordinate_hemisphere(g, g.index_of(v));
}

}  // namespace sigma::raag
