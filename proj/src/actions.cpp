#include "sigma/actions.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <deque>
#include <random>
#include <set>

namespace sigma::actions {
namespace {

using cat0::TreeDescriptor;
using cat0::TreeEnd;
using cat0::TreePoint;
namespace hnn = cat0::hnn;
namespace tree = cat0::tree;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

const TreeDescriptor* as_tree(const ModelSpace& m) { return std::get_if<TreeDescriptor>(&m); }

template <class T>
const T& expect(const Isometry& f) {
  if (const auto* v = std::get_if<T>(&f)) return *v;
  throw Error(ErrorCode::WrongSpace, "isometry does not act on this space");
}

using Matrix = std::vector<std::vector<double>>;

Matrix identity_matrix(std::size_t k) {
  Matrix q(k, std::vector<double>(k, 0.0));
  for (std::size_t i = 0; i < k; ++i) q[i][i] = 1;
  return q;
}

std::vector<double> mul(const Matrix& q, const std::vector<double>& v) {
  std::vector<double> out(q.size(), 0.0);
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += q[i][j] * v[j];
  return out;
}

Matrix transpose(const Matrix& q) {
  Matrix t(q.size(), std::vector<double>(q.size()));
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) t[j][i] = q[i][j];
  return t;
}

Matrix mul(const Matrix& a, const Matrix& b) {
  Matrix c(a.size(), std::vector<double>(a.size(), 0.0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < a.size(); ++k)
      for (std::size_t j = 0; j < a.size(); ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

bool is_rotation_free(const EuclideanIsometry& f, double tol) {
  for (std::size_t i = 0; i < f.rotation.size(); ++i)
    for (std::size_t j = 0; j < f.rotation.size(); ++j)
      if (std::abs(f.rotation[i][j] - (i == j ? 1.0 : 0.0)) > tol) return false;
  return true;
}

// Applies a map on vertices to a tree point (w, s). The image of the edge
// from w to its parent is an edge; whichever end is the child carries s.
template <class VertexMap>
TreePoint map_tree_point(const TreePoint& p, VertexMap f) {
  std::string w = f(p.address);
  if (p.offset == 0) return {std::move(w), Rational(0)};
  std::string parent = f(p.address.substr(0, p.address.size() - 1));
  if (!w.empty() && parent == w.substr(0, w.size() - 1)) return {std::move(w), p.offset};
  return {std::move(parent), 1 - p.offset};
}

std::string hnn_vertex(const TreeDescriptor& t, const HnnIsometry& f, const std::string& w) {
  return hnn::word_from_vertex(t, hnn::apply(t.parameter(), f, hnn::vertex_from_word(t, w)));
}

TreeEnd cayley_end(const TreeDescriptor& t, const std::string& g, const TreeEnd& e) {
  std::string s = g + e.prefix;
  for (std::size_t k = 0; k < g.size() + 2; ++k) s += e.period;
  s = free_reduce(t, s);
  // At most |g| letters cancel, so the tail is still a run of whole periods.
  while (s.size() >= e.period.size() && s.compare(s.size() - e.period.size(), e.period.size(), e.period) == 0) {
    s.resize(s.size() - e.period.size());
  }
  return tree::canonical_end(t, s, e.period);
}

TreeEnd hnn_end(const TreeDescriptor& t, const HnnIsometry& f, const TreeEnd& e) {
  const auto x = hnn::end_value(t, e);
  if (!x) return hnn::fixed_end();
  return hnn::end_from_value(t, hnn::apply(t.parameter(), f, *x));
}

bool is_identity(const ModelSpace& m, const Isometry& f) {
  return std::visit(overloaded{
                        [&](const EuclideanIsometry& e) {
                          return is_rotation_free(e, 1e-12) &&
                                 std::all_of(e.translation.begin(), e.translation.end(),
                                             [](double v) { return std::abs(v) <= 1e-12; });
                        },
                        [](const MobiusIsometry& g) {
                          const double s = g.a < 0 ? -1.0 : 1.0;
                          return std::abs(s * g.a - 1) <= 1e-12 && std::abs(s * g.d - 1) <= 1e-12 &&
                                 std::abs(g.b) <= 1e-12 && std::abs(g.c) <= 1e-12;
                        },
                        [](const CayleyIsometry& g) { return g.word.empty(); },
                        [](const HnnIsometry& g) { return g.power == 0 && g.shift == 0; },
                    },
                    f);
  (void)m;
}

// G = u c u^-1 with c cyclically reduced.
std::pair<std::string, std::string> cyclic_core(const TreeDescriptor& t, const std::string& g) {
  std::size_t i = 0;
  std::size_t j = g.size();
  while (j - i >= 2 && g[i] == t.inverse(g[j - 1])) {
    ++i;
    --j;
  }
  return {g.substr(0, i), g.substr(i, j - i)};
}

}  // namespace

std::string free_reduce(const TreeDescriptor& t, const std::string& word) {
  std::string out;
  for (char c : word) {
    if (!out.empty() && out.back() == t.inverse(c))
      out.pop_back();
    else
      out += c;
  }
  return out;
}

Isometry identity(const ModelSpace& m) {
  return std::visit(overloaded{
                        [](const cat0::Euclidean& e) -> Isometry {
                          return EuclideanIsometry{identity_matrix(e.dim), std::vector<double>(e.dim, 0.0)};
                        },
                        [](const cat0::HyperbolicPlane&) -> Isometry { return MobiusIsometry{}; },
                        [](const TreeDescriptor& t) -> Isometry {
                          if (t.kind() == TreeDescriptor::Kind::Hnn) return HnnIsometry{0, Rational(0)};
                          return CayleyIsometry{""};
                        },
                    },
                    m);
}

Isometry compose(const ModelSpace& m, const Isometry& f, const Isometry& g) {
  return std::visit(
      overloaded{
          [&](const EuclideanIsometry& a) -> Isometry {
            const auto& b = expect<EuclideanIsometry>(g);
            std::vector<double> v = mul(a.rotation, b.translation);
            for (std::size_t i = 0; i < v.size(); ++i) v[i] += a.translation[i];
            return EuclideanIsometry{mul(a.rotation, b.rotation), v};
          },
          [&](const MobiusIsometry& a) -> Isometry {
            const auto& b = expect<MobiusIsometry>(g);
            return MobiusIsometry{a.a * b.a + a.b * b.c, a.a * b.b + a.b * b.d, a.c * b.a + a.d * b.c,
                                  a.c * b.b + a.d * b.d};
          },
          [&](const CayleyIsometry& a) -> Isometry {
            return CayleyIsometry{free_reduce(std::get<TreeDescriptor>(m), a.word + expect<CayleyIsometry>(g).word)};
          },
          [&](const HnnIsometry& a) -> Isometry {
            return hnn::compose(std::get<TreeDescriptor>(m).parameter(), a, expect<HnnIsometry>(g));
          },
      },
      f);
}

Isometry inverse(const ModelSpace& m, const Isometry& f) {
  return std::visit(overloaded{
                        [](const EuclideanIsometry& a) -> Isometry {
                          Matrix qt = transpose(a.rotation);
                          std::vector<double> v = mul(qt, a.translation);
                          for (double& x : v) x = -x;
                          return EuclideanIsometry{qt, v};
                        },
                        [](const MobiusIsometry& a) -> Isometry { return MobiusIsometry{a.d, -a.b, -a.c, a.a}; },
                        [&](const CayleyIsometry& a) -> Isometry {
                          const auto& t = std::get<TreeDescriptor>(m);
                          std::string w(a.word.rbegin(), a.word.rend());
                          for (char& c : w) c = t.inverse(c);
                          return CayleyIsometry{w};
                        },
                        [&](const HnnIsometry& a) -> Isometry {
                          return hnn::inverse(std::get<TreeDescriptor>(m).parameter(), a);
                        },
                    },
                    f);
}

void validate(const ModelSpace& m, const Isometry& f) {
  std::visit(
      overloaded{
          [&](const EuclideanIsometry& a) {
            const auto* e = std::get_if<cat0::Euclidean>(&m);
            if (!e) throw Error(ErrorCode::WrongSpace, "Euclidean isometry on a non-Euclidean space");
            if (a.rotation.size() != e->dim || a.translation.size() != e->dim)
              throw Error(ErrorCode::DimensionMismatch, "isometry dimension differs from the space");
            for (const auto& row : a.rotation)
              if (row.size() != e->dim) throw Error(ErrorCode::DimensionMismatch, "rotation matrix is not square");
            const Matrix p = mul(a.rotation, transpose(a.rotation));
            for (std::size_t i = 0; i < e->dim; ++i)
              for (std::size_t j = 0; j < e->dim; ++j)
                if (std::abs(p[i][j] - (i == j ? 1.0 : 0.0)) > 1e-9)
                  throw Error(ErrorCode::InvalidInput, "rotation part is not orthogonal");
          },
          [&](const MobiusIsometry& a) {
            if (!std::holds_alternative<cat0::HyperbolicPlane>(m))
              throw Error(ErrorCode::WrongSpace, "Mobius map on a space other than H^2");
            if (std::abs(a.a * a.d - a.b * a.c - 1) > 1e-12)
              throw Error(ErrorCode::InvalidInput, "Mobius matrix must have determinant 1");
          },
          [&](const CayleyIsometry& a) {
            const auto* t = as_tree(m);
            if (!t || t->kind() == TreeDescriptor::Kind::Hnn)
              throw Error(ErrorCode::WrongSpace, "word isometries need a Cayley tree");
            if (t->kind() == TreeDescriptor::Kind::Regular && !a.word.empty())
              throw Error(ErrorCode::WrongSpace, "plain regular trees carry no deck transformations");
            if (!t->is_reduced(a.word)) throw Error(ErrorCode::InvalidInput, "isometry word '" + a.word + "' is not reduced");
          },
          [&](const HnnIsometry& a) {
            const auto* t = as_tree(m);
            if (!t || t->kind() != TreeDescriptor::Kind::Hnn)
              throw Error(ErrorCode::WrongSpace, "affine isometries need an HNN tree");
            if (!hnn::in_localization(t->parameter(), a.shift))
              throw Error(ErrorCode::InvalidInput, "shift must lie in Z[1/n]");
          },
      },
      f);
}

Point apply(const ModelSpace& m, const Isometry& f, const Point& p) {
  cat0::validate(m, p);
  return std::visit(
      overloaded{
          [&](const EuclideanIsometry& a) -> Point {
            std::vector<double> x = mul(a.rotation, std::get<cat0::EuclideanPoint>(p).x);
            for (std::size_t i = 0; i < x.size(); ++i) x[i] += a.translation[i];
            return cat0::EuclideanPoint{x};
          },
          [&](const MobiusIsometry& a) -> Point {
            const auto z = std::get<cat0::HyperbolicPoint>(p).z();
            const auto w = (a.a * z + a.b) / (a.c * z + a.d);
            return cat0::HyperbolicPoint{w.real(), w.imag()};
          },
          [&](const CayleyIsometry& a) -> Point {
            const auto& t = std::get<TreeDescriptor>(m);
            return map_tree_point(std::get<TreePoint>(p), [&](const std::string& w) { return free_reduce(t, a.word + w); });
          },
          [&](const HnnIsometry& a) -> Point {
            const auto& t = std::get<TreeDescriptor>(m);
            return map_tree_point(std::get<TreePoint>(p), [&](const std::string& w) { return hnn_vertex(t, a, w); });
          },
      },
      f);
}

BoundaryPoint apply(const ModelSpace& m, const Isometry& f, const BoundaryPoint& e) {
  cat0::validate(m, e);
  return std::visit(overloaded{
                        [&](const EuclideanIsometry& a) -> BoundaryPoint {
                          return cat0::make_direction(mul(a.rotation, std::get<cat0::EuclideanDirection>(e).u));
                        },
                        [&](const MobiusIsometry& a) -> BoundaryPoint {
                          const auto& h = std::get<cat0::HyperbolicBoundary>(e);
                          if (h.at_infinity) {
                            if (a.c == 0) return cat0::HyperbolicBoundary::infinity();
                            return cat0::HyperbolicBoundary::real(a.a / a.c);
                          }
                          const double den = a.c * h.x + a.d;
                          if (std::abs(den) <= 1e-15 * (std::abs(a.c * h.x) + std::abs(a.d)))
                            return cat0::HyperbolicBoundary::infinity();
                          return cat0::HyperbolicBoundary::real((a.a * h.x + a.b) / den);
                        },
                        [&](const CayleyIsometry& a) -> BoundaryPoint {
                          return cayley_end(std::get<TreeDescriptor>(m), a.word, std::get<TreeEnd>(e));
                        },
                        [&](const HnnIsometry& a) -> BoundaryPoint {
                          return hnn_end(std::get<TreeDescriptor>(m), a, std::get<TreeEnd>(e));
                        },
                    },
                    f);
}

GroupAction::GroupAction(ModelSpace space, std::map<char, Isometry> generators)
    : space_(std::move(space)), generators_(std::move(generators)) {
  for (const auto& [name, f] : generators_) {
    if (!std::islower(static_cast<unsigned char>(name)))
      throw Error(ErrorCode::InvalidInput, std::string("generator names are lowercase letters, got '") + name + "'");
    validate(space_, f);
  }
  const double defect = isometry_defect(32, 1);
  if (defect > 1e-9) throw Error(ErrorCode::InvalidInput, "a generator fails to preserve distances");
}

Isometry GroupAction::evaluate(const std::string& word) const {
  Isometry out = identity(space_);
  for (char c : word) {
    const char name = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    const auto it = generators_.find(name);
    if (it == generators_.end()) throw Error(ErrorCode::UnknownGenerator, std::string("generator '") + c + "'");
    out = compose(space_, out, name == c ? it->second : inverse(space_, it->second));
  }
  return out;
}

namespace {

Point random_point(const ModelSpace& m, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  return std::visit(overloaded{
                        [&](const cat0::Euclidean& e) -> Point {
                          std::vector<double> x(e.dim);
                          for (double& c : x) c = u(rng);
                          return cat0::EuclideanPoint{x};
                        },
                        [&](const cat0::HyperbolicPlane&) -> Point {
                          const double x = u(rng);
                          return cat0::HyperbolicPoint{x, std::exp(u(rng) / 1.5)};
                        },
                        [&](const TreeDescriptor& t) -> Point {
                          std::string w;
                          const std::size_t len = rng() % 5;
                          const auto alphabet = t.alphabet();
                          while (w.size() < len) {
                            const char c = alphabet[rng() % alphabet.size()];
                            if (w.empty() || t.may_follow(w.back(), c)) w += c;
                          }
                          Rational s = w.empty() ? Rational(0) : Rational(static_cast<long long>(rng() % 4), 4);
                          return TreePoint{w, s};
                        },
                    },
                    m);
}

}  // namespace

double GroupAction::isometry_defect(std::size_t pairs, unsigned long long seed) const {
  std::mt19937_64 rng(seed);
  double worst = 0;
  for (const auto& [name, f] : generators_) {
    (void)name;
    for (std::size_t i = 0; i < pairs; ++i) {
      const Point a = random_point(space_, rng);
      const Point b = random_point(space_, rng);
      const double d = cat0::distance(space_, a, b);
      const double gd = cat0::distance(space_, apply(space_, f, a), apply(space_, f, b));
      worst = std::max(worst, std::abs(gd - d) / (1.0 + d));
    }
  }
  return worst;
}

std::string inverse_word(const std::string& word) {
  std::string w(word.rbegin(), word.rend());
  for (char& c : w) {
    c = std::islower(static_cast<unsigned char>(c)) ? static_cast<char>(std::toupper(c))
                                                    : static_cast<char>(std::tolower(c));
  }
  return w;
}

Point apply(const GroupAction& rho, const std::string& word, const Point& p) {
  return apply(rho.space(), rho.evaluate(word), p);
}

BoundaryPoint boundary_apply(const GroupAction& rho, const std::string& word, const BoundaryPoint& e) {
  return apply(rho.space(), rho.evaluate(word), e);
}

std::string to_string(IsometryKind k) {
  switch (k) {
    case IsometryKind::Elliptic: return "elliptic";
    case IsometryKind::Parabolic: return "parabolic";
    case IsometryKind::Hyperbolic: return "hyperbolic";
  }
  return "?";
}

namespace {

Classification classify_mobius(MobiusIsometry g) {
  if (g.a + g.d < 0) g = {-g.a, -g.b, -g.c, -g.d};
  Classification out;
  const double tr = g.a + g.d;
  out.identity = is_identity(cat0::HyperbolicPlane{}, g);
  if (out.identity) {
    out.witness = cat0::HyperbolicPoint{0, 1};
    return out;
  }
  if (tr < 2 - 1e-12) {
    // Fixed point: c z^2 + (d - a) z - b = 0, root in the upper half-plane.
    const std::complex<double> disc = std::sqrt(std::complex<double>(tr * tr - 4, 0));
    std::complex<double> z = ((g.a - g.d) + disc) / (2 * g.c);
    if (z.imag() < 0) z = std::conj(z);
    out.witness = cat0::HyperbolicPoint{z.real(), z.imag()};
    return out;
  }
  if (tr <= 2 + 1e-12) {
    out.kind = IsometryKind::Parabolic;
    return out;
  }
  out.kind = IsometryKind::Hyperbolic;
  out.translation_length = 2 * std::acosh(tr / 2);
  using HB = cat0::HyperbolicBoundary;
  if (g.c == 0) {
    const HB finite = HB::real(g.b / (g.d - g.a));
    if (std::abs(g.a) > std::abs(g.d))
      out.axis = {HB::infinity(), finite};
    else
      out.axis = {finite, HB::infinity()};
    return out;
  }
  const double root = std::sqrt(tr * tr - 4);
  const double z1 = ((g.a - g.d) + root) / (2 * g.c);
  const double z2 = ((g.a - g.d) - root) / (2 * g.c);
  // Derivative 1 / (c z + d)^2: attracting where |c z + d| > 1.
  if (std::abs(g.c * z1 + g.d) > 1)
    out.axis = {HB::real(z1), HB::real(z2)};
  else
    out.axis = {HB::real(z2), HB::real(z1)};
  return out;
}

Classification classify_tree(const TreeDescriptor& t, const Isometry& f, std::size_t depth) {
  const ModelSpace m = t;
  Classification out;
  out.identity = is_identity(m, f);
  if (out.identity) {
    out.witness = TreePoint::vertex("");
    return out;
  }
  // Ball of radius `depth` about the root, capped so wide trees stay cheap;
  // the cap shrinks the effective depth to the last complete level.
  constexpr std::size_t kCap = 200000;
  std::vector<std::string> ball{""};
  std::size_t effective = 0;
  std::vector<std::string> frontier{""};
  std::set<std::string> seen{""};
  while (effective < depth) {
    std::vector<std::string> next;
    for (const auto& v : frontier)
      for (auto& w : tree::neighbours(t, v))
        if (seen.insert(w).second) next.push_back(std::move(w));
    if (ball.size() + next.size() > kCap) break;
    ball.insert(ball.end(), next.begin(), next.end());
    frontier = std::move(next);
    ++effective;
  }
  std::set<std::string> boundary(frontier.begin(), frontier.end());
  if (effective == 0) boundary.clear();

  std::optional<Rational> best;
  std::vector<std::pair<TreePoint, bool>> minimizers;  // point, on the search boundary
  auto consider = [&](const TreePoint& p, bool on_boundary) {
    const Rational d = tree::distance(p, std::get<TreePoint>(apply(m, f, Point{p})));
    if (!best || d < *best) {
      best = d;
      minimizers.clear();
    }
    if (d == *best) minimizers.emplace_back(p, on_boundary);
  };
  for (const auto& v : ball) {
    consider(TreePoint::vertex(v), boundary.count(v) > 0);
    if (!v.empty()) consider(TreePoint{v, Rational(1, 2)}, boundary.count(v) > 0);
  }
  const bool interior = std::any_of(minimizers.begin(), minimizers.end(), [](const auto& x) { return !x.second; });
  if (*best > 0 && !interior) {
    throw Error(ErrorCode::DepthExhausted,
                "minimal displacement attained only on the boundary of the depth-" + std::to_string(effective) + " ball");
  }
  const TreePoint witness = std::find_if(minimizers.begin(), minimizers.end(), [](const auto& x) { return !x.second; })->first;
  out.witness = witness;
  out.exact_translation_length = *best;
  out.translation_length = to_double(*best);
  if (*best == 0) return out;
  out.kind = IsometryKind::Hyperbolic;
  if (const auto* c = std::get_if<CayleyIsometry>(&f)) {
    const auto [u, core] = cyclic_core(t, c->word);
    const std::string back = inverse_word(core);
    out.axis = std::pair<BoundaryPoint, BoundaryPoint>{tree::canonical_end(t, u, core), tree::canonical_end(t, u, back)};
  } else {
    const auto& h = std::get<HnnIsometry>(f);
    const int n = t.parameter();
    const TreeEnd finite = hnn::end_from_value(t, h.shift / (1 - hnn::power(n, h.power)));
    if (h.power > 0)
      out.axis = std::pair<BoundaryPoint, BoundaryPoint>{finite, hnn::fixed_end()};
    else
      out.axis = std::pair<BoundaryPoint, BoundaryPoint>{hnn::fixed_end(), finite};
  }
  return out;
}

}  // namespace

Classification classify_isometry(const GroupAction& rho, const std::string& word, std::size_t depth) {
  const Isometry f = rho.evaluate(word);
  const ModelSpace& m = rho.space();
  if (const auto* t = as_tree(m)) return classify_tree(*t, f, depth);
  if (const auto* g = std::get_if<MobiusIsometry>(&f)) return classify_mobius(*g);
  const auto& e = std::get<EuclideanIsometry>(f);
  if (!is_rotation_free(e, 1e-12))
    throw Error(ErrorCode::WrongSpace, "Euclidean classification is limited to pure translations");
  Classification out;
  double len = 0;
  for (double v : e.translation) len += v * v;
  len = std::sqrt(len);
  out.translation_length = len;
  if (len <= 1e-12) {
    out.identity = true;
    out.witness = cat0::EuclideanPoint{std::vector<double>(e.translation.size(), 0.0)};
    return out;
  }
  out.kind = IsometryKind::Hyperbolic;
  std::vector<double> back = e.translation;
  for (double& v : back) v = -v;
  out.axis = std::pair<BoundaryPoint, BoundaryPoint>{cat0::make_direction(e.translation), cat0::make_direction(back)};
  return out;
}

std::string to_string(FixedEndReport::Kind k) {
  switch (k) {
    case FixedEndReport::Kind::Empty: return "Empty";
    case FixedEndReport::Kind::Singleton: return "Singleton";
    case FixedEndReport::Kind::Pair: return "Pair";
    case FixedEndReport::Kind::All: return "All";
    case FixedEndReport::Kind::Unknown: return "Unknown";
  }
  return "?";
}

FixedEndReport fixed_ends_tree(const GroupAction& rho, std::size_t depth) {
  const auto* t = as_tree(rho.space());
  if (!t) throw Error(ErrorCode::WrongSpace, "fixed_ends_tree needs a tree");
  FixedEndReport report;
  report.depth = depth;
  std::optional<std::vector<TreeEnd>> common;
  for (const auto& [name, f] : rho.generators()) {
    if (is_identity(rho.space(), f)) continue;
    std::vector<TreeEnd> fixed;
    if (const auto* h = std::get_if<HnnIsometry>(&f); h && h->power == 0) {
      fixed.push_back(hnn::fixed_end());  // x -> x + c fixes no n-adic number
    } else {
      Classification c;
      try {
        c = classify_isometry(rho, std::string(1, name), depth);
      } catch (const Error& err) {
        if (err.code() != ErrorCode::DepthExhausted) throw;
        report.kind = FixedEndReport::Kind::Unknown;
        return report;
      }
      if (!c.axis) {
        report.kind = FixedEndReport::Kind::Unknown;
        return report;
      }
      fixed.push_back(std::get<TreeEnd>(c.axis->first));
      fixed.push_back(std::get<TreeEnd>(c.axis->second));
    }
    if (!common) {
      common = fixed;
    } else {
      std::vector<TreeEnd> keep;
      for (const auto& e : *common)
        if (std::find(fixed.begin(), fixed.end(), e) != fixed.end()) keep.push_back(e);
      common = std::move(keep);
    }
  }
  if (!common) {
    report.kind = FixedEndReport::Kind::All;
    return report;
  }
  report.ends = *common;
  switch (common->size()) {
    case 0: report.kind = FixedEndReport::Kind::Empty; break;
    case 1: report.kind = FixedEndReport::Kind::Singleton; break;
    default: report.kind = FixedEndReport::Kind::Pair; break;
  }
  return report;
}

namespace {

void require_fixed(const GroupAction& rho, const BoundaryPoint& e) {
  for (const auto& [name, f] : rho.generators()) {
    if (!cat0::same_boundary_point(rho.space(), apply(rho.space(), f, e), e))
      throw Error(ErrorCode::EndNotFixed, std::string("generator '") + name + "' moves " + cat0::to_string(e));
  }
}

}  // namespace

double psi_cocycle(const GroupAction& rho, const BoundaryPoint& e, const std::string& word, const Point& a) {
  const auto ray = cat0::ray_from(rho.space(), a, e);
  return cat0::busemann(rho.space(), ray, apply(rho, word, a));
}

Rational psi_cocycle_exact(const GroupAction& rho, const BoundaryPoint& e, const std::string& word, const Point& a) {
  const auto ray = cat0::ray_from(rho.space(), a, e);
  return cat0::busemann_exact(rho.space(), ray, apply(rho, word, a));
}

double character_at_end(const GroupAction& rho, const BoundaryPoint& e, const Point& a, const std::string& word) {
  require_fixed(rho, e);
  return psi_cocycle(rho, e, word, a);
}

Rational character_at_end_exact(const GroupAction& rho, const BoundaryPoint& e, const Point& a,
                                const std::string& word) {
  require_fixed(rho, e);
  return psi_cocycle_exact(rho, e, word, a);
}

}  // namespace sigma::actions
