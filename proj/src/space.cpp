#include "sigma/space.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

namespace sigma::cat0 {
namespace {

using cplx = std::complex<double>;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

const TreeDescriptor* as_tree(const ModelSpace& m) { return std::get_if<TreeDescriptor>(&m); }

template <class T>
const T& expect(const Point& p, const char* what) {
  if (const auto* v = std::get_if<T>(&p)) return *v;
  throw Error(ErrorCode::WrongSpace, std::string(what) + ": point does not belong to the space");
}

template <class T>
const T& expect(const BoundaryPoint& e, const char* what) {
  if (const auto* v = std::get_if<T>(&e)) return *v;
  throw Error(ErrorCode::WrongSpace, std::string(what) + ": boundary point does not belong to the space");
}

const EuclideanPoint& euclidean_point(const ModelSpace& m, const Point& p, const char* what) {
  const auto& e = expect<EuclideanPoint>(p, what);
  if (e.x.size() != std::get<Euclidean>(m).dim) throw Error(ErrorCode::WrongSpace, std::string(what) + ": dimension");
  return e;
}

double norm(const std::vector<double>& v) {
  double s = 0;
  for (double c : v) s += c * c;
  return std::sqrt(s);
}

// Angle between unit vectors; acos(<u,v>) loses half the digits near 0 and pi.
double unit_angle(const std::vector<double>& u, const std::vector<double>& v) {
  double minus = 0, plus = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    minus += (u[i] - v[i]) * (u[i] - v[i]);
    plus += (u[i] + v[i]) * (u[i] + v[i]);
  }
  return 2 * std::atan2(std::sqrt(minus), std::sqrt(plus));
}

// Upper half-plane helpers. The isometry z -> x + y z sends i to a = x + iy;
// the Cayley map sends the upper half-plane to the unit disk with i -> 0.
cplx to_frame(const HyperbolicPoint& a, cplx z) { return (z - a.x) / a.y; }
cplx cayley(cplx z) { return (z - cplx(0, 1)) / (z + cplx(0, 1)); }

HyperbolicPoint to_point(cplx z) { return {z.real(), z.imag()}; }

double hyperbolic_distance(const HyperbolicPoint& a, const HyperbolicPoint& b) {
  return 2.0 * std::asinh(std::abs(a.z() - b.z()) / (2.0 * std::sqrt(a.y * b.y)));
}

// Point at distance t from a on the ray toward a boundary point. Rays toward
// a real xi are the image of a vertical ray under z -> xi - 1/z, which keeps
// full relative precision for large t.
HyperbolicPoint hyperbolic_ray(const HyperbolicPoint& a, const HyperbolicBoundary& e, double t) {
  if (e.at_infinity) return {a.x, a.y * std::exp(t)};
  const cplx lifted = -1.0 / (a.z() - e.x);
  const cplx moved(lifted.real(), lifted.imag() * std::exp(t));
  return to_point(e.x - 1.0 / moved);
}

// Ideal endpoint of the geodesic from a through b.
HyperbolicBoundary ideal_endpoint(const HyperbolicPoint& a, const HyperbolicPoint& b) {
  const double angle = std::arg(cayley(to_frame(a, b.z())));
  if (angle == 0.0) return HyperbolicBoundary::infinity();
  return HyperbolicBoundary::real(a.x - a.y / std::tan(angle / 2.0));
}

double log_height_toward(const HyperbolicBoundary& e, const HyperbolicPoint& p) {
  if (e.at_infinity) return std::log(p.y);
  const double dx = p.x - e.x;
  return std::log(p.y / (dx * dx + p.y * p.y));
}

Rational exact(double t) { return rational_from_double(t); }

}  // namespace

EuclideanDirection make_direction(std::vector<double> v) {
  const double n = norm(v);
  if (!(n > 0) || !std::isfinite(n)) throw Error(ErrorCode::InvalidInput, "direction must be a nonzero finite vector");
  for (auto& c : v) c /= n;
  return {std::move(v)};
}

HyperbolicPoint make_hyperbolic_point(double x, double y) {
  if (!(y > 0) || !std::isfinite(x) || !std::isfinite(y)) {
    throw Error(ErrorCode::InvalidInput, "upper half-plane points need y > 0");
  }
  return {x, y};
}

void validate(const ModelSpace& m, const Point& p) {
  std::visit(overloaded{
                 [&](const Euclidean& e) {
                   const auto& q = expect<EuclideanPoint>(p, "validate");
                   if (q.x.size() != e.dim) throw Error(ErrorCode::WrongSpace, "point dimension");
                 },
                 [&](const HyperbolicPlane&) {
                   const auto& q = expect<HyperbolicPoint>(p, "validate");
                   make_hyperbolic_point(q.x, q.y);
                 },
                 [&](const TreeDescriptor& t) { tree::validate(t, expect<TreePoint>(p, "validate")); },
             },
             m);
}

void validate(const ModelSpace& m, const BoundaryPoint& e) {
  std::visit(overloaded{
                 [&](const Euclidean& s) {
                   const auto& d = expect<EuclideanDirection>(e, "validate");
                   if (d.u.size() != s.dim) throw Error(ErrorCode::WrongSpace, "direction dimension");
                   if (std::abs(norm(d.u) - 1.0) > 1e-12) throw Error(ErrorCode::InvalidInput, "direction must be a unit vector");
                 },
                 [&](const HyperbolicPlane&) { expect<HyperbolicBoundary>(e, "validate"); },
                 [&](const TreeDescriptor& t) {
                   const auto& end = expect<TreeEnd>(e, "validate");
                   if (tree::canonical_end(t, end.prefix, end.period) != end) {
                     throw Error(ErrorCode::InvalidInput, "tree end is not in canonical form");
                   }
                 },
             },
             m);
}

std::string to_string(const Point& p) {
  return std::visit(overloaded{
                        [](const EuclideanPoint& e) {
                          std::ostringstream os;
                          os << "(";
                          for (std::size_t i = 0; i < e.x.size(); ++i) os << (i ? "," : "") << e.x[i];
                          os << ")";
                          return os.str();
                        },
                        [](const HyperbolicPoint& h) {
                          std::ostringstream os;
                          os << h.x << "+" << h.y << "i";
                          return os.str();
                        },
                        [](const TreePoint& t) { return to_string(t); },
                    },
                    p);
}

std::string to_string(const BoundaryPoint& e) {
  return std::visit(overloaded{
                        [](const EuclideanDirection& d) { return to_string(Point(EuclideanPoint{d.u})); },
                        [](const HyperbolicBoundary& h) {
                          if (h.at_infinity) return std::string("inf");
                          std::ostringstream os;
                          os << h.x;
                          return os.str();
                        },
                        [](const TreeEnd& t) { return to_string(t); },
                    },
                    e);
}

double distance(const ModelSpace& m, const Point& a, const Point& b) {
  return std::visit(overloaded{
                        [&](const Euclidean&) {
                          const auto& p = euclidean_point(m, a, "distance");
                          const auto& q = euclidean_point(m, b, "distance");
                          double s = 0;
                          for (std::size_t i = 0; i < p.x.size(); ++i) s += (p.x[i] - q.x[i]) * (p.x[i] - q.x[i]);
                          return std::sqrt(s);
                        },
                        [&](const HyperbolicPlane&) {
                          return hyperbolic_distance(expect<HyperbolicPoint>(a, "distance"),
                                                     expect<HyperbolicPoint>(b, "distance"));
                        },
                        [&](const TreeDescriptor&) {
                          return to_double(tree::distance(expect<TreePoint>(a, "distance"), expect<TreePoint>(b, "distance")));
                        },
                    },
                    m);
}

Point geodesic_point(const ModelSpace& m, const Point& a, const Point& b, double t) {
  if (const auto* t_desc = as_tree(m)) {
    (void)t_desc;
    return tree::geodesic_point(expect<TreePoint>(a, "geodesic_point"), expect<TreePoint>(b, "geodesic_point"), exact(t));
  }
  const double d = distance(m, a, b);
  const double slack = 1e-12 * std::max(1.0, d);
  if (t < -slack || t > d + slack) throw Error(ErrorCode::ParameterOutOfRange, "geodesic parameter outside [0, d(a,b)]");
  t = std::clamp(t, 0.0, d);
  if (d == 0) return a;
  if (std::holds_alternative<Euclidean>(m)) {
    const auto& p = std::get<EuclideanPoint>(a);
    const auto& q = std::get<EuclideanPoint>(b);
    EuclideanPoint r{p.x};
    for (std::size_t i = 0; i < r.x.size(); ++i) r.x[i] += (q.x[i] - p.x[i]) * (t / d);
    return r;
  }
  const auto& p = std::get<HyperbolicPoint>(a);
  const auto& q = std::get<HyperbolicPoint>(b);
  return hyperbolic_ray(p, ideal_endpoint(p, q), t);
}

GeneralizedRay ray_from(const ModelSpace& m, const Point& a, const BoundaryPoint& e) {
  validate(m, a);
  validate(m, e);
  return GeneralizedRay{a, e, kInfinity, Rational(0)};
}

GeneralizedRay ray_from(const ModelSpace& m, const Point& a, const Point& e) {
  validate(m, a);
  validate(m, e);
  GeneralizedRay ray{a, e, distance(m, a, e), Rational(0)};
  if (as_tree(m)) ray.exact_mu = tree::distance(std::get<TreePoint>(a), std::get<TreePoint>(e));
  return ray;
}

Point ray_point(const ModelSpace& m, const GeneralizedRay& ray, double t) {
  if (t < 0) throw Error(ErrorCode::ParameterOutOfRange, "ray parameter must be >= 0");
  if (ray.degenerate()) {
    if (as_tree(m)) {
      const Rational s = exact(t);
      if (s >= ray.exact_mu) return ray.interior_end();
      return tree::geodesic_point(std::get<TreePoint>(ray.base), std::get<TreePoint>(ray.interior_end()), s);
    }
    if (t >= ray.mu) return ray.interior_end();
    return geodesic_point(m, ray.base, ray.interior_end(), t);
  }
  return std::visit(overloaded{
                        [&](const Euclidean&) -> Point {
                          const auto& p = std::get<EuclideanPoint>(ray.base);
                          const auto& u = std::get<EuclideanDirection>(ray.boundary_end()).u;
                          EuclideanPoint r{p.x};
                          for (std::size_t i = 0; i < r.x.size(); ++i) r.x[i] += t * u[i];
                          return r;
                        },
                        [&](const HyperbolicPlane&) -> Point {
                          const auto& p = std::get<HyperbolicPoint>(ray.base);
                          return hyperbolic_ray(p, std::get<HyperbolicBoundary>(ray.boundary_end()), t);
                        },
                        [&](const TreeDescriptor&) -> Point {
                          return tree::ray_point(std::get<TreePoint>(ray.base), std::get<TreeEnd>(ray.boundary_end()), exact(t));
                        },
                    },
                    m);
}

double busemann(const ModelSpace& m, const GeneralizedRay& ray, const Point& b) {
  validate(m, b);
  if (as_tree(m)) return to_double(busemann_exact(m, ray, b));
  if (ray.degenerate()) return ray.mu - distance(m, b, ray.interior_end());
  if (std::holds_alternative<Euclidean>(m)) {
    const auto& p = std::get<EuclideanPoint>(ray.base).x;
    const auto& q = std::get<EuclideanPoint>(b).x;
    const auto& u = std::get<EuclideanDirection>(ray.boundary_end()).u;
    double s = 0;
    for (std::size_t i = 0; i < p.size(); ++i) s += (q[i] - p[i]) * u[i];
    return s;
  }
  const auto& e = std::get<HyperbolicBoundary>(ray.boundary_end());
  return log_height_toward(e, std::get<HyperbolicPoint>(b)) - log_height_toward(e, std::get<HyperbolicPoint>(ray.base));
}

Rational busemann_exact(const ModelSpace& m, const GeneralizedRay& ray, const Point& b) {
  if (!as_tree(m)) throw Error(ErrorCode::WrongSpace, "exact Busemann values exist on trees only");
  const auto& base = expect<TreePoint>(ray.base, "busemann");
  const auto& q = expect<TreePoint>(b, "busemann");
  if (ray.degenerate()) return ray.exact_mu - tree::distance(q, std::get<TreePoint>(ray.interior_end()));
  return tree::busemann(base, std::get<TreeEnd>(ray.boundary_end()), q);
}

BusemannAudit busemann_limit_audit(const ModelSpace& m, const GeneralizedRay& ray, const Point& b,
                                   const std::vector<double>& schedule, double tol) {
  BusemannAudit audit;
  audit.bound = distance(m, ray.base, b);
  audit.closed_form = busemann(m, ray, b);
  if (as_tree(m)) {
    const Rational bound = tree::distance(std::get<TreePoint>(ray.base), std::get<TreePoint>(b));
    const Rational closed = busemann_exact(m, ray, b);
    std::optional<Rational> previous;
    Rational last = 0;
    for (double t : schedule) {
      const Rational s = exact(t);
      const Rational travelled = ray.degenerate() ? std::min(s, ray.exact_mu) : s;
      const Rational q = travelled - tree::distance(std::get<TreePoint>(b), std::get<TreePoint>(ray_point(m, ray, t)));
      if (previous && q < *previous) audit.monotone = false;
      if (q > bound) audit.bounded = false;
      previous = q;
      last = q;
      audit.samples.push_back({t, to_double(q)});
    }
    audit.final_gap = to_double(abs(closed - last));
    return audit;
  }
  double previous = -kInfinity;
  for (double t : schedule) {
    const double travelled = ray.degenerate() ? std::min(t, ray.mu) : t;
    double v = travelled - distance(m, b, ray_point(m, ray, t));
    if (std::holds_alternative<Euclidean>(m) && !ray.degenerate()) {
      // t - |w - t u| = (2t<w,u> - |w|^2) / (t + |w - t u|), free of cancellation for large t
      const auto& x = std::get<EuclideanPoint>(b).x;
      const auto& o = std::get<EuclideanPoint>(ray.base).x;
      const auto& u = std::get<EuclideanDirection>(ray.boundary_end()).u;
      double wu = 0, ww = 0;
      for (std::size_t i = 0; i < x.size(); ++i) {
        wu += (x[i] - o[i]) * u[i];
        ww += (x[i] - o[i]) * (x[i] - o[i]);
      }
      v = (2 * t * wu - ww) / (t + distance(m, b, ray_point(m, ray, t)));
    }
    if (v < previous - tol) audit.monotone = false;
    if (v > audit.bound + tol) audit.bounded = false;
    previous = std::max(previous, v);
    audit.samples.push_back({t, v});
  }
  if (!audit.samples.empty()) audit.final_gap = std::abs(audit.closed_form - audit.samples.back().value);
  return audit;
}

bool horoball_contains(const ModelSpace& m, const Horoball& h, const Point& b) {
  if (as_tree(m)) return busemann_exact(m, h.ray, b) >= exact(h.level);
  return busemann(m, h.ray, b) >= h.level;
}

double comparison_angle(const ModelSpace& m, const Point& apex, const Point& b, const Point& c) {
  const double ab = distance(m, apex, b);
  const double ac = distance(m, apex, c);
  const double bc = distance(m, b, c);
  if (ab == 0 || ac == 0) throw Error(ErrorCode::DegenerateTriangle, "comparison angle needs b != apex != c");
  const double cosine = (ab * ab + ac * ac - bc * bc) / (2 * ab * ac);
  return std::acos(std::clamp(cosine, -1.0, 1.0));
}

double alexandrov_angle(const ModelSpace& m, const GeneralizedRay& r1, const GeneralizedRay& r2) {
  if (distance(m, r1.base, r2.base) > kTolerance) throw Error(ErrorCode::InvalidInput, "rays must share their base point");
  if ((r1.degenerate() && r1.mu == 0) || (r2.degenerate() && r2.mu == 0)) {
    throw Error(ErrorCode::DegenerateTriangle, "constant ray has no direction");
  }
  if (std::holds_alternative<Euclidean>(m)) {
    auto direction = [&](const GeneralizedRay& r) {
      if (!r.degenerate()) return std::get<EuclideanDirection>(r.boundary_end()).u;
      std::vector<double> v = std::get<EuclideanPoint>(r.interior_end()).x;
      const auto& p = std::get<EuclideanPoint>(r.base).x;
      for (std::size_t i = 0; i < v.size(); ++i) v[i] -= p[i];
      return make_direction(std::move(v)).u;
    };
    return unit_angle(direction(r1), direction(r2));
  }
  if (as_tree(m)) {
    const auto& base = std::get<TreePoint>(r1.base);
    Rational eps(1, 2);
    if (base.offset != 0) eps = std::min({eps, base.offset / 2, (1 - base.offset) / 2});
    if (r1.degenerate()) eps = std::min(eps, r1.exact_mu / 2);
    if (r2.degenerate()) eps = std::min(eps, r2.exact_mu / 2);
    const double e = to_double(eps);
    return ray_point(m, r1, e) == ray_point(m, r2, e) ? 0.0 : std::numbers::pi;
  }
  // Comparison angles increase to the Alexandrov angle as the scale shrinks.
  double t = 1.0;
  if (r1.degenerate()) t = std::min(t, r1.mu / 2);
  if (r2.degenerate()) t = std::min(t, r2.mu / 2);
  double previous = comparison_angle(m, r1.base, ray_point(m, r1, t), ray_point(m, r2, t));
  for (int i = 0; i < 60; ++i) {
    t /= 2;
    const double next = comparison_angle(m, r1.base, ray_point(m, r1, t), ray_point(m, r2, t));
    if (std::abs(next - previous) < 1e-9) return next;
    previous = next;
  }
  return previous;
}

bool same_boundary_point(const ModelSpace& m, const BoundaryPoint& e1, const BoundaryPoint& e2, double tol) {
  return std::visit(overloaded{
                        [&](const Euclidean&) {
                          const auto& u = expect<EuclideanDirection>(e1, "boundary").u;
                          const auto& v = expect<EuclideanDirection>(e2, "boundary").u;
                          double s = 0;
                          for (std::size_t i = 0; i < u.size(); ++i) s += (u[i] - v[i]) * (u[i] - v[i]);
                          return std::sqrt(s) <= tol;
                        },
                        [&](const HyperbolicPlane&) {
                          const auto& a = expect<HyperbolicBoundary>(e1, "boundary");
                          const auto& b = expect<HyperbolicBoundary>(e2, "boundary");
                          if (a.at_infinity || b.at_infinity) return a.at_infinity == b.at_infinity;
                          return std::abs(a.x - b.x) <= tol * std::max(1.0, std::abs(a.x));
                        },
                        [&](const TreeDescriptor& t) {
                          const auto& a = expect<TreeEnd>(e1, "boundary");
                          const auto& b = expect<TreeEnd>(e2, "boundary");
                          return tree::canonical_end(t, a.prefix, a.period) == tree::canonical_end(t, b.prefix, b.period);
                        },
                    },
                    m);
}

double angular_distance(const ModelSpace& m, const BoundaryPoint& e1, const BoundaryPoint& e2) {
  if (std::holds_alternative<Euclidean>(m)) {
    const auto& u = expect<EuclideanDirection>(e1, "angular_distance").u;
    const auto& v = expect<EuclideanDirection>(e2, "angular_distance").u;
    return unit_angle(u, v);
  }
  return same_boundary_point(m, e1, e2) ? 0.0 : std::numbers::pi;
}

double tits_distance(const ModelSpace& m, const BoundaryPoint& e1, const BoundaryPoint& e2) {
  if (std::holds_alternative<Euclidean>(m)) return angular_distance(m, e1, e2);
  return same_boundary_point(m, e1, e2) ? 0.0 : kInfinity;
}

AsymptoticOffset asymptotic_offset(const ModelSpace& m, const GeneralizedRay& r1, const GeneralizedRay& r2,
                                   std::size_t samples, unsigned long long seed) {
  if (r1.degenerate() || r2.degenerate() || !same_boundary_point(m, r1.boundary_end(), r2.boundary_end())) {
    throw Error(ErrorCode::NotAsymptotic, "rays do not share a boundary endpoint");
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  AsymptoticOffset out;
  auto sample_point = [&]() -> Point {
    return std::visit(overloaded{
                          [&](const Euclidean& e) -> Point {
                            EuclideanPoint p{std::get<EuclideanPoint>(r1.base).x};
                            for (std::size_t i = 0; i < e.dim; ++i) p.x[i] += 3.0 * unit(rng);
                            return p;
                          },
                          [&](const HyperbolicPlane&) -> Point {
                            const auto& b = std::get<HyperbolicPoint>(r1.base);
                            return HyperbolicPoint{b.x + 3.0 * b.y * unit(rng), b.y * std::exp(2.0 * unit(rng))};
                          },
                          [&](const TreeDescriptor& t) -> Point {
                            std::string v = std::get<TreePoint>(r1.base).address;
                            std::uniform_int_distribution<int> steps(0, 6);
                            for (int i = steps(rng); i > 0; --i) {
                              const auto nb = tree::neighbours(t, v);
                              v = nb[std::uniform_int_distribution<std::size_t>(0, nb.size() - 1)(rng)];
                            }
                            return TreePoint::vertex(v);
                          },
                      },
                      m);
  };
  if (as_tree(m)) {
    std::optional<Rational> first;
    for (std::size_t i = 0; i < samples; ++i) {
      const Point b = i == 0 ? r1.base : sample_point();
      const Rational diff = busemann_exact(m, r1, b) - busemann_exact(m, r2, b);
      if (!first) first = diff;
      out.max_deviation = std::max(out.max_deviation, to_double(abs(diff - *first)));
    }
    out.offset = to_double(*first);
    out.samples = samples;
    return out;
  }
  std::optional<double> first;
  for (std::size_t i = 0; i < samples; ++i) {
    const Point b = i == 0 ? r1.base : sample_point();
    const double diff = busemann(m, r1, b) - busemann(m, r2, b);
    if (!first) first = diff;
    out.max_deviation = std::max(out.max_deviation, std::abs(diff - *first));
  }
  out.offset = *first;
  out.samples = samples;
  return out;
}

}  // namespace sigma::cat0
