#include "sigma/actions.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <set>

namespace sigma::actions {
namespace {

using cat0::TreeDescriptor;
using cat0::TreePoint;
namespace tree = cat0::tree;

const TreeDescriptor* as_tree(const ModelSpace& m) { return std::get_if<TreeDescriptor>(&m); }

// Orbit points are deduplicated on exact keys for trees and on a 1e-9 grid
// otherwise.
std::string point_key(const Point& p) {
  if (const auto* t = std::get_if<TreePoint>(&p)) return cat0::to_string(*t);
  std::string key;
  char buf[48];
  auto put = [&](double v) {
    const double r = std::round(v * 1e9) / 1e9;
    std::snprintf(buf, sizeof buf, "%.9f,", r == 0 ? 0.0 : r);
    key += buf;
  };
  if (const auto* e = std::get_if<cat0::EuclideanPoint>(&p))
    for (double v : e->x) put(v);
  else {
    const auto& h = std::get<cat0::HyperbolicPoint>(p);
    put(h.x);
    put(h.y);
  }
  return key;
}

struct OrbitPoint {
  Point point;
  std::size_t level;
};

std::vector<OrbitPoint> orbit(const GroupAction& rho, const Point& a, std::size_t depth) {
  constexpr std::size_t kCap = 100000;
  std::vector<Isometry> moves;
  for (const auto& [name, f] : rho.generators()) {
    moves.push_back(f);
    moves.push_back(inverse(rho.space(), f));
  }
  std::vector<OrbitPoint> out{{a, 0}};
  std::set<std::string> seen{point_key(a)};
  std::size_t begin = 0;
  for (std::size_t level = 1; level <= depth && out.size() < kCap; ++level) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i)
      for (const auto& f : moves) {
        Point q = apply(rho.space(), f, out[i].point);
        if (seen.insert(point_key(q)).second) out.push_back({std::move(q), level});
      }
    begin = end;
  }
  return out;
}

std::vector<Point> region_samples(const ModelSpace& m, const Point& a, double radius) {
  std::vector<Point> out;
  if (const auto* e = std::get_if<cat0::Euclidean>(&m)) {
    const auto& c = std::get<cat0::EuclideanPoint>(a).x;
    if (e->dim <= 3) {
      const int steps = 8;
      const double h = radius / steps;
      std::vector<int> idx(e->dim, -steps);
      for (;;) {
        std::vector<double> x(e->dim);
        double s = 0;
        for (std::size_t i = 0; i < e->dim; ++i) {
          x[i] = idx[i] * h;
          s += x[i] * x[i];
        }
        if (std::sqrt(s) <= radius + 1e-12) {
          for (std::size_t i = 0; i < e->dim; ++i) x[i] += c[i];
          out.push_back(cat0::EuclideanPoint{x});
        }
        std::size_t i = 0;
        while (i < e->dim && idx[i] == steps) idx[i++] = -steps;
        if (i == e->dim) break;
        ++idx[i];
      }
      return out;
    }
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-radius, radius);
    while (out.size() < 4000) {
      std::vector<double> x(e->dim);
      double s = 0;
      for (double& v : x) {
        v = u(rng);
        s += v * v;
      }
      if (std::sqrt(s) > radius) continue;
      for (std::size_t i = 0; i < e->dim; ++i) x[i] += c[i];
      out.push_back(cat0::EuclideanPoint{x});
    }
    return out;
  }
  if (std::holds_alternative<cat0::HyperbolicPlane>(m)) {
    const auto& c = std::get<cat0::HyperbolicPoint>(a);
    out.push_back(a);
    for (int k = 0; k < 48; ++k) {
      const double phi = -std::numbers::pi / 2 + std::numbers::pi * (k + 0.5) / 48;
      const BoundaryPoint e = k == 0 ? BoundaryPoint(cat0::HyperbolicBoundary::infinity())
                                     : BoundaryPoint(cat0::HyperbolicBoundary::real(c.x + c.y * std::tan(phi)));
      const auto ray = cat0::ray_from(m, a, e);
      for (int j = 1; j <= 8; ++j) out.push_back(cat0::ray_point(m, ray, radius * j / 8));
    }
    return out;
  }
  const auto& t = std::get<TreeDescriptor>(m);
  const auto& c = std::get<TreePoint>(a);
  const std::size_t reach = static_cast<std::size_t>(std::ceil(radius)) + 1;
  std::vector<std::string> frontier{c.address};
  std::set<std::string> seen{c.address};
  for (std::size_t step = 0; step <= reach; ++step) {
    std::vector<std::string> next;
    for (const auto& v : frontier) {
      for (const TreePoint& p : {TreePoint::vertex(v), TreePoint{v, Rational(1, 2)}}) {
        if (p.offset != 0 && v.empty()) continue;
        if (to_double(tree::distance(c, p)) <= radius) out.push_back(p);
      }
      for (auto& w : tree::neighbours(t, v))
        if (seen.insert(w).second) next.push_back(std::move(w));
    }
    frontier = std::move(next);
  }
  return out;
}

std::vector<BoundaryPoint> candidate_directions(const ModelSpace& m, const Point& a, const std::optional<Point>& far) {
  std::vector<BoundaryPoint> out;
  if (const auto* e = std::get_if<cat0::Euclidean>(&m)) {
    for (std::size_t i = 0; i < e->dim; ++i)
      for (double s : {1.0, -1.0}) {
        std::vector<double> u(e->dim, 0.0);
        u[i] = s;
        out.push_back(cat0::EuclideanDirection{u});
      }
    if (far) {
      std::vector<double> u = std::get<cat0::EuclideanPoint>(*far).x;
      const auto& c = std::get<cat0::EuclideanPoint>(a).x;
      double s = 0;
      for (std::size_t i = 0; i < u.size(); ++i) {
        u[i] -= c[i];
        s += u[i] * u[i];
      }
      if (s > 0) out.push_back(cat0::make_direction(u));
    }
    return out;
  }
  if (std::holds_alternative<cat0::HyperbolicPlane>(m)) {
    out.push_back(cat0::HyperbolicBoundary::infinity());
    for (double x : {0.0, 1.0, -1.0, 2.0, -2.0, 0.5, -0.5}) out.push_back(cat0::HyperbolicBoundary::real(x));
    return out;
  }
  const auto& t = std::get<TreeDescriptor>(m);
  const auto letters = t.alphabet();
  for (char x : letters) {
    if (t.may_follow(x, x)) {
      out.push_back(tree::canonical_end(t, "", std::string(1, x)));
      continue;
    }
    for (char y : letters)
      if (y != x && t.may_follow(x, y) && t.may_follow(y, x)) {
        out.push_back(tree::canonical_end(t, "", std::string{x, y}));
        break;
      }
  }
  return out;
}

double orbit_distance(const ModelSpace& m, const std::vector<OrbitPoint>& orb, const Point& p) {
  double best = cat0::kInfinity;
  for (const auto& o : orb) best = std::min(best, cat0::distance(m, o.point, p));
  return best;
}

}  // namespace

std::string to_string(CocompactnessResult::Kind k) {
  switch (k) {
    case CocompactnessResult::Kind::Net: return "Net";
    case CocompactnessResult::Kind::EmptyHoroballWitness: return "EmptyHoroballWitness";
    case CocompactnessResult::Kind::Unknown: return "Unknown";
  }
  return "?";
}

CocompactnessResult cocompactness_witness(const GroupAction& rho, const Point& a, double radius, std::size_t depth) {
  const ModelSpace& m = rho.space();
  cat0::validate(m, a);
  if (!(radius > 0)) throw Error(ErrorCode::ParameterOutOfRange, "radius must be positive");
  CocompactnessResult out;
  const auto orb = orbit(rho, a, depth);
  out.orbit_size = orb.size();

  double step = cat0::kInfinity;
  for (const auto& [name, f] : rho.generators()) {
    const double d = cat0::distance(m, a, apply(m, f, a));
    if (d > 1e-12) step = std::min(step, d);
  }
  out.region_radius = std::max(2 * radius, std::isfinite(step) ? static_cast<double>(depth) * step / 4 : 0.0);

  const auto samples = region_samples(m, a, out.region_radius);
  out.samples = samples.size();
  for (const auto& p : samples) {
    const double d = orbit_distance(m, orb, p);
    if (d > out.worst_distance) {
      out.worst_distance = d;
      out.far_point = p;
    }
  }
  if (out.worst_distance <= radius) {
    out.kind = CocompactnessResult::Kind::Net;
    return out;
  }

  // sup of beta over the orbit must already be reached by words of half the
  // depth; then no orbit point found enters HB_{sup + 1}.
  const bool exact = as_tree(m) != nullptr;
  for (const auto& e : candidate_directions(m, a, out.far_point)) {
    const auto ray = cat0::ray_from(m, a, e);
    Rational inner_exact = 0, all_exact = 0;
    double inner = -cat0::kInfinity, all = -cat0::kInfinity;
    for (const auto& o : orb) {
      if (exact) {
        const Rational b = cat0::busemann_exact(m, ray, o.point);
        all_exact = std::max(all_exact, b);
        if (2 * o.level <= depth) inner_exact = std::max(inner_exact, b);
      } else {
        const double b = cat0::busemann(m, ray, o.point);
        all = std::max(all, b);
        if (2 * o.level <= depth) inner = std::max(inner, b);
      }
    }
    const bool stable = exact ? inner_exact == all_exact : all - inner <= 1e-9 * (1 + std::abs(all));
    if (!stable) continue;
    out.kind = CocompactnessResult::Kind::EmptyHoroballWitness;
    out.direction = e;
    out.level = (exact ? to_double(all_exact) : all) + 1;
    for (std::size_t k = 0; k <= depth; ++k)
      out.ray_orbit_distances.push_back(orbit_distance(m, orb, cat0::ray_point(m, ray, static_cast<double>(k))));
    return out;
  }
  out.kind = CocompactnessResult::Kind::Unknown;
  return out;
}

Lemma135Report lemma_13_5_audit(const ModelSpace& m, const Point& c, double r, double eps, const BoundaryPoint& e,
                                const BoundaryPoint& e2, std::size_t samples, unsigned long long seed) {
  if (!(r > 0) || !(eps > 0)) throw Error(ErrorCode::ParameterOutOfRange, "r and eps must be positive");
  Lemma135Report report;
  report.seed = seed;
  report.samples = samples;
  report.big_r = r * (1 + 2 * r / eps) + eps;
  const auto g1 = cat0::ray_from(m, c, e);
  const auto g2 = cat0::ray_from(m, c, e2);
  const double rhs = 2 * eps + cat0::distance(m, cat0::ray_point(m, g1, report.big_r), cat0::ray_point(m, g2, report.big_r));

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto sample = [&]() -> Point {
    if (const auto* s = std::get_if<cat0::Euclidean>(&m)) {
      const auto& base = std::get<cat0::EuclideanPoint>(c).x;
      for (;;) {
        std::vector<double> x(s->dim);
        double n = 0;
        for (double& v : x) {
          v = (2 * unit(rng) - 1) * r;
          n += v * v;
        }
        if (std::sqrt(n) >= r) continue;
        for (std::size_t i = 0; i < x.size(); ++i) x[i] += base[i];
        return cat0::EuclideanPoint{x};
      }
    }
    if (std::holds_alternative<cat0::HyperbolicPlane>(m)) {
      const auto& h = std::get<cat0::HyperbolicPoint>(c);
      const double phi = std::numbers::pi * (unit(rng) - 0.5);
      const auto ray = cat0::ray_from(m, c, cat0::HyperbolicBoundary::real(h.x + h.y * std::tan(phi)));
      return cat0::ray_point(m, ray, r * unit(rng));
    }
    const auto& t = std::get<TreeDescriptor>(m);
    const auto& base = std::get<TreePoint>(c);
    std::string v = base.address;
    std::string previous = v;
    const std::size_t steps = static_cast<std::size_t>(std::ceil(r)) + 1;
    for (std::size_t i = 0; i < steps; ++i) {
      auto nb = tree::neighbours(t, v);
      if (i > 0) nb.erase(std::remove(nb.begin(), nb.end(), previous), nb.end());  // no backtracking
      previous = v;
      v = nb[rng() % nb.size()];
    }
    const TreePoint target = TreePoint::vertex(v);
    Rational s(static_cast<long long>(rng() % 64), 64);
    s *= rational_from_double(r);
    s = std::min(s, tree::distance(base, target));
    return tree::geodesic_point(base, target, s);
  };

  for (std::size_t i = 0; i < samples; ++i) {
    const Point p = sample();
    const double lhs = std::abs(cat0::busemann(m, g1, p) - cat0::busemann(m, g2, p));
    const double slack = rhs - lhs;
    if (slack < report.min_slack) {
      report.min_slack = slack;
      report.worst = p;
    }
    if (!(lhs < rhs)) report.pass = false;
  }
  return report;
}

AngleAudit angle_estimate_audit(const ModelSpace& m, const cat0::GeneralizedRay& r1, const cat0::GeneralizedRay& r2,
                                const std::vector<double>& schedule) {
  if (cat0::distance(m, r1.base, r2.base) > cat0::kTolerance)
    throw Error(ErrorCode::InvalidInput, "angle audit needs rays from a common base");
  AngleAudit audit;
  // The boundary angle metric bounds every comparison angle; it is pi between
  // distinct points in H^2 and on trees, where the angle at the base is not.
  if (!r1.degenerate() && !r2.degenerate())
    audit.angle = cat0::angular_distance(m, r1.boundary_end(), r2.boundary_end());
  else
    audit.angle = cat0::alexandrov_angle(m, r1, r2);
  for (double t : schedule) {
    AngleAuditEntry x;
    x.t = t;
    x.gap = cat0::distance(m, cat0::ray_point(m, r1, t), cat0::ray_point(m, r2, t));
    x.bound = 2 * t * std::sin(audit.angle / 2);
    if (x.gap > x.bound + 1e-9 * (1 + x.bound)) audit.pass = false;
    audit.entries.push_back(x);
  }
  return audit;
}

ExtendedReal parse_extended_real(const std::string& raw) {
  std::string s;
  for (char ch : raw)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s == "inf" || s == "infinity" || s == "+inf" || s == "oo") return {Rational(0), true};
  const auto root = s.find("sqrt(");
  if (root == std::string::npos) return {parse_rational(s), false};
  if (s.back() != ')' || s.find(')') != s.size() - 1)
    throw Error(ErrorCode::UnsupportedNumberForm, "expected a + b*sqrt(d), got '" + raw + "'");
  QuadraticNumber q;
  const std::string radicand = s.substr(root + 5, s.size() - root - 6);
  const Rational d = parse_rational(radicand);
  if (boost::multiprecision::denominator(d) != 1)
    throw Error(ErrorCode::UnsupportedNumberForm, "radicand must be an integer");
  q.d = boost::multiprecision::numerator(d);
  std::string head = s.substr(0, root);
  if (!head.empty() && head.back() == '*') head.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t i = head.size(); i-- > 0;)
    if (head[i] == '+' || head[i] == '-') {
      split = i;
      break;
    }
  std::string a_text, b_text = head;
  int sign = 1;
  if (split != std::string::npos) {
    a_text = head.substr(0, split);
    sign = head[split] == '-' ? -1 : 1;
    b_text = head.substr(split + 1);
  }
  q.a = a_text.empty() ? Rational(0) : parse_rational(a_text);
  q.b = (b_text.empty() ? Rational(1) : parse_rational(b_text)) * sign;
  return {q, false};
}

bool sl2z_sigma0_complement(const ExtendedReal& e) {
  if (e.infinite) return true;
  if (std::holds_alternative<Rational>(e.value)) return true;
  const auto& q = std::get<QuadraticNumber>(e.value);
  if (q.d < 0) throw Error(ErrorCode::UnsupportedNumberForm, "complex quadratic numbers are not boundary points");
  if (q.b == 0) return true;
  const Integer s = boost::multiprecision::sqrt(q.d);
  return s * s == q.d;
}

}  // namespace sigma::actions
