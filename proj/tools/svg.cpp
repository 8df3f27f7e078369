#include "svg.hpp"

#include "sigma/error.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>

namespace sigma::io {

namespace {

using Vec = std::vector<double>;

constexpr double kCenter = 120, kRadius = 100;
const double kPi = std::numbers::pi;

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  std::string s = buf;
  if (s == "-0.000") s = "0.000";
  return s;
}

Vec unit(const sphere::SpherePoint& p) {
  Vec v;
  double n = 0;
  for (const auto& x : p.vector()) {
    v.push_back(x.convert_to<double>());
    n += v.back() * v.back();
  }
  for (auto& x : v) x /= std::sqrt(n);
  return v;
}

double dot(const Vec& a, const Vec& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void check_dim(std::size_t k) {
  if (k < 1 || k > 3)
    throw Error(ErrorCode::UnsupportedDimension, "sphere pictures need k in {1, 2, 3}, got " + std::to_string(k));
}

std::string header() {
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"240\" height=\"240\" viewBox=\"0 0 240 240\">\n"
         "<rect width=\"240\" height=\"240\" fill=\"white\"/>\n";
}

std::string dot_svg(double x, double y, bool filled) {
  return "<circle cx=\"" + num(x) + "\" cy=\"" + num(y) + "\" r=\"5\" fill=\"" + (filled ? "black" : "white") +
         "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
}

// Membership of an arbitrary unit vector, in floating point; only used away
// from the hemisphere boundaries.
bool member(const sphere::PolyhedralSet& s, const Vec& x) {
  if (s.mode() == sphere::PolyhedralSet::Mode::FiniteComplement) return true;
  for (const auto& clause : s.clauses()) {
    bool all = true;
    for (const auto& h : clause) all = all && dot(unit(h.normal), x) > 0;
    if (all) return true;
  }
  return false;
}

// Screen position on the circle (S^1) or disc (S^2, orthographic).
std::array<double, 2> screen2(const Vec& v) { return {kCenter + kRadius * v[0], kCenter - kRadius * v[1]}; }

// View direction w = (1,1,1)/sqrt3, screen axes u = (1,-1,0)/sqrt2 and v = (-1,-1,2)/sqrt6.
const Vec kW{1 / std::sqrt(3.0), 1 / std::sqrt(3.0), 1 / std::sqrt(3.0)};
const Vec kU{1 / std::sqrt(2.0), -1 / std::sqrt(2.0), 0};
const Vec kV{-1 / std::sqrt(6.0), -1 / std::sqrt(6.0), 2 / std::sqrt(6.0)};

std::array<double, 2> screen3(const Vec& p) { return {kCenter + kRadius * dot(p, kU), kCenter - kRadius * dot(p, kV)}; }

Vec cross(const Vec& a, const Vec& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Vec normalized(Vec v) {
  const double n = std::sqrt(dot(v, v));
  for (auto& x : v) x /= n;
  return v;
}

std::string great_circle(const Vec& n) {
  // orthonormal basis of the plane n-perp
  std::size_t least = 0;
  for (std::size_t i = 1; i < 3; ++i)
    if (std::abs(n[i]) < std::abs(n[least])) least = i;
  Vec axis(3, 0.0);
  axis[least] = 1;
  const Vec a = normalized(cross(n, axis));
  const Vec b = cross(n, a);
  std::string out;
  constexpr int kSteps = 180;
  for (int i = 0; i < kSteps; ++i) {
    const double t0 = 2 * kPi * i / kSteps, t1 = 2 * kPi * (i + 1) / kSteps;
    Vec p0(3), p1(3);
    for (int c = 0; c < 3; ++c) {
      p0[c] = std::cos(t0) * a[c] + std::sin(t0) * b[c];
      p1[c] = std::cos(t1) * a[c] + std::sin(t1) * b[c];
    }
    const bool front = dot(p0, kW) + dot(p1, kW) >= 0;
    const auto s0 = screen3(p0), s1 = screen3(p1);
    out += "<line x1=\"" + num(s0[0]) + "\" y1=\"" + num(s0[1]) + "\" x2=\"" + num(s1[0]) + "\" y2=\"" + num(s1[1]) +
           "\" stroke=\"" + (front ? "black" : "gray") + "\" stroke-width=\"" + (front ? "1.5" : "0.8") + "\"/>\n";
  }
  return out;
}

std::string arc(double a0, double a1) {
  const double r = kRadius;
  const Vec p0{std::cos(a0), std::sin(a0)}, p1{std::cos(a1), std::sin(a1)};
  const auto s0 = screen2(p0), s1 = screen2(p1);
  // y is flipped on screen, so counterclockwise in the plane is sweep-flag 0
  return "<path d=\"M " + num(s0[0]) + " " + num(s0[1]) + " A " + num(r) + " " + num(r) + " 0 " +
         (a1 - a0 > kPi ? "1" : "0") + " 0 " + num(s1[0]) + " " + num(s1[1]) +
         "\" fill=\"none\" stroke=\"black\" stroke-width=\"4\"/>\n";
}

std::string circle_outline(const char* colour) {
  return std::string("<circle cx=\"120.000\" cy=\"120.000\" r=\"100.000\" fill=\"none\" stroke=\"") + colour +
         "\" stroke-width=\"1\"/>\n";
}

}  // namespace

std::string sphere_svg(const sphere::PolyhedralSet& set) {
  const std::size_t k = set.dim();
  check_dim(k);
  const bool complement = set.mode() == sphere::PolyhedralSet::Mode::FiniteComplement;
  std::string out = header();
  if (k == 1) {
    for (const long long s : {1LL, -1LL}) {
      const auto p = sphere::SpherePoint::from_integers({s});
      out += dot_svg(kCenter + s * kRadius, kCenter, sphere::polyhedral_contains(set, p));
    }
  } else if (k == 2) {
    out += circle_outline("gray");
    if (complement) {
      out += "<circle cx=\"120.000\" cy=\"120.000\" r=\"100.000\" fill=\"none\" stroke=\"black\" stroke-width=\"4\"/>\n";
      for (const auto& p : set.complement_points()) {
        const auto s = screen2(unit(p));
        out += dot_svg(s[0], s[1], false);
      }
    } else {
      // breakpoints: the two boundary directions of every hemisphere
      std::vector<double> cuts;
      for (const auto& clause : set.clauses())
        for (const auto& h : clause) {
          const Vec n = unit(h.normal);
          for (const double sgn : {1.0, -1.0}) {
            double a = std::atan2(sgn * n[0], -sgn * n[1]);
            if (a < 0) a += 2 * kPi;
            cuts.push_back(a);
          }
        }
      std::sort(cuts.begin(), cuts.end());
      cuts.erase(std::unique(cuts.begin(), cuts.end(), [](double x, double y) { return std::abs(x - y) < 1e-12; }),
                 cuts.end());
      if (cuts.empty()) {
        if (member(set, {1, 0}))
          out += "<circle cx=\"120.000\" cy=\"120.000\" r=\"100.000\" fill=\"none\" stroke=\"black\" stroke-width=\"4\"/>\n";
      } else {
        for (std::size_t i = 0; i < cuts.size(); ++i) {
          const double a0 = cuts[i];
          const double a1 = i + 1 < cuts.size() ? cuts[i + 1] : cuts[0] + 2 * kPi;
          const double mid = (a0 + a1) / 2;
          if (member(set, {std::cos(mid), std::sin(mid)})) {
            if (a1 - a0 > 2 * kPi - 1e-9) {
              out += arc(a0, a0 + kPi) + arc(a0 + kPi, a1);
            } else {
              out += arc(a0, a1);
            }
          }
        }
      }
    }
  } else {
    out += circle_outline("black");
    if (complement) {
      for (const auto& p : set.complement_points()) {
        const Vec v = unit(p);
        const auto s = screen3(v);
        out += dot_svg(s[0], s[1], dot(v, kW) < 0);
      }
    } else {
      for (const auto& clause : set.clauses())
        for (const auto& h : clause) {
          const Vec n = unit(h.normal);
          out += great_circle(n);
          const auto s = screen3(n);
          out += "<circle cx=\"" + num(s[0]) + "\" cy=\"" + num(s[1]) + "\" r=\"3\" fill=\"" +
                 (dot(n, kW) >= 0 ? "black" : "gray") + "\"/>\n";
        }
    }
  }
  return out + "</svg>\n";
}

std::string points_svg(std::size_t k, const std::vector<sphere::SpherePoint>& points) {
  check_dim(k);
  std::string out = header();
  if (k >= 2) out += circle_outline(k == 2 ? "gray" : "black");
  for (const auto& p : points) {
    if (p.dim() != k) throw Error(ErrorCode::DimensionMismatch, "point of the wrong dimension");
    const Vec v = unit(p);
    if (k == 1) {
      out += dot_svg(kCenter + v[0] * kRadius, kCenter, true);
    } else if (k == 2) {
      const auto s = screen2(v);
      out += dot_svg(s[0], s[1], true);
    } else {
      const auto s = screen3(v);
      out += dot_svg(s[0], s[1], dot(v, kW) >= 0);
    }
  }
  return out + "</svg>\n";
}

}  // namespace sigma::io
