#pragma once

// The three model CAT(0) spaces (Euclidean k-space, the upper half-plane,
// locally finite trees), their boundaries, generalized rays, Busemann
// functions, horoballs and the angular and Tits metrics on the boundary.
//
// Euclidean and hyperbolic computations are binary64; tree computations are
// exact and the functions here convert their results to double. Callers that
// need exact tree values use the sigma::cat0::tree functions directly.

#include "sigma/error.hpp"
#include "sigma/rational.hpp"
#include "sigma/tree.hpp"

#include <complex>
#include <limits>
#include <string>
#include <variant>
#include <vector>

namespace sigma::cat0 {

inline constexpr double kTolerance = 1e-9;
inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct Euclidean {
  std::size_t dim = 2;
  friend bool operator==(const Euclidean&, const Euclidean&) = default;
};

struct HyperbolicPlane {
  friend bool operator==(const HyperbolicPlane&, const HyperbolicPlane&) = default;
};

using ModelSpace = std::variant<Euclidean, HyperbolicPlane, TreeDescriptor>;

struct EuclideanPoint {
  std::vector<double> x;
  friend bool operator==(const EuclideanPoint&, const EuclideanPoint&) = default;
};

/// z = x + iy in the upper half-plane, y > 0.
struct HyperbolicPoint {
  double x = 0;
  double y = 1;
  std::complex<double> z() const { return {x, y}; }
  friend bool operator==(const HyperbolicPoint&, const HyperbolicPoint&) = default;
};

using Point = std::variant<EuclideanPoint, HyperbolicPoint, TreePoint>;

/// Unit direction vector.
struct EuclideanDirection {
  std::vector<double> u;
  friend bool operator==(const EuclideanDirection&, const EuclideanDirection&) = default;
};

/// A point of R u {infinity}.
struct HyperbolicBoundary {
  bool at_infinity = true;
  double x = 0;

  static HyperbolicBoundary infinity() { return {true, 0}; }
  static HyperbolicBoundary real(double x) { return {false, x}; }
  friend bool operator==(const HyperbolicBoundary&, const HyperbolicBoundary&) = default;
};

using BoundaryPoint = std::variant<EuclideanDirection, HyperbolicBoundary, TreeEnd>;

/// Validating constructors.
EuclideanDirection make_direction(std::vector<double> v);
HyperbolicPoint make_hyperbolic_point(double x, double y);

void validate(const ModelSpace& m, const Point& p);
void validate(const ModelSpace& m, const BoundaryPoint& e);

std::string to_string(const Point& p);
std::string to_string(const BoundaryPoint& e);

/// A generalized geodesic ray: unit speed from `base`, either forever toward a
/// boundary point or stopping at an interior point after length mu.
struct GeneralizedRay {
  Point base;
  std::variant<Point, BoundaryPoint> end;
  double mu = kInfinity;
  Rational exact_mu;  // trees only

  bool degenerate() const { return std::holds_alternative<Point>(end); }
  const Point& interior_end() const { return std::get<Point>(end); }
  const BoundaryPoint& boundary_end() const { return std::get<BoundaryPoint>(end); }
};

struct Horoball {
  GeneralizedRay ray;
  double level = 0;
};

double distance(const ModelSpace& m, const Point& a, const Point& b);

Point geodesic_point(const ModelSpace& m, const Point& a, const Point& b, double t);

GeneralizedRay ray_from(const ModelSpace& m, const Point& a, const BoundaryPoint& e);
GeneralizedRay ray_from(const ModelSpace& m, const Point& a, const Point& e);

/// gamma(t) for t >= 0.
Point ray_point(const ModelSpace& m, const GeneralizedRay& ray, double t);

double busemann(const ModelSpace& m, const GeneralizedRay& ray, const Point& b);

/// Exact Busemann value on trees; throws WrongSpace elsewhere.
Rational busemann_exact(const ModelSpace& m, const GeneralizedRay& ray, const Point& b);

struct AuditSample {
  double t;
  double value;  // t - d(b, gamma(t))
};

struct BusemannAudit {
  std::vector<AuditSample> samples;
  bool monotone = true;
  bool bounded = true;
  double bound = 0;        // d(gamma(0), b)
  double closed_form = 0;  // busemann(m, ray, b)
  double final_gap = 0;    // |closed_form - last value|
};

/// Evaluates the finite-t approximations t - d(b, gamma(t)) on a schedule and
/// checks them against monotonicity and the bound d(gamma(0), b).
BusemannAudit busemann_limit_audit(const ModelSpace& m, const GeneralizedRay& ray, const Point& b,
                                   const std::vector<double>& schedule, double tol = kTolerance);

bool horoball_contains(const ModelSpace& m, const Horoball& h, const Point& b);

/// Euclidean angle at `apex` of the comparison triangle; throws
/// DegenerateTriangle if b or c coincides with the apex.
double comparison_angle(const ModelSpace& m, const Point& apex, const Point& b, const Point& c);

/// Alexandrov angle at the common base of two rays: closed form in E^k,
/// shared-first-edge rule on trees, doubling refinement of comparison angles
/// in H^2.
double alexandrov_angle(const ModelSpace& m, const GeneralizedRay& r1, const GeneralizedRay& r2);

double angular_distance(const ModelSpace& m, const BoundaryPoint& e1, const BoundaryPoint& e2);

/// Infinity when no rectifiable path exists (H^2, trees, distinct ends).
double tits_distance(const ModelSpace& m, const BoundaryPoint& e1, const BoundaryPoint& e2);

bool same_boundary_point(const ModelSpace& m, const BoundaryPoint& e1, const BoundaryPoint& e2,
                         double tol = kTolerance);

struct AsymptoticOffset {
  double offset = 0;         // beta_gamma(b) - beta_gamma'(b)
  double max_deviation = 0;  // over the sampled points
  std::size_t samples = 0;
};

/// Throws NotAsymptotic if the rays end at different boundary points.
AsymptoticOffset asymptotic_offset(const ModelSpace& m, const GeneralizedRay& r1, const GeneralizedRay& r2,
                                   std::size_t samples = 16, unsigned long long seed = 1);

}  // namespace sigma::cat0
