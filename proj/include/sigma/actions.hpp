#pragma once

// Isometric actions of finitely generated groups on the model spaces, the
// induced action on the boundary, endpoint characters, the psi cocycle,
// shift reports for finite control configurations, and a few audits.
//
// Generators are named by single lowercase letters; in a word an uppercase
// letter stands for the inverse generator. Words act right to left, so "ab"
// sends p to a(b(p)).

#include "sigma/hnn.hpp"
#include "sigma/space.hpp"

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace sigma::actions {

using cat0::BoundaryPoint;
using cat0::ModelSpace;
using cat0::Point;

/// x -> Q x + v with Q orthogonal.
struct EuclideanIsometry {
  std::vector<std::vector<double>> rotation;
  std::vector<double> translation;
};

/// z -> (a z + b) / (c z + d), ad - bc = 1.
struct MobiusIsometry {
  double a = 1, b = 0, c = 0, d = 1;
};

/// Left multiplication by a reduced word on a Cayley tree.
struct CayleyIsometry {
  std::string word;
};

/// x -> n^power x + shift on the HNN tree, shift in Z[1/n].
using HnnIsometry = cat0::hnn::Affine;

using Isometry = std::variant<EuclideanIsometry, MobiusIsometry, CayleyIsometry, HnnIsometry>;

Isometry identity(const ModelSpace& m);
Isometry compose(const ModelSpace& m, const Isometry& f, const Isometry& g);  // f o g
Isometry inverse(const ModelSpace& m, const Isometry& f);

/// Throws InvalidInput / WrongSpace if f does not fit the space or breaks
/// the orthogonality, determinant or reducedness invariants.
void validate(const ModelSpace& m, const Isometry& f);

Point apply(const ModelSpace& m, const Isometry& f, const Point& p);
BoundaryPoint apply(const ModelSpace& m, const Isometry& f, const BoundaryPoint& e);

/// Free reduction of a word over a Cayley alphabet.
std::string free_reduce(const cat0::TreeDescriptor& t, const std::string& word);

class GroupAction {
 public:
  GroupAction(ModelSpace space, std::map<char, Isometry> generators);

  const ModelSpace& space() const { return space_; }
  const std::map<char, Isometry>& generators() const { return generators_; }

  /// Throws UnknownGenerator.
  Isometry evaluate(const std::string& word) const;

  /// Largest |d(ga, gb) - d(a, b)| over random pairs near the base of the
  /// space, for every generator. Zero on trees.
  double isometry_defect(std::size_t pairs, unsigned long long seed) const;

 private:
  ModelSpace space_;
  std::map<char, Isometry> generators_;
};

/// Formal inverse of a generator word.
std::string inverse_word(const std::string& word);

Point apply(const GroupAction& rho, const std::string& word, const Point& p);
BoundaryPoint boundary_apply(const GroupAction& rho, const std::string& word, const BoundaryPoint& e);

enum class IsometryKind { Elliptic, Parabolic, Hyperbolic };
std::string to_string(IsometryKind k);

struct Classification {
  IsometryKind kind = IsometryKind::Elliptic;
  bool identity = false;
  double translation_length = 0;
  Rational exact_translation_length;  // trees
  /// Attracting and repelling ends of the axis, for hyperbolic elements.
  std::optional<std::pair<BoundaryPoint, BoundaryPoint>> axis;
  /// A point of minimal displacement (trees), or a fixed point if known.
  std::optional<Point> witness;
};

/// H^2 by the trace rule; trees by minimal displacement over the vertices and
/// edge midpoints within `depth` of the root. Euclidean only for pure
/// translations. Throws DepthExhausted when the minimum sits on the search
/// boundary, WrongSpace for Euclidean maps with a rotational part.
Classification classify_isometry(const GroupAction& rho, const std::string& word, std::size_t depth = 8);

struct FixedEndReport {
  enum class Kind { Empty, Singleton, Pair, All, Unknown };
  Kind kind = Kind::Unknown;
  std::vector<cat0::TreeEnd> ends;
  std::size_t depth = 0;
};
std::string to_string(FixedEndReport::Kind k);

/// Ends fixed by every generator. Each nontrivial generator fixes a finite
/// set of ends computed exactly (the two axis ends of a hyperbolic element,
/// the HNN formulas), and the report intersects them. Pair is reported only
/// when the group fixes exactly the two axis ends of a hyperbolic element.
FixedEndReport fixed_ends_tree(const GroupAction& rho, std::size_t depth);

/// chi_e(g) = beta(g a) - beta(a) for the ray from a to e; throws EndNotFixed
/// unless every generator fixes e.
double character_at_end(const GroupAction& rho, const BoundaryPoint& e, const Point& a, const std::string& word);
Rational character_at_end_exact(const GroupAction& rho, const BoundaryPoint& e, const Point& a,
                                const std::string& word);

/// psi_e(g, a) = beta(g a) - beta(a); e need not be fixed.
double psi_cocycle(const GroupAction& rho, const BoundaryPoint& e, const std::string& word, const Point& a);
Rational psi_cocycle_exact(const GroupAction& rho, const BoundaryPoint& e, const std::string& word, const Point& a);

// ---------------------------------------------------------------- shifts

struct ControlPoint {
  std::string label;
  Point point;
  std::optional<std::string> group_label;
};

class ControlConfiguration {
 public:
  /// Throws EmptyConfiguration, or InvalidInput on duplicate labels.
  explicit ControlConfiguration(std::vector<ControlPoint> points);

  const std::vector<ControlPoint>& points() const { return points_; }
  const Point& at(const std::string& label) const;
  bool has(const std::string& label) const;

 private:
  std::vector<ControlPoint> points_;
};

/// Image points of f, by label. The keys are the domain D(f); a map closed
/// on a finite configuration always has gsh <= 0 (shifts telescope around
/// each cycle), so partial maps are the interesting case.
using PointMap = std::map<std::string, Point>;
/// f as a partial map on the labels.
using LabelMap = std::map<std::string, std::string>;

struct ShiftEntry {
  std::string label;
  double shift = 0;
  double displacement = 0;
  std::optional<Rational> exact_shift;         // trees
  std::optional<Rational> exact_displacement;  // trees
};

class ShiftReport {
 public:
  /// Builds the report, enforcing |sh| <= alpha at every point (exactly on
  /// trees, within 1e-9 otherwise); a breach throws InvariantViolation.
  static ShiftReport build(std::vector<ShiftEntry> entries);

  const std::vector<ShiftEntry>& entries() const { return entries_; }
  double gsh() const { return gsh_; }
  double norm() const { return norm_; }
  const std::optional<Rational>& exact_gsh() const { return exact_gsh_; }
  bool is_contraction() const { return exact_gsh_ ? *exact_gsh_ > 0 : gsh_ > 0; }

 private:
  ShiftReport() = default;
  std::vector<ShiftEntry> entries_;
  double gsh_ = 0;
  double norm_ = 0;
  std::optional<Rational> exact_gsh_;
};

ShiftReport shift_report(const ModelSpace& m, const ControlConfiguration& cfg, const PointMap& images,
                         const BoundaryPoint& e);
/// Throws NotClosed if an image label is outside the configuration.
ShiftReport shift_report(const ModelSpace& m, const ControlConfiguration& cfg, const LabelMap& f,
                         const BoundaryPoint& e);

struct IterateCheck {
  bool pass = false;
  std::size_t m = 0;
  double gsh = 0;            // gsh of f
  double gsh_iterate = 0;    // gsh of f^m
  double bound = 0;          // m * gsh(f)
};

/// gsh(f^m) >= m gsh(f), with f^m defined where the iterates stay inside
/// D(f); throws NotClosed if an image is not a control point.
IterateCheck iterate_shift_check(const ModelSpace& m, const ControlConfiguration& cfg, const LabelMap& f,
                                 const BoundaryPoint& e, std::size_t power);

struct EquivarianceCheck {
  bool pass = false;
  double gsh = 0;             // gsh_e(f)
  double gsh_translated = 0;  // gsh_{ge}(g f g^-1) on g.cfg
};

/// Compares gsh_e(f) with gsh_{ge}(gf) computed on the translated
/// configuration g.cfg with images g.f(x).
EquivarianceCheck equivariance_check(const GroupAction& rho, const ControlConfiguration& cfg, const PointMap& images,
                                     const std::string& g, const BoundaryPoint& e);

// ---------------------------------------------------------------- audits

struct CocompactnessResult {
  enum class Kind { Net, EmptyHoroballWitness, Unknown };
  Kind kind = Kind::Unknown;
  std::size_t orbit_size = 0;
  std::size_t samples = 0;
  double region_radius = 0;
  double worst_distance = 0;       // max over samples of d(sample, orbit)
  std::optional<Point> far_point;  // sample realizing worst_distance
  std::optional<BoundaryPoint> direction;
  double level = 0;                        // s with orbit outside HB_s
  std::vector<double> ray_orbit_distances;  // d(orbit, gamma(m)), m = 0..depth
};
std::string to_string(CocompactnessResult::Kind k);

CocompactnessResult cocompactness_witness(const GroupAction& rho, const Point& a, double radius, std::size_t depth);

struct Lemma135Report {
  bool pass = true;
  double big_r = 0;
  double min_slack = cat0::kInfinity;  // rhs - lhs over samples
  std::optional<Point> worst;
  std::size_t samples = 0;
  unsigned long long seed = 0;
};

/// Samples p in B_r(c) and checks |beta(p) - beta'(p)| < 2 eps + d(gamma(R), gamma'(R))
/// with R = r(1 + 2r/eps) + eps.
Lemma135Report lemma_13_5_audit(const ModelSpace& m, const Point& c, double r, double eps, const BoundaryPoint& e,
                                const BoundaryPoint& e2, std::size_t samples, unsigned long long seed);

struct AngleAuditEntry {
  double t = 0;
  double gap = 0;    // d(gamma(t), gamma'(t))
  double bound = 0;  // 2 t sin(angle / 2)
};

struct AngleAudit {
  bool pass = true;
  double angle = 0;  // angular distance between the ray ends
  std::vector<AngleAuditEntry> entries;
};

AngleAudit angle_estimate_audit(const ModelSpace& m, const cat0::GeneralizedRay& r1, const cat0::GeneralizedRay& r2,
                                const std::vector<double>& schedule);

/// a + b sqrt(d) with exact rational a, b and integer d.
struct QuadraticNumber {
  Rational a;
  Rational b;
  Integer d;
};

struct ExtendedReal {
  std::variant<Rational, QuadraticNumber> value;
  bool infinite = false;
};

/// "inf", "p/q", "1.25", "a+b*sqrt(d)", "sqrt(d)", "a-sqrt(d)".
ExtendedReal parse_extended_real(const std::string& text);

/// True iff e lies in Q u {infinity}, the complement of Sigma^0 for the
/// SL_2(Z) action on H^2. Throws UnsupportedNumberForm for d < 0.
bool sl2z_sigma0_complement(const ExtendedReal& e);

}  // namespace sigma::actions
