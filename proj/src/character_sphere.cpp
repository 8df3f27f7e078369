#include "sigma/character_sphere.hpp"

#include "sigma/lp.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace sigma::sphere {

namespace mp = boost::multiprecision;

Character Character::from_integers(const std::vector<long long>& coords) {
  RationalVector v;
  v.reserve(coords.size());
  for (long long c : coords) v.emplace_back(c);
  return Character(std::move(v));
}

bool Character::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return c == 0; });
}

Character Character::operator-() const {
  RationalVector v(coords_);
  for (auto& c : v) c = -c;
  return Character(std::move(v));
}

Character Character::operator+(const Character& other) const {
  if (other.dim() != dim()) throw Error(ErrorCode::DimensionMismatch, "character sum");
  RationalVector v(coords_);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += other.coords_[i];
  return Character(std::move(v));
}

Character Character::scaled(const Rational& factor) const {
  RationalVector v(coords_);
  for (auto& c : v) c *= factor;
  return Character(std::move(v));
}

SpherePoint::SpherePoint(IntegerVector primitive) : v_(std::move(primitive)) {
  Integer g = 0;
  for (const auto& c : v_) g = mp::gcd(g, c);
  if (g == 0) throw Error(ErrorCode::InvalidInput, "sphere point must be a nonzero vector");
  if (g != 1) throw Error(ErrorCode::InvalidInput, "sphere point must be primitive (gcd 1)");
}

SpherePoint SpherePoint::from_integers(const std::vector<long long>& v) {
  IntegerVector w;
  w.reserve(v.size());
  for (long long c : v) w.emplace_back(c);
  return SpherePoint(std::move(w));
}

SpherePoint SpherePoint::antipode() const {
  IntegerVector w(v_);
  for (auto& c : w) c = -c;
  return SpherePoint(std::move(w));
}

Character SpherePoint::as_character() const {
  RationalVector v;
  v.reserve(v_.size());
  for (const auto& c : v_) v.emplace_back(c);
  return Character(std::move(v));
}

std::string to_string(const SpherePoint& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.dim(); ++i) {
    if (i) s += ",";
    s += p[i].str();
  }
  return s + ")";
}

SpherePoint normalize_ray(const Character& chi) {
  if (chi.is_zero()) throw Error(ErrorCode::ZeroCharacter, "the zero character has no ray");
  Integer lcm = 1;
  for (const auto& c : chi.coords()) lcm = mp::lcm(lcm, Integer(mp::denominator(c)));
  IntegerVector v;
  v.reserve(chi.dim());
  Integer g = 0;
  for (const auto& c : chi.coords()) {
    v.push_back(Integer(mp::numerator(c)) * (lcm / Integer(mp::denominator(c))));
    g = mp::gcd(g, v.back());
  }
  for (auto& c : v) c /= g;
  return SpherePoint(std::move(v));
}

Rational pairing(const Character& chi, const SpherePoint& normal) {
  if (chi.dim() != normal.dim()) throw Error(ErrorCode::DimensionMismatch, "pairing");
  Rational s = 0;
  for (std::size_t i = 0; i < chi.dim(); ++i) s += chi[i] * Rational(normal[i]);
  return s;
}

PolyhedralSet::PolyhedralSet(std::size_t k, std::vector<Clause> clauses)
    : k_(k), mode_(Mode::Clauses), clauses_(std::move(clauses)) {
  for (const auto& clause : clauses_) {
    for (const auto& h : clause) {
      if (h.normal.dim() != k_) throw Error(ErrorCode::DimensionMismatch, "hemisphere normal");
    }
  }
}

PolyhedralSet PolyhedralSet::complement_of(std::size_t k, std::vector<SpherePoint> points) {
  for (const auto& p : points) {
    if (p.dim() != k) throw Error(ErrorCode::DimensionMismatch, "complement point");
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  PolyhedralSet set;
  set.k_ = k;
  set.mode_ = Mode::FiniteComplement;
  set.complement_ = std::move(points);
  return set;
}

bool polyhedral_contains(const PolyhedralSet& set, const SpherePoint& p) {
  if (p.dim() != set.dim()) throw Error(ErrorCode::DimensionMismatch, "polyhedral_contains");
  if (set.mode() == PolyhedralSet::Mode::FiniteComplement) {
    return !std::binary_search(set.complement_points().begin(), set.complement_points().end(), p);
  }
  const Character chi = p.as_character();
  return std::any_of(set.clauses().begin(), set.clauses().end(), [&](const auto& clause) {
    return std::all_of(clause.begin(), clause.end(),
                       [&](const OpenHemisphere& h) { return h.contains(chi); });
  });
}

std::uint64_t ExtNat::value() const {
  if (!value_) throw Error(ErrorCode::InvalidInput, "value() of infinity");
  return *value_;
}

ExtNat min(const ExtNat& a, const ExtNat& b) { return b < a ? b : a; }

std::string to_string(const ExtNat& x) {
  return x.is_infinite() ? std::string("inf") : std::to_string(x.value());
}

bool strictly_representable(std::span<const SpherePoint> rays, const Character& chi) {
  if (rays.empty()) return false;
  const std::size_t k = chi.dim();
  const std::size_t s = rays.size();
  for (const auto& v : rays) {
    if (v.dim() != k) throw Error(ErrorCode::DimensionMismatch, "ray dimension");
  }

  // lambda_i = tau + mu_i with mu_i >= 0, 0 <= tau <= 1. Columns: mu_1..mu_s,
  // tau, slack. Maximize tau; strictly representable iff the optimum is > 0.
  // The cap tau <= 1 keeps the homogeneous (chi = 0) problem bounded.
  lp::Matrix a(k + 1, RationalVector(s + 2, Rational(0)));
  RationalVector b(k + 1, Rational(0));
  for (std::size_t row = 0; row < k; ++row) {
    Rational ray_sum = 0;
    for (std::size_t j = 0; j < s; ++j) {
      a[row][j] = Rational(rays[j][row]);
      ray_sum += a[row][j];
    }
    a[row][s] = ray_sum;
    b[row] = chi[row];
  }
  a[k][s] = 1;
  a[k][s + 1] = 1;
  b[k] = 1;

  RationalVector c(s + 2, Rational(0));
  c[s] = 1;
  const lp::Result r = lp::maximize(a, b, c);
  return r.status == lp::Status::Optimal && r.objective > 0;
}

namespace {

std::vector<SpherePoint> candidate_rays(std::span<const SpherePoint> points, const Character& chi) {
  std::set<SpherePoint> unique(points.begin(), points.end());
  for (const auto& p : unique) {
    if (p.dim() != chi.dim()) throw Error(ErrorCode::DimensionMismatch, "point set dimension");
  }
  if (!chi.is_zero()) unique.erase(normalize_ray(chi));
  return {unique.begin(), unique.end()};
}

// Visits every size-`size` subset of [0, n) in lexicographic order until
// `visit` returns true.
template <typename Visit>
bool for_each_subset(std::size_t n, std::size_t size, Visit&& visit) {
  std::vector<std::size_t> idx(size);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  for (;;) {
    if (visit(idx)) return true;
    std::size_t i = size;
    while (i > 0 && idx[i - 1] == n - size + (i - 1)) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

ExtNat minimal_ray_count(std::span<const SpherePoint> points, const Character& chi) {
  const std::vector<SpherePoint> rays = candidate_rays(points, chi);
  std::vector<SpherePoint> subset;
  for (std::size_t size = 1; size <= rays.size(); ++size) {
    const bool found = for_each_subset(rays.size(), size, [&](const std::vector<std::size_t>& idx) {
      subset.clear();
      for (std::size_t i : idx) subset.push_back(rays[i]);
      return strictly_representable(subset, chi);
    });
    if (found) return ExtNat::finite(size);
  }
  return ExtNat::infinity();
}

MValue m_value(std::span<const SpherePoint> points, const Character& chi) {
  const ExtNat r = minimal_ray_count(points, chi);
  if (r.is_infinite()) return MValue::infinity();
  return MValue::finite(r.value() - 1);
}

}  // namespace sigma::sphere
