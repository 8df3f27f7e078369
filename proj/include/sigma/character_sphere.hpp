#pragma once

// Exact model of Hom(G, R) in a user-chosen basis, the character sphere S(G)
// as primitive integer rays, open hemispheres, polyhedral subsets, and the
// conic-representation count m(chi).

#include "sigma/error.hpp"
#include "sigma/rational.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sigma::sphere {

/// A character chi: G -> R in coordinates w.r.t. a fixed basis of Hom(G, R).
class Character {
 public:
  Character() = default;
  explicit Character(RationalVector coords) : coords_(std::move(coords)) {}

  static Character zero(std::size_t k) { return Character(RationalVector(k, Rational(0))); }
  static Character from_integers(const std::vector<long long>& coords);

  std::size_t dim() const { return coords_.size(); }
  const RationalVector& coords() const { return coords_; }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  bool is_zero() const;

  Character operator-() const;
  Character operator+(const Character& other) const;
  Character scaled(const Rational& factor) const;

  friend bool operator==(const Character&, const Character&) = default;

 private:
  RationalVector coords_;
};

/// A point [chi] of S(G): the unique primitive integer vector on the ray.
/// Two points are equal iff their vectors are identical.
class SpherePoint {
 public:
  /// Throws InvalidInput unless the vector is nonzero with gcd 1.
  explicit SpherePoint(IntegerVector primitive);
  static SpherePoint from_integers(const std::vector<long long>& v);

  std::size_t dim() const { return v_.size(); }
  const IntegerVector& vector() const { return v_; }
  const Integer& operator[](std::size_t i) const { return v_[i]; }

  SpherePoint antipode() const;
  Character as_character() const;

  friend bool operator==(const SpherePoint&, const SpherePoint&) = default;
  friend auto operator<=>(const SpherePoint& a, const SpherePoint& b) { return a.v_ <=> b.v_; }

 private:
  IntegerVector v_;
};

std::string to_string(const SpherePoint& p);

/// Throws ZeroCharacter for chi = 0.
SpherePoint normalize_ray(const Character& chi);

/// Exact dot product; throws DimensionMismatch.
Rational pairing(const Character& chi, const SpherePoint& normal);

struct OpenHemisphere {
  SpherePoint normal;

  /// chi . normal > 0, strict.
  bool contains(const Character& chi) const { return pairing(chi, normal) > 0; }
  bool contains(const SpherePoint& p) const { return contains(p.as_character()); }
  OpenHemisphere opposite() const { return {normal.antipode()}; }

  friend bool operator==(const OpenHemisphere&, const OpenHemisphere&) = default;
};

/// A finite union of finite intersections of open hemispheres, or (in
/// complement mode) the sphere minus a finite set of rational points.
class PolyhedralSet {
 public:
  enum class Mode { Clauses, FiniteComplement };
  using Clause = std::vector<OpenHemisphere>;

  /// The empty set in dimension k.
  static PolyhedralSet empty(std::size_t k) { return PolyhedralSet(k, {}); }
  /// All of S(G): one clause with no hemispheres.
  static PolyhedralSet whole(std::size_t k) { return PolyhedralSet(k, {Clause{}}); }
  static PolyhedralSet complement_of(std::size_t k, std::vector<SpherePoint> points);

  PolyhedralSet(std::size_t k, std::vector<Clause> clauses);

  std::size_t dim() const { return k_; }
  Mode mode() const { return mode_; }
  const std::vector<Clause>& clauses() const { return clauses_; }
  const std::vector<SpherePoint>& complement_points() const { return complement_; }

  friend bool operator==(const PolyhedralSet&, const PolyhedralSet&) = default;

 private:
  PolyhedralSet() = default;

  std::size_t k_ = 0;
  Mode mode_ = Mode::Clauses;
  std::vector<Clause> clauses_;
  std::vector<SpherePoint> complement_;
};

/// Exact membership; throws DimensionMismatch.
bool polyhedral_contains(const PolyhedralSet& set, const SpherePoint& p);

/// A natural number or infinity. Used for m(chi) and for finiteness and
/// connectivity lengths; min saturates at infinity.
class ExtNat {
 public:
  constexpr ExtNat() = default;
  static constexpr ExtNat infinity() { return ExtNat(); }
  static constexpr ExtNat finite(std::uint64_t n) { return ExtNat(n); }

  constexpr bool is_infinite() const { return !value_.has_value(); }
  constexpr bool is_finite() const { return value_.has_value(); }
  /// Precondition: finite.
  std::uint64_t value() const;

  friend constexpr bool operator==(const ExtNat&, const ExtNat&) = default;
  friend constexpr std::strong_ordering operator<=>(const ExtNat& a, const ExtNat& b) {
    if (a.is_infinite() || b.is_infinite()) {
      return a.is_infinite() <=> b.is_infinite();
    }
    return *a.value_ <=> *b.value_;
  }
  /// n <= x for a plain degree n.
  friend constexpr bool operator<=(std::uint64_t n, const ExtNat& x) {
    return x.is_infinite() || n <= *x.value_;
  }
  friend constexpr bool operator<(std::uint64_t n, const ExtNat& x) {
    return x.is_infinite() || n < *x.value_;
  }

 private:
  constexpr explicit ExtNat(std::uint64_t n) : value_(n) {}
  std::optional<std::uint64_t> value_;
};

ExtNat min(const ExtNat& a, const ExtNat& b);
std::string to_string(const ExtNat& x);

using MValue = ExtNat;

/// True iff chi = sum of lambda_i v_i over `rays` with every lambda_i > 0.
/// For chi = 0 this asks for a nontrivial positive relation; an empty ray list
/// never qualifies. Decided by exact linear programming.
bool strictly_representable(std::span<const SpherePoint> rays, const Character& chi);

/// Minimal number of distinct rays of A minus {[chi]} whose strictly positive
/// combination equals chi; infinity when no such combination exists.
ExtNat minimal_ray_count(std::span<const SpherePoint> points, const Character& chi);

/// m(chi) = minimal_ray_count - 1. Representability with exactly k summands is
/// monotone upward in k (split a summand into positive multiples of its own
/// ray), so the sup of the non-representable k is one less than the minimum.
MValue m_value(std::span<const SpherePoint> points, const Character& chi);

}  // namespace sigma::sphere
