#pragma once

// Sigma^n of an action of a free abelian group by translations of E^k.
//
// With N the span of the translation vectors and N' its orthogonal
// complement, Sigma^n(rho) = Sigma^n(rho_N) * dN' - (empty * dN'): the
// directions with nonzero projection to N whose endpoint character lies in
// Sigma^n(G). The endpoint character of a direction e is chi_e(g_i) = <w_i, e>.

#include "sigma/actions.hpp"
#include "sigma/character_sphere.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sigma::sphere {

/// G = Z^r on generators g_1..g_r acting by x -> x + w_i on E^k.
struct EuclideanTranslationAction {
  std::size_t dim = 0;
  std::vector<char> generators;
  std::vector<RationalVector> translations;

  /// Exact translation parts of a Euclidean action; throws
  /// NotTranslationAction if a generator rotates.
  static EuclideanTranslationAction from(const actions::GroupAction& rho);
};

struct SigmaDescription {
  std::size_t ambient_dim = 0;
  std::size_t degree = 0;
  std::vector<RationalVector> n_basis;       // orthogonal basis of N
  std::vector<RationalVector> n_perp_basis;  // orthogonal basis of N'
  std::vector<RationalVector> translations;
  PolyhedralSet sigma_g = PolyhedralSet::empty(0);

  /// chi_{rho,e} in the basis of Hom(G, R) dual to the generators.
  Character endpoint_character(const RationalVector& e) const;
  /// mu(e) = [chi_{rho,e}], or nullopt when chi_{rho,e} = 0.
  std::optional<SpherePoint> mu(const RationalVector& e) const;
  /// Membership of the direction e (any nonzero vector on the ray).
  bool contains(const RationalVector& e) const;
  std::string describe() const;
};

SigmaDescription euclidean_join_decomposition(const EuclideanTranslationAction& rho, const PolyhedralSet& sigma_g,
                                              std::size_t n);

}  // namespace sigma::sphere
