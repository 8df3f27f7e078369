#include "sigma/join.hpp"

#include <sstream>

namespace sigma::sphere {
namespace {

Rational dot(const RationalVector& a, const RationalVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero(const RationalVector& v) {
  for (const auto& c : v)
    if (c != 0) return false;
  return true;
}

// Exact Gram-Schmidt; drops dependent vectors.
std::vector<RationalVector> orthogonalize(const std::vector<RationalVector>& vs) {
  std::vector<RationalVector> basis;
  for (RationalVector v : vs) {
    for (const auto& b : basis) {
      const Rational c = dot(v, b) / dot(b, b);
      for (std::size_t i = 0; i < v.size(); ++i) v[i] -= c * b[i];
    }
    if (!is_zero(v)) basis.push_back(std::move(v));
  }
  return basis;
}

std::string vec(const RationalVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + sigma::to_string(v[i]);
  return s + ")";
}

}  // namespace

EuclideanTranslationAction EuclideanTranslationAction::from(const actions::GroupAction& rho) {
  const auto* e = std::get_if<cat0::Euclidean>(&rho.space());
  if (!e) throw Error(ErrorCode::NotTranslationAction, "action is not on a Euclidean space");
  EuclideanTranslationAction out;
  out.dim = e->dim;
  for (const auto& [name, f] : rho.generators()) {
    const auto& iso = std::get<actions::EuclideanIsometry>(f);
    for (std::size_t i = 0; i < e->dim; ++i)
      for (std::size_t j = 0; j < e->dim; ++j)
        if (iso.rotation[i][j] != (i == j ? 1.0 : 0.0))
          throw Error(ErrorCode::NotTranslationAction, std::string("generator '") + name + "' is not a translation");
    RationalVector w;
    for (double x : iso.translation) w.push_back(rational_from_double(x));
    out.generators.push_back(name);
    out.translations.push_back(std::move(w));
  }
  return out;
}

Character SigmaDescription::endpoint_character(const RationalVector& e) const {
  if (e.size() != ambient_dim) throw Error(ErrorCode::DimensionMismatch, "direction dimension");
  RationalVector chi;
  for (const auto& w : translations) chi.push_back(dot(w, e));
  return Character(chi);
}

std::optional<SpherePoint> SigmaDescription::mu(const RationalVector& e) const {
  if (is_zero(e)) throw Error(ErrorCode::InvalidInput, "a direction must be nonzero");
  const Character chi = endpoint_character(e);
  if (chi.is_zero()) return std::nullopt;
  return normalize_ray(chi);
}

bool SigmaDescription::contains(const RationalVector& e) const {
  const auto p = mu(e);
  return p && polyhedral_contains(sigma_g, *p);
}

std::string SigmaDescription::describe() const {
  std::ostringstream out;
  out << "Sigma^" << degree << "(rho) = Sigma^" << degree << "(rho_N) * dN' - dN' in S^" << ambient_dim - 1
      << "; dim N = " << n_basis.size() << ", dim N' = " << n_perp_basis.size();
  if (n_basis.empty()) out << "; N = 0 so the set is empty";
  out << "; N basis:";
  for (const auto& b : n_basis) out << ' ' << vec(b);
  out << "; N' basis:";
  for (const auto& b : n_perp_basis) out << ' ' << vec(b);
  return out.str();
}

SigmaDescription euclidean_join_decomposition(const EuclideanTranslationAction& rho, const PolyhedralSet& sigma_g,
                                              std::size_t n) {
  if (sigma_g.dim() != rho.translations.size())
    throw Error(ErrorCode::DimensionMismatch, "Sigma(G) must live in dimension = number of generators");
  for (const auto& w : rho.translations)
    if (w.size() != rho.dim) throw Error(ErrorCode::DimensionMismatch, "translation dimension");
  SigmaDescription d;
  d.ambient_dim = rho.dim;
  d.degree = n;
  d.translations = rho.translations;
  d.sigma_g = sigma_g;
  d.n_basis = orthogonalize(rho.translations);
  // N' from the standard basis, orthogonalized after N.
  std::vector<RationalVector> all = d.n_basis;
  for (std::size_t i = 0; i < rho.dim; ++i) {
    RationalVector e(rho.dim, Rational(0));
    e[i] = 1;
    all.push_back(e);
  }
  const auto full = orthogonalize(all);
  d.n_perp_basis.assign(full.begin() + static_cast<std::ptrdiff_t>(d.n_basis.size()), full.end());
  return d;
}

}  // namespace sigma::sphere
