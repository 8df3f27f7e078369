#pragma once

// JSON encodings of the library types; the schemas are in docs/formats.md.
// Decoders throw sigma::Error(InvalidInput) on malformed input.

#include "sigma/actions.hpp"
#include "sigma/character_sphere.hpp"
#include "sigma/raag.hpp"
#include "sigma/tree_sigma.hpp"

#include "json.hpp"

namespace sigma::io {

using nlohmann::json;

// numbers
Rational rational_from(const json& j);  // "p/q", "1.25", integer, or a double (exact binary value)
json to_json(const Rational& q);         // integer when possible, else "p/q"
double real_from(const json& j);
json real_json(double x);                // rounded to 12 significant digits, "inf"/"-inf"
sphere::ExtNat extnat_from(const json& j);  // nonnegative integer or "inf"
json to_json(const sphere::ExtNat& x);

// spaces
cat0::ModelSpace space_from(const json& j);  // "E2", "E3", ..., "H2", or a tree descriptor object
json to_json(const cat0::ModelSpace& m);
cat0::Point point_from(const cat0::ModelSpace& m, const json& j);
json to_json(const cat0::Point& p);
cat0::BoundaryPoint boundary_from(const cat0::ModelSpace& m, const json& j);
json to_json(const cat0::BoundaryPoint& e);
/// {"base": P, "end": E} or {"base": P, "to": P}.
cat0::GeneralizedRay ray_from(const cat0::ModelSpace& m, const json& j);

// actions
actions::Isometry isometry_from(const cat0::ModelSpace& m, const json& j);
json to_json(const actions::Isometry& f);
/// {"space": S, "generators": {"a": isometry, ...}}
actions::GroupAction action_from(const json& j);

// sphere
sphere::SpherePoint sphere_point_from(const json& j);  // integer vector, normalized to a primitive ray
json to_json(const sphere::SpherePoint& p);
sphere::Character character_from(const json& j);  // vector of rationals
json to_json(const sphere::Character& c);
/// {"k": n, "clauses": [[normal, ...], ...]} or {"k": n, "complement": [point, ...]}
sphere::PolyhedralSet polyhedral_from(const json& j);
json to_json(const sphere::PolyhedralSet& s);

// raag
/// {"vertices": [names], "edges": [[i, j], ...]} with names or indices as endpoints.
raag::SimpleGraph graph_from(const json& j);
/// {"vertices": n, "simplices": [[i, j, ...], ...]}
raag::SimplicialComplex complex_from(const json& j);
json to_json(const raag::HomologyProfile& h);
json to_json(const raag::ConnectivityVerdict& v);

// tree_sigma
tree_sigma::GraphOfGroupsSummary summary_from(const json& j);
json to_json(const tree_sigma::GraphOfGroupsSummary& s);
/// {"k": n, "A": [point, ...], "chi": character}
tree_sigma::MFPRData mfpr_from(const json& j);
json to_json(const tree_sigma::MFPRData& d);
json to_json(const tree_sigma::SigmaTable& t);

/// Member access with a readable error.
const json& field(const json& j, const char* name);

}  // namespace sigma::io
