#include "json_io.hpp"

#include "sigma/error.hpp"

#include <cmath>
#include <cstdio>

namespace sigma::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::InvalidInput, what); }

const json& array_field(const json& j, const char* name) {
  const json& a = field(j, name);
  if (!a.is_array()) bad(std::string("\"") + name + "\" must be an array");
  return a;
}

std::string string_from(const json& j, const char* what) {
  if (!j.is_string()) bad(std::string(what) + " must be a string");
  return j.get<std::string>();
}

long long integer_from(const json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<long long>();
}

std::vector<double> reals_from(const json& j) {
  if (!j.is_array()) bad("expected an array of numbers");
  std::vector<double> out;
  for (const auto& x : j) out.push_back(real_from(x));
  return out;
}

json reals_json(const std::vector<double>& v) {
  json a = json::array();
  for (double x : v) a.push_back(real_json(x));
  return a;
}

bool is_tree(const cat0::ModelSpace& m) { return std::holds_alternative<cat0::TreeDescriptor>(m); }

const cat0::TreeDescriptor& tree_of(const cat0::ModelSpace& m) { return std::get<cat0::TreeDescriptor>(m); }

}  // namespace

const json& field(const json& j, const char* name) {
  if (!j.is_object()) bad(std::string("expected an object with \"") + name + "\"");
  const auto it = j.find(name);
  if (it == j.end()) bad(std::string("missing \"") + name + "\"");
  return *it;
}

// ---------------------------------------------------------------- numbers

Rational rational_from(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_number_float()) return rational_from_double(j.get<double>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const Error&) {
      throw;
    } catch (const std::exception&) {
      bad("not a rational: " + j.get<std::string>());
    }
  }
  bad("expected a rational number");
}

json to_json(const Rational& q) {
  if (denominator(q) == 1 && abs(numerator(q)) < Integer(1LL << 53)) return numerator(q).convert_to<long long>();
  return to_string(q);
}

double real_from(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "inf") return cat0::kInfinity;
    if (s == "-inf") return -cat0::kInfinity;
    return to_double(rational_from(j));
  }
  bad("expected a real number");
}

json real_json(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  double y = std::strtod(buf, nullptr);
  if (y == 0) y = 0;  // no negative zero
  return y;
}

sphere::ExtNat extnat_from(const json& j) {
  if (j.is_string() && j.get<std::string>() == "inf") return sphere::ExtNat::infinity();
  if (j.is_number_unsigned()) return sphere::ExtNat::finite(j.get<std::uint64_t>());
  if (j.is_number_integer() && j.get<long long>() >= 0)
    return sphere::ExtNat::finite(static_cast<std::uint64_t>(j.get<long long>()));
  bad("expected a nonnegative integer or \"inf\"");
}

json to_json(const sphere::ExtNat& x) {
  if (x.is_infinite()) return "inf";
  return x.value();
}

// ---------------------------------------------------------------- spaces

cat0::ModelSpace space_from(const json& j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "H2") return cat0::HyperbolicPlane{};
    if (s.size() >= 2 && s[0] == 'E') {
      try {
        std::size_t used = 0;
        const int k = std::stoi(s.substr(1), &used);
        if (used == s.size() - 1 && k >= 1 && k <= 64) return cat0::Euclidean{static_cast<std::size_t>(k)};
      } catch (const std::exception&) {
      }
    }
    bad("unknown space \"" + s + "\"");
  }
  const std::string type = string_from(field(j, "type"), "space type");
  const auto param = [&](const char* name) {
    const long long v = integer_from(field(j, name), name);
    if (v < 1 || v > 36) bad(std::string("\"") + name + "\" out of range");
    return static_cast<int>(v);
  };
  if (type == "regular") return cat0::TreeDescriptor::regular(param("degree"));
  if (type == "cayley") return cat0::TreeDescriptor::cayley(param("rank"));
  if (type == "hnn") return cat0::TreeDescriptor::hnn(param("index"));
  bad("unknown space type \"" + type + "\"");
}

json to_json(const cat0::ModelSpace& m) {
  if (const auto* e = std::get_if<cat0::Euclidean>(&m)) return "E" + std::to_string(e->dim);
  if (std::holds_alternative<cat0::HyperbolicPlane>(m)) return "H2";
  const auto& t = tree_of(m);
  switch (t.kind()) {
    case cat0::TreeDescriptor::Kind::Regular: return {{"type", "regular"}, {"degree", t.parameter()}};
    case cat0::TreeDescriptor::Kind::Cayley: return {{"type", "cayley"}, {"rank", t.parameter()}};
    case cat0::TreeDescriptor::Kind::Hnn: return {{"type", "hnn"}, {"index", t.parameter()}};
  }
  return nullptr;
}

cat0::Point point_from(const cat0::ModelSpace& m, const json& j) {
  cat0::Point p;
  if (is_tree(m)) {
    cat0::TreePoint t;
    t.address = string_from(field(j, "address"), "address");
    t.offset = j.contains("offset") ? rational_from(j["offset"]) : Rational(0);
    p = t;
  } else if (std::holds_alternative<cat0::HyperbolicPlane>(m)) {
    const auto c = reals_from(field(j, "coords"));
    if (c.size() != 2) bad("a point of H2 has two coordinates");
    p = cat0::HyperbolicPoint{c[0], c[1]};
  } else {
    p = cat0::EuclideanPoint{reals_from(field(j, "coords"))};
  }
  cat0::validate(m, p);
  return p;
}

json to_json(const cat0::Point& p) {
  if (const auto* e = std::get_if<cat0::EuclideanPoint>(&p)) return {{"coords", reals_json(e->x)}};
  if (const auto* h = std::get_if<cat0::HyperbolicPoint>(&p))
    return {{"coords", json::array({real_json(h->x), real_json(h->y)})}};
  const auto& t = std::get<cat0::TreePoint>(p);
  return {{"address", t.address}, {"offset", to_string(t.offset)}};
}

cat0::BoundaryPoint boundary_from(const cat0::ModelSpace& m, const json& j) {
  cat0::BoundaryPoint e;
  if (is_tree(m)) {
    e = cat0::tree::canonical_end(tree_of(m), string_from(field(j, "prefix"), "prefix"),
                                  string_from(field(j, "period"), "period"));
  } else if (std::holds_alternative<cat0::HyperbolicPlane>(m)) {
    if (j.is_string() && j.get<std::string>() == "inf") {
      e = cat0::HyperbolicBoundary::infinity();
    } else {
      const double x = real_from(field(j, "real"));
      if (!std::isfinite(x)) bad("a real boundary point must be finite");
      e = cat0::HyperbolicBoundary::real(x);
    }
  } else {
    e = cat0::make_direction(reals_from(field(j, "direction")));
  }
  cat0::validate(m, e);
  return e;
}

json to_json(const cat0::BoundaryPoint& e) {
  if (const auto* d = std::get_if<cat0::EuclideanDirection>(&e)) return {{"direction", reals_json(d->u)}};
  if (const auto* h = std::get_if<cat0::HyperbolicBoundary>(&e)) {
    if (h->at_infinity) return "inf";
    return {{"real", real_json(h->x)}};
  }
  const auto& t = std::get<cat0::TreeEnd>(e);
  return {{"prefix", t.prefix}, {"period", t.period}};
}

cat0::GeneralizedRay ray_from(const cat0::ModelSpace& m, const json& j) {
  const cat0::Point base = point_from(m, field(j, "base"));
  if (j.contains("to")) return cat0::ray_from(m, base, point_from(m, j["to"]));
  return cat0::ray_from(m, base, boundary_from(m, field(j, "end")));
}

// ---------------------------------------------------------------- actions

actions::Isometry isometry_from(const cat0::ModelSpace& m, const json& j) {
  actions::Isometry f;
  if (std::holds_alternative<cat0::Euclidean>(m)) {
    actions::EuclideanIsometry e;
    const std::size_t k = std::get<cat0::Euclidean>(m).dim;
    if (j.contains("rotation")) {
      for (const auto& row : j["rotation"]) e.rotation.push_back(reals_from(row));
    } else {
      e.rotation.assign(k, std::vector<double>(k, 0.0));
      for (std::size_t i = 0; i < k; ++i) e.rotation[i][i] = 1;
    }
    e.translation = j.contains("translation") ? reals_from(j["translation"]) : std::vector<double>(k, 0.0);
    f = e;
  } else if (std::holds_alternative<cat0::HyperbolicPlane>(m)) {
    const auto c = reals_from(field(j, "mobius"));
    if (c.size() != 4) bad("\"mobius\" takes [a, b, c, d]");
    f = actions::MobiusIsometry{c[0], c[1], c[2], c[3]};
  } else if (tree_of(m).kind() == cat0::TreeDescriptor::Kind::Hnn) {
    f = actions::HnnIsometry{integer_from(field(j, "power"), "power"), rational_from(field(j, "shift"))};
  } else {
    f = actions::CayleyIsometry{string_from(field(j, "word"), "word")};
  }
  actions::validate(m, f);
  return f;
}

json to_json(const actions::Isometry& f) {
  if (const auto* e = std::get_if<actions::EuclideanIsometry>(&f)) {
    json rot = json::array();
    for (const auto& row : e->rotation) rot.push_back(reals_json(row));
    return {{"rotation", rot}, {"translation", reals_json(e->translation)}};
  }
  if (const auto* h = std::get_if<actions::MobiusIsometry>(&f))
    return {{"mobius", json::array({real_json(h->a), real_json(h->b), real_json(h->c), real_json(h->d)})}};
  if (const auto* c = std::get_if<actions::CayleyIsometry>(&f)) return {{"word", c->word}};
  const auto& a = std::get<actions::HnnIsometry>(f);
  return {{"power", a.power}, {"shift", to_string(a.shift)}};
}

actions::GroupAction action_from(const json& j) {
  const cat0::ModelSpace m = space_from(field(j, "space"));
  const json& gens = field(j, "generators");
  if (!gens.is_object()) bad("\"generators\" must be an object");
  std::map<char, actions::Isometry> out;
  for (const auto& [name, value] : gens.items()) {
    if (name.size() != 1 || name[0] < 'a' || name[0] > 'z') bad("generator names are single lowercase letters");
    out.emplace(name[0], isometry_from(m, value));
  }
  return actions::GroupAction(m, std::move(out));
}

// ---------------------------------------------------------------- sphere

sphere::SpherePoint sphere_point_from(const json& j) { return sphere::normalize_ray(character_from(j)); }

json to_json(const sphere::SpherePoint& p) {
  json a = json::array();
  for (const auto& x : p.vector()) a.push_back(to_json(Rational(x)));
  return a;
}

sphere::Character character_from(const json& j) {
  if (!j.is_array() || j.empty()) bad("a character is a nonempty array of rationals");
  RationalVector v;
  for (const auto& x : j) v.push_back(rational_from(x));
  return sphere::Character(v);
}

json to_json(const sphere::Character& c) {
  json a = json::array();
  for (const auto& x : c.coords()) a.push_back(to_json(x));
  return a;
}

sphere::PolyhedralSet polyhedral_from(const json& j) {
  const long long k = integer_from(field(j, "k"), "k");
  if (k < 1) bad("\"k\" must be positive");
  const auto dim = static_cast<std::size_t>(k);
  const auto point = [&](const json& x) {
    auto p = sphere_point_from(x);
    if (p.dim() != dim) throw Error(ErrorCode::DimensionMismatch, "point of the wrong dimension");
    return p;
  };
  if (j.contains("complement")) {
    std::vector<sphere::SpherePoint> pts;
    for (const auto& x : array_field(j, "complement")) pts.push_back(point(x));
    return sphere::PolyhedralSet::complement_of(dim, pts);
  }
  std::vector<sphere::PolyhedralSet::Clause> clauses;
  for (const auto& c : array_field(j, "clauses")) {
    if (!c.is_array()) bad("a clause is an array of hemisphere normals");
    sphere::PolyhedralSet::Clause clause;
    for (const auto& n : c) clause.push_back({point(n)});
    clauses.push_back(clause);
  }
  return sphere::PolyhedralSet(dim, clauses);
}

json to_json(const sphere::PolyhedralSet& s) {
  json out{{"k", s.dim()}};
  if (s.mode() == sphere::PolyhedralSet::Mode::FiniteComplement) {
    json pts = json::array();
    for (const auto& p : s.complement_points()) pts.push_back(to_json(p));
    out["complement"] = pts;
    return out;
  }
  json clauses = json::array();
  for (const auto& c : s.clauses()) {
    json cl = json::array();
    for (const auto& h : c) cl.push_back(to_json(h.normal));
    clauses.push_back(cl);
  }
  out["clauses"] = clauses;
  return out;
}

// ---------------------------------------------------------------- raag

raag::SimpleGraph graph_from(const json& j) {
  std::vector<std::string> names;
  const json& vs = field(j, "vertices");
  if (vs.is_number_integer()) {
    const long long n = vs.get<long long>();
    if (n < 0 || n > 4096) bad("vertex count out of range");
    for (long long i = 0; i < n; ++i) names.push_back(std::to_string(i));
  } else {
    if (!vs.is_array()) bad("\"vertices\" must be a count or an array of names");
    for (const auto& v : vs) names.push_back(v.is_string() ? v.get<std::string>() : v.dump());
  }
  const auto index = [&](const json& v) -> std::size_t {
    if (v.is_number_integer()) {
      const long long i = v.get<long long>();
      if (i < 0 || static_cast<std::size_t>(i) >= names.size())
        throw Error(ErrorCode::UnknownVertex, "vertex index " + std::to_string(i));
      return static_cast<std::size_t>(i);
    }
    const std::string name = string_from(v, "vertex");
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == name) return i;
    throw Error(ErrorCode::UnknownVertex, "unknown vertex \"" + name + "\"");
  };
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  if (j.contains("edges"))
    for (const auto& e : array_field(j, "edges")) {
      if (!e.is_array() || e.size() != 2) bad("an edge is a pair");
      edges.emplace_back(index(e[0]), index(e[1]));
    }
  return raag::SimpleGraph(names, edges);
}

raag::SimplicialComplex complex_from(const json& j) {
  const long long n = integer_from(field(j, "vertices"), "vertices");
  if (n < 0) bad("vertex count must be nonnegative");
  std::vector<raag::Simplex> simplices;
  for (const auto& s : array_field(j, "simplices")) {
    if (!s.is_array()) bad("a simplex is an array of vertex indices");
    raag::Simplex sx;
    for (const auto& v : s) {
      const long long i = integer_from(v, "simplex vertex");
      if (i < 0) bad("negative vertex index");
      sx.push_back(static_cast<std::size_t>(i));
    }
    simplices.push_back(sx);
  }
  return raag::SimplicialComplex(static_cast<std::size_t>(n), simplices);
}

json to_json(const raag::HomologyProfile& h) {
  json out = json::array();
  for (const auto& d : h.degrees) {
    json torsion = json::array();
    for (const auto& t : d.torsion) torsion.push_back(t.str());
    out.push_back({{"degree", d.degree}, {"betti", d.betti}, {"reduced_betti", d.reduced_betti}, {"torsion", torsion}});
  }
  return out;
}

json to_json(const raag::ConnectivityVerdict& v) {
  json out{{"level", v.level},
           {"components", v.components},
           {"connected", v.connected},
           {"homology_vanishing", v.homology_vanishing},
           {"overall", raag::to_string(v.overall)}};
  out["simply_connected"] = v.simply_connected ? json(raag::to_string(*v.simply_connected)) : json(nullptr);
  out["first_nonvanishing"] = v.first_nonvanishing ? json(*v.first_nonvanishing) : json(nullptr);
  if (v.certificate) {
    const auto& c = *v.certificate;
    out["tietze"] = {{"generators", c.generators},
                     {"relators", c.relators},
                     {"steps", c.steps},
                     {"trivial", c.trivial},
                     {"remaining_generators", c.remaining_generators}};
  }
  return out;
}

// ---------------------------------------------------------------- tree_sigma

tree_sigma::GraphOfGroupsSummary summary_from(const json& j) {
  tree_sigma::GraphOfGroupsSummary s;
  s.fl_G = extnat_from(field(j, "fl_G"));
  s.fl_Gcal = extnat_from(field(j, "fl_Gcal"));
  const json& fixed = field(j, "fixed_end");
  if (!fixed.is_boolean()) bad("\"fixed_end\" must be a boolean");
  s.has_fixed_end = fixed.get<bool>();
  if (j.contains("cl_chi") && !j["cl_chi"].is_null()) s.cl_chi = extnat_from(j["cl_chi"]);
  s.validate();
  return s;
}

json to_json(const tree_sigma::GraphOfGroupsSummary& s) {
  json out{{"fl_G", to_json(s.fl_G)}, {"fl_Gcal", to_json(s.fl_Gcal)}, {"fixed_end", s.has_fixed_end}};
  if (s.cl_chi) out["cl_chi"] = to_json(*s.cl_chi);
  return out;
}

tree_sigma::MFPRData mfpr_from(const json& j) {
  tree_sigma::MFPRData d;
  const long long k = integer_from(field(j, "k"), "k");
  if (k < 1) bad("\"k\" must be positive");
  d.k = static_cast<std::size_t>(k);
  for (const auto& p : array_field(j, "A")) d.a.push_back(sphere_point_from(p));
  d.chi = character_from(field(j, "chi"));
  d.validate();
  return d;
}

json to_json(const tree_sigma::MFPRData& d) {
  json a = json::array();
  for (const auto& p : d.a) a.push_back(to_json(p));
  return {{"k", d.k}, {"A", a}, {"chi", to_json(d.chi)}};
}

json to_json(const tree_sigma::SigmaTable& t) {
  json ranges = json::array();
  for (const auto& r : t.ranges)
    ranges.push_back({{"value", tree_sigma::to_string(r.value)}, {"from", r.lo}, {"to", to_json(r.hi)}});
  return {{"fl_G", to_json(t.fl_G)}, {"ranges", ranges}};
}

}  // namespace sigma::io
