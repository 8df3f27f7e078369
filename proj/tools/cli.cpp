#include "cli.hpp"

#include "json_io.hpp"
#include "svg.hpp"
#include "verify.hpp"

#include "sigma/error.hpp"
#include "sigma/join.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace sigma::cli {

using io::json;

namespace {

struct Options {
  std::string space;
  std::string graph;
  std::string data;
  std::optional<std::uint64_t> n;
  unsigned long long seed = 1;
  double tol = cat0::kTolerance;
  std::size_t depth = 8;
  std::string out;
  std::string svg;
  // command specific
  std::string format = "json";
  bool table = false;
  bool random = false;
  std::size_t k = 2;
  std::size_t points = 3;
  bool presentable = false;
  std::string suite = "all";
  std::size_t cases = 100;
  std::string audit_kind;
};

enum class Level { Quiet, Info, Debug };

Level log_level() {
  const char* v = std::getenv("SIGMA_LOG");
  if (!v) return Level::Quiet;
  const std::string s = v;
  if (s == "debug") return Level::Debug;
  if (s == "info") return Level::Info;
  return Level::Quiet;
}

class Context {
 public:
  Context(const Options& o, std::ostream& out, std::ostream& err) : opt(o), out_(out), err_(err), level_(log_level()) {}

  void log(Level at, const std::string& msg) const {
    if (level_ >= at) err_ << "[sigma] " << msg << "\n";
  }

  json read_data(const std::string& path, const char* flag) const {
    if (path.empty()) throw Error(ErrorCode::InvalidInput, std::string("missing ") + flag);
    log(Level::Info, std::string("reading ") + path);
    const std::string text = read_text(path);
    try {
      return json::parse(text);
    } catch (const json::parse_error& e) {
      throw Error(ErrorCode::InvalidInput, path + ": " + e.what());
    }
  }

  static std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::InvalidInput, "cannot read " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }

  void write_text(const std::string& path, const std::string& text) const {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error(ErrorCode::InvalidInput, "cannot write " + path);
    f << text;
    log(Level::Info, "wrote " + path);
  }

  void emit_text(const std::string& text) const {
    if (opt.out.empty()) out_ << text;
    else write_text(opt.out, text);
  }

  void emit(json report, const char* command) const {
    report["command"] = command;
    report["seed"] = opt.seed;
    emit_text(report.dump(2) + "\n");
  }

  /// --space overrides the "space" member of the data.
  cat0::ModelSpace space(const json& data) const {
    if (!opt.space.empty()) {
      const bool object = opt.space.front() == '{';
      json j;
      try {
        j = object ? json::parse(opt.space) : json(opt.space);
      } catch (const json::parse_error& e) {
        throw Error(ErrorCode::InvalidInput, std::string("--space: ") + e.what());
      }
      return io::space_from(j);
    }
    return io::space_from(io::field(data, "space"));
  }

  const Options& opt;

 private:
  std::ostream& out_;
  std::ostream& err_;
  Level level_;
};

json ray_json(const cat0::GeneralizedRay& r) {
  json j{{"base", io::to_json(r.base)}, {"mu", io::real_json(r.mu)}};
  if (r.degenerate()) {
    j["to"] = io::to_json(r.interior_end());
    j["mu_exact"] = to_string(r.exact_mu);
  } else {
    j["end"] = io::to_json(r.boundary_end());
  }
  return j;
}

bool is_tree(const cat0::ModelSpace& m) { return std::holds_alternative<cat0::TreeDescriptor>(m); }

std::vector<double> schedule_from(const json& j) {
  std::vector<double> s;
  for (const auto& t : j) s.push_back(io::real_from(t));
  return s;
}

// ---------------------------------------------------------------- commands

int cmd_busemann(const Context& c) {
  const json data = c.read_data(c.opt.data, "--data");
  const auto m = c.space(data);
  const auto ray = io::ray_from(m, io::field(data, "ray"));
  json values = json::array(), audits = json::array();
  bool pass = true;
  for (const auto& pj : io::field(data, "points")) {
    const auto p = io::point_from(m, pj);
    json v{{"point", io::to_json(p)}, {"busemann", io::real_json(cat0::busemann(m, ray, p))}};
    if (is_tree(m)) v["exact"] = to_string(cat0::busemann_exact(m, ray, p));
    if (data.contains("level"))
      v["in_horoball"] = cat0::horoball_contains(m, {ray, io::real_from(data["level"])}, p);
    values.push_back(v);
    if (data.contains("schedule")) {
      const auto a = cat0::busemann_limit_audit(m, ray, p, schedule_from(data["schedule"]), c.opt.tol);
      json samples = json::array();
      for (const auto& s : a.samples) samples.push_back(json::array({io::real_json(s.t), io::real_json(s.value)}));
      audits.push_back({{"point", io::to_json(p)},
                        {"monotone", a.monotone},
                        {"bounded", a.bounded},
                        {"bound", io::real_json(a.bound)},
                        {"closed_form", io::real_json(a.closed_form)},
                        {"final_gap", io::real_json(a.final_gap)},
                        {"samples", samples}});
      pass = pass && a.monotone && a.bounded;
    }
  }
  json report{{"space", io::to_json(m)}, {"ray", ray_json(ray)}, {"values", values}};
  if (data.contains("schedule")) report["audits"] = audits;
  report["pass"] = pass;
  c.emit(report, "busemann");
  return pass ? 0 : 1;
}

int cmd_tits(const Context& c) {
  const json data = c.read_data(c.opt.data, "--data");
  const auto m = c.space(data);
  json pairs = json::array();
  for (const auto& pj : io::field(data, "pairs")) {
    if (!pj.is_array() || pj.size() != 2) throw Error(ErrorCode::InvalidInput, "a pair has two boundary points");
    const auto a = io::boundary_from(m, pj[0]), b = io::boundary_from(m, pj[1]);
    pairs.push_back({{"a", io::to_json(a)},
                     {"b", io::to_json(b)},
                     {"angular", io::real_json(cat0::angular_distance(m, a, b))},
                     {"tits", io::real_json(cat0::tits_distance(m, a, b))}});
  }
  c.emit({{"space", io::to_json(m)}, {"pairs", pairs}}, "tits");
  return 0;
}

json sphere_report(const Context& c, const json& data) {
  const auto set = io::polyhedral_from(data["set"]);
  json members = json::array();
  if (data.contains("points"))
    for (const auto& pj : data["points"]) {
      const auto p = io::sphere_point_from(pj);
      members.push_back({{"point", io::to_json(p)}, {"member", sphere::polyhedral_contains(set, p)}});
    }
  if (!c.opt.svg.empty()) c.write_text(c.opt.svg, io::sphere_svg(set));
  return {{"set", io::to_json(set)}, {"members", members}};
}

json join_report(const json& data) {
  const auto rho = io::action_from(io::field(data, "action"));
  const auto t = sphere::EuclideanTranslationAction::from(rho);
  const auto sigma_g = io::polyhedral_from(io::field(data, "sigma_g"));
  const auto n = io::field(data, "n").get<std::size_t>();
  const auto d = sphere::euclidean_join_decomposition(t, sigma_g, n);
  const auto vectors = [](const std::vector<RationalVector>& vs) {
    json a = json::array();
    for (const auto& v : vs) a.push_back(io::to_json(sphere::Character(v)));
    return a;
  };
  json dirs = json::array();
  if (data.contains("directions"))
    for (const auto& dj : data["directions"]) {
      const auto e = io::character_from(dj).coords();
      const auto mu = d.mu(e);
      dirs.push_back({{"direction", dj},
                      {"endpoint_character", io::to_json(d.endpoint_character(e))},
                      {"mu", mu ? io::to_json(*mu) : json(nullptr)},
                      {"member", d.contains(e)}});
    }
  return {{"n_basis", vectors(d.n_basis)},
          {"n_perp_basis", vectors(d.n_perp_basis)},
          {"description", d.describe()},
          {"directions", dirs}};
}

int cmd_character(const Context& c) {
  const json data = c.read_data(c.opt.data, "--data");
  json report = json::object();
  if (data.contains("set")) report["sphere"] = sphere_report(c, data);
  if (data.contains("sigma_g")) report["join"] = join_report(data);
  if (data.contains("end")) {
    const auto rho = io::action_from(io::field(data, "action"));
    const auto& m = rho.space();
    const auto e = io::boundary_from(m, data["end"]);
    const auto base = io::point_from(m, io::field(data, "base"));
    json values = json::array();
    bool fixed = true;
    for (const auto& wj : io::field(data, "words")) {
      const std::string w = wj.get<std::string>();
      json v{{"word", w}, {"psi", io::real_json(actions::psi_cocycle(rho, e, w, base))}};
      if (is_tree(m)) v["psi_exact"] = to_string(actions::psi_cocycle_exact(rho, e, w, base));
      try {
        v["character"] = io::real_json(actions::character_at_end(rho, e, base, w));
        if (is_tree(m)) v["character_exact"] = to_string(actions::character_at_end_exact(rho, e, base, w));
      } catch (const Error& err) {
        if (err.code() != ErrorCode::EndNotFixed) throw;
        v["character"] = nullptr;
        fixed = false;
      }
      try {
        const auto k = actions::classify_isometry(rho, w, c.opt.depth);
        v["kind"] = actions::to_string(k.kind);
        v["translation_length"] = io::real_json(k.translation_length);
      } catch (const Error& err) {
        c.log(Level::Debug, std::string("no classification for ") + w + ": " + err.what());
        v["kind"] = nullptr;
      }
      values.push_back(v);
    }
    report["space"] = io::to_json(m);
    report["end"] = io::to_json(e);
    report["base"] = io::to_json(base);
    report["end_fixed"] = fixed;
    report["values"] = values;
  }
  if (report.empty()) throw Error(ErrorCode::InvalidInput, "character data needs \"end\", \"set\" or \"sigma_g\"");
  c.emit(report, "character");
  return 0;
}

json shift_json(const actions::ShiftReport& r) {
  json entries = json::array();
  for (const auto& e : r.entries()) {
    json x{{"label", e.label}, {"shift", io::real_json(e.shift)}, {"displacement", io::real_json(e.displacement)}};
    if (e.exact_shift) x["exact_shift"] = to_string(*e.exact_shift);
    if (e.exact_displacement) x["exact_displacement"] = to_string(*e.exact_displacement);
    entries.push_back(x);
  }
  json j{{"entries", entries}, {"gsh", io::real_json(r.gsh())}, {"norm", io::real_json(r.norm())}, {"contraction", r.is_contraction()}};
  if (r.exact_gsh()) j["exact_gsh"] = to_string(*r.exact_gsh());
  return j;
}

int cmd_shift(const Context& c) {
  const json data = c.read_data(c.opt.data, "--data");
  std::optional<actions::GroupAction> rho;
  if (data.contains("action")) rho = io::action_from(data["action"]);
  const cat0::ModelSpace m = rho ? rho->space() : c.space(data);
  std::vector<actions::ControlPoint> pts;
  for (const auto& pj : io::field(data, "points")) {
    actions::ControlPoint p{io::field(pj, "label").get<std::string>(), io::point_from(m, io::field(pj, "point")), {}};
    if (pj.contains("group_label")) p.group_label = pj["group_label"].get<std::string>();
    pts.push_back(p);
  }
  const actions::ControlConfiguration cfg(pts);
  const auto e = io::boundary_from(m, io::field(data, "end"));
  json report{{"space", io::to_json(m)}, {"end", io::to_json(e)}};
  bool pass = true;
  if (data.contains("map")) {
    actions::LabelMap f;
    for (const auto& [k, v] : data["map"].items()) f.emplace(k, v.get<std::string>());
    report["report"] = shift_json(actions::shift_report(m, cfg, f, e));
    if (data.contains("power")) {
      const auto it = actions::iterate_shift_check(m, cfg, f, e, data["power"].get<std::size_t>());
      report["iterate"] = {{"m", it.m},
                           {"gsh", io::real_json(it.gsh)},
                           {"gsh_iterate", io::real_json(it.gsh_iterate)},
                           {"bound", io::real_json(it.bound)},
                           {"pass", it.pass}};
      pass = pass && it.pass;
    }
  } else {
    actions::PointMap images;
    for (const auto& [k, v] : io::field(data, "images").items()) images.emplace(k, io::point_from(m, v));
    report["report"] = shift_json(actions::shift_report(m, cfg, images, e));
    if (rho && data.contains("word")) {
      const auto q = actions::equivariance_check(*rho, cfg, images, data["word"].get<std::string>(), e);
      report["equivariance"] = {{"gsh", io::real_json(q.gsh)}, {"gsh_translated", io::real_json(q.gsh_translated)}, {"pass", q.pass}};
      pass = pass && q.pass;
    }
  }
  report["pass"] = pass;
  c.emit(report, "shift");
  return pass ? 0 : 1;
}

int cmd_cocompact(const Context& c) {
  const json data = c.read_data(c.opt.data, "--data");
  const auto rho = io::action_from(io::field(data, "action"));
  const auto& m = rho.space();
  const auto base = io::point_from(m, io::field(data, "base"));
  const double radius = data.contains("radius") ? io::real_from(data["radius"]) : 0.75;
  const auto r = actions::cocompactness_witness(rho, base, radius, c.opt.depth);
  json distances = json::array();
  for (double d : r.ray_orbit_distances) distances.push_back(io::real_json(d));
  json report{{"space", io::to_json(m)},
              {"kind", actions::to_string(r.kind)},
              {"orbit_size", r.orbit_size},
              {"samples", r.samples},
              {"region_radius", io::real_json(r.region_radius)},
              {"worst_distance", io::real_json(r.worst_distance)},
              {"far_point", r.far_point ? io::to_json(*r.far_point) : json(nullptr)},
              {"direction", r.direction ? io::to_json(*r.direction) : json(nullptr)},
              {"level", io::real_json(r.level)},
              {"ray_orbit_distances", distances},
              {"depth", c.opt.depth}};
  if (is_tree(m)) {
    const auto f = actions::fixed_ends_tree(rho, c.opt.depth);
    json ends = json::array();
    for (const auto& e : f.ends) ends.push_back(io::to_json(cat0::BoundaryPoint{e}));
    report["fixed_ends"] = {{"kind", actions::to_string(f.kind)}, {"ends", ends}};
  }
  c.emit(report, "cocompact");
  return 0;
}

json f_vector(const raag::SimplicialComplex& k) {
  json f = json::array();
  for (int d = 0; d <= k.dimension(); ++d) f.push_back(k.count(static_cast<std::size_t>(d)));
  return f;
}

int cmd_raag(const Context& c) {
  const std::size_t n = c.opt.n.value_or(1);
  json report{{"n", n}};
  if (!c.opt.graph.empty()) {
    const std::string text = Context::read_text(c.opt.graph);
    const auto start = text.find_first_not_of(" \t\r\n");
    raag::SimpleGraph g = start != std::string::npos && text[start] == '{' ? io::graph_from(json::parse(text))
                                                                            : raag::parse_edge_list(text);
    const auto k = raag::flag_complex(g);
    const auto bb = raag::bestvina_brady_report(g, n);
    json edges = json::array();
    for (const auto& [a, b] : g.edges()) edges.push_back(json::array({a, b}));
    report["graph"] = {{"vertices", g.vertices()}, {"edges", edges}};
    report["flag_complex"] = f_vector(k);
    report["membership"] = raag::to_string(bb.membership);
    report["verdict"] = io::to_json(bb.verdict);
    report["character"] = io::to_json(raag::diagonal_character(g));
    report["homology"] = io::to_json(raag::homology(k, std::max<std::size_t>(n, 1)));
  } else {
    const auto k = io::complex_from(c.read_data(c.opt.data, "--graph or --data"));
    report["complex"] = f_vector(k);
    report["verdict"] = io::to_json(raag::connectivity_verdict(k, n));
    report["homology"] = io::to_json(raag::homology(k, std::max<std::size_t>(n, static_cast<std::size_t>(std::max(k.dimension(), 1)))));
  }
  c.emit(report, "raag");
  return 0;
}

std::string table_csv(const tree_sigma::SigmaTable& t, unsigned long long seed) {
  std::string s = "# seed " + std::to_string(seed) + "\nfrom,to,value\n";
  for (const auto& r : t.ranges) s += std::to_string(r.lo) + "," + to_string(r.hi) + "," + tree_sigma::to_string(r.value) + "\n";
  return s;
}

int cmd_tree_sigma(const Context& c) {
  const auto s = io::summary_from(c.read_data(c.opt.data, "--data"));
  const auto t = tree_sigma::sigma_table(s);
  if (c.opt.format == "csv") {
    c.emit_text(table_csv(t, c.opt.seed));
    return 0;
  }
  json report{{"summary", io::to_json(s)}, {"table", io::to_json(t)}};
  if (c.opt.n) report["value"] = tree_sigma::to_string(tree_sigma::sigma_circ(s, *c.opt.n));
  c.emit(report, "tree-sigma");
  return 0;
}

int cmd_mfpr(const Context& c) {
  tree_sigma::MFPRData d;
  json data;
  if (c.opt.random) {
    std::mt19937_64 rng(c.opt.seed);
    d = tree_sigma::random_mfpr(rng, c.opt.k, c.opt.points, c.opt.presentable);
  } else {
    data = c.read_data(c.opt.data, "--data or --random");
    d = io::mfpr_from(data);
  }
  const auto l = tree_sigma::mfpr_lengths(d);
  json report{{"data", io::to_json(d)},
              {"antipodal_pair", d.has_antipodal_pair()},
              {"lengths",
               {{"m_zero", io::to_json(l.m_zero)},
                {"m_chi", io::to_json(l.m_chi)},
                {"m_minus_chi", io::to_json(l.m_minus_chi)},
                {"fl_G", io::to_json(l.fl_G)},
                {"cl_chi", io::to_json(l.cl_chi)},
                {"fl_B", io::to_json(l.fl_B)}}},
              {"summary", io::to_json(tree_sigma::mfpr_summary(d))}};
  if (c.opt.table) report["table"] = io::to_json(tree_sigma::sigma_table_mfpr(d));
  if (c.opt.n) report["value"] = tree_sigma::to_string(tree_sigma::sigma_circ_mfpr(d, *c.opt.n));
  if (data.is_object() && data.contains("trees")) {
    std::vector<sphere::Character> chars;
    for (const auto& x : data["trees"]) chars.push_back(io::character_from(x));
    const auto b = tree_sigma::brown_consistency(d.a, chars);
    json uncovered = json::array();
    for (const auto& p : b.uncovered) uncovered.push_back(io::to_json(p));
    report["brown"] = {{"consistent", b.consistent}, {"missing", b.missing}, {"uncovered", uncovered}};
  }
  if (!c.opt.svg.empty()) c.write_text(c.opt.svg, io::sphere_svg(sphere::PolyhedralSet::complement_of(d.k, d.a)));
  c.emit(report, "mfpr");
  return 0;
}

int cmd_audit(const Context& c) {
  const json data = c.read_data(c.opt.data, "--data");
  const std::string& kind = c.opt.audit_kind;
  json report{{"audit", kind}};
  bool pass = true;
  if (kind == "lemma13.5") {
    const auto m = c.space(data);
    const auto samples = data.contains("samples") ? data["samples"].get<std::size_t>() : 100;
    const auto r = actions::lemma_13_5_audit(m, io::point_from(m, io::field(data, "center")), io::real_from(io::field(data, "r")),
                                             io::real_from(io::field(data, "eps")), io::boundary_from(m, io::field(data, "end")),
                                             io::boundary_from(m, io::field(data, "end2")), samples, c.opt.seed);
    report["space"] = io::to_json(m);
    report["big_r"] = io::real_json(r.big_r);
    report["min_slack"] = io::real_json(r.min_slack);
    report["worst"] = r.worst ? io::to_json(*r.worst) : json(nullptr);
    report["samples"] = r.samples;
    pass = r.pass;
  } else if (kind == "angle") {
    const auto m = c.space(data);
    const auto r = actions::angle_estimate_audit(m, io::ray_from(m, io::field(data, "ray1")), io::ray_from(m, io::field(data, "ray2")),
                                                 schedule_from(io::field(data, "schedule")));
    json entries = json::array();
    for (const auto& e : r.entries)
      entries.push_back({{"t", io::real_json(e.t)}, {"gap", io::real_json(e.gap)}, {"bound", io::real_json(e.bound)}});
    report["space"] = io::to_json(m);
    report["angle"] = io::real_json(r.angle);
    report["entries"] = entries;
    pass = r.pass;
  } else if (kind == "sl2z") {
    json values = json::array();
    for (const auto& v : io::field(data, "values")) {
      const std::string text = v.get<std::string>();
      values.push_back({{"value", text}, {"in_complement", actions::sl2z_sigma0_complement(actions::parse_extended_real(text))}});
    }
    report["values"] = values;
  } else {
    throw Error(ErrorCode::InvalidInput, "unknown audit \"" + kind + "\" (lemma13.5, angle, sl2z)");
  }
  report["pass"] = pass;
  c.emit(report, "audit");
  return pass ? 0 : 1;
}

int cmd_verify(const Context& c) {
  std::vector<std::string> names;
  if (c.opt.suite == "all") names = verify::suite_names();
  else names = {c.opt.suite};
  json suites = json::array();
  bool pass = true;
  for (const auto& name : names) {
    c.log(Level::Info, "suite " + name);
    const auto r = verify::run_suite(name, c.opt.seed, c.opt.cases);
    pass = pass && r.pass();
    suites.push_back(r.to_json());
  }
  c.emit({{"suites", suites}, {"pass", pass}}, "verify");
  return pass ? 0 : 1;
}

void diagnostic(std::ostream& err, const std::string& code, const std::string& message) {
  err << json{{"error", code}, {"message", message}}.dump() << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Busemann functions, boundary metrics, characters, shifts and Sigma-invariants", "sigma"};
  app.require_subcommand(1);

  const auto common = [&](CLI::App* s) {
    s->add_option("--space", opt.space, "space override: E2, E3, H2 or a JSON tree descriptor");
    s->add_option("--data", opt.data, "JSON input file");
    s->add_option("--n", opt.n, "degree");
    s->add_option("--seed", opt.seed, "random seed")->capture_default_str();
    s->add_option("--tol", opt.tol, "floating-point tolerance")->capture_default_str();
    s->add_option("--depth", opt.depth, "search depth on trees")->capture_default_str();
    s->add_option("--out", opt.out, "write the report here instead of stdout");
    s->add_option("--svg", opt.svg, "write an SVG picture here");
  };

  std::map<CLI::App*, int (*)(const Context&)> handlers;
  const auto add = [&](const char* name, const char* help, int (*fn)(const Context&)) {
    CLI::App* s = app.add_subcommand(name, help);
    common(s);
    handlers[s] = fn;
    return s;
  };
  add("busemann", "Busemann values, horoballs and limit audits", cmd_busemann);
  add("tits", "angular and Tits distances between boundary points", cmd_tits);
  add("character", "endpoint characters, psi cocycle, sphere sets and Euclidean joins", cmd_character);
  add("shift", "shift reports for control configurations", cmd_shift);
  add("cocompact", "cocompactness net or empty-horoball witness", cmd_cocompact);
  add("raag", "Bestvina-Brady membership and flag complex connectivity", cmd_raag)
      ->add_option("--graph", opt.graph, "graph as JSON or an edge list");
  add("tree-sigma", "Sigma table of a tree action from its lengths", cmd_tree_sigma)
      ->add_option("--format", opt.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  auto* mfpr = add("mfpr", "lengths and Sigma table of an MFPR group", cmd_mfpr);
  mfpr->add_flag("--table", opt.table, "include the Sigma table");
  mfpr->add_flag("--random", opt.random, "generate the data from --seed");
  mfpr->add_option("--k", opt.k, "dimension for --random")->capture_default_str();
  mfpr->add_option("--points", opt.points, "size of A for --random")->capture_default_str();
  mfpr->add_flag("--presentable", opt.presentable, "--random avoids antipodal pairs");
  add("audit", "Lemma 13.5, angle estimate and SL2(Z) audits", cmd_audit)
      ->add_option("kind", opt.audit_kind, "lemma13.5, angle or sl2z")
      ->required();
  auto* ver = add("verify", "seeded property suites", cmd_verify);
  ver->add_option("--suite", opt.suite, "suite name or all")->capture_default_str();
  ver->add_option("--cases", opt.cases, "random instances per property")->capture_default_str();

  std::vector<const char*> argv{"sigma"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    diagnostic(err, "UsageError", e.what());
    return 2;
  }

  for (const auto& [sub, fn] : handlers) {
    if (!sub->parsed()) continue;
    const Context ctx(opt, out, err);
    try {
      return fn(ctx);
    } catch (const Error& e) {
      diagnostic(err, std::string(to_string(e.code())), e.what());
    } catch (const json::exception& e) {
      diagnostic(err, "InvalidInput", e.what());
    } catch (const std::exception& e) {
      diagnostic(err, "InvalidInput", e.what());
    }
    return 2;
  }
  return 2;
}

}  // namespace sigma::cli
