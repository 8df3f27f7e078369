#include "verify.hpp"

#include "sigma/actions.hpp"
#include "sigma/error.hpp"
#include "sigma/gen.hpp"
#include "sigma/raag.hpp"
#include "sigma/tree_sigma.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

namespace sigma::verify {

using namespace sigma::cat0;
using actions::GroupAction;

namespace {

std::string space_name(const ModelSpace& m) {
  if (const auto* e = std::get_if<Euclidean>(&m)) return "E" + std::to_string(e->dim);
  if (std::holds_alternative<HyperbolicPlane>(m)) return "H2";
  const auto& t = std::get<TreeDescriptor>(m);
  switch (t.kind()) {
    case TreeDescriptor::Kind::Regular: return "T" + std::to_string(t.parameter());
    case TreeDescriptor::Kind::Cayley: return "F" + std::to_string(t.parameter());
    case TreeDescriptor::Kind::Hnn: return "BS" + std::to_string(t.parameter());
  }
  return "?";
}

bool is_tree(const ModelSpace& m) { return std::holds_alternative<TreeDescriptor>(m); }

Point random_point(gen::Gen& g, const ModelSpace& m) {
  if (const auto* e = std::get_if<Euclidean>(&m)) {
    std::vector<double> x;
    for (std::size_t i = 0; i < e->dim; ++i) x.push_back(g.real(-5, 5));
    return EuclideanPoint{x};
  }
  if (std::holds_alternative<HyperbolicPlane>(m)) return HyperbolicPoint{g.real(-3, 3), std::exp(g.real(-2, 2))};
  return g.tree_point(std::get<TreeDescriptor>(m), 5);
}

BoundaryPoint random_end(gen::Gen& g, const ModelSpace& m) {
  if (const auto* e = std::get_if<Euclidean>(&m)) {
    for (;;) {
      std::vector<double> x;
      double n = 0;
      for (std::size_t i = 0; i < e->dim; ++i) {
        x.push_back(g.real(-1, 1));
        n += x.back() * x.back();
      }
      if (n > 1e-4) return make_direction(x);
    }
  }
  if (std::holds_alternative<HyperbolicPlane>(m))
    return g.integer(0, 4) == 0 ? HyperbolicBoundary::infinity() : HyperbolicBoundary::real(g.real(-4, 4));
  return g.tree_end(std::get<TreeDescriptor>(m), 3);
}

actions::EuclideanIsometry translation(std::vector<double> v) {
  std::vector<std::vector<double>> q(v.size(), std::vector<double>(v.size(), 0.0));
  for (std::size_t i = 0; i < v.size(); ++i) q[i][i] = 1;
  return {q, v};
}

const std::vector<ModelSpace>& all_spaces() {
  static const std::vector<ModelSpace> spaces{Euclidean{2}, Euclidean{3}, HyperbolicPlane{}, TreeDescriptor::regular(3),
                                              TreeDescriptor::cayley(2), TreeDescriptor::hnn(2)};
  return spaces;
}

// Runs one case, counting an unexpected library error as a failure.
void guarded(Property& p, const std::function<bool()>& body) {
  bool ok = false;
  try {
    ok = body();
  } catch (const std::exception&) {
    ok = false;
  }
  p.check(ok);
}

// ---------------------------------------------------------------- suites

void busemann_suite(SuiteResult& r, gen::Gen& g) {
  for (const auto& m : all_spaces()) {
    const std::string s = space_name(m);
    Property agree{"closed_form_vs_limit/" + s}, mono{"monotone/" + s}, bounded{"bounded/" + s},
        asym{"asymptotic_offset/" + s};
    const bool hyperbolic = std::holds_alternative<HyperbolicPlane>(m);
    std::vector<double> schedule;
    if (hyperbolic) schedule = {1, 2, 5, 10, 20, 40};
    else if (is_tree(m)) schedule = {1, 2, 4, 8, 16, 32, 64};
    else schedule = {1, 1e2, 1e4, 1e6, 1e8, 1e10, 1e12};
    for (std::size_t i = 0; i < r.cases; ++i) {
      const Point base = random_point(g, m), b = random_point(g, m);
      const BoundaryPoint e = random_end(g, m);
      const Point other = random_point(g, m);
      guarded(agree, [&] {
        const auto audit = busemann_limit_audit(m, ray_from(m, base, e), b, schedule);
        agree.worst = std::max(agree.worst, audit.final_gap);
        mono.check(audit.monotone);
        bounded.check(audit.bounded);
        return is_tree(m) ? audit.final_gap == 0 : audit.final_gap <= 1e-9;
      });
      guarded(asym, [&] {
        const auto off = asymptotic_offset(m, ray_from(m, base, e), ray_from(m, other, e), 16, g.engine()());
        asym.worst = std::max(asym.worst, off.max_deviation);
        return off.max_deviation < 1e-9;
      });
    }
    r.properties.insert(r.properties.end(), {agree, mono, bounded, asym});
  }
}

void character_suite(SuiteResult& r, gen::Gen& g) {
  // Characters need an end fixed by the whole group.
  struct Setup {
    GroupAction rho;
    BoundaryPoint end;
    std::string letters;
  };
  const auto c2 = TreeDescriptor::cayley(2);
  const std::vector<Setup> setups{
      {GroupAction(Euclidean{2}, {{'a', translation({1, 0.5})}, {'b', translation({-0.25, 2})}}),
       make_direction({0.6, 0.8}), "ab"},
      {GroupAction(HyperbolicPlane{}, {{'p', actions::MobiusIsometry{1, 1, 0, 1}}, {'g', actions::MobiusIsometry{2, 0, 0, 0.5}}}),
       HyperbolicBoundary::infinity(), "pg"},
      {GroupAction(TreeDescriptor::hnn(3), {{'b', actions::HnnIsometry{0, Rational(1)}}, {'t', actions::HnnIsometry{1, Rational(0)}}}),
       hnn::fixed_end(), "bt"},
      {GroupAction(c2, {{'a', actions::CayleyIsometry{"a"}}}), tree::canonical_end(c2, "", "a"), "a"},
  };
  for (const auto& s : setups) {
    const ModelSpace& m = s.rho.space();
    const bool exact = is_tree(m);
    Property add{"additivity/" + space_name(m)}, basepoint{"basepoint_independence/" + space_name(m)};
    for (std::size_t i = 0; i < r.cases; ++i) {
      const std::string u = g.group_word(s.letters, 5), v = g.group_word(s.letters, 5);
      const Point a = random_point(g, m), b = random_point(g, m);
      guarded(add, [&] {
        if (exact)
          return actions::character_at_end_exact(s.rho, s.end, a, u + v) ==
                 actions::character_at_end_exact(s.rho, s.end, a, u) + actions::character_at_end_exact(s.rho, s.end, a, v);
        const double gap = std::abs(actions::character_at_end(s.rho, s.end, a, u + v) -
                                    actions::character_at_end(s.rho, s.end, a, u) -
                                    actions::character_at_end(s.rho, s.end, a, v));
        add.worst = std::max(add.worst, gap);
        return gap <= 1e-9;
      });
      guarded(basepoint, [&] {
        if (exact)
          return actions::character_at_end_exact(s.rho, s.end, a, u) == actions::character_at_end_exact(s.rho, s.end, b, u);
        const double gap = std::abs(actions::character_at_end(s.rho, s.end, a, u) - actions::character_at_end(s.rho, s.end, b, u));
        basepoint.worst = std::max(basepoint.worst, gap);
        return gap <= 1e-9;
      });
    }
    r.properties.insert(r.properties.end(), {add, basepoint});
  }

  // psi(gh, a) = psi(g, ha) + psi(h, a) for arbitrary ends.
  const std::vector<std::pair<GroupAction, std::string>> cocycle_actions{
      {GroupAction(Euclidean{2}, {{'a', translation({1, 0.5})}, {'r', actions::EuclideanIsometry{{{0, -1}, {1, 0}}, {0.5, -1}}}}), "ar"},
      {GroupAction(HyperbolicPlane{}, {{'s', actions::MobiusIsometry{0, -1, 1, 0}}, {'t', actions::MobiusIsometry{1, 1, 0, 1}}}), "st"},
      {GroupAction(c2, {{'a', actions::CayleyIsometry{"a"}}, {'b', actions::CayleyIsometry{"b"}}}), "ab"},
  };
  for (const auto& [rho, letters] : cocycle_actions) {
    const ModelSpace& m = rho.space();
    Property p{"cocycle_identity/" + space_name(m)};
    for (std::size_t i = 0; i < r.cases; ++i) {
      const std::string gw = g.group_word(letters, 3), hw = g.group_word(letters, 3);
      const Point a = std::holds_alternative<HyperbolicPlane>(m)
                          ? Point{HyperbolicPoint{g.real(-1, 1), std::exp(g.real(-0.5, 0.5))}}
                          : random_point(g, m);
      const BoundaryPoint e = random_end(g, m);
      guarded(p, [&] {
        const Point ha = actions::apply(rho, hw, a);
        if (is_tree(m))
          return actions::psi_cocycle_exact(rho, e, gw + hw, a) ==
                 actions::psi_cocycle_exact(rho, e, gw, ha) + actions::psi_cocycle_exact(rho, e, hw, a);
        const double lhs = actions::psi_cocycle(rho, e, gw + hw, a);
        const double gap = std::abs(lhs - actions::psi_cocycle(rho, e, gw, ha) - actions::psi_cocycle(rho, e, hw, a));
        p.worst = std::max(p.worst, gap);
        return gap <= 1e-9 * std::max(1.0, std::abs(lhs));
      });
    }
    r.properties.push_back(p);
  }

  Property hnn_values{"hnn_character_values"};
  for (int n = 2; n <= 7; ++n) {
    const GroupAction bs(TreeDescriptor::hnn(n), {{'b', actions::HnnIsometry{0, Rational(1)}}, {'t', actions::HnnIsometry{1, Rational(0)}}});
    guarded(hnn_values, [&] {
      return actions::character_at_end_exact(bs, hnn::fixed_end(), TreePoint::vertex(""), "b") == 0 &&
             actions::character_at_end_exact(bs, hnn::fixed_end(), TreePoint::vertex(""), "t") == -1;
    });
  }
  r.properties.push_back(hnn_values);
}

void shift_suite(SuiteResult& r, gen::Gen& g) {
  const std::vector<ModelSpace> spaces{Euclidean{2}, HyperbolicPlane{}, TreeDescriptor::cayley(2)};
  for (const auto& m : spaces) {
    const std::string s = space_name(m);
    const bool exact = is_tree(m);
    Property bound{"shift_bound/" + s}, iterate{"iterate_m_le_5/" + s};
    for (std::size_t i = 0; i < r.cases; ++i) {
      std::vector<actions::ControlPoint> pts;
      actions::PointMap images;
      for (int j = 0; j < 5; ++j) {
        pts.push_back({std::to_string(j), random_point(g, m), {}});
        if (g.integer(0, 3) != 0) images.emplace(std::to_string(j), random_point(g, m));
      }
      if (images.empty()) images.emplace("0", random_point(g, m));
      const BoundaryPoint e = random_end(g, m);
      guarded(bound, [&] {
        const auto rep = actions::shift_report(m, actions::ControlConfiguration(pts), images, e);
        for (const auto& x : rep.entries()) {
          if (exact ? abs(*x.exact_shift) > *x.exact_displacement : std::abs(x.shift) > x.displacement + 1e-9) return false;
          bound.worst = std::max(bound.worst, std::abs(x.shift) - x.displacement);
        }
        return true;
      });
    }
    // Closed configurations: a chain 0 -> 1 -> ... -> 7, sometimes closed up
    // into a cycle, so f^m is defined on a nonempty set for m <= 5.
    const std::size_t configs = std::max<std::size_t>(1, r.cases / 2);
    for (std::size_t i = 0; i < configs; ++i) {
      std::vector<actions::ControlPoint> pts;
      actions::LabelMap f;
      for (int j = 0; j < 8; ++j) {
        pts.push_back({std::to_string(j), random_point(g, m), {}});
        if (j < 7) f.emplace(std::to_string(j), std::to_string(j + 1));
      }
      if (g.coin()) f.emplace("7", std::to_string(g.integer(0, 7)));
      const actions::ControlConfiguration cfg(pts);
      const BoundaryPoint e = random_end(g, m);
      for (std::size_t power = 1; power <= 5; ++power)
        guarded(iterate, [&] { return actions::iterate_shift_check(m, cfg, f, e, power).pass; });
    }
    r.properties.insert(r.properties.end(), {bound, iterate});
  }

  const auto c2 = TreeDescriptor::cayley(2);
  const std::vector<std::pair<GroupAction, std::string>> acting{
      {GroupAction(Euclidean{2}, {{'a', translation({1, 0.5})}, {'r', actions::EuclideanIsometry{{{0, -1}, {1, 0}}, {0.5, -1}}}}), "ar"},
      {GroupAction(HyperbolicPlane{}, {{'s', actions::MobiusIsometry{0, -1, 1, 0}}, {'t', actions::MobiusIsometry{1, 1, 0, 1}}}), "st"},
      {GroupAction(c2, {{'a', actions::CayleyIsometry{"a"}}, {'b', actions::CayleyIsometry{"b"}}}), "ab"},
  };
  for (const auto& [rho, letters] : acting) {
    const ModelSpace& m = rho.space();
    Property p{"equivariance/" + space_name(m)};
    for (std::size_t i = 0; i < r.cases; ++i) {
      std::vector<actions::ControlPoint> pts;
      actions::PointMap images;
      for (int j = 0; j < 4; ++j) {
        pts.push_back({std::to_string(j), random_point(g, m), {}});
        images.emplace(std::to_string(j), random_point(g, m));
      }
      const std::string word = g.group_word(letters, 3);
      const BoundaryPoint e = random_end(g, m);
      guarded(p, [&] {
        const auto c = actions::equivariance_check(rho, actions::ControlConfiguration(pts), images, word, e);
        p.worst = std::max(p.worst, std::abs(c.gsh - c.gsh_translated));
        return c.pass;
      });
    }
    r.properties.push_back(p);
  }
}

void lemma_suite(SuiteResult& r, gen::Gen& g) {
  const std::vector<ModelSpace> spaces{Euclidean{2}, HyperbolicPlane{}, TreeDescriptor::cayley(2)};
  const std::vector<double> schedule{0.25, 0.5, 1, 2, 4, 8, 16, 32};
  for (const auto& m : spaces) {
    Property lemma{"lemma13.5/" + space_name(m)}, angle{"angle_estimate/" + space_name(m)};
    lemma.worst = kInfinity;  // smallest slack here
    for (std::size_t i = 0; i < r.cases; ++i) {
      const Point c = random_point(g, m);
      const double radius = g.real(0.5, 1.5), eps = g.real(0.1, 0.5);
      const BoundaryPoint e = random_end(g, m), e2 = random_end(g, m);
      const auto seed = g.engine()();
      guarded(lemma, [&] {
        const auto rep = actions::lemma_13_5_audit(m, c, radius, eps, e, e2, 20, seed);
        lemma.worst = std::min(lemma.worst, rep.min_slack);
        return rep.pass;
      });
      guarded(angle, [&] {
        return actions::angle_estimate_audit(m, ray_from(m, c, e), ray_from(m, c, e2), schedule).pass;
      });
    }
    r.properties.insert(r.properties.end(), {lemma, angle});
  }
}

void tits_suite(SuiteResult& r, gen::Gen& g) {
  for (const auto& m : all_spaces()) {
    const std::string s = space_name(m);
    const bool euclidean = std::holds_alternative<Euclidean>(m);
    Property dominates{"tits_ge_angular/" + s};
    Property shape{euclidean ? "tits_eq_angular/" + s : "tits_infinite_on_distinct/" + s};
    for (std::size_t i = 0; i < r.cases; ++i) {
      const BoundaryPoint p = random_end(g, m), q = random_end(g, m);
      guarded(dominates, [&] { return tits_distance(m, p, q) >= angular_distance(m, p, q) - 1e-12; });
      guarded(shape, [&] {
        const double td = tits_distance(m, p, q);
        if (euclidean) {
          shape.worst = std::max(shape.worst, std::abs(td - angular_distance(m, p, q)));
          return std::abs(td - angular_distance(m, p, q)) <= 1e-12;
        }
        return same_boundary_point(m, p, q) ? td == 0 : td == kInfinity;
      });
    }
    r.properties.insert(r.properties.end(), {dominates, shape});
  }
}

void cocompact_suite(SuiteResult& r, gen::Gen&) {
  Property net{"lattice_net"}, witness{"free_cyclic_witness"}, axis{"fixed_ends_are_axis"};
  const GroupAction lattice(Euclidean{2}, {{'a', translation({1, 0})}, {'b', translation({0, 1})}});
  guarded(net, [&] {
    return actions::cocompactness_witness(lattice, EuclideanPoint{{0, 0}}, 0.75, 8).kind ==
           actions::CocompactnessResult::Kind::Net;
  });
  const auto t = TreeDescriptor::cayley(2);
  guarded(witness, [&] {
    const GroupAction cyclic(t, {{'a', actions::CayleyIsometry{"a"}}});
    const auto w = actions::cocompactness_witness(cyclic, TreePoint::vertex(""), 0.75, 8);
    if (w.kind != actions::CocompactnessResult::Kind::EmptyHoroballWitness || !w.direction) return false;
    // the ray leaves the axis of a at once, so its end is not a^(+-omega)
    const auto& d = std::get<TreeEnd>(*w.direction);
    if (d == tree::canonical_end(t, "", "a") || d == tree::canonical_end(t, "", "A")) return false;
    for (std::size_t k = 0; k < w.ray_orbit_distances.size(); ++k)
      if (std::abs(w.ray_orbit_distances[k] - static_cast<double>(k)) > 1e-12) return false;
    return true;
  });
  for (const std::string h : {"a", "ab", "aab", "abAB", "aBBa", "bbbA"}) {
    guarded(axis, [&] {
      const GroupAction cyclic(t, {{'h', actions::CayleyIsometry{h}}});
      const auto rep = actions::fixed_ends_tree(cyclic, 8);
      const TreeEnd plus = tree::canonical_end(t, "", h);
      const TreeEnd minus = tree::canonical_end(t, "", actions::inverse_word(h));
      if (rep.kind != actions::FixedEndReport::Kind::Pair || rep.ends.size() != 2) return false;
      return (rep.ends[0] == plus && rep.ends[1] == minus) || (rep.ends[0] == minus && rep.ends[1] == plus);
    });
  }
  r.properties.insert(r.properties.end(), {net, witness, axis});
}

void sl2z_suite(SuiteResult& r, gen::Gen& g) {
  Property rationals{"rational_or_infinity_in_complement"}, quadratic{"quadratic_irrational_not_in_complement"};
  guarded(rationals, [] { return actions::sl2z_sigma0_complement(actions::parse_extended_real("inf")); });
  for (int i = 0; i < 20; ++i) {
    const long long p = g.integer(-1000, 1000), q = g.integer(1, 1000);
    guarded(rationals, [&] {
      return actions::sl2z_sigma0_complement(actions::parse_extended_real(std::to_string(p) + "/" + std::to_string(q)));
    });
  }
  for (int i = 0; i < 20; ++i) {
    long long d;
    do d = g.integer(2, 500);
    while (static_cast<long long>(std::llround(std::sqrt(static_cast<double>(d)))) *
               std::llround(std::sqrt(static_cast<double>(d))) == d);
    const long long a = g.integer(-50, 50), b = g.integer(1, 30) * (g.coin() ? 1 : -1), den = g.integer(1, 9);
    const std::string text = std::to_string(a) + "/" + std::to_string(den) + (b < 0 ? "-" : "+") +
                             std::to_string(std::abs(b)) + "*sqrt(" + std::to_string(d) + ")";
    guarded(quadratic, [&] { return !actions::sl2z_sigma0_complement(actions::parse_extended_real(text)); });
  }
  r.properties.insert(r.properties.end(), {rationals, quadratic});
}

void raag_suite(SuiteResult& r, gen::Gen&) {
  using raag::Membership;
  Property complete{"complete_graphs_in"}, cycle{"c4_thresholds"}, octa{"octahedron_thresholds"};
  for (std::size_t m = 1; m <= 6; ++m)
    for (std::size_t n = 0; n <= 5; ++n)
      guarded(complete, [&] { return raag::bestvina_brady(raag::SimpleGraph::complete(m), n) == Membership::In; });
  const auto c4 = raag::SimpleGraph::cycle(4);
  guarded(cycle, [&] { return raag::bestvina_brady(c4, 1) == Membership::In; });
  guarded(cycle, [&] { return raag::bestvina_brady(c4, 2) == Membership::Out; });
  const auto o = raag::SimpleGraph::octahedron();
  guarded(octa, [&] { return raag::bestvina_brady(o, 2) == Membership::In; });
  guarded(octa, [&] { return raag::bestvina_brady(o, 3) == Membership::Out; });
  r.properties.insert(r.properties.end(), {complete, cycle, octa});
}

void mfpr_suite(SuiteResult& r, gen::Gen& g) {
  using namespace tree_sigma;
  Property consistency{"mfpr_equals_fixed_end_formula"}, partition{"ranges_partition"},
      presentable{"antipodal_free_m0_ge_2"};
  for (std::size_t i = 0; i < r.cases; ++i) {
    const auto k = static_cast<std::size_t>(g.integer(1, 3));
    const bool fp = g.coin();
    const auto d = random_mfpr(g.engine(), k, static_cast<std::size_t>(g.integer(0, k == 1 ? 2 : 5)), fp);
    guarded(consistency, [&] {
      const auto s = mfpr_summary(d);
      const std::uint64_t top = s.fl_G.is_finite() ? s.fl_G.value() : 8;
      for (std::uint64_t n = 0; n <= top; ++n)
        if (sigma_circ_mfpr(d, n) != sigma_circ_fixed_end(s, n)) return false;
      return true;
    });
    if (!d.has_antipodal_pair())
      guarded(presentable, [&] { return 2u <= mfpr_lengths(d).m_zero; });
  }
  const auto length = [&] {
    return g.integer(0, 5) == 0 ? sphere::ExtNat::infinity() : sphere::ExtNat::finite(static_cast<std::uint64_t>(g.integer(0, 6)));
  };
  for (std::size_t i = 0; i < r.cases; ++i) {
    std::vector<sphere::ExtNat> v{length(), length(), length()};
    std::sort(v.begin(), v.end());
    GraphOfGroupsSummary s;
    s.fl_Gcal = v[0];
    s.fl_G = v[2];
    s.has_fixed_end = g.coin();
    if (s.has_fixed_end) s.cl_chi = v[1];
    guarded(partition, [&] {
      const auto t = sigma_table(s);
      if (t.ranges.empty() || t.ranges.front().lo != 0 || t.ranges.back().hi != s.fl_G) return false;
      for (std::size_t j = 1; j < t.ranges.size(); ++j)
        if (!t.ranges[j - 1].hi.is_finite() || t.ranges[j].lo != t.ranges[j - 1].hi.value() + 1) return false;
      const std::uint64_t top = s.fl_G.is_finite() ? s.fl_G.value() : 10;
      for (std::uint64_t n = 0; n <= top; ++n) {
        std::size_t holders = 0;
        for (const auto& rg : t.ranges) holders += rg.lo <= n && n <= rg.hi;
        if (holders != 1 || t.at(n) != sigma_circ(s, n)) return false;
      }
      return true;
    });
  }
  r.properties.insert(r.properties.end(), {consistency, partition, presentable});
}

using SuiteFn = void (*)(SuiteResult&, gen::Gen&);

const std::map<std::string, SuiteFn>& registry() {
  static const std::map<std::string, SuiteFn> suites{
      {"busemann", busemann_suite}, {"character", character_suite}, {"cocompact", cocompact_suite},
      {"lemma13.5", lemma_suite},   {"mfpr", mfpr_suite},           {"raag", raag_suite},
      {"shift", shift_suite},       {"sl2z", sl2z_suite},           {"tits", tits_suite},
  };
  return suites;
}

}  // namespace

bool SuiteResult::pass() const {
  return std::all_of(properties.begin(), properties.end(), [](const Property& p) { return p.pass(); });
}

nlohmann::json SuiteResult::to_json() const {
  nlohmann::json props = nlohmann::json::array();
  for (const auto& p : properties) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", p.worst);
    props.push_back({{"name", p.name}, {"passed", p.passed}, {"total", p.total}, {"worst", std::isinf(p.worst) ? "inf" : buf}});
  }
  return {{"suite", suite}, {"seed", seed}, {"cases", cases}, {"pass", pass()}, {"properties", props}};
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

SuiteResult run_suite(const std::string& name, unsigned long long seed, std::size_t cases) {
  const auto it = registry().find(name);
  if (it == registry().end()) throw Error(ErrorCode::InvalidInput, "unknown suite \"" + name + "\"");
  SuiteResult r;
  r.suite = name;
  r.seed = seed;
  r.cases = cases;
  gen::Gen g(seed);
  it->second(r, g);
  return r;
}

}  // namespace sigma::verify
