// One line per acceptance criterion; exit status 0 iff all pass.

#include "m_oracle.hpp"
#include "sigma/gen.hpp"

#include "cli.hpp"
#include "verify.hpp"

#include "sigma/actions.hpp"
#include "sigma/error.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

using namespace sigma;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

Outcome from_suite(const std::string& name, unsigned long long seed, std::size_t cases) {
  const auto r = verify::run_suite(name, seed, cases);
  Outcome o{r.pass(), ""};
  std::size_t passed = 0, total = 0;
  for (const auto& p : r.properties) {
    passed += p.passed;
    total += p.total;
    if (!p.pass()) o.detail += " failed:" + p.name + "(" + std::to_string(p.passed) + "/" + std::to_string(p.total) + ")";
  }
  o.detail = std::to_string(passed) + "/" + std::to_string(total) + " checks, seed " + std::to_string(seed) + o.detail;
  return o;
}

Outcome m_oracle() {
  gen::Gen g(303);
  std::size_t agree = 0, finite = 0;
  const std::size_t instances = 200;
  for (std::size_t i = 0; i < instances; ++i) {
    const auto k = static_cast<std::size_t>(g.integer(1, 3));
    const auto size = static_cast<std::size_t>(g.integer(0, k == 1 ? 2 : 6));
    const auto a = oracle::random_points(g, k, size);
    auto chi = g.integer(0, 3) == 0 ? sphere::Character::zero(k) : sphere::Character::from_integers(g.nonzero_vector(k, 3));
    if (!a.empty() && g.coin()) {
      // a positive combination of some of A, so the finite branch is exercised
      chi = sphere::Character::zero(k);
      for (const auto& p : a)
        if (g.coin()) chi = chi + p.as_character().scaled(Rational(g.integer(1, 4)));
    }
    const auto count = oracle::oracle_count(a, chi);
    const auto expected = count.is_infinite() ? count : sphere::ExtNat::finite(count.value() - 1);
    const auto m = sphere::m_value(a, chi);
    agree += m == expected;
    finite += m.is_finite();
  }
  return {agree == instances, std::to_string(agree) + "/" + std::to_string(instances) + " agree (" +
                                  std::to_string(finite) + " finite), seed 303"};
}

Outcome shift_calculus() {
  Outcome o = from_suite("shift", 707, 100);
  // |sh| <= alpha is enforced when a report is built.
  bool rejected = false;
  try {
    actions::ShiftReport::build({actions::ShiftEntry{"p", 2.0, 1.0, {}, {}}});
  } catch (const Error& e) {
    rejected = e.code() == ErrorCode::InvariantViolation;
  }
  o.pass = o.pass && rejected;
  o.detail += rejected ? ", breach rejected in-type" : ", breach NOT rejected";
  return o;
}

std::string slurp(const std::string& path) {
  std::FILE* f = std::fopen(path.c_str(), "rb");
  if (!f) return "";
  std::string s;
  char buf[4096];
  for (std::size_t n; (n = std::fread(buf, 1, sizeof buf, f)) > 0;) s.append(buf, n);
  std::fclose(f);
  return s;
}

// Runs the installed executable in a fresh process and returns stdout plus
// the --svg file, if any.
std::string run_process(const std::vector<std::string>& args, const std::string& svg) {
  std::string cmd = SIGMA_BIN;
  for (const auto& a : args) cmd += " '" + a + "'";
  cmd += " 2>/dev/null";
  std::FILE* p = popen(cmd.c_str(), "r");
  if (!p) return "<popen failed>";
  std::string out;
  char buf[4096];
  for (std::size_t n; (n = std::fread(buf, 1, sizeof buf, p)) > 0;) out.append(buf, n);
  out += "\nexit " + std::to_string(pclose(p));
  if (!svg.empty()) out += "\n" + slurp(svg);
  return out;
}

Outcome determinism() {
  const std::string d = SIGMA_TEST_DATA;
  const std::vector<std::vector<std::string>> commands{
      {"busemann", "--data", d + "/busemann_h2.json"},
      {"busemann", "--data", d + "/busemann_tree.json"},
      {"tits", "--data", d + "/tits.json"},
      {"character", "--data", d + "/bs3.json"},
      {"character", "--data", d + "/sphere.json", "--svg", "acceptance_s1.svg"},
      {"character", "--data", d + "/join.json"},
      {"shift", "--data", d + "/shift.json"},
      {"cocompact", "--data", d + "/lattice.json"},
      {"cocompact", "--data", d + "/free_cyclic.json"},
      {"raag", "--graph", d + "/c4.json", "--n", "2"},
      {"raag", "--data", d + "/rp2.json", "--n", "2"},
      {"tree-sigma", "--data", d + "/hnn_summary.json", "--format", "csv"},
      {"mfpr", "--data", d + "/tri.json", "--table", "--svg", "acceptance_tri.svg"},
      {"mfpr", "--random", "--seed", "17", "--k", "3", "--points", "5", "--table", "--svg", "acceptance_rand.svg"},
      {"audit", "lemma13.5", "--data", d + "/lemma.json", "--seed", "17"},
      {"audit", "angle", "--data", d + "/angle.json"},
      {"audit", "sl2z", "--data", d + "/sl2z.json"},
      {"verify", "--seed", "17", "--cases", "20"},
  };
  std::size_t same = 0;
  std::string detail;
  for (const auto& args : commands) {
    std::string svg;
    for (std::size_t i = 0; i + 1 < args.size(); ++i)
      if (args[i] == "--svg") svg = args[i + 1];
    const std::string first = run_process(args, svg);
    std::remove(svg.c_str());
    const std::string second = run_process(args, svg);
    // and once more in-process
    std::ostringstream out, err;
    cli::run(args, out, err);
    const bool ok = first == second && first.rfind(out.str(), 0) == 0 && first.find("exit 0") != std::string::npos;
    same += ok;
    if (!ok) detail += " differs:" + args[0];
  }
  return {same == commands.size(),
          std::to_string(same) + "/" + std::to_string(commands.size()) + " commands byte-identical" + detail};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit;  // seconds, 0 for none
    std::function<Outcome()> check;
  };
  const std::vector<Criterion> criteria{
      {1, "SL2(Z) boundary classification", 1, [] { return from_suite("sl2z", 101, 100); }},
      {2, "Bestvina-Brady fixed points", 10, [] { return from_suite("raag", 202, 100); }},
      {3, "m(chi) LP path equals enumeration oracle", 60, m_oracle},
      {4, "tree Sigma formula consistency and partition", 0, [] { return from_suite("mfpr", 404, 100); }},
      {5, "Busemann suite", 0, [] { return from_suite("busemann", 505, 100); }},
      {6, "character and cocycle suite", 0, [] { return from_suite("character", 606, 100); }},
      {7, "shift calculus", 0, shift_calculus},
      {8, "Lemma 13.5 and angle estimate", 0, [] { return from_suite("lemma13.5", 808, 100); }},
      {9, "cocompactness desk check", 0, [] { return from_suite("cocompact", 909, 100); }},
      {10, "Tits metric facts", 0, [] { return from_suite("tits", 1010, 100); }},
      {11, "CLI determinism", 0, determinism},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit > 0 && secs >= c.limit) {
      o.pass = false;
      o.detail += ", over the time limit";
    }
    all = all && o.pass;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << "criterion " << c.id << " " << (o.pass ? "PASS" : "FAIL") << " " << c.name << ": " << o.detail << " ["
              << timing << "]\n";
  }
  return all ? 0 : 1;
}
