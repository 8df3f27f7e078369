#include "doctest.h"
#include "sigma/gen.hpp"
#include "m_oracle.hpp"

#include "sigma/error.hpp"
#include "sigma/tree_sigma.hpp"

using namespace sigma;
using namespace sigma::tree_sigma;

namespace {

ExtNat fin(std::uint64_t n) { return ExtNat::finite(n); }
const ExtNat kInf = ExtNat::infinity();
SpherePoint pt(std::vector<long long> v) { return SpherePoint::from_integers(v); }
Character chi(std::vector<long long> v) { return Character::from_integers(v); }

ExtNat oracle_m(const std::vector<SpherePoint>& a, const Character& c) {
  const ExtNat r = oracle::oracle_count(a, c);
  return r.is_infinite() ? r : fin(r.value() - 1);
}

ExtNat random_length(gen::Gen& g) { return g.integer(0, 5) == 0 ? kInf : fin(static_cast<std::uint64_t>(g.integer(0, 6))); }

GraphOfGroupsSummary random_summary(gen::Gen& g) {
  std::vector<ExtNat> v{random_length(g), random_length(g), random_length(g)};
  std::sort(v.begin(), v.end());
  GraphOfGroupsSummary s;
  s.fl_Gcal = v[0];
  s.fl_G = v[2];
  s.has_fixed_end = g.coin();
  if (s.has_fixed_end) s.cl_chi = v[1];
  return s;
}

MFPRData mfpr_instance(gen::Gen& g) {
  const auto k = static_cast<std::size_t>(g.integer(1, 3));
  return random_mfpr(g.engine(), k, static_cast<std::size_t>(g.integer(0, k == 1 ? 2 : 5)), g.coin());
}

}  // namespace

TEST_CASE("no fixed end") {
  const GraphOfGroupsSummary s{fin(4), fin(2), false, std::nullopt};
  CHECK(sigma_circ_no_fixed_end(s, 1) == SigmaValue::WholeBoundary);
  CHECK(sigma_circ_no_fixed_end(s, 2) == SigmaValue::WholeBoundary);
  CHECK(sigma_circ_no_fixed_end(s, 3) == SigmaValue::Empty);
  CHECK(sigma_circ_no_fixed_end(s, 4) == SigmaValue::Empty);
  try {
    sigma_circ_no_fixed_end(s, 5);
    FAIL("expected DegreeOutOfRange");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegreeOutOfRange);
  }
  CHECK_THROWS_AS(sigma_circ_no_fixed_end({fin(1), fin(2), false, std::nullopt}, 0), Error);
  CHECK(sigma_circ_no_fixed_end({kInf, kInf, false, std::nullopt}, 1000) == SigmaValue::WholeBoundary);
}

TEST_CASE("one fixed end") {
  const GraphOfGroupsSummary s{fin(3), fin(1), true, fin(2)};
  CHECK(sigma_circ_fixed_end(s, 0) == SigmaValue::WholeBoundary);
  CHECK(sigma_circ_fixed_end(s, 1) == SigmaValue::WholeBoundary);
  CHECK(sigma_circ_fixed_end(s, 2) == SigmaValue::Singleton);
  CHECK(sigma_circ_fixed_end(s, 3) == SigmaValue::Empty);
  CHECK_THROWS_AS(sigma_circ_fixed_end(s, 4), Error);
  // cl = fl Gcal leaves no room for {e}.
  const auto t = sigma_table({fin(3), fin(2), true, fin(2)});
  for (const auto& r : t.ranges) CHECK(r.value != SigmaValue::Singleton);
  for (const GraphOfGroupsSummary bad : {GraphOfGroupsSummary{fin(3), fin(2), true, fin(1)},
                                         GraphOfGroupsSummary{fin(3), fin(1), true, fin(4)},
                                         GraphOfGroupsSummary{fin(1), fin(2), true, fin(1)}}) {
    try {
      sigma_circ_fixed_end(bad, 0);
      FAIL("expected InvalidChain");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::InvalidChain);
    }
  }
  CHECK_THROWS_AS(sigma_circ_fixed_end({fin(3), fin(1), true, std::nullopt}, 0), Error);
}

TEST_CASE("tables partition 0..fl G") {
  gen::Gen g(131);
  for (int i = 0; i < 300; ++i) {
    const auto s = random_summary(g);
    const auto t = sigma_table(s);
    REQUIRE_FALSE(t.ranges.empty());
    CHECK(t.ranges.front().lo == 0);
    CHECK(t.ranges.back().hi == s.fl_G);
    for (std::size_t j = 0; j < t.ranges.size(); ++j) {
      CHECK(t.ranges[j].lo <= t.ranges[j].hi);
      if (j > 0) CHECK(fin(t.ranges[j].lo) == fin(t.ranges[j - 1].hi.value() + 1));
    }
    const std::uint64_t top = s.fl_G.is_finite() ? s.fl_G.value() : 12;
    for (std::uint64_t n = 0; n <= top; ++n) {
      // exactly one range holds n, and it agrees with the pointwise formula
      std::size_t holders = 0;
      for (const auto& r : t.ranges) holders += r.lo <= n && n <= r.hi;
      CHECK(holders == 1);
      CHECK(t.at(n) == sigma_circ(s, n));
    }
    if (s.fl_G.is_finite()) CHECK_THROWS_AS(t.at(s.fl_G.value() + 1), Error);
    // Raising fl Gcal to cl(chi) removes the singleton range.
    if (s.has_fixed_end) {
      auto collapsed = s;
      collapsed.fl_Gcal = *s.cl_chi;
      for (const auto& r : sigma_table(collapsed).ranges) CHECK(r.value != SigmaValue::Singleton);
    }
  }
}

TEST_CASE("mfpr lengths examples") {
  const MFPRData empty{2, {}, chi({0, -1})};
  const auto le = mfpr_lengths(empty);
  CHECK(le.fl_G == kInf);
  CHECK(le.cl_chi == kInf);
  CHECK(le.fl_B == kInf);
  for (std::uint64_t n : {0, 1, 7, 100}) CHECK(sigma_circ_mfpr(empty, n) == SigmaValue::WholeBoundary);

  const MFPRData line{1, {pt({1}), pt({-1})}, chi({-1})};
  const auto ll = mfpr_lengths(line);
  CHECK(ll.m_zero == fin(1));
  CHECK(ll.m_chi == kInf);
  CHECK(ll.m_minus_chi == kInf);
  CHECK(ll.fl_G == fin(1));
  CHECK(ll.cl_chi == fin(1));
  CHECK(ll.fl_B == fin(1));
  CHECK(line.has_antipodal_pair());

  // Three rays at 120 degrees, written in the lattice basis v1 = (1,0), v2 = (0,1), v3 = (-1,-1).
  const MFPRData tri{2, {pt({1, 0}), pt({0, 1}), pt({-1, -1})}, chi({-1, 0})};
  const auto lt = mfpr_lengths(tri);
  CHECK(lt.m_zero == fin(2));
  CHECK(lt.m_chi == fin(1));
  CHECK(lt.m_minus_chi == kInf);
  CHECK(lt.fl_G == fin(2));
  CHECK(lt.cl_chi == fin(1));
  CHECK(lt.fl_B == fin(1));
  CHECK_FALSE(tri.has_antipodal_pair());
  CHECK(sigma_circ_mfpr(tri, 0) == SigmaValue::WholeBoundary);
  CHECK(sigma_circ_mfpr(tri, 1) == SigmaValue::WholeBoundary);
  CHECK(sigma_circ_mfpr(tri, 2) == SigmaValue::Empty);
  try {
    sigma_circ_mfpr(tri, 3);
    FAIL("expected DegreeOutOfRange");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegreeOutOfRange);
  }
  CHECK_THROWS_AS(mfpr_lengths({2, {pt({1, 0})}, chi({0, 0})}), Error);
  CHECK_THROWS_AS(mfpr_lengths({2, {pt({1, 0, 0})}, chi({0, 1})}), Error);
  CHECK_THROWS_AS(mfpr_lengths({2, {pt({1, 0}), pt({1, 0})}, chi({0, 1})}), Error);
}

TEST_CASE("mfpr lengths against the enumeration oracle") {
  gen::Gen g(137);
  for (int i = 0; i < 150; ++i) {
    const auto d = mfpr_instance(g);
    const auto l = mfpr_lengths(d);
    const ExtNat m0 = oracle_m(d.a, Character::zero(d.k));
    const ExtNat mc = oracle_m(d.a, d.chi);
    const ExtNat mm = oracle_m(d.a, -d.chi);
    CHECK(l.m_zero == m0);
    CHECK(l.m_chi == mc);
    CHECK(l.m_minus_chi == mm);
    CHECK(l.fl_G == m0);
    CHECK(l.cl_chi == std::min(mc, m0));
    CHECK(l.fl_B == std::min({mc, mm, m0}));
    // Finite presentability: no antipodal pair forces m(0) >= 2.
    if (!d.has_antipodal_pair()) CHECK(fin(2) <= m0);
  }
}

TEST_CASE("the HNN formula is the fixed-end formula on the MFPR lengths") {
  gen::Gen g(139);
  for (int i = 0; i < 150; ++i) {
    const auto d = mfpr_instance(g);
    const auto s = mfpr_summary(d);
    CHECK_NOTHROW(s.validate());
    const std::uint64_t top = s.fl_G.is_finite() ? s.fl_G.value() : 8;
    for (std::uint64_t n = 0; n <= top; ++n) CHECK(sigma_circ_mfpr(d, n) == sigma_circ_fixed_end(s, n));
    for (std::uint64_t n = 0; n <= top; ++n) CHECK(sigma_table_mfpr(d).at(n) == sigma_circ_mfpr(d, n));
  }
}

TEST_CASE("random instances") {
  gen::Gen g(149);
  for (int i = 0; i < 100; ++i) {
    const auto d = mfpr_instance(g);
    CHECK_NOTHROW(d.validate());
    if (!d.a.empty()) CHECK(std::find(d.a.begin(), d.a.end(), sphere::normalize_ray(-d.chi)) != d.a.end());
  }
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) CHECK_FALSE(random_mfpr(rng, 2, 5, true).has_antipodal_pair());
}

TEST_CASE("Brown consistency") {
  const auto r = brown_consistency({pt({0, 0, 1})}, {chi({0, 0, -1})});
  CHECK(r.consistent);
  CHECK(r.uncovered.empty());
  const auto extra = brown_consistency({pt({0, 0, 1}), pt({1, 0, 0})}, {chi({0, 0, -2})});
  CHECK(extra.consistent);
  CHECK(extra.uncovered == std::vector<SpherePoint>{pt({1, 0, 0})});
  const auto bad = brown_consistency({pt({0, 0, 1})}, {chi({0, 0, 1})});
  CHECK_FALSE(bad.consistent);
  CHECK(bad.missing == std::vector<std::size_t>{0});
  const auto none = brown_consistency({}, {});
  CHECK(none.consistent);
  CHECK(none.uncovered.empty());
  CHECK_THROWS_AS(brown_consistency({pt({1, 0})}, {chi({0, 0})}), Error);
}
