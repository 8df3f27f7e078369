#include "sigma/tree_sigma.hpp"

#include "sigma/error.hpp"

#include <algorithm>

namespace sigma::tree_sigma {

void GraphOfGroupsSummary::validate() const {
  if (fl_G < fl_Gcal)
    throw Error(ErrorCode::InvalidChain, "fl of the stabilizers (" + to_string(fl_Gcal) + ") exceeds fl G (" +
                                             to_string(fl_G) + ")");
  if (!has_fixed_end) return;
  if (!cl_chi) throw Error(ErrorCode::InvalidInput, "a fixed end needs cl(chi)");
  if (*cl_chi < fl_Gcal || fl_G < *cl_chi)
    throw Error(ErrorCode::InvalidChain, "need fl Gcal <= cl(chi) <= fl G, got " + to_string(fl_Gcal) + ", " +
                                             to_string(*cl_chi) + ", " + to_string(fl_G));
}

std::string to_string(SigmaValue v) {
  switch (v) {
    case SigmaValue::WholeBoundary: return "WholeBoundary";
    case SigmaValue::Singleton: return "Singleton";
    case SigmaValue::Empty: return "Empty";
  }
  return "?";
}

namespace {

void check_degree(std::uint64_t n, const ExtNat& top, const char* what) {
  if (!(n <= top))
    throw Error(ErrorCode::DegreeOutOfRange, "degree " + std::to_string(n) + " exceeds " + what + " = " + to_string(top));
}

}  // namespace

SigmaValue sigma_circ_no_fixed_end(const GraphOfGroupsSummary& s, std::uint64_t n) {
  if (s.has_fixed_end) throw Error(ErrorCode::InvalidInput, "the summary has a fixed end");
  s.validate();
  check_degree(n, s.fl_G, "fl G");
  return n <= s.fl_Gcal ? SigmaValue::WholeBoundary : SigmaValue::Empty;
}

SigmaValue sigma_circ_fixed_end(const GraphOfGroupsSummary& s, std::uint64_t n) {
  if (!s.has_fixed_end) throw Error(ErrorCode::InvalidInput, "the summary has no fixed end");
  s.validate();
  check_degree(n, s.fl_G, "fl G");
  if (n <= s.fl_Gcal) return SigmaValue::WholeBoundary;
  if (n <= *s.cl_chi) return SigmaValue::Singleton;
  return SigmaValue::Empty;
}

SigmaValue sigma_circ(const GraphOfGroupsSummary& s, std::uint64_t n) {
  return s.has_fixed_end ? sigma_circ_fixed_end(s, n) : sigma_circ_no_fixed_end(s, n);
}

SigmaTable sigma_table(const GraphOfGroupsSummary& s) {
  s.validate();
  SigmaTable t;
  t.fl_G = s.fl_G;
  // breakpoints: the last degree of each value
  std::vector<std::pair<SigmaValue, ExtNat>> steps{{SigmaValue::WholeBoundary, s.fl_Gcal}};
  if (s.has_fixed_end) steps.emplace_back(SigmaValue::Singleton, *s.cl_chi);
  steps.emplace_back(SigmaValue::Empty, s.fl_G);
  std::uint64_t lo = 0;
  for (const auto& [value, hi] : steps) {
    if (!(lo <= hi)) continue;  // empty range
    t.ranges.push_back({value, lo, hi});
    if (hi.is_infinite()) break;
    lo = hi.value() + 1;
  }
  return t;
}

SigmaValue SigmaTable::at(std::uint64_t n) const {
  for (const auto& r : ranges)
    if (r.lo <= n && n <= r.hi) return r.value;
  throw Error(ErrorCode::DegreeOutOfRange, "degree " + std::to_string(n) + " exceeds fl G = " + to_string(fl_G));
}

// ---------------------------------------------------------------- MFPR

void MFPRData::validate() const {
  if (chi.dim() != k) throw Error(ErrorCode::DimensionMismatch, "character has the wrong dimension");
  if (chi.is_zero()) throw Error(ErrorCode::ZeroCharacter, "the tree character must be nonzero");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].dim() != k) throw Error(ErrorCode::DimensionMismatch, "point of A has the wrong dimension");
    for (std::size_t j = 0; j < i; ++j)
      if (a[i] == a[j]) throw Error(ErrorCode::InvalidInput, "repeated point in A");
  }
}

bool MFPRData::has_antipodal_pair() const {
  for (const auto& p : a)
    if (std::find(a.begin(), a.end(), p.antipode()) != a.end()) return true;
  return false;
}

MFPRLengths mfpr_lengths(const MFPRData& d) {
  d.validate();
  MFPRLengths out;
  out.m_zero = sphere::m_value(d.a, Character::zero(d.k));
  out.m_chi = sphere::m_value(d.a, d.chi);
  out.m_minus_chi = sphere::m_value(d.a, -d.chi);
  out.fl_G = out.m_zero;
  out.cl_chi = min(out.m_chi, out.m_zero);
  out.fl_B = min(out.cl_chi, out.m_minus_chi);
  return out;
}

GraphOfGroupsSummary mfpr_summary(const MFPRData& d) {
  const MFPRLengths l = mfpr_lengths(d);
  return {l.fl_G, l.fl_B, true, l.cl_chi};
}

// Read straight off the m-values rather than through the summary, so the
// two routes can be compared.
SigmaValue sigma_circ_mfpr(const MFPRData& d, std::uint64_t n) {
  const MFPRLengths l = mfpr_lengths(d);
  check_degree(n, l.m_zero, "m(0)");
  if (n <= min(min(l.m_chi, l.m_minus_chi), l.m_zero)) return SigmaValue::WholeBoundary;
  if (n <= min(l.m_chi, l.m_zero)) return SigmaValue::Singleton;
  return SigmaValue::Empty;
}

SigmaTable sigma_table_mfpr(const MFPRData& d) { return sigma_table(mfpr_summary(d)); }

BrownReport brown_consistency(const std::vector<SpherePoint>& a, const std::vector<Character>& tree_characters) {
  BrownReport r;
  std::vector<bool> covered(a.size(), false);
  for (std::size_t i = 0; i < tree_characters.size(); ++i) {
    const Character& chi = tree_characters[i];
    if (!a.empty() && chi.dim() != a.front().dim())
      throw Error(ErrorCode::DimensionMismatch, "tree character has the wrong dimension");
    const SpherePoint p = sphere::normalize_ray(-chi);
    const auto it = std::find(a.begin(), a.end(), p);
    if (it == a.end()) {
      r.missing.push_back(i);
      r.consistent = false;
    } else {
      covered[static_cast<std::size_t>(it - a.begin())] = true;
    }
  }
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!covered[i]) r.uncovered.push_back(a[i]);
  return r;
}

MFPRData random_mfpr(std::mt19937_64& rng, std::size_t k, std::size_t points, bool finitely_presented) {
  if (k == 0) throw Error(ErrorCode::InvalidInput, "dimension must be positive");
  std::uniform_int_distribution<long long> coord(-2, 2);
  MFPRData d;
  d.k = k;
  // bounded attempts: in dimension 1 there are only two points
  for (int attempt = 0; attempt < 200 && d.a.size() < points; ++attempt) {
    std::vector<long long> v(k);
    bool zero = true;
    for (auto& x : v) zero = (x = coord(rng)) == 0 && zero;
    if (zero) continue;
    const SpherePoint p = sphere::normalize_ray(Character::from_integers(v));
    if (std::find(d.a.begin(), d.a.end(), p) != d.a.end()) continue;
    if (finitely_presented && std::find(d.a.begin(), d.a.end(), p.antipode()) != d.a.end()) continue;
    d.a.push_back(p);
  }
  if (d.a.empty()) {
    std::vector<long long> v(k, 0);
    v.back() = -1;
    d.chi = Character::from_integers(v);
  } else {
    const auto& p = d.a[std::uniform_int_distribution<std::size_t>(0, d.a.size() - 1)(rng)];
    d.chi = -p.as_character();
  }
  return d;
}

}  // namespace sigma::tree_sigma
