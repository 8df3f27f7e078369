#include "sigma/tree.hpp"

#include "sigma/error.hpp"

#include <algorithm>
#include <cctype>

namespace sigma::cat0 {
namespace {

constexpr std::string_view kDigits = "0123456789abcdefghijklmnopqrstuvwxyz";

std::size_t common_prefix(std::string_view a, std::string_view b) {
  const std::size_t n = std::min(a.size(), b.size());
  std::size_t i = 0;
  while (i < n && a[i] == b[i]) ++i;
  return i;
}

std::size_t common_prefix(std::string_view w, const TreeEnd& end) {
  std::size_t i = 0;
  while (i < w.size() && w[i] == end.at(i)) ++i;
  return i;
}

Integer ceil(const Rational& q) { return -sigma::floor(-q); }

std::size_t to_size(const Integer& n) { return n.convert_to<std::size_t>(); }

}  // namespace

TreeDescriptor::TreeDescriptor(Kind kind, int parameter) : kind_(kind), parameter_(parameter) {
  switch (kind) {
    case Kind::Regular:
      alphabet_ = std::string(kDigits.substr(0, static_cast<std::size_t>(parameter)));
      break;
    case Kind::Cayley:
      for (int i = 0; i < parameter; ++i) {
        alphabet_ += static_cast<char>('a' + i);
        alphabet_ += static_cast<char>('A' + i);
      }
      break;
    case Kind::Hnn:
      alphabet_ = "U" + std::string(kDigits.substr(0, static_cast<std::size_t>(parameter)));
      break;
  }
}

TreeDescriptor TreeDescriptor::regular(int degree) {
  if (degree < 2 || degree > 36) throw Error(ErrorCode::InvalidInput, "regular tree degree must be in [2, 36]");
  return TreeDescriptor(Kind::Regular, degree);
}

TreeDescriptor TreeDescriptor::cayley(int rank) {
  if (rank < 1 || rank > 13) throw Error(ErrorCode::InvalidInput, "Cayley tree rank must be in [1, 13]");
  return TreeDescriptor(Kind::Cayley, rank);
}

TreeDescriptor TreeDescriptor::hnn(int index) {
  if (index < 2 || index > 36) throw Error(ErrorCode::InvalidInput, "HNN index must be in [2, 36]");
  return TreeDescriptor(Kind::Hnn, index);
}

int TreeDescriptor::degree() const {
  switch (kind_) {
    case Kind::Regular: return parameter_;
    case Kind::Cayley: return 2 * parameter_;
    case Kind::Hnn: return parameter_ + 1;
  }
  return 0;
}

bool TreeDescriptor::is_letter(char c) const { return alphabet_.find(c) != std::string::npos; }

bool TreeDescriptor::may_follow(char previous, char next) const {
  switch (kind_) {
    case Kind::Regular: return previous != next;
    case Kind::Cayley: return next != inverse(previous);
    case Kind::Hnn:
      if (previous != 'U' && next == 'U') return false;  // no way back up after a step down
      if (previous == 'U' && next == '0') return false;  // child 0 of the parent is where we came from
      return true;
  }
  return false;
}

char TreeDescriptor::inverse(char c) const {
  if (std::islower(static_cast<unsigned char>(c))) return static_cast<char>(std::toupper(c));
  return static_cast<char>(std::tolower(c));
}

int TreeDescriptor::digit_value(char c) const {
  const auto pos = kDigits.find(c);
  if (pos == std::string_view::npos || static_cast<int>(pos) >= parameter_) {
    throw Error(ErrorCode::InvalidInput, std::string("not a digit letter: ") + c);
  }
  return static_cast<int>(pos);
}

char TreeDescriptor::digit_letter(int value) const { return kDigits.at(static_cast<std::size_t>(value)); }

bool TreeDescriptor::is_reduced(std::string_view word) const {
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (!is_letter(word[i])) return false;
    if (i > 0 && !may_follow(word[i - 1], word[i])) return false;
  }
  return true;
}

char TreeEnd::at(std::size_t i) const {
  if (i < prefix.size()) return prefix[i];
  return period[(i - prefix.size()) % period.size()];
}

std::string TreeEnd::head(std::size_t n) const {
  std::string s;
  s.reserve(n);
  for (std::size_t i = 0; i < n; ++i) s += at(i);
  return s;
}

std::string to_string(const TreePoint& p) {
  std::string s = p.address.empty() ? std::string("<root>") : p.address;
  if (p.offset != 0) s += "+" + sigma::to_string(p.offset);
  return s;
}

std::string to_string(const TreeEnd& e) { return e.prefix + "(" + e.period + ")^w"; }

namespace tree {

void validate(const TreeDescriptor& t, const TreePoint& p) {
  if (!t.is_reduced(p.address)) throw Error(ErrorCode::InvalidInput, "address '" + p.address + "' is not a reduced word");
  if (p.offset < 0 || p.offset >= 1) throw Error(ErrorCode::InvalidInput, "edge offset must lie in [0, 1)");
  if (p.address.empty() && p.offset != 0) throw Error(ErrorCode::InvalidInput, "the root has no parent edge");
}

TreeEnd canonical_end(const TreeDescriptor& t, std::string prefix, std::string period) {
  if (period.empty()) throw Error(ErrorCode::InvalidInput, "end period must be nonempty");
  const std::string probe = prefix + period + period;
  if (!t.is_reduced(probe)) {
    throw Error(ErrorCode::InvalidInput, "end word " + prefix + "(" + period + ")^w is not reduced");
  }
  // Primitive root of the period.
  const std::size_t n = period.size();
  for (std::size_t len = 1; len <= n; ++len) {
    if (n % len) continue;
    bool repeats = true;
    for (std::size_t i = len; i < n && repeats; ++i) repeats = period[i] == period[i - len];
    if (repeats) {
      period.resize(len);
      break;
    }
  }
  // Absorb the tail of the prefix into the period.
  while (!prefix.empty() && prefix.back() == period.back()) {
    prefix.pop_back();
    std::rotate(period.rbegin(), period.rbegin() + 1, period.rend());
  }
  return {std::move(prefix), std::move(period)};
}

Rational depth(const TreePoint& p) { return Rational(static_cast<long long>(p.address.size())) - p.offset; }

TreePoint point_on_path(const std::string& vertex, const Rational& d) {
  const Integer up = ceil(d);
  const std::size_t j = to_size(up);
  return {vertex.substr(0, j), Rational(up) - d};
}

Rational distance(const TreePoint& a, const TreePoint& b) {
  const Rational da = depth(a);
  const Rational db = depth(b);
  const Rational c(static_cast<long long>(common_prefix(a.address, b.address)));
  const Rational m = std::min({c, da, db});
  return da + db - 2 * m;
}

TreePoint geodesic_point(const TreePoint& a, const TreePoint& b, const Rational& t) {
  const Rational da = depth(a);
  const Rational db = depth(b);
  const Rational c(static_cast<long long>(common_prefix(a.address, b.address)));
  const Rational m = std::min({c, da, db});
  const Rational total = da + db - 2 * m;
  if (t < 0 || t > total) throw Error(ErrorCode::ParameterOutOfRange, "geodesic parameter outside [0, d(a,b)]");
  const Rational up = da - m;
  if (t <= up) return point_on_path(a.address, da - t);
  return point_on_path(b.address, m + (t - up));
}

TreePoint ray_point(const TreePoint& a, const TreeEnd& end, const Rational& t) {
  if (t < 0) throw Error(ErrorCode::ParameterOutOfRange, "ray parameter must be >= 0");
  const Rational da = depth(a);
  const Rational c(static_cast<long long>(common_prefix(a.address, end)));
  const Rational m = std::min(c, da);
  const Rational up = da - m;
  if (t <= up) return point_on_path(a.address, da - t);
  const Rational d = m + (t - up);
  return point_on_path(end.head(to_size(ceil(d))), d);
}

Rational horofunction(const TreePoint& p, const TreeEnd& end) {
  const Rational d = depth(p);
  const Rational c(static_cast<long long>(common_prefix(p.address, end)));
  const Rational m = std::min(c, d);
  return 2 * m - d;
}

Rational busemann(const TreePoint& base, const TreeEnd& end, const TreePoint& b) {
  return horofunction(b, end) - horofunction(base, end);
}

Rational ray_overlap(const TreePoint& base, const TreeEnd& e1, const TreeEnd& e2) {
  // Two distinct canonical ends disagree within this many letters.
  const std::size_t bound = std::max(e1.prefix.size(), e2.prefix.size()) + e1.period.size() * e2.period.size() + 1;
  std::size_t split = 0;
  while (split <= bound && e1.at(split) == e2.at(split)) ++split;
  if (split > bound) throw Error(ErrorCode::InvalidInput, "ray_overlap of equal ends is infinite");
  // Both rays have merged with their ends well before parameter T.
  const Rational big = depth(base) + Rational(static_cast<long long>(split) + 2);
  const Rational gap = distance(ray_point(base, e1, big), ray_point(base, e2, big));
  return (2 * big - gap) / 2;
}

std::vector<std::string> neighbours(const TreeDescriptor& t, const std::string& vertex) {
  std::vector<std::string> out;
  if (!vertex.empty()) out.push_back(vertex.substr(0, vertex.size() - 1));
  for (char x : t.alphabet()) {
    if (vertex.empty() || t.may_follow(vertex.back(), x)) out.push_back(vertex + x);
  }
  return out;
}

}  // namespace tree
}  // namespace sigma::cat0
