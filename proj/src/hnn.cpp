#include "sigma/hnn.hpp"

#include "sigma/error.hpp"

#include <map>

namespace sigma::cat0::hnn {

namespace mp = boost::multiprecision;

namespace {

Integer den(const Rational& x) { return mp::denominator(x); }
Integer num(const Rational& x) { return mp::numerator(x); }

Integer positive_mod(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

// Inverse of q modulo m, gcd(q, m) = 1.
Integer mod_inverse(const Integer& q, const Integer& m) {
  Integer old_r = positive_mod(q, m), r = m;
  Integer old_s = 1, s = 0;
  while (r != 0) {
    const Integer quotient = old_r / r;
    Integer tmp = old_r - quotient * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quotient * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) throw Error(ErrorCode::InvalidInput, "denominator not invertible modulo the HNN index");
  return positive_mod(old_s, m);
}

}  // namespace

Rational power(int n, long long k) {
  const Integer p = mp::pow(Integer(n), static_cast<unsigned>(k < 0 ? -k : k));
  return k >= 0 ? Rational(p) : Rational(Integer(1), p);
}

Rational canonical_residue(int n, const Rational& x, long long level) {
  const Rational modulus = power(n, level);
  return x - Rational(sigma::floor(x / modulus)) * modulus;
}

bool in_localization(int n, const Rational& x) {
  Integer d = den(x);
  for (;;) {
    const Integer g = mp::gcd(d, Integer(n));
    if (g == 1) return d == 1;
    d /= g;
  }
}

Vertex vertex_from_word(const TreeDescriptor& t, const std::string& word) {
  const int n = t.parameter();
  long long ups = 0;
  std::size_t i = 0;
  while (i < word.size() && word[i] == 'U') {
    ++ups;
    ++i;
  }
  Rational r = 0;
  long long position = -ups;
  for (; i < word.size(); ++i, ++position) {
    r += Rational(t.digit_value(word[i])) * power(n, position);
  }
  return {position, r};
}

std::string word_from_vertex(const TreeDescriptor& t, const Vertex& v) {
  const int n = t.parameter();
  long long ups = std::max(0LL, -v.level);
  while (den(v.residue * power(n, ups)) != 1) ++ups;
  std::string word(static_cast<std::size_t>(ups), 'U');
  Integer scaled = num(v.residue * power(n, ups));
  for (long long i = 0; i < v.level + ups; ++i) {
    word += t.digit_letter(static_cast<int>(scaled % n));
    scaled /= n;
  }
  return word;
}

TreeEnd fixed_end() { return {"", "U"}; }

std::optional<Rational> end_value(const TreeDescriptor& t, const TreeEnd& e) {
  if (e.period.find('U') != std::string::npos) return std::nullopt;
  const int n = t.parameter();
  std::size_t i = 0;
  long long ups = 0;
  while (i < e.prefix.size() && e.prefix[i] == 'U') {
    ++ups;
    ++i;
  }
  Rational head = 0;
  long long position = 0;
  for (; i < e.prefix.size(); ++i, ++position) head += Rational(t.digit_value(e.prefix[i])) * power(n, position);
  Rational cycle = 0;
  for (std::size_t j = 0; j < e.period.size(); ++j) {
    cycle += Rational(t.digit_value(e.period[j])) * power(n, static_cast<long long>(j));
  }
  // n-adic geometric series: sum_{m >= 0} n^(mL) = 1 / (1 - n^L).
  const Rational tail = cycle / (1 - power(n, static_cast<long long>(e.period.size())));
  return (head + power(n, position) * tail) * power(n, -ups);
}

TreeEnd end_from_value(const TreeDescriptor& t, const Rational& x) {
  const int n = t.parameter();
  long long ups = 0;
  Rational y = x;
  while (mp::gcd(den(y), Integer(n)) != 1) {
    y *= n;
    ++ups;
  }
  // Digits of the n-adic integer y; the states y_i repeat eventually.
  std::string digits;
  std::map<Rational, std::size_t> seen;
  while (!seen.count(y)) {
    seen.emplace(y, digits.size());
    const Integer d = positive_mod(num(y) * mod_inverse(den(y), Integer(n)), Integer(n));
    digits += t.digit_letter(static_cast<int>(d));
    y = (y - Rational(d)) / n;
  }
  const std::size_t start = seen.at(y);
  return tree::canonical_end(t, std::string(static_cast<std::size_t>(ups), 'U') + digits.substr(0, start),
                             digits.substr(start));
}

Vertex apply(int n, const Affine& f, const Vertex& v) {
  const long long level = v.level + f.power;
  return {level, canonical_residue(n, power(n, f.power) * v.residue + f.shift, level)};
}

Rational apply(int n, const Affine& f, const Rational& x) { return power(n, f.power) * x + f.shift; }

Affine compose(int n, const Affine& f, const Affine& g) {
  return {f.power + g.power, power(n, f.power) * g.shift + f.shift};
}

Affine inverse(int n, const Affine& f) { return {-f.power, -f.shift * power(n, -f.power)}; }

}  // namespace sigma::cat0::hnn
