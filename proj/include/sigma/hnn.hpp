#pragma once

// Coordinates on the Bass-Serre tree of the ascending HNN extension
// BS(1, n) = <b, t | t b t^-1 = b^n>, realized as Z[1/n] x| Z acting by
// x -> n^p x + c. Vertices are the cosets n^k Z + r of Z[1/n], with the
// canonical residue r in [0, n^k). The end reached by decreasing k is the
// distinguished fixed end U^omega; every other end is an n-adic number,
// and the eventually periodic ends are exactly the rationals.
//
// Word addresses (see tree.hpp): U^a followed by digits d_0 d_1 ... names the
// coset n^(m-a) Z + sum_i d_i n^(i-a), m the number of digits.

#include "sigma/rational.hpp"
#include "sigma/tree.hpp"

#include <optional>

namespace sigma::cat0::hnn {

struct Vertex {
  long long level = 0;
  Rational residue;  // in [0, n^level)
  friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// n^k for any integer k.
Rational power(int n, long long k);

/// x mod n^level, as a representative in [0, n^level).
Rational canonical_residue(int n, const Rational& x, long long level);

/// True iff the denominator of x only has prime factors dividing n.
bool in_localization(int n, const Rational& x);

Vertex vertex_from_word(const TreeDescriptor& t, const std::string& word);
std::string word_from_vertex(const TreeDescriptor& t, const Vertex& v);

/// The fixed end U^omega.
TreeEnd fixed_end();

/// nullopt for U^omega, otherwise the n-adic rational named by the end.
std::optional<Rational> end_value(const TreeDescriptor& t, const TreeEnd& e);
TreeEnd end_from_value(const TreeDescriptor& t, const Rational& x);

struct Affine {
  long long power = 0;
  Rational shift;
  friend bool operator==(const Affine&, const Affine&) = default;
};

Vertex apply(int n, const Affine& f, const Vertex& v);
Rational apply(int n, const Affine& f, const Rational& x);
Affine compose(int n, const Affine& f, const Affine& g);  // f o g
Affine inverse(int n, const Affine& f);

}  // namespace sigma::cat0::hnn
