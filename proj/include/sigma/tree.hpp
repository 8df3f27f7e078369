#pragma once

// Lazy locally finite trees addressed by reduced words from a root vertex.
//
// A vertex is a word w; its parent is w with the last letter removed. A point
// of the tree is (w, s) with s in [0, 1): the point at distance s from w
// toward its parent (the root only with s = 0). Ends are eventually periodic
// words prefix . (period)^omega in a canonical form. Everything here is exact.

#include "sigma/rational.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace sigma::cat0 {

class TreeDescriptor {
 public:
  enum class Kind {
    /// d-regular tree; letters 0-9a-z, consecutive letters differ.
    Regular,
    /// Cayley tree of the free group of rank m; letters a.. and inverses A..
    Cayley,
    /// Bass-Serre tree of an ascending HNN extension of index n: the
    /// (n+1)-regular tree with a distinguished end. Letter U steps toward the
    /// fixed end, digits 0-9a-z step to one of the n children.
    Hnn,
  };

  static TreeDescriptor regular(int degree);
  static TreeDescriptor cayley(int rank);
  static TreeDescriptor hnn(int index);

  Kind kind() const { return kind_; }
  int parameter() const { return parameter_; }
  /// Number of neighbours of every vertex.
  int degree() const;

  std::string_view alphabet() const { return alphabet_; }
  bool is_letter(char c) const;
  bool may_follow(char previous, char next) const;
  /// Inverse letter for Cayley trees.
  char inverse(char c) const;
  /// Value of an HNN digit letter.
  int digit_value(char c) const;
  char digit_letter(int value) const;

  bool is_reduced(std::string_view word) const;

  friend bool operator==(const TreeDescriptor& a, const TreeDescriptor& b) {
    return a.kind_ == b.kind_ && a.parameter_ == b.parameter_;
  }

 private:
  TreeDescriptor(Kind kind, int parameter);

  Kind kind_;
  int parameter_;
  std::string alphabet_;
};

struct TreePoint {
  std::string address;
  Rational offset;  // toward the parent, in [0, 1)

  static TreePoint vertex(std::string address) { return {std::move(address), Rational(0)}; }
  bool is_vertex() const { return offset == 0; }
  friend bool operator==(const TreePoint&, const TreePoint&) = default;
};

struct TreeEnd {
  std::string prefix;
  std::string period;

  /// Letter at position i of the infinite word.
  char at(std::size_t i) const;
  /// First n letters.
  std::string head(std::size_t n) const;
  friend bool operator==(const TreeEnd&, const TreeEnd&) = default;
};

std::string to_string(const TreePoint& p);
std::string to_string(const TreeEnd& e);

namespace tree {

/// Validates address, offset range and reducedness; throws InvalidInput.
void validate(const TreeDescriptor& t, const TreePoint& p);

/// Canonical form (primitive period, shortest prefix); throws InvalidInput if
/// the word is not reduced or the period is empty.
TreeEnd canonical_end(const TreeDescriptor& t, std::string prefix, std::string period);

/// Depth of a point below the root: |address| - offset.
Rational depth(const TreePoint& p);

/// The point at depth `d` on the root path to `vertex`; 0 <= d <= |vertex|.
TreePoint point_on_path(const std::string& vertex, const Rational& d);

Rational distance(const TreePoint& a, const TreePoint& b);

/// Unit-speed geodesic point; throws ParameterOutOfRange unless 0 <= t <= d(a,b).
TreePoint geodesic_point(const TreePoint& a, const TreePoint& b, const Rational& t);

/// Point at parameter t >= 0 on the ray from a to the end.
TreePoint ray_point(const TreePoint& a, const TreeEnd& end, const Rational& t);

/// Horofunction toward `end` normalized at the root: lim (t - d(p, xi(t)))
/// where xi is the ray from the root.
Rational horofunction(const TreePoint& p, const TreeEnd& end);

/// Busemann function of the ray from `base` to `end`, evaluated at b.
Rational busemann(const TreePoint& base, const TreeEnd& end, const TreePoint& b);

/// Length of the common part of the rays from `base` to two ends.
Rational ray_overlap(const TreePoint& base, const TreeEnd& e1, const TreeEnd& e2);

/// Neighbouring vertices of a vertex.
std::vector<std::string> neighbours(const TreeDescriptor& t, const std::string& vertex);

}  // namespace tree
}  // namespace sigma::cat0
