#pragma once

// The open invariants Sigma-circ^n(rho) of a cocompact action on a locally
// finite tree T, as functions of finiteness and connectivity lengths:
//
//   no fixed end:   dT for n <= fl(stabilizers), empty up to fl G
//   one fixed end:  dT up to fl(stabilizers), {e} up to cl(chi), empty up to fl G
//
// and, for metabelian groups of finite Pruefer rank split as an ascending HNN
// extension, the same lengths read off the m-function of Sigma^1(G)^c.

#include "sigma/character_sphere.hpp"

#include <optional>
#include <random>
#include <string>
#include <vector>

namespace sigma::tree_sigma {

using sphere::Character;
using sphere::ExtNat;
using sphere::SpherePoint;

struct GraphOfGroupsSummary {
  ExtNat fl_G;
  ExtNat fl_Gcal;  // finiteness length of the stabilizer system
  bool has_fixed_end = false;
  std::optional<ExtNat> cl_chi;  // required with a fixed end

  /// Throws InvalidChain unless fl_Gcal <= fl_G and, with a fixed end,
  /// fl_Gcal <= cl_chi <= fl_G; InvalidInput if cl_chi is missing.
  void validate() const;
};

enum class SigmaValue { WholeBoundary, Singleton, Empty };
std::string to_string(SigmaValue v);

/// Degrees lo..hi (hi possibly infinite) sharing one value.
struct DegreeRange {
  SigmaValue value;
  std::uint64_t lo = 0;
  ExtNat hi;
};

/// The nonempty ranges, in order; together they cover 0..fl_G.
struct SigmaTable {
  ExtNat fl_G;
  std::vector<DegreeRange> ranges;

  /// Throws DegreeOutOfRange past fl_G.
  SigmaValue at(std::uint64_t n) const;
};

/// Throws DegreeOutOfRange for n > fl_G, InvalidInput if s has a fixed end.
SigmaValue sigma_circ_no_fixed_end(const GraphOfGroupsSummary& s, std::uint64_t n);
/// Throws DegreeOutOfRange, InvalidChain, InvalidInput if s has no fixed end.
SigmaValue sigma_circ_fixed_end(const GraphOfGroupsSummary& s, std::uint64_t n);
/// Dispatches on has_fixed_end.
SigmaValue sigma_circ(const GraphOfGroupsSummary& s, std::uint64_t n);
SigmaTable sigma_table(const GraphOfGroupsSummary& s);

struct MFPRData {
  std::size_t k = 0;
  std::vector<SpherePoint> a;  // Sigma^1(G)^c
  Character chi;               // chi(B) = 0, chi(t) = -1

  /// Throws DimensionMismatch, InvalidInput on repeated points, ZeroCharacter.
  void validate() const;
  /// The group is finitely presented iff A has no antipodal pair.
  bool has_antipodal_pair() const;
};

struct MFPRLengths {
  ExtNat fl_G;    // m(0)
  ExtNat cl_chi;  // min(m(chi), m(0))
  ExtNat fl_B;    // min(m(chi), m(-chi), m(0))
  ExtNat m_zero, m_chi, m_minus_chi;
};

MFPRLengths mfpr_lengths(const MFPRData& d);

/// The summary of the HNN tree: stabilizers are conjugates of B.
GraphOfGroupsSummary mfpr_summary(const MFPRData& d);

/// Throws DegreeOutOfRange for n > m(0).
SigmaValue sigma_circ_mfpr(const MFPRData& d, std::uint64_t n);
SigmaTable sigma_table_mfpr(const MFPRData& d);

struct BrownReport {
  bool consistent = true;
  std::vector<std::size_t> missing;        // trees whose [-chi] is not in A
  std::vector<SpherePoint> uncovered;      // points of A not of the form [-chi]
};

/// Checks [-chi] in A for each declared rooted tree character, and lists the
/// points of A no declared tree accounts for. Uncovered points do not make
/// the data inconsistent: more trees may exist than were declared.
BrownReport brown_consistency(const std::vector<SpherePoint>& a, const std::vector<Character>& tree_characters);

/// Random instance with small integer points; chi is chosen with [-chi] in A
/// whenever A is nonempty. With finitely_presented, A has no antipodal pair.
MFPRData random_mfpr(std::mt19937_64& rng, std::size_t k, std::size_t points, bool finitely_presented);

}  // namespace sigma::tree_sigma
