#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "ebs/sets.hpp"

namespace ebs {

/// Symbolic descriptions of the subsemiheaps of the extended bicyclic
/// semigroup, materializable into any window.  Diagonal offsets and lattice
/// parameters are relative to the anchor.

struct Singleton {
  Element p;
  friend bool operator==(Singleton const&, Singleton const&) = default;
};

/// {anchor} plus diagonal points anchor + (k, k) for the listed offsets.
/// `infinite` records that the chain was observed to continue past the
/// window's reliable horizon; it does not change materialization.
struct DiagonalChain {
  Element anchor;
  std::vector<std::int64_t> offsets;  // strictly ascending, all >= 1
  bool infinite = false;
  friend bool operator==(DiagonalChain const&, DiagonalChain const&) = default;
};

/// {anchor} u chain u K^sigma anchored at the diagonal offset `start`.
struct ChainPlusLattice {
  Element anchor;
  std::vector<std::int64_t> chain;  // ascending, all in [1, start)
  std::int64_t start = 1;
  std::int64_t sigma = 1;
  friend bool operator==(ChainPlusLattice const&, ChainPlusLattice const&) = default;
};

/// {anchor} u chain u union of period-sigma lattices at the listed diagonal
/// offsets.
struct ChainPlusLatticeUnion {
  Element anchor;
  std::vector<std::int64_t> chain;    // ascending, all below anchors.front()
  std::vector<std::int64_t> anchors;  // ascending, all >= 1
  std::int64_t sigma = 1;
  friend bool operator==(ChainPlusLatticeUnion const&, ChainPlusLatticeUnion const&) = default;
};

/// K^p at the anchor: {anchor + (l p, m p) : l, m >= 0}.
struct Lattice {
  Element anchor;
  std::int64_t period = 1;
  friend bool operator==(Lattice const&, Lattice const&) = default;
};

/// Union of period-p lattices at diagonal offsets q0 < ... < qn < p.
struct LatticeUnion {
  Element anchor;
  std::int64_t period = 1;
  std::vector<std::int64_t> offsets;  // ascending, within [0, period)
  friend bool operator==(LatticeUnion const&, LatticeUnion const&) = default;
};

/// D_{alpha,beta}(J) = {anchor + (j, j) : j in J}; a subsemiheap for any J.
struct DiagonalSubset {
  Element anchor;
  std::vector<std::int64_t> offsets;  // ascending, >= 0
  friend bool operator==(DiagonalSubset const&, DiagonalSubset const&) = default;
};

/// a_{ii} E a_{jj} = {(p, q) : p >= i, q >= j}.
struct CornerIdeal {
  std::int64_t i = 0;
  std::int64_t j = 0;
  friend bool operator==(CornerIdeal const&, CornerIdeal const&) = default;
};

using Family = std::variant<Singleton, DiagonalChain, ChainPlusLattice,
                            ChainPlusLatticeUnion, Lattice, LatticeUnion,
                            DiagonalSubset, CornerIdeal>;

/// Tag name as used in JSON ("Singleton", "Lattice", ...).
std::string family_tag(Family const& f);

/// One-line human-readable description.
std::string family_summary(Family const& f);

/// Validates the structural invariants (ascending offsets, positive periods,
/// chain below lattice start, ...); throws std::domain_error on violation.
void family_validate(Family const& f);

/// Exact membership test against the (possibly infinite) family.
bool family_contains(Family const& f, Element e);

/// Intersection of the family with the window, from the defining formulas.
ElementSet family_materialize(Family const& f, Window const& w);

/// Canonical form: re-anchors variants whose anchor is not the set minimum,
/// collapses degenerate variants (empty chain lists, single-residue unions,
/// corner ideals) onto the smaller constructor.  Canonical forms of equal
/// sets compare equal for every family the classifier can emit.
Family family_canonical(Family const& f);

}  // namespace ebs
