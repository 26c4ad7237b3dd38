#pragma once

#include <vector>

#include "sharplat/lattice.hpp"

namespace sharplat {

/// L_p: the image {x_p} of L as a sub-carrier, with multiplication
/// (x, y) -> (xy)_p. Element names are inherited from L.
struct LocalizationResult {
  FiniteMultLattice lattice;
  ElementId prime;
  /// projection[x.index] is the id of x_p in `lattice`.
  std::vector<ElementId> projection;
};

/// The interval [a, 1] with multiplication x*y = xy v a.
struct QuotientResult {
  FiniteMultLattice lattice;
  ElementId base;
  /// projection[x.index] is the id of x v a in `lattice`.
  std::vector<ElementId> projection;
};

/// x_p = join of every a with a*s <= x for some s not below p.
/// Throws Error(NotPrime) unless p is prime.
ElementId localize_element(const FiniteMultLattice& L, ElementId p, ElementId x);

/// Builds and re-validates L_p. Throws Error(NotPrime), or
/// Error(InternalValidationFailure) if the induced structure is not a
/// multiplicative lattice or its meet disagrees with (x ^ y)_p.
LocalizationResult localize(const FiniteMultLattice& L, ElementId p);

/// Throws Error(DegenerateQuotient) when a is the top.
QuotientResult quotient(const FiniteMultLattice& L, ElementId a);

}  // namespace sharplat
