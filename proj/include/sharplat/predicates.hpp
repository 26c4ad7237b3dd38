#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "sharplat/lattice.hpp"

namespace sharplat {

/// Outcome of a universally quantified check. A failed check carries the
/// least witness tuple (lexicographic in canonical order).
struct Check {
  bool holds = true;
  std::vector<ElementId> witness;

  explicit operator bool() const noexcept { return holds; }

  static Check pass() { return {}; }
  static Check fail(std::vector<ElementId> witness) { return {false, std::move(witness)}; }
};

// Element predicates. All are exhaustive scans over the carrier.
Check is_prime(const FiniteMultLattice& L, ElementId p);
Check is_maximal(const FiniteMultLattice& L, ElementId m);
Check is_cancellative(const FiniteMultLattice& L, ElementId x);
/// y ^ z*x == ((y:x) ^ z) * x for all y, z.
Check is_meet_principal(const FiniteMultLattice& L, ElementId x);
/// (y:x) * x == x ^ y for all y.
Check is_weak_meet_principal(const FiniteMultLattice& L, ElementId x);
/// y v (z:x) == ((y*x v z) : x) for all y, z.
Check is_join_principal(const FiniteMultLattice& L, ElementId x);
/// (x*y : x) == y v (0:x) for all y.
Check is_weak_join_principal(const FiniteMultLattice& L, ElementId x);
Check is_principal(const FiniteMultLattice& L, ElementId x);

struct ElementProfile {
  ElementId element;
  Check is_prime;
  Check is_maximal;
  Check is_cancellative;
  Check is_meet_principal;
  Check is_weak_meet_principal;
  Check is_join_principal;
  Check is_weak_join_principal;
  Check is_principal;
};

ElementProfile element_profile(const FiniteMultLattice& L, ElementId x);

std::vector<ElementId> maximal_elements(const FiniteMultLattice& L);
std::vector<ElementId> prime_elements(const FiniteMultLattice& L);
std::vector<ElementId> principal_elements(const FiniteMultLattice& L);

/// (x, a) with x principal and (x:a) not principal, if any.
Check is_pseudo_dedekind(const FiniteMultLattice& L);

/// Krull dimension: the number of strict steps in the longest chain of primes.
/// In a domain this is the number of nonzero primes in the longest chain.
std::size_t dimension(const FiniteMultLattice& L);

struct LatticeProfile {
  std::vector<ElementId> maximal;
  std::vector<ElementId> primes;
  std::vector<ElementId> principal;
  bool is_local = false;
  bool is_domain = false;
  bool is_totally_ordered = false;
  bool is_principally_generated = false;
  /// Every compact element principal; every element is compact here, so this
  /// coincides with is_dedekind.
  bool is_prufer = false;
  bool is_dedekind = false;
  Check is_pseudo_dedekind;
  /// Every nonzero prime lies below exactly one maximal element.
  bool is_h_local = false;
  std::size_t dimension = 0;
};

LatticeProfile lattice_profile(const FiniteMultLattice& L);

// The four equivalent sharpness characterizations, each computed independently.

/// Every a1*a2 <= b factors as b = b1*b2 with a1 <= b1, a2 <= b2.
/// Witness on failure: (a1, a2, b).
Check sharp_by_definition(const FiniteMultLattice& L);
/// a == (a:(a:b)) * (a:b) for all a, b. Witness: (a, b).
Check sharp_by_residual_identity(const FiniteMultLattice& L);
/// (a:b) divides a for all a, b. Witness: (a, b).
Check sharp_by_divides(const FiniteMultLattice& L);
/// (a:b) divides a whenever 0 < a < b < 1 and a is not prime. Witness: (a, b).
Check sharp_by_restricted_divides(const FiniteMultLattice& L);

struct Factorization {
  ElementId a1, a2, b, b1, b2;
};

struct SharpnessReport {
  bool by_definition = false;
  bool by_residual_identity = false;
  bool by_divides = false;
  bool by_restricted_divides = false;
  /// Least (a, b) where the residual identity fails.
  std::optional<std::pair<ElementId, ElementId>> counterexample;
  /// Least (a1, a2, b) with no factorization.
  std::optional<std::vector<ElementId>> definition_counterexample;
  /// For every a1*a2 <= b that factors, the least (b1, b2).
  std::vector<Factorization> factorization_witnesses;

  bool sharp() const noexcept { return by_definition; }
};

/// Runs all four checks and throws Error(InternalEquivalenceViolation) if they
/// disagree.
SharpnessReport sharpness_report(const FiniteMultLattice& L);

/// Residual-identity check alone; the cheapest sharpness test.
bool is_sharp(const FiniteMultLattice& L);

struct PrincipalMonoidReport {
  std::vector<ElementId> principal;
  /// True when L is a pseudo-Dedekind domain, so the LCM law is checked.
  bool law_checked = false;
  /// x ^ y == y * (x:y) for all nonzero principal x, y. Witness: (x, y).
  Check lcm_law;
};

PrincipalMonoidReport principal_monoid(const FiniteMultLattice& L);

}  // namespace sharplat
