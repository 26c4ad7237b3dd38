#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sharplat/json_io.hpp"
#include "sharplat/lattice.hpp"

namespace sharplat {

/// The chain 0 < a < b < ... < 1 with `n` elements in total. Proper nonzero
/// elements are named a, b, c, ... Throws Error(SizeTooSmall) for n < 2.
FinitePoset chain_poset(std::size_t n);

/// Every multiplication making `poset` a multiplicative lattice, each exactly
/// once, sorted lexicographically by canonical row-major table. The search is
/// split across threads at the first free cell.
std::vector<FiniteMultLattice> enumerate_structures(const FinitePoset& poset, unsigned threads = 0);

/// Single-threaded reference for enumerate_structures; identical output.
std::vector<FiniteMultLattice> enumerate_structures_serial(const FinitePoset& poset);

/// Thread count for parallel kernels: `requested` if nonzero, else the OpenMP
/// default; capped by the SHARPLAT_THREADS environment variable when set.
unsigned resolve_threads(unsigned requested);

/// Order-preserving permutations of the carrier (perm[i] is the image of i).
std::vector<std::vector<std::size_t>> poset_automorphisms(const FinitePoset& poset);

/// Lexicographically least relabeling of `mult` over the given automorphisms.
Table canonical_form(const FinitePoset& poset, const Table& mult,
                     const std::vector<std::vector<std::size_t>>& automorphisms);

struct CensusOptions {
  bool keep_representatives = false;
  /// Run the theorem audit on every structure; a falsified claim throws
  /// Error(ClaimFalsified) whose message carries the serialized lattice.
  bool audit_each = false;
  unsigned threads = 0;
};

struct CensusEntry {
  FiniteMultLattice lattice;
  bool sharp = false;
  bool domain = false;
  bool all_principal = false;
};

struct Census {
  Json poset;
  std::size_t total_structures = 0;
  std::size_t sharp_count = 0;
  std::size_t domain_count = 0;
  std::size_t all_principal_count = 0;
  std::size_t automorphism_count = 1;
  /// Structures up to poset automorphism.
  std::size_t isomorphism_classes = 0;
  /// Filled when keep_representatives is set, in enumeration order.
  std::vector<CensusEntry> representatives;
};

/// Enumerates, classifies each structure with the full four-way sharpness
/// report, and aggregates. Classification runs in parallel per structure.
Census census(const FinitePoset& poset, const CensusOptions& options = {});

/// Single-threaded reference for census.
Census census_serial(const FinitePoset& poset, const CensusOptions& options = {});

Json to_json(const Census& census);

}  // namespace sharplat
