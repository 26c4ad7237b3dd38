#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"
#include "sharplat/lattice.hpp"

namespace sharplat {

using Json = nlohmann::ordered_json;

/// Lattice description document:
///   { "elements": [name...], "leq": [[0|1...]...], "mult": [[index...]...] }
/// plus optional string-valued annotations ("localized_at", "quotient_by", ...).
/// Indices refer to positions in "elements". Throws Error(BadSchema) on shape
/// errors and the matching axiom error otherwise.
FiniteMultLattice parse_lattice(const Json& doc);

/// Poset-only document (same schema; "mult" is ignored when present).
FinitePoset parse_poset(const Json& doc);

/// Canonical-order serialization; parse_lattice(to_json(L)) == L.
Json to_json(const FiniteMultLattice& lattice);
Json to_json(const FinitePoset& poset);

/// Reads and parses a JSON file; I/O failures throw std::runtime_error,
/// malformed JSON throws Error(BadSchema).
Json read_json_file(const std::filesystem::path& path);

/// Compact by default; two-space indentation when `pretty`.
std::string dump(const Json& doc, bool pretty);

}  // namespace sharplat
