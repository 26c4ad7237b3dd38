#pragma once

#include "sharplat/audit.hpp"
#include "sharplat/json_io.hpp"
#include "sharplat/predicates.hpp"

namespace sharplat {

// JSON renderings for the CLI. Elements are referred to by name and fields
// appear in a fixed order.
Json to_json(const FiniteMultLattice& L, const ElementProfile& profile);
Json to_json(const FiniteMultLattice& L, const LatticeProfile& profile);
Json to_json(const FiniteMultLattice& L, const SharpnessReport& report);
Json to_json(const TheoremAudit& audit);

}  // namespace sharplat
