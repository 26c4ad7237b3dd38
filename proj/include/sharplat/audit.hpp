#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sharplat/lattice.hpp"

namespace sharplat {

enum class ClaimStatus { Verified, NotApplicable, Falsified };

std::string_view to_string(ClaimStatus status);

/// One structural theorem evaluated on one lattice. The conclusion is always
/// evaluated when it is meaningful, but a claim whose hypotheses fail is
/// NotApplicable regardless of the conclusion.
struct ClaimRecord {
  std::string id;
  std::string statement;
  bool hypotheses_hold = false;
  bool conclusion_holds = false;
  ClaimStatus status = ClaimStatus::NotApplicable;
  /// Element names witnessing a failed conclusion.
  std::vector<std::string> witness;
};

struct TheoremAudit {
  std::vector<ClaimRecord> claims;

  const ClaimRecord& at(std::string_view id) const;
  const ClaimRecord* first_falsified() const;
};

/// Stable ids of every audited claim, in report order.
const std::vector<std::string>& audited_claim_ids();

/// Claims about domains generated by principal elements are gated on
/// is_domain && is_principally_generated in addition to their own hypotheses.
TheoremAudit theorem_audit(const FiniteMultLattice& L);

/// Throws Error(ClaimFalsified) naming the first falsified claim.
void require_no_falsified(const TheoremAudit& audit);

}  // namespace sharplat
