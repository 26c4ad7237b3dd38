#include "sharplat/audit.hpp"

#include <algorithm>
#include <functional>
#include <optional>

#include "sharplat/constructions.hpp"
#include "sharplat/predicates.hpp"

namespace sharplat {

std::string_view to_string(ClaimStatus status) {
  switch (status) {
    case ClaimStatus::Verified: return "verified";
    case ClaimStatus::NotApplicable: return "not_applicable";
    case ClaimStatus::Falsified: return "falsified";
  }
  return "unknown";
}

const ClaimRecord& TheoremAudit::at(std::string_view id) const {
  for (const auto& c : claims) {
    if (c.id == id) return c;
  }
  throw std::out_of_range("no audited claim " + std::string(id));
}

const ClaimRecord* TheoremAudit::first_falsified() const {
  for (const auto& c : claims) {
    if (c.status == ClaimStatus::Falsified) return &c;
  }
  return nullptr;
}

const std::vector<std::string>& audited_claim_ids() {
  static const std::vector<std::string> ids = {
      "maximal_square_gap",
      "indecomposable_is_prime",
      "weak_meet_principal_implies_sharp",
      "chain_square_condition_implies_sharp",
      "five_chain_sharpness_criterion",
      "comaximal_join_principal",
      "maximal_join_irredundant",
      "localization_preserves_sharp",
      "quotient_preserves_sharp",
      "sharp_iff_all_principal",
      "sharp_implies_pseudo_dedekind",
      "sharp_implies_prufer",
      "principal_lcm_law",
      "residual_commutes_with_localization",
      "sharp_is_one_dimensional_prufer",
      "prufer_iff_locally_totally_ordered",
  };
  return ids;
}

namespace {

// Conclusion outcome: nullopt means it holds, otherwise a witness.
using Outcome = std::optional<std::vector<std::string>>;

class Auditor {
 public:
  explicit Auditor(const FiniteMultLattice& L) : L_(L), profile_(lattice_profile(L)) {
    sharp_ = sharpness_report(L).sharp();
    principal_flags_.assign(L.size(), false);
    for (auto x : profile_.principal) principal_flags_[x.index] = true;
    gated_ = profile_.is_domain && profile_.is_principally_generated;
  }

  TheoremAudit run() {
    TheoremAudit audit;
    auto add = [&](std::string id, std::string statement, bool hypotheses, const std::function<Outcome()>& conclusion) {
      ClaimRecord r;
      r.id = std::move(id);
      r.statement = std::move(statement);
      r.hypotheses_hold = hypotheses;
      Outcome out = conclusion();
      r.conclusion_holds = !out.has_value();
      if (out) r.witness = *out;
      if (!hypotheses) {
        r.status = ClaimStatus::NotApplicable;
      } else {
        r.status = r.conclusion_holds ? ClaimStatus::Verified : ClaimStatus::Falsified;
      }
      audit.claims.push_back(std::move(r));
    };

    add("maximal_square_gap", "sharp => no element strictly between m^2 and m for maximal m", sharp_,
        [&] { return square_gap(); });
    add("indecomposable_is_prime", "sharp => a proper element whose only divisors are itself and 1 is prime", sharp_,
        [&] { return indecomposables_prime(); });
    add("weak_meet_principal_implies_sharp", "all elements weak meet-principal => sharp", all_weak_meet_principal(),
        [&] { return sharp_outcome(); });
    add("chain_square_condition_implies_sharp", "chain 0<a1<..<an<1 (n>=2) with a(i+1)^2 >= a(i) => sharp",
        chain_square_condition(), [&] { return sharp_outcome(); });
    add("five_chain_sharpness_criterion", "5-chain 0<a<b<c<1: sharp <=> c^2>=b and (b^2>=a or (b^2=0 and bc=a))",
        L_.size() == 5 && L_.poset().is_chain(), [&] { return five_chain_criterion(); });
    add("comaximal_join_principal", "sharp, x,y join-principal, (x:y) v (y:x) = x v y => x v y = 1", sharp_,
        [&] { return comaximal(); });
    add("maximal_join_irredundant", "sharp and local, m a join of join-principal elements => m is one of them",
        sharp_ && profile_.is_local, [&] { return join_irredundant(); });
    add("localization_preserves_sharp", "sharp => L_p sharp for every prime p", sharp_,
        [&] { return localizations_sharp(); });
    add("quotient_preserves_sharp", "sharp => [a,1] with x*y = xy v a sharp for every a < 1", sharp_,
        [&] { return quotients_sharp(); });
    add("sharp_iff_all_principal", "principally generated => (sharp <=> every element principal)",
        profile_.is_principally_generated, [&] { return sharp_iff_principal(); });
    add("sharp_implies_pseudo_dedekind", "principally generated sharp domain => pseudo-Dedekind", gated_ && sharp_,
        [&]() -> Outcome {
          if (profile_.is_pseudo_dedekind) return std::nullopt;
          return names(profile_.is_pseudo_dedekind.witness);
        });
    add("sharp_implies_prufer", "principally generated sharp domain => Prufer", gated_ && sharp_, [&]() -> Outcome {
      if (profile_.is_prufer) return std::nullopt;
      return non_principal_witness();
    });
    add("principal_lcm_law", "principally generated pseudo-Dedekind domain => x ^ y = y(x:y) for nonzero principal x,y",
        gated_ && profile_.is_pseudo_dedekind.holds, [&] { return lcm_law(); });
    add("residual_commutes_with_localization",
        "principally generated h-local domain => (a:b)_m = (a_m : b_m) for nonzero a,b and maximal m",
        gated_ && profile_.is_h_local, [&] { return residual_localization(); });
    add("sharp_is_one_dimensional_prufer",
        "principally generated sharp domain other than {0,1} => Prufer, nonzero primes maximal, L_m totally ordered",
        gated_ && sharp_ && L_.size() > 2, [&] { return one_dimensional_prufer(); });
    add("prufer_iff_locally_totally_ordered", "principally generated domain => (Prufer <=> L_m totally ordered for all m)",
        gated_, [&] { return prufer_local(); });
    return audit;
  }

 private:
  std::vector<std::string> names(const std::vector<ElementId>& ids) const {
    std::vector<std::string> out;
    for (auto x : ids) out.push_back(L_.name(x));
    return out;
  }

  Outcome sharp_outcome() const {
    if (sharp_) return std::nullopt;
    return names(sharp_by_residual_identity(L_).witness);
  }

  Outcome non_principal_witness() const {
    for (auto x : L_.elements()) {
      if (!principal_flags_[x.index]) return names({x});
    }
    return std::nullopt;
  }

  Outcome square_gap() const {
    for (auto m : profile_.maximal) {
      const ElementId sq = L_.mul(m, m);
      for (auto x : L_.elements()) {
        if (L_.less(sq, x) && L_.less(x, m)) return names({m, x});
      }
    }
    return std::nullopt;
  }

  Outcome indecomposables_prime() const {
    for (auto p : L_.elements()) {
      if (p == L_.top()) continue;
      bool only_trivial = true;
      for (auto d : L_.elements()) {
        if (d != p && d != L_.top() && L_.divides(d, p)) {
          only_trivial = false;
          break;
        }
      }
      if (only_trivial && !is_prime(L_, p)) return names({p});
    }
    return std::nullopt;
  }

  bool all_weak_meet_principal() const {
    for (auto x : L_.elements()) {
      if (!is_weak_meet_principal(L_, x)) return false;
    }
    return true;
  }

  bool chain_square_condition() const {
    const std::size_t n = L_.size();
    if (!L_.poset().is_chain() || n < 4) return false;
    for (std::size_t i = 1; i + 2 < n; ++i) {
      const ElementId next{i + 1};
      if (!L_.leq(ElementId{i}, L_.mul(next, next))) return false;
    }
    return true;
  }

  Outcome five_chain_criterion() const {
    if (L_.size() != 5 || !L_.poset().is_chain()) return std::nullopt;
    const ElementId zero{0}, a{1}, b{2}, c{3};
    const bool predicted = L_.leq(b, L_.mul(c, c)) &&
                           (L_.leq(a, L_.mul(b, b)) || (L_.mul(b, b) == zero && L_.mul(b, c) == a));
    if (predicted == sharp_) return std::nullopt;
    return std::vector<std::string>{predicted ? "predicted_sharp" : "predicted_not_sharp"};
  }

  std::vector<ElementId> join_principal() const {
    std::vector<ElementId> out;
    for (auto x : L_.elements()) {
      if (is_join_principal(L_, x)) out.push_back(x);
    }
    return out;
  }

  Outcome comaximal() const {
    const auto jp = join_principal();
    for (auto x : jp) {
      for (auto y : jp) {
        const ElementId xy = L_.join(x, y);
        if (L_.join(L_.residual(x, y), L_.residual(y, x)) == xy && xy != L_.top()) return names({x, y});
      }
    }
    return std::nullopt;
  }

  // m is a nonempty join of join-principal elements not containing m iff the
  // join of all join-principal elements strictly below m is m itself.
  Outcome join_irredundant() const {
    if (!profile_.is_local) return std::nullopt;
    const ElementId m = profile_.maximal.front();
    std::vector<ElementId> below;
    for (auto x : join_principal()) {
      if (L_.less(x, m)) below.push_back(x);
    }
    if (below.empty() || L_.join(below) != m) return std::nullopt;
    // Shrink to an irredundant representation for the witness.
    for (std::size_t i = below.size(); i-- > 0;) {
      auto trial = below;
      trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
      if (L_.join(trial) == m) below = std::move(trial);
    }
    auto out = names(below);
    out.insert(out.begin(), L_.name(m));
    return out;
  }

  Outcome localizations_sharp() const {
    for (auto p : profile_.primes) {
      if (!is_sharp(localize(L_, p).lattice)) return names({p});
    }
    return std::nullopt;
  }

  Outcome quotients_sharp() const {
    for (auto a : L_.elements()) {
      if (a == L_.top()) continue;
      if (!is_sharp(quotient(L_, a).lattice)) return names({a});
    }
    return std::nullopt;
  }

  Outcome sharp_iff_principal() const {
    if (sharp_ == profile_.is_dedekind) return std::nullopt;
    if (sharp_) return non_principal_witness();
    return names(sharp_by_residual_identity(L_).witness);
  }

  Outcome lcm_law() const {
    const auto report = principal_monoid(L_);
    if (!report.law_checked || report.lcm_law) return std::nullopt;
    return names(report.lcm_law.witness);
  }

  Outcome residual_localization() const {
    for (auto m : profile_.maximal) {
      if (!is_prime(L_, m)) continue;
      const auto lm = localize(L_, m);
      for (auto a : L_.elements()) {
        if (a == L_.bottom()) continue;
        for (auto b : L_.elements()) {
          if (b == L_.bottom()) continue;
          const ElementId lhs = lm.projection[L_.residual(a, b).index];
          const ElementId rhs = lm.lattice.residual(lm.projection[a.index], lm.projection[b.index]);
          if (lhs != rhs) return names({m, a, b});
        }
      }
    }
    return std::nullopt;
  }

  bool locally_totally_ordered(std::vector<std::string>* witness) const {
    for (auto m : profile_.maximal) {
      if (!localize(L_, m).lattice.poset().is_chain()) {
        if (witness) *witness = names({m});
        return false;
      }
    }
    return true;
  }

  Outcome one_dimensional_prufer() const {
    if (!profile_.is_prufer) return non_principal_witness();
    for (auto p : profile_.primes) {
      if (p != L_.bottom() && !is_maximal(L_, p)) return names({p});
    }
    std::vector<std::string> w;
    if (!locally_totally_ordered(&w)) return w;
    return std::nullopt;
  }

  Outcome prufer_local() const {
    std::vector<std::string> w;
    const bool local_total = locally_totally_ordered(&w);
    if (local_total == profile_.is_prufer) return std::nullopt;
    if (!local_total) return w;
    return non_principal_witness();
  }

  const FiniteMultLattice& L_;
  LatticeProfile profile_;
  bool sharp_ = false;
  bool gated_ = false;
  std::vector<bool> principal_flags_;
};

}  // namespace

TheoremAudit theorem_audit(const FiniteMultLattice& L) { return Auditor(L).run(); }

void require_no_falsified(const TheoremAudit& audit) {
  if (const auto* c = audit.first_falsified()) {
    throw Error(ErrorKind::ClaimFalsified, c->id + " (" + c->statement + ")", c->witness);
  }
}

}  // namespace sharplat
