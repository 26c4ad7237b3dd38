#include "sharplat/reports.hpp"

namespace sharplat {

namespace {

Json names(const FiniteMultLattice& L, const std::vector<ElementId>& ids) {
  Json out = Json::array();
  for (auto x : ids) out.push_back(L.name(x));
  return out;
}

Json check(const FiniteMultLattice& L, const Check& c) {
  Json out;
  out["holds"] = c.holds;
  if (!c.holds) out["witness"] = names(L, c.witness);
  return out;
}

}  // namespace

Json to_json(const FiniteMultLattice& L, const ElementProfile& p) {
  Json doc;
  doc["element"] = L.name(p.element);
  doc["prime"] = check(L, p.is_prime);
  doc["maximal"] = check(L, p.is_maximal);
  doc["cancellative"] = check(L, p.is_cancellative);
  doc["meet_principal"] = check(L, p.is_meet_principal);
  doc["weak_meet_principal"] = check(L, p.is_weak_meet_principal);
  doc["join_principal"] = check(L, p.is_join_principal);
  doc["weak_join_principal"] = check(L, p.is_weak_join_principal);
  doc["principal"] = check(L, p.is_principal);
  return doc;
}

Json to_json(const FiniteMultLattice& L, const LatticeProfile& p) {
  Json doc;
  doc["maximal"] = names(L, p.maximal);
  doc["primes"] = names(L, p.primes);
  doc["principal"] = names(L, p.principal);
  doc["local"] = p.is_local;
  doc["domain"] = p.is_domain;
  doc["totally_ordered"] = p.is_totally_ordered;
  doc["principally_generated"] = p.is_principally_generated;
  doc["prufer"] = p.is_prufer;
  doc["dedekind"] = p.is_dedekind;
  doc["pseudo_dedekind"] = check(L, p.is_pseudo_dedekind);
  doc["h_local"] = p.is_h_local;
  doc["dimension"] = p.dimension;
  return doc;
}

Json to_json(const FiniteMultLattice& L, const SharpnessReport& r) {
  Json doc;
  doc["sharp"] = r.sharp();
  doc["by_definition"] = r.by_definition;
  doc["by_residual_identity"] = r.by_residual_identity;
  doc["by_divides"] = r.by_divides;
  doc["by_restricted_divides"] = r.by_restricted_divides;
  if (r.counterexample) {
    doc["counterexample"] = names(L, {r.counterexample->first, r.counterexample->second});
  }
  if (r.definition_counterexample) doc["definition_counterexample"] = names(L, *r.definition_counterexample);
  Json fw = Json::array();
  for (const auto& f : r.factorization_witnesses) fw.push_back(names(L, {f.a1, f.a2, f.b, f.b1, f.b2}));
  doc["factorization_witnesses"] = std::move(fw);
  return doc;
}

Json to_json(const TheoremAudit& audit) {
  Json doc;
  for (const auto& c : audit.claims) {
    Json r;
    r["statement"] = c.statement;
    r["status"] = std::string(to_string(c.status));
    r["hypotheses_hold"] = c.hypotheses_hold;
    r["conclusion_holds"] = c.conclusion_holds;
    if (!c.witness.empty()) r["witness"] = c.witness;
    doc[c.id] = std::move(r);
  }
  return doc;
}

}  // namespace sharplat
