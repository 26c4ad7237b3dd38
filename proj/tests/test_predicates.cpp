#include <algorithm>

#include "doctest.h"
#include "oracles.hpp"
#include "sharplat/audit.hpp"
#include "sharplat/predicates.hpp"
#include "test_support.hpp"

using namespace sharplat;
namespace g = sharplat::gallery;
using testing_support::corpus;
using testing_support::names;

namespace {

bool oracle_pseudo_dedekind(const oracle::RawLattice& raw) {
  for (std::size_t x = 0; x < raw.n; ++x) {
    if (!raw.principal(x)) continue;
    for (std::size_t a = 0; a < raw.n; ++a) {
      if (!raw.principal(raw.residual(x, a))) return false;
    }
  }
  return true;
}

bool five_chain_criterion(const FiniteMultLattice& L) {
  const auto a = L.at("a"), b = L.at("b"), c = L.at("c");
  return L.leq(b, L.mul(c, c)) &&
         (L.leq(a, L.mul(b, b)) || (L.mul(b, b) == L.bottom() && L.mul(b, c) == a));
}

}  // namespace

TEST_SUITE("predicates") {

TEST_CASE("element profile examples") {
  const auto L = g::remark_ii();
  const auto raw = oracle::RawLattice::of(L);
  CHECK(is_prime(L, L.at("c")).holds);
  CHECK(raw.prime(L.at("c").index));

  const auto wmp = is_weak_meet_principal(L, L.at("b"));
  CHECK_FALSE(wmp.holds);
  CHECK(names(L, wmp.witness) == std::vector<std::string>{"a"});

  for (const auto& M : corpus()) CHECK(element_profile(M, M.top()).is_principal.holds);
}

TEST_CASE("lattice profile examples") {
  CHECK_FALSE(lattice_profile(g::remark_ii()).is_domain);

  const auto two = lattice_profile(g::chain2());
  CHECK(two.is_local);
  CHECK(two.is_domain);
  CHECK(two.is_totally_ordered);
  CHECK(two.is_dedekind);

  const auto D = g::diamond();
  const auto dp = lattice_profile(D);
  CHECK_FALSE(dp.is_local);
  CHECK(names(D, dp.maximal) == std::vector<std::string>{"p", "q"});
}

TEST_CASE("sharpness report examples") {
  const auto L = g::remark_ii();
  const auto r = sharpness_report(L);
  CHECK_FALSE(r.by_residual_identity);
  REQUIRE(r.counterexample.has_value());
  CHECK(L.name(r.counterexample->first) == "a");
  CHECK(L.name(r.counterexample->second) == "b");
  CHECK(L.residual(L.at("a"), L.at("b")) == L.at("b"));

  for (const auto& M : {g::chain2(), g::chain3_idem()}) {
    const auto s = sharpness_report(M);
    CHECK(s.by_definition);
    CHECK(s.by_residual_identity);
    CHECK(s.by_divides);
    CHECK(s.by_restricted_divides);
  }
}

TEST_CASE("principal monoid examples") {
  const auto two = g::chain2();
  CHECK(names(two, principal_monoid(two).principal) == std::vector<std::string>{"0", "1"});

  // c is idempotent and proper, so (c:c) = 1 while c v (0:c) = c: the
  // join-principal law fails at y = c, z = 0.
  const auto L = g::remark_ii();
  const auto raw = oracle::RawLattice::of(L);
  std::vector<ElementId> expected;
  for (auto x : L.elements()) {
    if (raw.principal(x.index)) expected.push_back(x);
  }
  const auto pm = principal_monoid(L);
  CHECK(pm.principal == expected);
  CHECK(std::find(pm.principal.begin(), pm.principal.end(), L.top()) != pm.principal.end());
  CHECK_FALSE(raw.principal(L.at("c").index));
  CHECK(is_meet_principal(L, L.at("c")).holds);
  const auto jp = is_join_principal(L, L.at("c"));
  CHECK_FALSE(jp.holds);
  CHECK(names(L, jp.witness) == std::vector<std::string>{"c", "0"});
}

TEST_CASE("pseudo-Dedekind examples") {
  CHECK(is_pseudo_dedekind(g::chain2()).holds);
  const auto N = g::chain3_nil();
  CHECK(is_pseudo_dedekind(N).holds == oracle_pseudo_dedekind(oracle::RawLattice::of(N)));
  // The implication from sharpness needs principally generated domains: on
  // 0<a<b<c<1 with b^2 = a, c idempotent and a*b = 0, (0:a) = b is not
  // principal although 0 is, yet the lattice is sharp.
  const std::vector<std::vector<bool>> leq{
      {1, 1, 1, 1, 1}, {0, 1, 1, 1, 1}, {0, 0, 1, 1, 1}, {0, 0, 0, 1, 1}, {0, 0, 0, 0, 1}};
  const auto S = FiniteMultLattice::create(
      {"0", "a", "b", "c", "1"}, leq,
      {{0, 0, 0, 0, 0}, {0, 0, 0, 1, 1}, {0, 0, 1, 2, 2}, {0, 1, 2, 3, 3}, {0, 1, 2, 3, 4}});
  CHECK(is_sharp(S));
  const auto pd = is_pseudo_dedekind(S);
  CHECK_FALSE(pd.holds);
  CHECK(names(S, pd.witness) == std::vector<std::string>{"0", "a"});
  CHECK(oracle_pseudo_dedekind(oracle::RawLattice::of(S)) == false);
  for (const auto& L : corpus()) {
    const auto prof = lattice_profile(L);
    if (is_sharp(L) && prof.is_domain && prof.is_principally_generated) CHECK(prof.is_pseudo_dedekind.holds);
  }
}

TEST_CASE("theorem audit examples") {
  const auto audit = theorem_audit(g::remark_ii());
  const auto& gap = audit.at("maximal_square_gap");
  // The lattice is not sharp, so the claim does not apply, but its conclusion
  // still holds because c^2 = c.
  CHECK(gap.status == ClaimStatus::NotApplicable);
  CHECK(gap.conclusion_holds);
  CHECK(audit.at("five_chain_sharpness_criterion").status == ClaimStatus::Verified);

  for (const auto& L : enumerate_structures(chain_poset(5))) {
    if (is_sharp(L)) CHECK(theorem_audit(L).at("maximal_square_gap").status == ClaimStatus::Verified);
  }

  const auto I = g::chain3_idem();
  const auto raw = oracle::RawLattice::of(I);
  const auto& cor = theorem_audit(I).at("sharp_iff_all_principal");
  bool all_principal = true;
  for (std::size_t x = 0; x < raw.n; ++x) all_principal = all_principal && raw.principal(x);
  CHECK(raw.sharp_by_definition() != all_principal);
  // Only 0 and 1 are principal, so m is not a join of principals.
  CHECK_FALSE(cor.hypotheses_hold);
  CHECK(cor.status == ClaimStatus::NotApplicable);
}

TEST_CASE("property: no audited claim is falsified on the corpus") {
  for (const auto& L : corpus()) {
    const auto audit = theorem_audit(L);
    REQUIRE(audit.claims.size() == audited_claim_ids().size());
    const auto* bad = audit.first_falsified();
    if (bad) FAIL_CHECK(bad->id << " falsified on " << dump(to_json(L), false));
  }
}

TEST_CASE("property: the four sharpness checks agree with the definition oracle") {
  for (const auto& L : corpus()) {
    const auto r = sharpness_report(L);
    const bool oracle_sharp = oracle::RawLattice::of(L).sharp_by_definition();
    REQUIRE(r.by_definition == oracle_sharp);
    REQUIRE(r.by_residual_identity == oracle_sharp);
    REQUIRE(r.by_divides == oracle_sharp);
    REQUIRE(r.by_restricted_divides == oracle_sharp);
    REQUIRE(is_sharp(L) == oracle_sharp);
    for (const auto& f : r.factorization_witnesses) {
      REQUIRE(L.mul(f.b1, f.b2) == f.b);
      REQUIRE(L.leq(f.a1, f.b1));
      REQUIRE(L.leq(f.a2, f.b2));
    }
  }
}

TEST_CASE("property: element predicates agree with brute-force oracles") {
  for (const auto& L : corpus()) {
    const auto raw = oracle::RawLattice::of(L);
    for (auto x : L.elements()) {
      REQUIRE(is_prime(L, x).holds == raw.prime(x.index));
      REQUIRE(is_principal(L, x).holds == raw.principal(x.index));
      // Principal implies the weak forms.
      if (is_meet_principal(L, x)) REQUIRE(is_weak_meet_principal(L, x).holds);
      if (is_join_principal(L, x)) REQUIRE(is_weak_join_principal(L, x).holds);
    }
    REQUIRE(is_pseudo_dedekind(L).holds == oracle_pseudo_dedekind(raw));
  }
}

TEST_CASE("property: no element strictly between m^2 and m in sharp lattices") {
  for (const auto& L : corpus()) {
    if (!is_sharp(L)) continue;
    for (auto m : maximal_elements(L)) {
      const auto m2 = L.mul(m, m);
      for (auto x : L.elements()) REQUIRE_FALSE((L.less(m2, x) && L.less(x, m)));
    }
  }
}

TEST_CASE("property: chains with a_{i+1}^2 >= a_i are sharp") {
  for (std::size_t n = 4; n <= 7; ++n) {
    for (const auto& L : enumerate_structures(chain_poset(n))) {
      bool hypothesis = true;
      for (std::size_t i = 1; i + 2 < n; ++i) {
        const ElementId lo{i}, hi{i + 1};
        hypothesis = hypothesis && L.leq(lo, L.mul(hi, hi));
      }
      if (hypothesis) REQUIRE(is_sharp(L));
    }
  }
}

TEST_CASE("property: five-chain sharpness criterion matches the definition") {
  for (const auto& L : enumerate_structures(chain_poset(5))) {
    REQUIRE(five_chain_criterion(L) == oracle::RawLattice::of(L).sharp_by_definition());
  }
}

TEST_CASE("property: all weak meet principal implies sharp") {
  for (const auto& L : corpus()) {
    bool all = true, meet_mult = true;
    for (auto x : L.elements()) {
      all = all && is_weak_meet_principal(L, x).holds;
      for (auto y : L.elements()) meet_mult = meet_mult && L.mul(x, y) == L.meet(x, y);
    }
    if (all || meet_mult) REQUIRE(is_sharp(L));
  }
}

TEST_CASE("property: in sharp lattices indecomposable proper elements are prime") {
  for (const auto& L : corpus()) {
    if (!is_sharp(L)) continue;
    for (auto p : L.elements()) {
      if (p == L.top()) continue;
      bool only_trivial = true;
      for (auto d : L.elements()) {
        if (d != p && d != L.top() && L.divides(d, p)) only_trivial = false;
      }
      if (only_trivial) REQUIRE(is_prime(L, p).holds);
    }
  }
}

TEST_CASE("property: dimension is the longest prime chain") {
  for (const auto& L : corpus()) {
    const auto primes = prime_elements(L);
    // Longest chain by dynamic programming over the canonical (topological) order.
    std::vector<std::size_t> depth(L.size(), 0);
    std::size_t best = 0;
    for (auto p : primes) {
      for (auto q : primes) {
        if (L.less(q, p)) depth[p.index] = std::max(depth[p.index], depth[q.index] + 1);
      }
      best = std::max(best, depth[p.index]);
    }
    REQUIRE(dimension(L) == best);
  }
}

}  // TEST_SUITE
