#include "sharplat/predicates.hpp"

#include <algorithm>
#include <string>

namespace sharplat {

Check is_prime(const FiniteMultLattice& L, ElementId p) {
  if (p == L.top()) return Check::fail({});
  for (auto x : L.elements()) {
    for (auto y : L.elements()) {
      if (L.leq(L.mul(x, y), p) && !L.leq(x, p) && !L.leq(y, p)) return Check::fail({x, y});
    }
  }
  return Check::pass();
}

Check is_maximal(const FiniteMultLattice& L, ElementId m) {
  if (m == L.top()) return Check::fail({});
  for (auto z : L.elements()) {
    if (L.less(m, z) && z != L.top()) return Check::fail({z});
  }
  return Check::pass();
}

Check is_cancellative(const FiniteMultLattice& L, ElementId x) {
  for (auto y : L.elements()) {
    for (auto z : L.elements()) {
      if (y != z && L.mul(x, y) == L.mul(x, z)) return Check::fail({y, z});
    }
  }
  return Check::pass();
}

Check is_meet_principal(const FiniteMultLattice& L, ElementId x) {
  for (auto y : L.elements()) {
    for (auto z : L.elements()) {
      if (L.meet(y, L.mul(z, x)) != L.mul(L.meet(L.residual(y, x), z), x)) return Check::fail({y, z});
    }
  }
  return Check::pass();
}

Check is_weak_meet_principal(const FiniteMultLattice& L, ElementId x) {
  for (auto y : L.elements()) {
    if (L.mul(L.residual(y, x), x) != L.meet(x, y)) return Check::fail({y});
  }
  return Check::pass();
}

Check is_join_principal(const FiniteMultLattice& L, ElementId x) {
  for (auto y : L.elements()) {
    for (auto z : L.elements()) {
      if (L.join(y, L.residual(z, x)) != L.residual(L.join(L.mul(y, x), z), x)) return Check::fail({y, z});
    }
  }
  return Check::pass();
}

Check is_weak_join_principal(const FiniteMultLattice& L, ElementId x) {
  const ElementId annihilator = L.residual(L.bottom(), x);
  for (auto y : L.elements()) {
    if (L.residual(L.mul(x, y), x) != L.join(y, annihilator)) return Check::fail({y});
  }
  return Check::pass();
}

Check is_principal(const FiniteMultLattice& L, ElementId x) {
  if (auto c = is_meet_principal(L, x); !c) return c;
  return is_join_principal(L, x);
}

ElementProfile element_profile(const FiniteMultLattice& L, ElementId x) {
  ElementProfile p;
  p.element = x;
  p.is_prime = is_prime(L, x);
  p.is_maximal = is_maximal(L, x);
  p.is_cancellative = is_cancellative(L, x);
  p.is_meet_principal = is_meet_principal(L, x);
  p.is_weak_meet_principal = is_weak_meet_principal(L, x);
  p.is_join_principal = is_join_principal(L, x);
  p.is_weak_join_principal = is_weak_join_principal(L, x);
  p.is_principal = p.is_meet_principal ? p.is_join_principal : p.is_meet_principal;
  return p;
}

namespace {

template <class Pred>
std::vector<ElementId> select(const FiniteMultLattice& L, Pred pred) {
  std::vector<ElementId> out;
  for (auto x : L.elements()) {
    if (pred(x)) out.push_back(x);
  }
  return out;
}

}  // namespace

std::vector<ElementId> maximal_elements(const FiniteMultLattice& L) {
  return select(L, [&](ElementId x) { return is_maximal(L, x).holds; });
}

std::vector<ElementId> prime_elements(const FiniteMultLattice& L) {
  return select(L, [&](ElementId x) { return is_prime(L, x).holds; });
}

std::vector<ElementId> principal_elements(const FiniteMultLattice& L) {
  return select(L, [&](ElementId x) { return is_principal(L, x).holds; });
}

Check is_pseudo_dedekind(const FiniteMultLattice& L) {
  std::vector<bool> principal(L.size(), false);
  for (auto x : principal_elements(L)) principal[x.index] = true;
  for (auto x : L.elements()) {
    if (!principal[x.index]) continue;
    for (auto a : L.elements()) {
      if (!principal[L.residual(x, a).index]) return Check::fail({x, a});
    }
  }
  return Check::pass();
}

std::size_t dimension(const FiniteMultLattice& L) {
  const auto primes = prime_elements(L);
  // Longest chain ending at each prime; primes are listed in a linear extension.
  std::vector<std::size_t> depth(primes.size(), 0);
  std::size_t best = 0;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (L.less(primes[j], primes[i])) depth[i] = std::max(depth[i], depth[j] + 1);
    }
    best = std::max(best, depth[i]);
  }
  return best;
}

LatticeProfile lattice_profile(const FiniteMultLattice& L) {
  LatticeProfile p;
  p.maximal = maximal_elements(L);
  p.primes = prime_elements(L);
  p.principal = principal_elements(L);
  p.is_local = p.maximal.size() == 1;
  p.is_domain = is_prime(L, L.bottom()).holds;
  p.is_totally_ordered = L.poset().is_chain();

  std::vector<bool> principal(L.size(), false);
  for (auto x : p.principal) principal[x.index] = true;
  p.is_principally_generated = std::all_of(L.elements().begin(), L.elements().end(), [&](ElementId x) {
    ElementId acc = L.bottom();
    for (auto q : p.principal) {
      if (L.leq(q, x)) acc = L.join(acc, q);
    }
    return acc == x;
  });
  p.is_dedekind = p.principal.size() == L.size();
  p.is_prufer = p.is_dedekind;
  p.is_pseudo_dedekind = is_pseudo_dedekind(L);
  p.is_h_local = std::all_of(p.primes.begin(), p.primes.end(), [&](ElementId q) {
    if (q == L.bottom()) return true;
    return std::count_if(p.maximal.begin(), p.maximal.end(), [&](ElementId m) { return L.leq(q, m); }) == 1;
  });
  p.dimension = dimension(L);
  return p;
}

Check sharp_by_definition(const FiniteMultLattice& L) {
  for (auto a1 : L.elements()) {
    for (auto a2 : L.elements()) {
      for (auto b : L.elements()) {
        if (!L.leq(L.mul(a1, a2), b)) continue;
        bool found = false;
        for (auto b1 : L.elements()) {
          if (!L.leq(a1, b1)) continue;
          for (auto b2 : L.elements()) {
            if (L.leq(a2, b2) && L.mul(b1, b2) == b) {
              found = true;
              break;
            }
          }
          if (found) break;
        }
        if (!found) return Check::fail({a1, a2, b});
      }
    }
  }
  return Check::pass();
}

Check sharp_by_residual_identity(const FiniteMultLattice& L) {
  for (auto a : L.elements()) {
    for (auto b : L.elements()) {
      const ElementId ab = L.residual(a, b);
      if (L.mul(L.residual(a, ab), ab) != a) return Check::fail({a, b});
    }
  }
  return Check::pass();
}

Check sharp_by_divides(const FiniteMultLattice& L) {
  for (auto a : L.elements()) {
    for (auto b : L.elements()) {
      if (!L.divides(L.residual(a, b), a)) return Check::fail({a, b});
    }
  }
  return Check::pass();
}

Check sharp_by_restricted_divides(const FiniteMultLattice& L) {
  for (auto a : L.elements()) {
    if (a == L.bottom() || a == L.top() || is_prime(L, a)) continue;
    for (auto b : L.elements()) {
      if (!L.less(a, b) || b == L.top()) continue;
      if (!L.divides(L.residual(a, b), a)) return Check::fail({a, b});
    }
  }
  return Check::pass();
}

bool is_sharp(const FiniteMultLattice& L) { return sharp_by_residual_identity(L).holds; }

SharpnessReport sharpness_report(const FiniteMultLattice& L) {
  SharpnessReport r;
  const Check def = sharp_by_definition(L);
  const Check ident = sharp_by_residual_identity(L);
  const Check div = sharp_by_divides(L);
  const Check restricted = sharp_by_restricted_divides(L);
  r.by_definition = def.holds;
  r.by_residual_identity = ident.holds;
  r.by_divides = div.holds;
  r.by_restricted_divides = restricted.holds;
  if (!def.holds) r.definition_counterexample = def.witness;
  if (!ident.holds) r.counterexample = std::pair{ident.witness[0], ident.witness[1]};

  if (!(def.holds == ident.holds && ident.holds == div.holds && div.holds == restricted.holds)) {
    std::string flags = std::string("definition=") + (def.holds ? "1" : "0") +
                        " residual_identity=" + (ident.holds ? "1" : "0") + " divides=" + (div.holds ? "1" : "0") +
                        " restricted_divides=" + (restricted.holds ? "1" : "0");
    throw Error(ErrorKind::InternalEquivalenceViolation, "sharpness checks disagree: " + flags);
  }

  for (auto a1 : L.elements()) {
    for (auto a2 : L.elements()) {
      for (auto b : L.elements()) {
        if (!L.leq(L.mul(a1, a2), b)) continue;
        bool found = false;
        for (auto b1 : L.elements()) {
          if (!L.leq(a1, b1)) continue;
          for (auto b2 : L.elements()) {
            if (L.leq(a2, b2) && L.mul(b1, b2) == b) {
              r.factorization_witnesses.push_back({a1, a2, b, b1, b2});
              found = true;
              break;
            }
          }
          if (found) break;
        }
      }
    }
  }
  return r;
}

PrincipalMonoidReport principal_monoid(const FiniteMultLattice& L) {
  PrincipalMonoidReport r;
  r.principal = principal_elements(L);
  r.law_checked = is_pseudo_dedekind(L).holds && is_prime(L, L.bottom()).holds;
  if (!r.law_checked) return r;
  for (auto x : r.principal) {
    if (x == L.bottom()) continue;
    for (auto y : r.principal) {
      if (y == L.bottom()) continue;
      if (L.meet(x, y) != L.mul(y, L.residual(x, y))) {
        r.lcm_law = Check::fail({x, y});
        return r;
      }
    }
  }
  return r;
}

}  // namespace sharplat
