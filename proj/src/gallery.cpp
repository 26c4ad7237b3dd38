#include "sharplat/gallery.hpp"

#include <cstdio>

#include "sharplat/enumeration.hpp"
#include "sharplat/predicates.hpp"

namespace sharplat::gallery {

namespace {

using Leq = std::vector<std::vector<bool>>;

Leq chain_leq(std::size_t n) {
  Leq leq(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) leq[i][j] = i <= j;
  }
  return leq;
}

// Order from covering pairs (lower, upper), closed reflexively and transitively.
Leq from_covers(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& covers) {
  Leq leq(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i) leq[i][i] = true;
  for (auto [lo, hi] : covers) leq[lo][hi] = true;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (leq[i][k] && leq[k][j]) leq[i][j] = true;
      }
    }
  }
  return leq;
}

}  // namespace

FiniteMultLattice remark_ii() {
  // 0 a b c 1
  return FiniteMultLattice::create({"0", "a", "b", "c", "1"}, chain_leq(5),
                                   {{0, 0, 0, 0, 0},
                                    {0, 0, 0, 1, 1},
                                    {0, 0, 0, 2, 2},
                                    {0, 1, 2, 3, 3},
                                    {0, 1, 2, 3, 4}});
}

FiniteMultLattice chain2() { return FiniteMultLattice::create({"0", "1"}, chain_leq(2), {{0, 0}, {0, 1}}); }

FiniteMultLattice chain3_nil() {
  return FiniteMultLattice::create({"0", "m", "1"}, chain_leq(3), {{0, 0, 0}, {0, 0, 1}, {0, 1, 2}});
}

FiniteMultLattice chain3_idem() {
  return FiniteMultLattice::create({"0", "m", "1"}, chain_leq(3), {{0, 0, 0}, {0, 1, 1}, {0, 1, 2}});
}

FiniteMultLattice diamond() {
  return FiniteMultLattice::create({"0", "p", "q", "1"}, from_covers(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}),
                                   {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 0, 2, 2}, {0, 1, 2, 3}});
}

std::vector<std::pair<std::string, FiniteMultLattice>> all() {
  std::vector<std::pair<std::string, FiniteMultLattice>> out;
  auto add = [&](std::string name, const FiniteMultLattice& L) { out.emplace_back(name, L.with_annotation("name", name)); };
  add("remark_ii", remark_ii());
  add("chain2", chain2());
  add("chain3_nil", chain3_nil());
  add("chain3_idem", chain3_idem());
  add("diamond", diamond());
  int k = 0;
  for (const auto& L : enumerate_structures(chain_poset(5))) {
    if (!is_sharp(L)) continue;
    char buf[32];
    std::snprintf(buf, sizeof buf, "chain5_sharp_%02d", ++k);
    add(buf, L);
  }
  return out;
}

FinitePoset diamond_poset() {
  return FinitePoset::create({"0", "p", "q", "1"}, from_covers(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}));
}

FinitePoset m3_poset() {
  return FinitePoset::create({"0", "p", "q", "r", "1"},
                             from_covers(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}}));
}

FinitePoset n5_poset() {
  return FinitePoset::create({"0", "x", "y", "z", "1"}, from_covers(5, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}}));
}

FinitePoset diamond_with_bottom_tail() {
  return FinitePoset::create({"0", "d", "p", "q", "1"}, from_covers(5, {{0, 1}, {1, 2}, {1, 3}, {2, 4}, {3, 4}}));
}

FinitePoset diamond_with_top_tail() {
  return FinitePoset::create({"0", "p", "q", "u", "1"}, from_covers(5, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}}));
}

std::vector<std::pair<std::string, FinitePoset>> small_nonchain_posets() {
  return {{"diamond", diamond_poset()},
          {"m3", m3_poset()},
          {"n5", n5_poset()},
          {"diamond_bottom_tail", diamond_with_bottom_tail()},
          {"diamond_top_tail", diamond_with_top_tail()}};
}

}  // namespace sharplat::gallery
