#pragma once

// Brute-force reference computations used only by tests. Everything here is
// recomputed from the raw order and multiplication tables, without the
// library's derived join/meet/residual tables.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "sharplat/lattice.hpp"

namespace oracle {

struct RawLattice {
  std::size_t n = 0;
  std::vector<std::vector<bool>> leq;
  std::vector<std::vector<std::size_t>> mult;

  static RawLattice of(const sharplat::FiniteMultLattice& L) {
    RawLattice r;
    r.n = L.size();
    r.leq.assign(r.n, std::vector<bool>(r.n));
    r.mult.assign(r.n, std::vector<std::size_t>(r.n));
    for (std::size_t i = 0; i < r.n; ++i) {
      for (std::size_t j = 0; j < r.n; ++j) {
        r.leq[i][j] = L.poset().leq_table()[i * r.n + j] != 0;
        r.mult[i][j] = L.mult_table()[i * r.n + j];
      }
    }
    return r;
  }

  // Least upper bound by scanning all upper bounds.
  std::size_t join(std::size_t x, std::size_t y) const {
    for (std::size_t u = 0; u < n; ++u) {
      if (!leq[x][u] || !leq[y][u]) continue;
      bool least = true;
      for (std::size_t v = 0; v < n; ++v) {
        if (leq[x][v] && leq[y][v] && !leq[u][v]) least = false;
      }
      if (least) return u;
    }
    return n;
  }

  std::size_t meet(std::size_t x, std::size_t y) const {
    for (std::size_t u = 0; u < n; ++u) {
      if (!leq[u][x] || !leq[u][y]) continue;
      bool greatest = true;
      for (std::size_t v = 0; v < n; ++v) {
        if (leq[v][x] && leq[v][y] && !leq[v][u]) greatest = false;
      }
      if (greatest) return u;
    }
    return n;
  }

  std::size_t bottom() const {
    for (std::size_t u = 0; u < n; ++u) {
      bool ok = true;
      for (std::size_t v = 0; v < n; ++v) ok = ok && leq[u][v];
      if (ok) return u;
    }
    return n;
  }

  std::size_t top() const {
    for (std::size_t u = 0; u < n; ++u) {
      bool ok = true;
      for (std::size_t v = 0; v < n; ++v) ok = ok && leq[v][u];
      if (ok) return u;
    }
    return n;
  }

  // The element a with a*x <= y that lies above every other such element.
  // In a multiplicative lattice this maximum exists.
  std::size_t residual(std::size_t y, std::size_t x) const {
    std::vector<std::size_t> admissible;
    for (std::size_t a = 0; a < n; ++a) {
      if (leq[mult[a][x]][y]) admissible.push_back(a);
    }
    for (auto a : admissible) {
      bool max = true;
      for (auto b : admissible) max = max && leq[b][a];
      if (max) return a;
    }
    return n;
  }

  bool divides(std::size_t a, std::size_t b) const {
    for (std::size_t c = 0; c < n; ++c) {
      if (mult[a][c] == b) return true;
    }
    return false;
  }

  bool prime(std::size_t p) const {
    if (p == top()) return false;
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (leq[mult[x][y]][p] && !leq[x][p] && !leq[y][p]) return false;
      }
    }
    return true;
  }

  bool principal(std::size_t x) const {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        if (meet(y, mult[z][x]) != mult[meet(residual(y, x), z)][x]) return false;
        if (join(y, residual(z, x)) != residual(join(mult[y][x], z), x)) return false;
      }
    }
    return true;
  }

  // Sharp straight from the factorization definition.
  bool sharp_by_definition() const {
    for (std::size_t a1 = 0; a1 < n; ++a1) {
      for (std::size_t a2 = 0; a2 < n; ++a2) {
        for (std::size_t b = 0; b < n; ++b) {
          if (!leq[mult[a1][a2]][b]) continue;
          bool found = false;
          for (std::size_t b1 = 0; b1 < n && !found; ++b1) {
            for (std::size_t b2 = 0; b2 < n && !found; ++b2) {
              found = leq[a1][b1] && leq[a2][b2] && mult[b1][b2] == b;
            }
          }
          if (!found) return false;
        }
      }
    }
    return true;
  }
};

/// Every commutative table on the poset (no identity, zero or meet-bound
/// constraints imposed), filtered by the library validator. Exponential; use
/// for n <= 4 only.
inline std::vector<sharplat::Table> naive_structures(const sharplat::FinitePoset& poset) {
  const std::size_t n = poset.size();
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) cells.emplace_back(i, j);
  }
  std::vector<std::size_t> digits(cells.size(), 0);
  sharplat::Table table(n * n, 0);
  std::vector<sharplat::Table> out;
  while (true) {
    for (std::size_t k = 0; k < cells.size(); ++k) {
      const auto [i, j] = cells[k];
      table[i * n + j] = table[j * n + i] = static_cast<std::uint8_t>(digits[k]);
    }
    if (!sharplat::check_mult_axioms(poset, table)) out.push_back(table);
    std::size_t k = 0;
    while (k < digits.size() && ++digits[k] == n) digits[k++] = 0;
    if (k == digits.size()) break;
  }
  return out;
}

/// Commutative tables with the identity row and zero row fixed, every free
/// cell ranging over the whole carrier, filtered by the validator.
inline std::vector<sharplat::Table> identity_fixed_structures(const sharplat::FinitePoset& poset) {
  const std::size_t n = poset.size();
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    for (std::size_t j = i; j + 1 < n; ++j) cells.emplace_back(i, j);
  }
  sharplat::Table table(n * n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    table[(n - 1) * n + x] = table[x * n + n - 1] = static_cast<std::uint8_t>(x);
    table[x] = table[x * n] = 0;
  }
  std::vector<std::size_t> digits(cells.size(), 0);
  std::vector<sharplat::Table> out;
  while (true) {
    for (std::size_t k = 0; k < cells.size(); ++k) {
      const auto [i, j] = cells[k];
      table[i * n + j] = table[j * n + i] = static_cast<std::uint8_t>(digits[k]);
    }
    if (!sharplat::check_mult_axioms(poset, table)) out.push_back(table);
    std::size_t k = 0;
    while (k < digits.size() && ++digits[k] == n) digits[k++] = 0;
    if (k == digits.size()) break;
  }
  return out;
}

/// Membership of 0..bound in the monoid ideal generated by `gens`, straight
/// from divisibility (0 is in every ideal).
inline std::vector<bool> ideal_members(const std::vector<std::uint64_t>& gens, std::uint64_t bound) {
  std::vector<bool> in(bound + 1, false);
  in[0] = true;
  for (auto g : gens) {
    if (g == 0) continue;
    for (std::uint64_t k = g; k <= bound; k += g) in[k] = true;
  }
  return in;
}

/// {x <= bound : x*h in a for every generator h of b}, given a's membership
/// table up to bound * max(b).
inline std::vector<bool> residual_members(const std::vector<bool>& a_members,
                                          const std::vector<std::uint64_t>& b_gens, std::uint64_t bound) {
  std::vector<bool> out(bound + 1, true);
  for (std::uint64_t x = 0; x <= bound; ++x) {
    for (auto h : b_gens) out[x] = out[x] && a_members[x * h];
  }
  return out;
}

}  // namespace oracle
