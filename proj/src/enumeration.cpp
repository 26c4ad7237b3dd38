#include "sharplat/enumeration.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <set>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "sharplat/audit.hpp"
#include "sharplat/predicates.hpp"

namespace sharplat {

FinitePoset chain_poset(std::size_t n) {
  if (n < 2) throw Error(ErrorKind::SizeTooSmall, "a chain needs at least 2 elements");
  if (n > 28) throw Error(ErrorKind::BadSchema, "chain too long to name");
  std::vector<std::string> names{"0"};
  for (std::size_t i = 1; i + 1 < n; ++i) names.emplace_back(1, static_cast<char>('a' + i - 1));
  names.emplace_back("1");
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) leq[i][j] = i <= j;
  }
  return FinitePoset::create(std::move(names), leq);
}

unsigned resolve_threads(unsigned requested) {
  unsigned threads = requested;
#ifdef _OPENMP
  if (threads == 0) threads = static_cast<unsigned>(omp_get_max_threads());
#endif
  if (threads == 0) threads = 1;
  if (const char* cap = std::getenv("SHARPLAT_THREADS")) {
    const long v = std::strtol(cap, nullptr, 10);
    if (v > 0) threads = std::min(threads, static_cast<unsigned>(v));
  }
  return threads;
}

namespace {

constexpr std::uint8_t kUnset = 0xFF;

// Backtracking over the free cells x*y with 0 < x <= y < 1. Products with 0
// and 1 are fixed; each free cell ranges over elements below x ^ y.
class StructureSearch {
 public:
  explicit StructureSearch(const FinitePoset& poset) : poset_(poset), n_(poset.size()) {
    for (std::size_t i = 1; i + 1 < n_; ++i) {
      for (std::size_t j = i; j + 1 < n_; ++j) cells_.emplace_back(i, j);
    }
    // Products of larger elements first: they have the most constraints.
    std::sort(cells_.begin(), cells_.end(), [](const auto& l, const auto& r) {
      return std::pair{l.second, l.first} > std::pair{r.second, r.first};
    });
    for (const auto& [i, j] : cells_) {
      std::vector<std::uint8_t> cands;
      const ElementId bound = poset_.meet(ElementId{i}, ElementId{j});
      for (std::size_t z = 0; z < n_; ++z) {
        if (poset_.leq(ElementId{z}, bound)) cands.push_back(static_cast<std::uint8_t>(z));
      }
      candidates_.push_back(std::move(cands));
    }
    table_.assign(n_ * n_, kUnset);
    for (std::size_t x = 0; x < n_; ++x) {
      set(0, x, 0);
      set(n_ - 1, x, static_cast<std::uint8_t>(x));
    }
  }

  std::size_t cell_count() const { return cells_.size(); }
  const std::vector<std::uint8_t>& first_candidates() const { return candidates_.front(); }

  void run_from(std::size_t depth, std::vector<Table>& out) {
    if (depth == cells_.size()) {
      if (!check_mult_axioms(poset_, table_)) out.push_back(table_);
      return;
    }
    const auto [i, j] = cells_[depth];
    for (auto v : candidates_[depth]) {
      set(i, j, v);
      if (consistent()) run_from(depth + 1, out);
    }
    set(i, j, kUnset);
  }

  /// Fixes the first cell to `value`, then searches the remaining cells.
  void run_branch(std::uint8_t value, std::vector<Table>& out) {
    const auto [i, j] = cells_.front();
    set(i, j, value);
    if (consistent()) run_from(1, out);
    set(i, j, kUnset);
  }

 private:
  void set(std::size_t x, std::size_t y, std::uint8_t v) {
    table_[x * n_ + y] = v;
    table_[y * n_ + x] = v;
  }

  std::uint8_t at(std::size_t x, std::size_t y) const { return table_[x * n_ + y]; }

  // Every constraint instantiable from determined cells.
  bool consistent() const {
    const auto& join = poset_.join_table();
    for (std::size_t x = 0; x < n_; ++x) {
      for (std::size_t y = 0; y < n_; ++y) {
        if (x == y || !poset_.leq(ElementId{x}, ElementId{y})) continue;
        for (std::size_t z = 0; z < n_; ++z) {
          const auto xz = at(x, z), yz = at(y, z);
          if (xz != kUnset && yz != kUnset && !poset_.leq(ElementId{xz}, ElementId{yz})) return false;
        }
      }
    }
    for (std::size_t a = 0; a < n_; ++a) {
      for (std::size_t b = 0; b < n_; ++b) {
        const auto ab = at(a, b);
        for (std::size_t c = b + 1; c < n_; ++c) {
          const auto ac = at(a, c);
          const auto abc = at(a, join[b * n_ + c]);
          if (ab != kUnset && ac != kUnset && abc != kUnset && abc != join[ab * n_ + ac]) return false;
        }
        if (ab == kUnset) continue;
        for (std::size_t c = 0; c < n_; ++c) {
          const auto bc = at(b, c);
          if (bc == kUnset) continue;
          const auto lhs = at(ab, c), rhs = at(a, bc);
          if (lhs != kUnset && rhs != kUnset && lhs != rhs) return false;
        }
      }
    }
    return true;
  }

  const FinitePoset& poset_;
  std::size_t n_;
  std::vector<std::pair<std::size_t, std::size_t>> cells_;
  std::vector<std::vector<std::uint8_t>> candidates_;
  Table table_;
};

std::vector<FiniteMultLattice> to_lattices(const FinitePoset& poset, std::vector<Table> tables) {
  std::sort(tables.begin(), tables.end());
  auto shared = std::make_shared<const FinitePoset>(poset);
  std::vector<FiniteMultLattice> out;
  out.reserve(tables.size());
  for (auto& t : tables) out.push_back(FiniteMultLattice::from_canonical(shared, std::move(t)));
  return out;
}

}  // namespace

std::vector<FiniteMultLattice> enumerate_structures_serial(const FinitePoset& poset) {
  StructureSearch search(poset);
  std::vector<Table> tables;
  search.run_from(0, tables);
  return to_lattices(poset, std::move(tables));
}

std::vector<FiniteMultLattice> enumerate_structures(const FinitePoset& poset, unsigned threads) {
  StructureSearch root(poset);
  if (root.cell_count() == 0) return enumerate_structures_serial(poset);
  const auto& first = root.first_candidates();
  const auto branches = static_cast<std::ptrdiff_t>(first.size());
  std::vector<std::vector<Table>> per_branch(first.size());
  const int nthreads = static_cast<int>(resolve_threads(threads));
  (void)nthreads;
#pragma omp parallel for schedule(dynamic, 1) num_threads(nthreads)
  for (std::ptrdiff_t b = 0; b < branches; ++b) {
    StructureSearch search(poset);
    search.run_branch(first[static_cast<std::size_t>(b)], per_branch[static_cast<std::size_t>(b)]);
  }
  std::vector<Table> tables;
  for (auto& v : per_branch) {
    for (auto& t : v) tables.push_back(std::move(t));
  }
  return to_lattices(poset, std::move(tables));
}

std::vector<std::vector<std::size_t>> poset_automorphisms(const FinitePoset& poset) {
  const std::size_t n = poset.size();
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> perm(n);
  std::vector<bool> used(n, false);
  // Assign images in index order, checking order preservation against every
  // already-assigned element.
  auto extend = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      out.push_back(perm);
      return;
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (used[v]) continue;
      bool ok = true;
      for (std::size_t k = 0; k <= i && ok; ++k) {
        const std::size_t img = k == i ? v : perm[k];
        ok = poset.leq(ElementId{k}, ElementId{i}) == poset.leq(ElementId{img}, ElementId{v}) &&
             poset.leq(ElementId{i}, ElementId{k}) == poset.leq(ElementId{v}, ElementId{img});
      }
      if (!ok) continue;
      used[v] = true;
      perm[i] = v;
      self(self, i + 1);
      used[v] = false;
    }
  };
  extend(extend, 0);
  return out;
}

Table canonical_form(const FinitePoset& poset, const Table& mult,
                     const std::vector<std::vector<std::size_t>>& automorphisms) {
  const std::size_t n = poset.size();
  Table best = mult;
  Table relabeled(n * n);
  for (const auto& sigma : automorphisms) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        relabeled[sigma[i] * n + sigma[j]] = static_cast<std::uint8_t>(sigma[mult[i * n + j]]);
      }
    }
    if (relabeled < best) best = relabeled;
  }
  return best;
}

namespace {

CensusEntry classify(const FiniteMultLattice& L, bool audit) {
  CensusEntry e{L, sharpness_report(L).sharp(), is_prime(L, L.bottom()).holds,
                principal_elements(L).size() == L.size()};
  if (audit) {
    const auto result = theorem_audit(L);
    if (const auto* c = result.first_falsified()) {
      std::string list;
      for (const auto& w : c->witness) list += (list.empty() ? "" : ", ") + w;
      throw Error(ErrorKind::ClaimFalsified,
                  c->id + " witness (" + list + ") on lattice " + to_json(L).dump(), c->witness);
    }
  }
  return e;
}

Census aggregate(const FinitePoset& poset, std::vector<CensusEntry> entries, bool keep) {
  Census c;
  c.poset = to_json(poset);
  c.total_structures = entries.size();
  const auto autos = poset_automorphisms(poset);
  c.automorphism_count = autos.size();
  std::set<Table> classes;
  for (const auto& e : entries) {
    c.sharp_count += e.sharp ? 1 : 0;
    c.domain_count += e.domain ? 1 : 0;
    c.all_principal_count += e.all_principal ? 1 : 0;
    classes.insert(canonical_form(poset, e.lattice.mult_table(), autos));
  }
  c.isomorphism_classes = classes.size();
  if (keep) c.representatives = std::move(entries);
  return c;
}

}  // namespace

Census census_serial(const FinitePoset& poset, const CensusOptions& options) {
  std::vector<CensusEntry> entries;
  for (const auto& L : enumerate_structures_serial(poset)) entries.push_back(classify(L, options.audit_each));
  return aggregate(poset, std::move(entries), options.keep_representatives);
}

Census census(const FinitePoset& poset, const CensusOptions& options) {
  const auto structures = enumerate_structures(poset, options.threads);
  const auto count = static_cast<std::ptrdiff_t>(structures.size());
  std::vector<std::optional<CensusEntry>> slots(structures.size());
  std::vector<std::exception_ptr> errors(structures.size());
  const int nthreads = static_cast<int>(resolve_threads(options.threads));
  (void)nthreads;
#pragma omp parallel for schedule(dynamic, 4) num_threads(nthreads)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const auto k = static_cast<std::size_t>(i);
    try {
      slots[k] = classify(structures[k], options.audit_each);
    } catch (...) {
      errors[k] = std::current_exception();
    }
  }
  // Report the failure of the least structure, as the serial path would.
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<CensusEntry> entries;
  entries.reserve(slots.size());
  for (auto& s : slots) entries.push_back(std::move(*s));
  return aggregate(poset, std::move(entries), options.keep_representatives);
}

Json to_json(const Census& c) {
  Json doc;
  doc["poset"] = c.poset;
  doc["counting"] = "labeled structures on the fixed poset";
  doc["automorphisms"] = c.automorphism_count;
  doc["note"] = c.automorphism_count == 1
                    ? "the poset has no nontrivial automorphisms, so labeled and isomorphism-class counts coincide"
                    : "labeled counts; isomorphism_classes deduplicates by least table over poset automorphisms";
  doc["total_structures"] = c.total_structures;
  doc["sharp_count"] = c.sharp_count;
  doc["domain_count"] = c.domain_count;
  doc["all_principal_count"] = c.all_principal_count;
  doc["isomorphism_classes"] = c.isomorphism_classes;
  if (!c.representatives.empty()) {
    Json reps = Json::array();
    for (std::size_t i = 0; i < c.representatives.size(); ++i) {
      const auto& e = c.representatives[i];
      Json r;
      r["index"] = i;
      r["sharp"] = e.sharp;
      r["domain"] = e.domain;
      r["all_principal"] = e.all_principal;
      r["lattice"] = to_json(e.lattice);
      reps.push_back(std::move(r));
    }
    doc["representatives"] = std::move(reps);
  }
  return doc;
}

}  // namespace sharplat
