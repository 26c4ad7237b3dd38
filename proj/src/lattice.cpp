#include "sharplat/lattice.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace sharplat {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BadSchema: return "BadSchema";
    case ErrorKind::NotAPartialOrder: return "NotAPartialOrder";
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::NotCommutative: return "NotCommutative";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::NoIdentity: return "NoIdentity";
    case ErrorKind::NotDistributive: return "NotDistributive";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::DegenerateQuotient: return "DegenerateQuotient";
    case ErrorKind::SizeTooSmall: return "SizeTooSmall";
    case ErrorKind::ZeroDivisor: return "ZeroDivisor";
    case ErrorKind::InternalValidationFailure: return "InternalValidationFailure";
    case ErrorKind::InternalEquivalenceViolation: return "InternalEquivalenceViolation";
    case ErrorKind::ClaimFalsified: return "ClaimFalsified";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, std::string message, std::vector<std::string> witness)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind),
      witness_(std::move(witness)) {}

bool is_input_error(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BadSchema:
    case ErrorKind::NotAPartialOrder:
    case ErrorKind::NotALattice:
    case ErrorKind::NotCommutative:
    case ErrorKind::NotAssociative:
    case ErrorKind::NoIdentity:
    case ErrorKind::NotDistributive:
    case ErrorKind::NotPrime:
    case ErrorKind::DegenerateQuotient:
    case ErrorKind::SizeTooSmall:
    case ErrorKind::ZeroDivisor:
      return true;
    default:
      return false;
  }
}

namespace {

std::vector<std::string> names_of(const std::vector<std::string>& names, std::initializer_list<std::size_t> ids) {
  std::vector<std::string> out;
  for (auto i : ids) out.push_back(names[i]);
  return out;
}

// Index of the least element of `candidates` under `le`, if one exists.
template <class Le>
std::optional<std::size_t> least_of(const std::vector<std::size_t>& candidates, Le le) {
  for (auto c : candidates) {
    if (std::all_of(candidates.begin(), candidates.end(), [&](std::size_t d) { return le(c, d); })) return c;
  }
  return std::nullopt;
}

}  // namespace

FinitePoset FinitePoset::create(std::vector<std::string> names, const std::vector<std::vector<bool>>& leq) {
  const std::size_t n = names.size();
  if (n == 0) throw Error(ErrorKind::BadSchema, "a lattice needs at least one element");
  if (n > kMaxElements) throw Error(ErrorKind::BadSchema, "too many elements");
  if (leq.size() != n) throw Error(ErrorKind::BadSchema, "leq must have one row per element");
  for (const auto& row : leq) {
    if (row.size() != n) throw Error(ErrorKind::BadSchema, "leq must be square");
  }
  {
    std::set<std::string> seen;
    for (const auto& s : names) {
      if (!seen.insert(s).second) throw Error(ErrorKind::BadSchema, "duplicate element name '" + s + "'", {s});
    }
  }

  for (std::size_t x = 0; x < n; ++x) {
    if (!leq[x][x]) throw Error(ErrorKind::NotAPartialOrder, "leq is not reflexive", names_of(names, {x}));
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x != y && leq[x][y] && leq[y][x]) {
        throw Error(ErrorKind::NotAPartialOrder, "leq is not antisymmetric", names_of(names, {x, y}));
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (!leq[x][y]) continue;
      for (std::size_t z = 0; z < n; ++z) {
        if (leq[y][z] && !leq[x][z]) {
          throw Error(ErrorKind::NotAPartialOrder, "leq is not transitive", names_of(names, {x, y, z}));
        }
      }
    }
  }

  auto le = [&](std::size_t a, std::size_t b) { return static_cast<bool>(leq[a][b]); };
  auto ge = [&](std::size_t a, std::size_t b) { return static_cast<bool>(leq[b][a]); };
  std::vector<std::size_t> in_join(n * n), in_meet(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      std::vector<std::size_t> upper, lower;
      for (std::size_t z = 0; z < n; ++z) {
        if (leq[x][z] && leq[y][z]) upper.push_back(z);
        if (leq[z][x] && leq[z][y]) lower.push_back(z);
      }
      auto lub = least_of(upper, le);
      if (!lub) throw Error(ErrorKind::NotALattice, "pair has no least upper bound", names_of(names, {x, y}));
      auto glb = least_of(lower, ge);
      if (!glb) throw Error(ErrorKind::NotALattice, "pair has no greatest lower bound", names_of(names, {x, y}));
      in_join[x * n + y] = *lub;
      in_meet[x * n + y] = *glb;
    }
  }

  // Kahn's algorithm, always taking the ready element with the smallest input position.
  std::vector<std::size_t> order;
  std::vector<bool> placed(n, false);
  while (order.size() < n) {
    for (std::size_t x = 0; x < n; ++x) {
      if (placed[x]) continue;
      bool ready = true;
      for (std::size_t y = 0; y < n && ready; ++y) {
        if (y != x && leq[y][x] && !placed[y]) ready = false;
      }
      if (ready) {
        placed[x] = true;
        order.push_back(x);
        break;
      }
    }
  }
  std::vector<std::size_t> canonical_of(n);
  for (std::size_t i = 0; i < n; ++i) canonical_of[order[i]] = i;

  FinitePoset p;
  p.size_ = n;
  p.input_position_ = order;
  p.names_.resize(n);
  p.leq_.assign(n * n, 0);
  p.join_.assign(n * n, 0);
  p.meet_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    p.names_[i] = names[order[i]];
    for (std::size_t j = 0; j < n; ++j) {
      p.leq_[i * n + j] = leq[order[i]][order[j]] ? 1 : 0;
      p.join_[i * n + j] = static_cast<std::uint8_t>(canonical_of[in_join[order[i] * n + order[j]]]);
      p.meet_[i * n + j] = static_cast<std::uint8_t>(canonical_of[in_meet[order[i] * n + order[j]]]);
    }
  }
  return p;
}

std::optional<ElementId> FinitePoset::find(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return ElementId{static_cast<std::size_t>(it - names_.begin())};
}

bool FinitePoset::is_chain() const {
  for (std::size_t i = 0; i < size_; ++i) {
    for (std::size_t j = 0; j < size_; ++j) {
      if (!leq_[i * size_ + j] && !leq_[j * size_ + i]) return false;
    }
  }
  return true;
}

std::optional<AxiomViolation> check_mult_axioms(const FinitePoset& poset, std::span<const std::uint8_t> mult) {
  const std::size_t n = poset.size();
  if (mult.size() != n * n) return AxiomViolation{ErrorKind::BadSchema, {}};
  for (std::size_t i = 0; i < n * n; ++i) {
    if (mult[i] >= n) return AxiomViolation{ErrorKind::BadSchema, {i / n, i % n}};
  }
  auto m = [&](std::size_t x, std::size_t y) -> std::size_t { return mult[x * n + y]; };
  auto j = [&](std::size_t x, std::size_t y) -> std::size_t { return poset.join_table()[x * n + y]; };
  const std::size_t top = n - 1;

  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      if (m(x, y) != m(y, x)) return AxiomViolation{ErrorKind::NotCommutative, {x, y}};
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (m(top, x) != x) return AxiomViolation{ErrorKind::NoIdentity, {x}};
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (m(a, 0) != 0) return AxiomViolation{ErrorKind::NotDistributive, {a, 0, 0}};
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = b + 1; c < n; ++c) {
        if (m(a, j(b, c)) != j(m(a, b), m(a, c))) return AxiomViolation{ErrorKind::NotDistributive, {a, b, c}};
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (m(m(a, b), c) != m(a, m(b, c))) return AxiomViolation{ErrorKind::NotAssociative, {a, b, c}};
      }
    }
  }
  // Consequence of the axioms above; a failure here means the checks are wrong.
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (!poset.leq(ElementId{m(x, y)}, poset.meet(ElementId{x}, ElementId{y}))) {
        return AxiomViolation{ErrorKind::InternalValidationFailure, {x, y}};
      }
    }
  }
  return std::nullopt;
}

void throw_violation(const FinitePoset& poset, const AxiomViolation& v) {
  std::vector<std::string> witness;
  for (auto i : v.witness) {
    witness.push_back(i < poset.size() ? poset.name(ElementId{i}) : std::to_string(i));
  }
  std::string what;
  switch (v.kind) {
    case ErrorKind::NotCommutative: what = "x*y != y*x"; break;
    case ErrorKind::NoIdentity: what = "1*x != x"; break;
    case ErrorKind::NotDistributive: what = "a*(b v c) != a*b v a*c"; break;
    case ErrorKind::NotAssociative: what = "(a*b)*c != a*(b*c)"; break;
    case ErrorKind::BadSchema: what = "multiplication table malformed"; break;
    default: what = "axiom check failed"; break;
  }
  std::string list;
  for (const auto& w : witness) list += (list.empty() ? "" : ", ") + w;
  throw Error(v.kind, what + (list.empty() ? "" : " at (" + list + ")"), std::move(witness));
}

FiniteMultLattice FiniteMultLattice::create(std::vector<std::string> names,
                                            const std::vector<std::vector<bool>>& leq,
                                            const std::vector<std::vector<std::size_t>>& mult) {
  auto poset = std::make_shared<const FinitePoset>(FinitePoset::create(std::move(names), leq));
  const std::size_t n = poset->size();
  if (mult.size() != n) throw Error(ErrorKind::BadSchema, "mult must have one row per element");
  std::vector<std::size_t> canonical_of(n);
  for (std::size_t i = 0; i < n; ++i) canonical_of[poset->input_position(ElementId{i})] = i;
  Table table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = mult[poset->input_position(ElementId{i})];
    if (row.size() != n) throw Error(ErrorKind::BadSchema, "mult must be square");
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t v = row[poset->input_position(ElementId{k})];
      if (v >= n) throw Error(ErrorKind::BadSchema, "mult entry out of range");
      table[i * n + k] = static_cast<std::uint8_t>(canonical_of[v]);
    }
  }
  return from_canonical(std::move(poset), std::move(table));
}

FiniteMultLattice FiniteMultLattice::from_canonical(std::shared_ptr<const FinitePoset> poset, Table mult) {
  if (auto v = check_mult_axioms(*poset, mult)) throw_violation(*poset, *v);
  FiniteMultLattice L;
  const std::size_t n = poset->size();
  L.poset_ = std::move(poset);
  L.mult_ = std::move(mult);
  L.residual_.assign(n * n, 0);
  for (std::size_t y = 0; y < n; ++y) {
    for (std::size_t x = 0; x < n; ++x) {
      std::size_t acc = 0;
      for (std::size_t a = 0; a < n; ++a) {
        if (L.poset_->leq(ElementId{L.mult_[a * n + x]}, ElementId{y})) acc = L.poset_->join_table()[acc * n + a];
      }
      L.residual_[y * n + x] = static_cast<std::uint8_t>(acc);
    }
  }
  return L;
}

ElementId FiniteMultLattice::at(const std::string& name) const {
  if (auto id = find(name)) return *id;
  throw Error(ErrorKind::BadSchema, "unknown element '" + name + "'", {name});
}

ElementId FiniteMultLattice::join(std::span<const ElementId> xs) const {
  ElementId acc = bottom();
  for (auto x : xs) acc = join(acc, x);
  return acc;
}

ElementId FiniteMultLattice::meet(std::span<const ElementId> xs) const {
  ElementId acc = top();
  for (auto x : xs) acc = meet(acc, x);
  return acc;
}

std::optional<ElementId> FiniteMultLattice::divides(ElementId a, ElementId b) const {
  for (auto c : elements()) {
    if (mul(a, c) == b) return c;
  }
  return std::nullopt;
}

FiniteMultLattice FiniteMultLattice::with_annotation(std::string key, std::string value) const {
  FiniteMultLattice copy = *this;
  copy.annotations_[std::move(key)] = std::move(value);
  return copy;
}

}  // namespace sharplat
