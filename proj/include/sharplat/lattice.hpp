#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <ranges>
#include <span>
#include <string>
#include <vector>

#include "sharplat/error.hpp"

namespace sharplat {

/// Index of an element in the canonical carrier of one lattice.
struct ElementId {
  std::size_t index = 0;

  friend constexpr auto operator<=>(ElementId, ElementId) = default;
};

/// Row-major size*size table of canonical element indices.
using Table = std::vector<std::uint8_t>;

inline constexpr std::size_t kMaxElements = 255;

/// Range over every element id of a carrier of the given size.
inline auto element_range(std::size_t size) {
  return std::views::iota(std::size_t{0}, size) |
         std::views::transform([](std::size_t i) { return ElementId{i}; });
}

/// A validated finite lattice in canonical order: bottom at index 0, top at
/// index size-1, remaining elements in a topological order of leq that keeps
/// input order wherever the order relation allows it.
class FinitePoset {
 public:
  /// Validates a partial order (reflexive, antisymmetric, transitive) with all
  /// binary lubs and glbs, then canonicalizes. `leq[i][j]` means i <= j.
  static FinitePoset create(std::vector<std::string> names,
                            const std::vector<std::vector<bool>>& leq);

  std::size_t size() const noexcept { return size_; }
  const std::string& name(ElementId x) const { return names_[x.index]; }
  const std::vector<std::string>& names() const noexcept { return names_; }

  bool leq(ElementId x, ElementId y) const { return leq_[x.index * size_ + y.index] != 0; }
  bool less(ElementId x, ElementId y) const { return x != y && leq(x, y); }
  ElementId join(ElementId x, ElementId y) const { return ElementId{join_[x.index * size_ + y.index]}; }
  ElementId meet(ElementId x, ElementId y) const { return ElementId{meet_[x.index * size_ + y.index]}; }
  ElementId bottom() const noexcept { return ElementId{0}; }
  ElementId top() const noexcept { return ElementId{size_ - 1}; }

  /// Position in the input list of the element now at canonical index `x`.
  std::size_t input_position(ElementId x) const { return input_position_[x.index]; }

  std::optional<ElementId> find(const std::string& name) const;

  const Table& join_table() const noexcept { return join_; }
  const Table& meet_table() const noexcept { return meet_; }
  const std::vector<std::uint8_t>& leq_table() const noexcept { return leq_; }

  bool is_chain() const;

  bool operator==(const FinitePoset& other) const {
    return names_ == other.names_ && leq_ == other.leq_;
  }

 private:
  FinitePoset() = default;

  std::size_t size_ = 0;
  std::vector<std::string> names_;
  std::vector<std::uint8_t> leq_;
  Table join_;
  Table meet_;
  std::vector<std::size_t> input_position_;
};

/// First axiom violation found in a candidate multiplication table, with a
/// least witness tuple of canonical indices.
struct AxiomViolation {
  ErrorKind kind;
  std::vector<std::size_t> witness;
};

/// Checks the multiplicative-lattice axioms of `mult` over a canonical poset:
/// entries in range, commutativity, top as identity, x*0 = 0, binary
/// distributivity over joins, associativity. Returns the first violation.
std::optional<AxiomViolation> check_mult_axioms(const FinitePoset& poset, std::span<const std::uint8_t> mult);

/// A finite complete lattice with a compatible commutative monoid
/// multiplication whose identity is the top element. Immutable once built.
class FiniteMultLattice {
 public:
  /// Builds from input-order data, canonicalizing element order. Throws Error.
  static FiniteMultLattice create(std::vector<std::string> names,
                                  const std::vector<std::vector<bool>>& leq,
                                  const std::vector<std::vector<std::size_t>>& mult);

  /// Builds from a table already indexed in the poset's canonical order.
  static FiniteMultLattice from_canonical(std::shared_ptr<const FinitePoset> poset, Table mult);

  std::size_t size() const noexcept { return poset_->size(); }
  const FinitePoset& poset() const noexcept { return *poset_; }
  const std::shared_ptr<const FinitePoset>& shared_poset() const noexcept { return poset_; }
  auto elements() const { return element_range(size()); }

  const std::string& name(ElementId x) const { return poset_->name(x); }
  std::optional<ElementId> find(const std::string& name) const { return poset_->find(name); }
  /// Like find, but throws Error(BadSchema) for unknown names.
  ElementId at(const std::string& name) const;

  ElementId bottom() const noexcept { return poset_->bottom(); }
  ElementId top() const noexcept { return poset_->top(); }

  bool leq(ElementId x, ElementId y) const { return poset_->leq(x, y); }
  bool less(ElementId x, ElementId y) const { return poset_->less(x, y); }
  ElementId join(ElementId x, ElementId y) const { return poset_->join(x, y); }
  ElementId meet(ElementId x, ElementId y) const { return poset_->meet(x, y); }
  /// Join of a set; the empty join is the bottom.
  ElementId join(std::span<const ElementId> xs) const;
  /// Meet of a set; the empty meet is the top.
  ElementId meet(std::span<const ElementId> xs) const;

  ElementId mul(ElementId x, ElementId y) const { return ElementId{mult_[x.index * size() + y.index]}; }

  /// (y : x), the join of every a with a*x <= y.
  ElementId residual(ElementId y, ElementId x) const { return ElementId{residual_[y.index * size() + x.index]}; }

  /// Least c with a*c = b, if any.
  std::optional<ElementId> divides(ElementId a, ElementId b) const;

  const Table& mult_table() const noexcept { return mult_; }

  /// Free-form provenance fields carried through serialization
  /// (e.g. "localized_at", "quotient_by").
  const std::map<std::string, std::string>& annotations() const noexcept { return annotations_; }
  FiniteMultLattice with_annotation(std::string key, std::string value) const;

  bool operator==(const FiniteMultLattice& other) const {
    return *poset_ == *other.poset_ && mult_ == other.mult_ && annotations_ == other.annotations_;
  }

 private:
  FiniteMultLattice() = default;

  std::shared_ptr<const FinitePoset> poset_;
  Table mult_;
  Table residual_;
  std::map<std::string, std::string> annotations_;
};

/// Throws Error describing `violation` in terms of element names.
[[noreturn]] void throw_violation(const FinitePoset& poset, const AxiomViolation& violation);

}  // namespace sharplat
