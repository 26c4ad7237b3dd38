#include "sharplat/constructions.hpp"

#include <algorithm>

#include "sharplat/predicates.hpp"

namespace sharplat {

namespace {

ElementId localize_unchecked(const FiniteMultLattice& L, ElementId p, ElementId x) {
  ElementId acc = L.bottom();
  for (auto a : L.elements()) {
    for (auto s : L.elements()) {
      if (!L.leq(s, p) && L.leq(L.mul(a, s), x)) {
        acc = L.join(acc, a);
        break;
      }
    }
  }
  return acc;
}

void require_prime(const FiniteMultLattice& L, ElementId p) {
  if (!is_prime(L, p)) throw Error(ErrorKind::NotPrime, "localization needs a prime element", {L.name(p)});
}

// Rebuilds a sub-carrier of L (ids ascending) as a validated lattice, with the
// multiplication given by `product` (which must land in the carrier).
template <class Product>
FiniteMultLattice induced(const FiniteMultLattice& L, const std::vector<ElementId>& carrier, Product product) {
  const std::size_t k = carrier.size();
  std::vector<std::size_t> local(L.size(), k);
  for (std::size_t i = 0; i < k; ++i) local[carrier[i].index] = i;
  std::vector<std::string> names;
  std::vector<std::vector<bool>> leq(k, std::vector<bool>(k));
  std::vector<std::vector<std::size_t>> mult(k, std::vector<std::size_t>(k));
  for (std::size_t i = 0; i < k; ++i) {
    names.push_back(L.name(carrier[i]));
    for (std::size_t j = 0; j < k; ++j) {
      leq[i][j] = L.leq(carrier[i], carrier[j]);
      const std::size_t v = local[product(carrier[i], carrier[j]).index];
      if (v == k) throw Error(ErrorKind::InternalValidationFailure, "induced product leaves the carrier");
      mult[i][j] = v;
    }
  }
  try {
    return FiniteMultLattice::create(std::move(names), leq, mult);
  } catch (const Error& e) {
    throw Error(ErrorKind::InternalValidationFailure, std::string("induced structure invalid: ") + e.what(), e.witness());
  }
}

std::vector<ElementId> project(const FiniteMultLattice& from, const FiniteMultLattice& to,
                               const std::vector<ElementId>& image) {
  std::vector<ElementId> out;
  for (auto x : from.elements()) out.push_back(to.at(from.name(image[x.index])));
  return out;
}

}  // namespace

ElementId localize_element(const FiniteMultLattice& L, ElementId p, ElementId x) {
  require_prime(L, p);
  return localize_unchecked(L, p, x);
}

LocalizationResult localize(const FiniteMultLattice& L, ElementId p) {
  require_prime(L, p);
  std::vector<ElementId> image;
  for (auto x : L.elements()) image.push_back(localize_unchecked(L, p, x));
  std::vector<ElementId> carrier = image;
  std::sort(carrier.begin(), carrier.end());
  carrier.erase(std::unique(carrier.begin(), carrier.end()), carrier.end());

  auto lp = induced(L, carrier, [&](ElementId x, ElementId y) { return image[L.mul(x, y).index]; });
  auto projection = project(L, lp, image);

  // The meet of images must be the image of the meet.
  for (auto x : L.elements()) {
    for (auto y : L.elements()) {
      const ElementId lhs = projection[L.meet(x, y).index];
      const ElementId rhs = lp.meet(projection[x.index], projection[y.index]);
      if (lhs != rhs) {
        throw Error(ErrorKind::InternalValidationFailure, "localized meet differs from meet of localizations",
                    {L.name(p), L.name(x), L.name(y)});
      }
    }
  }
  return {lp.with_annotation("localized_at", L.name(p)), p, std::move(projection)};
}

QuotientResult quotient(const FiniteMultLattice& L, ElementId a) {
  if (a == L.top()) throw Error(ErrorKind::DegenerateQuotient, "quotient by the top element", {L.name(a)});
  std::vector<ElementId> image;
  for (auto x : L.elements()) image.push_back(L.join(x, a));
  std::vector<ElementId> carrier;
  for (auto x : L.elements()) {
    if (L.leq(a, x)) carrier.push_back(x);
  }
  auto q = induced(L, carrier, [&](ElementId x, ElementId y) { return L.join(L.mul(x, y), a); });
  auto projection = project(L, q, image);
  return {q.with_annotation("quotient_by", L.name(a)), a, std::move(projection)};
}

}  // namespace sharplat
