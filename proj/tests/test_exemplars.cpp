#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "sharplat/error.hpp"
#include "sharplat/exemplars.hpp"

using namespace sharplat;

namespace {

// Largest element x in [0, limit] u {zero} with x * b <= a, by scan.
ZMinusElement z_residual_oracle(const ZMinusElement& a, const ZMinusElement& b, std::uint64_t limit) {
  std::vector<ZMinusElement> candidates{ZMinusElement::zero()};
  for (std::uint64_t e = 0; e <= limit; ++e) candidates.push_back(ZMinusElement::power(e));
  ZMinusElement best = ZMinusElement::zero();
  for (const auto& x : candidates) {
    if (z_leq(z_mult(x, b), a) && z_leq(best, x)) best = x;
  }
  return best;
}

// Largest interval x on a grid of endpoints k/12 in [0, 40] with x + b inside a.
R1Element r1_residual_oracle(const R1Element& a, const R1Element& b) {
  R1Element best = R1Element::zero();
  for (std::int64_t k = 0; k <= 480; ++k) {
    for (auto x : {R1Element::closed(Rational(k, 12)), R1Element::open(Rational(k, 12))}) {
      if (r1_leq(r1_mult(x, b), a) && r1_leq(best, x)) best = x;
    }
  }
  return best;
}

FGIdeal I(std::vector<std::uint64_t> gens) { return FGIdeal::generated_by(std::move(gens)); }

bool agrees_with_scan(const FGIdeal& ideal, const std::vector<std::uint64_t>& gens, std::uint64_t bound) {
  const auto members = oracle::ideal_members(gens, bound);
  for (std::uint64_t n = 0; n <= bound; ++n) {
    if (ideal.contains(n) != members[n]) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("exemplars") {

TEST_CASE("Z- residual examples") {
  const auto e = [](std::uint64_t k) { return ZMinusElement::power(k); };
  CHECK(z_residual(e(5), e(2)) == e(3));
  CHECK(z_residual_oracle(e(5), e(2), 10) == e(3));
  for (std::uint64_t k = 0; k <= 10; ++k) CHECK(z_residual(e(k), ZMinusElement::one()) == e(k));
  const auto a = e(7), b = e(3);
  const auto ab = z_residual(a, b);
  CHECK(z_mult(z_residual(a, ab), ab) == e(7));
  CHECK(z_residual(ZMinusElement::zero(), e(2)) == ZMinusElement::zero());
  CHECK(z_residual(e(2), ZMinusElement::zero()) == ZMinusElement::one());
}

TEST_CASE("property: Z- residual agrees with the scan oracle") {
  std::vector<ZMinusElement> elems{ZMinusElement::zero()};
  for (std::uint64_t k = 0; k <= 20; ++k) elems.push_back(ZMinusElement::power(k));
  for (const auto& a : elems) {
    for (const auto& b : elems) {
      if (b.is_zero()) continue;  // every exponent qualifies; the scan would be unbounded
      REQUIRE(z_residual(a, b) == z_residual_oracle(a, b, 40));
    }
  }
  const auto report = zminus_self_test(100);
  CHECK(report.failures == 0);
  CHECK(report.trials == 102 * 102);
}

TEST_CASE("R1 residual examples") {
  CHECK(r1_residual(R1Element::closed(5), R1Element::open(2)) == R1Element::closed(3));
  CHECK(r1_residual(R1Element::open(5), R1Element::closed(2)) == R1Element::open(3));
  CHECK(r1_residual(R1Element::closed(2), R1Element::closed(5)) == R1Element::one());
  CHECK(r1_residual(R1Element::zero(), R1Element::closed(1)) == R1Element::zero());
  CHECK(r1_residual(R1Element::closed(1), R1Element::zero()) == R1Element::one());
  try {
    R1Element::closed(-1);
    FAIL("expected BadSchema");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BadSchema);
  }
}

TEST_CASE("R1 residual table with symbolic r = 5, t = 2") {
  using E = R1Element;
  const Rational r(5), t(2);
  struct Row {
    E a, b, ab, a_ab;
  };
  // The last row's (a:(a:b)) is [t,inf]: [t,inf] + (r-t,inf] = (r,inf] = a,
  // and [t,inf] strictly contains (t,inf].
  const std::vector<Row> rows{
      {E::closed(r), E::closed(t), E::closed(r - t), E::closed(t)},
      {E::open(r), E::open(t), E::closed(r - t), E::open(t)},
      {E::closed(r), E::open(t), E::closed(r - t), E::closed(t)},
      {E::open(r), E::closed(t), E::open(r - t), E::closed(t)},
  };
  for (const auto& row : rows) {
    const auto ab = r1_residual(row.a, row.b);
    CHECK(ab == row.ab);
    CHECK(r1_residual_oracle(row.a, row.b) == row.ab);
    const auto a_ab = r1_residual(row.a, ab);
    CHECK(a_ab == row.a_ab);
    CHECK(r1_residual_oracle(row.a, ab) == row.a_ab);
    CHECK(r1_mult(a_ab, ab) == row.a);
  }
  CHECK(r1_leq(E::open(t), E::closed(t)));
  CHECK_FALSE(r1_leq(E::closed(t), E::open(t)));
}

TEST_CASE("property: R1 residual agrees with the grid oracle") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> num(0, 240);
  for (int i = 0; i < 400; ++i) {
    const auto mk = [&](int bit) {
      const Rational v(num(rng), 12);
      return (i >> bit) & 1 ? R1Element::open(v) : R1Element::closed(v);
    };
    const auto a = mk(0), b = mk(1);
    REQUIRE(r1_residual(a, b) == r1_residual_oracle(a, b));
  }
}

TEST_CASE("property: R1 laws over seeded pairs") {
  const auto report = r1_self_test(1000, 42);
  CHECK(report.trials == 1000);
  CHECK(report.failures == 0);
  CHECK(report.details["identity_failures"] == 0);
  CHECK(to_json(r1_self_test(1000, 42)) == to_json(report));
}

TEST_CASE("ideal arithmetic examples") {
  const auto b = I({2, 3});
  const auto bb = ideal_product(b, b);
  CHECK(bb.generators() == std::vector<std::uint64_t>{4, 6, 9});
  CHECK(agrees_with_scan(bb, {4, 6, 9}, 100));
  const auto m = ideal_meet(I({2}), I({3}));
  CHECK(m.generators() == std::vector<std::uint64_t>{6});
  CHECK(agrees_with_scan(m, {6}, 100));
  CHECK(ideal_join(I({4, 9}), FGIdeal::unit()) == FGIdeal::unit());
  CHECK(I({6, 2, 0, 4, 3}).generators() == std::vector<std::uint64_t>{2, 3});

  const auto a = I({4, 9});
  CHECK(ideal_residual(a, b).generators() == std::vector<std::uint64_t>{4, 6, 9});
  CHECK(ideal_residual(a, I({4, 6, 9})).generators() == std::vector<std::uint64_t>{2, 3});
  CHECK(ideal_residual(a, FGIdeal::unit()) == a);
  try {
    ideal_residual(a, FGIdeal::zero());
    FAIL("expected ZeroDivisor");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ZeroDivisor);
  }
}

TEST_CASE("counterexample report") {
  const auto r = counterexample_report();
  CHECK(r.residual_ab_is_b_squared);
  CHECK(r.residual_a_ab_is_b);
  CHECK_FALSE(r.sharp_identity_holds);
  CHECK(r.witness == 4u);
  CHECK(r.product.generators() == std::vector<std::uint64_t>{8, 12, 18, 27});
  const auto a_in = oracle::ideal_members({4, 9}, 10);
  const auto p_in = oracle::ideal_members({8, 12, 18, 27}, 10);
  CHECK(a_in[4]);
  CHECK_FALSE(p_in[4]);
  CHECK(r.principal_residuals);
  const auto report = nideal_self_test();
  CHECK(report.failures == 0);
  CHECK(report.details["witness"] == 4);
}

TEST_CASE("property: ideal residual agrees with the membership scan") {
  const std::uint64_t bound = 200;
  std::vector<std::vector<std::uint64_t>> sets;
  for (std::uint64_t x = 1; x <= 12; ++x) {
    sets.push_back({x});
    for (std::uint64_t y = x + 1; y <= 12; ++y) sets.push_back({x, y});
  }
  for (const auto& ag : sets) {
    const auto a_members = oracle::ideal_members(ag, bound * 12);
    const auto a = I(ag);
    for (const auto& bg : sets) {
      const auto expected = oracle::residual_members(a_members, bg, bound);
      const auto res = ideal_residual(a, I(bg));
      for (std::uint64_t x = 0; x <= bound; ++x) REQUIRE(res.contains(x) == expected[x]);
    }
  }
}

TEST_CASE("property: ideal operations agree with membership scans") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::uint64_t> entry(1, 30), size(1, 4);
  const std::uint64_t bound = 1000;
  for (int i = 0; i < 300; ++i) {
    std::vector<std::uint64_t> ag(size(rng)), bg(size(rng));
    for (auto& v : ag) v = entry(rng);
    for (auto& v : bg) v = entry(rng);
    const auto a = I(ag), b = I(bg);
    const auto am = oracle::ideal_members(ag, bound), bm = oracle::ideal_members(bg, bound);
    const auto prod = ideal_product(a, b), join = ideal_join(a, b), meet = ideal_meet(a, b);
    for (std::uint64_t n = 0; n <= bound; ++n) {
      REQUIRE(join.contains(n) == (am[n] || bm[n]));
      REQUIRE(meet.contains(n) == (am[n] && bm[n]));
      if (n > 300) continue;
      bool in_product = n == 0;
      for (std::uint64_t d = 1; d <= n && !in_product; ++d) in_product = n % d == 0 && am[d] && bm[n / d];
      REQUIRE(prod.contains(n) == in_product);
    }
    // Monotonicity of the residual in its first argument.
    const auto wider = ideal_join(a, I({entry(rng)}));
    REQUIRE(ideal_leq(ideal_residual(a, b), ideal_residual(wider, b)));
  }
}

}  // TEST_SUITE
