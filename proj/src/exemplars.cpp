#include "sharplat/exemplars.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "sharplat/error.hpp"

namespace sharplat {

// --- Z- ---------------------------------------------------------------------

bool z_leq(const ZMinusElement& x, const ZMinusElement& y) {
  if (x.is_zero()) return true;
  if (y.is_zero()) return false;
  return *x.exponent() >= *y.exponent();
}

ZMinusElement z_mult(const ZMinusElement& x, const ZMinusElement& y) {
  if (x.is_zero() || y.is_zero()) return ZMinusElement::zero();
  return ZMinusElement::power(*x.exponent() + *y.exponent());
}

ZMinusElement z_join(const ZMinusElement& x, const ZMinusElement& y) { return z_leq(x, y) ? y : x; }
ZMinusElement z_meet(const ZMinusElement& x, const ZMinusElement& y) { return z_leq(x, y) ? x : y; }

ZMinusElement z_residual(const ZMinusElement& a, const ZMinusElement& b) {
  if (b.is_zero()) return ZMinusElement::one();
  if (a.is_zero()) return ZMinusElement::zero();
  const auto ea = *a.exponent(), eb = *b.exponent();
  return ZMinusElement::power(ea > eb ? ea - eb : 0);
}

std::string to_string(const ZMinusElement& x) {
  return x.is_zero() ? std::string("0") : "m^" + std::to_string(*x.exponent());
}

// --- R1 ---------------------------------------------------------------------

R1Element R1Element::closed(Rational r) {
  if (r < 0) throw Error(ErrorKind::BadSchema, "R1 endpoints must be nonnegative");
  return {R1Kind::Closed, r};
}

R1Element R1Element::open(Rational r) {
  if (r < 0) throw Error(ErrorKind::BadSchema, "R1 endpoints must be nonnegative");
  return {R1Kind::Open, r};
}

bool r1_leq(const R1Element& x, const R1Element& y) {
  if (x.kind == R1Kind::Zero) return true;
  if (y.kind == R1Kind::Zero) return false;
  if (x.endpoint != y.endpoint) return x.endpoint > y.endpoint;
  return y.kind == R1Kind::Closed || x.kind == R1Kind::Open;
}

R1Element r1_mult(const R1Element& x, const R1Element& y) {
  if (x.kind == R1Kind::Zero || y.kind == R1Kind::Zero) return R1Element::zero();
  const bool closed = x.kind == R1Kind::Closed && y.kind == R1Kind::Closed;
  return {closed ? R1Kind::Closed : R1Kind::Open, x.endpoint + y.endpoint};
}

R1Element r1_join(const R1Element& x, const R1Element& y) { return r1_leq(x, y) ? y : x; }
R1Element r1_meet(const R1Element& x, const R1Element& y) { return r1_leq(x, y) ? x : y; }

R1Element r1_residual(const R1Element& a, const R1Element& b) {
  if (b.kind == R1Kind::Zero) return R1Element::one();
  if (a.kind == R1Kind::Zero) return R1Element::zero();
  const Rational d = a.endpoint - b.endpoint;
  if (d < 0) return R1Element::one();
  // x + b has endpoint d + e(b); it lies inside a unless a is open while the
  // sum is closed, in which case x must be open.
  const bool must_open = a.kind == R1Kind::Open && b.kind == R1Kind::Closed;
  return {must_open ? R1Kind::Open : R1Kind::Closed, d};
}

std::string to_string(const R1Element& x) {
  if (x.kind == R1Kind::Zero) return "{inf}";
  std::string r = std::to_string(x.endpoint.numerator());
  if (x.endpoint.denominator() != 1) r += "/" + std::to_string(x.endpoint.denominator());
  return (x.kind == R1Kind::Closed ? "[" : "(") + r + ",inf]";
}

// --- N0 ideals --------------------------------------------------------------

FGIdeal FGIdeal::generated_by(std::vector<std::uint64_t> generators) {
  std::erase(generators, 0);
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  FGIdeal out;
  for (auto g : generators) {
    // Ascending order: any proper divisor of g is already placed.
    if (std::none_of(out.generators_.begin(), out.generators_.end(), [&](std::uint64_t h) { return g % h == 0; })) {
      out.generators_.push_back(g);
    }
  }
  return out;
}

bool FGIdeal::contains(std::uint64_t n) const {
  if (n == 0) return true;
  return std::any_of(generators_.begin(), generators_.end(), [&](std::uint64_t g) { return n % g == 0; });
}

FGIdeal ideal_product(const FGIdeal& a, const FGIdeal& b) {
  std::vector<std::uint64_t> gens;
  for (auto g : a.generators()) {
    for (auto h : b.generators()) gens.push_back(g * h);
  }
  return FGIdeal::generated_by(std::move(gens));
}

FGIdeal ideal_join(const FGIdeal& a, const FGIdeal& b) {
  auto gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return FGIdeal::generated_by(std::move(gens));
}

FGIdeal ideal_meet(const FGIdeal& a, const FGIdeal& b) {
  std::vector<std::uint64_t> gens;
  for (auto g : a.generators()) {
    for (auto h : b.generators()) gens.push_back(std::lcm(g, h));
  }
  return FGIdeal::generated_by(std::move(gens));
}

bool ideal_leq(const FGIdeal& a, const FGIdeal& b) {
  return std::all_of(a.generators().begin(), a.generators().end(), [&](std::uint64_t g) { return b.contains(g); });
}

bool ideal_equal(const FGIdeal& a, const FGIdeal& b) { return ideal_leq(a, b) && ideal_leq(b, a); }

FGIdeal ideal_residual(const FGIdeal& a, const FGIdeal& b) {
  if (b.is_zero()) throw Error(ErrorKind::ZeroDivisor, "residual by the zero ideal");
  // x*h in a  <=>  g / gcd(g, h) divides x for some generator g of a. Taking
  // the meet over h one generator at a time expands the choice functions
  // incrementally.
  FGIdeal acc = FGIdeal::unit();
  for (auto h : b.generators()) {
    std::vector<std::uint64_t> gens;
    for (auto g : a.generators()) gens.push_back(g / std::gcd(g, h));
    acc = ideal_meet(acc, FGIdeal::generated_by(std::move(gens)));
  }
  return acc;
}

std::string to_string(const FGIdeal& x) {
  std::string out = "<";
  for (std::size_t i = 0; i < x.generators().size(); ++i) {
    out += (i ? "," : "") + std::to_string(x.generators()[i]);
  }
  return out + ">";
}

IdealCounterexample counterexample_report() {
  IdealCounterexample r;
  r.a = FGIdeal::generated_by({4, 9});
  r.b = FGIdeal::generated_by({2, 3});
  r.residual_ab = ideal_residual(r.a, r.b);
  r.residual_a_ab = ideal_residual(r.a, r.residual_ab);
  r.product = ideal_product(r.residual_a_ab, r.residual_ab);
  r.residual_ab_is_b_squared = ideal_equal(r.residual_ab, ideal_product(r.b, r.b));
  r.residual_a_ab_is_b = ideal_equal(r.residual_a_ab, r.b);
  r.sharp_identity_holds = ideal_equal(r.product, r.a);
  for (std::uint64_t n = 1; n <= 1000 && !r.sharp_identity_holds; ++n) {
    if (r.a.contains(n) && !r.product.contains(n)) {
      r.witness = n;
      break;
    }
  }
  for (std::uint64_t x = 1; x <= 30; ++x) {
    for (std::uint64_t p = 1; p <= 12; ++p) {
      for (std::uint64_t q = p; q <= 12; ++q) {
        const auto res = ideal_residual(FGIdeal::generated_by({x}), FGIdeal::generated_by({p, q}));
        ++r.principal_samples;
        if (res.generators().size() != 1) r.principal_residuals = false;
      }
    }
  }
  return r;
}

// --- self-tests -------------------------------------------------------------

namespace {

void record(ExemplarReport& report, bool ok, const std::string& what) {
  ++report.trials;
  if (ok) return;
  ++report.failures;
  if (report.witnesses.size() < 20) report.witnesses.push_back(what);
}

}  // namespace

ExemplarReport zminus_self_test(std::uint64_t max_exponent) {
  ExemplarReport report;
  report.model = "zminus";
  std::vector<ZMinusElement> elems;
  for (std::uint64_t k = 0; k <= max_exponent; ++k) elems.push_back(ZMinusElement::power(k));
  elems.push_back(ZMinusElement::zero());
  for (const auto& a : elems) {
    for (const auto& b : elems) {
      const auto ab = z_residual(a, b);
      const auto lhs = z_mult(z_residual(a, ab), ab);
      const bool ok = lhs == a && z_leq(z_mult(ab, b), a) && (z_leq(a, b) || z_leq(b, a)) &&
                      (!z_leq(a, b) || z_leq(z_mult(a, a), z_mult(b, a)));
      record(report, ok, "a=" + to_string(a) + " b=" + to_string(b));
    }
  }
  report.details["max_exponent"] = max_exponent;
  return report;
}

ExemplarReport r1_self_test(std::size_t trials, std::uint64_t seed) {
  ExemplarReport report;
  report.model = "r1";
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> num(0, 240);
  std::uniform_int_distribution<std::int64_t> den(1, 12);
  auto endpoint = [&] { return Rational(num(rng), den(rng)); };
  std::size_t identity_failures = 0;
  for (std::size_t i = 0; i < trials; ++i) {
    const auto ka = (i & 1) ? R1Kind::Open : R1Kind::Closed;
    const auto kb = (i & 2) ? R1Kind::Open : R1Kind::Closed;
    R1Element a{ka, endpoint()}, b{kb, endpoint()};
    const R1Element c{kb, endpoint()};
    if (i % 50 == 24) b = R1Element::zero();
    if (i % 50 == 49) a = R1Element::zero();
    const auto ab = r1_residual(a, b);
    const bool identity = r1_mult(r1_residual(a, ab), ab) == a;
    identity_failures += identity ? 0 : 1;
    const bool ok = identity && r1_leq(r1_mult(ab, b), a) && (r1_leq(a, b) || r1_leq(b, a)) &&
                    (!r1_leq(b, c) || r1_leq(r1_mult(a, b), r1_mult(a, c)));
    record(report, ok, "a=" + to_string(a) + " b=" + to_string(b));
  }
  report.details["seed"] = seed;
  report.details["identity_failures"] = identity_failures;
  return report;
}

ExemplarReport nideal_self_test() {
  ExemplarReport report;
  report.model = "nideal";
  const auto r = counterexample_report();
  record(report, r.residual_ab_is_b_squared, "(a:b) != b^2");
  record(report, r.residual_a_ab_is_b, "(a:(a:b)) != b");
  record(report, !r.sharp_identity_holds && r.witness == 4u, "expected b^3 != a with witness 4");
  record(report, r.principal_residuals, "(<x>:c) not principal");
  report.details["a"] = to_string(r.a);
  report.details["b"] = to_string(r.b);
  report.details["residual_ab"] = to_string(r.residual_ab);
  report.details["residual_a_ab"] = to_string(r.residual_a_ab);
  report.details["product"] = to_string(r.product);
  report.details["residual_ab_is_b_squared"] = r.residual_ab_is_b_squared;
  report.details["residual_a_ab_is_b"] = r.residual_a_ab_is_b;
  report.details["sharp_identity_holds"] = r.sharp_identity_holds;
  if (r.witness) report.details["witness"] = *r.witness;
  report.details["principal_residual_samples"] = r.principal_samples;
  report.details["principal_residuals"] = r.principal_residuals;
  return report;
}

Json to_json(const ExemplarReport& report) {
  Json doc;
  doc["model"] = report.model;
  doc["trials"] = report.trials;
  doc["failures"] = report.failures;
  doc["witnesses"] = report.witnesses;
  doc["details"] = report.details;
  return doc;
}

}  // namespace sharplat
