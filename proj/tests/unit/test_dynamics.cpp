#include <random>

#include "../support/instances.hpp"
#include "doctest.h"
#include "orbitlab/errors.hpp"
#include "orbitlab/intersection.hpp"
#include "orbitlab/theorems.hpp"

using namespace orbitlab;

namespace {

Point point(std::initializer_list<long> xs) {
  Point out;
  for (long x : xs) out.emplace_back(Rational(x));
  return out;
}

HypersurfaceTerm term(long c, std::initializer_list<long> e) {
  IntVector exps;
  for (long x : e) exps.emplace_back(x);
  return {CyclotomicNumber(c), exps};
}

const TheoremCheck& find(const std::vector<TheoremCheck>& checks, const std::string& id) {
  for (const auto& c : checks)
    if (c.theorem == id) return c;
  throw std::runtime_error("no theorem " + id);
}

const MonomialMap squaring({{2, 0}, {0, 2}});
const MonomialMap skew({{2, 1}, {0, 3}});
const Hypersurface line(2, {term(1, {1, 0}), term(-1, {0, 1}), term(1, {0, 0})});
const Hypersurface twelve(2, {term(1, {1, 0}), term(-12, {0, 0})});

}  // namespace

TEST_CASE("exponent matrix powers") {
  CHECK(compose_power(MonomialMap({{2, 0}, {0, 3}}), 4) == IntMatrix{{16, 0}, {0, 81}});
  CHECK(compose_power(skew, 0) == identity_matrix(2));
  CHECK(compose_power(skew, 2) == IntMatrix{{4, 5}, {0, 9}});
  CHECK_THROWS_AS(MonomialMap({{1, -1}, {0, 1}}), DomainError);
  CHECK_THROWS_AS(MonomialMap({{1, 0}}), DomainError);
}

TEST_CASE("orbit points") {
  CHECK(orbit_point(squaring, point({2, 3}), 2).coordinates() == point({16, 81}));
  CHECK(orbit_point(squaring, point({2, 3}), 0).coordinates() == point({2, 3}));
  CHECK(orbit_point(skew, point({2, 3}), 2).coordinates() == point({3888, 19683}));
}

TEST_CASE("composition identity against repeated substitution") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 60; ++trial) {
    const auto inst = instances::random_instance(rng, false);
    for (std::uint64_t n = 0; n <= 6; ++n) {
      const Point oracle = instances::iterate(inst.map, inst.w, n);
      CHECK(orbit_point(inst.map, inst.w, n).coordinates() == oracle);
      CHECK(evaluate_exact(inst.g, orbit_point(inst.map, inst.w, n)) == instances::evaluate(inst.g, oracle));
    }
  }
}

TEST_CASE("monotone degrees when every row sum is at least 2") {
  std::mt19937_64 rng(103);
  for (int trial = 0; trial < 30; ++trial) {
    IntMatrix s(2, IntVector(2));
    for (auto& row : s) {
      row[0] = static_cast<long>(rng() % 3);
      row[1] = 2 - row[0] + static_cast<long>(rng() % 2);
    }
    const MonomialMap map(s);
    BigInt last = -1;
    for (std::uint64_t n = 0; n <= 8; ++n) {
      const auto p = compose_power(map, n);
      BigInt total = p[0][0] + p[0][1];
      CHECK(total > last);
      last = total;
    }
  }
}

TEST_CASE("exact evaluation") {
  CHECK(evaluate_exact(line, orbit_point(squaring, point({2, 3}), 0)).is_zero());
  CHECK(evaluate_exact(line, orbit_point(squaring, point({2, 3}), 1)) == CyclotomicNumber(-4));
  CHECK(evaluate_exact(twelve, orbit_point(skew, point({2, 3}), 1)).is_zero());
  CHECK_THROWS_AS(evaluate_exact(line, orbit_point(squaring, point({2, 3}), 25)), ResourceError);
}

TEST_CASE("modular evaluation") {
  const Point w = point({2, 3});
  const auto primes = suitable_primes(line, w, 3, 0);
  CHECK(evaluate_modular(line, squaring, w, 1, primes) == ModularVerdict::nonzero);
  CHECK(evaluate_modular(line, squaring, w, 0, primes) == ModularVerdict::zero_candidate);
  CHECK(evaluate_modular(twelve, skew, w, 1, suitable_primes(twelve, w, 3, 0)) == ModularVerdict::zero_candidate);
  // 2 divides a coordinate, and 7 is not 1 mod any conductor > 6.
  CHECK_THROWS_AS(evaluate_modular(line, squaring, w, 1, {2}), ConfigError);
}

TEST_CASE("intersection sets") {
  const Point w = point({2, 3});
  CHECK(intersection_set(squaring, line, w, 30).member_steps() == std::vector<std::uint64_t>{0});
  CHECK(intersection_set(skew, twelve, w, 20).member_steps() == std::vector<std::uint64_t>{1});
  const Hypersurface positive(2, {term(1, {1, 0}), term(1, {0, 0})});
  CHECK(intersection_set(squaring, positive, w, 30).members.empty());
  ScanConfig hybrid;
  hybrid.mode = ScanMode::hybrid;
  hybrid.prime_count = 2;
  CHECK_THROWS_AS(intersection_set(squaring, line, w, 5, hybrid), ConfigError);

  // Large steps: hybrid keeps going past the exact cutoff.
  hybrid.prime_count = 3;
  const auto far = intersection_set(squaring, line, w, 200, hybrid);
  CHECK(far.member_steps() == std::vector<std::uint64_t>{0});
  CHECK(far.members[0].tag == MemberTag::exact);
  // Exact mode certifies large steps without materialising them.
  CHECK(intersection_set(squaring, line, w, 60).member_steps() == std::vector<std::uint64_t>{0});
}

TEST_CASE("modular-only tags above the cutoff") {
  // G = X_1 X_2 + X_1 X_3 - X_1 X_4 on (X_1^2, X_2, X_3, X_4) from (3, 1, 2, 3):
  // 3^(2^n) (1 + 2 - 3) has three distinct rational parts, so only direct
  // evaluation can confirm the zero.
  const MonomialMap half({{2, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
  const Hypersurface g(4, {term(1, {1, 1, 0, 0}), term(1, {1, 0, 1, 0}), term(-1, {1, 0, 0, 1})});
  ScanConfig cfg;
  cfg.mode = ScanMode::hybrid;
  cfg.decision.cutoff_bits = 1000;
  const auto r = intersection_set(half, g, point({3, 1, 2, 3}), 12, cfg);
  REQUIRE(r.members.size() == 13);
  for (const auto& m : r.members) CHECK(m.tag == (m.n < 10 ? MemberTag::exact : MemberTag::modular_only));
  cfg.mode = ScanMode::exact;
  CHECK_THROWS_AS(intersection_set(half, g, point({3, 1, 2, 3}), 12, cfg), ResourceError);
}

TEST_CASE("exact, modular and hybrid agree on random instances") {
  std::mt19937_64 rng(107);
  for (int trial = 0; trial < 40; ++trial) {
    const auto inst = instances::random_instance(rng, trial % 2 == 0);
    std::vector<std::uint64_t> oracle;
    Point x = inst.w;
    for (std::uint64_t n = 0; n <= 6; ++n) {
      if (instances::evaluate(inst.g, x).is_zero()) oracle.push_back(n);
      x = instances::apply(inst.map, x);
    }
    ScanConfig cfg;
    CHECK(intersection_set(inst.map, inst.g, inst.w, 6, cfg).member_steps() == oracle);
    cfg.mode = ScanMode::hybrid;
    CHECK(intersection_set(inst.map, inst.g, inst.w, 6, cfg).member_steps() == oracle);
    cfg.mode = ScanMode::modular;
    const auto modular = intersection_set(inst.map, inst.g, inst.w, 6, cfg).member_steps();
    // Modular members may include false positives but never miss a zero.
    for (auto n : oracle) CHECK(std::find(modular.begin(), modular.end(), n) != modular.end());
  }
}

TEST_CASE("theorem hypotheses") {
  const auto a = applicable_theorems(squaring, line, point({2, 3}));
  CHECK(find(a, "3.1").applies);
  REQUIRE(find(a, "3.1").bound);
  CHECK(find(a, "3.1").bound->log10() == doctest::Approx(972 * std::log10(24.0)).epsilon(1e-9));
  CHECK(find(a, "3.3").applies);

  const Point dependent{MonomialScalar(2), MonomialScalar(2, 4, 1)};
  const auto b = applicable_theorems(squaring, line, dependent);
  CHECK_FALSE(find(b, "3.1").applies);
  bool mentions_d4 = false;
  for (const auto& c : find(b, "3.2").conditions) mentions_d4 = mentions_d4 || c.detail == "D = 4";
  CHECK(mentions_d4);

  const auto c = applicable_theorems(skew, twelve, point({2, 3}));
  CHECK(find(c, "3.7").applies);
  CHECK_FALSE(find(c, "3.1").applies);

  // Theorem 3.4: G = X_1 X_2 - 5 has a constant term, so it fails; with
  // G = X_1 - 7 X_2 the monomials differ in both exponents.
  const MonomialMap diag({{2, 0}, {0, 1}});
  const Hypersurface sep(2, {term(1, {1, 0}), term(-7, {0, 1})});
  const auto d = applicable_theorems(diag, sep, point({2, 3}));
  CHECK(find(d, "3.4").applies);
  CHECK_FALSE(find(d, "3.3").applies);
  CHECK(find(d, "3.4").bound->params.at("d") == 1);

  // Theorem 3.5: (X_1^3, X_1 X_2), G = X_1^2 + X_2.
  const MonomialMap tri({{3, 0}, {1, 1}});
  const Hypersurface g5(2, {term(1, {2, 0}), term(1, {0, 1})});
  CHECK(find(applicable_theorems(tri, g5, point({2, 3})), "3.5").applies);

  // Theorem 3.6: (X_1^2 X_2, X_2), G = X_1 - X_2^2.
  const MonomialMap up({{2, 1}, {0, 1}});
  const Hypersurface g6(2, {term(1, {1, 0}), term(-1, {0, 2})});
  CHECK(find(applicable_theorems(up, g6, point({2, 3})), "3.6").applies);
  CHECK_FALSE(find(applicable_theorems(up, g6, point({2, 3})), "3.7").applies);
}

TEST_CASE("member counts stay below every applicable bound") {
  std::mt19937_64 rng(109);
  for (int trial = 0; trial < 30; ++trial) {
    const auto inst = instances::random_instance(rng, true);
    const auto r = intersection_set(inst.map, inst.g, inst.w, 6);
    for (const auto& b : r.bounds)
      CHECK(compare_count(BigInt(static_cast<unsigned long>(r.members.size())), b.bound));
  }
}

TEST_CASE("dominant-term thresholds") {
  const Hypersurface g(2, {term(1, {0, 1}), term(-100, {1, 0})});
  CHECK(dominant_term_threshold(squaring, g, point({2, 3})) == 4);
  const Hypersurface h(2, {term(1, {0, 1}), term(-1, {1, 0})});
  CHECK(dominant_term_threshold(squaring, h, point({2, 3})) == 0);
  CHECK_FALSE(dominant_term_threshold(squaring, h, point({3, 3})));
  CHECK_FALSE(dominant_term_threshold(skew, h, point({2, 3})));

  // Oracle: at n0 and beyond the inequality holds exactly; at n0 - 1 it fails.
  for (long c : {2L, 5L, 30L, 1000L}) {
    const Hypersurface gc(2, {term(1, {0, 1}), term(-c, {1, 0})});
    const auto n0 = dominant_term_threshold(squaring, gc, point({2, 3}));
    REQUIRE(n0);
    auto holds = [&](std::uint64_t n) {
      const BigInt e = BigInt(1) << n;
      BigInt lhs, rhs;
      mpz_pow_ui(lhs.get_mpz_t(), BigInt(3).get_mpz_t(), e.get_ui());
      mpz_pow_ui(rhs.get_mpz_t(), BigInt(2).get_mpz_t(), e.get_ui());
      return lhs > c * rhs;
    };
    for (std::uint64_t n = *n0; n < *n0 + 5; ++n) CHECK(holds(n));
    if (*n0 > 0) CHECK_FALSE(holds(*n0 - 1));
  }
}

TEST_CASE("synchronized orbits") {
  const MonomialMap f(IntMatrix{IntVector{BigInt(2)}});
  const MonomialMap h(IntMatrix{IntVector{BigInt(3)}});
  const auto r = synchronized_intersection(f, h, point({2}), point({2}), 12);
  CHECK(r.members == std::vector<std::uint64_t>{0});
  const auto same = synchronized_intersection(f, f, point({2}), point({2}), 5);
  CHECK(same.members.size() == 6);
  const auto apart = synchronized_intersection(f, f, point({2}), point({4}), 8);
  CHECK(apart.members.empty());
  CHECK(apart.superset.members.empty());
  CHECK_THROWS_AS(synchronized_intersection(f, squaring, point({2}), point({2, 3}), 3), DomainError);

  std::mt19937_64 rng(113);
  for (int trial = 0; trial < 25; ++trial) {
    const auto a = instances::random_instance(rng, false);
    auto b = instances::random_instance(rng, false);
    while (b.map.dimension() != a.map.dimension()) b = instances::random_instance(rng, false);
    const Point w2 = trial % 2 ? a.w : b.w;
    const auto s = synchronized_intersection(a.map, b.map, a.w, w2, 6);
    const auto sup = s.superset.member_steps();
    for (auto n : s.members) CHECK(std::find(sup.begin(), sup.end(), n) != sup.end());
    // Oracle by substitution.
    std::vector<std::uint64_t> oracle;
    for (std::uint64_t n = 0; n <= 6; ++n)
      if (instances::iterate(a.map, a.w, n) == instances::iterate(b.map, w2, n)) oracle.push_back(n);
    CHECK(s.members == oracle);
  }
}
