#include <random>

#include "doctest.h"
#include "orbitlab/errors.hpp"
#include "orbitlab/modular.hpp"
#include "orbitlab/relations.hpp"

using namespace orbitlab;

namespace {

std::vector<MonomialScalar> ints(std::initializer_list<long> xs) {
  std::vector<MonomialScalar> out;
  for (long x : xs) out.emplace_back(Rational(x));
  return out;
}

/// prod values_i^{k_i} by repeated multiplication.
bool is_relation(const std::vector<MonomialScalar>& values, const IntVector& k) {
  MonomialScalar acc;
  for (std::size_t i = 0; i < values.size(); ++i) acc = acc * values[i].pow(k[i].get_si());
  return acc.is_one();
}

}  // namespace

TEST_CASE("integer factorisation") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const BigInt n(static_cast<unsigned long>(rng() % 10'000'000 + 1));
    BigInt prod = 1;
    for (const auto& [p, e] : factor_integer(n)) {
      CHECK(mpz_probab_prime_p(p.get_mpz_t(), 30) > 0);
      for (unsigned long i = 0; i < e; ++i) prod *= p;
    }
    CHECK(prod == n);
  }
  CHECK_THROWS_AS(factor_integer(BigInt(0)), DomainError);
  // A product of two primes above the trial limit is not factorable.
  FactorConfig tiny{100};
  CHECK_THROWS_AS(factor_integer(BigInt(1009) * 1013, tiny), DomainError);
}

TEST_CASE("relation lattices") {
  CHECK(multiplicative_relations(ints({2, 3})).trivial());
  const auto r48 = multiplicative_relations(ints({4, 8}));
  REQUIRE(r48.basis.size() == 1);
  const IntVector expect{3, -2};
  const IntVector negated{-3, 2};
  CHECK((r48.basis[0] == expect || r48.basis[0] == negated));
  CHECK(multiplicative_relations(ints({6, 10, 15})).trivial());
  const auto roots = multiplicative_relations({MonomialScalar(2), MonomialScalar(2, 4, 1)});
  REQUIRE(roots.basis.size() == 1);
  CHECK(is_relation({MonomialScalar(2), MonomialScalar(2, 4, 1)}, roots.basis[0]));
}

TEST_CASE("independence certificates") {
  auto r = is_multiplicatively_independent(ints({4, 8}));
  CHECK_FALSE(r.independent);
  REQUIRE(r.certificate);
  CHECK(verify_relation(ints({4, 8}), *r.certificate));
  CHECK(is_multiplicatively_independent(ints({2, 3})).independent);
  CHECK(is_multiplicatively_independent(ints({6, 10, 15})).independent);
  CHECK_THROWS_AS(is_multiplicatively_independent({MonomialScalar(0)}), DomainError);
}

TEST_CASE("planted relations are always found") {
  std::mt19937_64 rng(43);
  const long primes[] = {2, 3, 5, 7};
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<MonomialScalar> w;
    for (int i = 0; i < 2; ++i) {
      MonomialScalar x(1, 6, static_cast<std::int64_t>(rng() % 6));
      for (long p : primes) x = x * MonomialScalar(Rational(p)).pow(static_cast<long>(rng() % 5) - 2);
      w.push_back(x);
    }
    // Append a product w_1^a w_2^b, a relation by construction.
    const long a = static_cast<long>(rng() % 7) - 3;
    const long b = static_cast<long>(rng() % 7) - 3;
    w.push_back(w[0].pow(a) * w[1].pow(b));
    const auto res = is_multiplicatively_independent(w);
    CHECK_FALSE(res.independent);
    REQUIRE(res.certificate);
    CHECK(is_relation(w, *res.certificate));
    for (const auto& row : res.lattice.basis) CHECK(is_relation(w, row));
  }
}

TEST_CASE("integer kernel and HNF") {
  const IntMatrix a{{1, 2, 3}, {2, 4, 6}};
  const auto k = integer_kernel(a, 3);
  CHECK(k.size() == 2);
  for (const auto& v : k)
    for (const auto& row : a) CHECK(row[0] * v[0] + row[1] * v[1] + row[2] * v[2] == 0);
  // Saturation: the kernel of (2 4) is spanned by (2, -1), not (4, -2).
  const auto s = integer_kernel({{2, 4}}, 2);
  REQUIRE(s.size() == 1);
  CHECK(abs(s[0][0]) == 2);
  CHECK(abs(s[0][1]) == 1);
  const auto h = hermite_normal_form({{4, 6}, {2, 2}});
  REQUIRE(h.size() == 2);
  CHECK(h[0][0] * h[1][1] == 4);
}

TEST_CASE("factored scalars") {
  const FactoredScalar x(MonomialScalar(Rational(12, 5)));
  const auto y = x.pow(BigInt(1) << 200);
  CHECK(y.valuation(2) == BigInt(2) * (BigInt(1) << 200));
  CHECK(y.valuation(5) == -(BigInt(1) << 200));
  CHECK(x.pow(3) == FactoredScalar(MonomialScalar(Rational(1728, 125))));
  CHECK((x * x.pow(-1)).is_one());
}

TEST_CASE("modular helpers") {
  const std::uint64_t p = (std::uint64_t{1} << 61) - 1;
  CHECK(is_prime_u64(p));
  CHECK_FALSE(is_prime_u64(p - 2));
  CHECK(mulmod(p - 1, p - 1, p) == 1);
  CHECK(mulmod(invmod(12345, p), 12345, p) == 1);
  const auto ps = modular_primes(12, 4, 9);
  REQUIRE(ps.size() == 4);
  for (auto q : ps) {
    CHECK(is_prime_u64(q));
    CHECK(q % 12 == 1);
    const auto z = root_of_unity_mod(q, 12);
    CHECK(powmod(z, 12, q) == 1);
    CHECK(powmod(z, 6, q) != 1);
    CHECK(powmod(z, 4, q) != 1);
  }
  CHECK(modular_primes(12, 4, 9) == ps);
  CHECK(mulmod(rational_mod(Rational(3, 7), ps[0]), 7, ps[0]) == 3);
  const auto m = mod_matrix_power(mod_matrix({{1, 1}, {1, 0}}, 1000), 10, 1000);
  CHECK(m[0][1] == 55);
}
