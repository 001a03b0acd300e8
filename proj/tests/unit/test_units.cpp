#include <cmath>
#include <random>
#include <set>

#include "doctest.h"
#include "orbitlab/bounds.hpp"
#include "orbitlab/errors.hpp"
#include "orbitlab/partitions.hpp"
#include "orbitlab/unit_equations.hpp"

using namespace orbitlab;

namespace {

std::vector<CyclotomicNumber> coeffs(std::initializer_list<long> xs) {
  std::vector<CyclotomicNumber> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

Tuple tuple(std::initializer_list<long> xs) {
  Tuple out;
  for (long x : xs) out.emplace_back(Rational(x));
  return out;
}

/// Number of set partitions with all blocks >= 2, by labelling each element
/// with a block id and keeping canonical labellings only.
std::size_t brute_suitable(std::size_t k, std::size_t* all = nullptr) {
  std::size_t total = 0, suitable = 0;
  std::vector<std::size_t> label(k, 0);
  for (;;) {
    bool canonical = true;
    std::size_t next = 0;
    for (std::size_t i = 0; i < k && canonical; ++i) {
      if (label[i] > next) canonical = false;
      if (label[i] == next) ++next;
    }
    if (canonical) {
      ++total;
      std::vector<std::size_t> sizes(k, 0);
      for (auto l : label) ++sizes[l];
      bool ok = true;
      for (std::size_t b = 0; b < next; ++b) ok = ok && sizes[b] >= 2;
      if (ok) ++suitable;
    }
    std::size_t i = 0;
    while (i < k && ++label[i] == k) label[i++] = 0;
    if (i == k) break;
  }
  if (all) *all = total;
  return suitable;
}

/// Bell numbers from the recurrence B(n+1) = sum C(n, j) B(j), in doubles.
double bell_recurrence(std::size_t k) {
  std::vector<double> b{1};
  for (std::size_t n = 0; n < k; ++n) {
    double s = 0, c = 1;
    for (std::size_t j = 0; j <= n; ++j) {
      s += c * b[j];
      c = c * static_cast<double>(n - j) / static_cast<double>(j + 1);
    }
    b.push_back(s);
  }
  return b[k];
}

}  // namespace

TEST_CASE("set partitions") {
  CHECK(suitable_partitions(2).size() == 1);
  const auto four = suitable_partitions(4);
  REQUIRE(four.size() == 4);
  std::set<std::string> names;
  for (const auto& p : four) names.insert(to_string(p));
  CHECK(names == std::set<std::string>{"{1234}", "{12|34}", "{13|24}", "{14|23}"});
  CHECK(suitable_partitions(5).size() == 11);
  CHECK_THROWS_AS(suitable_partitions(1), DomainError);
  for (std::size_t k = 1; k <= 8; ++k) {
    std::size_t all = 0;
    const std::size_t s = brute_suitable(k, &all);
    CHECK(set_partitions(k).size() == all);
    CHECK(BigInt(static_cast<unsigned long>(all)) == bell_number(k));
    if (k >= 2) CHECK(suitable_partitions(k).size() == s);
  }
  for (std::size_t k = 0; k <= 10; ++k) CHECK(bell_number(k).get_d() == bell_recurrence(k));
}

TEST_CASE("Bell number bound") {
  for (std::size_t k = 2; k <= 10; ++k) {
    const auto bound = evaluate_bound("bell", {{"k", static_cast<long>(k)}});
    CHECK(compare_count(bell_number(k), bound));
    const double direct = static_cast<double>(k) * std::log(0.792 * static_cast<double>(k) / std::log(k + 1.0));
    CHECK(bound.log_natural() == doctest::Approx(direct).epsilon(1e-12));
  }
  // Tight case: Bell(4) = 15 against about 15.01.
  CHECK(std::exp(evaluate_bound("bell", {{"k", 4}}).log_natural()) == doctest::Approx(15.01).epsilon(1e-3));
}

TEST_CASE("refinement") {
  const auto ps = set_partitions(4);
  for (const auto& p : ps) {
    CHECK(p.refines(p));
    CHECK(p.refines(ps.front()));
  }
  SetPartition fine{{{0, 1}, {2, 3}}};
  SetPartition coarse{{{0, 1, 2, 3}}};
  CHECK(fine.refines(coarse));
  CHECK_FALSE(coarse.refines(fine));
}

TEST_CASE("unit equation enumeration") {
  const SubgroupGamma gamma({tuple({2, 1, 1}), tuple({1, 2, 1}), tuple({1, 1, 2})});
  CHECK(gamma.rank() == 3);
  const auto sols = enumerate_solutions(coeffs({1, 1, -1}), gamma, 6);
  REQUIRE(sols.size() == 12);
  for (const auto& s : sols) {
    CHECK(s.exponents[0] == s.exponents[1]);
    CHECK(s.exponents[2] == s.exponents[0] + 1);
    CHECK(s.nondegenerate);
  }
  const auto classes = proportionality_classes(sols);
  REQUIRE(classes.size() == 1);
  CHECK(classes[0].representative == tuple({1, 1, 2}));

  const auto diag = enumerate_solutions(coeffs({1, -1}), SubgroupGamma({tuple({2, 2})}), 3);
  CHECK(diag.size() == 7);
  const auto dc = proportionality_classes(diag);
  REQUIRE(dc.size() == 1);
  CHECK(dc[0].representative == tuple({1, 1}));
  CHECK(enumerate_solutions(coeffs({1, 1}), SubgroupGamma({tuple({2, 3}), tuple({5, 7})}), 3).empty());
  CHECK(proportionality_classes({}).empty());

  CHECK_THROWS_AS(enumerate_solutions(coeffs({1, 0}), SubgroupGamma({tuple({2, 2})}), 1), DomainError);
  UnitConfig small;
  small.budget = 100;
  CHECK_THROWS_AS(enumerate_solutions(coeffs({1, -1}), SubgroupGamma({tuple({2, 2}), tuple({3, 3})}), 5, small),
                  ResourceError);
  // Lattice-redundant generators do not count towards the rank.
  CHECK(SubgroupGamma({tuple({2, 4}), tuple({4, 16})}).rank() == 1);
}

TEST_CASE("enumeration against a direct box search") {
  std::mt19937_64 rng(301);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t k = 2 + rng() % 3;
    std::vector<CyclotomicNumber> a;
    for (std::size_t i = 0; i < k; ++i) {
      long c = static_cast<long>(rng() % 5) - 2;
      a.emplace_back(c == 0 ? 1 : c);
    }
    std::vector<Tuple> gens(2);
    for (auto& g : gens)
      for (std::size_t i = 0; i < k; ++i) g.emplace_back(Rational(static_cast<long>(1 + rng() % 3)));
    const SubgroupGamma gamma(gens);
    const long box = 2;
    std::size_t expected = 0;
    for (long e0 = -box; e0 <= box; ++e0)
      for (long e1 = -box; e1 <= box; ++e1) {
        Rational sum = 0;
        for (std::size_t i = 0; i < k; ++i) {
          Rational x = pow(gens[0][i].modulus(), e0) * pow(gens[1][i].modulus(), e1);
          sum += a[i].rational_value() * x;
        }
        if (sum == 0) ++expected;
      }
    const auto sols = enumerate_solutions(a, gamma, box);
    CHECK(sols.size() == expected);
    for (const auto& s : sols) {
      CHECK(subsum(a, s.x, (std::uint64_t{1} << k) - 1).is_zero());
      bool nondeg = true;
      for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << k); ++mask) {
        Rational part = 0;
        for (std::size_t i = 0; i < k; ++i)
          if (mask >> i & 1) part += a[i].rational_value() * s.x[i].modulus();
        nondeg = nondeg && part != 0;
      }
      CHECK(s.nondegenerate == nondeg);
    }
    for (const auto& c : proportionality_classes(sols)) {
      Tuple again;
      for (const auto& v : c.representative) again.push_back(v / c.representative.front());
      CHECK(again == c.representative);
    }
  }
}

TEST_CASE("weak proportionality") {
  const SubgroupGamma gamma({tuple({2, 1, 1}), tuple({1, 2, 1}), tuple({1, 1, 2})});
  const auto a = coeffs({1, 1, -1});
  const auto sols = enumerate_solutions(a, gamma, 6);
  const auto weak = weak_proportionality_classes(sols, a);
  CHECK(weak.closure_classes.size() == 1);
  CHECK(weak.per_partition_total() == 1);
  REQUIRE(weak.per_partition.size() == 1);
  CHECK(to_string(weak.per_partition[0].partition) == "{123}");
  CHECK(weak_proportionality_classes({}, a).closure_classes.empty());

  // a = (1, -1, 1, -1) over diagonal powers of 2.
  const SubgroupGamma diag({tuple({2, 1, 1, 1}), tuple({1, 2, 1, 1}), tuple({1, 1, 2, 1}), tuple({1, 1, 1, 2})});
  const auto b = coeffs({1, -1, 1, -1});
  const auto s4 = enumerate_solutions(b, diag, 2);
  const auto w4 = weak_proportionality_classes(s4, b);
  std::size_t split = 0;
  for (const auto& e : w4.per_partition)
    if (to_string(e.partition) == "{12|34}") split = e.classes;
  // Block-wise, (x, x, y, y) is proportional to (1, 1, 1, 1): one class.
  CHECK(split == 1);
  const auto classes = proportionality_classes(s4);
  CHECK(classes.size() > w4.per_partition_total());
  // Refinement monotonicity: solving {12|34} implies solving {1234}.
  for (std::size_t i = 0; i < s4.size(); ++i)
    for (const auto& p : w4.solved[i])
      for (const auto& q : suitable_partitions(4))
        if (p.refines(q)) CHECK(std::find(w4.solved[i].begin(), w4.solved[i].end(), q) != w4.solved[i].end());
}

TEST_CASE("unit bounds ledger") {
  UnitCounts c{1, 1, 1};
  const auto ledger = compare_with_bounds(c, 3, 3);
  REQUIRE(ledger.size() == 3);
  for (const auto& e : ledger) CHECK(e.holds);
  CHECK(ledger[0].bound.log10() == doctest::Approx(384 * std::log10(24.0)).epsilon(1e-9));
  for (const auto& e : compare_with_bounds({1000, 1000, 1000}, 2, 1)) CHECK(e.holds);
}
