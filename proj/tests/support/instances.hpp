#pragma once

// Random monomial-dynamics instances for the agreement tests, plus a
// substitution oracle that iterates the map coordinate by coordinate.

#include <random>

#include "orbitlab/monomial_map.hpp"

namespace instances {

using namespace orbitlab;

struct Instance {
  MonomialMap map;
  Point w;
  Hypersurface g;
};

/// Phi(x)_i = prod_j x_j^{S[i][j]}, with small exponents taken as longs.
inline Point apply(const MonomialMap& map, const Point& x) {
  Point out;
  for (const auto& row : map.exponents()) {
    MonomialScalar acc;
    for (std::size_t j = 0; j < row.size(); ++j) acc = acc * x[j].pow(row[j].get_si());
    out.push_back(acc);
  }
  return out;
}

inline Point iterate(const MonomialMap& map, Point x, std::uint64_t n) {
  for (std::uint64_t i = 0; i < n; ++i) x = instances::apply(map, x);
  return x;
}

inline CyclotomicNumber evaluate(const Hypersurface& g, const Point& x) {
  CyclotomicNumber sum;
  for (const auto& t : g.terms()) {
    MonomialScalar mono;
    for (std::size_t j = 0; j < x.size(); ++j) mono = mono * x[j].pow(t.exps[j].get_si());
    sum += t.coeff * mono.to_cyclotomic();
  }
  return sum;
}

inline MonomialScalar random_scalar(std::mt19937_64& rng) {
  const std::uint64_t conductors[] = {1, 1, 2, 3, 4, 6};
  const std::uint64_t n = conductors[rng() % 6];
  Rational q(static_cast<long>(1 + rng() % 3), static_cast<long>(1 + rng() % 2));
  q.canonicalize();
  return MonomialScalar(q, n, static_cast<std::int64_t>(rng() % n));
}

/// m <= 3, row sums <= 3, at most 4 monomials with exponents <= 1. When
/// plant is set the constant term is chosen so that G vanishes at some step.
inline Instance random_instance(std::mt19937_64& rng, bool plant) {
  const std::size_t m = 1 + rng() % 3;
  IntMatrix s(m, IntVector(m, 0));
  for (std::size_t i = 0; i < m; ++i) {
    long budget = 1 + static_cast<long>(rng() % 3);
    s[i][i] = 1;
    --budget;
    while (budget-- > 0) s[i][rng() % m] += 1;
  }
  MonomialMap map(s);
  Point w;
  for (std::size_t i = 0; i < m; ++i) w.push_back(random_scalar(rng));

  std::vector<HypersurfaceTerm> terms;
  const std::size_t count = 1 + rng() % 3;
  for (std::size_t t = 0; t < 40 && terms.size() < count; ++t) {
    IntVector e(m);
    bool nonconstant = false;
    for (auto& x : e) {
      x = static_cast<long>(rng() % 2);
      nonconstant = nonconstant || x != 0;
    }
    bool fresh = nonconstant;
    for (const auto& old : terms) fresh = fresh && old.exps != e;
    if (!fresh) continue;
    terms.push_back({random_scalar(rng).to_cyclotomic().scaled(static_cast<long>(1 + rng() % 2)), e});
  }
  if (plant) {
    const std::uint64_t n0 = rng() % 4;
    const Hypersurface partial(m, terms);
    const CyclotomicNumber v = evaluate(partial, iterate(map, w, n0));
    if (!v.is_zero()) terms.push_back({-v, IntVector(m, 0)});
  } else if (rng() % 2) {
    terms.push_back({CyclotomicNumber(static_cast<long>(rng() % 7) - 3), IntVector(m, 0)});
    if (terms.back().coeff.is_zero()) terms.pop_back();
  }
  Hypersurface g(m, std::move(terms));
  return {std::move(map), std::move(w), std::move(g)};
}

}  // namespace instances
