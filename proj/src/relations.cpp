#include "orbitlab/relations.hpp"

#include <mutex>
#include <set>

#include "orbitlab/errors.hpp"

namespace orbitlab {

namespace {

const std::vector<std::uint64_t>& primes_up_to(std::uint64_t limit) {
  static std::mutex mu;
  static std::map<std::uint64_t, std::vector<std::uint64_t>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(limit);
  if (it != cache.end()) return it->second;
  std::vector<bool> composite(limit + 1, false);
  std::vector<std::uint64_t> primes;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return cache.emplace(limit, std::move(primes)).first->second;
}

void add_row_multiple(IntVector& target, const IntVector& source, const BigInt& factor) {
  for (std::size_t j = 0; j < target.size(); ++j)
    if (source[j] != 0) target[j] -= factor * source[j];
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

/// Integer row echelon form by unimodular row operations, mirrored on `aug`.
std::size_t echelon(IntMatrix& m, IntMatrix& aug, std::vector<std::size_t>& pivots) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    while (true) {
      std::size_t best = rows;
      for (std::size_t r = row; r < rows; ++r)
        if (m[r][col] != 0 && (best == rows || abs(m[r][col]) < abs(m[best][col]))) best = r;
      if (best == rows) break;
      std::swap(m[best], m[row]);
      std::swap(aug[best], aug[row]);
      bool clean = true;
      for (std::size_t r = row + 1; r < rows; ++r) {
        if (m[r][col] == 0) continue;
        BigInt q = floor_div(m[r][col], m[row][col]);
        add_row_multiple(m[r], m[row], q);
        add_row_multiple(aug[r], aug[row], q);
        if (m[r][col] != 0) clean = false;
      }
      if (clean) {
        pivots.push_back(col);
        ++row;
        break;
      }
    }
  }
  return row;
}

}  // namespace

std::vector<std::pair<BigInt, unsigned long>> factor_integer(const BigInt& n, const FactorConfig& cfg) {
  if (n == 0) throw DomainError("cannot factor zero");
  std::vector<std::pair<BigInt, unsigned long>> out;
  BigInt rest = abs(n);
  for (std::uint64_t p : primes_up_to(cfg.trial_limit)) {
    if (BigInt(p) * p > rest) break;
    if (mpz_divisible_ui_p(rest.get_mpz_t(), p) == 0) continue;
    unsigned long mult = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++mult;
    }
    out.emplace_back(BigInt(p), mult);
  }
  if (rest > 1) {
    const BigInt limit(cfg.trial_limit);
    // Below limit^2 a survivor of trial division is prime; above it rely on BPSW.
    if (rest >= limit * limit && mpz_probab_prime_p(rest.get_mpz_t(), 40) == 0)
      throw DomainError("rational part does not fully factor within the trial-division limit: " + rest.get_str());
    out.emplace_back(rest, 1UL);
  }
  return out;
}

FactoredScalar::FactoredScalar(const MonomialScalar& s, const FactorConfig& cfg)
    : conductor_(s.conductor()), exponent_(s.zeta_exponent()) {
  for (auto& [p, e] : factor_integer(s.modulus().get_num(), cfg)) primes_[p] += e;
  for (auto& [p, e] : factor_integer(s.modulus().get_den(), cfg)) primes_[p] -= e;
}

void FactoredScalar::normalize_root() {
  if (exponent_ % conductor_ == 0) {
    conductor_ = 1;
    exponent_ = 0;
    return;
  }
  const std::uint64_t g = gcd_u64(exponent_, conductor_);
  conductor_ /= g;
  exponent_ /= g;
}

FactoredScalar FactoredScalar::pow(const BigInt& e) const {
  FactoredScalar out;
  if (e == 0) return out;
  for (const auto& [p, v] : primes_) out.primes_[p] = v * e;
  out.conductor_ = conductor_;
  if (conductor_ != 1) {
    const unsigned __int128 prod = static_cast<unsigned __int128>(exponent_) * mod_u64(e, conductor_);
    out.exponent_ = static_cast<std::uint64_t>(prod % conductor_);
  }
  out.normalize_root();
  return out;
}

FactoredScalar operator*(const FactoredScalar& x, const FactoredScalar& y) {
  FactoredScalar out = x;
  for (const auto& [p, v] : y.primes_) {
    BigInt& slot = out.primes_[p];
    slot += v;
    if (slot == 0) out.primes_.erase(p);
  }
  out.conductor_ = lcm_u64(x.conductor_, y.conductor_);
  out.exponent_ = (x.exponent_ * (out.conductor_ / x.conductor_) + y.exponent_ * (out.conductor_ / y.conductor_)) %
                  out.conductor_;
  out.normalize_root();
  return out;
}

bool operator<(const FactoredScalar& x, const FactoredScalar& y) {
  if (x.primes_ != y.primes_) return x.primes_ < y.primes_;
  return std::tie(x.conductor_, x.exponent_) < std::tie(y.conductor_, y.exponent_);
}

BigInt FactoredScalar::valuation(const BigInt& p) const {
  auto it = primes_.find(p);
  return it == primes_.end() ? BigInt(0) : it->second;
}

IntMatrix hermite_normal_form(IntMatrix rows) {
  if (rows.empty()) return rows;
  IntMatrix dummy(rows.size(), IntVector{});
  std::vector<std::size_t> pivots;
  const std::size_t rank = echelon(rows, dummy, pivots);
  rows.resize(rank);
  for (std::size_t i = 0; i < rank; ++i) {
    const std::size_t c = pivots[i];
    if (rows[i][c] < 0)
      for (auto& x : rows[i]) x = -x;
    for (std::size_t j = 0; j < i; ++j) {
      BigInt q = floor_div(rows[j][c], rows[i][c]);
      if (q != 0) add_row_multiple(rows[j], rows[i], q);
    }
  }
  return rows;
}

IntMatrix integer_kernel(const IntMatrix& a, std::size_t n) {
  // Echelonise A^T alongside the identity; rows of the transform that hit zero
  // rows of A^T span the kernel, and unimodularity makes that span saturated.
  IntMatrix t(n, IntVector(a.size(), 0));
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t c = 0; c < n; ++c) t[c][r] = a[r][c];
  IntMatrix transform = identity_matrix(n);
  std::vector<std::size_t> pivots;
  const std::size_t rank = a.empty() ? 0 : echelon(t, transform, pivots);
  IntMatrix kernel(transform.begin() + static_cast<std::ptrdiff_t>(rank), transform.end());
  return hermite_normal_form(std::move(kernel));
}

RelationLattice multiplicative_relations_stacked(const std::vector<std::vector<MonomialScalar>>& tuples,
                                                 const FactorConfig& cfg) {
  RelationLattice out;
  out.dimension = tuples.size();
  if (tuples.empty()) return out;
  const std::size_t arity = tuples[0].size();
  for (const auto& t : tuples)
    if (t.size() != arity) throw DomainError("relation tuples must share one arity");

  std::uint64_t n = 1;
  for (const auto& t : tuples)
    for (const auto& s : t) n = lcm_u64(n, s.conductor());
  const std::size_t extra = n == 1 ? 0 : arity;
  const std::size_t unknowns = tuples.size() + extra;

  IntMatrix rows;
  for (std::size_t i = 0; i < arity; ++i) {
    std::map<BigInt, IntVector> prime_rows;
    for (std::size_t t = 0; t < tuples.size(); ++t) {
      FactoredScalar f(tuples[t][i], cfg);
      for (const auto& [p, v] : f.prime_exponents()) {
        auto [it, fresh] = prime_rows.try_emplace(p, IntVector(unknowns, 0));
        it->second[t] = v;
      }
    }
    for (auto& [p, row] : prime_rows) rows.push_back(std::move(row));
    if (extra != 0) {
      // sum_t a_t e_t + N z_i = 0 encodes the root-of-unity congruence.
      IntVector row(unknowns, 0);
      for (std::size_t t = 0; t < tuples.size(); ++t) {
        const auto& s = tuples[t][i];
        row[t] = BigInt(s.zeta_exponent()) * BigInt(n / s.conductor());
      }
      row[tuples.size() + i] = BigInt(n);
      rows.push_back(std::move(row));
    }
  }
  IntMatrix kernel = integer_kernel(rows, unknowns);
  // Projection onto the e-coordinates is injective on this kernel.
  for (auto& v : kernel) v.resize(tuples.size());
  out.basis = hermite_normal_form(std::move(kernel));
  return out;
}

RelationLattice multiplicative_relations(const std::vector<MonomialScalar>& values, const FactorConfig& cfg) {
  std::vector<std::vector<MonomialScalar>> tuples;
  tuples.reserve(values.size());
  for (const auto& v : values) tuples.push_back({v});
  return multiplicative_relations_stacked(tuples, cfg);
}

bool verify_relation(const std::vector<MonomialScalar>& values, const IntVector& k, const FactorConfig& cfg) {
  if (values.size() != k.size()) throw DomainError("relation length does not match the value count");
  FactoredScalar acc;
  for (std::size_t i = 0; i < values.size(); ++i) acc = acc * FactoredScalar(values[i], cfg).pow(k[i]);
  return acc.is_one();
}

IndependenceResult is_multiplicatively_independent(const std::vector<MonomialScalar>& values,
                                                   const FactorConfig& cfg) {
  IndependenceResult out;
  out.lattice = multiplicative_relations(values, cfg);
  out.independent = out.lattice.trivial();
  if (!out.independent) {
    const IntVector& cert = out.lattice.basis.front();
    if (!verify_relation(values, cert, cfg))
      throw Error("internal: relation certificate failed exact re-verification");
    out.certificate = cert;
  }
  return out;
}

}  // namespace orbitlab
