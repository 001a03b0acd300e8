#include "orbitlab/modular.hpp"

#include "orbitlab/errors.hpp"

namespace orbitlab {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  const std::uint64_t s = a + b;
  return (s >= m || s < a) ? s - m : s;
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1U) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t m) {
  BigInt inv;
  const BigInt aa(std::to_string(a)), mm(std::to_string(m));
  if (mpz_invert(inv.get_mpz_t(), aa.get_mpz_t(), mm.get_mpz_t()) == 0) throw DivisionByZero();
  return mod_u64(inv, m);
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::uint64_t small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t p : small) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (std::uint64_t a : small) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30U)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27U)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31U);
}

}  // namespace

std::vector<std::uint64_t> modular_primes(std::uint64_t conductor, std::size_t count, std::uint64_t seed) {
  if (conductor == 0) throw ConfigError("conductor must be positive");
  constexpr std::uint64_t lo = 1ULL << 61U;
  constexpr std::uint64_t hi = 1ULL << 62U;
  if (conductor >= (1ULL << 40U)) throw ConfigError("conductor too large for 62-bit modular primes");
  std::uint64_t start = lo + splitmix64(seed ^ splitmix64(conductor)) % (1ULL << 60U);
  // Smallest c >= start with c = 1 (mod conductor).
  std::uint64_t candidate = start - (start % conductor) + 1;
  if (candidate < start) candidate += conductor;
  std::vector<std::uint64_t> primes;
  while (primes.size() < count) {
    if (candidate >= hi) candidate = lo - (lo % conductor) + 1 + conductor;
    if (is_prime_u64(candidate)) primes.push_back(candidate);
    candidate += conductor;
  }
  return primes;
}

std::uint64_t root_of_unity_mod(std::uint64_t p, std::uint64_t n) {
  if (n == 0 || (p - 1) % n != 0) throw ConfigError("modular prime must be 1 modulo the conductor");
  if (n == 1) return 1;
  const auto factors = prime_divisors(n);
  for (std::uint64_t g = 2; g < p; ++g) {
    const std::uint64_t y = powmod(g, (p - 1) / n, p);
    bool primitive = true;
    for (std::uint64_t q : factors)
      if (powmod(y, n / q, p) == 1) {
        primitive = false;
        break;
      }
    if (primitive) return y;
  }
  throw ConfigError("no root of unity of the requested order");
}

std::uint64_t rational_mod(const Rational& q, std::uint64_t p) {
  const std::uint64_t den = mod_u64(q.get_den(), p);
  if (den == 0) throw ConfigError("modular prime divides a denominator");
  return mulmod(mod_u64(q.get_num(), p), invmod(den, p), p);
}

ModMatrix mod_matrix(const IntMatrix& a, std::uint64_t m) {
  ModMatrix out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i].resize(a[i].size());
    for (std::size_t j = 0; j < a[i].size(); ++j) out[i][j] = mod_u64(a[i][j], m);
  }
  return out;
}

ModMatrix mod_multiply(const ModMatrix& a, const ModMatrix& b, std::uint64_t m) {
  const std::size_t rows = a.size(), inner = b.size(), cols = inner == 0 ? 0 : b[0].size();
  ModMatrix c(rows, std::vector<std::uint64_t>(cols, 0));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) c[i][j] = addmod(c[i][j], mulmod(a[i][k], b[k][j], m), m);
    }
  return c;
}

ModMatrix mod_matrix_power(const ModMatrix& a, std::uint64_t n, std::uint64_t m) {
  ModMatrix result(a.size(), std::vector<std::uint64_t>(a.size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i) result[i][i] = 1 % m;
  ModMatrix base = a;
  while (n != 0) {
    if (n & 1U) result = mod_multiply(result, base, m);
    base = mod_multiply(base, base, m);
    n >>= 1U;
  }
  return result;
}

}  // namespace orbitlab
