#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace orbitlab {

using BigInt = mpz_class;
using Rational = mpq_class;

using IntVector = std::vector<BigInt>;
using IntMatrix = std::vector<IntVector>;

BigInt gcd(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);
std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

/// Non-negative residue of a modulo n (n > 0).
std::uint64_t mod_u64(const BigInt& a, std::uint64_t n);
std::int64_t floor_mod(std::int64_t a, std::int64_t n);

/// Exact power of a rational with a signed exponent; 0^e for e < 0 throws.
Rational pow(const Rational& base, long exponent);

/// Number of bits of |x| (0 for x = 0).
std::size_t bit_length(const BigInt& x);

/// Euler's totient.
std::uint64_t euler_phi(std::uint64_t n);
/// Distinct prime divisors of n, increasing.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);
/// Positive divisors of n, increasing.
std::vector<std::uint64_t> divisors(std::uint64_t n);

std::string to_string(const BigInt& x);
std::string to_string(const Rational& x);

IntMatrix identity_matrix(std::size_t m);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

}  // namespace orbitlab
