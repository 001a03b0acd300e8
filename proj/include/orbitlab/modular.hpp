#pragma once

#include <cstdint>
#include <vector>

#include "orbitlab/bigint.hpp"

namespace orbitlab {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);
std::uint64_t invmod(std::uint64_t a, std::uint64_t m);

/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

/// `count` distinct 62-bit primes p = 1 (mod conductor), found by stepping
/// from a start point derived from (conductor, seed). Deterministic.
std::vector<std::uint64_t> modular_primes(std::uint64_t conductor, std::size_t count, std::uint64_t seed);

/// An element of exact multiplicative order n modulo the prime p (n | p - 1).
std::uint64_t root_of_unity_mod(std::uint64_t p, std::uint64_t n);

/// Rational residue num/den mod p; throws ConfigError when p divides den.
std::uint64_t rational_mod(const Rational& q, std::uint64_t p);

using ModMatrix = std::vector<std::vector<std::uint64_t>>;

ModMatrix mod_matrix(const IntMatrix& a, std::uint64_t m);
ModMatrix mod_multiply(const ModMatrix& a, const ModMatrix& b, std::uint64_t m);
ModMatrix mod_matrix_power(const ModMatrix& a, std::uint64_t n, std::uint64_t m);

}  // namespace orbitlab
