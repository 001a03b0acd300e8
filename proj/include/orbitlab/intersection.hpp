#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orbitlab/bounds.hpp"
#include "orbitlab/exact_decision.hpp"
#include "orbitlab/monomial_map.hpp"
#include "orbitlab/theorems.hpp"

namespace orbitlab {

enum class ScanMode { exact, modular, hybrid };
enum class MemberTag { exact, modular_only };

std::string to_string(ScanMode mode);
ScanMode parse_scan_mode(const std::string& text);
std::string to_string(MemberTag tag);

struct ScanConfig {
  ScanMode mode = ScanMode::exact;
  std::size_t prime_count = 5;
  std::uint64_t seed = 0;
  DecisionConfig decision;
  unsigned threads = 0;
};

struct Member {
  std::uint64_t n;
  MemberTag tag;
  friend bool operator==(const Member&, const Member&) = default;
};

struct IntersectionReport {
  std::vector<Member> members;  // sorted by n
  std::uint64_t n_max = 0;
  ScanMode mode = ScanMode::exact;
  std::vector<std::uint64_t> primes;
  std::vector<TheoremBound> bounds;

  std::vector<std::uint64_t> member_steps() const;
};

/// Exact value of G at the orbit point. Throws ResourceError when a term's
/// rational part exceeds cutoff_bits.
CyclotomicNumber evaluate_exact(const Hypersurface& g, const OrbitPoint& p, double cutoff_bits = 2e6);

/// Exact zero test at step n without materialising large terms.
ZeroVerdict decide_on_orbit(const Hypersurface& g, const MonomialMap& map, const Point& w, std::uint64_t n,
                            const DecisionConfig& cfg = {});

enum class ModularVerdict { nonzero, zero_candidate };

/// Least common conductor of the point coordinates and the coefficients of G.
std::uint64_t ambient_conductor(const Hypersurface& g, const Point& w);

/// Default prime set: primes = 1 (mod N) that also avoid every numerator and
/// denominator of w and every coefficient denominator of G.
std::vector<std::uint64_t> suitable_primes(const Hypersurface& g, const Point& w, std::size_t count,
                                           std::uint64_t seed);

/// Throws ConfigError when a prime is unsuitable.
ModularVerdict evaluate_modular(const Hypersurface& g, const MonomialMap& map, const Point& w, std::uint64_t n,
                                const std::vector<std::uint64_t>& primes);

IntersectionReport intersection_set(const MonomialMap& map, const Hypersurface& g, const Point& w,
                                    std::uint64_t n_max, const ScanConfig& cfg = {});

struct SyncReport {
  std::vector<std::uint64_t> members;
  std::uint64_t n_max = 0;
  /// The product-system set S for G = sum (X_i - Y_i); a superset of members.
  IntersectionReport superset;
};

SyncReport synchronized_intersection(const MonomialMap& f, const MonomialMap& h, const Point& w1, const Point& w2,
                                     std::uint64_t n_max, const ScanConfig& cfg = {});

/// For a power map (X_1^d, ..., X_m^d) and G = sum_j a_j X_j^(e_j): the least
/// n0 with |a_j0 w_j0^(e_j0 d^n)| > (m-1) a |w_i^(e_i d^n)| for every n >= n0,
/// where j0 is the unique coordinate of largest modulus. Absent when the
/// dominance hypotheses fail. If G has more than m terms, m-1 is replaced by
/// the number of non-dominant terms.
std::optional<std::uint64_t> dominant_term_threshold(const MonomialMap& map, const Hypersurface& g, const Point& w);

}  // namespace orbitlab
