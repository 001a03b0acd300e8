#pragma once

#include <cstdint>
#include <vector>

#include "orbitlab/cyclotomic.hpp"
#include "orbitlab/lrs.hpp"
#include "orbitlab/monomial_scalar.hpp"

namespace orbitlab {

struct ExpTerm {
  std::vector<CyclotomicNumber> poly;  // f_i, low degree first
  MonomialScalar alpha;
};

/// F(z) = sum_i f_i(z) alpha_i^z with nonzero f_i and distinct alpha_i.
class ExponentialPolynomial {
 public:
  explicit ExponentialPolynomial(std::vector<ExpTerm> terms);

  const std::vector<ExpTerm>& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  /// max deg f_i + 1
  long max_multiplicity() const;
  /// deg f_1 + ... + deg f_k + k, the order of the associated recurrence.
  long recurrence_order() const;
  bool constant_coefficients() const;
  std::vector<MonomialScalar> alphas() const;
  CyclotomicNumber evaluate(std::uint64_t n) const;

 private:
  std::vector<ExpTerm> terms_;
};

ZeroSetReport exppoly_zero_scan(const ExponentialPolynomial& f, std::uint64_t n_max);

/// Solutions of F(n) = mu (mu != 0), scanned as the zero set of F - mu * 1^z.
ZeroSetReport value_set(const ExponentialPolynomial& f, const CyclotomicNumber& mu, std::uint64_t n_max);

}  // namespace orbitlab
