#pragma once

#include <string>
#include <string_view>

#include "orbitlab/cyclotomic.hpp"
#include "orbitlab/monomial_scalar.hpp"

namespace orbitlab {

// Text forms:
//   rational          "p" or "p/q"
//   monomial scalar   "p/q * zeta(N)^a"   (also "zeta(N)", "-3*zeta(5)^2", "7")
//   cyclotomic number "cyclo(N)[c_0, ..., c_{phi(N)-1}]"
// The format_* functions emit canonical strings that parse back to the same
// value and print identically.

Rational parse_rational(std::string_view text);
MonomialScalar parse_monomial_scalar(std::string_view text);
/// Accepts any of the three forms.
CyclotomicNumber parse_cyclotomic(std::string_view text);

std::string format_rational(const Rational& q);
std::string format_monomial_scalar(const MonomialScalar& s);
std::string format_cyclotomic(const CyclotomicNumber& x);

}  // namespace orbitlab
