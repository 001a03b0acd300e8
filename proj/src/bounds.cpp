#include "orbitlab/bounds.hpp"

#include <cmath>
#include <functional>
#include <limits>

#include "orbitlab/errors.hpp"

namespace orbitlab {

namespace {

constexpr mpfr_prec_t kPrec = 256;
constexpr double kExactBitLimit = 1e6;

struct Formula {
  std::string id;
  std::vector<std::pair<std::string, long>> params;  // name, least admissible value
  std::function<Interval(const BoundParams&)> log;
  std::function<Rational(const BoundParams&)> exact;  // empty: never an exact integer
  bool nested = false;
};

BigInt big(const BoundParams& p, const char* name) { return BigInt(p.at(name)); }

BigInt ipow(const BigInt& base, unsigned long e) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

unsigned long as_ulong(const BigInt& x) {
  if (!x.fits_ulong_p()) throw ResourceError("exponent too large to materialise");
  return x.get_ui();
}

Interval lg(const BigInt& x) { return Interval::exact(x, kPrec).log(); }
Interval lgq(const Rational& x) { return Interval::exact(x, kPrec).log(); }
Interval num(const BigInt& x) { return Interval::exact(x, kPrec); }

// (8 x^a)^(8 x^(6a)) in log form and exactly.
Interval poly_log(const BigInt& x, unsigned long a) {
  return num(8 * ipow(x, 6 * a)) * lg(8 * ipow(x, a));
}
Rational poly_exact(const BigInt& x, unsigned long a) {
  return Rational(ipow(8 * ipow(x, a), as_ulong(8 * ipow(x, 6 * a))));
}

// (8 x)^(4 x^5)
Interval simple_log(const BigInt& x) { return num(4 * ipow(x, 5)) * lg(BigInt(8 * x)); }
Rational simple_exact(const BigInt& x) { return Rational(ipow(8 * x, as_ulong(4 * ipow(x, 5)))); }

// (8k)^(4 (k-1)^4 (k+r))
BigInt unit_exponent(const BigInt& k, const BigInt& r) { return 4 * ipow(k - 1, 4) * (k + r); }
Interval unit_log(const BigInt& k, const BigInt& r) { return num(unit_exponent(k, r)) * lg(BigInt(8 * k)); }
Rational unit_exact(const BigInt& k, const BigInt& r) {
  return Rational(ipow(8 * k, as_ulong(unit_exponent(k, r))));
}

// (0.5 k)^k
Interval half_power_log(const BigInt& k) { return num(k) * lgq(Rational(k, 2)); }
Rational half_power_exact(const BigInt& k) { return pow(Rational(k, 2), as_ulong(k)); }

// 2^(35 B^3) d^(6 B^2)
Interval schmidt_log(const BigInt& b, const BigInt& d) {
  return num(35 * ipow(b, 3)) * lg(BigInt(2)) + num(6 * ipow(b, 2)) * lg(d);
}
Rational schmidt_exact(const BigInt& b, const BigInt& d) {
  return Rational(ipow(BigInt(2), as_ulong(35 * ipow(b, 3))) * ipow(d, as_ulong(6 * ipow(b, 2))));
}

// (0.5 n)^n (8 n)^(4 n (n-1)^4 (m+1))
BigInt general_exponent(const BigInt& n, const BigInt& m) { return 4 * n * ipow(n - 1, 4) * (m + 1); }
Interval general_log(const BigInt& n, const BigInt& m) {
  return half_power_log(n) + num(general_exponent(n, m)) * lg(BigInt(8 * n));
}
Rational general_exact(const BigInt& n, const BigInt& m) {
  return half_power_exact(n) * Rational(ipow(8 * n, as_ulong(general_exponent(n, m))));
}

// D (4(d+w))^e (m-1)
Interval padic_log(const BoundParams& p, const BigInt& e) {
  return lg(big(p, "D")) + num(e) * lg(BigInt(4 * (big(p, "d") + big(p, "omega")))) + lg(BigInt(big(p, "m") - 1));
}
Rational padic_exact(const BoundParams& p, const BigInt& e) {
  return Rational(big(p, "D") * ipow(4 * (big(p, "d") + big(p, "omega")), as_ulong(e)) * (big(p, "m") - 1));
}

Formula general_theorem(const std::string& id) {
  return {id,
          {{"n", 1}, {"m", 1}},
          [](const BoundParams& p) { return general_log(big(p, "n"), big(p, "m")); },
          [](const BoundParams& p) { return general_exact(big(p, "n"), big(p, "m")); }};
}

const std::vector<Formula>& catalogue() {
  static const std::vector<Formula> formulas = [] {
    std::vector<Formula> f;
    f.push_back({"L2.1-general",
                 {{"m", 1}},
                 [](const BoundParams& p) { return num(70 * big(p, "m")).exp(); },
                 {},
                 true});
    f.push_back({"L2.1-simple",
                 {{"m", 1}},
                 [](const BoundParams& p) { return simple_log(big(p, "m")); },
                 [](const BoundParams& p) { return simple_exact(big(p, "m")); }});
    f.push_back({"L2.2-poly",
                 {{"k", 1}, {"a", 1}},
                 [](const BoundParams& p) { return poly_log(big(p, "k"), p.at("a")); },
                 [](const BoundParams& p) { return poly_exact(big(p, "k"), p.at("a")); }});
    f.push_back({"L2.2-simple",
                 {{"m", 1}},
                 [](const BoundParams& p) { return simple_log(big(p, "m")); },
                 [](const BoundParams& p) { return simple_exact(big(p, "m")); }});
    f.push_back({"L2.3",
                 {{"D", 1}, {"k", 1}, {"a", 1}},
                 [](const BoundParams& p) { return lg(big(p, "D")) + poly_log(big(p, "k"), p.at("a")); },
                 [](const BoundParams& p) { return Rational(big(p, "D")) * poly_exact(big(p, "k"), p.at("a")); }});
    f.push_back({"Eq2.3-dubickas",
                 {{"d", 1}, {"m", 2}},
                 [](const BoundParams& p) {
                   const Interval c = Interval::exact(Rational(105314, 100000), kPrec) + num(6 * big(p, "d")).sqrt();
                   return c * (num(big(p, "m")) * lg(BigInt(big(p, "d") * big(p, "m")))).sqrt();
                 },
                 {}});
    f.push_back({"C2.4",
                 {{"D", 1}, {"k", 1}, {"a", 1}},
                 [](const BoundParams& p) { return lg(big(p, "D")) + poly_log(big(p, "k") + 1, p.at("a")); },
                 [](const BoundParams& p) { return Rational(big(p, "D")) * poly_exact(big(p, "k") + 1, p.at("a")); }});
    f.push_back({"C2.4-simple",
                 {{"m", 1}},
                 [](const BoundParams& p) { return simple_log(big(p, "m") + 1); },
                 [](const BoundParams& p) { return simple_exact(big(p, "m") + 1); }});
    f.push_back({"L2.5",
                 {{"D", 1}, {"d", 1}, {"omega", 0}, {"m", 2}},
                 [](const BoundParams& p) { return padic_log(p, 2 * (big(p, "d") + 1)); },
                 [](const BoundParams& p) { return padic_exact(p, 2 * (big(p, "d") + 1)); }});
    f.push_back({"L2.5-galois",
                 {{"D", 1}, {"d", 1}, {"omega", 0}, {"m", 2}},
                 [](const BoundParams& p) { return padic_log(p, big(p, "d") + 2); },
                 [](const BoundParams& p) { return padic_exact(p, big(p, "d") + 2); }});
    f.push_back({"L2.6",
                 {{"k", 1}, {"r", 0}},
                 [](const BoundParams& p) { return unit_log(big(p, "k"), big(p, "r")); },
                 [](const BoundParams& p) { return unit_exact(big(p, "k"), big(p, "r")); }});
    f.push_back({"C2.7",
                 {{"k", 1}, {"r", 0}},
                 [](const BoundParams& p) { return half_power_log(big(p, "k")) + unit_log(big(p, "k"), big(p, "r")); },
                 [](const BoundParams& p) {
                   return half_power_exact(big(p, "k")) * unit_exact(big(p, "k"), big(p, "r"));
                 }});
    f.push_back({"bell",
                 {{"k", 1}},
                 [](const BoundParams& p) {
                   const BigInt k = big(p, "k");
                   return num(k) * (lgq(Rational(792 * k, 1000)) - lg(BigInt(k + 1)).log());
                 },
                 {}});
    f.push_back({"L2.8",
                 {{"k", 1}, {"m", 1}, {"d", 1}},
                 [](const BoundParams& p) {
                   const BigInt b = std::max(big(p, "m"), big(p, "k"));
                   return half_power_log(big(p, "k")) + schmidt_log(b, big(p, "d"));
                 },
                 [](const BoundParams& p) {
                   const BigInt b = std::max(big(p, "m"), big(p, "k"));
                   return half_power_exact(big(p, "k")) * schmidt_exact(b, big(p, "d"));
                 }});
    f.push_back({"T3.1",
                 {{"n", 1}},
                 [](const BoundParams& p) { return simple_log(big(p, "n")); },
                 [](const BoundParams& p) { return simple_exact(big(p, "n")); }});
    f.push_back({"T3.2",
                 {{"D", 1}, {"n", 1}},
                 [](const BoundParams& p) {
                   const BigInt n = big(p, "n");
                   return lg(big(p, "D")) + num(8 * ipow(n, 6)) * lg(BigInt(8 * n));
                 },
                 [](const BoundParams& p) {
                   const BigInt n = big(p, "n");
                   return Rational(big(p, "D") * ipow(8 * n, as_ulong(8 * ipow(n, 6))));
                 }});
    f.push_back(general_theorem("T3.3"));
    f.push_back({"T3.4",
                 {{"n", 1}, {"m", 1}, {"d", 1}},
                 [](const BoundParams& p) {
                   const BigInt b = std::max(big(p, "m"), big(p, "n"));
                   return half_power_log(big(p, "n")) + schmidt_log(b, big(p, "d"));
                 },
                 [](const BoundParams& p) {
                   const BigInt b = std::max(big(p, "m"), big(p, "n"));
                   return half_power_exact(big(p, "n")) * schmidt_exact(b, big(p, "d"));
                 }});
    f.push_back(general_theorem("T3.5"));
    f.push_back(general_theorem("T3.6"));
    f.push_back(general_theorem("T3.7"));
    return f;
  }();
  return formulas;
}

const Formula& lookup(const std::string& id) {
  for (const auto& f : catalogue())
    if (f.id == id) return f;
  throw DomainError("unknown bound formula '" + id + "'");
}

Interval ln10() { return Interval::exact(10L, kPrec).log(); }

}  // namespace

double BoundValue::log10() const {
  return (log_value / ln10()).mid_double();
}

std::string BoundValue::log10_text(int digits) const {
  return (log_value / ln10()).hi().to_string(digits);
}

const std::vector<std::string>& formula_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& f : catalogue()) out.push_back(f.id);
    return out;
  }();
  return ids;
}

std::vector<std::string> formula_params(const std::string& formula_id) {
  std::vector<std::string> out;
  for (const auto& [name, least] : lookup(formula_id).params) out.push_back(name);
  return out;
}

BoundValue evaluate_bound(const std::string& formula_id, const BoundParams& params) {
  const Formula& f = lookup(formula_id);
  BoundParams used;
  for (const auto& [name, least] : f.params) {
    const auto it = params.find(name);
    if (it == params.end()) throw DomainError("formula " + formula_id + ": missing parameter '" + name + "'");
    if (it->second < least)
      throw DomainError("formula " + formula_id + ": parameter '" + name + "' must be at least " +
                        std::to_string(least));
    used.emplace(name, it->second);
  }
  for (const auto& [name, value] : params)
    if (!used.contains(name)) throw DomainError("formula " + formula_id + ": unknown parameter '" + name + "'");

  BoundValue out{formula_id, used, f.log(used), std::nullopt, std::nullopt};
  if (f.nested) out.log_log = num(70 * big(used, "m"));
  if (f.exact) {
    const Interval bits = out.log_value / Interval::exact(2L, kPrec).log();
    if (bits.hi_double() <= kExactBitLimit) {
      const Rational value = f.exact(used);
      if (value.get_den() == 1) out.exact = value.get_num();
    }
  }
  return out;
}

bool compare_count(const BigInt& count, const BoundValue& bound) {
  if (count <= 0) return true;
  if (bound.exact) return count < *bound.exact;
  const Interval log_count = Interval::exact(count, kPrec).log();
  if (bound.log_log && count >= 3) return log_count.log().certainly_less(*bound.log_log);
  return log_count.certainly_less(bound.log_value);
}

}  // namespace orbitlab
