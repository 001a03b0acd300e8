#include "orbitlab/exppoly.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "orbitlab/errors.hpp"

namespace orbitlab {

namespace {

std::vector<CyclotomicNumber> trimmed(std::vector<CyclotomicNumber> p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  return p;
}

CyclotomicNumber poly_at(const std::vector<CyclotomicNumber>& p, std::uint64_t n) {
  CyclotomicNumber acc;
  const Rational x(BigInt(std::to_string(n)));
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc.scaled(x) + *it;
  return acc;
}

BoundCheck check(const std::string& formula, const BoundParams& params, const BigInt& count) {
  BoundValue b = evaluate_bound(formula, params);
  const bool ok = compare_count(count, b);
  return {formula, std::move(b), count, ok};
}

/// Some alpha_i0 whose ratio to every other alpha is not a root of unity.
bool has_isolated_base(const std::vector<MonomialScalar>& alphas) {
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    bool ok = true;
    for (std::size_t j = 0; j < alphas.size() && ok; ++j)
      if (i != j && ratio_order(alphas[i], alphas[j])) ok = false;
    if (ok) return true;
  }
  return false;
}

/// Scan plus progression certification; bounds are left to the caller.
ZeroSetReport scan(const ExponentialPolynomial& f, std::uint64_t n_max) {
  ZeroSetReport report;
  report.n_max = n_max;
  report.order = static_cast<std::size_t>(f.recurrence_order());
  report.degeneracy = group_order_D(f.alphas());
  report.simple = f.constant_coefficients();
  report.nondegenerate = report.degeneracy == 1;
  const std::uint64_t d = report.degeneracy;
  std::set<std::uint64_t> zero_classes;
  for (std::uint64_t b = 0; b < d; ++b) {
    bool zero = true;
    for (std::uint64_t t = 0; t < report.order && zero; ++t) zero = f.evaluate(b + t * d).is_zero();
    if (zero) {
      report.progressions.push_back({b, d});
      zero_classes.insert(b);
    }
  }
  for (std::uint64_t n = 0; n <= n_max; ++n)
    if (!zero_classes.contains(n % d) && f.evaluate(n).is_zero()) report.isolated.push_back(n);
  return report;
}

}  // namespace

ExponentialPolynomial::ExponentialPolynomial(std::vector<ExpTerm> terms) : terms_(std::move(terms)) {
  if (terms_.empty()) throw DomainError("exponential polynomial needs at least one term");
  for (auto& t : terms_) {
    t.poly = trimmed(std::move(t.poly));
    if (t.poly.empty()) throw DomainError("polynomial coefficients f_i must be nonzero");
  }
  for (std::size_t i = 0; i < terms_.size(); ++i)
    for (std::size_t j = i + 1; j < terms_.size(); ++j)
      if (terms_[i].alpha == terms_[j].alpha) throw DomainError("bases alpha_i must be distinct");
}

long ExponentialPolynomial::max_multiplicity() const {
  std::size_t a = 0;
  for (const auto& t : terms_) a = std::max(a, t.poly.size());
  return static_cast<long>(a);
}

long ExponentialPolynomial::recurrence_order() const {
  std::size_t m = 0;
  for (const auto& t : terms_) m += t.poly.size();
  return static_cast<long>(m);
}

bool ExponentialPolynomial::constant_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const ExpTerm& t) { return t.poly.size() == 1; });
}

std::vector<MonomialScalar> ExponentialPolynomial::alphas() const {
  std::vector<MonomialScalar> out;
  for (const auto& t : terms_) out.push_back(t.alpha);
  return out;
}

CyclotomicNumber ExponentialPolynomial::evaluate(std::uint64_t n) const {
  if (n > static_cast<std::uint64_t>(std::numeric_limits<long>::max())) throw ResourceError("step too large");
  CyclotomicNumber sum;
  for (const auto& t : terms_) {
    const CyclotomicNumber c = poly_at(t.poly, n);
    if (c.is_zero()) continue;
    sum += c * t.alpha.pow(static_cast<long>(n)).to_cyclotomic();
  }
  return sum;
}

ZeroSetReport exppoly_zero_scan(const ExponentialPolynomial& f, std::uint64_t n_max) {
  ZeroSetReport report = scan(f, n_max);
  const long k = static_cast<long>(f.term_count());
  const long a = f.max_multiplicity();
  const long m = f.recurrence_order();
  const BigInt zeros(static_cast<unsigned long>(report.all_zeros().size()));
  const BigInt pieces(static_cast<unsigned long>(report.progressions.size() + report.isolated.size()));
  if (report.simple)
    report.bounds.push_back(check("L2.1-simple", {{"m", m}}, pieces));
  else
    report.bounds.push_back(check("L2.1-general", {{"m", m}}, pieces));
  if (report.nondegenerate) {
    report.bounds.push_back(check("L2.2-poly", {{"k", k}, {"a", a}}, zeros));
    if (report.simple) report.bounds.push_back(check("L2.2-simple", {{"m", m}}, zeros));
  }
  if (has_isolated_base(f.alphas()))
    report.bounds.push_back(
        check("L2.3", {{"D", static_cast<long>(report.degeneracy)}, {"k", k}, {"a", a}}, zeros));
  return report;
}

ZeroSetReport value_set(const ExponentialPolynomial& f, const CyclotomicNumber& mu, std::uint64_t n_max) {
  if (mu.is_zero()) throw DomainError("mu = 0: use the zero-set scan instead");
  // Append (-mu) * 1^z, merging into an existing base 1.
  std::vector<ExpTerm> terms = f.terms();
  bool merged = false;
  for (auto it = terms.begin(); it != terms.end(); ++it) {
    if (!it->alpha.is_one()) continue;
    it->poly[0] += -mu;
    if (trimmed(it->poly).empty()) terms.erase(it);
    merged = true;
    break;
  }
  if (!merged) terms.push_back({{-mu}, MonomialScalar()});

  ZeroSetReport report;
  if (terms.empty()) {
    // F is the constant mu: every n is a solution.
    report.n_max = n_max;
    report.progressions.push_back({0, 1});
    report.simple = true;
  } else {
    report = scan(ExponentialPolynomial(std::move(terms)), n_max);
  }

  const long k = static_cast<long>(f.term_count());
  const long a = f.max_multiplicity();
  const BigInt solutions(static_cast<unsigned long>(report.all_zeros().size()));
  std::vector<MonomialScalar> extended = f.alphas();
  extended.push_back(MonomialScalar());
  if (has_isolated_base(extended))
    report.bounds.push_back(
        check("C2.4", {{"D", static_cast<long>(group_order_D(extended))}, {"k", k}, {"a", a}}, solutions));
  const auto alphas = f.alphas();
  const bool no_roots = std::none_of(alphas.begin(), alphas.end(), [](const MonomialScalar& x) { return x.is_root_of_unity(); });
  if (group_order_D(alphas) == 1 && no_roots && f.constant_coefficients())
    report.bounds.push_back(check("C2.4-simple", {{"m", f.recurrence_order()}}, solutions));
  return report;
}

}  // namespace orbitlab
