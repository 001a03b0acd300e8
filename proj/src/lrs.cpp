#include "orbitlab/lrs.hpp"

#include <algorithm>
#include <set>

#include "orbitlab/cyclotomic.hpp"
#include "orbitlab/errors.hpp"

namespace orbitlab {

namespace {

std::size_t rank(std::vector<std::vector<Rational>> m) {
  std::size_t r = 0;
  const std::size_t rows = m.size(), cols = rows == 0 ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      const Rational f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

std::vector<Rational> solve(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t n = a.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw DomainError("singular Hankel system");
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      const Rational f = a[i][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
      b[i] -= f * b[c];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
  return b;
}

std::vector<Rational> run_recurrence(const std::vector<Rational>& a, const std::vector<Rational>& init,
                                     std::size_t count) {
  std::vector<Rational> u(init.begin(), init.begin() + static_cast<long>(std::min(count, init.size())));
  const std::size_t m = a.size();
  while (u.size() < count) {
    Rational next = 0;
    const std::size_t n = u.size();
    for (std::size_t j = 1; j <= m; ++j) next += a[j - 1] * u[n - j];
    u.push_back(next);
  }
  return u;
}

/// Recurrence coefficients a_j = -g_{r-j} of a monic polynomial g.
std::vector<Rational> recurrence_of(const RatPoly& g) {
  const RatPoly monic = g.monic();
  const std::size_t r = static_cast<std::size_t>(monic.degree());
  std::vector<Rational> a(r);
  for (std::size_t j = 1; j <= r; ++j) a[j - 1] = -monic.coeff(r - j);
  return a;
}

/// Number of distinct roots and the largest multiplicity.
std::pair<long, long> root_shape(const RatPoly& f) {
  const auto parts = squarefree_decomposition(f);
  long multiplicity = 0;
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (parts[i].degree() > 0) multiplicity = static_cast<long>(i + 1);
  return {squarefree_part(f).degree(), multiplicity};
}

BoundCheck check(const std::string& label, const std::string& formula, const BoundParams& params, const BigInt& count) {
  BoundValue b = evaluate_bound(formula, params);
  const bool ok = compare_count(count, b);
  return {label, std::move(b), count, ok};
}

}  // namespace

LinearRecurrence::LinearRecurrence(std::vector<Rational> coeffs, std::vector<Rational> init)
    : a_(std::move(coeffs)), u_(std::move(init)) {
  if (a_.empty()) throw DomainError("recurrence order must be at least 1");
  if (a_.back() == 0) throw DomainError("trailing recurrence coefficient a_m must be nonzero");
  if (u_.size() != a_.size()) throw DomainError("need exactly m initial terms");
  if (std::all_of(u_.begin(), u_.end(), [](const Rational& x) { return x == 0; }))
    throw DomainError("initial terms must not all be zero");
}

RatPoly LinearRecurrence::characteristic_polynomial() const {
  const std::size_t m = a_.size();
  std::vector<Rational> c(m + 1);
  c[m] = 1;
  for (std::size_t j = 1; j <= m; ++j) c[m - j] = -a_[j - 1];
  return RatPoly(std::move(c));
}

std::vector<Rational> LinearRecurrence::backward_terms(std::size_t count) const {
  const std::size_t m = a_.size();
  std::vector<Rational> window(u_.begin(), u_.end());  // u_{n}, ..., u_{n+m-1}
  std::vector<Rational> out;
  while (out.size() < count) {
    // u_{n+m} = sum_j a_j u_{n+m-j}; shift down by one: solve for u_{n-1}.
    Rational top = window[m - 1];
    for (std::size_t j = 1; j < m; ++j) top -= a_[j - 1] * window[m - 1 - j];
    const Rational prev = top / a_[m - 1];
    out.push_back(prev);
    window.insert(window.begin(), prev);
    window.pop_back();
  }
  return out;
}

std::vector<Rational> lrs_terms(const LinearRecurrence& l, std::size_t count) {
  return run_recurrence(l.coeffs(), l.init(), count);
}

std::size_t minimal_order(const LinearRecurrence& l) {
  const std::size_t m = l.order();
  const auto u = lrs_terms(l, 2 * m - 1);
  std::vector<std::vector<Rational>> h(m, std::vector<Rational>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) h[i][j] = u[i + j];
  return rank(std::move(h));
}

LinearRecurrence minimal_recurrence(const LinearRecurrence& l) {
  const std::size_t r = minimal_order(l);
  if (r == l.order()) return l;
  const auto u = lrs_terms(l, 2 * r);
  // Rows: u_{n+r-1}, ..., u_n  ->  u_{n+r}
  std::vector<std::vector<Rational>> h(r, std::vector<Rational>(r));
  std::vector<Rational> rhs(r);
  for (std::size_t n = 0; n < r; ++n) {
    for (std::size_t j = 1; j <= r; ++j) h[n][j - 1] = u[n + r - j];
    rhs[n] = u[n + r];
  }
  std::vector<Rational> a = solve(std::move(h), std::move(rhs));
  return LinearRecurrence(std::move(a), std::vector<Rational>(u.begin(), u.begin() + static_cast<long>(r)));
}

RatPoly ratio_polynomial(const RatPoly& f) {
  if (f.degree() < 1) throw DomainError("ratio polynomial needs deg f >= 1");
  if (f.coeff(0) == 0) throw DomainError("f(0) = 0: zero is not an admissible root");
  const std::size_t m = static_cast<std::size_t>(f.degree());
  std::vector<Rational> xs, ys;
  for (std::size_t k = 1; k <= m * m + 1; ++k) {
    const Rational x(static_cast<long>(k));
    xs.push_back(x);
    ys.push_back(resultant(f, f.scale_argument(x)));
  }
  return interpolate(xs, ys);
}

std::uint64_t degeneracy_order(const RatPoly& f) {
  if (f.degree() < 1) throw DomainError("degeneracy order needs deg f >= 1");
  if (f.coeff(0) == 0) throw DomainError("f(0) = 0: zero is not an admissible root");
  const RatPoly sf = squarefree_part(f);
  const auto n = static_cast<std::uint64_t>(sf.degree());
  if (n <= 1) return 1;
  RatPoly r = ratio_polynomial(sf);
  const RatPoly x_minus_1{-1, 1};
  while (divides(x_minus_1, r)) r = divmod(r, x_minus_1).first;
  std::uint64_t d = 1;
  const std::uint64_t limit = 2 * n * n * n * n + 2;
  for (std::uint64_t k = 2; k <= limit; ++k) {
    if (euler_phi(k) > n * n) continue;
    if (static_cast<long>(euler_phi(k)) > r.degree()) continue;
    if (divides(cyclotomic_ratpoly(k), r)) d = lcm_u64(d, k);
  }
  return d;
}

RatPoly power_root_polynomial(const RatPoly& f, std::uint64_t d) {
  if (f.degree() < 1) throw DomainError("need deg f >= 1");
  if (d == 0) throw DomainError("power must be positive");
  const std::size_t m = static_cast<std::size_t>(f.degree());
  std::vector<Rational> xs, ys;
  for (std::size_t k = 0; k <= m; ++k) {
    const Rational x(static_cast<long>(k));
    const RatPoly h = RatPoly::constant(x) - RatPoly::monomial(1, d);
    xs.push_back(x);
    ys.push_back(resultant(f, h));
  }
  return interpolate(xs, ys).monic();
}

bool ResidueClass::identically_zero() const {
  return std::all_of(init.begin(), init.end(), [](const Rational& x) { return x == 0; });
}

std::vector<Rational> ResidueClass::terms(std::size_t count) const { return run_recurrence(coeffs, init, count); }

std::vector<ResidueClass> residue_decompose(const LinearRecurrence& l, std::uint64_t d) {
  if (d == 0) throw DomainError("residue modulus D must be at least 1");
  const RatPoly f = l.characteristic_polynomial();
  RatPoly g = power_root_polynomial(f, d);
  // With simple roots the subsequence has constant coefficients, so distinct
  // D-th powers suffice.
  if (squarefree_part(f).degree() == f.degree()) g = squarefree_part(g);
  const std::vector<Rational> a = recurrence_of(g);
  const std::size_t r = a.size();
  const auto u = lrs_terms(l, static_cast<std::size_t>(d) * r);
  std::vector<ResidueClass> out;
  for (std::uint64_t b = 0; b < d; ++b) {
    ResidueClass c{b, d, a, {}};
    for (std::size_t t = 0; t < r; ++t) c.init.push_back(u[b + t * d]);
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<Rational> recompose(const std::vector<ResidueClass>& classes, std::size_t count) {
  std::vector<Rational> out(count);
  for (const auto& c : classes) {
    if (c.offset >= count) continue;
    const std::size_t len = (count - c.offset + c.stride - 1) / c.stride;
    const auto v = c.terms(len);
    for (std::size_t t = 0; t < len; ++t) out[c.offset + t * c.stride] = v[t];
  }
  return out;
}

std::vector<std::uint64_t> ZeroSetReport::all_zeros() const {
  std::set<std::uint64_t> zs(isolated.begin(), isolated.end());
  for (const auto& ap : progressions)
    for (std::uint64_t n = ap.offset; n <= n_max; n += ap.difference) zs.insert(n);
  return {zs.begin(), zs.end()};
}

bool ZeroSetReport::ledger_ok() const {
  return std::all_of(bounds.begin(), bounds.end(), [](const BoundCheck& b) { return b.holds; });
}

ZeroSetReport zero_set(const LinearRecurrence& l, std::uint64_t n_max) {
  const LinearRecurrence minimal = minimal_recurrence(l);
  const RatPoly f = minimal.characteristic_polynomial();
  ZeroSetReport report;
  report.n_max = n_max;
  report.order = minimal.order();
  report.degeneracy = degeneracy_order(f);
  report.simple = squarefree_part(f).degree() == f.degree();
  report.nondegenerate = report.degeneracy == 1;

  const auto classes = residue_decompose(minimal, report.degeneracy);
  std::set<std::uint64_t> zero_classes;
  for (const auto& c : classes) {
    if (!c.identically_zero()) continue;
    report.progressions.push_back({c.offset, c.stride});
    zero_classes.insert(c.offset);
  }
  const auto u = lrs_terms(l, static_cast<std::size_t>(n_max) + 1);
  std::uint64_t zeros = 0;
  for (std::uint64_t n = 0; n <= n_max; ++n) {
    if (u[n] != 0) continue;
    ++zeros;
    if (!zero_classes.contains(n % report.degeneracy)) report.isolated.push_back(n);
  }

  const long m = static_cast<long>(report.order);
  const auto [k, a] = root_shape(f);
  const BigInt pieces(static_cast<unsigned long>(report.progressions.size() + report.isolated.size()));
  if (report.simple)
    report.bounds.push_back(check("L2.1-simple", "L2.1-simple", {{"m", m}}, pieces));
  else
    report.bounds.push_back(check("L2.1-general", "L2.1-general", {{"m", m}}, pieces));
  if (report.nondegenerate) {
    report.bounds.push_back(check("L2.2-poly", "L2.2-poly", {{"k", k}, {"a", a}}, BigInt(zeros)));
    if (report.simple) report.bounds.push_back(check("L2.2-simple", "L2.2-simple", {{"m", m}}, BigInt(zeros)));
  }
  // An index i0 with no root-of-unity ratio exists iff some D-th power of a
  // root of f is attained only once.
  const RatPoly powers = power_root_polynomial(squarefree_part(f), report.degeneracy);
  const auto parts = squarefree_decomposition(powers);
  if (!parts.empty() && parts[0].degree() > 0)
    report.bounds.push_back(check("L2.3", "L2.3",
                                  {{"D", static_cast<long>(report.degeneracy)}, {"k", k}, {"a", a}}, BigInt(zeros)));
  if (f.degree() >= 2)
    report.bounds.push_back(check("Eq2.3-dubickas", "Eq2.3-dubickas", {{"d", 1}, {"m", f.degree()}},
                                  BigInt(static_cast<unsigned long>(report.degeneracy))));
  return report;
}

}  // namespace orbitlab
