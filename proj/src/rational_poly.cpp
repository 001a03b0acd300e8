#include "orbitlab/rational_poly.hpp"

#include <sstream>

#include "orbitlab/errors.hpp"

namespace orbitlab {

RatPoly::RatPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

RatPoly::RatPoly(std::initializer_list<long> coeffs) {
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

RatPoly RatPoly::constant(const Rational& c) { return RatPoly(std::vector<Rational>{c}); }

RatPoly RatPoly::monomial(const Rational& c, std::size_t k) {
  std::vector<Rational> v(k + 1, 0);
  v[k] = c;
  return RatPoly(std::move(v));
}

void RatPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RatPoly::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

const Rational& RatPoly::leading() const {
  if (coeffs_.empty()) throw DomainError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rational RatPoly::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RatPoly RatPoly::derivative() const {
  std::vector<Rational> d;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d.push_back(coeffs_[k] * static_cast<long>(k));
  return RatPoly(std::move(d));
}

RatPoly RatPoly::monic() const {
  if (is_zero()) return *this;
  Rational inv = 1 / leading();
  return inv * *this;
}

RatPoly RatPoly::primitive() const {
  if (is_zero()) return *this;
  BigInt den_lcm = 1;
  for (const auto& c : coeffs_) den_lcm = lcm(den_lcm, c.get_den());
  BigInt content = 0;
  std::vector<Rational> scaled;
  for (const auto& c : coeffs_) {
    Rational s = c * den_lcm;
    content = gcd(content, s.get_num());
    scaled.push_back(s);
  }
  if (leading() < 0) content = -content;
  for (auto& c : scaled) c /= content;
  return RatPoly(std::move(scaled));
}

RatPoly RatPoly::scale_argument(const Rational& c) const {
  std::vector<Rational> out(coeffs_.size());
  Rational power = 1;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    out[k] = coeffs_[k] * power;
    power *= c;
  }
  return RatPoly(std::move(out));
}

RatPoly RatPoly::operator-() const {
  std::vector<Rational> out(coeffs_);
  for (auto& c : out) c = -c;
  return RatPoly(std::move(out));
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) out[k] += a.coeffs_[k];
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) out[k] += b.coeffs_[k];
  return RatPoly(std::move(out));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) { return a + (-b); }

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return RatPoly(std::move(out));
}

RatPoly operator*(const Rational& c, const RatPoly& a) {
  std::vector<Rational> out(a.coeffs_);
  for (auto& x : out) x *= c;
  return RatPoly(std::move(out));
}

std::string RatPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    bool unit = mag == 1 && k > 0;
    if (!unit) os << mag.get_str();
    if (k > 0) {
      if (!unit) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw DivisionByZero();
  std::vector<Rational> rem = a.coeffs();
  const long db = b.degree();
  if (a.degree() < db) return {RatPoly{}, a};
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1), 0);
  const Rational inv_lead = 1 / b.leading();
  for (long k = a.degree(); k >= db; --k) {
    Rational c = rem[static_cast<std::size_t>(k)] * inv_lead;
    if (c == 0) continue;
    quot[static_cast<std::size_t>(k - db)] = c;
    for (long j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
  }
  return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

bool divides(const RatPoly& d, const RatPoly& a) { return divmod(a, d).second.is_zero(); }

RatPoly gcd(const RatPoly& a, const RatPoly& b) {
  RatPoly x = a, y = b;
  while (!y.is_zero()) {
    RatPoly r = divmod(x, y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

RatPoly squarefree_part(const RatPoly& f) {
  if (f.degree() <= 0) return RatPoly::constant(1);
  RatPoly g = gcd(f, f.derivative());
  return divmod(f, g).first.monic();
}

std::vector<RatPoly> squarefree_decomposition(const RatPoly& f) {
  std::vector<RatPoly> out;
  if (f.degree() <= 0) return out;
  RatPoly fm = f.monic();
  RatPoly a = gcd(fm, fm.derivative());
  RatPoly b = divmod(fm, a).first;
  RatPoly c = divmod(fm.derivative(), a).first;
  RatPoly d = c - b.derivative();
  while (b.degree() > 0) {
    RatPoly ai = gcd(b, d);
    out.push_back(ai);
    b = divmod(b, ai).first;
    c = divmod(d, ai).first;
    d = c - b.derivative();
  }
  while (!out.empty() && out.back().degree() == 0) out.pop_back();
  return out;
}

Rational determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t row = col + 1; row < n; ++row) {
      if (m[row][col] == 0) continue;
      Rational factor = m[row][col] / m[col][col];
      for (std::size_t j = col; j < n; ++j) m[row][j] -= factor * m[col][j];
    }
  }
  return det;
}

Rational resultant(const RatPoly& f, const RatPoly& g) {
  if (f.is_zero() || g.is_zero()) throw DomainError("resultant with the zero polynomial");
  const auto df = static_cast<std::size_t>(f.degree());
  const auto dg = static_cast<std::size_t>(g.degree());
  if (df == 0) return pow(f.leading(), static_cast<long>(dg));
  if (dg == 0) return pow(g.leading(), static_cast<long>(df));
  const std::size_t n = df + dg;
  std::vector<std::vector<Rational>> s(n, std::vector<Rational>(n, 0));
  // Rows hold coefficients from the leading one down.
  for (std::size_t i = 0; i < dg; ++i)
    for (std::size_t k = 0; k <= df; ++k) s[i][i + k] = f.coeff(df - k);
  for (std::size_t i = 0; i < df; ++i)
    for (std::size_t k = 0; k <= dg; ++k) s[dg + i][i + k] = g.coeff(dg - k);
  return determinant(std::move(s));
}

RatPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  if (xs.size() != ys.size()) throw DomainError("interpolation needs matching point lists");
  // Newton divided differences.
  const std::size_t n = xs.size();
  std::vector<Rational> dd(ys);
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i) {
      Rational den = xs[i] - xs[i - level];
      if (den == 0) throw DomainError("interpolation abscissae must be distinct");
      dd[i] = (dd[i] - dd[i - 1]) / den;
    }
  RatPoly result;
  for (std::size_t i = n; i-- > 0;) {
    result = result * RatPoly(std::vector<Rational>{-xs[i], 1}) + RatPoly::constant(dd[i]);
  }
  return result;
}

}  // namespace orbitlab
