#include "orbitlab/scalar_io.hpp"

#include <cctype>

#include "orbitlab/errors.hpp"

namespace orbitlab {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

[[noreturn]] void bad(std::string_view text, const char* what) {
  throw DomainError(std::string("malformed scalar \"") + std::string(text) + "\": " + what);
}

std::uint64_t parse_u64(std::string_view s, std::string_view whole) {
  s = trim(s);
  if (!all_digits(s) || s.size() > 18) bad(whole, "expected a small non-negative integer");
  return std::stoull(std::string(s));
}

std::int64_t parse_i64(std::string_view s, std::string_view whole) {
  s = trim(s);
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  auto v = static_cast<std::int64_t>(parse_u64(s, whole));
  return neg ? -v : v;
}

/// "zeta(N)" or "zeta(N)^a"; returns (N, a).
std::pair<std::uint64_t, std::int64_t> parse_zeta(std::string_view s, std::string_view whole) {
  s = trim(s);
  if (s.substr(0, 5) != "zeta(") bad(whole, "expected zeta(N)");
  const auto close = s.find(')');
  if (close == std::string_view::npos) bad(whole, "unclosed zeta(");
  const std::uint64_t n = parse_u64(s.substr(5, close - 5), whole);
  if (n == 0) bad(whole, "zeta conductor must be positive");
  std::string_view rest = trim(s.substr(close + 1));
  std::int64_t a = 1;
  if (!rest.empty()) {
    if (rest.front() != '^') bad(whole, "expected ^ after zeta(N)");
    a = parse_i64(rest.substr(1), whole);
  }
  return {n, a};
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  std::string_view sign;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    sign = s.substr(0, 1);
    s = trim(s.substr(1));
  }
  const auto slash = s.find('/');
  std::string_view num = trim(s.substr(0, slash));
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : trim(s.substr(slash + 1));
  if (!all_digits(num) || !all_digits(den)) bad(text, "expected p or p/q");
  const BigInt d{std::string(den)};
  if (d == 0) throw DivisionByZero();
  Rational q(BigInt(std::string(num)), d);
  q.canonicalize();
  return sign == "-" ? Rational(-q) : q;
}

MonomialScalar parse_monomial_scalar(std::string_view text) {
  std::string_view s = trim(text);
  const auto star = s.find('*');
  if (star != std::string_view::npos) {
    Rational q = parse_rational(s.substr(0, star));
    auto [n, a] = parse_zeta(s.substr(star + 1), text);
    return MonomialScalar(q, n, a);
  }
  std::string_view body = s;
  bool neg = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    neg = body.front() == '-';
    body = trim(body.substr(1));
  }
  if (body.substr(0, 4) == "zeta") {
    auto [n, a] = parse_zeta(body, text);
    return MonomialScalar(Rational(neg ? -1 : 1), n, a);
  }
  return MonomialScalar(parse_rational(s));
}

CyclotomicNumber parse_cyclotomic(std::string_view text) {
  std::string_view s = trim(text);
  if (s.substr(0, 6) == "cyclo(") {
    const auto close = s.find(')');
    if (close == std::string_view::npos) bad(text, "unclosed cyclo(");
    const std::uint64_t n = parse_u64(s.substr(6, close - 6), text);
    std::string_view rest = trim(s.substr(close + 1));
    if (rest.size() < 2 || rest.front() != '[' || rest.back() != ']') bad(text, "expected [c_0, ...]");
    rest = rest.substr(1, rest.size() - 2);
    std::vector<Rational> coeffs;
    if (!trim(rest).empty()) {
      std::size_t start = 0;
      while (true) {
        const auto comma = rest.find(',', start);
        coeffs.push_back(parse_rational(rest.substr(start, comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
      }
    }
    if (n == 0) bad(text, "conductor must be positive");
    return CyclotomicNumber::from_basis(n, std::move(coeffs));
  }
  if (s.find("zeta") != std::string_view::npos) return parse_monomial_scalar(s).to_cyclotomic();
  return CyclotomicNumber(parse_rational(s));
}

std::string format_rational(const Rational& q) { return q.get_str(); }

std::string format_monomial_scalar(const MonomialScalar& s) {
  if (s.conductor() == 1) return format_rational(s.modulus());
  return format_rational(s.modulus()) + " * zeta(" + std::to_string(s.conductor()) + ")^" +
         std::to_string(s.zeta_exponent());
}

std::string format_cyclotomic(const CyclotomicNumber& x) {
  if (x.conductor() == 1) return format_rational(x.coeffs()[0]);
  std::string out = "cyclo(" + std::to_string(x.conductor()) + ")[";
  for (std::size_t k = 0; k < x.coeffs().size(); ++k) {
    if (k != 0) out += ", ";
    out += format_rational(x.coeffs()[k]);
  }
  return out + "]";
}

}  // namespace orbitlab
