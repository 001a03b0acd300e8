#include "orbitlab/intersection.hpp"

#include <algorithm>
#include <cmath>

#include "orbitlab/errors.hpp"
#include "orbitlab/modular.hpp"
#include "orbitlab/numeric.hpp"
#include "orbitlab/parallel.hpp"

namespace orbitlab {

std::string to_string(ScanMode mode) {
  switch (mode) {
    case ScanMode::exact:
      return "exact";
    case ScanMode::modular:
      return "modular";
    case ScanMode::hybrid:
      return "hybrid";
  }
  return "exact";
}

ScanMode parse_scan_mode(const std::string& text) {
  if (text == "exact") return ScanMode::exact;
  if (text == "modular") return ScanMode::modular;
  if (text == "hybrid") return ScanMode::hybrid;
  throw ConfigError("unknown mode '" + text + "' (expected exact, modular or hybrid)");
}

std::string to_string(MemberTag tag) { return tag == MemberTag::exact ? "exact" : "modular-only"; }

std::vector<std::uint64_t> IntersectionReport::member_steps() const {
  std::vector<std::uint64_t> out;
  for (const auto& m : members) out.push_back(m.n);
  return out;
}

namespace {

void check_shapes(const MonomialMap& map, const Hypersurface& g, const Point& w) {
  if (w.size() != map.dimension()) throw DomainError("point dimension does not match the map");
  if (g.dimension() != map.dimension()) throw DomainError("hypersurface dimension does not match the map");
}

double term_bits(const Point& w, const IntVector& e) {
  double bits = 0;
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (e[j] == 0) continue;
    const double size = static_cast<double>(bit_length(w[j].modulus().get_num()) + bit_length(w[j].modulus().get_den()));
    bits += std::fabs(e[j].get_d()) * size;
  }
  return bits;
}

/// Exact evaluation state shared across steps: the factored base point.
class ExactEvaluator {
 public:
  ExactEvaluator(const Hypersurface& g, const Point& w, const DecisionConfig& cfg) : g_(g), cfg_(cfg) {
    for (const auto& x : w) factored_.emplace_back(x, cfg.factor);
  }

  ZeroVerdict verdict(const IntMatrix& power) const {
    std::vector<FactoredTerm> terms;
    for (const auto& t : g_.terms()) {
      const IntVector e = orbit_exponents(t.exps, power);
      FactoredScalar v;
      for (std::size_t j = 0; j < e.size(); ++j)
        if (e[j] != 0) v = v * factored_[j].pow(e[j]);
      terms.push_back({t.coeff, std::move(v)});
    }
    return decide_zero(terms, cfg_);
  }

 private:
  const Hypersurface& g_;
  DecisionConfig cfg_;
  std::vector<FactoredScalar> factored_;
};

/// Residues of everything needed to evaluate G on the orbit modulo one prime.
class ModularEvaluator {
 public:
  ModularEvaluator(const MonomialMap& map, const Hypersurface& g, const Point& w, std::uint64_t conductor,
                   std::uint64_t p)
      : p_(p), n_(conductor) {
    if (!is_prime_u64(p) || (p - 1) % conductor != 0)
      throw ConfigError("unsuitable modular prime " + std::to_string(p) + ": must be a prime = 1 mod " +
                        std::to_string(conductor));
    const std::uint64_t y = root_of_unity_mod(p, conductor);
    for (const auto& x : w) {
      const Rational& q = x.modulus();
      if (mod_u64(q.get_num(), p) == 0 || mod_u64(q.get_den(), p) == 0)
        throw ConfigError("unsuitable modular prime " + std::to_string(p) + ": divides a point coordinate");
      q_.push_back(rational_mod(q, p));
      zeta_.push_back(x.zeta_exponent() * (conductor / x.conductor()));
    }
    for (const auto& t : g.terms()) {
      const CyclotomicNumber& c = t.coeff;
      const std::uint64_t step = conductor / c.conductor();
      std::uint64_t value = 0;
      for (std::size_t k = 0; k < c.coeffs().size(); ++k) {
        if (c.coeffs()[k] == 0) continue;
        if (mod_u64(c.coeffs()[k].get_den(), p) == 0)
          throw ConfigError("unsuitable modular prime " + std::to_string(p) + ": divides a coefficient denominator");
        value = addmod(value, mulmod(rational_mod(c.coeffs()[k], p), powmod(y, (k * step) % conductor, p), p), p);
      }
      coeff_.push_back(value);
      exps_p_.emplace_back();
      exps_n_.emplace_back();
      for (const auto& e : t.exps) {
        exps_p_.back().push_back(mod_u64(e, p - 1));
        exps_n_.back().push_back(mod_u64(e, conductor));
      }
    }
    y_powers_.resize(conductor);
    for (std::uint64_t k = 0; k < conductor; ++k) y_powers_[k] = powmod(y, k, p);
    step_p_ = mod_matrix(map.exponents(), p - 1);
    step_n_ = mod_matrix(map.exponents(), conductor);
  }

  /// Positions the evaluator at S^n.
  void seek(std::uint64_t n) {
    power_p_ = mod_matrix_power(step_p_, n, p_ - 1);
    power_n_ = mod_matrix_power(step_n_, n, n_);
  }
  void advance() {
    power_p_ = mod_multiply(power_p_, step_p_, p_ - 1);
    power_n_ = mod_multiply(power_n_, step_n_, n_);
  }

  std::uint64_t value() const {
    const std::size_t m = q_.size();
    std::uint64_t sum = 0;
    for (std::size_t t = 0; t < coeff_.size(); ++t) {
      std::uint64_t term = coeff_[t];
      std::uint64_t root = 0;
      for (std::size_t j = 0; j < m && term != 0; ++j) {
        std::uint64_t ep = 0, en = 0;
        for (std::size_t i = 0; i < m; ++i) {
          ep = addmod(ep, mulmod(exps_p_[t][i], power_p_[i][j], p_ - 1), p_ - 1);
          en = addmod(en, mulmod(exps_n_[t][i], power_n_[i][j], n_), n_);
        }
        term = mulmod(term, powmod(q_[j], ep, p_), p_);
        root = addmod(root, mulmod(zeta_[j], en, n_), n_);
      }
      sum = addmod(sum, mulmod(term, y_powers_[root], p_), p_);
    }
    return sum;
  }

 private:
  std::uint64_t p_;
  std::uint64_t n_;
  std::vector<std::uint64_t> q_;
  std::vector<std::uint64_t> zeta_;
  std::vector<std::uint64_t> coeff_;
  std::vector<std::vector<std::uint64_t>> exps_p_;
  std::vector<std::vector<std::uint64_t>> exps_n_;
  std::vector<std::uint64_t> y_powers_;
  ModMatrix step_p_, step_n_, power_p_, power_n_;
};

std::vector<std::pair<std::uint64_t, std::uint64_t>> chunks(std::uint64_t n_max, unsigned threads) {
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  const std::uint64_t total = n_max + 1;
  const std::uint64_t pieces = std::min<std::uint64_t>(total, static_cast<std::uint64_t>(threads) * 4);
  const std::uint64_t size = (total + pieces - 1) / pieces;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (std::uint64_t start = 0; start < total; start += size) out.emplace_back(start, std::min(total, start + size));
  return out;
}

}  // namespace

CyclotomicNumber evaluate_exact(const Hypersurface& g, const OrbitPoint& p, double cutoff_bits) {
  if (g.dimension() != p.base.size()) throw DomainError("hypersurface dimension does not match the point");
  CyclotomicNumber sum;
  for (const auto& t : g.terms()) {
    const IntVector e = orbit_exponents(t.exps, p.power);
    if (term_bits(p.base, e) > cutoff_bits)
      throw ResourceError("exact evaluation cutoff exceeded at n = " + std::to_string(p.step) +
                          "; use modular or hybrid mode");
    sum += t.coeff * monomial_value(p.base, e).to_cyclotomic();
  }
  return sum;
}

ZeroVerdict decide_on_orbit(const Hypersurface& g, const MonomialMap& map, const Point& w, std::uint64_t n,
                            const DecisionConfig& cfg) {
  check_shapes(map, g, w);
  return ExactEvaluator(g, w, cfg).verdict(compose_power(map, n));
}

std::uint64_t ambient_conductor(const Hypersurface& g, const Point& w) {
  std::uint64_t n = 1;
  for (const auto& x : w) n = lcm_u64(n, x.conductor());
  for (const auto& t : g.terms()) n = lcm_u64(n, t.coeff.conductor());
  return n;
}

std::vector<std::uint64_t> suitable_primes(const Hypersurface& g, const Point& w, std::size_t count,
                                           std::uint64_t seed) {
  const std::uint64_t conductor = ambient_conductor(g, w);
  std::vector<std::uint64_t> out;
  std::size_t want = count;
  while (out.size() < count) {
    out.clear();
    for (std::uint64_t p : modular_primes(conductor, want, seed)) {
      bool ok = true;
      for (const auto& x : w)
        ok = ok && mod_u64(x.modulus().get_num(), p) != 0 && mod_u64(x.modulus().get_den(), p) != 0;
      for (const auto& t : g.terms())
        for (const auto& c : t.coeff.coeffs()) ok = ok && mod_u64(c.get_den(), p) != 0;
      if (ok && out.size() < count) out.push_back(p);
    }
    ++want;
  }
  return out;
}

ModularVerdict evaluate_modular(const Hypersurface& g, const MonomialMap& map, const Point& w, std::uint64_t n,
                                const std::vector<std::uint64_t>& primes) {
  check_shapes(map, g, w);
  if (primes.empty()) throw ConfigError("modular evaluation needs at least one prime");
  const std::uint64_t conductor = ambient_conductor(g, w);
  for (std::uint64_t p : primes) {
    ModularEvaluator eval(map, g, w, conductor, p);
    eval.seek(n);
    if (eval.value() != 0) return ModularVerdict::nonzero;
  }
  return ModularVerdict::zero_candidate;
}

IntersectionReport intersection_set(const MonomialMap& map, const Hypersurface& g, const Point& w,
                                    std::uint64_t n_max, const ScanConfig& cfg) {
  check_shapes(map, g, w);
  IntersectionReport report;
  report.n_max = n_max;
  report.mode = cfg.mode;
  report.bounds = applicable_bounds(applicable_theorems(map, g, w));

  const auto ranges = chunks(n_max, cfg.threads);
  std::vector<std::vector<Member>> found(ranges.size());

  if (cfg.mode == ScanMode::exact) {
    const ExactEvaluator exact(g, w, cfg.decision);
    parallel_for(
        ranges.size(),
        [&](std::size_t c) {
          auto [start, stop] = ranges[c];
          IntMatrix power = compose_power(map, start);
          for (std::uint64_t n = start; n < stop; ++n) {
            if (n != start) power = multiply(power, map.exponents());
            const ZeroVerdict v = exact.verdict(power);
            if (v == ZeroVerdict::undecided)
              throw ResourceError("exact evaluation cutoff exceeded at n = " + std::to_string(n) +
                                  "; use modular or hybrid mode");
            if (v == ZeroVerdict::zero) found[c].push_back({n, MemberTag::exact});
          }
        },
        cfg.threads);
  } else {
    if (cfg.mode == ScanMode::hybrid && cfg.prime_count < 3) throw ConfigError("hybrid mode needs at least 3 primes");
    if (cfg.prime_count == 0) throw ConfigError("modular mode needs at least one prime");
    report.primes = suitable_primes(g, w, cfg.prime_count, cfg.seed);
    const std::uint64_t conductor = ambient_conductor(g, w);
    std::vector<std::uint64_t> candidates_flat;
    std::vector<std::vector<std::uint64_t>> candidates(ranges.size());
    parallel_for(
        ranges.size(),
        [&](std::size_t c) {
          auto [start, stop] = ranges[c];
          std::vector<ModularEvaluator> evals;
          for (std::uint64_t p : report.primes) {
            evals.emplace_back(map, g, w, conductor, p);
            evals.back().seek(start);
          }
          for (std::uint64_t n = start; n < stop; ++n) {
            if (n != start)
              for (auto& e : evals) e.advance();
            bool zero = true;
            for (const auto& e : evals) {
              if (e.value() != 0) {
                zero = false;
                break;
              }
            }
            if (zero) candidates[c].push_back(n);
          }
        },
        cfg.threads);
    for (const auto& c : candidates) candidates_flat.insert(candidates_flat.end(), c.begin(), c.end());

    std::vector<std::optional<Member>> confirmed(candidates_flat.size());
    if (cfg.mode == ScanMode::modular) {
      for (std::size_t i = 0; i < candidates_flat.size(); ++i) confirmed[i] = Member{candidates_flat[i], MemberTag::modular_only};
    } else {
      const ExactEvaluator exact(g, w, cfg.decision);
      parallel_for(
          candidates_flat.size(),
          [&](std::size_t i) {
            const std::uint64_t n = candidates_flat[i];
            switch (exact.verdict(compose_power(map, n))) {
              case ZeroVerdict::zero:
                confirmed[i] = Member{n, MemberTag::exact};
                break;
              case ZeroVerdict::undecided:
                confirmed[i] = Member{n, MemberTag::modular_only};
                break;
              case ZeroVerdict::nonzero:
                break;
            }
          },
          cfg.threads);
    }
    found.assign(1, {});
    for (const auto& m : confirmed)
      if (m) found[0].push_back(*m);
  }
  for (const auto& f : found) report.members.insert(report.members.end(), f.begin(), f.end());
  std::sort(report.members.begin(), report.members.end(), [](const Member& a, const Member& b) { return a.n < b.n; });
  return report;
}

SyncReport synchronized_intersection(const MonomialMap& f, const MonomialMap& h, const Point& w1, const Point& w2,
                                     std::uint64_t n_max, const ScanConfig& cfg) {
  const std::size_t m = f.dimension();
  if (h.dimension() != m || w1.size() != m || w2.size() != m)
    throw DomainError("synchronized orbits need maps and points of one dimension");
  std::vector<FactoredScalar> a, b;
  for (const auto& x : w1) a.emplace_back(x, cfg.decision.factor);
  for (const auto& x : w2) b.emplace_back(x, cfg.decision.factor);
  auto coordinate = [m](const std::vector<FactoredScalar>& base, const IntMatrix& power, std::size_t i) {
    FactoredScalar v;
    for (std::size_t j = 0; j < m; ++j)
      if (power[i][j] != 0) v = v * base[j].pow(power[i][j]);
    return v;
  };

  SyncReport report;
  report.n_max = n_max;
  const auto ranges = chunks(n_max, cfg.threads);
  std::vector<std::vector<std::uint64_t>> found(ranges.size());
  parallel_for(
      ranges.size(),
      [&](std::size_t c) {
        auto [start, stop] = ranges[c];
        IntMatrix pf = compose_power(f, start), ph = compose_power(h, start);
        for (std::uint64_t n = start; n < stop; ++n) {
          if (n != start) {
            pf = multiply(pf, f.exponents());
            ph = multiply(ph, h.exponents());
          }
          bool equal = true;
          for (std::size_t i = 0; i < m && equal; ++i) equal = coordinate(a, pf, i) == coordinate(b, ph, i);
          if (equal) found[c].push_back(n);
        }
      },
      cfg.threads);
  for (const auto& v : found) report.members.insert(report.members.end(), v.begin(), v.end());

  std::vector<HypersurfaceTerm> terms;
  for (std::size_t i = 0; i < m; ++i) {
    IntVector x(2 * m, 0), y(2 * m, 0);
    x[i] = 1;
    y[m + i] = 1;
    terms.push_back({CyclotomicNumber(1), x});
    terms.push_back({CyclotomicNumber(-1), y});
  }
  Point joint = w1;
  joint.insert(joint.end(), w2.begin(), w2.end());
  report.superset = intersection_set(MonomialMap::product(f, h), Hypersurface(2 * m, std::move(terms)), joint, n_max, cfg);
  return report;
}

namespace {

Interval interval_max(const Interval& a, const Interval& b) {
  const mpfr_prec_t prec = std::max(a.precision(), b.precision());
  MpfrValue lo(prec), hi(prec);
  mpfr_max(lo.get(), a.lo().get(), b.lo().get(), MPFR_RNDD);
  mpfr_max(hi.get(), a.hi().get(), b.hi().get(), MPFR_RNDU);
  return Interval::from_bounds(std::move(lo), std::move(hi));
}

Interval log_modulus(const CyclotomicNumber& a, mpfr_prec_t prec) {
  if (a.is_rational()) return Interval::exact(Rational(abs(a.rational_value())), prec).log();
  return embed_numeric(a, prec).modulus().log();
}

}  // namespace

std::optional<std::uint64_t> dominant_term_threshold(const MonomialMap& map, const Hypersurface& g, const Point& w) {
  check_shapes(map, g, w);
  const auto d = map.power_map_degree();
  if (!d || *d < 2) return std::nullopt;
  const std::size_t m = map.dimension();

  struct Term {
    std::optional<std::size_t> var;
    long e = 0;
    const CyclotomicNumber* a;
  };
  std::vector<Term> terms;
  std::vector<bool> used(m, false);
  for (const auto& t : g.terms()) {
    Term term{std::nullopt, 0, &t.coeff};
    for (std::size_t j = 0; j < m; ++j) {
      if (t.exps[j] == 0) continue;
      if (term.var || used[j] || !t.exps[j].fits_slong_p()) return std::nullopt;
      term.var = j;
      term.e = t.exps[j].get_si();
      used[j] = true;
    }
    terms.push_back(term);
  }

  // j0: the unique variable term whose coordinate has strictly largest modulus.
  std::optional<std::size_t> top;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    if (!terms[k].var) continue;
    if (!top || w[*terms[k].var].modulus() > w[*terms[*top].var].modulus()) top = k;
  }
  if (!top) return std::nullopt;
  const Term& lead = terms[*top];
  Rational rest = 0;  // max |w_j^{e_j}| over the other terms
  bool others = false;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    if (k == *top) continue;
    others = true;
    if (terms[k].var) {
      if (w[*terms[k].var].modulus() >= w[*lead.var].modulus() || terms[k].e > lead.e) return std::nullopt;
      rest = std::max(rest, pow(w[*terms[k].var].modulus(), terms[k].e));
    } else {
      rest = std::max(rest, Rational(1));
    }
  }
  if (!others) return 0;
  const Rational rho = pow(w[*lead.var].modulus(), lead.e) / rest;
  if (rho <= 1) return std::nullopt;
  const long multiplier = static_cast<long>(std::max(m - 1, terms.size() - 1));

  bool rational_coeffs = true;
  for (const auto& t : terms) rational_coeffs = rational_coeffs && t.a->is_rational();

  const unsigned long d_ui = d->get_ui();
  for (std::uint64_t n = 0;; ++n) {
    if (n > 4096) throw ResourceError("dominant-term threshold search did not terminate");
    BigInt dn;
    mpz_ui_pow_ui(dn.get_mpz_t(), d_ui, n);
    std::optional<bool> holds;
    for (mpfr_prec_t prec = 128; prec <= 4096 && !holds; prec *= 2) {
      Interval log_c = Interval::exact(static_cast<long>(multiplier), prec).log() - log_modulus(*lead.a, prec);
      std::optional<Interval> best;
      for (std::size_t k = 0; k < terms.size(); ++k) {
        if (k == *top) continue;
        const Interval l = log_modulus(*terms[k].a, prec);
        best = best ? interval_max(*best, l) : l;
      }
      log_c = log_c + *best;
      const Interval lhs = Interval::exact(dn, prec) * Interval::exact(rho, prec).log();
      if (log_c.certainly_less(lhs)) holds = true;
      else if (lhs.certainly_less(log_c)) holds = false;
    }
    if (!holds && rational_coeffs && dn * (bit_length(rho.get_num()) + bit_length(rho.get_den())) <= 1'000'000) {
      Rational a_max = 0;
      for (std::size_t k = 0; k < terms.size(); ++k)
        if (k != *top) a_max = std::max(a_max, Rational(abs(terms[k].a->rational_value())));
      const Rational c = multiplier * a_max / abs(lead.a->rational_value());
      holds = pow(rho, dn.get_si()) > c;
    }
    if (!holds) throw ResourceError("precision insufficient to certify the dominant-term inequality");
    if (*holds) return n;
  }
}

}  // namespace orbitlab
