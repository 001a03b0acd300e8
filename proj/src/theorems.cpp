#include "orbitlab/theorems.hpp"

#include "orbitlab/errors.hpp"
#include "orbitlab/relations.hpp"

namespace orbitlab {

namespace {

ConditionCheck condition(std::string name, bool holds, std::string detail = {}) {
  return {std::move(name), holds, std::move(detail)};
}

long small(const BigInt& x) {
  if (!x.fits_slong_p()) throw ResourceError("hypersurface exponent too large");
  return x.get_si();
}

ConditionCheck independence(const Point& w) {
  try {
    const auto result = is_multiplicatively_independent(w);
    std::string detail;
    if (result.certificate) {
      detail = "relation (";
      for (std::size_t i = 0; i < result.certificate->size(); ++i)
        detail += (i ? ", " : "") + to_string((*result.certificate)[i]);
      detail += ")";
    }
    return condition("coordinates multiplicatively independent", result.independent, detail);
  } catch (const DomainError& e) {
    return condition("coordinates multiplicatively independent", false, e.what());
  }
}

bool all_zero(const IntVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

/// Variable index of a univariate monomial X_j^e (e >= 1), empty otherwise.
std::optional<std::size_t> single_variable(const IntVector& exps) {
  std::optional<std::size_t> var;
  for (std::size_t j = 0; j < exps.size(); ++j) {
    if (exps[j] == 0) continue;
    if (var) return std::nullopt;
    var = j;
  }
  return var;
}

TheoremCheck finish(std::string id, std::vector<ConditionCheck> conditions, const std::string& formula,
                    const BoundParams& params) {
  TheoremCheck out{std::move(id), true, std::move(conditions), std::nullopt};
  for (const auto& c : out.conditions) out.applies = out.applies && c.holds;
  if (out.applies) out.bound = evaluate_bound(formula, params);
  return out;
}

}  // namespace

std::uint64_t field_degree(const Hypersurface& g, const Point& w) {
  std::uint64_t n = 1;
  for (const auto& x : w) n = lcm_u64(n, x.field_conductor());
  for (const auto& t : g.terms()) {
    std::uint64_t c = t.coeff.minimal_conductor();
    if (c % 4 == 2) c /= 2;
    n = lcm_u64(n, c);
  }
  return euler_phi(n);
}

std::vector<TheoremCheck> applicable_theorems(const MonomialMap& map, const Hypersurface& g, const Point& w) {
  const std::size_t m = map.dimension();
  const IntMatrix& s = map.exponents();
  const long terms = static_cast<long>(g.monomial_count());
  const auto d = map.power_map_degree();
  const bool power_map = d && *d >= 2;
  const ConditionCheck indep = independence(w);
  const auto constant = g.constant_term();
  std::vector<TheoremCheck> out;

  // Common power map, arbitrary G.
  out.push_back(finish("3.1",
                       {condition("map is (X_1^d, ..., X_m^d) with d >= 2", power_map), indep},
                       "T3.1", {{"n", terms}}));

  // Common power map, G = sum_j a_j X_j^{e_j}, root-of-unity structure allowed.
  {
    std::vector<bool> seen(m, false);
    bool shape = true;
    for (const auto& t : g.terms()) {
      if (all_zero(t.exps)) continue;
      const auto var = single_variable(t.exps);
      if (!var || seen[*var]) {
        shape = false;
        break;
      }
      seen[*var] = true;
    }
    if (shape && constant) {
      // A constant is a_j X_j^0 for some coordinate j without another term.
      bool free_slot = false;
      for (bool b : seen) free_slot = free_slot || !b;
      shape = free_slot;
    }
    const std::uint64_t big_d = group_order_D(w);
    std::optional<std::size_t> j0;
    for (const auto& t : g.terms()) {
      const auto var = single_variable(t.exps);
      if (!shape || !var) continue;
      const std::size_t j = *var;
      if (w[j].is_root_of_unity()) continue;
      bool ratios = true;
      for (std::size_t i = 0; i < m; ++i)
        if (i != j && ratio_order(w[i], w[j])) ratios = false;
      if (ratios) {
        j0 = j;
        break;
      }
    }
    out.push_back(finish(
        "3.2",
        {condition("map is (X_1^d, ..., X_m^d) with d >= 2", power_map),
         condition("G has the form sum_j a_j X_j^{e_j}", shape),
         condition("some w_j0 with a_j0 != 0, e_j0 != 0 is not a root of unity and no ratio w_j / w_j0 is",
                   j0.has_value(), j0 ? "j0 = " + std::to_string(*j0 + 1) : std::string()),
         condition("group order D of root-of-unity ratios", true, "D = " + std::to_string(big_d))},
        "T3.2", {{"D", static_cast<long>(big_d)}, {"n", terms}}));
  }

  // Diagonal map with all d_i >= 2.
  {
    bool diag = map.is_diagonal();
    for (std::size_t i = 0; i < m && diag; ++i) diag = s[i][i] >= 2;
    out.push_back(finish("3.3", {condition("map is (X_1^{d_1}, ..., X_m^{d_m}) with all d_i >= 2", diag), indep},
                         "T3.3", {{"n", terms}, {"m", static_cast<long>(m)}}));
  }

  // Diagonal map with some d_l >= 2, G without constant term and with
  // monomials differing in every exponent.
  {
    bool diag = map.is_diagonal();
    bool some_large = false;
    for (std::size_t i = 0; i < m && diag; ++i) some_large = some_large || s[i][i] >= 2;
    bool separated = true;
    const auto& ts = g.terms();
    for (std::size_t a = 0; a < ts.size() && separated; ++a)
      for (std::size_t b = a + 1; b < ts.size() && separated; ++b)
        for (std::size_t t = 0; t < m; ++t)
          if (ts[a].exps[t] == ts[b].exps[t]) separated = false;
    // Hypothesis of the polynomial-exponential count: for each pair of
    // monomials, alpha_a^z = alpha_b^z has only z = 0.
    bool pairwise = separated;
    std::string pair_detail;
    if (separated) {
      try {
        for (std::size_t a = 0; a < ts.size() && pairwise; ++a)
          for (std::size_t b = a + 1; b < ts.size() && pairwise; ++b) {
            std::vector<MonomialScalar> ratio;
            for (std::size_t t = 0; t < m; ++t) ratio.push_back(w[t].pow(small(ts[a].exps[t] - ts[b].exps[t])));
            if (!multiplicative_relations(ratio).trivial()) {
              pairwise = false;
              pair_detail = "monomials " + std::to_string(a + 1) + " and " + std::to_string(b + 1);
            }
          }
      } catch (const Error& e) {
        pairwise = false;
        pair_detail = e.what();
      }
    }
    const std::uint64_t deg = field_degree(g, w);
    out.push_back(finish(
        "3.4",
        {condition("map is (X_1^{d_1}, ..., X_m^{d_m}) with some d_l >= 2", diag && some_large),
         condition("G has zero constant term", !constant),
         condition("any two monomials differ in every exponent", separated), indep,
         condition("{z : alpha_i^z = alpha_j^z} is trivial for all monomial pairs", pairwise, pair_detail),
         condition("field degree", true, "d = " + std::to_string(deg))},
        "T3.4", {{"n", terms}, {"m", static_cast<long>(m)}, {"d", static_cast<long>(deg)}}));
  }

  // (X_1^d, F_2, ..., F_m) with deg F_i < d and s_ii >= 1; G = a X_1^e + lower.
  {
    const bool dims = m >= 2;
    bool first_row = dims && s[0][0] >= 2;
    for (std::size_t j = 1; j < m && first_row; ++j) first_row = s[0][j] == 0;
    bool rows = dims;
    for (std::size_t i = 1; i < m && rows; ++i) rows = s[i][i] >= 1 && map.degree(i) < s[0][0];
    bool lead = false;
    const BigInt deg_g = g.total_degree();
    for (const auto& t : g.terms()) {
      const auto var = single_variable(t.exps);
      if (var && *var == 0 && t.exps[0] == deg_g) lead = true;
    }
    out.push_back(finish("3.5",
                         {condition("m >= 2", dims), condition("F_1 = X_1^d with d >= 2", first_row),
                          condition("deg F_i < d and s_ii >= 1 for i >= 2", rows),
                          condition("G contains a X_1^e with e = deg G >= 1", lead), indep},
                         "T3.5", {{"n", terms}, {"m", static_cast<long>(m)}}));
  }

  // Triangular map with F_m = X_m; one pure X_m^{e_m} monomial in G.
  {
    const bool dims = m >= 2;
    bool triangular = dims;
    for (std::size_t i = 0; i < m && triangular; ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (s[i][j] != 0) triangular = false;
    bool growth = dims;
    for (std::size_t i = 0; i + 1 < m && growth; ++i) {
      bool tail = false;
      for (std::size_t j = i + 1; j < m; ++j) tail = tail || s[i][j] >= 1;
      growth = s[i][i] > 1 || (s[i][i] >= 1 && tail);
    }
    bool last = dims;
    for (std::size_t j = 0; j < m && last; ++j) last = s[m - 1][j] == (j == m - 1 ? 1 : 0);
    int pure_last = 0;
    bool touches_early = false;
    for (const auto& t : g.terms()) {
      const auto var = single_variable(t.exps);
      if (var && *var == m - 1) ++pure_last;
      for (std::size_t j = 0; j + 1 < m; ++j) touches_early = touches_early || t.exps[j] >= 1;
    }
    out.push_back(finish("3.6",
                         {condition("m >= 2", dims), condition("F_i involves only X_i, ..., X_m", triangular),
                          condition("s_i > 1, or s_i >= 1 with some s_ij >= 1 (j > i), for i < m", growth),
                          condition("F_m = X_m", last),
                          condition("G has exactly one monomial c X_m^{e_m} with e_m >= 1", pure_last == 1),
                          condition("G has a monomial divisible by some X_j, j < m", touches_early),
                          condition("G has zero constant term", !constant), indep},
                         "T3.6", {{"n", terms}, {"m", static_cast<long>(m)}}));
  }

  // Every deg F_i >= 2 and G has a nonzero constant term.
  {
    bool degrees = true;
    for (std::size_t i = 0; i < m && degrees; ++i) degrees = map.degree(i) >= 2;
    out.push_back(finish("3.7",
                         {condition("deg F_i >= 2 for every i", degrees),
                          condition("G has a nonzero constant term", constant.has_value()), indep},
                         "T3.7", {{"n", terms}, {"m", static_cast<long>(m)}}));
  }
  return out;
}

std::vector<TheoremBound> applicable_bounds(const std::vector<TheoremCheck>& checks) {
  std::vector<TheoremBound> out;
  for (const auto& c : checks)
    if (c.applies && c.bound) out.push_back({c.theorem, *c.bound});
  return out;
}

}  // namespace orbitlab
