#include "orbitlab/unit_equations.hpp"

#include <algorithm>
#include <numeric>

#include "orbitlab/errors.hpp"
#include "orbitlab/parallel.hpp"

namespace orbitlab {

namespace {

Tuple normalized(const Tuple& x) {
  Tuple out;
  for (const auto& v : x) out.push_back(v / x.front());
  return out;
}

/// The tuple restricted to each block, each normalized by its first entry.
std::vector<Tuple> blockwise(const Tuple& x, const SetPartition& p) {
  std::vector<Tuple> out;
  for (const auto& b : p.blocks) {
    Tuple part;
    for (auto i : b) part.push_back(x[i] / x[b.front()]);
    out.push_back(std::move(part));
  }
  return out;
}

bool solves(const std::vector<CyclotomicNumber>& a, const Tuple& x, const SetPartition& p) {
  for (const auto& b : p.blocks) {
    std::uint64_t mask = 0;
    for (auto i : b) mask |= std::uint64_t{1} << i;
    if (!subsum(a, x, mask).is_zero()) return false;
  }
  return true;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  }
  void unite(std::size_t i, std::size_t j) {
    i = find(i);
    j = find(j);
    if (i != j) parent[std::max(i, j)] = std::min(i, j);
  }
};

BoundCheck check(const std::string& formula, std::size_t k, std::size_t r, std::size_t count) {
  BoundValue b = evaluate_bound(formula, {{"k", static_cast<long>(k)}, {"r", static_cast<long>(r)}});
  const BigInt c(static_cast<unsigned long>(count));
  const bool ok = compare_count(c, b);
  return {formula, std::move(b), c, ok};
}

}  // namespace

SubgroupGamma::SubgroupGamma(std::vector<Tuple> generators) : gens_(std::move(generators)) {
  if (gens_.empty()) throw DomainError("Gamma needs at least one generator");
  k_ = gens_.front().size();
  if (k_ == 0) throw DomainError("generators must be nonempty tuples");
  for (const auto& g : gens_)
    if (g.size() != k_) throw DomainError("generators must all have the same arity");
  rank_ = gens_.size() - multiplicative_relations_stacked(gens_).basis.size();
}

Tuple SubgroupGamma::element(const std::vector<long>& e) const {
  Tuple x(k_);
  for (std::size_t t = 0; t < gens_.size(); ++t) {
    if (e[t] == 0) continue;
    for (std::size_t i = 0; i < k_; ++i) x[i] = x[i] * gens_[t][i].pow(e[t]);
  }
  return x;
}

CyclotomicNumber subsum(const std::vector<CyclotomicNumber>& a, const Tuple& x, std::uint64_t mask) {
  CyclotomicNumber s;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (mask >> i & 1) s += a[i] * x[i].to_cyclotomic();
  return s;
}

std::vector<UnitSolution> enumerate_solutions(const std::vector<CyclotomicNumber>& a, const SubgroupGamma& gamma,
                                              long box, const UnitConfig& cfg) {
  const std::size_t k = a.size();
  if (k != gamma.arity()) throw DomainError("coefficient count must equal the arity of Gamma");
  if (k < 2) throw DomainError("unit equation needs k >= 2");
  if (k > cfg.max_arity) throw ConfigError("k exceeds the configured maximum arity");
  for (const auto& c : a)
    if (c.is_zero()) throw DomainError("coefficients a_i must be nonzero");
  if (box < 0) throw DomainError("box radius B must be >= 0");
  const std::size_t r = gamma.generators().size();
  const std::uint64_t side = static_cast<std::uint64_t>(box) * 2 + 1;
  // k^r (2B+1)^r, checked step by step against overflow.
  std::uint64_t points = 1;
  double work = 1;
  for (std::size_t t = 0; t < r; ++t) {
    work *= static_cast<double>(k) * static_cast<double>(side);
    if (work > static_cast<double>(cfg.budget)) throw ResourceError("enumeration budget exceeded");
    points *= side;
  }

  // The first coordinate steps innermost; chunks follow the outer coordinates.
  const std::uint64_t inner = side;
  const std::uint64_t chunks = points / inner;
  std::vector<std::vector<UnitSolution>> found(chunks);
  const std::uint64_t full = (std::uint64_t{1} << k) - 1;
  parallel_for(
      chunks,
      [&](std::size_t c) {
        std::vector<long> e(r);
        std::uint64_t idx = c;
        for (std::size_t t = 1; t < r; ++t) {
          e[t] = static_cast<long>(idx % side) - box;
          idx /= side;
        }
        for (std::uint64_t j = 0; j < inner; ++j) {
          e[0] = static_cast<long>(j) - box;
          Tuple x = gamma.element(e);
          if (!subsum(a, x, full).is_zero()) continue;
          bool nondegenerate = true;
          for (std::uint64_t mask = 1; mask < full && nondegenerate; ++mask)
            if (subsum(a, x, mask).is_zero()) nondegenerate = false;
          found[c].push_back({e, std::move(x), nondegenerate});
        }
      },
      cfg.threads);
  std::vector<UnitSolution> out;
  for (auto& f : found)
    for (auto& s : f) out.push_back(std::move(s));
  // Lexicographic in e, last generator most significant.
  std::sort(out.begin(), out.end(), [](const UnitSolution& x, const UnitSolution& y) {
    return std::lexicographical_compare(x.exponents.rbegin(), x.exponents.rend(), y.exponents.rbegin(),
                                        y.exponents.rend());
  });
  return out;
}

std::vector<ProportionalityClass> proportionality_classes(const std::vector<UnitSolution>& solutions) {
  std::vector<ProportionalityClass> out;
  std::map<Tuple, std::size_t> index;
  for (std::size_t i = 0; i < solutions.size(); ++i) {
    Tuple rep = normalized(solutions[i].x);
    auto [it, fresh] = index.try_emplace(rep, out.size());
    if (fresh) out.push_back({std::move(rep), {}});
    out[it->second].members.push_back(i);
  }
  return out;
}

std::size_t WeakProportionalityReport::per_partition_total() const {
  std::size_t total = 0;
  for (const auto& p : per_partition) total += p.classes;
  return total;
}

WeakProportionalityReport weak_proportionality_classes(const std::vector<UnitSolution>& solutions,
                                                       const std::vector<CyclotomicNumber>& a) {
  WeakProportionalityReport report;
  if (solutions.empty()) return report;
  const auto partitions = suitable_partitions(a.size());
  std::vector<std::vector<bool>> solves_p(solutions.size(), std::vector<bool>(partitions.size()));
  report.solved.resize(solutions.size());
  for (std::size_t i = 0; i < solutions.size(); ++i)
    for (std::size_t p = 0; p < partitions.size(); ++p)
      if (solves(a, solutions[i].x, partitions[p])) {
        solves_p[i][p] = true;
        report.solved[i].push_back(partitions[p]);
      }

  UnionFind closure(solutions.size());
  for (std::size_t p = 0; p < partitions.size(); ++p) {
    std::map<std::vector<Tuple>, std::size_t> first;
    std::map<std::vector<Tuple>, std::size_t> restricted;
    PartitionClasses entry{partitions[p], {}, 0};
    for (std::size_t i = 0; i < solutions.size(); ++i) {
      if (!solves_p[i][p]) continue;
      const auto key = blockwise(solutions[i].x, partitions[p]);
      auto [it, fresh] = first.try_emplace(key, i);
      if (!fresh) closure.unite(it->second, i);
      bool refined = false;
      for (std::size_t q = 0; q < partitions.size() && !refined; ++q)
        refined = q != p && solves_p[i][q] && partitions[q].refines(partitions[p]);
      if (refined) continue;
      entry.members.push_back(i);
      restricted.try_emplace(key, i);
    }
    entry.classes = restricted.size();
    if (!entry.members.empty()) report.per_partition.push_back(std::move(entry));
  }

  std::map<std::size_t, std::size_t> slot;
  for (std::size_t i = 0; i < solutions.size(); ++i) {
    auto [it, fresh] = slot.try_emplace(closure.find(i), report.closure_classes.size());
    if (fresh) report.closure_classes.emplace_back();
    report.closure_classes[it->second].push_back(i);
  }
  return report;
}

UnitCounts unit_counts(const std::vector<UnitSolution>& solutions, const std::vector<ProportionalityClass>& classes,
                       const WeakProportionalityReport& weak) {
  UnitCounts c;
  for (const auto& cl : classes)
    if (solutions[cl.members.front()].nondegenerate) ++c.nondegenerate_classes;
  c.weak_closure_classes = weak.closure_classes.size();
  c.weak_per_partition = weak.per_partition_total();
  return c;
}

std::vector<BoundCheck> compare_with_bounds(const UnitCounts& counts, std::size_t k, std::size_t r) {
  std::vector<BoundCheck> out;
  out.push_back(check("L2.6", k, r, counts.nondegenerate_classes));
  out.push_back(check("C2.7", k, r, counts.weak_closure_classes));
  out.back().label = "C2.7 (transitive closure)";
  out.push_back(check("C2.7", k, r, counts.weak_per_partition));
  out.back().label = "C2.7 (per partition)";
  return out;
}

}  // namespace orbitlab
