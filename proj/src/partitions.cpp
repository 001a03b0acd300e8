#include "orbitlab/partitions.hpp"

#include <algorithm>

#include "orbitlab/errors.hpp"

namespace orbitlab {

std::size_t SetPartition::arity() const {
  std::size_t k = 0;
  for (const auto& b : blocks) k += b.size();
  return k;
}

bool SetPartition::suitable() const {
  return std::all_of(blocks.begin(), blocks.end(), [](const auto& b) { return b.size() >= 2; });
}

bool SetPartition::refines(const SetPartition& coarser) const {
  for (const auto& b : blocks) {
    bool inside = false;
    for (const auto& c : coarser.blocks)
      if (std::includes(c.begin(), c.end(), b.begin(), b.end())) inside = true;
    if (!inside) return false;
  }
  return true;
}

std::string to_string(const SetPartition& p) {
  std::string out = "{";
  for (std::size_t i = 0; i < p.blocks.size(); ++i) {
    if (i) out += "|";
    for (std::size_t j = 0; j < p.blocks[i].size(); ++j) {
      if (j && p.arity() > 9) out += ",";
      out += std::to_string(p.blocks[i][j] + 1);
    }
  }
  return out + "}";
}

std::vector<SetPartition> set_partitions(std::size_t k) {
  std::vector<SetPartition> out;
  if (k == 0) {
    out.push_back({});
    return out;
  }
  // a[i] is the block of element i; a[i] <= 1 + max(a[0..i-1]).
  std::vector<std::size_t> a(k, 0);
  std::vector<std::size_t> top(k, 0);
  for (;;) {
    SetPartition p;
    for (std::size_t i = 0; i < k; ++i) {
      if (a[i] == p.blocks.size()) p.blocks.emplace_back();
      p.blocks[a[i]].push_back(i);
    }
    out.push_back(std::move(p));
    std::size_t i = k - 1;
    while (i > 0 && a[i] == top[i - 1] + 1) --i;
    if (i == 0) break;
    ++a[i];
    top[i] = std::max(top[i - 1], a[i]);
    for (std::size_t j = i + 1; j < k; ++j) {
      a[j] = 0;
      top[j] = top[i];
    }
  }
  return out;
}

std::vector<SetPartition> suitable_partitions(std::size_t k) {
  if (k < 2) throw DomainError("suitable partitions need k >= 2");
  std::vector<SetPartition> out;
  for (auto& p : set_partitions(k))
    if (p.suitable()) out.push_back(std::move(p));
  return out;
}

BigInt bell_number(std::size_t k) {
  // Bell triangle.
  std::vector<BigInt> row{BigInt(1)};
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<BigInt> next{row.back()};
    for (const auto& x : row) next.push_back(next.back() + x);
    row = std::move(next);
  }
  return row.front();
}

}  // namespace orbitlab
