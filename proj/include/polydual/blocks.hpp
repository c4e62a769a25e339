// Imprimitivity block systems and the quotient sggis they induce. Quotients
// of a permutation sggi onto block actions are exactly the generated
// quotient samples the covering-monotonicity tests run over.

#ifndef POLYDUAL_BLOCKS_HPP
#define POLYDUAL_BLOCKS_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "polydual/sggi.hpp"

namespace polydual {

// The finest G-congruence identifying a and b: pair propagation closure.
inline std::vector<int32_t> minimal_block_partition(const std::vector<Perm>& gens, int degree,
                                                    int32_t a, int32_t b) {
  std::vector<int32_t> uf(degree);
  std::iota(uf.begin(), uf.end(), 0);
  auto find = [&](int32_t x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  std::vector<std::pair<int32_t, int32_t>> work{{a, b}};
  while (!work.empty()) {
    auto [x, y] = work.back();
    work.pop_back();
    int32_t rx = find(x), ry = find(y);
    if (rx == ry) continue;
    uf[std::max(rx, ry)] = std::min(rx, ry);
    for (const auto& g : gens) work.emplace_back(g(x), g(y));
  }
  // normalize to block ids in order of first occurrence
  std::vector<int32_t> block(degree, -1);
  int32_t next = 0;
  std::map<int32_t, int32_t> id;
  for (int32_t p = 0; p < degree; ++p) {
    auto [it, fresh] = id.try_emplace(find(p), next);
    if (fresh) ++next;
    block[p] = it->second;
  }
  return block;
}

// All distinct minimal block systems (trivial ones excluded).
inline std::vector<std::vector<int32_t>> minimal_block_systems(const Sggi& P) {
  std::set<std::vector<int32_t>> seen;
  std::vector<std::vector<int32_t>> out;
  for (int32_t b = 1; b < P.degree(); ++b) {
    std::vector<int32_t> part = minimal_block_partition(P.gens(), P.degree(), 0, b);
    int32_t blocks = *std::max_element(part.begin(), part.end()) + 1;
    if (blocks <= 1 || blocks == P.degree()) continue;
    if (seen.insert(part).second) out.push_back(std::move(part));
  }
  return out;
}

// The action on blocks as an sggi; empty when a generator collapses to the
// identity (the quotient is then not a string group generated by involutions).
inline std::optional<Sggi> quotient_by_blocks(const Sggi& P, const std::vector<int32_t>& block) {
  int32_t nblocks = *std::max_element(block.begin(), block.end()) + 1;
  std::vector<Perm> gens;
  for (const auto& g : P.gens()) {
    std::vector<int32_t> img(nblocks, -1);
    for (int32_t p = 0; p < P.degree(); ++p) {
      int32_t from = block[p], to = block[g(p)];
      if (img[from] >= 0 && img[from] != to) return std::nullopt;  // not a congruence
      img[from] = to;
    }
    Perm q = Perm::from_images(std::move(img));
    if (q.is_identity()) return std::nullopt;
    gens.push_back(std::move(q));
  }
  return check_string(gens, P.element_cap());
}

}  // namespace polydual

#endif
