// Deterministic Schreier-Sims stabilizer chain.
//
// The base is the natural point order 0,1,2,...: every generator stored at a
// level fixes all points below that level's base point, so the group acting
// at level l is generated by the generators of levels l and deeper. Levels
// whose orbit would be trivial are not materialized. This base discipline is
// what makes min_coset_rep return the lexicographically least element of a
// coset, which the rest of the library uses as a canonical form.
//
// Transversals are kept as Schreier vectors (parent point + generator index
// into the level's working generator list), so memory stays O(levels *
// degree) and elements are rebuilt by walking the BFS tree. Groups here are
// either tiny-degree with huge order or big-degree regular actions with small
// order; both shapes keep the trees shallow.

#ifndef POLYDUAL_STABCHAIN_HPP
#define POLYDUAL_STABCHAIN_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "polydual/error.hpp"
#include "polydual/perm.hpp"

namespace polydual {

class StabChain {
 public:
  struct Level {
    int32_t base = -1;
    std::vector<Perm> own_gens;    // residues filed at this level
    std::vector<Perm> tree_gens;   // own_gens plus all deeper levels' gens
    std::vector<int32_t> orbit;    // BFS order; orbit[0] == base
    std::vector<int32_t> pos;      // point -> orbit index or -1
    std::vector<std::pair<int32_t, int32_t>> parent;  // (parent point, tree_gens index)
  };

  StabChain() = default;

  static StabChain build(int degree, const std::vector<Perm>& gens) {
    StabChain c;
    c.degree_ = degree;
    bool any = false;
    for (const auto& g : gens) any = c.add_element(g) || any;
    if (any) c.close();
    return c;
  }

  int degree() const { return degree_; }
  const std::vector<Level>& levels() const { return levels_; }

  unsigned long long order() const {
    unsigned long long o = 1;
    for (const auto& l : levels_) {
      unsigned long long n = l.orbit.size();
      if (o > (1ull << 62) / n) fail(errc::overflow, "group order exceeds 2^62");
      o *= n;
    }
    return o;
  }

  bool contains(const Perm& g) const {
    if (g.degree() != degree_) return false;
    Perm r = g;
    for (const auto& l : levels_) {
      int32_t p = r(l.base);
      if (p == l.base) continue;
      if (l.pos[p] < 0) return false;
      r = r.then(transversal(l, p).inverse());
    }
    return r.is_identity();
  }

  // Lexicographically least element of { h.then(g) : h in this group }.
  Perm min_coset_rep(const Perm& g) const {
    Perm cur = g;
    for (const auto& l : levels_) {
      int32_t best = l.orbit[0];
      int32_t best_img = cur(best);
      for (int32_t p : l.orbit) {
        if (cur(p) < best_img) {
          best = p;
          best_img = cur(p);
        }
      }
      if (best != l.base) cur = transversal(l, best).then(cur);
    }
    return cur;
  }

 private:
  Perm transversal(const Level& l, int32_t point) const {
    // element u with u(base) = point, composed along the Schreier tree
    std::vector<int32_t> path;
    int32_t p = point;
    while (p != l.base) {
      auto [par, gi] = l.parent[l.pos[p]];
      path.push_back(gi);
      p = par;
    }
    Perm u = Perm::identity(degree_);
    for (auto it = path.rbegin(); it != path.rend(); ++it) u = u.then(l.tree_gens[*it]);
    return u;
  }

  static int32_t min_moved(const Perm& g) {
    for (int32_t i = 0; i < g.degree(); ++i)
      if (g(i) != i) return i;
    return -1;
  }

  // Sift g against the current chain and file any nontrivial residue at the
  // level of its least moved point, inserting that level if absent.
  bool add_element(const Perm& g) {
    Perm r = g;
    for (const auto& l : levels_) {
      int32_t p = r(l.base);
      if (p == l.base) continue;
      if (l.pos[p] < 0) break;
      r = r.then(transversal(l, p).inverse());
    }
    int32_t q = min_moved(r);
    if (q < 0) return false;
    size_t at = 0;
    while (at < levels_.size() && levels_[at].base < q) ++at;
    if (at == levels_.size() || levels_[at].base != q) {
      Level nl;
      nl.base = q;
      nl.pos.assign(degree_, -1);
      levels_.insert(levels_.begin() + at, std::move(nl));
    }
    levels_[at].own_gens.push_back(std::move(r));
    return true;
  }

  // The group at level li is generated by the gens of levels li and deeper.
  void recompute_orbits() {
    for (size_t li = levels_.size(); li-- > 0;) {
      Level& l = levels_[li];
      l.tree_gens = l.own_gens;
      if (li + 1 < levels_.size()) {
        const Level& deeper = levels_[li + 1];
        l.tree_gens.insert(l.tree_gens.end(), deeper.tree_gens.begin(),
                           deeper.tree_gens.end());
      }
      l.orbit.clear();
      l.parent.clear();
      std::fill(l.pos.begin(), l.pos.end(), -1);
      l.orbit.push_back(l.base);
      l.parent.emplace_back(-1, -1);
      l.pos[l.base] = 0;
      for (size_t head = 0; head < l.orbit.size(); ++head) {
        int32_t p = l.orbit[head];
        for (size_t gi = 0; gi < l.tree_gens.size(); ++gi) {
          int32_t q = l.tree_gens[gi](p);
          if (l.pos[q] < 0) {
            l.pos[q] = static_cast<int32_t>(l.orbit.size());
            l.orbit.push_back(q);
            l.parent.emplace_back(p, static_cast<int32_t>(gi));
          }
        }
      }
    }
  }

  bool sifts_to_identity(const Perm& g) const {
    Perm r = g;
    for (const auto& l : levels_) {
      int32_t p = r(l.base);
      if (p == l.base) continue;
      if (l.pos[p] < 0) return false;
      r = r.then(transversal(l, p).inverse());
    }
    return r.is_identity();
  }

  // Fixpoint: every Schreier generator of every level must sift to the
  // identity; surviving residues become new level generators. Residues found
  // during a scan are collected first so levels_ is never mutated while a
  // level is being walked.
  void close() {
    for (;;) {
      recompute_orbits();
      std::vector<Perm> pending;
      for (const Level& l : levels_) {
        for (size_t oi = 0; oi < l.orbit.size(); ++oi) {
          int32_t p = l.orbit[oi];
          Perm up = transversal(l, p);
          for (size_t gi = 0; gi < l.tree_gens.size(); ++gi) {
            int32_t q = l.tree_gens[gi](p);
            Perm sg = up.then(l.tree_gens[gi]).then(transversal(l, q).inverse());
            if (!sifts_to_identity(sg)) pending.push_back(std::move(sg));
          }
        }
        if (!pending.empty()) break;  // file this level's residues before moving on
      }
      if (pending.empty()) return;
      for (const auto& g : pending) {
        if (add_element(g)) recompute_orbits();
      }
    }
  }

  int degree_ = 0;
  std::vector<Level> levels_;
};

}  // namespace polydual

#endif
