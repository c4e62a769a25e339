// Bounded group search over permutations: breadth-first element enumeration
// behind an element cap, plus a stabilizer-chain path for the instances whose
// order makes enumeration impossible. Every chain-backed answer is
// differential-tested against the exhaustive one in the test suite.

#ifndef POLYDUAL_PERMGROUP_HPP
#define POLYDUAL_PERMGROUP_HPP

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "polydual/error.hpp"
#include "polydual/perm.hpp"
#include "polydual/stabchain.hpp"

namespace polydual {

inline constexpr long long kDefaultElementCap = 4'000'000;

// Deterministic element store: ids follow BFS discovery order from the
// identity (id 0), generators applied in index order.
class ElementIndex {
 public:
  int add(Perm p) {
    uint64_t h = p.hash();
    auto [it, fresh] = buckets_.try_emplace(h);
    for (int id : it->second)
      if (els_[id] == p) return id;
    int id = static_cast<int>(els_.size());
    els_.push_back(std::move(p));
    it->second.push_back(id);
    return id;
  }

  int find(const Perm& p) const {
    auto it = buckets_.find(p.hash());
    if (it == buckets_.end()) return -1;
    for (int id : it->second)
      if (els_[id] == p) return id;
    return -1;
  }

  bool contains(const Perm& p) const { return find(p) >= 0; }
  size_t size() const { return els_.size(); }
  const Perm& operator[](int id) const { return els_[id]; }
  const std::vector<Perm>& elements() const { return els_; }

 private:
  std::vector<Perm> els_;
  std::unordered_map<uint64_t, std::vector<int32_t>> buckets_;
};

class PermGroup {
 public:
  PermGroup() = default;
  PermGroup(int degree, std::vector<Perm> generators,
            long long element_cap = kDefaultElementCap)
      : degree_(degree), cap_(element_cap) {
    for (auto& g : generators) {
      if (g.degree() != degree)
        fail(errc::degree_mismatch, "generator degree mismatch");
      if (!g.is_identity()) gens_.push_back(std::move(g));
    }
  }

  int degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }
  long long element_cap() const { return cap_; }
  bool trivial() const { return gens_.empty(); }

  // Complete element set by breadth-first closure; throws cap_exceeded once
  // more than element_cap elements appear.
  const ElementIndex& enumerate() const {
    if (elements_) return *elements_;
    auto idx = std::make_shared<ElementIndex>();
    idx->add(Perm::identity(degree_));
    for (size_t head = 0; head < idx->size(); ++head) {
      for (const auto& g : gens_) {
        Perm next = (*idx)[static_cast<int>(head)].then(g);
        idx->add(std::move(next));
        if (static_cast<long long>(idx->size()) > cap_)
          fail(errc::cap_exceeded,
               "group enumeration passed element cap " + std::to_string(cap_));
      }
    }
    elements_ = std::move(idx);
    return *elements_;
  }

  bool elements_cached() const { return elements_ != nullptr; }

  void cache_elements(std::shared_ptr<ElementIndex> idx) const { elements_ = std::move(idx); }

  const StabChain& chain() const {
    if (!chain_) chain_ = std::make_shared<StabChain>(StabChain::build(degree_, gens_));
    return *chain_;
  }

  unsigned long long order() const {
    if (elements_) return elements_->size();
    if (degree_ > kChainDegreeLimit) return enumerate().size();
    return chain().order();
  }

  bool contains(const Perm& g) const {
    if (g.degree() != degree_) return false;
    if (elements_) return elements_->contains(g);
    if (degree_ > kChainDegreeLimit) return enumerate().contains(g);
    return chain().contains(g);
  }

  // Lexicographically least element of (this group) . g; used as a canonical
  // coset key. Only meaningful on the chain path.
  Perm min_coset_rep(const Perm& g) const { return chain().min_coset_rep(g); }

  static constexpr int kChainDegreeLimit = 1000;

 private:
  int degree_ = 0;
  std::vector<Perm> gens_;
  long long cap_ = kDefaultElementCap;
  mutable std::shared_ptr<ElementIndex> elements_;
  mutable std::shared_ptr<const StabChain> chain_;
};

// ---------------------------------------------------------------------------
// conjugator search
//
// Default strategy is the exhaustive scan of the element set, as fits groups
// of desk scale. Above the scan budget the search switches to constraint
// propagation: a conjugator satisfying x_i.then(a) == a.then(y_i) is fixed on
// a whole <xs>-orbit by its value at one point, so there are at most degree
// candidate maps per orbit; survivors are filtered through a membership test.
// The two strategies are differential-tested against each other.

namespace detail {

inline constexpr unsigned long long kScanOrderLimit = 200'000;
inline constexpr unsigned long long kScanWorkLimit = 20'000'000;

inline bool conjugates_tuple(const Perm& a, const std::vector<Perm>& xs,
                             const std::vector<Perm>& ys) {
  for (size_t i = 0; i < xs.size(); ++i) {
    const Perm& x = xs[i];
    const Perm& y = ys[i];
    for (int32_t p = 0; p < a.degree(); ++p)
      if (a(x(p)) != y(a(p))) return false;
  }
  return true;
}

// Visits every bijection a of 0..degree-1 with x_i.then(a) = a.then(y_i) for
// all i. Such a map is fixed on a whole <xs>-orbit by its value at one point,
// so each orbit offers at most `degree` partial maps; orbits are stitched
// together by depth-first search. `visit` returns true to stop early.
template <typename Visit>
inline void for_each_tuple_transporter(int degree, const std::vector<Perm>& xs,
                                       const std::vector<Perm>& ys, Visit&& visit) {
  if (degree == 0) {
    visit(Perm::identity(0));
    return;
  }
  std::vector<int32_t> orbit_of(degree, -1);
  std::vector<std::vector<int32_t>> orbits;
  for (int32_t p = 0; p < degree; ++p) {
    if (orbit_of[p] >= 0) continue;
    int32_t r = static_cast<int32_t>(orbits.size());
    orbits.push_back({p});
    orbit_of[p] = r;
    for (size_t head = 0; head < orbits[r].size(); ++head) {
      int32_t q = orbits[r][head];
      for (const auto& x : xs)
        if (orbit_of[x(q)] < 0) {
          orbit_of[x(q)] = r;
          orbits[r].push_back(x(q));
        }
    }
  }

  std::vector<int32_t> merged(degree, -1);
  std::vector<bool> used(degree, false);

  // propagate the choice rep->target across its orbit; false on inconsistency
  auto place_orbit = [&](int32_t r, int32_t target, std::vector<int32_t>& placed) -> bool {
    int32_t rep = orbits[r][0];
    if (used[target]) return false;
    merged[rep] = target;
    used[target] = true;
    placed.push_back(rep);
    std::vector<int32_t> stack{rep};
    while (!stack.empty()) {
      int32_t q = stack.back();
      stack.pop_back();
      for (size_t i = 0; i < xs.size(); ++i) {
        int32_t u = xs[i](q);
        int32_t v = ys[i](merged[q]);
        if (merged[u] < 0) {
          if (used[v]) return false;
          merged[u] = v;
          used[v] = true;
          placed.push_back(u);
          stack.push_back(u);
        } else if (merged[u] != v) {
          return false;
        }
      }
    }
    return true;
  };

  auto dfs = [&](auto&& self, size_t r) -> bool {
    if (r == orbits.size())
      return visit(Perm::from_images(std::vector<int32_t>(merged.begin(), merged.end())));
    for (int32_t target = 0; target < degree; ++target) {
      std::vector<int32_t> placed;
      bool ok = place_orbit(static_cast<int32_t>(r), target, placed);
      if (ok && self(self, r + 1)) return true;
      for (int32_t p : placed) {
        used[merged[p]] = false;
        merged[p] = -1;
      }
    }
    return false;
  };
  dfs(dfs, 0);
}

}  // namespace detail

// Some g in G with g^-1 x_i g = y_i for all i, or nullopt. Deterministic:
// the lexicographically least valid permutation is returned.
inline std::optional<Perm> conjugator_search(const PermGroup& G, const std::vector<Perm>& xs,
                                             const std::vector<Perm>& ys) {
  if (xs.size() != ys.size()) fail(errc::bad_parameter, "conjugator_search: xs/ys length");
  unsigned long long n = G.order();
  std::optional<Perm> best;
  if (G.elements_cached() ||
      (n <= detail::kScanOrderLimit &&
       n * static_cast<unsigned long long>(std::max(G.degree(), 1)) <= detail::kScanWorkLimit)) {
    for (const auto& g : G.enumerate().elements()) {
      if (!detail::conjugates_tuple(g, xs, ys)) continue;
      if (!best || g < *best) best = g;
    }
    return best;
  }
  detail::for_each_tuple_transporter(G.degree(), xs, ys, [&](Perm a) {
    if (G.contains(a) && (!best || a < *best)) best = std::move(a);
    return false;
  });
  return best;
}

// All elements of G conjugating the tuple xs to ys (the dualizing set when
// xs are the generators and ys their reversal).
inline std::vector<Perm> tuple_conjugators(const PermGroup& G, const std::vector<Perm>& xs,
                                           const std::vector<Perm>& ys) {
  std::vector<Perm> out;
  unsigned long long n = G.order();
  if (G.elements_cached() ||
      (n <= detail::kScanOrderLimit &&
       n * static_cast<unsigned long long>(std::max(G.degree(), 1)) <= detail::kScanWorkLimit)) {
    for (const auto& g : G.enumerate().elements())
      if (detail::conjugates_tuple(g, xs, ys)) out.push_back(g);
  } else {
    detail::for_each_tuple_transporter(G.degree(), xs, ys, [&](Perm a) {
      if (G.contains(a)) out.push_back(std::move(a));
      return false;
    });
  }
  std::sort(out.begin(), out.end(), std::less<>{});
  return out;
}

// All elements commuting with every generator.
inline PermGroup center(const PermGroup& G) {
  std::vector<Perm> z = tuple_conjugators(G, G.generators(), G.generators());
  std::vector<Perm> gens;
  for (auto& g : z)
    if (!g.is_identity()) gens.push_back(g);
  PermGroup Z(G.degree(), gens, G.element_cap());
  auto idx = std::make_shared<ElementIndex>();
  for (auto& g : z) idx->add(g);
  Z.cache_elements(idx);
  return Z;
}

// Exhaustive-set intersection; the spec's public operation. Caps propagate.
inline PermGroup subgroup_intersection(const PermGroup& A, const PermGroup& B) {
  if (A.degree() != B.degree()) fail(errc::degree_mismatch, "intersection: degree");
  const ElementIndex& ea = A.enumerate();
  const ElementIndex& eb = B.enumerate();
  const ElementIndex& small = ea.size() <= eb.size() ? ea : eb;
  const ElementIndex& large = ea.size() <= eb.size() ? eb : ea;
  std::vector<Perm> common;
  for (const auto& g : small.elements())
    if (large.contains(g)) common.push_back(g);
  std::vector<Perm> gens;
  for (const auto& g : common)
    if (!g.is_identity()) gens.push_back(g);
  PermGroup I(A.degree(), gens, A.element_cap());
  auto idx = std::make_shared<ElementIndex>();
  for (const auto& g : common) idx->add(g);
  I.cache_elements(idx);
  return I;
}

// |A ∩ B| without materializing either group: orbit of the coset B.e under
// right multiplication by A's generators, cosets keyed by their lex-least
// member. Also reports Schreier generators of the intersection.
struct IntersectionViaChain {
  unsigned long long order;
  std::vector<Perm> schreier_gens;
};

inline IntersectionViaChain intersection_via_chain(const PermGroup& A, const PermGroup& B) {
  if (A.degree() != B.degree()) fail(errc::degree_mismatch, "intersection: degree");
  ElementIndex seen;
  std::vector<Perm> transversal;
  Perm id = Perm::identity(A.degree());
  seen.add(B.min_coset_rep(id));
  transversal.push_back(id);
  std::vector<Perm> sgens;
  ElementIndex sgen_seen;
  for (size_t head = 0; head < transversal.size(); ++head) {
    for (const auto& a : A.generators()) {
      Perm t = transversal[head].then(a);
      Perm key = B.min_coset_rep(t);
      int existing = seen.find(key);
      if (existing < 0) {
        seen.add(std::move(key));
        transversal.push_back(std::move(t));
      } else {
        Perm sg = t.then(transversal[existing].inverse());
        if (!sg.is_identity() && sgen_seen.find(sg) < 0) {
          sgen_seen.add(sg);
          sgens.push_back(std::move(sg));
        }
      }
    }
  }
  unsigned long long index = transversal.size();
  unsigned long long a_order = A.order();
  return {a_order / index, std::move(sgens)};
}

// The derived subgroup as a PermGroup: normal closure of the generator
// commutators. A conjugate is adopted as a new generator only when it grows
// the subgroup, so the generating set stays within log |G| additions.
inline PermGroup derived_subgroup(const PermGroup& G) {
  const auto& gens = G.generators();
  std::vector<Perm> closure;
  ElementIndex seen;
  for (const auto& a : gens)
    for (const auto& b : gens) {
      Perm c = commutator(a, b);
      if (!c.is_identity() && seen.find(c) < 0) {
        seen.add(c);
        closure.push_back(std::move(c));
      }
    }
  PermGroup D(G.degree(), closure, G.element_cap());
  if (closure.empty()) return D;
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& c : D.generators()) {
      for (const auto& a : gens) {
        Perm t = c.conjugated_by(a);
        if (!D.contains(t)) {
          auto next = D.generators();
          next.push_back(std::move(t));
          D = PermGroup(G.degree(), std::move(next), G.element_cap());
          grew = true;
          break;
        }
      }
      if (grew) break;
    }
  }
  return D;
}

// Membership in the commutator subgroup.
inline bool in_derived_subgroup(const PermGroup& G, const Perm& g) {
  if (g.degree() != G.degree()) fail(errc::degree_mismatch, "in_derived_subgroup");
  PermGroup D = derived_subgroup(G);
  if (D.trivial()) return g.is_identity();
  return D.contains(g);
}

}  // namespace polydual

#endif
