// String groups generated by involutions: rank structure, the string and
// intersection conditions, Schläfli types, parabolic subgroups, coverings and
// the quotient criterion.

#ifndef POLYDUAL_SGGI_HPP
#define POLYDUAL_SGGI_HPP

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "polydual/error.hpp"
#include "polydual/perm.hpp"
#include "polydual/permgroup.hpp"

namespace polydual {

class Sggi {
 public:
  Sggi() = default;
  Sggi(int rank, int degree, std::vector<Perm> gens,
       long long element_cap = kDefaultElementCap)
      : rank_(rank), degree_(degree), gens_(std::move(gens)), cap_(element_cap) {}

  int rank() const { return rank_; }
  int degree() const { return degree_; }
  const std::vector<Perm>& gens() const { return gens_; }
  const Perm& gen(int i) const { return gens_[i]; }
  long long element_cap() const { return cap_; }

  const PermGroup& group() const {
    if (!group_) group_ = std::make_shared<PermGroup>(degree_, gens_, cap_);
    return *group_;
  }

  Perm word(const std::vector<int>& w) const { return evaluate_word(gens_, w, degree_); }

 private:
  int rank_ = 0;
  int degree_ = 0;
  std::vector<Perm> gens_;
  long long cap_ = kDefaultElementCap;
  mutable std::shared_ptr<PermGroup> group_;
};

// Validates the defining conditions: involutory non-identity generators of a
// shared degree, with (rho_i rho_j)^2 = id whenever |i-j| >= 2. Reports the
// first violation.
inline Sggi check_string(const std::vector<Perm>& gens,
                         long long element_cap = kDefaultElementCap) {
  if (gens.empty()) fail(errc::bad_parameter, "no generators");
  int degree = gens[0].degree();
  int n = static_cast<int>(gens.size());
  for (int i = 0; i < n; ++i) {
    if (gens[i].degree() != degree)
      fail(errc::degree_mismatch, "generator " + std::to_string(i) + " has degree " +
                                      std::to_string(gens[i].degree()) + ", expected " +
                                      std::to_string(degree));
    if (gens[i].is_identity())
      fail(errc::identity_generator, "generator " + std::to_string(i) + " is the identity");
    if (!gens[i].then(gens[i]).is_identity())
      fail(errc::not_involution, "generator " + std::to_string(i) + " is not an involution");
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 2; j < n; ++j)
      if (!gens[i].then(gens[j]).then(gens[i]).then(gens[j]).is_identity())
        fail(errc::not_commuting, "generators " + std::to_string(i) + " and " +
                                      std::to_string(j) + " do not commute");
  return Sggi(n, degree, gens, element_cap);
}

// Orders of the products rho_{i-1} rho_i. Finite by construction here.
inline std::vector<long long> schlafli_type(const Sggi& P) {
  std::vector<long long> t;
  for (int i = 1; i < P.rank(); ++i) t.push_back(P.gen(i - 1).then(P.gen(i)).order());
  return t;
}

// Subgroup generated by the generators whose rank is NOT in S.
inline PermGroup parabolic(const Sggi& P, const std::set<int>& S) {
  std::vector<Perm> gens;
  for (int i = 0; i < P.rank(); ++i)
    if (!S.count(i)) gens.push_back(P.gen(i));
  return PermGroup(P.degree(), std::move(gens), P.element_cap());
}

// The sub-sggi on a contiguous generator range [lo, hi].
inline Sggi section_sggi(const Sggi& P, int lo, int hi) {
  std::vector<Perm> gens(P.gens().begin() + lo, P.gens().begin() + hi + 1);
  return Sggi(hi - lo + 1, P.degree(), std::move(gens), P.element_cap());
}

struct IntersectionCheck {
  bool ok = true;
  std::vector<int> violating_I, violating_J;  // generator index sets, on failure
  std::optional<Perm> gap;                    // an element witnessing the violation
};

namespace detail {

inline constexpr unsigned long long kSetIntersectLimit = 120'000;

// Compares <gens of H> ∩ <gens of K> against the parabolic generated by
// `expected`, choosing exhaustive sets or the coset-orbit route by size.
inline IntersectionCheck compare_intersection(const PermGroup& H, const PermGroup& K,
                                              const PermGroup& expected,
                                              std::vector<int> I, std::vector<int> J) {
  IntersectionCheck r;
  unsigned long long ho = H.order(), ko = K.order();
  if (ho <= kSetIntersectLimit && ko <= kSetIntersectLimit) {
    PermGroup inter = subgroup_intersection(H, K);
    if (inter.order() == expected.order()) return r;
    r.ok = false;
    r.violating_I = std::move(I);
    r.violating_J = std::move(J);
    for (const auto& g : inter.enumerate().elements())
      if (!expected.contains(g)) {
        r.gap = g;
        break;
      }
    return r;
  }
  IntersectionViaChain ic = ho <= ko ? intersection_via_chain(H, K)
                                     : intersection_via_chain(K, H);
  if (ic.order == expected.order()) return r;
  r.ok = false;
  r.violating_I = std::move(I);
  r.violating_J = std::move(J);
  for (const auto& g : ic.schreier_gens)
    if (!expected.contains(g)) {
      r.gap = g;
      break;
    }
  return r;
}

}  // namespace detail

// The intersection property, Prop. 2E16 style: rank <= 2 directly, rank 3 via
// the single facet/vertex-figure intersection, higher ranks by recursion on
// the facet and vertex-figure sggis plus one top-level intersection. The
// exhaustive all-pairs check below serves as the differential oracle.
// Overlapping sections are memoized; witness indices are reported in the
// parent's numbering.
inline IntersectionCheck check_intersection(const Sggi& P) {
  std::map<std::pair<int, int>, IntersectionCheck> memo;
  auto rec = [&](auto&& self, int lo, int hi) -> IntersectionCheck {
    auto it = memo.find({lo, hi});
    if (it != memo.end()) return it->second;
    IntersectionCheck r;
    int n = hi - lo + 1;
    if (n == 2 && P.gen(lo) == P.gen(hi)) {
      r.ok = false;
      r.violating_I = {lo};
      r.violating_J = {hi};
      r.gap = P.gen(lo);
    } else if (n >= 3) {
      IntersectionCheck facet = self(self, lo, hi - 1);
      if (!facet.ok) {
        memo[{lo, hi}] = facet;
        return facet;
      }
      IntersectionCheck vfig = self(self, lo + 1, hi);
      if (!vfig.ok) {
        memo[{lo, hi}] = vfig;
        return vfig;
      }
      std::vector<int> I, J;
      for (int i = lo; i <= hi - 1; ++i) I.push_back(i);
      for (int i = lo + 1; i <= hi; ++i) J.push_back(i);
      std::set<int> exclH, exclK, exclE;
      for (int i = 0; i < P.rank(); ++i) {
        if (i < lo || i > hi - 1) exclH.insert(i);
        if (i < lo + 1 || i > hi) exclK.insert(i);
        if (i < lo + 1 || i > hi - 1) exclE.insert(i);
      }
      PermGroup H = parabolic(P, exclH);
      PermGroup K = parabolic(P, exclK);
      PermGroup E = parabolic(P, exclE);
      r = detail::compare_intersection(H, K, E, std::move(I), std::move(J));
    }
    memo[{lo, hi}] = r;
    return r;
  };
  return rec(rec, 0, P.rank() - 1);
}

// Literal all-pairs check of the intersection property; exponential in rank.
inline IntersectionCheck check_intersection_exhaustive(const Sggi& P) {
  int n = P.rank();
  std::vector<std::shared_ptr<PermGroup>> sub(1u << n);
  auto grp = [&](unsigned mask) -> PermGroup& {
    if (!sub[mask]) {
      std::set<int> excluded;
      for (int i = 0; i < n; ++i)
        if (!(mask >> i & 1u)) excluded.insert(i);
      sub[mask] = std::make_shared<PermGroup>(parabolic(P, excluded));
      sub[mask]->enumerate();
    }
    return *sub[mask];
  };
  IntersectionCheck r;
  for (unsigned a = 0; a < (1u << n); ++a) {
    for (unsigned b = 0; b < (1u << n); ++b) {
      PermGroup& A = grp(a);
      PermGroup& B = grp(b);
      PermGroup& E = grp(a & b);
      const ElementIndex& ea = A.enumerate();
      for (const auto& g : ea.elements()) {
        if (B.enumerate().contains(g) && !E.enumerate().contains(g)) {
          r.ok = false;
          for (int i = 0; i < n; ++i) {
            if (a >> i & 1u) r.violating_I.push_back(i);
            if (b >> i & 1u) r.violating_J.push_back(i);
          }
          r.gap = g;
          return r;
        }
      }
    }
  }
  return r;
}

inline bool is_string_c_group(const Sggi& P) { return check_intersection(P).ok; }

// P covers Q when the subgroup of the direct product generated by the paired
// generators has order |Gamma(P)|: the relation is then the graph of a
// generator-respecting surjection.
inline bool covers(const Sggi& P, const Sggi& Q) {
  if (P.rank() != Q.rank())
    fail(errc::rank_mismatch, "covers: ranks " + std::to_string(P.rank()) + " vs " +
                                  std::to_string(Q.rank()));
  int d = P.degree() + Q.degree();
  unsigned long long target = P.group().order();
  if (d <= PermGroup::kChainDegreeLimit) {
    std::vector<Perm> pair_gens;
    for (int i = 0; i < P.rank(); ++i) {
      std::vector<int32_t> img(d);
      for (int32_t x = 0; x < P.degree(); ++x) img[x] = P.gen(i)(x);
      for (int32_t x = 0; x < Q.degree(); ++x) img[P.degree() + x] = P.degree() + Q.gen(i)(x);
      pair_gens.push_back(Perm::from_images(std::move(img)));
    }
    PermGroup pair(d, std::move(pair_gens), P.element_cap());
    return pair.order() == target;
  }
  // big combined degree: walk the pair subgroup as pairs of element ids
  const ElementIndex& ep = P.group().enumerate();
  const ElementIndex& eq = Q.group().enumerate();
  std::set<std::pair<int32_t, int32_t>> seen;
  std::vector<std::pair<int32_t, int32_t>> queue{{0, 0}};
  seen.insert({0, 0});
  for (size_t head = 0; head < queue.size(); ++head) {
    auto [ia, ib] = queue[head];
    for (int i = 0; i < P.rank(); ++i) {
      int32_t ja = ep.find(ep[ia].then(P.gen(i)));
      int32_t jb = eq.find(eq[ib].then(Q.gen(i)));
      if (seen.insert({ja, jb}).second) {
        if (seen.size() > target) return false;  // pair subgroup is strictly larger
        queue.emplace_back(ja, jb);
      }
    }
  }
  return seen.size() == target;
}

// Thm. 2E17 shape: G a string sggi covering the string C-group L; when the
// covering is one-to-one on <rho_0..rho_{n-2}>, G is itself a string C-group.
// The image of G's facet subgroup under a generator-respecting surjection is
// exactly L's facet subgroup, so injectivity is an order comparison.
inline bool quotient_criterion(const Sggi& G, const Sggi& L) {
  if (!covers(G, L)) fail(errc::not_a_covering, "quotient_criterion: G does not cover L");
  int n = G.rank();
  unsigned long long g_facet = section_sggi(G, 0, n - 2).group().order();
  unsigned long long l_facet = section_sggi(L, 0, n - 2).group().order();
  return g_facet == l_facet;
}

// True iff rho_i rho_j lies in the derived subgroup, i.e. the two generators
// share an image in the abelianization.
inline bool abelianization_identifies(const Sggi& P, int i, int j) {
  if (i == j) return true;
  return in_derived_subgroup(P.group(), P.gen(i).then(P.gen(j)));
}

// --- text format -----------------------------------------------------------
// First line `rank n degree k`, then one permutation per line in cycle
// notation.

inline std::string to_text(const Sggi& P) {
  std::ostringstream os;
  os << "rank " << P.rank() << " degree " << P.degree() << "\n";
  for (const auto& g : P.gens()) os << g.cycle_string() << "\n";
  return os.str();
}

inline Sggi parse_sggi(const std::string& text, long long element_cap = kDefaultElementCap) {
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  int rank = -1, degree = -1;
  std::vector<Perm> gens;
  while (std::getline(is, line)) {
    ++lineno;
    std::string trimmed = line;
    trimmed.erase(0, trimmed.find_first_not_of(" \t\r"));
    if (trimmed.empty() || trimmed[0] == '#') continue;
    if (rank < 0) {
      std::istringstream hs(trimmed);
      std::string w1, w3;
      if (!(hs >> w1 >> rank >> w3 >> degree) || w1 != "rank" || w3 != "degree" || rank < 1 ||
          degree < 0)
        fail(errc::parse_error, "line " + std::to_string(lineno) +
                                    ": expected header `rank n degree k`");
      continue;
    }
    try {
      gens.push_back(Perm::parse_cycles(degree, trimmed));
    } catch (const error& e) {
      fail(errc::parse_error, "line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (rank < 0) fail(errc::parse_error, "missing header line");
  if (static_cast<int>(gens.size()) != rank)
    fail(errc::parse_error, "expected " + std::to_string(rank) + " generators, got " +
                                std::to_string(gens.size()));
  return check_string(gens, element_cap);
}

}  // namespace polydual

#endif
