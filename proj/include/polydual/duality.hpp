// Dualities of string C-groups: the dual sggi, the word star map, self-duality
// detection, dualizing automorphisms, the internal/external classification,
// and the rank-3 Petrie operations.

#ifndef POLYDUAL_DUALITY_HPP
#define POLYDUAL_DUALITY_HPP

#include <algorithm>
#include <optional>
#include <vector>

#include "polydual/error.hpp"
#include "polydual/sggi.hpp"

namespace polydual {

// Generator reversal rho_i -> rho_{n-1-i}; the group is unchanged.
inline Sggi dual(const Sggi& P) {
  std::vector<Perm> gens(P.gens().rbegin(), P.gens().rend());
  return Sggi(P.rank(), P.degree(), std::move(gens), P.element_cap());
}

// Entrywise i -> n-1-i on a word of generator indices.
inline std::vector<int> star_word(const std::vector<int>& w, int n) {
  std::vector<int> out;
  out.reserve(w.size());
  for (int i : w) {
    if (i < 0 || i >= n) fail(errc::bad_parameter, "star_word: index out of range");
    out.push_back(n - 1 - i);
  }
  return out;
}

// A group automorphism sending each rho_i to rho_{n-1-i} exists iff the pair
// subgroup generated by (rho_i, rho_{n-1-i}) is the graph of one.
inline bool is_self_dual(const Sggi& P) { return covers(P, dual(P)); }

// alpha rho_i = rho_{n-1-i} alpha for every i; membership in the group is part
// of the contract.
inline bool is_dualizing(const Sggi& P, const Perm& a) {
  if (a.degree() != P.degree()) fail(errc::not_in_group, "degree mismatch");
  if (!P.group().contains(a)) fail(errc::not_in_group, "element is not in the group");
  int n = P.rank();
  for (int i = 0; i < n; ++i)
    if (a.then(P.gen(i)) != P.gen(n - 1 - i).then(a)) return false;
  return true;
}

// Same check for an element given as a word in the generators, where
// membership holds by construction.
inline bool is_dualizing_word(const Sggi& P, const std::vector<int>& w) {
  Perm a = P.word(w);
  int n = P.rank();
  for (int i = 0; i < n; ++i)
    if (a.then(P.gen(i)) != P.gen(n - 1 - i).then(a)) return false;
  return true;
}

// All dualizing automorphisms; empty exactly when P is externally self-dual
// (or not self-dual at all). Sorted by image sequence for reproducibility.
inline std::vector<Perm> dualizing_set(const Sggi& P) {
  std::vector<Perm> rev(P.gens().rbegin(), P.gens().rend());
  return tuple_conjugators(P.group(), P.gens(), rev);
}

enum class DualityKind { NotSelfDual, InternallySelfDual, ExternallySelfDual };

struct DualityClass {
  DualityKind kind = DualityKind::NotSelfDual;
  std::optional<Perm> witness;  // a dualizing automorphism, internal case only

  bool internal() const { return kind == DualityKind::InternallySelfDual; }
};

inline const char* duality_kind_name(DualityKind k) {
  switch (k) {
    case DualityKind::NotSelfDual: return "none";
    case DualityKind::InternallySelfDual: return "internal";
    case DualityKind::ExternallySelfDual: return "external";
  }
  return "unknown";
}

// Def. 3.1 trichotomy. The witness is the lexicographically least dualizing
// permutation, so identical inputs classify identically.
inline DualityClass classify(const Sggi& P) {
  DualityClass r;
  if (!is_self_dual(P)) return r;
  std::vector<Perm> rev(P.gens().rbegin(), P.gens().rend());
  std::optional<Perm> alpha = conjugator_search(P.group(), P.gens(), rev);
  if (alpha) {
    r.kind = DualityKind::InternallySelfDual;
    r.witness = std::move(alpha);
  } else {
    r.kind = DualityKind::ExternallySelfDual;
  }
  return r;
}

// --- Petrie operations (rank 3) ---------------------------------------------

// Replaces rho_0 by rho_0 rho_2; facets and Petrie polygons trade places.
inline Sggi petrie(const Sggi& P) {
  if (P.rank() != 3) fail(errc::bad_parameter, "petrie: rank 3 only");
  Perm p0 = P.gen(0).then(P.gen(2));
  if (p0.is_identity()) fail(errc::degenerate_petrie, "rho0 rho2 is the identity");
  std::vector<Perm> gens{p0, P.gen(1), P.gen(2)};
  return check_string(gens, P.element_cap());
}

enum class PetrieKind { NotSelfPetrie, InternallySelfPetrie, ExternallySelfPetrie };

inline const char* petrie_kind_name(PetrieKind k) {
  switch (k) {
    case PetrieKind::NotSelfPetrie: return "none";
    case PetrieKind::InternallySelfPetrie: return "internal";
    case PetrieKind::ExternallySelfPetrie: return "external";
  }
  return "unknown";
}

// Direct definition: an automorphism fixing rho_1, rho_2 and sending rho_0 to
// rho_0 rho_2, inner or outer.
inline PetrieKind classify_petrie_direct(const Sggi& P) {
  if (P.rank() != 3) fail(errc::bad_parameter, "petrie: rank 3 only");
  Sggi Q = petrie(P);
  if (P.group().order() != Q.group().order() || !covers(P, Q))
    return PetrieKind::NotSelfPetrie;
  std::vector<Perm> ys{P.gen(0).then(P.gen(2)), P.gen(1), P.gen(2)};
  std::optional<Perm> a = conjugator_search(P.group(), P.gens(), ys);
  return a ? PetrieKind::InternallySelfPetrie : PetrieKind::ExternallySelfPetrie;
}

// Equivalent route: P is internally self-Petrie iff (P*)^pi is internally
// self-dual. Both routes are computed and must agree.
inline PetrieKind classify_petrie(const Sggi& P) {
  DualityClass d = classify(petrie(dual(P)));
  PetrieKind via_dual = PetrieKind::NotSelfPetrie;
  if (d.kind == DualityKind::InternallySelfDual) via_dual = PetrieKind::InternallySelfPetrie;
  if (d.kind == DualityKind::ExternallySelfDual) via_dual = PetrieKind::ExternallySelfPetrie;
  PetrieKind direct = classify_petrie_direct(P);
  if (direct != via_dual)
    fail(errc::bad_parameter, "petrie classification routes disagree; report this input");
  return direct;
}

}  // namespace polydual

#endif
