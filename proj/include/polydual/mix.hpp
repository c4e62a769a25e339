// The mix of sggis on the disjoint-union domain, mixing with the 1-polytope
// edge, and the internal-to-external construction (P <> e)* <> e.

#ifndef POLYDUAL_MIX_HPP
#define POLYDUAL_MIX_HPP

#include <vector>

#include "polydual/constructions.hpp"
#include "polydual/duality.hpp"
#include "polydual/error.hpp"
#include "polydual/sggi.hpp"

namespace polydual {

// Componentwise generators (rho_i, rho_i') on the concatenated point sets.
// Projections to either factor are generator-respecting and onto, which the
// covering test exercises.
inline Sggi mix(const Sggi& P, const Sggi& Q) {
  if (P.rank() != Q.rank())
    fail(errc::rank_mismatch, "mix: ranks " + std::to_string(P.rank()) + " vs " +
                                  std::to_string(Q.rank()));
  int d = P.degree() + Q.degree();
  std::vector<Perm> gens;
  for (int i = 0; i < P.rank(); ++i) {
    std::vector<int32_t> img(d);
    for (int32_t x = 0; x < P.degree(); ++x) img[x] = P.gen(i)(x);
    for (int32_t x = 0; x < Q.degree(); ++x) img[P.degree() + x] = P.degree() + Q.gen(i)(x);
    gens.push_back(Perm::from_images(std::move(img)));
  }
  return check_string(gens, P.element_cap());
}

// Adjoins a two-point component whose involution rides along with the
// generator at `position` (0 or n-1); all other generators fix the new
// points. This is the only sanctioned way to pad ranks with identities.
inline Sggi mix_edge(const Sggi& P, int position) {
  int n = P.rank();
  if (position != 0 && position != n - 1)
    fail(errc::bad_parameter, "mix_edge position must be 0 or n-1");
  int d = P.degree() + 2;
  std::vector<Perm> gens;
  for (int i = 0; i < n; ++i) {
    std::vector<int32_t> img(d);
    for (int32_t x = 0; x < P.degree(); ++x) img[x] = P.gen(i)(x);
    bool swap = (i == position);
    img[P.degree()] = P.degree() + (swap ? 1 : 0);
    img[P.degree() + 1] = P.degree() + (swap ? 0 : 1);
    gens.push_back(Perm::from_images(std::move(img)));
  }
  return check_string(gens, P.element_cap());
}

// (P <> e)* <> e: turns an internally self-dual P into an externally
// self-dual polytope with group Gamma(P) x C2 x C2.
inline Sggi int_to_ext(const Sggi& P) {
  if (!classify(P).internal())
    fail(errc::not_internally_self_dual, "int_to_ext needs an internally self-dual input");
  return mix_edge(dual(mix_edge(P, 0)), 0);
}

// Whether the mix of two polytopes is itself internally self-dual; the mix
// must be polytopal for the question to be posed.
inline bool mix_internally_self_dual(const Sggi& P, const Sggi& Q) {
  Sggi m = mix(P, Q);
  if (!is_string_c_group(m)) fail(errc::not_polytopal, "mix is not a string C-group");
  return classify(m).internal();
}

// The Cor. 4.3 hypothesis: one word that is dualizing in both factors.
inline bool shared_dualizing_word(const Sggi& P, const Sggi& Q, const std::vector<int>& w) {
  return is_dualizing_word(P, w) && is_dualizing_word(Q, w);
}

}  // namespace polydual

#endif
