// Coordinate models: polygons, simplices, the torus maps {4,4}_(s,0) and the
// cubic toroids {4,3^{n-2},4}_(s,0^{n-1}), plus the 1-polytope edge.
//
// Toroid groups act on flags. A flag is a vertex of (Z/sZ)^n together with an
// ordered frame of signed coordinate directions; direction symbols are kept
// exact rather than reduced mod s, which keeps the action faithful down to
// s = 2 where the vertex action alone collapses. The vertex action is carried
// alongside as auxiliary data because the worked examples reason in vertex
// coordinates.

#ifndef POLYDUAL_CONSTRUCTIONS_HPP
#define POLYDUAL_CONSTRUCTIONS_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "polydual/error.hpp"
#include "polydual/sggi.hpp"

namespace polydual {

// Dihedral action on p vertices, base flag at vertex 1 with edge {1,2}:
// rho0 reflects through the base edge (v -> 3-v), rho1 through the base
// vertex (v -> 2-v).
inline Sggi polygon(int p) {
  if (p < 3) fail(errc::bad_parameter, "polygon needs p >= 3 (and finite)");
  auto wrap = [p](int x) { return ((x - 1) % p + p) % p; };  // 1-based value -> 0-based point
  std::vector<int32_t> i0(p), i1(p);
  for (int v = 1; v <= p; ++v) {
    i0[v - 1] = wrap(3 - v);
    i1[v - 1] = wrap(2 - v);
  }
  return Sggi(2, p, {Perm::from_images(std::move(i0)), Perm::from_images(std::move(i1))});
}

// S_{n+1} on the vertices e_1..e_{n+1}, rho_i = (i+1, i+2); the base flag is
// the coordinate ordering (e_1, ..., e_{n+1}).
inline Sggi simplex(int n) {
  if (n < 1) fail(errc::bad_parameter, "simplex needs n >= 1");
  std::vector<Perm> gens;
  for (int i = 0; i < n; ++i) gens.push_back(Perm::from_cycles(n + 1, {{i + 1, i + 2}}));
  return Sggi(n, n + 1, std::move(gens));
}

// The unique 1-polytope.
inline Sggi edge() { return Sggi(1, 2, {Perm::from_cycles(2, {{1, 2}})}); }

// A signed permutation matrix together with a translation of (Z/sZ)^n:
// v -> v B + t, acting on direction symbols through B alone.
struct ToroidMap {
  std::vector<int> axis;  // image axis of e_a
  std::vector<int> sign;  // +1 / -1
  std::vector<int> trans;
};

class ToroidModel {
 public:
  ToroidModel(int n, int s) : n_(n), s_(s) {
    if (n < 2) fail(errc::bad_parameter, "toroid needs n >= 2");
    if (s < 2) fail(errc::bad_parameter, "toroid needs s >= 2 (s = 1 degenerates)");
    build_frames();
    build_generators();
  }

  int dimension() const { return n_; }
  int modulus() const { return s_; }
  int vertex_count() const { return pow_int(s_, n_); }
  int flag_count() const { return vertex_count() * static_cast<int>(frames_.size()); }

  // rank n+1 sggi on the flags; the identity flag (origin, standard frame)
  // has id 0, so it is the base flag of the coset lattice.
  const Sggi& sggi() const { return sggi_; }

  // vertex id of the flag reached from the base flag by a group element
  int vertex_of_element(const Perm& g) const { return flag_vertex_[g(0)]; }

  int vertex_of_flag(int flag_point) const { return flag_vertex_[flag_point]; }

  std::vector<int> coords_of_vertex(int vid) const {
    std::vector<int> x(n_);
    for (int i = 0; i < n_; ++i) {
      x[i] = vid % s_;
      vid /= s_;
    }
    return x;
  }

  int vertex_of_coords(const std::vector<int>& x) const {
    int vid = 0;
    for (int i = n_ - 1; i >= 0; --i) vid = vid * s_ + ((x[i] % s_) + s_) % s_;
    return vid;
  }

  // the paper's generator actions on vertices, exported for cross-checks
  std::vector<Perm> vertex_actions() const {
    std::vector<Perm> out;
    for (const auto& m : maps_) {
      std::vector<int32_t> img(vertex_count());
      for (int v = 0; v < vertex_count(); ++v) img[v] = apply_vertex(m, v);
      out.push_back(Perm::from_images(std::move(img)));
    }
    return out;
  }

 private:
  static int pow_int(int b, int e) {
    int r = 1;
    while (e--) r *= b;
    return r;
  }

  // frames: all orderings of signed axes; index = perm index * 2^n + sign bits
  void build_frames() {
    std::vector<int> axes(n_);
    std::iota(axes.begin(), axes.end(), 0);
    std::vector<std::vector<int>> perms;
    do {
      perms.push_back(axes);
    } while (std::next_permutation(axes.begin(), axes.end()));
    for (const auto& pa : perms)
      for (int signs = 0; signs < (1 << n_); ++signs) {
        Frame f;
        for (int i = 0; i < n_; ++i)
          f.push_back({pa[i], (signs >> i & 1) ? -1 : 1});
        frames_.push_back(std::move(f));
      }
    for (size_t i = 0; i < frames_.size(); ++i) frame_id_[key(frames_[i])] = static_cast<int>(i);
  }

  using Frame = std::vector<std::pair<int, int>>;  // (axis, sign) per position

  long long key(const Frame& f) const {
    long long k = 0;
    for (auto [ax, sg] : f) k = k * (2 * n_) + ax * 2 + (sg < 0 ? 1 : 0);
    return k;
  }

  int apply_vertex(const ToroidMap& m, int vid) const {
    std::vector<int> x(n_), y(n_, 0);
    for (int i = 0; i < n_; ++i) {
      x[i] = vid % s_;
      vid /= s_;
    }
    for (int a = 0; a < n_; ++a) y[m.axis[a]] = ((m.sign[a] * x[a]) % s_ + s_) % s_;
    int out = 0;
    for (int i = n_ - 1; i >= 0; --i) out = out * s_ + (y[i] + m.trans[i]) % s_;
    return out;
  }

  Perm flag_perm(const ToroidMap& m) const {
    int fc = static_cast<int>(frames_.size());
    std::vector<int32_t> img(flag_count());
    for (int v = 0; v < vertex_count(); ++v) {
      int v2 = apply_vertex(m, v);
      for (int fi = 0; fi < fc; ++fi) {
        Frame f2;
        for (auto [ax, sg] : frames_[fi]) f2.push_back({m.axis[ax], sg * m.sign[ax]});
        img[v * fc + fi] = v2 * fc + frame_id_.at(key(f2));
      }
    }
    return Perm::from_images(std::move(img));
  }

  void build_generators() {
    auto ident = [&] {
      ToroidMap m;
      m.axis.resize(n_);
      std::iota(m.axis.begin(), m.axis.end(), 0);
      m.sign.assign(n_, 1);
      m.trans.assign(n_, 0);
      return m;
    };
    ToroidMap r0 = ident();  // (x1,...) -> (1-x1, ...)
    r0.sign[0] = -1;
    r0.trans[0] = 1;
    maps_.push_back(r0);
    for (int i = 1; i <= n_ - 1; ++i) {  // swap x_i, x_{i+1}
      ToroidMap ri = ident();
      std::swap(ri.axis[i - 1], ri.axis[i]);
      maps_.push_back(ri);
    }
    ToroidMap rn = ident();  // negate x_n
    rn.sign[n_ - 1] = -1;
    maps_.push_back(rn);

    std::vector<Perm> gens;
    flag_vertex_.resize(flag_count());
    int fc = static_cast<int>(frames_.size());
    for (int v = 0; v < vertex_count(); ++v)
      for (int fi = 0; fi < fc; ++fi) flag_vertex_[v * fc + fi] = v;
    for (const auto& m : maps_) gens.push_back(flag_perm(m));
    sggi_ = check_string(gens);
  }

  int n_, s_;
  std::vector<Frame> frames_;
  std::map<long long, int> frame_id_;
  std::vector<ToroidMap> maps_;
  std::vector<int32_t> flag_vertex_;
  Sggi sggi_;
};

// {4,3^(n-2),4}_(s,0^(n-1)) as a rank n+1 sggi on flags.
inline ToroidModel cubic_toroid(int n, int s) { return ToroidModel(n, s); }

// {4,4}_(s,0): the n = 2 cubic toroid.
inline ToroidModel torus44(int s) { return ToroidModel(2, s); }

}  // namespace polydual

#endif
