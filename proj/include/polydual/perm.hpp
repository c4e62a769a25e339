// Exact permutation arithmetic on the points 1..n.
//
// Points are 1-based in all I/O and cycle notation, matching the labeled
// figures this library reproduces; storage is 0-based. Products compose left
// to right throughout: (a * b) means "apply a, then b", so the action is on
// the right, and a word r0 r2 r1 acts as x -> r1(r2(r0(x))).

#ifndef POLYDUAL_PERM_HPP
#define POLYDUAL_PERM_HPP

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "polydual/error.hpp"

namespace polydual {

class Perm {
 public:
  Perm() = default;
  explicit Perm(int degree) : img_(degree) {
    std::iota(img_.begin(), img_.end(), 0);
  }

  static Perm identity(int degree) { return Perm(degree); }

  // images[i] is the 0-based image of point i.
  static Perm from_images(std::vector<int32_t> images) {
    Perm p;
    p.img_ = std::move(images);
    p.check_bijection();
    return p;
  }

  // cycles are 1-based; unmentioned points are fixed.
  static Perm from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
    std::vector<int32_t> img(degree);
    std::iota(img.begin(), img.end(), 0);
    for (const auto& c : cycles) {
      for (size_t i = 0; i < c.size(); ++i) {
        int a = c[i], b = c[(i + 1) % c.size()];
        if (a < 1 || a > degree || b < 1 || b > degree)
          fail(errc::bad_parameter, "cycle point out of range 1.." + std::to_string(degree));
        if (img[a - 1] != a - 1)
          fail(errc::bad_parameter, "point " + std::to_string(a) + " repeated in cycles");
        img[a - 1] = b - 1;
      }
    }
    return from_images(std::move(img));
  }

  int degree() const { return static_cast<int>(img_.size()); }
  int32_t operator()(int32_t x) const { return img_[x]; }
  const std::vector<int32_t>& images() const { return img_; }

  bool is_identity() const {
    for (int32_t i = 0; i < degree(); ++i)
      if (img_[i] != i) return false;
    return true;
  }

  // x -> next(this(x)); the left-to-right product (*this) * next.
  Perm then(const Perm& next) const {
    if (degree() != next.degree())
      fail(errc::degree_mismatch, "compose: degrees " + std::to_string(degree()) + " vs " +
                                      std::to_string(next.degree()));
    Perm r;
    r.img_.resize(img_.size());
    for (size_t i = 0; i < img_.size(); ++i) r.img_[i] = next.img_[img_[i]];
    return r;
  }

  Perm inverse() const {
    Perm r;
    r.img_.resize(img_.size());
    for (int32_t i = 0; i < degree(); ++i) r.img_[img_[i]] = i;
    return r;
  }

  // a^-1 * this * a
  Perm conjugated_by(const Perm& a) const { return a.inverse().then(*this).then(a); }

  // Disjoint cycles, fixed points omitted, each cycle starting at its least
  // point, cycles sorted by least point. 1-based.
  std::vector<std::vector<int>> cycles() const {
    std::vector<bool> seen(img_.size(), false);
    std::vector<std::vector<int>> out;
    for (int32_t i = 0; i < degree(); ++i) {
      if (seen[i] || img_[i] == i) continue;
      std::vector<int> c;
      int32_t j = i;
      do {
        seen[j] = true;
        c.push_back(j + 1);
        j = img_[j];
      } while (j != i);
      out.push_back(std::move(c));
    }
    return out;
  }

  // Least m >= 1 with this^m = identity; lcm of cycle lengths.
  long long order() const {
    long long m = 1;
    std::vector<bool> seen(img_.size(), false);
    for (int32_t i = 0; i < degree(); ++i) {
      if (seen[i]) continue;
      long long len = 0;
      int32_t j = i;
      do {
        seen[j] = true;
        ++len;
        j = img_[j];
      } while (j != i);
      long long g = std::gcd(m, len);
      if (m / g > (1LL << 62) / len)
        fail(errc::overflow, "permutation order exceeds 2^62");
      m = m / g * len;
    }
    return m;
  }

  Perm power(long long e) const {
    Perm acc = identity(degree());
    Perm base = *this;
    if (e < 0) {
      base = inverse();
      e = -e;
    }
    while (e > 0) {
      if (e & 1) acc = acc.then(base);
      base = base.then(base);
      e >>= 1;
    }
    return acc;
  }

  bool operator==(const Perm&) const = default;
  // lexicographic by image sequence; used for canonical witnesses
  auto operator<=>(const Perm& o) const { return img_ <=> o.img_; }

  // "(1,7,6)(2,4,5,3)"; "()" for the identity.
  std::string cycle_string() const {
    auto cs = cycles();
    if (cs.empty()) return "()";
    std::string s;
    for (const auto& c : cs) {
      s += '(';
      for (size_t i = 0; i < c.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(c[i]);
      }
      s += ')';
    }
    return s;
  }

  // Whitespace-insensitive parse of cycle notation.
  static Perm parse_cycles(int degree, std::string_view text) {
    std::vector<std::vector<int>> cycles;
    size_t i = 0;
    auto skip_ws = [&] {
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    while (i < text.size()) {
      if (text[i] != '(') fail(errc::parse_error, "expected '(' in cycle notation");
      ++i;
      std::vector<int> cyc;
      skip_ws();
      while (i < text.size() && text[i] != ')') {
        size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) fail(errc::parse_error, "expected point number in cycle");
        cyc.push_back(std::stoi(std::string(text.substr(start, i - start))));
        skip_ws();
        if (i < text.size() && text[i] == ',') {
          ++i;
          skip_ws();
        }
      }
      if (i >= text.size()) fail(errc::parse_error, "unterminated cycle");
      ++i;  // ')'
      if (cyc.size() == 1) fail(errc::parse_error, "singleton cycle; fixed points are omitted");
      if (!cyc.empty()) cycles.push_back(std::move(cyc));
      skip_ws();
    }
    return from_cycles(degree, cycles);
  }

  uint64_t hash() const {
    uint64_t h = 1469598103934665603ull;
    for (int32_t v : img_) {
      h ^= static_cast<uint64_t>(v) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }

 private:
  void check_bijection() const {
    std::vector<bool> seen(img_.size(), false);
    for (int32_t v : img_) {
      if (v < 0 || v >= degree() || seen[v])
        fail(errc::bad_parameter, "images do not form a bijection");
      seen[v] = true;
    }
  }

  std::vector<int32_t> img_;
};

inline Perm compose(const Perm& a, const Perm& b) { return a.then(b); }

inline long long order_of(const Perm& g) { return g.order(); }

inline Perm commutator(const Perm& a, const Perm& b) {
  // a^-1 b^-1 a b, left-to-right
  return a.inverse().then(b.inverse()).then(a).then(b);
}

// Evaluates a word of generator indices left to right.
inline Perm evaluate_word(const std::vector<Perm>& gens, const std::vector<int>& word,
                          int degree) {
  Perm w = Perm::identity(degree);
  for (int idx : word) {
    if (idx < 0 || idx >= static_cast<int>(gens.size()))
      fail(errc::bad_parameter, "word index " + std::to_string(idx) + " out of range");
    w = w.then(gens[idx]);
  }
  return w;
}

}  // namespace polydual

#endif
