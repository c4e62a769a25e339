// Finitely presented quotients of string Coxeter groups and HLT-style
// Todd-Coxeter coset enumeration to a permutation representation.
//
// All generators are involutions; the g^2 relators are implicit and the coset
// table has one self-inverse column per generator. Enumeration proceeds over
// live cosets in increasing order (relator scans, then forced definitions),
// with coincidences processed through a union-find, so tables are
// reproducible. Enumeration that passes the coset cap reports cap_exceeded --
// the honest answer for a possibly-infinite group.

#ifndef POLYDUAL_FPGROUP_HPP
#define POLYDUAL_FPGROUP_HPP

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "polydual/error.hpp"
#include "polydual/perm.hpp"
#include "polydual/sggi.hpp"

namespace polydual {

inline constexpr long long kDefaultCosetCap = 2'000'000;
inline constexpr int kInfinity = -1;  // Schläfli entry for an unbounded period

struct Presentation {
  int ngens = 0;
  std::vector<std::vector<int>> relators;  // words over generator indices

  bool operator==(const Presentation&) const = default;
};

// String Coxeter presentation [p1, ..., p_{n-1}]: (rho_{i-1} rho_i)^{p_i} for
// finite entries, (rho_i rho_j)^2 for |i-j| >= 2; infinity entries contribute
// no relator.
inline Presentation coxeter(const std::vector<int>& type) {
  Presentation p;
  p.ngens = static_cast<int>(type.size()) + 1;
  for (size_t i = 0; i < type.size(); ++i) {
    if (type[i] == kInfinity) continue;
    if (type[i] < 2) fail(errc::bad_parameter, "Schläfli entry must be >= 2 or infinity");
    std::vector<int> w;
    for (int k = 0; k < type[i]; ++k) {
      w.push_back(static_cast<int>(i));
      w.push_back(static_cast<int>(i) + 1);
    }
    p.relators.push_back(std::move(w));
  }
  for (int i = 0; i < p.ngens; ++i)
    for (int j = i + 2; j < p.ngens; ++j) p.relators.push_back({i, j, i, j});
  return p;
}

inline Presentation add_relator(Presentation p, std::vector<int> word) {
  for (int c : word)
    if (c < 0 || c >= p.ngens) fail(errc::bad_parameter, "relator index out of range");
  p.relators.push_back(std::move(word));
  return p;
}

// Largest common quotient as a string group: relators of both presentations
// over the shared generators.
inline Presentation comix_presentation(const Presentation& a, const Presentation& b) {
  if (a.ngens != b.ngens) fail(errc::rank_mismatch, "comix: generator counts differ");
  Presentation p = a;
  for (const auto& w : b.relators)
    if (std::find(p.relators.begin(), p.relators.end(), w) == p.relators.end())
      p.relators.push_back(w);
  return p;
}

// The quotient of [inf, inf] forcing (rho0 rho2 rho1)^6 to be dualizing:
// relators (rho0 rho2 rho1)^6 rho_i (rho1 rho2 rho0)^6 rho_{2-i}.
inline Presentation dualizing_quotient_presentation() {
  Presentation p = coxeter({kInfinity, kInfinity});
  for (int i = 0; i <= 2; ++i) {
    std::vector<int> w;
    for (int k = 0; k < 6; ++k) {
      w.push_back(0);
      w.push_back(2);
      w.push_back(1);
    }
    w.push_back(i);
    for (int k = 0; k < 6; ++k) {
      w.push_back(1);
      w.push_back(2);
      w.push_back(0);
    }
    w.push_back(2 - i);
    p.relators.push_back(std::move(w));
  }
  return p;
}

struct CosetAction {
  int cosets = 0;
  std::vector<Perm> gens;  // permutation of cosets per generator
};

namespace detail {

class CosetTable {
 public:
  CosetTable(int ngens, long long cap) : ngens_(ngens), cap_(cap) {
    table_.push_back(std::vector<int32_t>(ngens_, -1));
    rep_.push_back(0);
  }

  int32_t find(int32_t c) {
    while (rep_[c] != c) c = rep_[c] = rep_[rep_[c]];
    return c;
  }

  void scan(int32_t c, const std::vector<int>& word) {
    c = find(c);
    int32_t f = c, b = c;
    int i = 0, j = static_cast<int>(word.size()) - 1;
    for (;;) {
      while (i <= j && table_[f][word[i]] >= 0) f = find(table_[f][word[i++]]);
      while (j >= i && table_[b][word[j]] >= 0) b = find(table_[b][word[j--]]);
      if (i > j) {
        if (f != b) {
          merge(f, b);
          drain();
        }
        return;
      }
      if (i == j) {
        set_entry(f, word[i], b);
        drain();
        return;
      }
      int32_t d = define();
      set_entry(f, word[i], d);
      drain();
      f = find(f);
      b = find(b);
      if (find(c) != c) return;  // the scanned coset collapsed; a later scan covers its rep
    }
  }

  void fill(int32_t c) {
    for (int g = 0; g < ngens_; ++g) {
      c = find(c);
      if (table_[c][g] < 0) {
        int32_t d = define();
        set_entry(c, g, d);
        drain();
      }
    }
  }

  bool live(int32_t c) { return find(c) == c; }
  int32_t size() const { return static_cast<int32_t>(table_.size()); }

  CosetAction compress() {
    std::vector<int32_t> id(table_.size(), -1);
    int32_t live_count = 0;
    for (int32_t c = 0; c < size(); ++c)
      if (find(c) == c) id[c] = live_count++;
    CosetAction act;
    act.cosets = live_count;
    for (int g = 0; g < ngens_; ++g) {
      std::vector<int32_t> img(live_count);
      for (int32_t c = 0; c < size(); ++c)
        if (id[c] >= 0) img[id[c]] = id[find(table_[c][g])];
      act.gens.push_back(Perm::from_images(std::move(img)));
    }
    return act;
  }

 private:
  int32_t define() {
    if (static_cast<long long>(table_.size()) >= cap_)
      fail(errc::cap_exceeded,
           "coset enumeration passed cap " + std::to_string(cap_) +
               "; the group may be infinite");
    table_.push_back(std::vector<int32_t>(ngens_, -1));
    rep_.push_back(size() - 1);
    return size() - 1;
  }

  void merge(int32_t a, int32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    rep_[b] = a;
    dead_.push_back(b);
  }

  void set_entry(int32_t c, int g, int32_t d) {
    c = find(c);
    d = find(d);
    int32_t cc = table_[c][g] >= 0 ? find(table_[c][g]) : -1;
    int32_t dd = table_[d][g] >= 0 ? find(table_[d][g]) : -1;
    if (cc >= 0 && cc != d) merge(cc, d);
    if (dd >= 0 && dd != c) merge(dd, c);
    c = find(c);
    d = find(d);
    if (table_[c][g] < 0) table_[c][g] = d;
    if (table_[d][g] < 0) table_[d][g] = c;
  }

  // transfer the table rows of dead cosets onto their representatives
  void drain() {
    while (!dead_.empty()) {
      int32_t b = dead_.back();
      dead_.pop_back();
      for (int g = 0; g < ngens_; ++g) {
        int32_t d = table_[b][g];
        if (d >= 0) set_entry(find(b), g, find(d));
      }
    }
  }

  int ngens_;
  long long cap_;
  std::vector<std::vector<int32_t>> table_;
  std::vector<int32_t> rep_;
  std::vector<int32_t> dead_;
};

}  // namespace detail

// Enumerates cosets of <subgroup_gens> (trivial subgroup by default, giving
// the regular action and |cosets| = |group|). Fails with cap_exceeded when
// the table would pass `coset_cap` live-or-dead rows.
inline CosetAction todd_coxeter(const Presentation& p,
                                const std::vector<std::vector<int>>& subgroup_gens = {},
                                long long coset_cap = kDefaultCosetCap) {
  detail::CosetTable t(p.ngens, coset_cap);
  std::vector<std::vector<int>> rels;
  for (int g = 0; g < p.ngens; ++g) rels.push_back({g, g});
  for (const auto& r : p.relators) rels.push_back(r);
  for (const auto& w : subgroup_gens) t.scan(0, w);
  for (int32_t c = 0; c < t.size(); ++c) {
    if (!t.live(c)) continue;
    for (const auto& r : rels) {
      t.scan(c, r);
      if (!t.live(c)) break;
    }
    if (t.live(c)) t.fill(c);
  }
  return t.compress();
}

// The enumerated regular action as an sggi (requires every generator to stay
// an involution, i.e. the presentation must not collapse a generator).
inline Sggi sggi_from_presentation(const Presentation& p,
                                   long long coset_cap = kDefaultCosetCap,
                                   long long element_cap = kDefaultElementCap) {
  CosetAction act = todd_coxeter(p, {}, coset_cap);
  return check_string(act.gens, element_cap);
}

// FAP probe: adding rho_i = eps for i >= m must yield exactly the group of the
// m-faces, i.e. the quotient order equals `facet_group_order`.
inline bool check_fap(const Presentation& p, int m, unsigned long long facet_group_order,
                      long long coset_cap = kDefaultCosetCap) {
  Presentation q = p;
  for (int i = m; i < p.ngens; ++i) q.relators.push_back({i});
  CosetAction act = todd_coxeter(q, {}, coset_cap);
  return static_cast<unsigned long long>(act.cosets) == facet_group_order;
}

// --- text format -------------------------------------------------------------
// `gens n`, then one relator per line as space-separated indices.

inline std::string to_text(const Presentation& p) {
  std::ostringstream os;
  os << "gens " << p.ngens << "\n";
  for (const auto& r : p.relators) {
    for (size_t i = 0; i < r.size(); ++i) os << (i ? " " : "") << r[i];
    os << "\n";
  }
  return os.str();
}

inline Presentation parse_presentation(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  Presentation p;
  bool have_header = false;
  while (std::getline(is, line)) {
    ++lineno;
    std::string t = line;
    t.erase(0, t.find_first_not_of(" \t\r"));
    if (t.empty() || t[0] == '#') continue;
    if (!have_header) {
      std::istringstream hs(t);
      std::string w;
      if (!(hs >> w >> p.ngens) || w != "gens" || p.ngens < 1)
        fail(errc::parse_error, "line " + std::to_string(lineno) + ": expected `gens n`");
      have_header = true;
      continue;
    }
    std::istringstream ls(t);
    std::vector<int> rel;
    int c;
    while (ls >> c) {
      if (c < 0 || c >= p.ngens)
        fail(errc::parse_error, "line " + std::to_string(lineno) + ": index out of range");
      rel.push_back(c);
    }
    p.relators.push_back(std::move(rel));
  }
  if (!have_header) fail(errc::parse_error, "missing `gens n` header");
  return p;
}

}  // namespace polydual

#endif
