// Permutation representation graphs: edge-labeled multigraphs whose label
// classes are partial matchings, conversion to sggis, text/DOT serialization,
// and generators for every graph family the library ships.
//
// Vertex numbering in the generated families follows the source figures
// exactly, so displayed permutations are usable as test vectors bit for bit.

#ifndef POLYDUAL_CPR_HPP
#define POLYDUAL_CPR_HPP

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "polydual/error.hpp"
#include "polydual/sggi.hpp"

namespace polydual {

struct CprEdge {
  int a = 0, b = 0;  // 1-based vertices, a != b
  int label = 0;     // rank index 0..n-1
  auto operator<=>(const CprEdge&) const = default;
};

struct CprGraph {
  int vertex_count = 0;
  int rank = 0;
  std::vector<CprEdge> edges;

  bool operator==(const CprGraph&) const = default;
};

struct CprViolation {
  std::string message;
};

// Matching condition per label plus duplicate-edge detection. Returns the
// first violation instead of throwing; an empty optional means valid.
inline std::optional<CprViolation> validate(const CprGraph& g) {
  for (const auto& e : g.edges) {
    if (e.a < 1 || e.a > g.vertex_count || e.b < 1 || e.b > g.vertex_count)
      return CprViolation{"edge {" + std::to_string(e.a) + "," + std::to_string(e.b) +
                          "} leaves 1.." + std::to_string(g.vertex_count)};
    if (e.a == e.b) return CprViolation{"loop at vertex " + std::to_string(e.a)};
    if (e.label < 0 || e.label >= g.rank)
      return CprViolation{"label " + std::to_string(e.label) + " outside 0.." +
                          std::to_string(g.rank - 1)};
  }
  for (int l = 0; l < g.rank; ++l) {
    std::vector<int> touch(g.vertex_count + 1, 0);
    for (const auto& e : g.edges) {
      if (e.label != l) continue;
      if (++touch[e.a] > 1)
        return CprViolation{"vertex " + std::to_string(e.a) + " lies on two " +
                            std::to_string(l) + "-edges"};
      if (++touch[e.b] > 1)
        return CprViolation{"vertex " + std::to_string(e.b) + " lies on two " +
                            std::to_string(l) + "-edges"};
    }
  }
  std::vector<CprEdge> sorted = g.edges;
  std::sort(sorted.begin(), sorted.end());
  for (size_t i = 1; i < sorted.size(); ++i)
    if (sorted[i] == sorted[i - 1])
      return CprViolation{"duplicate edge {" + std::to_string(sorted[i].a) + "," +
                          std::to_string(sorted[i].b) + "} label " +
                          std::to_string(sorted[i].label)};
  return std::nullopt;
}

// rho_i = product of the transpositions over the i-labeled edges. Every label
// must occur, otherwise some generator would be the identity.
inline Sggi to_sggi(const CprGraph& g, long long element_cap = kDefaultElementCap) {
  if (auto v = validate(g)) fail(errc::bad_parameter, "invalid graph: " + v->message);
  std::vector<Perm> gens;
  for (int l = 0; l < g.rank; ++l) {
    std::vector<std::vector<int>> cycles;
    for (const auto& e : g.edges)
      if (e.label == l) cycles.push_back({e.a, e.b});
    if (cycles.empty())
      fail(errc::identity_generator, "label " + std::to_string(l) + " has no edges");
    gens.push_back(Perm::from_cycles(g.vertex_count, cycles));
  }
  return check_string(gens, element_cap);
}

// --- families ---------------------------------------------------------------

// Type {p,p} polyhedra on p vertices with (rho0 rho2 rho1)^6 dualizing: the
// diamond on vertices 1..6 and a tail of alternating 1-edges and double
// 0,2-edges, the tail ending as the parity of p dictates.
inline CprGraph family_all_p(int p) {
  if (p < 7) fail(errc::bad_parameter, "family all-p needs p >= 7");
  CprGraph g{p, 3, {}};
  auto add = [&](int a, int b, int l) { g.edges.push_back({a, b, l}); };
  add(1, 2, 0);
  add(3, 4, 0);
  add(5, 6, 0);
  add(1, 5, 2);
  add(2, 6, 2);
  add(3, 4, 2);
  add(2, 3, 1);
  add(4, 5, 1);
  for (int j = 3; 2 * j + 1 <= p; ++j) add(2 * j, 2 * j + 1, 1);
  int last_double = (p % 2 == 1) ? p - 1 : p;
  for (int j = 3; 2 * j + 2 <= last_double; ++j) {
    add(2 * j + 1, 2 * j + 2, 0);
    add(2 * j + 1, 2 * j + 2, 2);
  }
  return g;
}

// Block coordinates of the chained even-type family: vertex i of block j.
inline int even_k_point(int p, int i, int j) { return (j - 1) * (2 * p - 6) + i; }

// One block of the even-type family: chain 1..p-4, the 0,2-diamond on
// p-4..p-1, and the tail to 2p-6.
inline std::vector<CprEdge> even_k_block_edges(int p) {
  std::vector<CprEdge> e;
  for (int i = 2; i + 1 <= p - 5; i += 2) e.push_back({i, i + 1, 0});
  e.push_back({p - 4, p - 2, 0});
  e.push_back({p - 3, p - 1, 0});
  for (int i = 1; i + 1 <= p - 4; i += 2) e.push_back({i, i + 1, 1});
  e.push_back({p - 1, p, 1});
  for (int i = p + 1; i + 1 <= 2 * p - 6; i += 2) e.push_back({i, i + 1, 1});
  e.push_back({p - 4, p - 3, 2});
  e.push_back({p - 2, p - 1, 2});
  for (int i = p; i + 1 <= 2 * p - 7; i += 2) e.push_back({i, i + 1, 2});
  return e;
}

// k(p-4) blocks arranged cyclically, consecutive blocks joined by a 1-edge
// from (p-2, j) to (p-3, j+1). sigma = (rho0 rho2 rho1)^{p-4} then has order
// 2k and sigma^k is dualizing.
inline CprGraph family_even_k(int p, int k) {
  if (p < 6 || p % 2 != 0) fail(errc::bad_parameter, "family even-k needs even p >= 6");
  if (k < 1 || k % 2 != 1) fail(errc::bad_parameter, "family even-k needs odd k >= 1");
  int blocks = k * (p - 4);
  int block_size = 2 * p - 6;
  CprGraph g{blocks * block_size, 3, {}};
  std::vector<CprEdge> block = even_k_block_edges(p);
  for (int j = 1; j <= blocks; ++j)
    for (const auto& e : block)
      g.edges.push_back({even_k_point(p, e.a, j), even_k_point(p, e.b, j), e.label});
  for (int j = 1; j <= blocks; ++j) {
    int jn = j % blocks + 1;
    g.edges.push_back({even_k_point(p, p - 2, j), even_k_point(p, p - 3, jn), 1});
  }
  return g;
}

// Rank-n polytopes on n+5 points: 0/2-square on 1..4, a chain with rising
// labels, and an (n-3)/(n-1)-square on n+2..n+5. Interchanging label i with
// n-1-i mirrors the graph.
inline CprGraph family_rank_n(int n) {
  if (n < 5) fail(errc::bad_parameter, "family rank-n needs n >= 5");
  CprGraph g{n + 5, n, {}};
  auto add = [&](int a, int b, int l) { g.edges.push_back({a, b, l}); };
  add(2, 3, 0);
  add(1, 4, 0);
  add(1, 2, 2);
  add(3, 4, 2);
  for (int j = 4; j <= n + 1; ++j) add(j, j + 1, j - 3);
  add(n + 2, n + 3, n - 3);
  add(n + 4, n + 5, n - 3);
  add(n + 2, n + 5, n - 1);
  add(n + 3, n + 4, n - 1);
  return g;
}

// The Petrie-contracted relatives of the simplex with group S_{n+3}: a chain
// whose labels run 1, 0, 1, 2, 3, ..., n-1, n-2.
inline CprGraph family_petrie_simplex(int n) {
  if (n < 5) fail(errc::bad_parameter, "family petrie-simplex needs n >= 5");
  CprGraph g{n + 3, n, {}};
  g.edges.push_back({1, 2, 1});
  g.edges.push_back({2, 3, 0});
  g.edges.push_back({3, 4, 1});
  for (int j = 4; j <= n + 1; ++j) g.edges.push_back({j, j + 1, j - 2});
  g.edges.push_back({n + 2, n + 3, n - 2});
  return g;
}

// Symmetric group on n+3 points: the 0/2-square plus a plain rising chain.
inline CprGraph family_n3plus(int n) {
  if (n < 4) fail(errc::bad_parameter, "family n3plus needs n >= 4");
  CprGraph g{n + 3, n, {}};
  auto add = [&](int a, int b, int l) { g.edges.push_back({a, b, l}); };
  add(2, 3, 0);
  add(1, 4, 0);
  add(1, 2, 2);
  add(3, 4, 2);
  for (int j = 4; j <= n + 2; ++j) add(j, j + 1, j - 3);
  return g;
}

// Symmetric group on n+4 points; (rho_{n-2} rho_{n-1} rho_{n-2} rho_{n-3}
// rho_{n-2}) is a 5-cycle on the last five points.
inline CprGraph family_n4plus(int n) {
  if (n < 6) fail(errc::bad_parameter, "family n4plus needs n >= 6");
  CprGraph g{n + 4, n, {}};
  auto add = [&](int a, int b, int l) { g.edges.push_back({a, b, l}); };
  add(2, 3, 0);
  add(1, 4, 0);
  add(1, 2, 2);
  add(3, 4, 2);
  for (int j = 4; j <= n + 2; ++j) add(j, j + 1, j - 3);
  add(n + 3, n + 4, n - 2);
  return g;
}

// --- serialization -----------------------------------------------------------
// Header `cpr rank=<n> vertices=<k>`, then one edge per line `a -i- b`.
// Double edges are two lines. The header may be omitted on parse, in which
// case rank and vertex count are inferred.

inline std::string serialize(const CprGraph& g) {
  std::ostringstream os;
  os << "cpr rank=" << g.rank << " vertices=" << g.vertex_count << "\n";
  for (const auto& e : g.edges) os << e.a << " -" << e.label << "- " << e.b << "\n";
  return os.str();
}

inline CprGraph parse_cpr(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  CprGraph g;
  bool have_header = false;
  int max_vertex = 0, max_label = -1;
  while (std::getline(is, line)) {
    ++lineno;
    std::string t = line;
    t.erase(0, t.find_first_not_of(" \t\r"));
    while (!t.empty() && (t.back() == '\r' || t.back() == ' ' || t.back() == '\t')) t.pop_back();
    if (t.empty() || t[0] == '#') continue;
    if (t.rfind("cpr", 0) == 0) {
      int r = -1, v = -1;
      if (std::sscanf(t.c_str(), "cpr rank=%d vertices=%d", &r, &v) != 2 || r < 1 || v < 0)
        fail(errc::parse_error,
             "line " + std::to_string(lineno) + ": bad header, expected `cpr rank=<n> vertices=<k>`");
      g.rank = r;
      g.vertex_count = v;
      have_header = true;
      continue;
    }
    int a = 0, b = 0, l = -1;
    if (std::sscanf(t.c_str(), "%d -%d- %d", &a, &l, &b) != 3)
      fail(errc::parse_error,
           "line " + std::to_string(lineno) + ": expected edge `a -i- b`, got `" + t + "`");
    g.edges.push_back({a, b, l});
    max_vertex = std::max({max_vertex, a, b});
    max_label = std::max(max_label, l);
  }
  if (!have_header) {
    g.rank = max_label + 1;
    g.vertex_count = max_vertex;
  }
  if (auto v = validate(g)) fail(errc::parse_error, "invalid graph: " + v->message);
  return g;
}

// DOT export for visual inspection. Every vertex appears as an explicit node
// statement; multi-edges appear once per labeled edge.
inline std::string to_dot(const CprGraph& g) {
  std::ostringstream os;
  os << "graph cpr {\n";
  for (int v = 1; v <= g.vertex_count; ++v) os << "  " << v << ";\n";
  for (const auto& e : g.edges)
    os << "  " << e.a << " -- " << e.b << " [label=\"" << e.label << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace polydual

#endif
