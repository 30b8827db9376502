// Undirected simple graphs: packed adjacency bitsets, named families,
// structural operations and degree statistics.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace lapspec {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(long num, long den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Immutable after construction; all operations below are pure.
class Graph {
 public:
  explicit Graph(int n) : n_(n), words_(static_cast<size_t>(n + 63) / 64) {
    if (n < 1) throw std::invalid_argument("Graph: order must be >= 1");
    bits_.assign(static_cast<size_t>(n) * words_, 0);
  }

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
      if (u < 0 || u >= n || v < 0 || v >= n)
        throw std::invalid_argument("from_edges: vertex out of range in pair (" +
                                    std::to_string(u) + "," + std::to_string(v) + ")");
      if (u == v)
        throw std::invalid_argument("from_edges: self-loop pair (" +
                                    std::to_string(u) + "," + std::to_string(v) + ")");
      g.set_edge(u, v);
    }
    return g;
  }

  // Labeled graph from an edge bitmask in graph6 column order:
  // bit e corresponds to the e-th pair (0,1),(0,2),(1,2),(0,3),...
  static Graph from_bitmask(int n, std::uint64_t mask) {
    Graph g(n);
    int e = 0;
    for (int v = 1; v < n; ++v)
      for (int u = 0; u < v; ++u, ++e)
        if (mask >> e & 1) g.set_edge(u, v);
    return g;
  }

  int order() const { return n_; }

  int size() const {
    long s = 0;
    for (int v = 0; v < n_; ++v) s += degree(v);
    return static_cast<int>(s / 2);
  }

  bool has_edge(int u, int v) const {
    return bits_[static_cast<size_t>(u) * words_ + v / 64] >> (v % 64) & 1;
  }

  int degree(int v) const {
    int d = 0;
    for (size_t w = 0; w < words_; ++w)
      d += __builtin_popcountll(bits_[static_cast<size_t>(v) * words_ + w]);
    return d;
  }

  std::vector<int> neighbors(int v) const {
    std::vector<int> out;
    for (int u = 0; u < n_; ++u)
      if (has_edge(v, u)) out.push_back(u);
    return out;
  }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int v = 1; v < n_; ++v)
      for (int u = 0; u < v; ++u)
        if (has_edge(u, v)) out.emplace_back(u, v);
    return out;
  }

  std::uint64_t edge_bitmask() const {
    if (n_ > 11) throw std::invalid_argument("edge_bitmask: order too large for 64 bits");
    std::uint64_t mask = 0;
    int e = 0;
    for (int v = 1; v < n_; ++v)
      for (int u = 0; u < v; ++u, ++e)
        if (has_edge(u, v)) mask |= std::uint64_t{1} << e;
    return mask;
  }

  Graph complement() const {
    Graph g(n_);
    for (int v = 1; v < n_; ++v)
      for (int u = 0; u < v; ++u)
        if (!has_edge(u, v)) g.set_edge(u, v);
    return g;
  }

  Graph delete_edge(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v || !has_edge(u, v))
      throw std::invalid_argument("delete_edge: edge (" + std::to_string(u) + "," +
                                  std::to_string(v) + ") not present");
    Graph g = *this;
    g.clear_edge(u, v);
    return g;
  }

  Graph relabel(const std::vector<int>& perm) const {
    Graph g(n_);
    for (auto [u, v] : edges()) g.set_edge(perm[u], perm[v]);
    return g;
  }

  int common_neighbors(int u, int v) const {
    if (u == v) throw std::invalid_argument("common_neighbors: u == v");
    int c = 0;
    for (size_t w = 0; w < words_; ++w)
      c += __builtin_popcountll(bits_[static_cast<size_t>(u) * words_ + w] &
                                bits_[static_cast<size_t>(v) * words_ + w]);
    return c;
  }

  bool operator==(const Graph& o) const { return n_ == o.n_ && bits_ == o.bits_; }
  bool operator!=(const Graph& o) const { return !(*this == o); }

 private:
  void set_edge(int u, int v) {
    bits_[static_cast<size_t>(u) * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
    bits_[static_cast<size_t>(v) * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
  }
  void clear_edge(int u, int v) {
    bits_[static_cast<size_t>(u) * words_ + v / 64] &= ~(std::uint64_t{1} << (v % 64));
    bits_[static_cast<size_t>(v) * words_ + u / 64] &= ~(std::uint64_t{1} << (u % 64));
  }

  friend Graph disjoint_union(const Graph&, const Graph&);
  friend Graph join(const Graph&, const Graph&);

  int n_;
  size_t words_;
  std::vector<std::uint64_t> bits_;
};

inline Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.order() + b.order());
  for (auto [u, v] : a.edges()) g.set_edge(u, v);
  for (auto [u, v] : b.edges()) g.set_edge(a.order() + u, a.order() + v);
  return g;
}

inline Graph join(const Graph& a, const Graph& b) {
  Graph g = disjoint_union(a, b);
  for (int u = 0; u < a.order(); ++u)
    for (int v = 0; v < b.order(); ++v) g.set_edge(u, a.order() + v);
  return g;
}

// Degree statistics. delta2/k are defined for n >= 2 only; for n = 1 the
// accessors report delta1 = 0 and delta2 = -1, k = 0.
struct DegreeStats {
  std::vector<int> degrees;  // sorted descending
  int delta1 = 0;
  int delta2 = -1;
  int k = 0;  // largest index (1-based) with d_2 = ... = d_k = delta2
  Rat avg_deg;
};

inline DegreeStats degree_stats(const Graph& g) {
  DegreeStats s;
  s.degrees.resize(g.order());
  for (int v = 0; v < g.order(); ++v) s.degrees[v] = g.degree(v);
  std::sort(s.degrees.begin(), s.degrees.end(), std::greater<int>());
  s.delta1 = s.degrees[0];
  if (g.order() >= 2) {
    s.delta2 = s.degrees[1];
    s.k = 2;
    while (s.k < g.order() && s.degrees[s.k] == s.delta2) ++s.k;
  }
  s.avg_deg = make_rat(2L * g.size(), g.order());
  return s;
}

inline bool is_connected(const Graph& g) {
  std::vector<char> seen(g.order(), 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int count = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int u = 0; u < g.order(); ++u)
      if (g.has_edge(v, u) && !seen[u]) {
        seen[u] = 1;
        ++count;
        q.push(u);
      }
  }
  return count == g.order();
}

struct Component {
  Graph graph;
  std::vector<int> vertex_map;  // component vertex -> original vertex
};

inline std::vector<Component> components(const Graph& g) {
  std::vector<int> comp(g.order(), -1);
  int nc = 0;
  for (int s = 0; s < g.order(); ++s) {
    if (comp[s] != -1) continue;
    comp[s] = nc;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int u = 0; u < g.order(); ++u)
        if (g.has_edge(v, u) && comp[u] == -1) {
          comp[u] = nc;
          q.push(u);
        }
    }
    ++nc;
  }
  std::vector<std::vector<int>> members(nc);
  for (int v = 0; v < g.order(); ++v) members[comp[v]].push_back(v);
  std::vector<Component> out;
  for (const auto& vs : members) {
    Graph cg(static_cast<int>(vs.size()));
    std::vector<int> inv(g.order(), -1);
    for (size_t i = 0; i < vs.size(); ++i) inv[vs[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> es;
    for (size_t i = 0; i < vs.size(); ++i)
      for (size_t j = i + 1; j < vs.size(); ++j)
        if (g.has_edge(vs[i], vs[j])) es.emplace_back(inv[vs[i]], inv[vs[j]]);
    out.push_back({Graph::from_edges(static_cast<int>(vs.size()), es), vs});
  }
  return out;
}

// --- Named families -------------------------------------------------------
// Canonical vertex orders are fixed so tests can use structural equality:
// stars put the center first, then leaves, then isolated vertices.

namespace families {

inline Graph empty_graph(int n) { return Graph(n); }

inline Graph complete(int n) {
  Graph g(n);
  std::vector<std::pair<int, int>> es;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) es.emplace_back(u, v);
  return Graph::from_edges(n, es);
}

// K_{1,n-1}: vertex 0 is the center.
inline Graph star(int n) {
  if (n < 1) throw std::invalid_argument("star: n >= 1 required");
  std::vector<std::pair<int, int>> es;
  for (int v = 1; v < n; ++v) es.emplace_back(0, v);
  return Graph::from_edges(n, es);
}

// K_{r,s}: part A = vertices [0,r), part B = [r, r+s).
inline Graph complete_bipartite(int r, int s) {
  if (r < 1 || s < 1) throw std::invalid_argument("complete_bipartite: parts must be >= 1");
  std::vector<std::pair<int, int>> es;
  for (int u = 0; u < r; ++u)
    for (int v = 0; v < s; ++v) es.emplace_back(u, r + v);
  return Graph::from_edges(r + s, es);
}

// DS_{p,q}: centers 0 (p-1 leaves) and 1 (q-1 leaves), center edge (0,1).
inline Graph double_star(int p, int q) {
  if (!(p >= q && q >= 2)) throw std::invalid_argument("double_star: p >= q >= 2 required");
  std::vector<std::pair<int, int>> es{{0, 1}};
  for (int i = 0; i < p - 1; ++i) es.emplace_back(0, 2 + i);
  for (int i = 0; i < q - 1; ++i) es.emplace_back(1, p + 1 + i);
  return Graph::from_edges(p + q, es);
}

// K_{1,n-r-1} U rK_1: center 0, leaves 1..n-r-1, isolated vertices last.
inline Graph star_plus_isolated(int n, int r) {
  if (r < 0 || r > n - 2) throw std::invalid_argument("star_plus_isolated: 0 <= r <= n-2 required");
  std::vector<std::pair<int, int>> es;
  for (int v = 1; v <= n - r - 1; ++v) es.emplace_back(0, v);
  return Graph::from_edges(n, es);
}

// (K_1 U K_{n-r-1}) v K_r. Vertex order makes this equal (not merely
// isomorphic) to complement(star_plus_isolated(n, r)).
inline Graph t2_family(int n, int r) {
  if (r < 0 || r > n - 2) throw std::invalid_argument("t2_family: 0 <= r <= n-2 required");
  std::vector<std::pair<int, int>> es;
  int s = n - r - 1;  // clique K_s on vertices 1..s; K_r on the last r
  for (int v = 1; v <= s; ++v)
    for (int u = 1; u < v; ++u) es.emplace_back(u, v);
  for (int v = s + 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) es.emplace_back(u, v);
  }
  return Graph::from_edges(n, es);
}

inline Graph two_cliques(int n) {
  if (n < 2 || n % 2) throw std::invalid_argument("two_cliques: even n >= 2 required");
  return disjoint_union(complete(n / 2), complete(n / 2));
}

inline Graph path(int n) {
  std::vector<std::pair<int, int>> es;
  for (int v = 0; v + 1 < n; ++v) es.emplace_back(v, v + 1);
  return Graph::from_edges(n, es);
}

inline Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle: n >= 3 required");
  std::vector<std::pair<int, int>> es;
  for (int v = 0; v < n; ++v) es.emplace_back(v, (v + 1) % n);
  return Graph::from_edges(n, es);
}

}  // namespace families

// Family spec mini-grammar used by the CLI: "name:p1,p2".
inline Graph family(const std::string& name, const std::vector<int>& p) {
  auto need = [&](size_t c) {
    if (p.size() != c)
      throw std::invalid_argument("family " + name + ": expected " + std::to_string(c) +
                                  " parameter(s)");
  };
  if (name == "complete") { need(1); return families::complete(p[0]); }
  if (name == "empty") { need(1); return families::empty_graph(p[0]); }
  if (name == "star") { need(1); return families::star(p[0]); }
  if (name == "complete_bipartite") { need(2); return families::complete_bipartite(p[0], p[1]); }
  if (name == "double_star") { need(2); return families::double_star(p[0], p[1]); }
  if (name == "star_plus_isolated") { need(2); return families::star_plus_isolated(p[0], p[1]); }
  if (name == "t2_family") { need(2); return families::t2_family(p[0], p[1]); }
  if (name == "two_cliques") { need(1); return families::two_cliques(p[0]); }
  if (name == "path") { need(1); return families::path(p[0]); }
  if (name == "cycle") { need(1); return families::cycle(p[0]); }
  throw std::invalid_argument("family: unknown family id '" + name + "'");
}

}  // namespace lapspec
