// Structural recognizers for the named graph families, independent of any
// spectral computation. Recognition is by degree multiset plus one local
// adjacency pass; no generic isomorphism search.
#pragma once

#include <string>

#include "lapspec/graph.hpp"

namespace lapspec {

enum class Family {
  None,
  EmptyGraph,      // nK1
  Complete,        // K_n
  Star,            // K_{1,n-1}
  BalancedBipartite,  // K_{n/2,n/2}
  StarPlusIsolated,   // K_{1,n-r-1} u rK1
  T2Family,           // (K1 u K_{n-r-1}) v K_r
  TwoCliques,         // 2K_{n/2}
};

struct FamilyMatch {
  Family family = Family::None;
  int r = -1;  // family parameter where applicable
  bool matched() const { return family != Family::None; }
};

inline std::string family_name(Family f) {
  switch (f) {
    case Family::None: return "none";
    case Family::EmptyGraph: return "nK1";
    case Family::Complete: return "K_n";
    case Family::Star: return "K_{1,n-1}";
    case Family::BalancedBipartite: return "K_{n/2,n/2}";
    case Family::StarPlusIsolated: return "star_plus_isolated";
    case Family::T2Family: return "t2_family";
    case Family::TwoCliques: return "two_cliques";
  }
  return "?";
}

inline bool is_complete_graph(const Graph& g) {
  return g.size() == g.order() * (g.order() - 1) / 2;
}

// K_{1,n-r-1} u rK1. Degree multiset {s, 1^s, 0^r} with s = n-r-1 >= 1 and
// the leaves all hanging off the single center. K2 matches with r = 0.
inline FamilyMatch recognize_star_plus_isolated(const Graph& g) {
  int n = g.order(), m = g.size();
  if (m < 1) return {};
  int center = -1, leaves = 0, isolated = 0;
  for (int v = 0; v < n; ++v) {
    int d = g.degree(v);
    if (d == 0) ++isolated;
    else if (d == 1) ++leaves;
    else if (d == m && center == -1) center = v;
    else return {};
  }
  int s = n - isolated - 1;
  if (s < 1 || m != s) return {};
  if (s == 1) {
    // K2 u rK1: two degree-1 vertices, no separate center
    if (leaves != 2 || center != -1) return {};
    return {Family::StarPlusIsolated, isolated};
  }
  if (center == -1 || leaves != s) return {};
  for (int v = 0; v < n; ++v)
    if (v != center && g.degree(v) == 1 && !g.has_edge(center, v)) return {};
  return {Family::StarPlusIsolated, isolated};
}

// r in the ranges of the sigma=1 family: 0 <= r <= ceil(n/2)-2 or r = n-2
inline bool exception_r_in_range(int n, int r) {
  return (r >= 0 && r <= (n + 1) / 2 - 2) || r == n - 2;
}

inline bool in_exception_family_1mk1(const Graph& g) {
  FamilyMatch fm = recognize_star_plus_isolated(g);
  return fm.matched() && exception_r_in_range(g.order(), fm.r);
}

inline bool in_exception_family_t2(const Graph& g) {
  return in_exception_family_1mk1(g.complement());
}

// Structural sigma = 1 decision (no spectral computation)
inline bool sigma1_by_structure(const Graph& g) {
  if (g.order() < 2) throw std::invalid_argument("sigma1_by_structure: n >= 2 required");
  return in_exception_family_1mk1(g);
}

// Is g exactly two disjoint cliques of size n/2 each?
inline bool is_two_half_cliques(const Graph& g) {
  int n = g.order();
  if (n < 2 || n % 2) return false;
  auto comps = components(g);
  return comps.size() == 2 && comps[0].graph.order() == n / 2 &&
         comps[1].graph.order() == n / 2 && is_complete_graph(comps[0].graph) &&
         is_complete_graph(comps[1].graph);
}

inline bool is_balanced_complete_bipartite(const Graph& g) {
  // complement of K_{n/2,n/2} is 2K_{n/2}
  return g.order() >= 2 && g.order() % 2 == 0 && is_two_half_cliques(g.complement());
}

// mu2 = 2m/n equality family of the lower-bound theorem:
// nK1, K_{n/2,n/2}, or K_{1,n/2} u (n/2-1)K1
inline FamilyMatch recognize_mu2_equality_family(const Graph& g) {
  int n = g.order();
  if (g.size() == 0) return {Family::EmptyGraph, 0};
  if (is_balanced_complete_bipartite(g)) return {Family::BalancedBipartite, n / 2};
  if (n % 2 == 0) {
    FamilyMatch fm = recognize_star_plus_isolated(g);
    if (fm.matched() && fm.r == n / 2 - 1) return {Family::StarPlusIsolated, fm.r};
  }
  return {};
}

// dual equality family: K_n, 2K_{n/2}, or (K1 u K_{n/2}) v K_{n/2-1}
inline FamilyMatch recognize_t2_equality_family(const Graph& g) {
  FamilyMatch c = recognize_mu2_equality_family(g.complement());
  switch (c.family) {
    case Family::EmptyGraph: return {Family::Complete, 0};
    case Family::BalancedBipartite: return {Family::TwoCliques, c.r};
    case Family::StarPlusIsolated: return {Family::T2Family, c.r};
    default: return {};
  }
}

// K_n, K_{1,n-1}, or K_{n/2,n/2}; precedence K_n > star > bipartite.
inline FamilyMatch recognize_t4(const Graph& g) {
  int n = g.order();
  if (n < 3 || !is_connected(g))
    throw std::invalid_argument("recognize_t4: connected graph with n >= 3 required");
  if (is_complete_graph(g)) return {Family::Complete, 0};
  {
    FamilyMatch fm = recognize_star_plus_isolated(g);
    if (fm.matched() && fm.r == 0 && g.size() == n - 1) return {Family::Star, 0};
  }
  if (is_balanced_complete_bipartite(g)) return {Family::BalancedBipartite, n / 2};
  return {};
}

}  // namespace lapspec
