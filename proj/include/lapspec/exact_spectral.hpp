// Exact Laplacian spectral computations: integer characteristic polynomial
// (Faddeev-LeVerrier), eigenvalue counts at rational thresholds, and the
// sigma invariant with exact tie detection.
#pragma once

#include <stdexcept>
#include <vector>

#include "lapspec/graph.hpp"
#include "lapspec/polynomial.hpp"

namespace lapspec {

inline constexpr int kCharPolyOrderCap = 16;

class IntMatrix {
 public:
  explicit IntMatrix(int order) : n_(order), e_(static_cast<size_t>(order) * order, 0) {
    if (order < 1) throw std::invalid_argument("IntMatrix: order must be >= 1");
  }
  int order() const { return n_; }
  mpz_class& at(int i, int j) { return e_[static_cast<size_t>(i) * n_ + j]; }
  const mpz_class& at(int i, int j) const { return e_[static_cast<size_t>(i) * n_ + j]; }

  mpz_class trace() const {
    mpz_class t = 0;
    for (int i = 0; i < n_; ++i) t += at(i, i);
    return t;
  }

  bool operator==(const IntMatrix& o) const { return n_ == o.n_ && e_ == o.e_; }

 private:
  int n_;
  std::vector<mpz_class> e_;
};

inline IntMatrix laplacian(const Graph& g) {
  IntMatrix m(g.order());
  for (int i = 0; i < g.order(); ++i) {
    m.at(i, i) = g.degree(i);
    for (int j = 0; j < g.order(); ++j)
      if (j != i && g.has_edge(i, j)) m.at(i, j) = -1;
  }
  return m;
}

// monic char poly det(xI - M); all intermediate divisions are exact
inline IntPoly char_poly(const IntMatrix& m) {
  int n = m.order();
  if (n > kCharPolyOrderCap)
    throw std::invalid_argument("char_poly: order exceeds cap " +
                                std::to_string(kCharPolyOrderCap));
  std::vector<mpz_class> c(n + 1);
  c[n] = 1;
  IntMatrix work(n);  // M_k of the recurrence
  mpz_class ck = 0;
  for (int k = 1; k <= n; ++k) {
    // work <- M * (work + ck*I)
    IntMatrix shifted(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) shifted.at(i, j) = work.at(i, j);
    if (k > 1)
      for (int i = 0; i < n; ++i) shifted.at(i, i) += ck;
    IntMatrix next(n);
    if (k == 1) {
      next = m;
    } else {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          mpz_class s = 0;
          for (int l = 0; l < n; ++l) s += m.at(i, l) * shifted.at(l, j);
          next.at(i, j) = s;
        }
    }
    ck = -next.trace() / k;
    c[n - k] = ck;
    work = next;
  }
  return IntPoly(std::move(c));
}

struct SigmaResult {
  int sigma = 0;
  bool tie = false;
  int count_above = 0;  // eigenvalues > 2m/n
  int count_equal = 0;  // eigenvalues = 2m/n
  int count_below = 0;
};

// count of char-poly roots satisfying cmp against q (with multiplicity)
enum class Cmp { Greater, GreaterEq, Equal, Less, LessEq };

inline int count_roots_cmp(const IntPoly& p, const mpq_class& q, Cmp cmp) {
  RootCounter rc(p);
  switch (cmp) {
    case Cmp::Greater: return rc.count_above(q);
    case Cmp::GreaterEq: return rc.count_geq(q);
    case Cmp::Equal: return rc.count_at(q);
    case Cmp::Less: return rc.count_below(q);
    case Cmp::LessEq: return rc.count_leq(q);
  }
  return 0;
}

inline SigmaResult sigma_from_poly(const IntPoly& p, const Rat& avg_deg, int n) {
  RootCounter rc(p);
  SigmaResult r;
  r.count_above = rc.count_above(avg_deg);
  r.count_equal = rc.count_at(avg_deg);
  r.count_below = n - r.count_above - r.count_equal;
  r.sigma = r.count_above + r.count_equal;
  r.tie = r.count_equal > 0;
  return r;
}

inline SigmaResult sigma(const Graph& g) {
  return sigma_from_poly(char_poly(laplacian(g)), make_rat(2L * g.size(), g.order()),
                         g.order());
}

// Alternative route for sigma: count eigenvalues >= 0 of the integer matrix
// n*L - 2m*I. Used as a cross-check against the rational-threshold path.
inline int sigma_shifted_route(const Graph& g) {
  IntMatrix m = laplacian(g);
  long n = g.order(), twom = 2L * g.size();
  for (int i = 0; i < m.order(); ++i)
    for (int j = 0; j < m.order(); ++j) {
      m.at(i, j) *= n;
      if (i == j) m.at(i, j) -= twom;
    }
  return count_roots_cmp(char_poly(m), mpq_class(0), Cmp::GreaterEq);
}

inline int m_interval(const Graph& g, const Rat& lo, const Rat& hi, bool closed_lo,
                      bool closed_hi) {
  RootCounter rc(char_poly(laplacian(g)));
  return rc.count_interval(lo, hi, closed_lo, closed_hi);
}

inline int multiplicity_at(const Graph& g, const Rat& q) {
  return count_roots_cmp(char_poly(laplacian(g)), q, Cmp::Equal);
}

}  // namespace lapspec
