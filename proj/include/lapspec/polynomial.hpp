// Integer-coefficient polynomials with exact real root counting.
//
// Root counts relative to rational thresholds use Sturm chains built from
// integer pseudo-remainders (sign-corrected, content-reduced). Counting
// with multiplicity walks the gcd chain p, gcd(p,p'), gcd(..), adding the
// distinct-root count of each layer.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace lapspec {

class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }
  static IntPoly constant(const mpz_class& v) { return IntPoly({v}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero poly
  bool is_zero() const { return c_.empty(); }
  const mpz_class& coeff(int i) const { return c_[i]; }
  const mpz_class& leading() const { return c_.back(); }
  const std::vector<mpz_class>& coeffs() const { return c_; }

  mpq_class eval(const mpq_class& x) const {
    mpq_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + mpq_class(*it);
    return acc;
  }

  IntPoly derivative() const {
    if (c_.size() <= 1) return IntPoly();
    std::vector<mpz_class> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
    return IntPoly(std::move(d));
  }

  IntPoly operator-() const {
    std::vector<mpz_class> d(c_);
    for (auto& v : d) v = -v;
    return IntPoly(std::move(d));
  }

  bool operator==(const IntPoly& o) const { return c_ == o.c_; }

  // gcd of |coefficients|, positive; 0 for the zero polynomial
  mpz_class content() const {
    mpz_class g = 0;
    for (const auto& v : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    return g;
  }

  IntPoly primitive_part() const {
    if (is_zero()) return *this;
    mpz_class g = content();
    if (leading() < 0) g = -g;
    std::vector<mpz_class> d(c_);
    for (auto& v : d) v /= g;
    return IntPoly(std::move(d));
  }

  // this * sgn-corrected lc(b)^(da-db+1) = q*b + r; returns r with the sign
  // it would have under a positive multiplier.
  IntPoly pseudo_rem(const IntPoly& b) const {
    if (b.is_zero()) throw std::invalid_argument("pseudo_rem: division by zero polynomial");
    std::vector<mpz_class> r(c_);
    int db = b.degree();
    const mpz_class& lb = b.leading();
    int steps = 0;
    while (static_cast<int>(r.size()) - 1 >= db) {
      while (!r.empty() && r.back() == 0) r.pop_back();
      int dr = static_cast<int>(r.size()) - 1;
      if (dr < db) break;
      mpz_class lead = r.back();
      for (auto& v : r) v *= lb;
      for (int i = 0; i <= db; ++i) r[dr - db + i] -= lead * b.coeff(i);
      ++steps;
    }
    IntPoly out{std::move(r)};
    // the applied multiplier is lc(b)^steps; restore positive-multiplier sign
    if (lb < 0 && steps % 2 != 0) out = -out;
    return out;
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
      if (c_[i] == 0) continue;
      if (!s.empty()) s += c_[i] > 0 ? " + " : " - ";
      else if (c_[i] < 0) s += "-";
      mpz_class a = abs(c_[i]);
      if (a != 1 || i == 0) s += a.get_str();
      if (i > 0) s += "x";
      if (i > 1) s += "^" + std::to_string(i);
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<mpz_class> c_;
};

// exact quotient; throws if division is not exact
inline IntPoly exact_div(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("exact_div: zero divisor");
  if (a.is_zero()) return IntPoly();
  std::vector<mpq_class> r(a.coeffs().begin(), a.coeffs().end());
  int db = b.degree();
  std::vector<mpq_class> q(a.degree() - db + 1, mpq_class(0));
  for (int dr = a.degree(); dr >= db; --dr) {
    mpq_class f = r[dr] / mpq_class(b.leading());
    q[dr - db] = f;
    for (int i = 0; i <= db; ++i) r[dr - db + i] -= f * mpq_class(b.coeff(i));
  }
  for (int i = 0; i < db; ++i)
    if (r[i] != 0) throw std::invalid_argument("exact_div: not divisible");
  std::vector<mpz_class> out(q.size());
  for (size_t i = 0; i < q.size(); ++i) {
    if (q[i].get_den() != 1) throw std::invalid_argument("exact_div: non-integer quotient");
    out[i] = q[i].get_num();
  }
  return IntPoly(std::move(out));
}

// primitive PRS gcd, positive leading coefficient
inline IntPoly poly_gcd(IntPoly a, IntPoly b) {
  a = a.primitive_part();
  b = b.primitive_part();
  while (!b.is_zero()) {
    IntPoly r = a.pseudo_rem(b).primitive_part();
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Divide out (x - num/den) once; input must vanish there. The result is the
// integer-cleared primitive quotient (root structure is all we need).
inline IntPoly div_linear(const IntPoly& p, const mpq_class& root) {
  std::vector<mpq_class> q(p.degree());
  mpq_class carry = p.leading();
  for (int i = p.degree() - 1; i >= 0; --i) {
    q[i] = carry;
    carry = mpq_class(p.coeff(i)) + carry * root;
  }
  if (carry != 0) throw std::invalid_argument("div_linear: not a root");
  mpz_class lcm = 1;
  for (const auto& v : q) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den().get_mpz_t());
  std::vector<mpz_class> out(q.size());
  for (size_t i = 0; i < q.size(); ++i) out[i] = mpz_class(q[i] * mpq_class(lcm));
  return IntPoly(std::move(out)).primitive_part();
}

inline int multiplicity_at(IntPoly p, const mpq_class& q) {
  int m = 0;
  while (!p.is_zero() && p.degree() >= 1 && p.eval(q) == 0) {
    p = div_linear(p, q);
    ++m;
  }
  return m;
}

// Sturm chain of a single polynomial; reusable for any number of queries.
// Built from the squarefree part, so sign variations at a root of p behave
// as the limit from the right and endpoint queries stay consistent.
class SturmChain {
 public:
  explicit SturmChain(const IntPoly& p_in) {
    if (p_in.is_zero()) return;
    IntPoly p = p_in.primitive_part();
    if (p.degree() >= 1) {
      IntPoly g = poly_gcd(p, p.derivative());
      if (g.degree() >= 1) p = exact_div(p, g).primitive_part();
    }
    chain_.push_back(p);
    if (p.degree() == 0) return;
    chain_.push_back(p.derivative().primitive_part());
    while (!chain_.back().is_zero() && chain_.back().degree() >= 1) {
      IntPoly r = (-chain_[chain_.size() - 2].pseudo_rem(chain_.back())).primitive_part();
      if (r.is_zero()) break;
      chain_.push_back(std::move(r));
    }
  }

  int variations_at(const mpq_class& x) const {
    int v = 0, last = 0;
    for (const auto& f : chain_) {
      int s = sgn(f.eval(x));
      if (s != 0 && last != 0 && s != last) ++v;
      if (s != 0) last = s;
    }
    return v;
  }

  int variations_at_pos_inf() const { return variations_limit(+1); }
  int variations_at_neg_inf() const { return variations_limit(-1); }

  // distinct real roots strictly greater than q
  int distinct_above(const mpq_class& q) const {
    if (chain_.empty()) return 0;
    return variations_at(q) - variations_at_pos_inf();
  }

  // distinct real roots in (a, b]
  int distinct_in(const mpq_class& a, const mpq_class& b) const {
    if (chain_.empty()) return 0;
    return variations_at(a) - variations_at(b);
  }

 private:
  static int sgn(const mpq_class& v) { return v > 0 ? 1 : v < 0 ? -1 : 0; }
  int variations_limit(int dir) const {
    int v = 0, last = 0;
    for (const auto& f : chain_) {
      if (f.is_zero()) continue;
      int s = sgn(mpq_class(f.leading()));
      if (dir < 0 && f.degree() % 2 != 0) s = -s;
      if (last != 0 && s != last) ++v;
      last = s;
    }
    return v;
  }
  std::vector<IntPoly> chain_;
};

// gcd chain p, gcd(p,p'), ... with a Sturm chain per layer: exact counts
// with multiplicity for a polynomial whose roots are all real.
class RootCounter {
 public:
  explicit RootCounter(const IntPoly& p) : total_degree_(p.degree() < 0 ? 0 : p.degree()) {
    IntPoly g = p.primitive_part();
    while (!g.is_zero() && g.degree() >= 1) {
      layers_.emplace_back(g);
      layer_polys_.push_back(g);
      g = poly_gcd(g, g.derivative());
    }
  }

  // roots (with multiplicity) strictly greater than q
  int count_above(const mpq_class& q) const {
    int total = 0;
    for (const auto& ch : layers_) total += ch.distinct_above(q);
    return total;
  }

  int count_at(const mpq_class& q) const {
    if (layer_polys_.empty()) return 0;
    return multiplicity_at(layer_polys_[0], q);
  }

  int count_geq(const mpq_class& q) const { return count_above(q) + count_at(q); }
  int count_below(const mpq_class& q) const { return total_degree_ - count_geq(q); }
  int count_leq(const mpq_class& q) const { return total_degree_ - count_above(q); }

  // roots with multiplicity in an interval with configurable endpoints
  int count_interval(const mpq_class& lo, const mpq_class& hi, bool closed_lo,
                     bool closed_hi) const {
    if (lo > hi) throw std::invalid_argument("count_interval: lo > hi");
    if (lo == hi) return closed_lo && closed_hi ? count_at(lo) : 0;
    int c = 0;
    for (const auto& ch : layers_) c += ch.distinct_in(lo, hi);  // (lo, hi]
    if (closed_lo) c += count_at(lo);
    if (!closed_hi) c -= count_at(hi);
    return c;
  }

  int total_degree() const { return total_degree_; }

 private:
  int total_degree_;
  std::vector<SturmChain> layers_;
  std::vector<IntPoly> layer_polys_;
};

}  // namespace lapspec
