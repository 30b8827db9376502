// Floating-point spectra via cyclic Jacobi rotations, Laplacian energy,
// and the eigenvalue-sum / interlacing inequality checks.
#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "lapspec/exact_spectral.hpp"
#include "lapspec/graph.hpp"

namespace lapspec {

inline constexpr double kDefaultJacobiTol = 1e-12;
inline constexpr double kDefaultCheckTol = 1e-8;
inline constexpr int kJacobiMaxSweeps = 100;
inline constexpr int kNumericOrderCap = 64;

struct Spectrum {
  std::vector<double> values;  // sorted descending
  double err = 0;              // a-posteriori per-eigenvalue bound
};

class DenseSym {
 public:
  explicit DenseSym(int order) : n_(order), e_(static_cast<size_t>(order) * order, 0.0) {}
  explicit DenseSym(const IntMatrix& m) : DenseSym(m.order()) {
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) at(i, j) = m.at(i, j).get_d();
  }
  int order() const { return n_; }
  double& at(int i, int j) { return e_[static_cast<size_t>(i) * n_ + j]; }
  double at(int i, int j) const { return e_[static_cast<size_t>(i) * n_ + j]; }

  DenseSym leading_submatrix(int k) const {
    DenseSym b(k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) b.at(i, j) = at(i, j);
    return b;
  }

  DenseSym operator+(const DenseSym& o) const {
    if (o.n_ != n_) throw std::invalid_argument("DenseSym: order mismatch");
    DenseSym s(n_);
    for (size_t i = 0; i < e_.size(); ++i) s.e_[i] = e_[i] + o.e_[i];
    return s;
  }

 private:
  int n_;
  std::vector<double> e_;
};

inline double offdiag_norm(const DenseSym& a) {
  double s = 0;
  for (int i = 0; i < a.order(); ++i)
    for (int j = 0; j < a.order(); ++j)
      if (i != j) s += a.at(i, j) * a.at(i, j);
  return std::sqrt(s);
}

inline Spectrum spectrum(DenseSym a, double tol = kDefaultJacobiTol) {
  int n = a.order();
  if (n > kNumericOrderCap) throw std::invalid_argument("spectrum: order exceeds cap 64");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::fabs(a.at(i, j) - a.at(j, i)) > tol)
        throw std::invalid_argument("spectrum: matrix not symmetric within tol");

  int sweep = 0;
  while (offdiag_norm(a) >= tol) {
    if (++sweep > kJacobiMaxSweeps)
      throw std::runtime_error("spectrum: Jacobi did not converge, residual " +
                               std::to_string(offdiag_norm(a)));
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) {
        double apq = a.at(p, q);
        if (apq == 0.0) continue;
        double theta = (a.at(q, q) - a.at(p, p)) / (2 * apq);
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
        for (int i = 0; i < n; ++i) {
          double aip = a.at(i, p), aiq = a.at(i, q);
          a.at(i, p) = c * aip - s * aiq;
          a.at(i, q) = s * aip + c * aiq;
        }
        for (int i = 0; i < n; ++i) {
          double api = a.at(p, i), aqi = a.at(q, i);
          a.at(p, i) = c * api - s * aqi;
          a.at(q, i) = s * api + c * aqi;
        }
      }
  }
  Spectrum out;
  out.values.resize(n);
  for (int i = 0; i < n; ++i) out.values[i] = a.at(i, i);
  std::sort(out.values.begin(), out.values.end(), std::greater<double>());
  // Wielandt-Hoffman: eigenvalues of the final diagonal are within the
  // off-diagonal Frobenius norm of the true ones.
  out.err = offdiag_norm(a) + 64 * std::numeric_limits<double>::epsilon() * n;
  return out;
}

inline Spectrum spectrum(const Graph& g, double tol = kDefaultJacobiTol) {
  return spectrum(DenseSym(laplacian(g)), tol);
}

struct EnergyResult {
  double le = 0;
  int sigma_used = 0;
  double identity_residual = 0;
};

inline double sum_top(const Spectrum& sp, int k) {
  if (k < 1 || k > static_cast<int>(sp.values.size()))
    throw std::invalid_argument("sum_top: k out of range");
  double s = 0;
  for (int i = 0; i < k; ++i) s += sp.values[i];
  return s;
}

inline double sum_top(const Graph& g, int k, double tol = kDefaultJacobiTol) {
  return sum_top(spectrum(g, tol), k);
}

inline EnergyResult laplacian_energy(const Graph& g, double tol = kDefaultJacobiTol) {
  Spectrum sp = spectrum(g, tol);
  double avg = 2.0 * g.size() / g.order();
  EnergyResult r;
  for (double mu : sp.values) r.le += std::fabs(mu - avg);
  r.sigma_used = sigma(g).sigma;
  double rhs = 2 * sum_top(sp, r.sigma_used) - 4.0 * g.size() * r.sigma_used / g.order();
  r.identity_residual = std::fabs(r.le - rhs);
  return r;
}

inline bool check_edge_interlacing(const Graph& g, int u, int v,
                                   double tol = kDefaultCheckTol) {
  Graph h = g.delete_edge(u, v);
  Spectrum a = spectrum(g), b = spectrum(h);
  int n = g.order();
  for (int i = 0; i < n; ++i) {
    if (b.values[i] > a.values[i] + tol) return false;
    if (i + 1 < n && a.values[i + 1] > b.values[i] + tol) return false;
  }
  return b.values[n - 1] >= -tol;
}

inline bool check_cauchy_interlacing(const DenseSym& m, int k,
                                     double tol = kDefaultCheckTol) {
  if (k < 1 || k > m.order()) throw std::invalid_argument("check_cauchy_interlacing: bad k");
  Spectrum full = spectrum(m), sub = spectrum(m.leading_submatrix(k));
  int n = m.order();
  for (int i = 1; i <= k; ++i) {
    double lo = full.values[n - i], mid = sub.values[k - i], hi = full.values[k - i];
    if (mid < lo - tol || mid > hi + tol) return false;
  }
  return true;
}

inline bool check_ky_fan(const DenseSym& a, const DenseSym& b, int k,
                         double tol = kDefaultCheckTol) {
  if (a.order() != b.order()) throw std::invalid_argument("check_ky_fan: order mismatch");
  if (k < 1 || k > a.order()) throw std::invalid_argument("check_ky_fan: bad k");
  Spectrum sa = spectrum(a), sb = spectrum(b), ssum = spectrum(a + b);
  return sum_top(ssum, k) <= sum_top(sa, k) + sum_top(sb, k) + tol;
}

}  // namespace lapspec
