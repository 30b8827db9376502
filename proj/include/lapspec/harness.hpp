// Exhaustive and randomized verification: enumerate graphs, run every
// check, aggregate deterministically across workers, persist CSV reports
// and counterexamples.
#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include "lapspec/bounds.hpp"
#include "lapspec/graph6.hpp"

namespace lapspec {

inline std::uint64_t labeled_count(int n) {
  if (n < 1 || n > 8) throw std::invalid_argument("enumerate_labeled: 1 <= n <= 8");
  return std::uint64_t{1} << (n * (n - 1) / 2);
}

// all 2^(n(n-1)/2) labeled graphs in edge-bitmask order
inline std::vector<Graph> enumerate_labeled(int n) {
  std::uint64_t total = labeled_count(n);
  std::vector<Graph> out;
  out.reserve(total);
  for (std::uint64_t mask = 0; mask < total; ++mask)
    out.push_back(Graph::from_bitmask(n, mask));
  return out;
}

// minimum edge bitmask over all vertex permutations
inline std::uint64_t canonical_bitmask(const Graph& g) {
  int n = g.order();
  if (n > 7) throw std::invalid_argument("canonical_bitmask: n <= 7 required");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    best = std::min(best, g.relabel(perm).edge_bitmask());
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// One representative per isomorphism class, in canonical-bitmask order.
// Orbit marking: scanning masks in ascending order, the first unvisited
// mask is the minimum of its isomorphism orbit; mark the whole orbit
// visited. Total cost is one orbit scan per class, not per labeled graph.
inline std::vector<Graph> enumerate_nonisomorphic(int n) {
  if (n < 1 || n > 7) throw std::invalid_argument("enumerate_nonisomorphic: 1 <= n <= 7");
  std::uint64_t total = labeled_count(n);
  std::vector<bool> visited(total, false);
  std::vector<Graph> out;
  std::vector<int> perm(n);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    if (visited[mask]) continue;
    Graph g = Graph::from_bitmask(n, mask);
    out.push_back(g);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      visited[g.relabel(perm).edge_bitmask()] = true;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

enum class CheckStatus { Pass, Fail, NA };

struct CheckOutcome {
  CheckStatus status = CheckStatus::NA;
  std::string detail;
};

struct CheckDef {
  std::string id;
  int gate_n;  // runs when n <= max(gate_n, relax); NA above
  std::function<CheckOutcome(const GraphContext&)> fn;
};

namespace detail {

inline CheckOutcome from_report(const BoundReport& r) {
  CheckOutcome o;
  if (!r.applicable) return {CheckStatus::NA, r.reason};
  o.status = r.holds ? CheckStatus::Pass : CheckStatus::Fail;
  o.detail = r.witness;
  return o;
}

inline CheckOutcome check_sigma1_equiv(const GraphContext& c) {
  bool structural = sigma1_by_structure(c.graph);
  bool spectral = c.sig.sigma == 1;
  if (structural == spectral) return {CheckStatus::Pass, ""};
  return {CheckStatus::Fail, structural ? "family but sigma != 1" : "sigma = 1 but no family"};
}

inline CheckOutcome check_thm41(const GraphContext& c) {
  if (c.n() <= 2 || in_exception_family_1mk1(c.graph))
    return {CheckStatus::NA, "n <= 2 or exception family"};
  return c.sig.sigma >= 2 ? CheckOutcome{CheckStatus::Pass, ""}
                          : CheckOutcome{CheckStatus::Fail, "sigma < 2 outside family"};
}

inline CheckOutcome check_sigma_dual(const GraphContext& c) {
  int alt = sigma_shifted_route(c.graph);
  if (alt == c.sig.sigma) return {CheckStatus::Pass, ""};
  return {CheckStatus::Fail,
          "shifted route " + std::to_string(alt) + " vs " + std::to_string(c.sig.sigma)};
}

inline CheckOutcome check_le_identity(const GraphContext& c) {
  EnergyResult e = energy(c);
  if (e.identity_residual <= kDefaultCheckTol) return {CheckStatus::Pass, ""};
  return {CheckStatus::Fail, "residual " + std::to_string(e.identity_residual)};
}

inline CheckOutcome check_edge_interlacing_all(const GraphContext& c) {
  if (c.m() < 1) return {CheckStatus::NA, "no edges"};
  for (auto [u, v] : c.graph.edges())
    if (!check_edge_interlacing(c.graph, u, v))
      return {CheckStatus::Fail, "edge (" + std::to_string(u) + "," + std::to_string(v) + ")"};
  return {CheckStatus::Pass, ""};
}

inline CheckOutcome check_cauchy_all(const GraphContext& c) {
  DenseSym l(laplacian(c.graph));
  for (int k = 1; k <= c.n(); ++k)
    if (!check_cauchy_interlacing(l, k))
      return {CheckStatus::Fail, "k = " + std::to_string(k)};
  return {CheckStatus::Pass, ""};
}

inline CheckOutcome check_complement_pairing(const GraphContext& c) {
  int n = c.n();
  Spectrum sc = spectrum(c.graph.complement());
  std::vector<double> paired{0};
  for (int i = 0; i + 1 < n; ++i) paired.push_back(n - c.spec.values[i]);
  std::sort(paired.begin(), paired.end(), std::greater<double>());
  for (int i = 0; i < n; ++i)
    if (std::fabs(paired[i] - sc.values[i]) > kDefaultCheckTol)
      return {CheckStatus::Fail, "position " + std::to_string(i)};
  return {CheckStatus::Pass, ""};
}

// star split: A = embedded star at a max-degree vertex,
// B = the remaining edges; Ky Fan for every k
inline CheckOutcome check_ky_fan_star_split(const GraphContext& c) {
  if (c.m() < 1) return {CheckStatus::NA, "no edges"};
  int hub = 0;
  for (int v = 0; v < c.n(); ++v)
    if (c.graph.degree(v) == c.stats.delta1) {
      hub = v;
      break;
    }
  std::vector<std::pair<int, int>> star_es, rest_es;
  for (auto [u, v] : c.graph.edges())
    (u == hub || v == hub ? star_es : rest_es).push_back({u, v});
  DenseSym a(laplacian(Graph::from_edges(c.n(), star_es)));
  DenseSym b(laplacian(Graph::from_edges(c.n(), rest_es)));
  for (int k = 1; k <= c.n(); ++k)
    if (!check_ky_fan(a, b, k)) return {CheckStatus::Fail, "k = " + std::to_string(k)};
  return {CheckStatus::Pass, ""};
}

inline CheckOutcome check_numeric_exact_consistency(const GraphContext& c) {
  double thr = 2.0 * c.m() / c.n(), margin = 10 * (c.spec.err + 1e-12);
  int above = 0, geq = 0;
  for (double v : c.spec.values) {
    if (v > thr + margin) ++above;
    if (v > thr - margin) ++geq;
  }
  if (above == c.sig.count_above && geq == c.sig.count_above + c.sig.count_equal)
    return {CheckStatus::Pass, ""};
  return {CheckStatus::Fail, "numeric counts disagree with exact counts"};
}

}  // namespace detail

// Stable check registry; column order of every CSV row.
inline const std::vector<CheckDef>& check_registry() {
  static const std::vector<CheckDef> defs = [] {
    auto wrap = [](BoundReport (*f)(const GraphContext&)) {
      return [f](const GraphContext& c) { return detail::from_report(f(c)); };
    };
    auto wrap_tol = [](BoundReport (*f)(const GraphContext&, double)) {
      return
          [f](const GraphContext& c) { return detail::from_report(f(c, kDefaultCheckTol)); };
    };
    std::vector<CheckDef> v;
    v.push_back({"sigma1_equiv", 8, detail::check_sigma1_equiv});
    v.push_back({"thm41_sigma_ge2", 8, detail::check_thm41});
    v.push_back({"sigma_dual_route", 6, detail::check_sigma_dual});
    v.push_back({"le_identity", 8, detail::check_le_identity});
    v.push_back({"merris_lower", 8, wrap_tol(merris_lower)});
    v.push_back({"anderson_morley_upper", 8, wrap(anderson_morley_upper)});
    v.push_back({"li_pan_lower", 8, wrap(li_pan_lower)});
    v.push_back({"das_mu2_lower", 8, wrap_tol(das_mu2_lower)});
    v.push_back({"mu2_avg_lower", 8, wrap(mu2_avg_lower)});
    v.push_back({"third_smallest_upper", 8, wrap(third_smallest_upper)});
    v.push_back({"le_upper_old", 8, wrap_tol(le_upper_old)});
    v.push_back({"le_upper_new", 8, wrap_tol(le_upper_new)});
    v.push_back({"compare_le_bounds", 8, wrap(compare_le_bounds)});
    v.push_back({"s_sigma_upper", 8, wrap_tol(s_sigma_upper)});
    v.push_back({"avg_lt_delta2_plus1", 8, wrap(avg_lt_delta2_plus1)});
    v.push_back({"lemma31", 8, wrap(lemma31_check)});
    v.push_back({"pan_hou", 8, wrap(pan_hou_check)});
    v.push_back({"distinct_mu", 8, [](const GraphContext& c) {
                   return detail::from_report(distinct_mu_characterization(c));
                 }});
    v.push_back({"edge_interlacing", 6, detail::check_edge_interlacing_all});
    v.push_back({"cauchy_interlacing", 5, detail::check_cauchy_all});
    v.push_back({"complement_pairing", 6, detail::check_complement_pairing});
    v.push_back({"ky_fan_star_split", 6, detail::check_ky_fan_star_split});
    v.push_back({"numeric_exact_consistency", 6, detail::check_numeric_exact_consistency});
    return v;
  }();
  return defs;
}

struct VerificationRecord {
  std::string graph6;
  int n = 0, m = 0, sigma = 0;
  bool tie = false;
  std::vector<CheckOutcome> results;  // aligned with check_registry()
  bool any_fail = false;
};

// gate_relax raises every gate (randomized large-n spot checks); 0 = as is
inline VerificationRecord run_suite(const Graph& g, int gate_relax = 0) {
  GraphContext c(g);
  VerificationRecord rec;
  rec.graph6 = to_graph6(g);
  rec.n = c.n();
  rec.m = c.m();
  rec.sigma = c.sig.sigma;
  rec.tie = c.sig.tie;
  for (const CheckDef& def : check_registry()) {
    CheckOutcome o;
    if (c.n() > std::max(def.gate_n, gate_relax)) {
      o = {CheckStatus::NA, "above n gate"};
    } else {
      try {
        o = def.fn(c);
      } catch (const std::exception& e) {
        o = {CheckStatus::Fail, std::string("error: ") + e.what()};
      }
    }
    if (o.status == CheckStatus::Fail) rec.any_fail = true;
    rec.results.push_back(std::move(o));
  }
  return rec;
}

struct CheckTally {
  std::uint64_t pass = 0, fail = 0, na = 0;
};

struct SweepSummary {
  int n_min = 0, n_max = 0;
  std::string mode;
  std::uint64_t graph_count = 0;
  std::vector<CheckTally> tallies;  // aligned with check_registry()
  std::uint64_t counterexamples = 0;
  double wall_seconds = 0;

  // machine-readable block; excludes wall time so that runs with different
  // worker counts are byte-comparable
  std::string key_value_block() const {
    std::ostringstream os;
    os << "n_min=" << n_min << "\nn_max=" << n_max << "\nmode=" << mode
       << "\ngraphs=" << graph_count << "\ncounterexamples=" << counterexamples << "\n";
    const auto& defs = check_registry();
    for (size_t i = 0; i < defs.size(); ++i)
      os << "check." << defs[i].id << "=" << tallies[i].pass << ":" << tallies[i].fail << ":"
         << tallies[i].na << "\n";
    return os.str();
  }

  std::string text() const {
    std::ostringstream os;
    os << "sweep n=" << n_min << ".." << n_max << " mode=" << mode
       << " graphs=" << graph_count << " counterexamples=" << counterexamples << " ("
       << wall_seconds << "s)\n";
    const auto& defs = check_registry();
    for (size_t i = 0; i < defs.size(); ++i) {
      os << "  " << defs[i].id;
      for (size_t p = defs[i].id.size(); p < 26; ++p) os << ' ';
      os << " pass=" << tallies[i].pass << " fail=" << tallies[i].fail
         << " na=" << tallies[i].na << "\n";
    }
    return os.str();
  }
};

inline const char* status_str(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "P";
    case CheckStatus::Fail: return "F";
    case CheckStatus::NA: return "NA";
  }
  return "?";
}

struct VerifyOptions {
  std::string mode = "labeled";  // or "nonisomorphic"
  int workers = 1;
  std::string csv_path;              // empty = no CSV
  std::string counterexample_path;   // empty = no graph6 failure file
  bool failures_only = false;        // CSV rows only for failing graphs
};

inline SweepSummary verify_range(int n_min, int n_max, const VerifyOptions& opt = {}) {
  bool noniso = opt.mode == "nonisomorphic";
  if (!noniso && opt.mode != "labeled")
    throw std::invalid_argument("verify_range: mode must be labeled or nonisomorphic");
  if (n_min < 2 || n_min > n_max || n_max > (noniso ? 7 : 8))
    throw std::invalid_argument("verify_range: invalid n range");
  int workers = std::max(1, opt.workers);

  auto t0 = std::chrono::steady_clock::now();
  SweepSummary sum;
  sum.n_min = n_min;
  sum.n_max = n_max;
  sum.mode = opt.mode;
  sum.tallies.resize(check_registry().size());

  std::ofstream csv;
  if (!opt.csv_path.empty()) {
    csv.open(opt.csv_path);
    if (!csv) throw std::runtime_error("verify_range: cannot open " + opt.csv_path);
    csv << "graph6,n,m,sigma,tie";
    for (const CheckDef& d : check_registry()) csv << "," << d.id;
    csv << "\n";
  }
  std::ofstream cx;
  if (!opt.counterexample_path.empty()) {
    cx.open(opt.counterexample_path);
    if (!cx) throw std::runtime_error("verify_range: cannot open " + opt.counterexample_path);
  }

  for (int n = n_min; n <= n_max; ++n) {
    std::vector<std::uint64_t> masks;
    if (noniso) {
      for (const Graph& g : enumerate_nonisomorphic(n)) masks.push_back(g.edge_bitmask());
    }
    std::uint64_t total = noniso ? masks.size() : labeled_count(n);

    // contiguous chunks; worker-local tallies and records, merged in order
    std::uint64_t nchunks = std::min<std::uint64_t>(total, std::uint64_t(workers) * 16);
    struct ChunkResult {
      std::vector<CheckTally> tallies{check_registry().size()};
      std::uint64_t fails = 0;
      std::vector<std::pair<std::uint64_t, VerificationRecord>> records;
    };
    std::vector<ChunkResult> chunks(nchunks);
    std::atomic<std::uint64_t> next{0};
    bool keep_records = csv.is_open() || cx.is_open();
    bool failures_only = opt.failures_only;

    auto work = [&] {
      for (;;) {
        std::uint64_t ci = next.fetch_add(1);
        if (ci >= nchunks) return;
        std::uint64_t lo = total * ci / nchunks, hi = total * (ci + 1) / nchunks;
        ChunkResult& out = chunks[ci];
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
          Graph g = Graph::from_bitmask(n, noniso ? masks[idx] : idx);
          VerificationRecord rec = run_suite(g);
          for (size_t i = 0; i < rec.results.size(); ++i) {
            switch (rec.results[i].status) {
              case CheckStatus::Pass: ++out.tallies[i].pass; break;
              case CheckStatus::Fail: ++out.tallies[i].fail; break;
              case CheckStatus::NA: ++out.tallies[i].na; break;
            }
          }
          if (rec.any_fail) ++out.fails;
          bool want_csv = csv.is_open() && (!failures_only || rec.any_fail);
          bool want_cx = cx.is_open() && rec.any_fail;
          if (keep_records && (want_csv || want_cx))
            out.records.emplace_back(idx, std::move(rec));
        }
      }
    };
    std::vector<std::thread> pool;
    for (int w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();

    for (const ChunkResult& ch : chunks) {
      for (size_t i = 0; i < sum.tallies.size(); ++i) {
        sum.tallies[i].pass += ch.tallies[i].pass;
        sum.tallies[i].fail += ch.tallies[i].fail;
        sum.tallies[i].na += ch.tallies[i].na;
      }
      sum.counterexamples += ch.fails;
      for (const auto& [idx, rec] : ch.records) {
        if (csv.is_open() && (!failures_only || rec.any_fail)) {
          csv << rec.graph6 << "," << rec.n << "," << rec.m << "," << rec.sigma << ","
              << (rec.tie ? 1 : 0);
          for (const CheckOutcome& o : rec.results) csv << "," << status_str(o.status);
          csv << "\n";
        }
        if (cx.is_open() && rec.any_fail) cx << rec.graph6 << "\n";
      }
    }
    sum.graph_count += total;
  }
  sum.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return sum;
}

// Erdos-Renyi spot checks at orders where exhaustion is infeasible.
// p cycles over {0.2, 0.5, 0.8}; fully reproducible from the seed.
inline SweepSummary random_regression(std::uint64_t seed, int trials, int n_max) {
  if (n_max < 2 || n_max > 12)
    throw std::invalid_argument("random_regression: 2 <= n_max <= 12");
  SweepSummary sum;
  sum.n_min = std::min(8, n_max);
  sum.n_max = n_max;
  sum.mode = "random";
  sum.tallies.resize(check_registry().size());
  std::mt19937 rng(static_cast<std::uint32_t>(seed));
  const double ps[] = {0.2, 0.5, 0.8};
  auto t0 = std::chrono::steady_clock::now();
  for (int t = 0; t < trials; ++t) {
    int n = sum.n_min + static_cast<int>(rng() % (n_max - sum.n_min + 1));
    double p = ps[t % 3];
    std::vector<std::pair<int, int>> es;
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int v = 1; v < n; ++v)
      for (int w = 0; w < v; ++w)
        if (u(rng) < p) es.push_back({w, v});
    VerificationRecord rec = run_suite(Graph::from_edges(n, es), 12);
    for (size_t i = 0; i < rec.results.size(); ++i) {
      switch (rec.results[i].status) {
        case CheckStatus::Pass: ++sum.tallies[i].pass; break;
        case CheckStatus::Fail: ++sum.tallies[i].fail; break;
        case CheckStatus::NA: ++sum.tallies[i].na; break;
      }
    }
    if (rec.any_fail) ++sum.counterexamples;
    ++sum.graph_count;
  }
  sum.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return sum;
}

}  // namespace lapspec
