// lapspec: per-graph spectral reports, bound evaluation, family
// classification, exhaustive verification sweeps and the parameterized
// proof-matrix grid.
//
// Exit codes: 0 success / all checks pass, 1 a verified failure was found,
// 2 usage or parse error.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lapspec/harness.hpp"

using json = nlohmann::json;
using namespace lapspec;

namespace {

// 6 significant digits for floats (reproducible golden output)
std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

std::string rat(const Rat& r) { return r.get_str(); }

struct InputOptions {
  std::string graph6_arg, file_path, family_spec;
};

// "name:p1,p2" per --help
Graph graph_from_family_spec(const std::string& spec) {
  auto colon = spec.find(':');
  std::string name = spec.substr(0, colon);
  std::vector<int> params;
  if (colon != std::string::npos) {
    std::stringstream ss(spec.substr(colon + 1));
    for (std::string tok; std::getline(ss, tok, ',');) params.push_back(std::stoi(tok));
  }
  return family(name, params);
}

// resolve the input source to a list of graphs; stdin when no source given
std::vector<Graph> collect_inputs(const InputOptions& in) {
  std::vector<Graph> graphs;
  if (!in.graph6_arg.empty()) {
    graphs.push_back(parse_graph6(in.graph6_arg));
  } else if (!in.family_spec.empty()) {
    graphs.push_back(graph_from_family_spec(in.family_spec));
  } else {
    std::istream* is = &std::cin;
    std::ifstream f;
    if (!in.file_path.empty()) {
      f.open(in.file_path);
      if (!f) throw std::runtime_error("cannot open " + in.file_path);
      is = &f;
    }
    for (std::string line; std::getline(*is, line);) {
      if (line.empty()) continue;
      graphs.push_back(parse_graph6(line));
    }
  }
  if (graphs.empty()) throw std::runtime_error("no input graphs");
  return graphs;
}

void add_input_flags(CLI::App* cmd, InputOptions& in) {
  auto* a = cmd->add_option("--graph6", in.graph6_arg, "graph6 string");
  auto* b = cmd->add_option("--file", in.file_path, "file of graph6 lines");
  auto* c = cmd->add_option(
      "--family", in.family_spec,
      "family spec name:p1,p2 (complete, empty, star, complete_bipartite, double_star, "
      "star_plus_isolated, t2_family, two_cliques, path, cycle)");
  a->excludes(b)->excludes(c);
  b->excludes(c);
}

json compute_json(const GraphContext& c) {
  EnergyResult e = detail::energy(c);
  json j;
  j["graph6"] = to_graph6(c.graph);
  j["n"] = c.n();
  j["m"] = c.m();
  j["degrees"] = c.stats.degrees;
  j["delta1"] = c.stats.delta1;
  j["delta2"] = c.stats.delta2;
  j["k"] = c.stats.k;
  j["avg_deg"] = {{"value", c.stats.avg_deg.get_d()}, {"exact", rat(c.stats.avg_deg)}};
  j["connected"] = c.connected;
  j["sigma"] = c.sig.sigma;
  j["tie"] = c.sig.tie;
  j["counts"] = {{"above", c.sig.count_above},
                 {"equal", c.sig.count_equal},
                 {"below", c.sig.count_below}};
  j["spectrum"] = c.spec.values;
  j["spectrum_err"] = c.spec.err;
  j["laplacian_energy"] = e.le;
  j["le_identity_residual"] = e.identity_residual;
  return j;
}

void compute_text(const GraphContext& c, std::ostream& os) {
  EnergyResult e = detail::energy(c);
  os << "graph6=" << to_graph6(c.graph) << " n=" << c.n() << " m=" << c.m() << "\n";
  os << "degrees=";
  for (size_t i = 0; i < c.stats.degrees.size(); ++i)
    os << (i ? "," : "") << c.stats.degrees[i];
  os << " delta1=" << c.stats.delta1 << " delta2=" << c.stats.delta2 << " k=" << c.stats.k
     << " avg_deg=" << rat(c.stats.avg_deg) << " connected=" << (c.connected ? 1 : 0)
     << "\n";
  os << "sigma=" << c.sig.sigma << " tie=" << (c.sig.tie ? "true" : "false") << " (above="
     << c.sig.count_above << " equal=" << c.sig.count_equal << " below=" << c.sig.count_below
     << ")\n";
  os << "spectrum=";
  for (size_t i = 0; i < c.spec.values.size(); ++i)
    os << (i ? "," : "") << num(c.spec.values[i]);
  os << " err=" << num(c.spec.err) << "\n";
  os << "LE=" << num(e.le) << " identity_residual=" << num(e.identity_residual) << "\n";
}

std::vector<BoundReport> all_bounds(const GraphContext& c) {
  return {merris_lower(c),       anderson_morley_upper(c),
          li_pan_lower(c),       das_mu2_lower(c),
          mu2_avg_lower(c),      third_smallest_upper(c),
          le_upper_old(c),       le_upper_new(c),
          compare_le_bounds(c),  s_sigma_upper(c),
          avg_lt_delta2_plus1(c), lemma31_check(c),
          pan_hou_check(c),      distinct_mu_characterization(c)};
}

json bound_json(const BoundReport& r) {
  json j;
  j["id"] = r.bound_id;
  j["applicable"] = r.applicable;
  if (!r.applicable) {
    j["reason"] = r.reason;
    return j;
  }
  j["holds"] = r.holds;
  j["equality"] = r.equality;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  if (r.lhs_exact) j["lhs_exact"] = rat(*r.lhs_exact);
  if (r.rhs_exact) j["rhs_exact"] = rat(*r.rhs_exact);
  if (!r.witness.empty()) j["witness"] = r.witness;
  return j;
}

void bound_text(const BoundReport& r, std::ostream& os) {
  os << "  " << r.bound_id;
  for (size_t p = r.bound_id.size(); p < 29; ++p) os << ' ';
  if (!r.applicable) {
    os << "N.A. (" << r.reason << ")\n";
    return;
  }
  os << (r.holds ? "holds" : "VIOLATED") << (r.equality ? " equality" : "")
     << " lhs=" << num(r.lhs);
  if (r.lhs_exact) os << " (=" << rat(*r.lhs_exact) << ")";
  os << " rhs=" << num(r.rhs);
  if (r.rhs_exact) os << " (=" << rat(*r.rhs_exact) << ")";
  if (!r.witness.empty()) os << " [" << r.witness << "]";
  os << "\n";
}

json classify_json(const Graph& g) {
  json j;
  j["graph6"] = to_graph6(g);
  FamilyMatch spi = recognize_star_plus_isolated(g);
  j["star_plus_isolated"] =
      spi.matched() ? json{{"match", true}, {"r", spi.r}} : json{{"match", false}};
  bool structural = g.order() >= 2 && sigma1_by_structure(g);
  int sig_exact = sigma(g).sigma;
  j["sigma1_structural"] = structural;
  j["sigma_exact"] = sig_exact;
  j["agreement"] = g.order() < 2 || structural == (sig_exact == 1);
  j["in_exception_family_1mk1"] = in_exception_family_1mk1(g);
  j["in_exception_family_t2"] = in_exception_family_t2(g);
  FamilyMatch m1 = recognize_mu2_equality_family(g);
  j["mu2_equality_family"] = m1.matched()
                                 ? json{{"family", family_name(m1.family)}, {"r", m1.r}}
                                 : json{{"family", nullptr}};
  FamilyMatch m2 = recognize_t2_equality_family(g);
  j["t2_equality_family"] = m2.matched()
                                ? json{{"family", family_name(m2.family)}, {"r", m2.r}}
                                : json{{"family", nullptr}};
  return j;
}

void classify_text(const Graph& g, std::ostream& os) {
  json j = classify_json(g);
  os << "graph6=" << j["graph6"].get<std::string>() << "\n";
  const auto& spi = j["star_plus_isolated"];
  os << "  star_plus_isolated: ";
  if (spi["match"].get<bool>())
    os << "yes r=" << spi["r"].get<int>() << "\n";
  else
    os << "no\n";
  os << "  sigma1_structural=" << (j["sigma1_structural"].get<bool>() ? "true" : "false")
     << " sigma_exact=" << j["sigma_exact"].get<int>()
     << " agreement=" << (j["agreement"].get<bool>() ? "true" : "false") << "\n";
  os << "  exception_family_1mk1=" << (j["in_exception_family_1mk1"].get<bool>() ? 1 : 0)
     << " exception_family_t2=" << (j["in_exception_family_t2"].get<bool>() ? 1 : 0) << "\n";
  auto fam = [&](const char* key) {
    const auto& f = j[key];
    return f["family"].is_null() ? std::string("none")
                                 : f["family"].get<std::string>() + " r=" +
                                       std::to_string(f["r"].get<int>());
  };
  os << "  mu2_equality_family=" << fam("mu2_equality_family")
     << " t2_equality_family=" << fam("t2_equality_family") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Laplacian spectral invariants, bounds and verification"};
  app.require_subcommand(1);
  std::string format = "text";

  InputOptions in_compute, in_bounds, in_classify;
  auto* cmd_compute =
      app.add_subcommand("compute", "n, m, degree stats, exact sigma, spectrum, LE");
  add_input_flags(cmd_compute, in_compute);
  cmd_compute->add_option("--format", format, "text|json");

  auto* cmd_bounds = app.add_subcommand("bounds", "evaluate every stated bound");
  add_input_flags(cmd_bounds, in_bounds);
  cmd_bounds->add_option("--format", format, "text|json");

  auto* cmd_classify = app.add_subcommand("classify", "family recognition + sigma=1 verdict");
  add_input_flags(cmd_classify, in_classify);
  cmd_classify->add_option("--format", format, "text|json");

  auto* cmd_verify = app.add_subcommand("verify", "exhaustive sweep over all graphs");
  std::string range = "2..7", mode = "labeled", out_csv, out_cx;
  int workers = 1;
  bool failures_only = false;
  cmd_verify->add_option("--n", range, "order range A..B");
  cmd_verify->add_option("--mode", mode, "labeled|nonisomorphic");
  cmd_verify->add_option("--workers", workers, "worker threads");
  cmd_verify->add_option("--out", out_csv, "CSV report path");
  cmd_verify->add_option("--counterexamples", out_cx, "graph6 counterexample file");
  cmd_verify->add_flag("--failures-only", failures_only, "CSV rows only for failures");

  auto* cmd_random = app.add_subcommand("random", "randomized spot checks at 8 <= n <= 12");
  std::uint64_t seed = 1;
  int trials = 1000, nmax = 10;
  cmd_random->add_option("--seed", seed, "RNG seed");
  cmd_random->add_option("--trials", trials, "number of random graphs");
  cmd_random->add_option("--nmax", nmax, "maximum order");

  auto* cmd_appendix = app.add_subcommand("appendix", "verify proof matrices L1..L9");
  std::string id;
  int d1 = 0, d2 = 0;
  cmd_appendix->add_option("--id", id, "single matrix id L1..L9");
  cmd_appendix->add_option("--d1", d1, "Delta1 (with --id)");
  cmd_appendix->add_option("--d2", d2, "Delta2 (with --id)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*cmd_compute || *cmd_bounds || *cmd_classify) {
      const InputOptions& in = *cmd_compute ? in_compute : *cmd_bounds ? in_bounds : in_classify;
      std::vector<Graph> graphs = collect_inputs(in);
      json out = json::array();
      for (const Graph& g : graphs) {
        if (*cmd_classify) {
          if (format == "json")
            out.push_back(classify_json(g));
          else
            classify_text(g, std::cout);
          continue;
        }
        GraphContext c(g);
        if (*cmd_compute) {
          if (format == "json")
            out.push_back(compute_json(c));
          else
            compute_text(c, std::cout);
        } else {
          if (format == "json") {
            json j = compute_json(c);
            j["bounds"] = json::array();
            for (const BoundReport& r : all_bounds(c)) j["bounds"].push_back(bound_json(r));
            out.push_back(j);
          } else {
            std::cout << "graph6=" << to_graph6(g) << " n=" << c.n() << " m=" << c.m()
                      << "\n";
            for (const BoundReport& r : all_bounds(c)) bound_text(r, std::cout);
          }
        }
      }
      if (format == "json") std::cout << out.dump(2) << "\n";
      return 0;
    }

    if (*cmd_verify) {
      auto dots = range.find("..");
      if (dots == std::string::npos) {
        std::cerr << "verify: --n expects A..B\n";
        return 2;
      }
      int lo = std::stoi(range.substr(0, dots)), hi = std::stoi(range.substr(dots + 2));
      VerifyOptions opt;
      opt.mode = mode;
      opt.workers = workers;
      opt.csv_path = out_csv;
      opt.counterexample_path = out_cx;
      opt.failures_only = failures_only;
      SweepSummary s;
      try {
        s = verify_range(lo, hi, opt);
      } catch (const std::invalid_argument& e) {
        std::cerr << "verify: " << e.what() << "\n";
        return 2;
      }
      std::cout << s.text() << s.key_value_block();
      return s.counterexamples == 0 ? 0 : 1;
    }

    if (*cmd_random) {
      SweepSummary s = random_regression(seed, trials, nmax);
      std::cout << s.text() << s.key_value_block();
      return s.counterexamples == 0 ? 0 : 1;
    }

    if (*cmd_appendix) {
      int fails = 0;
      auto report = [&](const std::string& mid, int a, int b) {
        BoundReport r = verify_param_matrix(mid, a, b);
        if (!r.holds) {
          ++fails;
          std::cout << mid << "(" << a << "," << b << ") FAILED: " << r.witness << "\n";
        }
      };
      if (!id.empty()) {
        BoundReport r = verify_param_matrix(id, d1, d2);
        std::cout << id << "(" << d1 << "," << d2 << ") "
                  << (r.holds ? "pass" : "FAILED: " + r.witness) << " mu2=" << num(r.lhs)
                  << "\n";
        if (id == "L3" && r.holds)
          std::cout << "eigenvalues " << d1 << "," << d2 + 1 << "," << d2 - 1 << "\n";
        return r.holds ? 0 : 1;
      }
      for (int b = 2; b <= 10; ++b)
        for (int a = 2 * b + 3; a <= 40; ++a)
          for (const char* mid : {"L4", "L5", "L6", "L7", "L8", "L9"}) report(mid, a, b);
      for (int b = 2; b <= 10; ++b)
        for (int a = b + 1; a <= 40; ++a)
          for (const char* mid : {"L1", "L2", "L3"}) report(mid, a, b);
      std::cout << "appendix grid: " << (fails == 0 ? "all pass" : std::to_string(fails) +
                                                                       " failures")
                << "\n";
      return fails == 0 ? 0 : 1;
    }
  } catch (const Graph6Error& e) {
    std::cerr << "parse error at byte " << e.offset << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
