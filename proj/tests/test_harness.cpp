#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "lapspec/harness.hpp"

using namespace lapspec;
using namespace lapspec::families;

TEST_CASE("enumerate_labeled") {
  CHECK(enumerate_labeled(2).size() == 2);
  CHECK(enumerate_labeled(3).size() == 8);
  CHECK(labeled_count(7) == 2097152);
  CHECK_THROWS(labeled_count(9));
  // bitmask order, deterministic
  auto v = enumerate_labeled(3);
  CHECK(v[0].size() == 0);
  CHECK(v[7].size() == 3);
}

TEST_CASE("nonisomorphic counts match brute-force dedup n<=5") {
  // dedup oracle: set of canonical forms over all labeled graphs
  std::vector<size_t> want{1, 2, 4, 11, 34};
  for (int n = 1; n <= 5; ++n) {
    std::set<std::uint64_t> canon;
    for (std::uint64_t mask = 0; mask < labeled_count(n); ++mask)
      canon.insert(canonical_bitmask(Graph::from_bitmask(n, mask)));
    auto reps = enumerate_nonisomorphic(n);
    CHECK(reps.size() == want[n - 1]);
    CHECK(canon.size() == want[n - 1]);
    // representatives are exactly the canonical forms
    std::set<std::uint64_t> got;
    for (const Graph& g : reps) got.insert(g.edge_bitmask());
    CHECK(got == canon);
  }
  CHECK(enumerate_nonisomorphic(6).size() == 156);
  CHECK_THROWS(enumerate_nonisomorphic(8));
}

TEST_CASE("run_suite worked examples") {
  VerificationRecord r = run_suite(complete_bipartite(3, 3));
  CHECK(r.n == 6);
  CHECK(r.sigma == 5);
  CHECK(r.tie);
  CHECK_FALSE(r.any_fail);
  const auto& defs = check_registry();
  for (size_t i = 0; i < defs.size(); ++i)
    if (defs[i].id == "mu2_avg_lower") {
      CHECK(r.results[i].status == CheckStatus::Pass);
      CHECK(r.results[i].detail.find("K_{n/2,n/2}") != std::string::npos);
    }

  r = run_suite(star(5));  // K_{1,4}
  CHECK(r.sigma == 1);
  CHECK_FALSE(r.any_fail);
  for (size_t i = 0; i < defs.size(); ++i)
    if (defs[i].id == "le_upper_new") CHECK(r.results[i].status == CheckStatus::NA);

  r = run_suite(empty_graph(4));
  CHECK(r.sigma == 4);
  CHECK_FALSE(r.any_fail);
  for (size_t i = 0; i < defs.size(); ++i)
    if (defs[i].id == "merris_lower") CHECK(r.results[i].status == CheckStatus::NA);
}

TEST_CASE("verify_range small sweeps") {
  SweepSummary s = verify_range(2, 5);
  CHECK(s.graph_count == 2 + 8 + 64 + 1024);
  CHECK(s.counterexamples == 0);
  for (const CheckTally& t : s.tallies) CHECK(t.fail == 0);

  VerifyOptions nm;
  nm.mode = "nonisomorphic";
  SweepSummary sn = verify_range(2, 5, nm);
  CHECK(sn.graph_count == 2 + 4 + 11 + 34);
  CHECK(sn.counterexamples == 0);

  CHECK_THROWS(verify_range(1, 5));
  CHECK_THROWS(verify_range(2, 9));
  VerifyOptions bad;
  bad.mode = "nope";
  CHECK_THROWS(verify_range(2, 3, bad));
}

TEST_CASE("verify_range determinism across workers") {
  VerifyOptions w1, w8;
  w1.workers = 1;
  w8.workers = 8;
  std::string a = verify_range(2, 5, w1).key_value_block();
  std::string b = verify_range(2, 5, w8).key_value_block();
  CHECK(a == b);
}

TEST_CASE("verify_range CSV output") {
  VerifyOptions opt;
  opt.csv_path = "harness_test_out.csv";
  opt.counterexample_path = "harness_test_cx.g6";
  SweepSummary s = verify_range(3, 3, opt);
  CHECK(s.graph_count == 8);
  std::ifstream in(opt.csv_path);
  std::string header;
  std::getline(in, header);
  CHECK(header.rfind("graph6,n,m,sigma,tie,", 0) == 0);
  CHECK(header.find("sigma1_equiv") != std::string::npos);
  int rows = 0;
  for (std::string line; std::getline(in, line);) ++rows;
  CHECK(rows == 8);
  std::ifstream cx(opt.counterexample_path);
  CHECK(cx.peek() == std::ifstream::traits_type::eof());  // no failures
  std::remove(opt.csv_path.c_str());
  std::remove(opt.counterexample_path.c_str());
}

TEST_CASE("suite outcomes are isomorphism-invariant") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 4 + static_cast<int>(rng() % 3);
    std::uint64_t bits = labeled_count(n) - 1;
    Graph g = Graph::from_bitmask(n, rng() & bits);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    VerificationRecord a = run_suite(g), b = run_suite(g.relabel(perm));
    CHECK(a.sigma == b.sigma);
    CHECK(a.tie == b.tie);
    for (size_t i = 0; i < a.results.size(); ++i)
      CHECK(a.results[i].status == b.results[i].status);
  }
}

TEST_CASE("random_regression") {
  SweepSummary a = random_regression(1, 60, 10);
  CHECK(a.graph_count == 60);
  CHECK(a.counterexamples == 0);
  SweepSummary b = random_regression(1, 60, 10);
  CHECK(a.key_value_block() == b.key_value_block());  // reproducible
  CHECK(random_regression(5, 0, 10).graph_count == 0);
}
