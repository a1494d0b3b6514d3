#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <random>

#include "pentagon/blowup.hpp"
#include "pentagon/errors.hpp"
#include "test_util.hpp"

using namespace pentagon;
using testutil::c5;
using testutil::k3_family;

namespace {

// oracle: an induced subgraph on 5 vertices is a C5 iff all five internal
// degrees are 2 (the only 2-regular graph on 5 vertices is the cycle)
long long c5_count_oracle(const Graph& g) {
  long long hits = 0;
  std::vector<int> idx{0, 1, 2, 3, 4};
  if (g.n < 5) return 0;
  while (true) {
    std::uint32_t mask = 0;
    for (int v : idx) mask |= 1u << v;
    bool ok = true;
    for (int v : idx)
      if (std::popcount(g.adj[v] & mask) != 2) ok = false;
    if (ok) ++hits;
    int i = 4;
    while (i >= 0 && idx[i] == g.n - 5 + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < 5; ++j) idx[j] = idx[j - 1] + 1;
  }
  return hits;
}

}  // namespace

TEST_CASE("blow_up basics") {
  CHECK(canonical_form(blow_up(BlowupSpec::uniform(c5(), 1))) == canonical_form(c5()));

  Graph b2 = blow_up(BlowupSpec::uniform(c5(), 2));
  CHECK(b2.n == 10);
  CHECK(b2.edge_count() == 20);

  // per-vertex factors
  Graph b = blow_up(BlowupSpec{c5(), {2, 1, 1, 1, 1}});
  CHECK(b.n == 6);
  CHECK(b.edge_count() == 7);

  CHECK_THROWS_AS(blow_up(BlowupSpec::uniform(c5(), 7)), size_error);
  CHECK_THROWS_AS(blow_up(BlowupSpec{c5(), {1, 1}}), argument_error);
  CHECK_THROWS_AS(blow_up(BlowupSpec{c5(), {0, 1, 1, 1, 1}}), argument_error);
}

TEST_CASE("blow-ups of triangle-free bases stay triangle-free") {
  std::mt19937 rng(13);
  for (int it = 0; it < 30; ++it) {
    int n = 3 + static_cast<int>(rng() % 4);
    Graph base = testutil::random_triangle_free(rng, n);
    std::vector<int> factors;
    int budget = 20;
    for (int v = 0; v < n; ++v) {
      int f = 1 + static_cast<int>(rng() % 3);
      factors.push_back(f);
      budget -= f;
    }
    if (budget < 0) continue;
    Graph g = blow_up(BlowupSpec{base, factors});
    CHECK_FALSE(contains_forbidden(g, k3_family()));
  }
}

TEST_CASE("balanced C5 blow-ups hold exactly N^5 pentagons") {
  for (int factor = 1; factor <= 4; ++factor) {
    Graph g = blow_up(BlowupSpec::uniform(c5(), factor));
    long long expect = 1;
    for (int i = 0; i < 5; ++i) expect *= factor;
    CHECK(count_induced_copies(g, c5()) == expect);
    CHECK(c5_count_oracle(g) == expect);
  }
}

TEST_CASE("erdos_check") {
  ErdosCheckResult r = erdos_check(c5());
  CHECK(r.count == 1);
  CHECK(r.cap == Rat(1));
  CHECK(r.verdict == ErdosVerdict::kTight);

  r = erdos_check(blow_up(BlowupSpec::uniform(c5(), 2)));
  CHECK(r.count == 32);
  CHECK(r.cap == Rat(32));
  CHECK(r.verdict == ErdosVerdict::kTight);

  r = erdos_check(named_graph("petersen"));
  CHECK(r.count == 12);
  CHECK(r.cap == Rat(32));
  CHECK(r.verdict == ErdosVerdict::kBelow);

  // a non-integral cap: n = 7 gives (7/5)^5
  r = erdos_check(Graph::empty(7));
  CHECK(r.cap == Rat(16807, 3125));
  CHECK(r.verdict == ErdosVerdict::kBelow);

  CHECK_THROWS_AS(erdos_check(named_graph("k3")), argument_error);
}

TEST_CASE("density_trend") {
  auto rows = density_trend(c5(), c5(), 4);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0] == std::pair(1, Rat(1)));
  CHECK(rows[1] == std::pair(2, Rat(8, 63)));
  CHECK(rows[2] == std::pair(3, Rat(243, 3003)));
  CHECK(rows[3] == std::pair(4, Rat(1024, binomial(20, 5))));

  // decreasing toward 24/625 from above for factor >= 2
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(rows[i].second > Rat(24, 625));
    if (i >= 2) CHECK(rows[i].second < rows[i - 1].second);
  }

  auto zero = density_trend(Graph::empty(5), c5(), 3);
  for (auto& [factor, density] : zero) CHECK(density == Rat(0));

  CHECK_THROWS_AS(density_trend(c5(), c5(), 7), size_error);
}

TEST_CASE("blowup_reduction_demo") {
  std::string tight = blowup_reduction_demo(c5());
  CHECK(tight.find("margin count-cap: 0 (tight)") != std::string::npos);
  CHECK(tight.find("= 24/625") != std::string::npos);

  std::string below = blowup_reduction_demo(named_graph("petersen"));
  CHECK(below.find("induced C5 count: 12") != std::string::npos);
  CHECK(below.find("cap (n/5)^5:      32") != std::string::npos);
  CHECK(below.find("-20 (below)") != std::string::npos);
  // 120 * 12 / 10^5 = 9/625
  CHECK(below.find("= 9/625") != std::string::npos);

  std::string t2 = blowup_reduction_demo(blow_up(BlowupSpec::uniform(c5(), 2)));
  CHECK(t2.find("(tight)") != std::string::npos);
}
