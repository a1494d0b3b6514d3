#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "pentagon/errors.hpp"
#include "pentagon/graph.hpp"
#include "test_util.hpp"

using namespace pentagon;
using testutil::c5;
using testutil::k3_family;

namespace {

// independent graph6 encoder used as the oracle for write_graph6
std::string g6_reference(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<int> bits(n * (n - 1) / 2, 0);
  auto pos = [&](int i, int j) {  // i < j, column-major upper triangle
    return j * (j - 1) / 2 + i;
  };
  for (auto [u, v] : edges) bits[pos(std::min(u, v), std::max(u, v))] = 1;
  std::string out(1, static_cast<char>(63 + n));
  for (std::size_t k = 0; k < bits.size(); k += 6) {
    int v = 0;
    for (std::size_t t = 0; t < 6; ++t)
      v = (v << 1) | (k + t < bits.size() ? bits[k + t] : 0);
    out.push_back(static_cast<char>(63 + v));
  }
  return out;
}

}  // namespace

TEST_CASE("graph6 parse basics") {
  Graph g = parse_graph6("D??");
  CHECK(g.n == 5);
  CHECK(g.edge_count() == 0);

  // C5 on the explicit edge list {12,23,34,45,51}, cross-checked against the
  // reference encoder
  std::string c5_g6 = g6_reference(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  Graph c = parse_graph6(c5_g6);
  CHECK(c.n == 5);
  CHECK(c.edge_count() == 5);
  for (int v = 0; v < 5; ++v) CHECK(c.degree(v) == 2);
  CHECK(write_graph6(c5()) == c5_g6);
}

TEST_CASE("graph6 write basics") {
  CHECK(write_graph6(Graph::empty(5)) == "D??");
  CHECK(write_graph6(Graph::from_edges(2, {{0, 1}})) == g6_reference(2, {{0, 1}}));
  CHECK(write_graph6(Graph::from_edges(2, {{0, 1}})) == "A_");
}

TEST_CASE("graph6 round trip") {
  std::mt19937 rng(7);
  for (int it = 0; it < 200; ++it) {
    int n = 1 + static_cast<int>(rng() % 12);
    Graph g = testutil::random_graph(rng, n, 0.4);
    CHECK(parse_graph6(write_graph6(g)) == g);
  }
  // and string-level: every canonical string written comes back unchanged
  for (const Graph& g : enumerate_free_graphs(5, k3_family())) {
    std::string s = write_graph6(g);
    CHECK(write_graph6(parse_graph6(s)) == s);
  }
}

TEST_CASE("graph6 errors name the byte offset") {
  CHECK_THROWS_AS(parse_graph6(""), parse_error);
  CHECK_THROWS_WITH_AS(parse_graph6("D?"), doctest::Contains("too short"), parse_error);
  CHECK_THROWS_WITH_AS(parse_graph6("D???"), doctest::Contains("byte offset 3"), parse_error);
  CHECK_THROWS_WITH_AS(parse_graph6("D?\x02"), doctest::Contains("byte offset 2"), parse_error);
  CHECK_THROWS_WITH_AS(parse_graph6("~??"), doctest::Contains("byte offset 0"), parse_error);
  // nonzero padding: K2 has 1 pair bit, the low 5 bits of the byte must be 0
  CHECK_THROWS_WITH_AS(parse_graph6("A`"), doctest::Contains("trailing"), parse_error);
  CHECK_THROWS_AS(parse_graph6(">>graph6<<D??"), parse_error);
}

TEST_CASE("induced subgraph") {
  Graph c = c5();
  std::vector<int> all{0, 1, 2, 3, 4};
  CHECK(induced_subgraph(c, all) == c);
  std::vector<int> path{0, 1, 2};
  Graph p = induced_subgraph(c, path);
  CHECK(p.edge_count() == 2);
  std::vector<int> far{0, 2};
  CHECK(induced_subgraph(c, far).edge_count() == 0);
  CHECK_THROWS_AS(induced_subgraph(c, std::vector<int>{}), argument_error);
  CHECK_THROWS_AS(induced_subgraph(c, std::vector<int>{0, 7}), argument_error);
  CHECK_THROWS_AS(induced_subgraph(c, std::vector<int>{0, 0}), argument_error);
}

TEST_CASE("contains_forbidden") {
  CHECK(contains_forbidden(named_graph("k3"), k3_family()));
  CHECK_FALSE(contains_forbidden(c5(), k3_family()));
  Graph pet = named_graph("petersen");
  CHECK_FALSE(contains_forbidden(pet, k3_family()));
  // oracle: raw scan over all vertex triples
  bool has_tri = false;
  for (int a = 0; a < pet.n; ++a)
    for (int b = a + 1; b < pet.n; ++b)
      for (int c2 = b + 1; c2 < pet.n; ++c2)
        if (pet.has_edge(a, b) && pet.has_edge(b, c2) && pet.has_edge(a, c2)) has_tri = true;
  CHECK_FALSE(has_tri);
  // non-induced convention: C4 plus a chord contains P4
  Graph diamond = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
  Graph p4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(contains_forbidden(diamond, ForbiddenFamily::of({p4})));
}

TEST_CASE("canonical form") {
  Graph c = c5();
  std::mt19937 rng(11);
  for (int it = 0; it < 50; ++it) {
    std::vector<int> perm{0, 1, 2, 3, 4};
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(canonical_form(apply_permutation(c, perm)) == canonical_form(c));
  }
  CHECK(canonical_form(Graph::empty(6)).bits == 0);
  Graph p3 = Graph::from_edges(3, {{0, 1}, {1, 2}});
  CHECK(canonical_form(p3) != canonical_form(named_graph("k3")));
  CHECK_THROWS_AS(canonical_form(Graph::empty(9)), size_error);
}

TEST_CASE("canonical form = isomorphism, randomized") {
  std::mt19937 rng(23);
  for (int it = 0; it < 300; ++it) {
    int n = 2 + static_cast<int>(rng() % 6);  // up to 7
    Graph a = testutil::random_graph(rng, n, 0.5);
    Graph b = testutil::random_graph(rng, n, 0.5);
    CHECK((canonical_form(a) == canonical_form(b)) == testutil::iso_brute(a, b));
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(canonical_form(apply_permutation(a, perm)) == canonical_form(a));
  }
}

TEST_CASE("enumerate_free_graphs counts and completeness") {
  CHECK(enumerate_free_graphs(3, k3_family()).size() == 3);
  CHECK(enumerate_free_graphs(4, k3_family()).size() == 7);
  CHECK(enumerate_free_graphs(5, k3_family()).size() == 14);

  // completeness for l <= 6: every labeled triangle-free graph's canonical
  // form appears exactly once (full 2^C(l,2) scan)
  for (int l = 2; l <= 6; ++l) {
    auto listed = enumerate_free_graphs(l, k3_family());
    std::set<std::uint32_t> listed_bits;
    for (const Graph& g : listed) {
      CHECK_FALSE(contains_forbidden(g, k3_family()));
      CHECK(listed_bits.insert(canonical_form(g).bits).second);  // no duplicates
    }
    std::set<std::uint32_t> scanned;
    int pairs = l * (l - 1) / 2;
    std::vector<std::pair<int, int>> pairlist;
    for (int u = 0; u < l; ++u)
      for (int v = u + 1; v < l; ++v) pairlist.emplace_back(u, v);
    for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
      Graph g = Graph::empty(l);
      for (int k = 0; k < pairs; ++k)
        if ((mask >> k) & 1u) g.add_edge(pairlist[k].first, pairlist[k].second);
      if (!contains_forbidden(g, k3_family())) scanned.insert(canonical_form(g).bits);
    }
    CHECK(scanned == listed_bits);
  }

  // deterministic order: sorted by (edge count, canonical bits)
  auto hosts = enumerate_free_graphs(5, k3_family());
  for (std::size_t i = 1; i < hosts.size(); ++i) {
    auto ka = std::pair(hosts[i - 1].edge_count(), canonical_form(hosts[i - 1]).bits);
    auto kb = std::pair(hosts[i].edge_count(), canonical_form(hosts[i]).bits);
    CHECK(ka < kb);
  }
}

TEST_CASE("count_induced_copies") {
  CHECK(count_induced_copies(c5(), c5()) == 1);
  CHECK(count_induced_copies(named_graph("petersen"), c5()) == 12);
  CHECK(testutil::count_induced_brute(named_graph("petersen"), c5()) == 12);
  CHECK(count_induced_copies(Graph::empty(6), c5()) == 0);

  // consistency with the raw subset scan on random graphs
  std::mt19937 rng(5);
  for (int it = 0; it < 20; ++it) {
    Graph g = testutil::random_graph(rng, 6 + static_cast<int>(rng() % 5), 0.45);
    Graph a = testutil::random_graph(rng, 3 + static_cast<int>(rng() % 2), 0.5);
    CHECK(count_induced_copies(g, a) == testutil::count_induced_brute(g, a));
  }
}

TEST_CASE("induced_density") {
  CHECK(induced_density(c5(), c5()) == Rat(1));
  CHECK(induced_density(Graph::empty(6), c5()) == Rat(0));
  std::mt19937 rng(6);
  for (int it = 0; it < 30; ++it) {
    Graph g = testutil::random_graph(rng, 5 + static_cast<int>(rng() % 4), 0.5);
    Rat d = induced_density(g, testutil::random_graph(rng, 4, 0.5));
    CHECK(d >= 0);
    CHECK(d <= 1);
  }
  // density 1 iff every k-subset induces the pattern
  CHECK(induced_density(Graph::empty(7), Graph::empty(3)) == Rat(1));
}

TEST_CASE("named graphs") {
  CHECK(named_graph("k3").edge_count() == 3);
  CHECK(named_graph("c5").edge_count() == 5);
  CHECK(named_graph("petersen").n == 10);
  CHECK(named_graph("petersen").edge_count() == 15);
  CHECK(named_graph("empty:7") == Graph::empty(7));
  Graph e = named_graph("edge:5");
  CHECK(e.n == 5);
  CHECK(e.edge_count() == 1);
  CHECK_THROWS_AS(named_graph("frucht"), argument_error);
  CHECK(graph_from_spec("D??") == Graph::empty(5));
}
