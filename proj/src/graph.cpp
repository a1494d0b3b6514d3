#include "pentagon/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <map>

#include "pentagon/errors.hpp"

namespace pentagon {

Graph Graph::empty(int n) {
  if (n < 1 || n > kMaxVertices)
    throw argument_error("graph: vertex count " + std::to_string(n) + " out of range 1..32");
  Graph g;
  g.n = n;
  return g;
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  Graph g = empty(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph Graph::from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
  Graph g = empty(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n || v >= n || u == v)
    throw argument_error("graph: bad edge {" + std::to_string(u + 1) + "," +
                         std::to_string(v + 1) + "} on " + std::to_string(n) + " vertices");
  adj[u] |= 1u << v;
  adj[v] |= 1u << u;
}

int Graph::degree(int v) const { return std::popcount(adj[v]); }

int Graph::edge_count() const {
  int s = 0;
  for (int v = 0; v < n; ++v) s += degree(v);
  return s / 2;
}

bool Graph::valid() const {
  if (n < 1 || n > kMaxVertices) return false;
  std::uint32_t mask = n == 32 ? ~0u : (1u << n) - 1;
  for (int v = 0; v < n; ++v) {
    if (adj[v] & ~mask) return false;
    if ((adj[v] >> v) & 1u) return false;
  }
  for (int v = n; v < kMaxVertices; ++v)
    if (adj[v]) return false;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (((adj[v] >> u) & 1u) != ((adj[u] >> v) & 1u)) return false;
  return true;
}

// ---- graph6 ----
//
// Column-major upper triangle: pairs (0,1), (0,2), (1,2), (0,3), ... with the
// first pair at the most significant position of each 6-bit group.

Graph parse_graph6(std::string_view text) {
  if (text.empty()) throw parse_error("graph6: empty string");
  auto bad = [&](std::size_t off, const std::string& why) {
    throw parse_error("graph6: " + why + " (byte offset " + std::to_string(off) + ")");
  };
  for (std::size_t i = 0; i < text.size(); ++i)
    if (text[i] < 63 || text[i] > 126) bad(i, "character out of range");
  int n = text[0] - 63;
  if (n < 1 || n > kMaxVertices)
    bad(0, "vertex count " + std::to_string(n) + " out of supported range 1..32");
  int pair_bits = n * (n - 1) / 2;
  std::size_t need = 1 + (pair_bits + 5) / 6;
  if (text.size() < need) bad(text.size(), "string too short");
  if (text.size() > need) bad(need, "string too long");
  Graph g = Graph::empty(n);
  int pos = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++pos) {
      int byte = 1 + pos / 6;
      int bit = 5 - pos % 6;
      if ((text[byte] - 63) >> bit & 1) g.add_edge(i, j);
    }
  }
  for (; pos < 6 * static_cast<int>(need - 1); ++pos) {
    int byte = 1 + pos / 6;
    int bit = 5 - pos % 6;
    if ((text[byte] - 63) >> bit & 1) bad(byte, "nonzero trailing bits");
  }
  return g;
}

std::string write_graph6(const Graph& g) {
  if (!g.valid()) throw argument_error("graph6: invalid graph");
  std::string out(1, static_cast<char>(63 + g.n));
  int acc = 0, nbits = 0;
  for (int j = 1; j < g.n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
  return out;
}

// ---- canonical form ----

namespace {

std::uint32_t triangle_bits(const Graph& g, std::span<const int> order) {
  int n = g.n;
  int total = n * (n - 1) / 2;
  std::uint32_t w = 0;
  int pos = 0;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < j; ++i, ++pos)
      if (g.has_edge(order[i], order[j])) w |= 1u << (total - 1 - pos);
  return w;
}

// Minimal word over all vertex orderings, one column of bits per placed
// vertex, pruned against the best complete word's prefix.
struct CanonSearch {
  const Graph& g;
  int n;
  int total;
  std::uint32_t best;
  std::array<int, kMaxCanonVertices> perm{};
  std::array<bool, kMaxCanonVertices> used{};

  explicit CanonSearch(const Graph& graph) : g(graph), n(graph.n), total(n * (n - 1) / 2) {
    std::array<int, kMaxCanonVertices> id{};
    for (int i = 0; i < n; ++i) id[i] = i;
    best = triangle_bits(g, std::span<const int>(id.data(), n));
    dfs(0, 0, 0);
  }

  void dfs(int depth, std::uint32_t word, int bits_done) {
    if (depth == n) {
      if (word < best) best = word;
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      std::uint32_t w = word;
      for (int i = 0; i < depth; ++i)
        if (g.has_edge(perm[i], v)) w |= 1u << (total - 1 - (bits_done + i));
      int nb = bits_done + depth;
      if (nb > 0 && (w >> (total - nb)) > (best >> (total - nb))) continue;
      perm[depth] = v;
      used[v] = true;
      dfs(depth + 1, w, nb);
      used[v] = false;
    }
  }
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  if (!g.valid()) throw argument_error("canonical_form: invalid graph");
  if (g.n > kMaxCanonVertices)
    throw size_error("canonical_form: brute-force canonicalization supports n <= 8, got n = " +
                     std::to_string(g.n));
  return CanonicalForm{g.n, CanonSearch(g).best};
}

Graph graph_of(const CanonicalForm& c) {
  Graph g = Graph::empty(c.n);
  int total = c.n * (c.n - 1) / 2;
  int pos = 0;
  for (int j = 0; j < c.n; ++j)
    for (int i = 0; i < j; ++i, ++pos)
      if ((c.bits >> (total - 1 - pos)) & 1u) g.add_edge(i, j);
  return g;
}

Graph apply_permutation(const Graph& g, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != g.n)
    throw argument_error("apply_permutation: permutation size mismatch");
  Graph h = Graph::empty(g.n);
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v)
      if (g.has_edge(u, v)) h.add_edge(perm[u], perm[v]);
  return h;
}

// ---- subgraph containment ----

namespace {

bool embed_from(const Graph& g, const Graph& sub, std::span<const int> order, int depth,
                std::array<int, kMaxCanonVertices>& image, std::uint32_t used) {
  if (depth == sub.n) return true;
  int sv = order[depth];
  for (int v = 0; v < g.n; ++v) {
    if ((used >> v) & 1u) continue;
    bool ok = true;
    for (int k = 0; k < depth && ok; ++k)
      if (sub.has_edge(order[k], sv) && !g.has_edge(image[order[k]], v)) ok = false;
    if (!ok) continue;
    image[sv] = v;
    if (embed_from(g, sub, order, depth + 1, image, used | (1u << v))) return true;
  }
  return false;
}

}  // namespace

bool contains_subgraph(const Graph& g, const Graph& sub) {
  if (sub.n > g.n || sub.edge_count() > g.edge_count()) return false;
  std::array<int, kMaxCanonVertices> order{};
  for (int i = 0; i < sub.n; ++i) order[i] = i;
  std::sort(order.begin(), order.begin() + sub.n,
            [&](int a, int b) { return sub.degree(a) > sub.degree(b); });
  std::array<int, kMaxCanonVertices> image{};
  return embed_from(g, sub, std::span<const int>(order.data(), sub.n), 0, image, 0);
}

ForbiddenFamily ForbiddenFamily::of(std::vector<Graph> graphs) {
  if (graphs.empty()) throw argument_error("forbidden family: must be nonempty");
  ForbiddenFamily fam;
  std::vector<CanonicalForm> seen;
  for (const Graph& g : graphs) {
    if (!g.valid()) throw argument_error("forbidden family: invalid member");
    if (g.edge_count() < 1) throw argument_error("forbidden family: member with no edges");
    CanonicalForm c = canonical_form(g);
    if (std::find(seen.begin(), seen.end(), c) != seen.end())
      throw argument_error("forbidden family: isomorphic duplicate member");
    seen.push_back(c);
    fam.members.push_back(graph_of(c));
  }
  return fam;
}

bool contains_forbidden(const Graph& g, const ForbiddenFamily& fam) {
  for (const Graph& m : fam.members)
    if (contains_subgraph(g, m)) return true;
  return false;
}

std::vector<Graph> enumerate_free_graphs(int l, const ForbiddenFamily& fam) {
  if (l < 1 || l > kMaxCanonVertices)
    throw argument_error("enumerate_free_graphs: order must be in 1..8");
  // (canonical bits, canonical representative) per isomorphism class
  std::vector<std::pair<std::uint32_t, Graph>> level{{0, Graph::empty(1)}};
  for (int n = 2; n <= l; ++n) {
    std::map<std::uint32_t, Graph> seen;
    for (const auto& [bits, g] : level) {
      for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
        Graph h = Graph::empty(n);
        for (int v = 0; v < n - 1; ++v) h.adj[v] = g.adj[v];
        for (int v = 0; v < n - 1; ++v) {
          if ((mask >> v) & 1u) h.add_edge(v, n - 1);
        }
        if (contains_forbidden(h, fam)) continue;
        CanonicalForm c = canonical_form(h);
        if (!seen.contains(c.bits)) seen.emplace(c.bits, graph_of(c));
      }
    }
    level.assign(seen.begin(), seen.end());
  }
  std::sort(level.begin(), level.end(), [](const auto& a, const auto& b) {
    int ea = a.second.edge_count(), eb = b.second.edge_count();
    if (ea != eb) return ea < eb;
    return a.first < b.first;
  });
  std::vector<Graph> out;
  out.reserve(level.size());
  for (auto& [bits, g] : level) out.push_back(g);
  return out;
}

// ---- induced counting ----

Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
  if (vertices.empty()) throw argument_error("induced_subgraph: empty vertex set");
  std::vector<int> vs(vertices.begin(), vertices.end());
  std::sort(vs.begin(), vs.end());
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (vs[i] < 0 || vs[i] >= g.n)
      throw argument_error("induced_subgraph: vertex " + std::to_string(vs[i] + 1) +
                           " out of range");
    if (i > 0 && vs[i] == vs[i - 1])
      throw argument_error("induced_subgraph: duplicate vertex " + std::to_string(vs[i] + 1));
  }
  Graph h = Graph::empty(static_cast<int>(vs.size()));
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t b = a + 1; b < vs.size(); ++b)
      if (g.has_edge(vs[a], vs[b])) h.add_edge(static_cast<int>(a), static_cast<int>(b));
  return h;
}

namespace {

Graph induced_on_sorted(const Graph& g, std::span<const int> vs) {
  Graph h = Graph::empty(static_cast<int>(vs.size()));
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t b = a + 1; b < vs.size(); ++b)
      if (g.has_edge(vs[a], vs[b])) h.add_edge(static_cast<int>(a), static_cast<int>(b));
  return h;
}

template <typename Fn>
void for_each_subset(int n, int k, Fn&& fn) {
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(std::span<const int>(idx.data(), k));
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

long long count_induced_copies(const Graph& g, const Graph& a) {
  if (!g.valid() || !a.valid()) throw argument_error("count_induced_copies: invalid graph");
  if (a.n > kMaxCanonVertices)
    throw size_error("count_induced_copies: pattern must have <= 8 vertices");
  if (a.n > g.n) return 0;
  CanonicalForm target = canonical_form(a);
  int target_edges = a.edge_count();
  long long count = 0;
  for_each_subset(g.n, a.n, [&](std::span<const int> vs) {
    Graph h = induced_on_sorted(g, vs);
    if (h.edge_count() != target_edges) return;
    if (canonical_form(h) == target) ++count;
  });
  return count;
}

Rat induced_density(const Graph& g, const Graph& a) {
  if (a.n > g.n)
    throw argument_error("induced_density: pattern has more vertices than the host");
  return Rat(count_induced_copies(g, a), binomial(g.n, a.n));
}

// ---- named graphs ----

Graph named_graph(std::string_view keyword) {
  if (keyword == "k3") return Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
  if (keyword == "k2") return Graph::from_edges(2, {{0, 1}});
  if (keyword == "c5")
    return Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  if (keyword == "petersen") {
    Graph g = Graph::empty(10);
    for (int i = 0; i < 5; ++i) {
      g.add_edge(i, (i + 1) % 5);          // outer cycle
      g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
      g.add_edge(i, 5 + i);                // spokes
    }
    return g;
  }
  auto parse_n = [&](std::string_view rest) {
    int n = 0;
    auto [p, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), n);
    if (ec != std::errc() || p != rest.data() + rest.size())
      throw argument_error("named graph: bad vertex count in \"" + std::string(keyword) + "\"");
    return n;
  };
  if (keyword.starts_with("empty:")) return Graph::empty(parse_n(keyword.substr(6)));
  if (keyword.starts_with("edge:")) {
    int n = parse_n(keyword.substr(5));
    if (n < 2) throw argument_error("named graph: edge:<n> needs n >= 2");
    Graph g = Graph::empty(n);
    g.add_edge(0, 1);
    return g;
  }
  throw argument_error("named graph: unknown keyword \"" + std::string(keyword) + "\"");
}

Graph graph_from_spec(std::string_view spec) {
  if (spec == "k3" || spec == "k2" || spec == "c5" || spec == "petersen" ||
      spec.starts_with("empty:") || spec.starts_with("edge:"))
    return named_graph(spec);
  return parse_graph6(spec);
}

ForbiddenFamily family_from_specs(std::span<const std::string> specs) {
  std::vector<Graph> members;
  for (const std::string& s : specs) members.push_back(graph_from_spec(s));
  return ForbiddenFamily::of(std::move(members));
}

}  // namespace pentagon
