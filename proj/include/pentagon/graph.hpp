#pragma once

#include <array>
#include <cstdint>
#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pentagon/rational.hpp"

namespace pentagon {

inline constexpr int kMaxVertices = 32;
inline constexpr int kMaxCanonVertices = 8;

// Undirected simple graph on at most 32 vertices. Adjacency is kept as one
// bit row per vertex: bit u of adj[v] is set iff {u,v} is an edge. Vertices
// are 0-based internally; every external surface (CLI, files) is 1-based.
struct Graph {
  int n = 0;
  std::array<std::uint32_t, kMaxVertices> adj{};

  static Graph empty(int n);
  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);
  static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges);

  bool has_edge(int u, int v) const { return (adj[v] >> u) & 1u; }
  void add_edge(int u, int v);
  int degree(int v) const;
  int edge_count() const;

  // Symmetric adjacency, no loops, no bits at positions >= n.
  bool valid() const;

  friend bool operator==(const Graph&, const Graph&) = default;
};

// ---- graph6 (headerless, <= 32 vertices) ----

Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

// ---- isomorphism handling (brute force, n <= 8) ----

// Lexicographically smallest upper-triangle bitstring over all vertex
// orderings, packed with the first pair at the most significant used bit.
// Equal forms <=> isomorphic graphs.
struct CanonicalForm {
  int n = 0;
  std::uint32_t bits = 0;

  auto operator<=>(const CanonicalForm&) const = default;
};

CanonicalForm canonical_form(const Graph& g);
Graph graph_of(const CanonicalForm& c);

Graph apply_permutation(const Graph& g, std::span<const int> perm);

// ---- forbidden families ----

// Non-induced subgraph containment (standard Turan convention).
bool contains_subgraph(const Graph& g, const Graph& sub);

struct ForbiddenFamily {
  std::vector<Graph> members;  // canonical, pairwise non-isomorphic, >= 1 edge

  // Validates and canonicalizes; members need <= 8 vertices.
  static ForbiddenFamily of(std::vector<Graph> graphs);
};

bool contains_forbidden(const Graph& g, const ForbiddenFamily& fam);

// All fam-free graphs on l vertices (1 <= l <= 8), one canonical
// representative per isomorphism class, sorted by (edge count, canonical
// bits). Deterministic; grown by one-vertex extensions.
std::vector<Graph> enumerate_free_graphs(int l, const ForbiddenFamily& fam);

// ---- induced-subgraph counting ----

// Induced subgraph on a vertex subset, relabeled by increasing original index.
Graph induced_subgraph(const Graph& g, std::span<const int> vertices);

// Number of |V(a)|-subsets of g inducing a copy of a. |V(a)| <= 8.
long long count_induced_copies(const Graph& g, const Graph& a);

// count / C(n, k), exact.
Rat induced_density(const Graph& g, const Graph& a);

// ---- named graphs for the CLI ----

// Keywords: "k3", "c5", "petersen", "empty:<n>", "edge:<n>".
Graph named_graph(std::string_view keyword);

// Keyword if recognized, graph6 otherwise.
Graph graph_from_spec(std::string_view spec);

ForbiddenFamily family_from_specs(std::span<const std::string> specs);

}  // namespace pentagon
