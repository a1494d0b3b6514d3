#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "pentagon/graph.hpp"
#include "pentagon/linalg.hpp"

namespace pentagon {

// A type: a graph whose vertices carry labels 1..n in vertex order.
struct FlagType {
  Graph graph;

  int order() const { return graph.n; }

  friend bool operator==(const FlagType&, const FlagType&) = default;
};

FlagType make_type(const Graph& g);  // n <= 8

// "sigma0" | "sigma1" | "sigma2" (the three order-3 types) or
// "<graph6>[:v1,v2,...]" where vertex v_i carries label i.
FlagType type_from_spec(const std::string& spec);

// A flag: a graph with an injective labeling of order() vertices that
// induces its type. labels[i] is the vertex carrying label i+1.
struct Flag {
  Graph graph;
  std::vector<int> labels;

  int order() const { return graph.n; }
  int type_order() const { return static_cast<int>(labels.size()); }
};

// Induced subgraph on the labeled vertices, in label order.
FlagType type_of(const Flag& f);

// Upper-triangle word with the labeled vertices first (in label order),
// minimized over orderings of the unlabeled rest. Equal words <=> flag
// isomorphic (edge-preserving bijection fixing every label).
std::uint32_t flag_canonical_bits(const Flag& f);

bool flag_isomorphic(const Flag& a, const Flag& b);

// All admissible sigma-flags of one order, up to flag isomorphism,
// deterministically ordered by (edge count, canonical labeled bits).
struct FlagBasis {
  FlagType type;
  int m = 0;
  std::vector<Flag> flags;
};

FlagBasis enumerate_flags(const FlagType& t, int m, const ForbiddenFamily& fam);

// Probability that a uniform order()-set V containing im(theta) induces a
// flag isomorphic to f, with theta carrying the labels. theta must induce
// f's type in g.
Rat flag_density(const Flag& f, std::span<const int> theta, const Graph& g);

// Averaged pair densities over a host H: entry (a,b) is the expectation,
// over all injections theta of the labels into V(H), of the probability
// that uniform m-sets V_a, V_b with V_a n V_b = im(theta) induce flags
// isomorphic to F_a and F_b. Injections that do not induce the type
// contribute zero. Stored as ordered-configuration counts over a common
// denominator so that coefficient reports stay integral.
struct PairDensityTable {
  int size = 0;
  Int configurations = 0;  // |Theta| * C(l-s, m-s) * C(l-m, m-s)
  std::vector<long long> counts;

  long long count(int a, int b) const { return counts[static_cast<std::size_t>(a) * size + b]; }
  Rat entry(int a, int b) const { return Rat(Int(count(a, b)), configurations); }
  Rat sum() const;
};

// Requires |V(h)| >= 2m - |sigma| so that two m-sets can overlap in exactly
// the labeled vertices.
PairDensityTable pair_density_table(const FlagBasis& basis, const Graph& h);

// Ordered-pair quadratic form: sum over all (a,b) of q_ab * t_ab.
Rat c_H(const PairDensityTable& table, const RatMatrix& q);
Rat c_H(const FlagBasis& basis, const RatMatrix& q, const Graph& h);

// Distribution of induced l-vertex subgraphs of g over the deterministic
// host list enumerate_free_graphs(l, fam); entries sum to 1.
std::vector<Rat> subgraph_distribution(const Graph& g, int l, const ForbiddenFamily& fam);
std::vector<Rat> subgraph_distribution(const Graph& g, std::span<const Graph> hosts);

// Exact check of the averaging identity d_A(G) = sum_H d_A(H) p(H;G).
// Returns (lhs, rhs); throws if they differ (they cannot).
std::pair<Rat, Rat> averaging_identity_check(const Graph& g, const Graph& a, int l,
                                             const ForbiddenFamily& fam);

}  // namespace pentagon
