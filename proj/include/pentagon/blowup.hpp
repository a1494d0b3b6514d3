#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pentagon/graph.hpp"

namespace pentagon {

// Replace vertex v of the base by factors[v] independent vertices; parts are
// fully joined iff the base vertices are adjacent.
struct BlowupSpec {
  Graph base;
  std::vector<int> factors;

  static BlowupSpec uniform(const Graph& base, int factor);
};

Graph blow_up(const BlowupSpec& spec);

enum class ErdosVerdict { kBelow, kTight, kViolation };

struct ErdosCheckResult {
  long long count = 0;     // induced five-cycles
  Rat cap;                 // (n/5)^5
  ErdosVerdict verdict = ErdosVerdict::kBelow;
};

// Counts induced C5 copies of a triangle-free graph against the (n/5)^5 cap.
// kViolation can never occur; returning it would disprove the bound.
ErdosCheckResult erdos_check(const Graph& g);

const char* to_string(ErdosVerdict v);

// Exact induced a-densities of the uniform blow-ups of the base,
// N = 1..n_max.
std::vector<std::pair<int, Rat>> density_trend(const Graph& base, const Graph& a, int n_max);

// Walks the blow-up argument that turns the density bound 24/625 into the
// finite (n/5)^5 count, with the given graph's actual numbers.
std::string blowup_reduction_demo(const Graph& g);

}  // namespace pentagon
