#include "pentagon/flags.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

#include "pentagon/errors.hpp"

namespace pentagon {

namespace {

std::uint32_t word_for_order(const Graph& g, std::span<const int> order) {
  int n = g.n;
  int total = n * (n - 1) / 2;
  std::uint32_t w = 0;
  int pos = 0;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < j; ++i, ++pos)
      if (g.has_edge(order[i], order[j])) w |= 1u << (total - 1 - pos);
  return w;
}

Graph induced_ordered(const Graph& g, std::span<const int> order) {
  Graph h = Graph::empty(static_cast<int>(order.size()));
  for (std::size_t a = 0; a < order.size(); ++a)
    for (std::size_t b = a + 1; b < order.size(); ++b)
      if (g.has_edge(order[a], order[b])) h.add_edge(static_cast<int>(a), static_cast<int>(b));
  return h;
}

void validate_flag(const Flag& f) {
  if (!f.graph.valid()) throw argument_error("flag: invalid graph");
  if (f.graph.n > kMaxCanonVertices) throw size_error("flag: order must be <= 8");
  std::uint32_t seen = 0;
  for (int v : f.labels) {
    if (v < 0 || v >= f.graph.n)
      throw argument_error("flag: label position " + std::to_string(v + 1) + " out of range");
    if ((seen >> v) & 1u) throw argument_error("flag: labels are not injective");
    seen |= 1u << v;
  }
}

template <typename Fn>
void for_each_subset_of(std::span<const int> pool, int k, Fn&& fn) {
  int n = static_cast<int>(pool.size());
  std::vector<int> pick(k);
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    for (int i = 0; i < k; ++i) pick[i] = pool[idx[i]];
    fn(std::span<const int>(pick.data(), static_cast<std::size_t>(k)));
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

FlagType make_type(const Graph& g) {
  if (!g.valid()) throw argument_error("make_type: invalid graph");
  if (g.n > kMaxCanonVertices) throw size_error("make_type: types must have <= 8 vertices");
  return FlagType{g};
}

FlagType type_from_spec(const std::string& spec) {
  if (spec == "sigma0") return make_type(Graph::empty(3));
  if (spec == "sigma1") return make_type(Graph::from_edges(3, {{0, 1}}));
  if (spec == "sigma2") return make_type(Graph::from_edges(3, {{0, 1}, {1, 2}}));
  auto colon = spec.find(':');
  Graph g = parse_graph6(spec.substr(0, colon));
  if (colon == std::string::npos) return make_type(g);
  std::vector<int> order;
  std::stringstream ss(spec.substr(colon + 1));
  std::string part;
  while (std::getline(ss, part, ',')) order.push_back(std::stoi(part) - 1);
  if (static_cast<int>(order.size()) != g.n)
    throw argument_error("type spec: label list must cover every vertex");
  std::vector<int> perm(g.n, -1);
  for (int i = 0; i < g.n; ++i) {
    if (order[i] < 0 || order[i] >= g.n || perm[order[i]] != -1)
      throw argument_error("type spec: label list is not a permutation");
    perm[order[i]] = i;
  }
  return make_type(apply_permutation(g, perm));
}

FlagType type_of(const Flag& f) {
  validate_flag(f);
  return FlagType{induced_ordered(f.graph, f.labels)};
}

std::uint32_t flag_canonical_bits(const Flag& f) {
  validate_flag(f);
  int m = f.graph.n;
  int s = f.type_order();
  std::vector<int> order(f.labels.begin(), f.labels.end());
  std::uint32_t labeled = 0;
  for (int v : f.labels) labeled |= 1u << v;
  for (int v = 0; v < m; ++v)
    if (!((labeled >> v) & 1u)) order.push_back(v);
  std::sort(order.begin() + s, order.end());
  std::uint32_t best = word_for_order(f.graph, order);
  while (std::next_permutation(order.begin() + s, order.end()))
    best = std::min(best, word_for_order(f.graph, order));
  return best;
}

bool flag_isomorphic(const Flag& a, const Flag& b) {
  if (a.order() != b.order() || a.type_order() != b.type_order())
    throw argument_error("flag_isomorphic: order or type mismatch");
  if (type_of(a).graph != type_of(b).graph)
    throw argument_error("flag_isomorphic: type mismatch");
  return flag_canonical_bits(a) == flag_canonical_bits(b);
}

FlagBasis enumerate_flags(const FlagType& t, int m, const ForbiddenFamily& fam) {
  int s = t.order();
  if (m < s || m > kMaxCanonVertices)
    throw argument_error("enumerate_flags: need |sigma| <= m <= 8");
  FlagBasis basis;
  basis.type = t;
  basis.m = m;
  std::vector<int> identity(s);
  for (int i = 0; i < s; ++i) identity[i] = i;
  if (contains_forbidden(t.graph, fam)) return basis;  // no admissible flags at all

  // grow one unlabeled vertex at a time; subflags of admissible flags are
  // admissible, so this reaches every class
  std::vector<Graph> level{t.graph};
  for (int mm = s + 1; mm <= m; ++mm) {
    std::map<std::uint32_t, Graph> seen;
    for (const Graph& g : level) {
      for (std::uint32_t mask = 0; mask < (1u << (mm - 1)); ++mask) {
        Graph h = Graph::empty(mm);
        for (int v = 0; v < mm - 1; ++v) h.adj[v] = g.adj[v];
        for (int v = 0; v < mm - 1; ++v)
          if ((mask >> v) & 1u) h.add_edge(v, mm - 1);
        if (contains_forbidden(h, fam)) continue;
        Flag candidate{h, identity};
        std::uint32_t bits = flag_canonical_bits(candidate);
        if (!seen.contains(bits)) {
          // rebuild the representative from its canonical word
          int total = mm * (mm - 1) / 2;
          Graph rep = Graph::empty(mm);
          int pos = 0;
          for (int j = 0; j < mm; ++j)
            for (int i = 0; i < j; ++i, ++pos)
              if ((bits >> (total - 1 - pos)) & 1u) rep.add_edge(i, j);
          seen.emplace(bits, rep);
        }
      }
    }
    level.clear();
    for (auto& [bits, g] : seen) level.push_back(g);
  }
  std::vector<std::pair<std::pair<int, std::uint32_t>, Graph>> keyed;
  for (const Graph& g : level)
    keyed.push_back({{g.edge_count(), flag_canonical_bits(Flag{g, identity})}, g});
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [key, g] : keyed) basis.flags.push_back(Flag{g, identity});
  return basis;
}

namespace {

// theta induces the type exactly: labeled adjacency must match pair for pair
bool induces_type(const Graph& g, std::span<const int> theta, const Graph& type_graph) {
  int s = type_graph.n;
  for (int j = 0; j < s; ++j)
    for (int i = 0; i < j; ++i)
      if (g.has_edge(theta[i], theta[j]) != type_graph.has_edge(i, j)) return false;
  return true;
}

struct BasisIndex {
  std::unordered_map<std::uint32_t, int> by_bits;

  explicit BasisIndex(const FlagBasis& basis) {
    for (std::size_t i = 0; i < basis.flags.size(); ++i) {
      auto [it, fresh] = by_bits.emplace(flag_canonical_bits(basis.flags[i]), static_cast<int>(i));
      if (!fresh) throw argument_error("flag basis: duplicate flag");
    }
  }

  // -1 when the induced flag is not in the basis
  int classify(const Graph& g, std::span<const int> theta, std::span<const int> extension) const {
    std::vector<int> order(theta.begin(), theta.end());
    order.insert(order.end(), extension.begin(), extension.end());
    Graph flag_graph = induced_ordered(g, order);
    std::vector<int> identity(theta.size());
    for (std::size_t i = 0; i < theta.size(); ++i) identity[i] = static_cast<int>(i);
    auto it = by_bits.find(flag_canonical_bits(Flag{flag_graph, identity}));
    return it == by_bits.end() ? -1 : it->second;
  }
};

template <typename Fn>
void for_each_injection(int n, int s, Fn&& fn) {
  std::vector<int> theta(s);
  auto rec = [&](auto&& self, int depth, std::uint32_t used) -> void {
    if (depth == s) {
      fn(std::span<const int>(theta.data(), theta.size()));
      return;
    }
    for (int v = 0; v < n; ++v) {
      if ((used >> v) & 1u) continue;
      theta[depth] = v;
      self(self, depth + 1, used | (1u << v));
    }
  };
  rec(rec, 0, 0);
}

}  // namespace

Rat PairDensityTable::sum() const {
  long long total = 0;
  for (long long c : counts) total += c;
  return Rat(Int(total), configurations);
}

PairDensityTable pair_density_table(const FlagBasis& basis, const Graph& h) {
  if (!h.valid()) throw argument_error("pair_density_table: invalid host");
  int s = basis.type.order();
  int m = basis.m;
  int l = h.n;
  if (l < 2 * m - s)
    throw size_error("pair_density_table: host order " + std::to_string(l) +
                     " cannot fit two order-" + std::to_string(m) +
                     " flags overlapping in exactly " + std::to_string(s) + " vertices");
  BasisIndex index(basis);
  PairDensityTable table;
  table.size = static_cast<int>(basis.flags.size());
  table.counts.assign(static_cast<std::size_t>(table.size) * table.size, 0);
  table.configurations =
      falling_factorial(l, s) * binomial(l - s, m - s) * binomial(l - m, m - s);

  for_each_injection(l, s, [&](std::span<const int> theta) {
    if (!induces_type(h, theta, basis.type.graph)) return;
    std::uint32_t theta_mask = 0;
    for (int v : theta) theta_mask |= 1u << v;
    std::vector<int> rest;
    for (int v = 0; v < l; ++v)
      if (!((theta_mask >> v) & 1u)) rest.push_back(v);
    for_each_subset_of(rest, m - s, [&](std::span<const int> va) {
      int a = index.classify(h, theta, va);
      if (a < 0) return;
      std::uint32_t va_mask = 0;
      for (int v : va) va_mask |= 1u << v;
      std::vector<int> rest_b;
      for (int v : rest)
        if (!((va_mask >> v) & 1u)) rest_b.push_back(v);
      for_each_subset_of(rest_b, m - s, [&](std::span<const int> vb) {
        int b = index.classify(h, theta, vb);
        if (b >= 0) ++table.counts[static_cast<std::size_t>(a) * table.size + b];
      });
    });
  });
  return table;
}

Rat c_H(const PairDensityTable& table, const RatMatrix& q) {
  if (q.dim != table.size)
    throw argument_error("c_H: matrix dimension " + std::to_string(q.dim) +
                         " does not match flag count " + std::to_string(table.size));
  if (!q.symmetric()) throw argument_error("c_H: matrix is not symmetric");
  Rat acc = 0;
  for (int a = 0; a < table.size; ++a)
    for (int b = 0; b < table.size; ++b) {
      long long c = table.count(a, b);
      if (c) acc += q.at(a, b) * c;
    }
  return acc / Rat(table.configurations);
}

Rat c_H(const FlagBasis& basis, const RatMatrix& q, const Graph& h) {
  return c_H(pair_density_table(basis, h), q);
}

Rat flag_density(const Flag& f, std::span<const int> theta, const Graph& g) {
  validate_flag(f);
  if (!g.valid()) throw argument_error("flag_density: invalid graph");
  int s = f.type_order();
  int m = f.order();
  if (static_cast<int>(theta.size()) != s)
    throw argument_error("flag_density: theta size does not match type order");
  if (m > g.n) throw argument_error("flag_density: flag order exceeds host order");
  std::uint32_t used = 0;
  for (int v : theta) {
    if (v < 0 || v >= g.n || ((used >> v) & 1u))
      throw argument_error("flag_density: theta is not an injection into the host");
    used |= 1u << v;
  }
  Graph type_graph = type_of(f).graph;
  if (!induces_type(g, theta, type_graph))
    throw argument_error("flag_density: theta does not induce the flag's type");

  std::uint32_t want = flag_canonical_bits(f);
  std::vector<int> identity(s);
  for (int i = 0; i < s; ++i) identity[i] = i;
  std::vector<int> rest;
  for (int v = 0; v < g.n; ++v)
    if (!((used >> v) & 1u)) rest.push_back(v);
  long long hit = 0;
  std::vector<int> order(theta.begin(), theta.end());
  for_each_subset_of(rest, m - s, [&](std::span<const int> ext) {
    order.resize(s);
    order.insert(order.end(), ext.begin(), ext.end());
    Flag cand{induced_ordered(g, order), identity};
    if (flag_canonical_bits(cand) == want) ++hit;
  });
  return Rat(Int(hit), binomial(g.n - s, m - s));
}

std::vector<Rat> subgraph_distribution(const Graph& g, std::span<const Graph> hosts) {
  if (!g.valid()) throw argument_error("subgraph_distribution: invalid graph");
  if (hosts.empty()) throw argument_error("subgraph_distribution: empty host list");
  int l = hosts.front().n;
  if (l > g.n) throw argument_error("subgraph_distribution: l exceeds |V(g)|");
  std::unordered_map<std::uint32_t, int> by_bits;
  for (std::size_t i = 0; i < hosts.size(); ++i)
    by_bits.emplace(canonical_form(hosts[i]).bits, static_cast<int>(i));
  std::vector<long long> counts(hosts.size(), 0);
  std::vector<int> vs(l);
  auto rec = [&](auto&& self, int depth, int from) -> void {
    if (depth == l) {
      Graph h = induced_ordered(g, vs);
      auto it = by_bits.find(canonical_form(h).bits);
      if (it == by_bits.end())
        throw argument_error(
            "subgraph_distribution: induced subgraph falls outside the host family "
            "(is g really family-free?)");
      ++counts[it->second];
      return;
    }
    for (int v = from; v < g.n; ++v) {
      vs[depth] = v;
      self(self, depth + 1, v + 1);
    }
  };
  rec(rec, 0, 0);
  Int total = binomial(g.n, l);
  std::vector<Rat> out;
  out.reserve(hosts.size());
  for (long long c : counts) out.emplace_back(Int(c), total);
  return out;
}

std::vector<Rat> subgraph_distribution(const Graph& g, int l, const ForbiddenFamily& fam) {
  if (l < 1 || l > kMaxCanonVertices)
    throw argument_error("subgraph_distribution: l must be in 1..8");
  if (contains_forbidden(g, fam))
    throw argument_error("subgraph_distribution: g contains a forbidden subgraph");
  std::vector<Graph> hosts = enumerate_free_graphs(l, fam);
  return subgraph_distribution(g, hosts);
}

std::pair<Rat, Rat> averaging_identity_check(const Graph& g, const Graph& a, int l,
                                             const ForbiddenFamily& fam) {
  if (a.n > l || l > g.n)
    throw argument_error("averaging_identity_check: need |V(a)| <= l <= |V(g)|");
  Rat lhs = induced_density(g, a);
  std::vector<Graph> hosts = enumerate_free_graphs(l, fam);
  std::vector<Rat> dist = subgraph_distribution(g, hosts);
  Rat rhs = 0;
  for (std::size_t i = 0; i < hosts.size(); ++i) {
    if (dist[i] == 0) continue;
    rhs += induced_density(hosts[i], a) * dist[i];
  }
  if (lhs != rhs)
    throw std::logic_error("averaging identity violated: " + format_rat(lhs) +
                           " != " + format_rat(rhs));
  return {lhs, rhs};
}

}  // namespace pentagon
