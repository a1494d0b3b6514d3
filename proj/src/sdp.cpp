#include "pentagon/sdp.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <sstream>

#include "pentagon/errors.hpp"

namespace pentagon {

namespace {

// shortest decimal that parses back to exactly the same double
std::string shortest_double(double v) {
  char buf[64];
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

std::string flag_signature(const Flag& f) {
  std::string s = write_graph6(f.graph) + ":";
  for (std::size_t i = 0; i < f.labels.size(); ++i)
    s += (i ? "," : "") + std::to_string(f.labels[i] + 1);
  return s;
}

Rat round_to_denominator(double v, long long den) {
  return Rat(Int(std::llround(v * static_cast<double>(den))), Int(den));
}

// plain continued-fraction convergent with denominator <= cap
Rat cf_round(double x, long long cap) {
  if (!std::isfinite(x)) throw argument_error("round_solution: non-finite entry");
  if (x == 0) return Rat(0);
  bool neg = x < 0;
  double t = std::fabs(x);
  long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  for (int it = 0; it < 64; ++it) {
    double fa = std::floor(t);
    if (fa > 4e18) break;
    long long a = static_cast<long long>(fa);
    if (q1 != 0 && (cap - q0) / q1 < a) break;
    long long p2 = a * p1 + p0, q2 = a * q1 + q0;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    double rem = t - fa;
    if (rem < 1e-12) break;
    t = 1.0 / rem;
  }
  if (q1 == 0) return Rat(0);
  Rat r{Int(p1), Int(q1)};
  return neg ? -r : r;
}

}  // namespace

SdpEmission emit_sdp(int l, const ForbiddenFamily& fam, const Graph& target,
                     std::span<const SdpTypeSpec> types) {
  if (target.n > l) throw argument_error("emit_sdp: target larger than l");
  for (const SdpTypeSpec& t : types) {
    int s = t.type.order();
    if (t.m < s || 2 * t.m - s > l)
      throw argument_error("emit_sdp: type violates |sigma| <= m <= (l + |sigma|)/2");
  }
  std::vector<Graph> hosts = enumerate_free_graphs(l, fam);
  int n_hosts = static_cast<int>(hosts.size());
  int n_types = static_cast<int>(types.size());

  std::vector<FlagBasis> bases;
  for (const SdpTypeSpec& t : types) bases.push_back(enumerate_flags(t.type, t.m, fam));

  std::ostringstream head;
  head << "* certificate-search SDP: family-free hosts on " << l << " vertices\n";
  head << "* family:";
  for (const Graph& g : fam.members) head << ' ' << write_graph6(g);
  head << "\n* target: " << write_graph6(target) << "\n";
  head << "* dual variable layout: Y = diag(";
  for (int ti = 0; ti < n_types; ++ti) head << "Q" << ti + 1 << ", ";
  head << "slack[" << n_hosts << "], [lambda+, lambda-])\n";
  head << "* constraint j: <T_j,Q> + slack_j - lambda = -d_A(H_j), i.e.\n";
  head << "*   d_A(H_j) + sum_i <T_j^(i), Q_i> <= lambda; objective max(-lambda)\n";
  for (int ti = 0; ti < n_types; ++ti) {
    head << "* block " << ti + 1 << ": Q" << ti + 1 << " over "
         << bases[ti].flags.size() << " flags of type " << write_graph6(types[ti].type.graph)
         << " m=" << types[ti].m << "\n";
    for (std::size_t fi = 0; fi < bases[ti].flags.size(); ++fi)
      head << "*   index " << fi + 1 << ": " << flag_signature(bases[ti].flags[fi]) << "\n";
  }
  head << "* block " << n_types + 1 << ": host slacks (diagonal)\n";
  head << "* block " << n_types + 2 << ": lambda split (diagonal, lambda = y1 - y2)\n";
  for (int j = 0; j < n_hosts; ++j)
    head << "* constraint " << j + 1 << ": host " << write_graph6(hosts[j]) << "\n";
  head << "* values are decimals in the .dat-s and exact rationals in the .exact\n"
       << "* sidecar; the two files match line for line\n";

  std::ostringstream dat, exact;
  dat << head.str();
  exact << head.str();

  dat << n_hosts << " = mDIM\n" << n_types + 2 << " = nBLOCK\n";
  exact << n_hosts << " = mDIM\n" << n_types + 2 << " = nBLOCK\n";
  std::ostringstream bs;
  bs << "{";
  for (int ti = 0; ti < n_types; ++ti) bs << bases[ti].flags.size() << ", ";
  bs << "-" << n_hosts << ", -2}";
  dat << bs.str() << " = bLOCKsTRUCT\n";
  exact << bs.str() << " = bLOCKsTRUCT\n";

  std::vector<Rat> d_a;
  for (const Graph& h : hosts) d_a.push_back(induced_density(h, target));
  for (int j = 0; j < n_hosts; ++j) {
    double c = d_a[j] == 0 ? 0.0 : -static_cast<double>(d_a[j]);
    dat << (j ? " " : "") << shortest_double(c);
    exact << (j ? " " : "") << format_rat(-d_a[j]);
  }
  dat << "\n";
  exact << "\n";

  auto entry = [&](int mat, int blk, int i, int j, const Rat& v) {
    if (v == 0) return;
    dat << mat << " " << blk << " " << i << " " << j << " "
        << shortest_double(static_cast<double>(v)) << "\n";
    exact << mat << " " << blk << " " << i << " " << j << " " << format_rat(v) << "\n";
  };

  // F_0: objective max(-lambda+ + lambda-)
  entry(0, n_types + 2, 1, 1, Rat(-1));
  entry(0, n_types + 2, 2, 2, Rat(1));
  for (int j = 0; j < n_hosts; ++j) {
    for (int ti = 0; ti < n_types; ++ti) {
      PairDensityTable table = pair_density_table(bases[ti], hosts[j]);
      for (int a = 0; a < table.size; ++a)
        for (int b = a; b < table.size; ++b) entry(j + 1, ti + 1, a + 1, b + 1, table.entry(a, b));
    }
    entry(j + 1, n_types + 1, j + 1, j + 1, Rat(1));
    entry(j + 1, n_types + 2, 1, 1, Rat(-1));
    entry(j + 1, n_types + 2, 2, 2, Rat(1));
  }
  return SdpEmission{dat.str(), exact.str()};
}

const RoundingAttempt* RoundingResult::best_attempt() const {
  const RoundingAttempt* best = nullptr;
  for (const RoundingAttempt& a : attempts)
    if (!best || a.bound < best->bound) best = &a;
  return best;
}

std::vector<std::vector<std::vector<double>>> parse_solution_blocks(
    const std::string& text, const Certificate& skeleton) {
  std::istringstream lines(text);
  std::string line, numbers;
  while (std::getline(lines, line)) {
    if (!line.empty() && (line[0] == '*' || line[0] == '#')) continue;
    numbers += line;
    numbers += ' ';
  }
  std::istringstream in(numbers);
  std::vector<std::vector<std::vector<double>>> blocks;
  for (const CertificateType& ct : skeleton.types) {
    int dim = static_cast<int>(ct.flags.size());
    std::vector<std::vector<double>> m(dim, std::vector<double>(dim, 0.0));
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j)
        if (!(in >> m[i][j]))
          throw parse_error("solution: expected " + std::to_string(dim) + "x" +
                            std::to_string(dim) + " block " +
                            std::to_string(blocks.size() + 1) + ", ran out of numbers");
    blocks.push_back(std::move(m));
  }
  double extra;
  if (in >> extra) throw parse_error("solution: trailing numbers after the last block");
  return blocks;
}

RoundingResult round_solution(const std::vector<std::vector<std::vector<double>>>& blocks,
                              const RoundingPolicy& policy, const Certificate& skeleton) {
  if (blocks.size() != skeleton.types.size())
    throw argument_error("round_solution: block count differs from the skeleton's type count");
  for (std::size_t ti = 0; ti < blocks.size(); ++ti) {
    std::size_t dim = skeleton.types[ti].flags.size();
    if (blocks[ti].size() != dim)
      throw argument_error("round_solution: block " + std::to_string(ti + 1) +
                           " dimension differs from the skeleton");
    for (std::size_t i = 0; i < dim; ++i) {
      if (blocks[ti][i].size() != dim)
        throw argument_error("round_solution: block " + std::to_string(ti + 1) +
                             " is not square");
      for (std::size_t j = 0; j < dim; ++j)
        if (std::fabs(blocks[ti][i][j] - blocks[ti][j][i]) > 1e-9)
          throw argument_error("round_solution: block " + std::to_string(ti + 1) +
                               " is not symmetric");
    }
  }

  RoundingResult result;
  auto attempt = [&](const std::string& label, auto&& round_entry) {
    Certificate cand = skeleton;
    for (std::size_t ti = 0; ti < blocks.size(); ++ti) {
      int dim = static_cast<int>(skeleton.types[ti].flags.size());
      RatMatrix m = RatMatrix::zero(dim);
      for (int i = 0; i < dim; ++i)
        for (int j = i; j < dim; ++j) {
          Rat v = round_entry(blocks[ti][i][j]);
          m.at(i, j) = v;
          m.at(j, i) = v;
        }
      if (policy.diagonal_boost > 0)
        for (int i = 0; i < dim; ++i) m.at(i, i) += policy.diagonal_boost;
      cand.types[ti].matrix = std::move(m);
    }
    VerificationReport report = verify(cand);
    RoundingAttempt a;
    a.label = label;
    a.all_psd = true;
    for (const PsdVerdict& v : report.per_type_psd) a.all_psd = a.all_psd && v.is_psd;
    a.psd = report.per_type_psd;
    a.bound = report.bound;
    a.pass = report.pass;
    result.attempts.push_back(a);
    if (report.pass && !result.success) {
      result.success = true;
      result.certified_bound = report.bound;
      result.chosen = label;
      cand.claimed_bound = report.bound;
      result.certificate = std::move(cand);
    }
    return result.success;
  };

  for (long long den : policy.denominators) {
    if (den <= 0) throw argument_error("round_solution: denominators must be positive");
    if (attempt("1/" + std::to_string(den),
                [den](double v) { return round_to_denominator(v, den); }))
      return result;
  }
  if (policy.cf_max_denominator > 0) {
    long long cap = policy.cf_max_denominator;
    attempt("cf<=" + std::to_string(cap), [cap](double v) { return cf_round(v, cap); });
  }
  return result;
}

}  // namespace pentagon
