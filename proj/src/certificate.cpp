#include "pentagon/certificate.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "pentagon/errors.hpp"

namespace pentagon {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string type_label(std::size_t i, std::size_t total) {
  static const char* kClassicNames[] = {"p", "q", "r"};
  if (total <= 3) return kClassicNames[i];
  return "m" + std::to_string(i + 1);
}

FlagBasis basis_of(const CertificateType& t) { return FlagBasis{t.type, t.m, t.flags}; }

std::vector<int> resolve_host_order(const Certificate& cert, const std::vector<Graph>& hosts) {
  std::vector<int> catalog(hosts.size(), 0);
  if (cert.host_order.size() != hosts.size()) return catalog;
  std::map<std::uint32_t, int> position;
  for (std::size_t i = 0; i < cert.host_order.size(); ++i)
    position[canonical_form(cert.host_order[i]).bits] = static_cast<int>(i) + 1;
  for (std::size_t i = 0; i < hosts.size(); ++i) {
    auto it = position.find(canonical_form(hosts[i]).bits);
    if (it == position.end()) return std::vector<int>(hosts.size(), 0);
    catalog[i] = it->second;
  }
  return catalog;
}

}  // namespace

ParsedCertificate parse_certificate(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw parse_error(std::string("certificate: bad JSON: ") + e.what());
  }
  auto require = [&](const char* key) -> const json& {
    if (!doc.contains(key))
      throw parse_error(std::string("certificate: missing field \"") + key + "\"");
    return doc.at(key);
  };
  ParsedCertificate out;
  Certificate& cert = out.certificate;
  try {
    const json& fam = require("family");
    if (!fam.is_array() || fam.empty())
      throw parse_error("certificate: \"family\" must be a nonempty list of graph6 strings");
    std::vector<Graph> members;
    for (const auto& item : fam) members.push_back(parse_graph6(item.get<std::string>()));
    cert.family = ForbiddenFamily::of(std::move(members));

    cert.target = parse_graph6(require("target").get<std::string>());
    cert.l = require("l").get<int>();
    if (cert.l < 1 || cert.l > kMaxCanonVertices)
      throw parse_error("certificate: l must be in 1..8");
    if (cert.target.n > cert.l)
      throw parse_error("certificate: target has more vertices than l");

    const json& types = require("types");
    if (!types.is_array()) throw parse_error("certificate: \"types\" must be a list");
    for (std::size_t ti = 0; ti < types.size(); ++ti) {
      const json& jt = types[ti];
      std::string where = "certificate: type " + std::to_string(ti + 1);
      CertificateType ct;
      ct.type = make_type(parse_graph6(jt.at("type").get<std::string>()));
      ct.m = jt.at("m").get<int>();
      int s = ct.type.order();
      if (ct.m < s) throw parse_error(where + ": m is smaller than the type order");
      if (2 * ct.m - s > cert.l)
        throw parse_error(where + ": m = " + std::to_string(ct.m) +
                          " violates m <= (l + |sigma|)/2 = " +
                          std::to_string((cert.l + s) / 2));
      for (const auto& jf : jt.at("flags")) {
        Flag f;
        f.graph = parse_graph6(jf.at("graph").get<std::string>());
        if (f.graph.n != ct.m)
          throw parse_error(where + ": flag order differs from m");
        for (int v : jf.at("labels").get<std::vector<int>>()) {
          if (v < 1 || v > ct.m)
            throw parse_error(where + ": flag label position out of range");
          f.labels.push_back(v - 1);
        }
        if (static_cast<int>(f.labels.size()) != s)
          throw parse_error(where + ": flag must carry exactly |sigma| labels");
        if (type_of(f).graph != ct.type.graph)
          throw parse_error(where + ": flag labels do not induce the type");
        if (contains_forbidden(f.graph, cert.family))
          throw parse_error(where + ": inadmissible flag " + write_graph6(f.graph));
        ct.flags.push_back(std::move(f));
      }
      {
        std::vector<std::uint32_t> bits;
        for (const Flag& f : ct.flags) bits.push_back(flag_canonical_bits(f));
        std::sort(bits.begin(), bits.end());
        if (std::adjacent_find(bits.begin(), bits.end()) != bits.end())
          throw parse_error(where + ": duplicate flag");
      }
      const json& jm = jt.at("matrix");
      int dim = static_cast<int>(ct.flags.size());
      if (static_cast<int>(jm.size()) != dim)
        throw parse_error(where + ": matrix dimension differs from flag count");
      ct.matrix = RatMatrix::zero(dim);
      for (int i = 0; i < dim; ++i) {
        if (static_cast<int>(jm[i].size()) != dim)
          throw parse_error(where + ": matrix is not square");
        for (int j = 0; j < dim; ++j)
          ct.matrix.at(i, j) = parse_rat(jm[i][j].get<std::string>());
      }
      if (!ct.matrix.symmetric()) throw parse_error(where + ": asymmetric matrix");

      FlagBasis full = enumerate_flags(ct.type, ct.m, cert.family);
      if (ct.flags.size() < full.flags.size())
        out.warnings.push_back("type " + std::to_string(ti + 1) + " lists " +
                               std::to_string(ct.flags.size()) + " of " +
                               std::to_string(full.flags.size()) +
                               " admissible flags; the bound stays valid but may be weaker");
      cert.types.push_back(std::move(ct));
    }

    cert.claimed_bound = parse_rat(require("claimed_bound").get<std::string>());

    if (doc.contains("host_order")) {
      for (const auto& item : doc.at("host_order"))
        cert.host_order.push_back(parse_graph6(item.get<std::string>()));
      std::vector<Graph> hosts = enumerate_free_graphs(cert.l, cert.family);
      if (resolve_host_order(cert, hosts) == std::vector<int>(hosts.size(), 0)) {
        out.warnings.push_back(
            "host_order is not a permutation of the family-free hosts; ignoring it");
        cert.host_order.clear();
      }
    }
  } catch (const json::exception& e) {
    throw parse_error(std::string("certificate: schema violation: ") + e.what());
  } catch (const argument_error& e) {
    throw parse_error(std::string("certificate: ") + e.what());
  }
  return out;
}

ParsedCertificate load_certificate(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("certificate: cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_certificate(buf.str());
}

std::string write_certificate(const Certificate& cert) {
  ordered_json doc;
  doc["family"] = json::array();
  for (const Graph& g : cert.family.members) doc["family"].push_back(write_graph6(g));
  doc["target"] = write_graph6(cert.target);
  doc["l"] = cert.l;
  doc["types"] = json::array();
  for (const CertificateType& ct : cert.types) {
    ordered_json jt;
    jt["type"] = write_graph6(ct.type.graph);
    jt["m"] = ct.m;
    jt["flags"] = json::array();
    for (const Flag& f : ct.flags) {
      ordered_json jf;
      jf["graph"] = write_graph6(f.graph);
      std::vector<int> labels;
      for (int v : f.labels) labels.push_back(v + 1);
      jf["labels"] = labels;
      jt["flags"].push_back(jf);
    }
    jt["matrix"] = json::array();
    for (int i = 0; i < ct.matrix.dim; ++i) {
      std::vector<std::string> row;
      for (int j = 0; j < ct.matrix.dim; ++j) row.push_back(format_rat(ct.matrix.at(i, j)));
      jt["matrix"].push_back(row);
    }
    doc["types"].push_back(jt);
  }
  doc["claimed_bound"] = format_rat(cert.claimed_bound);
  if (!cert.host_order.empty()) {
    doc["host_order"] = json::array();
    for (const Graph& g : cert.host_order) doc["host_order"].push_back(write_graph6(g));
  }
  return doc.dump(2) + "\n";
}

VerificationReport verify(const Certificate& cert) {
  VerificationReport report;
  report.claimed = cert.claimed_bound;
  for (const CertificateType& ct : cert.types)
    report.per_type_psd.push_back(psd_check(ct.matrix));

  std::vector<Graph> hosts = enumerate_free_graphs(cert.l, cert.family);
  std::vector<int> catalog = resolve_host_order(cert, hosts);
  for (std::size_t i = 0; i < hosts.size(); ++i) {
    HostRow row;
    row.index = static_cast<int>(i) + 1;
    row.catalog_index = catalog[i];
    row.host = hosts[i];
    row.d_a = induced_density(hosts[i], cert.target);
    row.total = row.d_a;
    for (const CertificateType& ct : cert.types) {
      Rat c = c_H(basis_of(ct), ct.matrix, hosts[i]);
      row.contributions.push_back(c);
      row.total += c;
    }
    report.per_host.push_back(std::move(row));
  }
  report.bound = report.per_host.front().total;
  for (const HostRow& row : report.per_host) report.bound = std::max(report.bound, row.total);
  bool all_psd = std::all_of(report.per_type_psd.begin(), report.per_type_psd.end(),
                             [](const PsdVerdict& v) { return v.is_psd; });
  report.pass = all_psd && report.bound <= report.claimed;
  return report;
}

std::string render_report(const VerificationReport& report, const Certificate& cert,
                          bool approx) {
  std::ostringstream os;
  os << "certificate verification report\n";
  os << "family:";
  for (const Graph& g : cert.family.members) os << ' ' << write_graph6(g);
  os << "\ntarget: " << write_graph6(cert.target) << "\n";
  os << "l: " << cert.l << "\n";
  os << "claimed bound: " << format_rat(report.claimed) << "\n\n";
  for (std::size_t i = 0; i < cert.types.size(); ++i) {
    const CertificateType& ct = cert.types[i];
    const PsdVerdict& v = report.per_type_psd[i];
    os << "type " << i + 1 << ": sigma " << write_graph6(ct.type.graph) << " (order "
       << ct.type.order() << "), m = " << ct.m << ", " << ct.flags.size() << " flags, psd: ";
    if (v.is_psd) {
      os << "yes\n";
    } else {
      os << "NO; witness x = (";
      for (std::size_t k = 0; k < v.witness.size(); ++k)
        os << (k ? ", " : "") << format_rat(v.witness[k]);
      os << ") with x^T M x = " << format_rat(quadratic_form(ct.matrix, v.witness)) << "\n";
    }
  }
  os << "\nhosts (deterministic order; H<k> = shipped cross-reference):\n";
  for (const HostRow& row : report.per_host) {
    os << "  " << row.index;
    if (row.catalog_index) os << " H" << row.catalog_index;
    os << "  " << write_graph6(row.host) << "  d_A = " << format_rat(row.d_a) << "  c =";
    for (const Rat& c : row.contributions) os << ' ' << format_rat(c);
    os << "  total = " << format_rat(row.total);
    if (approx) os << " ~ " << approx_rat(row.total);
    os << "\n";
  }
  os << "\nbound: " << format_rat(report.bound);
  if (approx) os << " ~ " << approx_rat(report.bound);
  os << "\nverdict: " << (report.pass ? "PASS" : "FAIL") << "\n\n";

  for (std::size_t i = 0; i < report.per_type_psd.size(); ++i)
    os << "#TYPE " << i + 1 << " psd=" << (report.per_type_psd[i].is_psd ? "yes" : "no") << "\n";
  for (const HostRow& row : report.per_host) {
    os << "#HOST " << row.index << " " << (row.catalog_index ? "H" + std::to_string(row.catalog_index) : "-")
       << " " << write_graph6(row.host) << " " << format_rat(row.d_a);
    for (const Rat& c : row.contributions) os << ' ' << format_rat(c);
    os << ' ' << format_rat(row.total) << "\n";
  }
  os << "#BOUND " << format_rat(report.bound) << "\n";
  os << "#CLAIMED " << format_rat(report.claimed) << "\n";
  os << "#VERDICT " << (report.pass ? "pass" : "fail") << "\n";
  return os.str();
}

std::string render_report_json(const VerificationReport& report, const Certificate& cert) {
  ordered_json doc;
  doc["family"] = json::array();
  for (const Graph& g : cert.family.members) doc["family"].push_back(write_graph6(g));
  doc["target"] = write_graph6(cert.target);
  doc["l"] = cert.l;
  doc["claimed_bound"] = format_rat(report.claimed);
  doc["types"] = json::array();
  for (std::size_t i = 0; i < report.per_type_psd.size(); ++i) {
    ordered_json jt;
    jt["type"] = write_graph6(cert.types[i].type.graph);
    jt["m"] = cert.types[i].m;
    jt["flags"] = cert.types[i].flags.size();
    jt["psd"] = report.per_type_psd[i].is_psd;
    if (!report.per_type_psd[i].is_psd) {
      std::vector<std::string> w;
      for (const Rat& x : report.per_type_psd[i].witness) w.push_back(format_rat(x));
      jt["witness"] = w;
    }
    doc["types"].push_back(jt);
  }
  doc["hosts"] = json::array();
  for (const HostRow& row : report.per_host) {
    ordered_json jh;
    jh["index"] = row.index;
    if (row.catalog_index) jh["catalog_index"] = row.catalog_index;
    jh["graph6"] = write_graph6(row.host);
    jh["d_A"] = format_rat(row.d_a);
    std::vector<std::string> cs;
    for (const Rat& c : row.contributions) cs.push_back(format_rat(c));
    jh["c"] = cs;
    jh["total"] = format_rat(row.total);
    doc["hosts"].push_back(jh);
  }
  doc["bound"] = format_rat(report.bound);
  doc["pass"] = report.pass;
  return doc.dump(2) + "\n";
}

std::string expression_report(const Certificate& cert) {
  std::vector<Graph> hosts = enumerate_free_graphs(cert.l, cert.family);
  std::vector<int> catalog = resolve_host_order(cert, hosts);

  // per-type tables use |Theta_s| * C(l-s,m-s) * C(l-m,m-s) configurations;
  // scale every count to the least common multiple for one shared denominator
  std::vector<std::vector<PairDensityTable>> tables(hosts.size());
  Int common = 1;
  for (std::size_t hi = 0; hi < hosts.size(); ++hi) {
    for (const CertificateType& ct : cert.types)
      tables[hi].push_back(pair_density_table(basis_of(ct), hosts[hi]));
  }
  for (const PairDensityTable& t : tables.front()) common = lcm(common, t.configurations);

  std::vector<std::size_t> order(hosts.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  bool use_catalog = !hosts.empty() && catalog != std::vector<int>(hosts.size(), 0);
  if (use_catalog)
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return catalog[a] < catalog[b]; });

  std::ostringstream os;
  os << "per-host linear forms in the matrix entries, over " << common
     << " ordered configurations\n";
  for (std::size_t oi = 0; oi < order.size(); ++oi) {
    std::size_t hi = order[oi];
    std::ostringstream expr;
    bool first = true;
    auto emit = [&](const Int& coeff, const std::string& term) {
      if (coeff == 0) return;
      if (!first) expr << " + ";
      expr << coeff << term;
      first = false;
    };
    for (std::size_t ti = 0; ti < cert.types.size(); ++ti) {
      const PairDensityTable& t = tables[hi][ti];
      Int scale = common / t.configurations;
      std::string name = type_label(ti, cert.types.size());
      for (int a = 0; a < t.size; ++a)
        for (int b = a; b < t.size; ++b) {
          long long merged = a == b ? t.count(a, a) : t.count(a, b) + t.count(b, a);
          std::string idx = (b + 1 <= 9) ? std::to_string(a + 1) + std::to_string(b + 1)
                                         : "[" + std::to_string(a + 1) + "," +
                                               std::to_string(b + 1) + "]";
          emit(scale * merged, name + idx);
        }
    }
    Rat constant = Rat(common) * induced_density(hosts[hi], cert.target);
    if (constant != 0) {
      if (!first) expr << " + ";
      expr << format_rat(constant);
      first = false;
    }
    if (first) expr << "0";
    if (use_catalog)
      os << "H" << catalog[hi];
    else
      os << "G" << hi + 1;
    os << " [" << write_graph6(hosts[hi]) << "]: (" << expr.str() << ") / " << common << "\n";
  }
  return os.str();
}

Rat max_density_bound(int l, const ForbiddenFamily& fam, const Graph& target) {
  if (target.n > l) throw argument_error("max_density_bound: target larger than l");
  std::vector<Graph> hosts = enumerate_free_graphs(l, fam);
  Rat best = 0;
  for (const Graph& h : hosts) best = std::max(best, induced_density(h, target));
  return best;
}

}  // namespace pentagon
