#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pentagon/blowup.hpp"
#include "pentagon/certificate.hpp"
#include "pentagon/errors.hpp"
#include "pentagon/flags.hpp"
#include "pentagon/graph.hpp"
#include "pentagon/sdp.hpp"

namespace py = pybind11;
using namespace pentagon;

namespace {

RatMatrix matrix_from_strings(const std::vector<std::vector<std::string>>& rows) {
  int dim = static_cast<int>(rows.size());
  RatMatrix m = RatMatrix::zero(dim);
  for (int i = 0; i < dim; ++i) {
    if (static_cast<int>(rows[i].size()) != dim)
      throw argument_error("matrix: rows must all have the same length");
    for (int j = 0; j < dim; ++j) m.at(i, j) = parse_rat(rows[i][j]);
  }
  return m;
}

std::vector<std::string> rats_to_strings(const std::vector<Rat>& xs) {
  std::vector<std::string> out;
  out.reserve(xs.size());
  for (const Rat& x : xs) out.push_back(format_rat(x));
  return out;
}

Certificate load_cert(const std::string& path, py::list* warnings_out = nullptr) {
  ParsedCertificate parsed = load_certificate(path);
  if (warnings_out)
    for (const std::string& w : parsed.warnings) warnings_out->append(w);
  return parsed.certificate;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Exact flag-algebra toolkit: Turan-density certificates for graph problems. "
      "All rationals cross this boundary as 'num/den' strings; parse them with "
      "fractions.Fraction for exact arithmetic in Python.";

  py::register_exception<parse_error>(m, "ParseError", PyExc_ValueError);
  py::register_exception<argument_error>(m, "ArgumentError", PyExc_ValueError);
  py::register_exception<size_error>(m, "SizeError", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def(py::init([](const std::string& spec) { return graph_from_spec(spec); }),
           py::arg("spec"), "build from a graph6 string or a keyword like 'c5'")
      .def_readonly("n", &Graph::n)
      .def("edge_count", &Graph::edge_count)
      .def("has_edge", [](const Graph& g, int u, int v) { return g.has_edge(u - 1, v - 1); },
           py::arg("u"), py::arg("v"), "1-based")
      .def("edges",
           [](const Graph& g) {
             std::vector<std::pair<int, int>> out;
             for (int u = 0; u < g.n; ++u)
               for (int v = u + 1; v < g.n; ++v)
                 if (g.has_edge(u, v)) out.emplace_back(u + 1, v + 1);
             return out;
           },
           "1-based edge list")
      .def("graph6", [](const Graph& g) { return write_graph6(g); })
      .def("canonical_graph6",
           [](const Graph& g) { return write_graph6(graph_of(canonical_form(g))); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) { return "Graph('" + write_graph6(g) + "')"; });

  m.def("parse_graph6", &parse_graph6, py::arg("text"));
  m.def("write_graph6", &write_graph6, py::arg("graph"));
  m.def("named_graph", [](const std::string& kw) { return named_graph(kw); }, py::arg("keyword"));

  m.def(
      "enumerate_free_graphs",
      [](int l, const std::vector<std::string>& forbid) {
        return enumerate_free_graphs(l, family_from_specs(forbid));
      },
      py::arg("l"), py::arg("forbid"),
      "family-free graphs on l vertices, canonical, sorted by (edges, canonical bits)");
  m.def(
      "contains_forbidden",
      [](const Graph& g, const std::vector<std::string>& forbid) {
        return contains_forbidden(g, family_from_specs(forbid));
      },
      py::arg("graph"), py::arg("forbid"));
  m.def("count_induced_copies", &count_induced_copies, py::arg("graph"), py::arg("pattern"));
  m.def(
      "induced_density",
      [](const Graph& g, const Graph& a) { return format_rat(induced_density(g, a)); },
      py::arg("graph"), py::arg("pattern"));
  m.def(
      "induced_subgraph",
      [](const Graph& g, const std::vector<int>& vertices_1based) {
        std::vector<int> vs;
        for (int v : vertices_1based) vs.push_back(v - 1);
        return induced_subgraph(g, vs);
      },
      py::arg("graph"), py::arg("vertices"), "vertices are 1-based");

  m.def(
      "enumerate_flags",
      [](const std::string& type_spec, int mm, const std::vector<std::string>& forbid) {
        FlagBasis basis = enumerate_flags(type_from_spec(type_spec), mm, family_from_specs(forbid));
        std::vector<std::pair<std::string, std::vector<int>>> out;
        for (const Flag& f : basis.flags) {
          std::vector<int> labels;
          for (int v : f.labels) labels.push_back(v + 1);
          out.emplace_back(write_graph6(f.graph), labels);
        }
        return out;
      },
      py::arg("type"), py::arg("m"), py::arg("forbid"),
      "admissible flags as (graph6, 1-based label positions)");

  m.def(
      "flag_density",
      [](const std::string& flag_g6, const std::vector<int>& labels_1based,
         const std::vector<int>& theta_1based, const Graph& g) {
        Flag f;
        f.graph = parse_graph6(flag_g6);
        for (int v : labels_1based) f.labels.push_back(v - 1);
        std::vector<int> theta;
        for (int v : theta_1based) theta.push_back(v - 1);
        return format_rat(flag_density(f, theta, g));
      },
      py::arg("flag_graph6"), py::arg("labels"), py::arg("theta"), py::arg("graph"));

  m.def(
      "pair_density_table",
      [](const std::string& type_spec, int mm, const std::vector<std::string>& forbid,
         const Graph& host) {
        FlagBasis basis = enumerate_flags(type_from_spec(type_spec), mm, family_from_specs(forbid));
        PairDensityTable t = pair_density_table(basis, host);
        py::dict out;
        out["configurations"] = t.configurations.str();
        std::vector<std::vector<long long>> counts(t.size, std::vector<long long>(t.size));
        std::vector<std::vector<std::string>> entries(t.size, std::vector<std::string>(t.size));
        for (int a = 0; a < t.size; ++a)
          for (int b = 0; b < t.size; ++b) {
            counts[a][b] = t.count(a, b);
            entries[a][b] = format_rat(t.entry(a, b));
          }
        out["counts"] = counts;
        out["entries"] = entries;
        return out;
      },
      py::arg("type"), py::arg("m"), py::arg("forbid"), py::arg("host"));

  m.def(
      "subgraph_distribution",
      [](const Graph& g, int l, const std::vector<std::string>& forbid) {
        return rats_to_strings(subgraph_distribution(g, l, family_from_specs(forbid)));
      },
      py::arg("graph"), py::arg("l"), py::arg("forbid"),
      "probabilities aligned with enumerate_free_graphs(l, forbid)");

  m.def(
      "averaging_identity_check",
      [](const Graph& g, const Graph& a, int l, const std::vector<std::string>& forbid) {
        auto [lhs, rhs] = averaging_identity_check(g, a, l, family_from_specs(forbid));
        return std::pair(format_rat(lhs), format_rat(rhs));
      },
      py::arg("graph"), py::arg("pattern"), py::arg("l"), py::arg("forbid"));

  m.def(
      "psd_check",
      [](const std::vector<std::vector<std::string>>& rows) {
        PsdVerdict v = psd_check(matrix_from_strings(rows));
        py::dict out;
        out["is_psd"] = v.is_psd;
        if (v.is_psd)
          out["pivots"] = rats_to_strings(v.pivots);
        else
          out["witness"] = rats_to_strings(v.witness);
        return out;
      },
      py::arg("matrix"), "exact LDL^T decision; witness proves failures");

  m.def(
      "char_poly",
      [](const std::vector<std::vector<std::string>>& rows) {
        CharPoly cp = char_poly(matrix_from_strings(rows));
        py::dict out;
        out["xI_minus_M"] = rats_to_strings(cp.xi_minus_m);
        out["M_minus_xI"] = rats_to_strings(cp.m_minus_xi);
        return out;
      },
      py::arg("matrix"));

  m.def(
      "quadratic_form",
      [](const std::vector<std::vector<std::string>>& rows, const std::vector<std::string>& x) {
        std::vector<Rat> v;
        for (const std::string& s : x) v.push_back(parse_rat(s));
        return format_rat(quadratic_form(matrix_from_strings(rows), v));
      },
      py::arg("matrix"), py::arg("x"));

  m.def(
      "verify_certificate",
      [](const std::string& path) {
        py::list warnings;
        Certificate cert = load_cert(path, &warnings);
        VerificationReport report = verify(cert);
        py::dict out;
        out["pass"] = report.pass;
        out["bound"] = format_rat(report.bound);
        out["claimed_bound"] = format_rat(report.claimed);
        out["warnings"] = warnings;
        py::list types;
        for (std::size_t i = 0; i < report.per_type_psd.size(); ++i) {
          py::dict t;
          t["psd"] = report.per_type_psd[i].is_psd;
          t["flags"] = cert.types[i].flags.size();
          if (!report.per_type_psd[i].is_psd)
            t["witness"] = rats_to_strings(report.per_type_psd[i].witness);
          types.append(t);
        }
        out["types"] = types;
        py::list hosts;
        for (const HostRow& row : report.per_host) {
          py::dict h;
          h["index"] = row.index;
          if (row.catalog_index) h["catalog_index"] = row.catalog_index;
          h["graph6"] = write_graph6(row.host);
          h["d_A"] = format_rat(row.d_a);
          h["c"] = rats_to_strings(row.contributions);
          h["total"] = format_rat(row.total);
          hosts.append(h);
        }
        out["hosts"] = hosts;
        return out;
      },
      py::arg("path"), "load a certificate and run the full exact verifier");

  m.def(
      "expression_report",
      [](const std::string& path) { return expression_report(load_cert(path)); },
      py::arg("path"));

  m.def(
      "max_density_bound",
      [](int l, const std::vector<std::string>& forbid, const Graph& target) {
        return format_rat(max_density_bound(l, family_from_specs(forbid), target));
      },
      py::arg("l"), py::arg("forbid"), py::arg("target"));

  m.def(
      "blow_up",
      [](const Graph& base, const std::vector<int>& factors) {
        return blow_up(BlowupSpec{base, factors});
      },
      py::arg("base"), py::arg("factors"));
  m.def(
      "blow_up_uniform",
      [](const Graph& base, int factor) { return blow_up(BlowupSpec::uniform(base, factor)); },
      py::arg("base"), py::arg("factor"));

  m.def(
      "erdos_check",
      [](const Graph& g) {
        ErdosCheckResult r = erdos_check(g);
        py::dict out;
        out["count"] = r.count;
        out["cap"] = format_rat(r.cap);
        out["verdict"] = to_string(r.verdict);
        return out;
      },
      py::arg("graph"), "induced C5 count against the (n/5)^5 cap");

  m.def("blowup_reduction_demo",
        [](const Graph& g) { return blowup_reduction_demo(g); }, py::arg("graph"));

  m.def(
      "density_trend",
      [](const Graph& base, const Graph& target, int n_max) {
        std::vector<std::pair<int, std::string>> out;
        for (auto& [factor, density] : density_trend(base, target, n_max))
          out.emplace_back(factor, format_rat(density));
        return out;
      },
      py::arg("base"), py::arg("target"), py::arg("n_max"));

  m.def(
      "emit_sdp",
      [](int l, const std::vector<std::string>& forbid, const Graph& target,
         const std::vector<std::pair<std::string, int>>& types) {
        std::vector<SdpTypeSpec> specs;
        for (auto& [spec, mm] : types) specs.push_back({type_from_spec(spec), mm});
        SdpEmission e = emit_sdp(l, family_from_specs(forbid), target, specs);
        return std::pair(e.dat_s, e.exact);
      },
      py::arg("l"), py::arg("forbid"), py::arg("target"), py::arg("types"),
      "returns (dat_s_text, exact_sidecar_text)");

  m.def(
      "round_solution",
      [](const std::vector<std::vector<std::vector<double>>>& blocks,
         const std::string& skeleton_path, const std::vector<long long>& denominators,
         const std::string& mu, long long cf_max) {
        Certificate skeleton = load_cert(skeleton_path);
        RoundingPolicy policy;
        if (!denominators.empty()) policy.denominators = denominators;
        if (!mu.empty()) policy.diagonal_boost = parse_rat(mu);
        policy.cf_max_denominator = cf_max;
        RoundingResult r = round_solution(blocks, policy, skeleton);
        py::dict out;
        out["success"] = r.success;
        py::list attempts;
        for (const RoundingAttempt& a : r.attempts) {
          py::dict d;
          d["label"] = a.label;
          d["all_psd"] = a.all_psd;
          d["bound"] = format_rat(a.bound);
          d["pass"] = a.pass;
          attempts.append(d);
        }
        out["attempts"] = attempts;
        if (r.success) {
          out["certified_bound"] = format_rat(r.certified_bound);
          out["chosen"] = r.chosen;
          out["certificate_json"] = write_certificate(r.certificate);
        } else if (const RoundingAttempt* best = r.best_attempt()) {
          out["best_uncertified_bound"] = format_rat(best->bound);
        }
        return out;
      },
      py::arg("blocks"), py::arg("skeleton_path"),
      py::arg("denominators") = std::vector<long long>{}, py::arg("mu") = std::string(),
      py::arg("cf_max") = 0LL);
}
