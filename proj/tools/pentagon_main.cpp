#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pentagon/blowup.hpp"
#include "pentagon/certificate.hpp"
#include "pentagon/errors.hpp"
#include "pentagon/flags.hpp"
#include "pentagon/graph.hpp"
#include "pentagon/sdp.hpp"

namespace {

using namespace pentagon;

Certificate load_or_die(const std::string& path) {
  ParsedCertificate parsed = load_certificate(path);
  for (const std::string& w : parsed.warnings) std::cerr << "warning: " << w << "\n";
  return parsed.certificate;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw parse_error("cannot write " + path);
  out << text;
}

struct TableOptions {
  std::string type_spec;
  int m = 4;
  std::vector<std::string> forbid;
  std::string host;
};

int run_tables(const TableOptions& opt) {
  FlagType type = type_from_spec(opt.type_spec);
  ForbiddenFamily fam = family_from_specs(opt.forbid);
  Graph host = graph_from_spec(opt.host);
  FlagBasis basis = enumerate_flags(type, opt.m, fam);
  PairDensityTable table = pair_density_table(basis, host);
  std::cout << "pair-density table: type " << write_graph6(type.graph) << ", m = " << opt.m
            << ", host " << write_graph6(host) << ", " << basis.flags.size() << " flags, "
            << table.configurations << " configurations\n";
  for (int a = 0; a < table.size; ++a)
    for (int b = 0; b < table.size; ++b)
      std::cout << a + 1 << " " << b + 1 << " " << table.count(a, b) << "/"
                << table.configurations << "\n";
  std::cout << "merged:";
  bool any = false;
  for (int a = 0; a < table.size; ++a)
    for (int b = a; b < table.size; ++b) {
      long long merged = a == b ? table.count(a, a) : table.count(a, b) + table.count(b, a);
      if (!merged) continue;
      std::cout << (any ? " + " : " ") << merged << "t" << a + 1 << b + 1;
      any = true;
    }
  if (!any) std::cout << " 0";
  std::cout << " over " << table.configurations << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact flag-algebra toolkit: Turan-density certificates for graph problems"};
  app.require_subcommand(1);
  app.fallthrough();
  bool approx = false;
  app.add_flag("--approx", approx, "annotate exact rationals with decimal approximations");
  int rc = 0;

  // enumerate
  auto* enumerate_cmd = app.add_subcommand("enumerate", "list family-free graphs on l vertices");
  auto enum_opt = std::make_shared<std::pair<int, std::vector<std::string>>>();
  enumerate_cmd->add_option("--order", enum_opt->first, "number of vertices l")->required();
  enumerate_cmd->add_option("--forbid", enum_opt->second, "forbidden graph (keyword or graph6)")
      ->required();
  enumerate_cmd->callback([&, enum_opt] {
    for (const Graph& g : enumerate_free_graphs(enum_opt->first, family_from_specs(enum_opt->second)))
      std::cout << write_graph6(g) << "\n";
  });

  // flags
  auto* flags_cmd = app.add_subcommand("flags", "list admissible flags of one type and order");
  auto flag_opt = std::make_shared<TableOptions>();
  flags_cmd->add_option("--type", flag_opt->type_spec, "sigma0|sigma1|sigma2|<graph6[:labels]>")
      ->required();
  flags_cmd->add_option("--m", flag_opt->m, "flag order")->required();
  flags_cmd->add_option("--forbid", flag_opt->forbid, "forbidden graph")->required();
  flags_cmd->callback([&, flag_opt] {
    FlagBasis basis = enumerate_flags(type_from_spec(flag_opt->type_spec), flag_opt->m,
                                      family_from_specs(flag_opt->forbid));
    for (const Flag& f : basis.flags) {
      std::cout << write_graph6(f.graph) << " labels=";
      for (std::size_t i = 0; i < f.labels.size(); ++i)
        std::cout << (i ? "," : "") << f.labels[i] + 1;
      std::cout << "\n";
    }
  });

  // tables
  auto* tables_cmd = app.add_subcommand("tables", "pair-density table of a flag basis on a host");
  auto table_opt = std::make_shared<TableOptions>();
  tables_cmd->add_option("--type", table_opt->type_spec, "type spec")->required();
  tables_cmd->add_option("--m", table_opt->m, "flag order")->required();
  tables_cmd->add_option("--forbid", table_opt->forbid, "forbidden graph")->required();
  tables_cmd->add_option("--host", table_opt->host, "host graph (keyword or graph6)")->required();
  tables_cmd->callback([&, table_opt] { rc = run_tables(*table_opt); });

  // expressions
  auto* expr_cmd = app.add_subcommand("expressions", "per-host symbolic forms of a certificate");
  auto expr_path = std::make_shared<std::string>();
  expr_cmd->add_option("certificate", *expr_path, "certificate JSON path")->required();
  expr_cmd->callback([&, expr_path] { std::cout << expression_report(load_or_die(*expr_path)); });

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "verify a certificate end to end");
  auto verify_opt = std::make_shared<std::pair<std::string, bool>>();
  verify_cmd->add_option("certificate", verify_opt->first, "certificate JSON path")->required();
  verify_cmd->add_flag("--json", verify_opt->second, "machine-readable report only");
  verify_cmd->callback([&, verify_opt] {
    Certificate cert = load_or_die(verify_opt->first);
    VerificationReport report = verify(cert);
    if (verify_opt->second)
      std::cout << render_report_json(report, cert);
    else
      std::cout << render_report(report, cert, approx);
    rc = report.pass ? 0 : 1;
  });

  // bound
  auto* bound_cmd = app.add_subcommand("bound", "max_H d_A(H): the bound with no flag terms");
  struct BoundOpts {
    int order = 0;
    std::vector<std::string> forbid;
    std::string target;
  };
  auto bound_opt = std::make_shared<BoundOpts>();
  bound_cmd->add_option("--order", bound_opt->order, "number of vertices l")->required();
  bound_cmd->add_option("--forbid", bound_opt->forbid, "forbidden graph")->required();
  bound_cmd->add_option("--target", bound_opt->target, "target graph")->required();
  bound_cmd->callback([&, bound_opt] {
    Rat b = max_density_bound(bound_opt->order, family_from_specs(bound_opt->forbid),
                              graph_from_spec(bound_opt->target));
    std::cout << format_rat(b);
    if (approx) std::cout << " ~ " << approx_rat(b);
    std::cout << "\n";
  });

  // blowup
  auto* blowup_cmd = app.add_subcommand("blowup", "blow a base graph up and print its graph6");
  auto blow_opt = std::make_shared<std::tuple<std::string, int, std::string>>();
  blowup_cmd->add_option("--base", std::get<0>(*blow_opt), "base graph")->required();
  auto* factor_opt = blowup_cmd->add_option("--factor", std::get<1>(*blow_opt), "uniform factor N");
  auto* factors_opt =
      blowup_cmd->add_option("--factors", std::get<2>(*blow_opt), "per-vertex factors a,b,c,...");
  factor_opt->excludes(factors_opt);
  blowup_cmd->callback([&, blow_opt, factor_opt] {
    Graph base = graph_from_spec(std::get<0>(*blow_opt));
    BlowupSpec spec;
    if (factor_opt->count()) {
      spec = BlowupSpec::uniform(base, std::get<1>(*blow_opt));
    } else if (!std::get<2>(*blow_opt).empty()) {
      spec.base = base;
      std::stringstream ss(std::get<2>(*blow_opt));
      std::string part;
      while (std::getline(ss, part, ',')) spec.factors.push_back(std::stoi(part));
    } else {
      throw CLI::ValidationError("blowup", "need --factor or --factors");
    }
    std::cout << write_graph6(blow_up(spec)) << "\n";
  });

  // erdos-check
  auto* erdos_cmd = app.add_subcommand("erdos-check", "induced C5 count vs the (n/5)^5 cap");
  auto erdos_opt = std::make_shared<std::pair<std::string, bool>>();
  erdos_cmd->add_option("--graph", erdos_opt->first, "triangle-free graph")->required();
  erdos_cmd->add_flag("--demo", erdos_opt->second, "append the blow-up reduction walkthrough");
  erdos_cmd->callback([&, erdos_opt] {
    Graph g = graph_from_spec(erdos_opt->first);
    ErdosCheckResult r = erdos_check(g);
    if (r.verdict == ErdosVerdict::kViolation)
      std::cout << r.count << " > " << format_rat(r.cap) << ": " << to_string(r.verdict) << "\n";
    else
      std::cout << r.count << " ≤ " << format_rat(r.cap) << ": " << to_string(r.verdict)
                << "\n";
    std::cout << "#ERDOS count=" << r.count << " cap=" << format_rat(r.cap)
              << " verdict=" << to_string(r.verdict) << "\n";
    if (erdos_opt->second) std::cout << blowup_reduction_demo(g);
    rc = r.verdict == ErdosVerdict::kViolation ? 1 : 0;
  });

  // trend
  auto* trend_cmd = app.add_subcommand("trend", "induced densities of uniform blow-ups");
  auto trend_opt = std::make_shared<std::tuple<std::string, std::string, int>>();
  trend_cmd->add_option("--base", std::get<0>(*trend_opt), "base graph")->required();
  trend_cmd->add_option("--target", std::get<1>(*trend_opt), "target graph")->required();
  trend_cmd->add_option("--n-max", std::get<2>(*trend_opt), "largest factor")->required();
  trend_cmd->callback([&, trend_opt] {
    auto rows = density_trend(graph_from_spec(std::get<0>(*trend_opt)),
                              graph_from_spec(std::get<1>(*trend_opt)), std::get<2>(*trend_opt));
    for (auto& [factor, density] : rows) {
      std::cout << factor << " " << format_rat(density);
      if (approx) std::cout << " ~ " << approx_rat(density);
      std::cout << "\n";
    }
  });

  // emit-sdp
  auto* emit_cmd = app.add_subcommand("emit-sdp", "write the certificate-search SDP (SDPA sparse)");
  auto emit_opt = std::make_shared<std::tuple<int, std::vector<std::string>, std::string,
                                              std::string, std::string>>();
  emit_cmd->add_option("--order", std::get<0>(*emit_opt), "number of vertices l")->required();
  emit_cmd->add_option("--forbid", std::get<1>(*emit_opt), "forbidden graph")->required();
  emit_cmd->add_option("--target", std::get<2>(*emit_opt), "target graph")->required();
  emit_cmd->add_option("--types", std::get<3>(*emit_opt), "comma list of <type>:<m>, e.g. sigma0:4")
      ->required();
  emit_cmd->add_option("--out", std::get<4>(*emit_opt), "output base path")->required();
  emit_cmd->callback([&, emit_opt] {
    std::vector<SdpTypeSpec> types;
    std::stringstream ss(std::get<3>(*emit_opt));
    std::string part;
    while (std::getline(ss, part, ',')) {
      auto colon = part.rfind(':');
      if (colon == std::string::npos)
        throw argument_error("emit-sdp: type spec \"" + part + "\" needs <type>:<m>");
      types.push_back(SdpTypeSpec{type_from_spec(part.substr(0, colon)),
                                  std::stoi(part.substr(colon + 1))});
    }
    SdpEmission emission =
        emit_sdp(std::get<0>(*emit_opt), family_from_specs(std::get<1>(*emit_opt)),
                 graph_from_spec(std::get<2>(*emit_opt)), types);
    const std::string& base = std::get<4>(*emit_opt);
    write_file(base + ".dat-s", emission.dat_s);
    write_file(base + ".exact", emission.exact);
    std::cout << "wrote " << base << ".dat-s and " << base << ".exact\n";
  });

  // round
  auto* round_cmd = app.add_subcommand("round", "round solver output into a verified certificate");
  struct RoundOpts {
    std::string skeleton, solution, out, denominators, mu;
    long long cf_max = 0;
  };
  auto round_opt = std::make_shared<RoundOpts>();
  round_cmd->add_option("--skeleton", round_opt->skeleton, "certificate giving flags and claim")
      ->required();
  round_cmd->add_option("--solution", round_opt->solution, "solver output (one block per type)")
      ->required();
  round_cmd->add_option("--out", round_opt->out, "path for the rounded certificate")->required();
  round_cmd->add_option("--denominators", round_opt->denominators, "ladder, e.g. 625,2500");
  round_cmd->add_option("--mu", round_opt->mu, "diagonal boost added before the PSD re-check");
  round_cmd->add_option("--cf-max", round_opt->cf_max, "continued-fraction fallback denominator cap");
  round_cmd->callback([&, round_opt] {
    Certificate skeleton = load_or_die(round_opt->skeleton);
    RoundingPolicy policy;
    if (!round_opt->denominators.empty()) {
      policy.denominators.clear();
      std::stringstream ss(round_opt->denominators);
      std::string part;
      while (std::getline(ss, part, ',')) policy.denominators.push_back(std::stoll(part));
    }
    if (!round_opt->mu.empty()) policy.diagonal_boost = parse_rat(round_opt->mu);
    policy.cf_max_denominator = round_opt->cf_max;
    auto blocks = parse_solution_blocks(slurp(round_opt->solution), skeleton);
    RoundingResult result = round_solution(blocks, policy, skeleton);
    for (const RoundingAttempt& a : result.attempts)
      std::cout << "attempt " << a.label << ": psd=" << (a.all_psd ? "yes" : "no")
                << " bound=" << format_rat(a.bound) << " -> " << (a.pass ? "pass" : "fail")
                << "\n";
    if (result.success) {
      write_file(round_opt->out, write_certificate(result.certificate));
      std::cout << "certified bound " << format_rat(result.certified_bound) << " at "
                << result.chosen << "; wrote " << round_opt->out << "\n";
      rc = 0;
    } else {
      if (const RoundingAttempt* best = result.best_attempt())
        std::cout << "no attempt passed; best uncertified bound " << format_rat(best->bound)
                  << " at " << best->label << "\n";
      else
        std::cout << "no attempt passed\n";
      rc = 1;
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
