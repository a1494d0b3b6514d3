#pragma once

#include <string>
#include <vector>

#include "pentagon/flags.hpp"

namespace pentagon {

struct CertificateType {
  FlagType type;
  int m = 0;
  std::vector<Flag> flags;  // explicit list; matrix indices refer to it
  RatMatrix matrix;
};

// The on-disk unit of verification: everything needed to re-derive the
// density bound max_H (d_A(H) + c_H) from scratch.
struct Certificate {
  ForbiddenFamily family;
  Graph target;
  int l = 0;
  std::vector<CertificateType> types;
  Rat claimed_bound;
  // Optional cross-reference ordering of the hosts (used only for reports;
  // verification never depends on it).
  std::vector<Graph> host_order;
};

struct ParsedCertificate {
  Certificate certificate;
  std::vector<std::string> warnings;
};

ParsedCertificate parse_certificate(const std::string& json_text);
ParsedCertificate load_certificate(const std::string& path);
std::string write_certificate(const Certificate& cert);

struct HostRow {
  int index = 0;        // 1-based position in the deterministic host list
  int catalog_index = 0;  // 1-based position in cert.host_order; 0 when absent
  Graph host;
  Rat d_a;
  std::vector<Rat> contributions;  // one c_H value per type
  Rat total;
};

struct VerificationReport {
  std::vector<PsdVerdict> per_type_psd;
  std::vector<HostRow> per_host;
  Rat bound;
  Rat claimed;
  bool pass = false;
};

// Recomputes hosts, flag tables and densities; trusts nothing in the
// certificate beyond the matrices and the claimed bound.
VerificationReport verify(const Certificate& cert);

std::string render_report(const VerificationReport& report, const Certificate& cert,
                          bool approx = false);
std::string render_report_json(const VerificationReport& report, const Certificate& cert);

// One line per host: the symbolic linear form in matrix entries over the
// common configuration denominator, symmetric pairs merged, matrices named
// p, q, r for up to three types (m1, m2, ... otherwise).
std::string expression_report(const Certificate& cert);

// The bound with no quadratic-form terms at all: max over hosts of d_A(H).
Rat max_density_bound(int l, const ForbiddenFamily& fam, const Graph& target);

}  // namespace pentagon
