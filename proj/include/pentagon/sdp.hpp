#pragma once

#include <span>
#include <string>
#include <vector>

#include "pentagon/certificate.hpp"

namespace pentagon {

struct SdpTypeSpec {
  FlagType type;
  int m = 0;
};

struct SdpEmission {
  std::string dat_s;  // SDPA sparse format, coefficients as decimals
  std::string exact;  // sidecar with the same entries as exact rationals
};

// Certificate-search problem in SDPA sparse format: one PSD block per type,
// a diagonal slack block (one slack per host) and a diagonal 2-block holding
// the free bound variable as lambda = lambda+ - lambda-. One equality
// constraint per host. A comment header documents every index.
SdpEmission emit_sdp(int l, const ForbiddenFamily& fam, const Graph& target,
                     std::span<const SdpTypeSpec> types);

struct RoundingPolicy {
  std::vector<long long> denominators{625, 2500, 12500, 62500};
  Rat diagonal_boost = Rat(0);       // mu, added as mu*I before the PSD re-check
  long long cf_max_denominator = 0;  // 0 disables the continued-fraction pass
};

struct RoundingAttempt {
  std::string label;
  bool all_psd = false;
  std::vector<PsdVerdict> psd;  // per type; failures carry their witnesses
  Rat bound;
  bool pass = false;
};

struct RoundingResult {
  bool success = false;
  Certificate certificate;  // fully verified; claimed_bound = certified bound
  Rat certified_bound;
  std::string chosen;  // which ladder step produced the certificate
  std::vector<RoundingAttempt> attempts;

  // lowest bound seen across attempts; the failure report's headline number
  const RoundingAttempt* best_attempt() const;
};

// Rounds floating solver blocks onto each candidate denominator in turn,
// re-verifies exactly against the skeleton certificate (its flag lists give
// the matrix indices, its claimed_bound the pass threshold) and returns the
// first certificate that passes.
RoundingResult round_solution(const std::vector<std::vector<std::vector<double>>>& blocks,
                              const RoundingPolicy& policy, const Certificate& skeleton);

// Plain-text solver output: one symmetric matrix per type, whitespace
// separated, row major; lines starting with '*' or '#' are skipped.
std::vector<std::vector<std::vector<double>>> parse_solution_blocks(
    const std::string& text, const Certificate& skeleton);

}  // namespace pentagon
