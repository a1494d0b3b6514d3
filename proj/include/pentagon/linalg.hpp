#pragma once

#include <span>
#include <vector>

#include "pentagon/rational.hpp"

namespace pentagon {

// Dense matrix of exact rationals. Symmetry is validated where required,
// not enforced by the type.
struct RatMatrix {
  int dim = 0;
  std::vector<Rat> a;

  static RatMatrix zero(int dim);
  static RatMatrix identity(int dim);

  Rat& at(int i, int j) { return a[static_cast<std::size_t>(i) * dim + j]; }
  const Rat& at(int i, int j) const { return a[static_cast<std::size_t>(i) * dim + j]; }

  bool symmetric() const;

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;
};

// Outcome of the exact LDL^T positive-semidefiniteness decision.
// On success, unit_lower * diag(pivots) * unit_lower^T reproduces the input
// entry for entry. On failure, witness satisfies witness^T M witness < 0.
struct PsdVerdict {
  bool is_psd = false;
  std::vector<Rat> witness;
  std::vector<Rat> pivots;
  RatMatrix unit_lower;
};

// Sound and complete for exact rational input: elimination in diagonal
// order where a zero pivot requires its whole remaining row to vanish.
PsdVerdict psd_check(const RatMatrix& m);

Rat quadratic_form(const RatMatrix& m, std::span<const Rat> x);

// Characteristic polynomial by the Faddeev-LeVerrier recurrence, dim <= 10.
// Both sign conventions are reported so tables stated as det(M - xI) can be
// matched directly.
struct CharPoly {
  std::vector<Rat> xi_minus_m;  // det(xI - M), leading coefficient first
  std::vector<Rat> m_minus_xi;  // det(M - xI) = (-1)^dim det(xI - M)
};

CharPoly char_poly(const RatMatrix& m);

}  // namespace pentagon
