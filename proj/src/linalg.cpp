#include "pentagon/linalg.hpp"

#include "pentagon/errors.hpp"

namespace pentagon {

RatMatrix RatMatrix::zero(int dim) {
  RatMatrix m;
  m.dim = dim;
  m.a.assign(static_cast<std::size_t>(dim) * dim, Rat(0));
  return m;
}

RatMatrix RatMatrix::identity(int dim) {
  RatMatrix m = zero(dim);
  for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
  return m;
}

bool RatMatrix::symmetric() const {
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

namespace {

// x = L^-T y for the unit lower-triangular L accumulated so far; y lives in
// the half-eliminated coordinates, so x^T M x equals y^T (D (+) S) y.
std::vector<Rat> pull_back(const RatMatrix& lower, const std::vector<Rat>& y) {
  int d = lower.dim;
  std::vector<Rat> x(y);
  for (int i = d - 1; i >= 0; --i)
    for (int j = i + 1; j < d; ++j) x[i] -= lower.at(j, i) * x[j];
  return x;
}

}  // namespace

PsdVerdict psd_check(const RatMatrix& m) {
  if (!m.symmetric()) throw argument_error("psd_check: matrix is not symmetric");
  int d = m.dim;
  RatMatrix w = m;
  PsdVerdict verdict;
  verdict.unit_lower = RatMatrix::identity(d);
  verdict.pivots.assign(d, Rat(0));
  for (int k = 0; k < d; ++k) {
    const Rat& pivot = w.at(k, k);
    if (pivot < 0) {
      std::vector<Rat> y(d, Rat(0));
      y[k] = 1;
      verdict.witness = pull_back(verdict.unit_lower, y);
      return verdict;
    }
    if (pivot == 0) {
      for (int j = k + 1; j < d; ++j) {
        if (w.at(k, j) == 0) continue;
        // 2x2 principal submatrix [[0, a], [a, s]] with a != 0 is indefinite
        std::vector<Rat> y(d, Rat(0));
        y[k] = (w.at(j, j) + 1) / (2 * w.at(k, j));
        y[j] = -1;
        verdict.witness = pull_back(verdict.unit_lower, y);
        return verdict;
      }
      continue;  // pivot 0 with a zero row: skip, D_k = 0
    }
    verdict.pivots[k] = pivot;
    for (int i = k + 1; i < d; ++i) {
      Rat f = w.at(i, k) / pivot;
      verdict.unit_lower.at(i, k) = f;
      if (f == 0) continue;
      for (int j = k + 1; j <= i; ++j) {
        w.at(i, j) -= f * w.at(k, j);
        w.at(j, i) = w.at(i, j);
      }
    }
  }
  verdict.is_psd = true;
  return verdict;
}

Rat quadratic_form(const RatMatrix& m, std::span<const Rat> x) {
  if (static_cast<int>(x.size()) != m.dim)
    throw argument_error("quadratic_form: vector length does not match matrix dimension");
  Rat total = 0;
  for (int i = 0; i < m.dim; ++i) {
    if (x[i] == 0) continue;
    Rat row = 0;
    for (int j = 0; j < m.dim; ++j) row += m.at(i, j) * x[j];
    total += x[i] * row;
  }
  return total;
}

CharPoly char_poly(const RatMatrix& m) {
  if (m.dim > 10) throw size_error("char_poly: supported up to dim 10");
  int d = m.dim;
  CharPoly out;
  out.xi_minus_m.assign(d + 1, Rat(0));
  out.xi_minus_m[0] = 1;
  RatMatrix ak = m;
  for (int k = 1; k <= d; ++k) {
    Rat trace = 0;
    for (int i = 0; i < d; ++i) trace += ak.at(i, i);
    Rat c = -trace / k;
    out.xi_minus_m[k] = c;
    if (k == d) break;
    RatMatrix b = ak;
    for (int i = 0; i < d; ++i) b.at(i, i) += c;
    RatMatrix next = RatMatrix::zero(d);
    for (int i = 0; i < d; ++i)
      for (int t = 0; t < d; ++t) {
        if (m.at(i, t) == 0) continue;
        for (int j = 0; j < d; ++j) next.at(i, j) += m.at(i, t) * b.at(t, j);
      }
    ak = next;
  }
  out.m_minus_xi = out.xi_minus_m;
  if (d % 2)
    for (Rat& c : out.m_minus_xi) c = -c;
  return out;
}

}  // namespace pentagon
