#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pentagon/certificate.hpp"
#include "pentagon/errors.hpp"
#include "pentagon/linalg.hpp"
#include "test_util.hpp"

using namespace pentagon;

namespace {

RatMatrix scaled(const RatMatrix& m, const Rat& f) {
  RatMatrix out = m;
  for (Rat& x : out.a) x *= f;
  return out;
}

// test-local polynomial arithmetic: the oracle for char_poly regressions
std::vector<Rat> poly_mul(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  std::vector<Rat> out(a.size() + b.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

RatMatrix reconstruct(const PsdVerdict& v) {
  int d = v.unit_lower.dim;
  RatMatrix m = RatMatrix::zero(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        m.at(i, j) += v.unit_lower.at(i, k) * v.pivots[k] * v.unit_lower.at(j, k);
  return m;
}

RatMatrix random_symmetric(std::mt19937& rng, int d) {
  RatMatrix m = RatMatrix::zero(d);
  std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) {
      Rat v(num(rng), den(rng));
      m.at(i, j) = v;
      m.at(j, i) = v;
    }
  return m;
}

const Certificate& shipped_cert() {
  static const Certificate cert =
      load_certificate(testutil::data_path("erdos-pentagon.cert.json")).certificate;
  return cert;
}

}  // namespace

TEST_CASE("rational parse and format") {
  CHECK(format_rat(Rat(24, 625)) == "24/625");
  CHECK(format_rat(Rat(-126, 6250)) == "-63/3125");
  CHECK(format_rat(Rat(4)) == "4");
  CHECK(parse_rat("24/625") == Rat(24, 625));
  CHECK(parse_rat("-36/625") == Rat(-36, 625));
  CHECK(parse_rat("0") == Rat(0));
  CHECK_THROWS_AS(parse_rat(""), parse_error);
  CHECK_THROWS_AS(parse_rat("1/0"), parse_error);
  CHECK_THROWS_AS(parse_rat("1/-2"), parse_error);
  CHECK_THROWS_AS(parse_rat("2.5"), parse_error);
  CHECK(binomial(10, 5) == 252);
  CHECK(binomial(5, 7) == 0);
  CHECK(falling_factorial(5, 3) == 60);
}

TEST_CASE("psd_check basics") {
  CHECK(psd_check(RatMatrix::identity(4)).is_psd);

  RatMatrix bad = RatMatrix::zero(2);
  bad.at(0, 0) = 1;
  bad.at(0, 1) = 2;
  bad.at(1, 0) = 2;
  bad.at(1, 1) = 1;
  PsdVerdict v = psd_check(bad);
  CHECK_FALSE(v.is_psd);
  CHECK(quadratic_form(bad, v.witness) < 0);

  RatMatrix zero_row = RatMatrix::zero(2);
  zero_row.at(1, 1) = 1;
  CHECK(psd_check(zero_row).is_psd);

  RatMatrix zero_pivot = RatMatrix::zero(2);  // [[0,1],[1,0]]
  zero_pivot.at(0, 1) = 1;
  zero_pivot.at(1, 0) = 1;
  v = psd_check(zero_pivot);
  CHECK_FALSE(v.is_psd);
  CHECK(quadratic_form(zero_pivot, v.witness) < 0);

  RatMatrix neg = RatMatrix::identity(3);
  neg.at(2, 2) = -1;
  v = psd_check(neg);
  CHECK_FALSE(v.is_psd);
  CHECK(quadratic_form(neg, v.witness) < 0);

  RatMatrix asym = RatMatrix::zero(2);
  asym.at(0, 1) = 1;
  CHECK_THROWS_AS(psd_check(asym), argument_error);
}

TEST_CASE("certificate matrices are psd") {
  for (const CertificateType& ct : shipped_cert().types) {
    PsdVerdict v = psd_check(ct.matrix);
    CHECK(v.is_psd);
    CHECK(reconstruct(v) == ct.matrix);  // L D L^T = M entry for entry
  }
}

TEST_CASE("psd factorization and witnesses, randomized") {
  std::mt19937 rng(17);
  int psd_seen = 0, indef_seen = 0;
  for (int it = 0; it < 200; ++it) {
    int d = 1 + static_cast<int>(rng() % 5);
    RatMatrix m = random_symmetric(rng, d);
    PsdVerdict v = psd_check(m);
    if (v.is_psd) {
      ++psd_seen;
      CHECK(reconstruct(v) == m);
      for (Rat& p : v.pivots) CHECK(p >= 0);
    } else {
      ++indef_seen;
      CHECK(quadratic_form(m, v.witness) < 0);
    }
    // cross-check against Descartes sign analysis of det(xI - M):
    // all roots >= 0 iff the coefficient signs weakly alternate
    if (d <= 5) {
      CharPoly cp = char_poly(m);
      bool alternating = true;
      for (std::size_t i = 0; i < cp.xi_minus_m.size(); ++i) {
        Rat signed_c = (i % 2 ? -cp.xi_minus_m[i] : cp.xi_minus_m[i]);
        if (signed_c < 0) alternating = false;
      }
      CHECK(alternating == v.is_psd);
    }
  }
  CHECK(psd_seen > 5);
  CHECK(indef_seen > 5);
}

TEST_CASE("quadratic form") {
  RatMatrix id = RatMatrix::identity(3);
  std::vector<Rat> x{Rat(1, 2), Rat(-2), Rat(3)};
  CHECK(quadratic_form(id, x) == Rat(1, 4) + 4 + 9);
  std::vector<Rat> zero(8, Rat(0));
  const RatMatrix& p = shipped_cert().types[0].matrix;
  CHECK(quadratic_form(p, zero) == Rat(0));
  std::vector<Rat> e1(8, Rat(0));
  e1[0] = 1;
  CHECK(quadratic_form(p, e1) == Rat(24, 625));
  CHECK_THROWS_AS(quadratic_form(id, e1), argument_error);
}

TEST_CASE("characteristic polynomials of the certificate matrices") {
  const Certificate& cert = shipped_cert();

  // 625 P: x^4 (x - 360)^2 (x^2 - 930x + 53766)
  std::vector<Rat> expect{Rat(1)};
  for (int i = 0; i < 4; ++i) expect = poly_mul(expect, {Rat(1), Rat(0)});
  for (int i = 0; i < 2; ++i) expect = poly_mul(expect, {Rat(1), Rat(-360)});
  expect = poly_mul(expect, {Rat(1), Rat(-930), Rat(53766)});
  CHECK(char_poly(scaled(cert.types[0].matrix, Rat(625))).xi_minus_m == expect);

  // 2500 Q: x (x^2 - 31282x + 3219791)(x^3 - 7374x^2 + 7536419x - 324955440)
  expect = poly_mul({Rat(1), Rat(0)}, {Rat(1), Rat(-31282), Rat(3219791)});
  expect = poly_mul(expect, {Rat(1), Rat(-7374), Rat(7536419), Rat(-324955440)});
  CHECK(char_poly(scaled(cert.types[1].matrix, Rat(2500))).xi_minus_m == expect);

  // 625 R, det(M - xI) convention: -x^2 (x - 475)(x^2 - 2369x + 492426)
  expect = poly_mul({Rat(-1), Rat(0), Rat(0)}, {Rat(1), Rat(-475)});
  expect = poly_mul(expect, {Rat(1), Rat(-2369), Rat(492426)});
  CHECK(char_poly(scaled(cert.types[2].matrix, Rat(625))).m_minus_xi == expect);
}

TEST_CASE("char_poly conventions") {
  RatMatrix m = RatMatrix::identity(3);  // det(xI - M) = (x-1)^3
  CharPoly cp = char_poly(m);
  CHECK(cp.xi_minus_m == std::vector<Rat>{Rat(1), Rat(-3), Rat(3), Rat(-1)});
  CHECK(cp.m_minus_xi == std::vector<Rat>{Rat(-1), Rat(3), Rat(-3), Rat(1)});
}
