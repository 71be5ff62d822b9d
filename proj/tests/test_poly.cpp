#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dkl/poly.hpp"

using namespace dkl;

TEST_CASE("integer polynomial basics") {
  IntPolynomial zero;
  CHECK(zero.is_zero());
  CHECK(zero.degree() == IntPolynomial::kNegInfDegree);
  CHECK(zero.to_string() == "0");

  IntPolynomial p = IntPolynomial::from_coeffs({1, 1, 3});
  CHECK(p.degree() == 2);
  CHECK(p.to_string() == "1 + q + 3q^2");
  CHECK(p.coeff(1) == 1);
  CHECK(p.coeff(5) == 0);
  CHECK(p.constant_term() == 1);

  IntPolynomial q = IntPolynomial::monomial(1, 1);
  CHECK((p - p).is_zero());
  CHECK(p * IntPolynomial(1) == p);
  CHECK(p.shifted(2) == p * q * q);
  CHECK((IntPolynomial(1) - q).to_string() == "1 - q");
}

TEST_CASE("polynomial text round trip") {
  CHECK(IntPolynomial::parse("1 + q + 3q^2") == IntPolynomial::from_coeffs({1, 1, 3}));
  CHECK(IntPolynomial::parse("0").is_zero());
  CHECK(IntPolynomial::parse(" q^3 ") == IntPolynomial::monomial(1, 3));
  CHECK(IntPolynomial::parse("2 - q") == IntPolynomial::from_coeffs({2, -1}));
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<long long> coeffs(rng() % 8);
    for (auto& c : coeffs) c = static_cast<long long>(rng() % 11) - 5;
    IntPolynomial p = IntPolynomial::from_coeffs(coeffs);
    CHECK(IntPolynomial::parse(p.to_string()) == p);
  }
}

TEST_CASE("coefficient arrays round trip") {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<long long> coeffs(rng() % 7);
    for (auto& c : coeffs) c = static_cast<long long>(rng() % 21) - 10;
    IntPolynomial p = IntPolynomial::from_coeffs(coeffs);
    CHECK(IntPolynomial::from_coeffs(p.coeffs()) == p);
  }
}

TEST_CASE("laurent polynomial basics") {
  HalfLaurent v = HalfLaurent::term(1, 1);
  HalfLaurent vinv = HalfLaurent::term(1, -1);
  CHECK((v * vinv) == HalfLaurent::term(1, 0));
  CHECK((v + vinv).degree() == 1);
  CHECK((v + vinv).low_degree() == -1);
  CHECK((v - v).is_zero());
  CHECK(v.bar() == vinv);
  CHECK(v.to_string() == "v");
  CHECK((vinv - v).to_string() == "v^-1 - v");

  IntPolynomial p = IntPolynomial::from_coeffs({1, 2});
  // q -> v^2 and q -> v^-2 with a shift.
  CHECK(HalfLaurent::from_q_poly(p, 1, 0) ==
        HalfLaurent::term(1, 0) + HalfLaurent::term(2, 2));
  CHECK(HalfLaurent::from_q_poly(p, -1, 3) ==
        HalfLaurent::term(1, 3) + HalfLaurent::term(2, 1));
}

TEST_CASE("laurent arithmetic matches polynomial arithmetic") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<long long> ca(1 + rng() % 5), cb(1 + rng() % 5);
    for (auto& c : ca) c = static_cast<long long>(rng() % 9) - 4;
    for (auto& c : cb) c = static_cast<long long>(rng() % 9) - 4;
    IntPolynomial a = IntPolynomial::from_coeffs(ca);
    IntPolynomial b = IntPolynomial::from_coeffs(cb);
    CHECK(HalfLaurent::from_q_poly(a * b, 1, 0) ==
          HalfLaurent::from_q_poly(a, 1, 0) * HalfLaurent::from_q_poly(b, 1, 0));
    CHECK(HalfLaurent::from_q_poly(a + b, 1, 0) ==
          HalfLaurent::from_q_poly(a, 1, 0) + HalfLaurent::from_q_poly(b, 1, 0));
  }
}
