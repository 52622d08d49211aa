#include <doctest.h>

#include <random>

#include "cqsf/qalgebra.hpp"

using namespace cqsf;

namespace {

QPoly P(const std::string& s) { return QPoly::parse(s); }

QPoly random_poly(std::mt19937& rng, int max_deg) {
  std::uniform_int_distribution<int> deg(0, max_deg), coef(-9, 9);
  QPoly p;
  int d = deg(rng);
  for (int i = 0; i <= d; ++i) p.add_term(i, coef(rng));
  return p;
}

}  // namespace

TEST_CASE("q-integers") {
  CHECK(q_int(0).is_zero());
  CHECK(q_int(3) == P("1+q+q^2"));
  CHECK(q_int(2) * q_int(1) == P("1+q"));
}

TEST_CASE("q-integer multiplicativity [mn] = [m](q^n) [n]") {
  for (int m = 1; m <= 8; ++m)
    for (int n = 1; n <= 8; ++n) CHECK(q_int(m * n) == q_int(m).dilate(n) * q_int(n));
}

TEST_CASE("palindromicity and unimodality") {
  CHECK(is_palindromic(P("1+4*q+q^2"), 1));
  CHECK_FALSE(is_palindromic(P("1+2*q"), Rational(1, 2)));
  CHECK(is_palindromic(P("1+q"), Rational(1, 2)));
  CHECK(is_unimodal(P("1+3*q+2*q^2")));
  CHECK_FALSE(is_unimodal(P("1+q^2")));
  CHECK(is_unimodal(QPoly()));
  CHECK(is_unimodal(P("120+300*q+450*q^2+550*q^3+600*q^4+500*q^5+325*q^6+175*q^7+75*q^8+25*q^9+5*q^10")));
}

TEST_CASE("exact division") {
  CHECK(exact_div(P("q^2-1"), P("q-1")) == P("q+1"));
  CHECK(exact_div(P("q^3-1"), P("q-1")) == P("1+q+q^2"));
  CHECK_THROWS_AS(exact_div(P("q^2+1"), P("q-1")), NotDivisible);
  CHECK(exact_div(QLaurent::monomial(-2) * QLaurent(P("q^2-1")), QLaurent(P("q-1"))) ==
        QLaurent::monomial(-2) * QLaurent(P("q+1")));
}

TEST_CASE("exact_div inverts multiplication on random pairs") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    QPoly a = random_poly(rng, 10), b = random_poly(rng, 10);
    if (b.is_zero()) continue;
    CHECK(exact_div(a * b, b) == a);
  }
}

TEST_CASE("arithmetic is exact") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    QPoly p = random_poly(rng, 8), r = random_poly(rng, 8), s = random_poly(rng, 8);
    CHECK((p + r) - r == p);
    CHECK((p * r) * s == p * (r * s));
    CHECK(p * r == r * p);
    CHECK(p * (r + s) == p * r + p * s);
  }
  QPoly half = QPoly(Rational(1, 2));
  CHECK(half * Rational(2) == QPoly(1));
  CHECK_FALSE(half.integral());
}

TEST_CASE("Eulerian polynomials") {
  CHECK(eulerian_poly(1) == QPoly(1));
  CHECK(eulerian_poly(2) == P("1+q"));
  CHECK(eulerian_poly(3) == P("1+4*q+q^2"));
  for (int n = 1; n <= 8; ++n) {
    CHECK(is_palindromic(eulerian_poly(n), Rational(n - 1, 2)));
    CHECK(is_unimodal(eulerian_poly(n)));
  }
}

TEST_CASE("shift, evaluation and Laurent inversion") {
  CHECK(P("q^2").shift(1) == P("1+2*q+q^2"));
  CHECK(P("1+q").eval(2) == 3);
  QLaurent l = QLaurent(P("1+2*q")).invert();
  CHECK(l.coeff(-1) == 2);
  CHECK(l.invert() == QLaurent(P("1+2*q")));
  CHECK_THROWS(l.to_poly());
}

TEST_CASE("serialization round trips") {
  QPoly p = P("1+4*q+q^2") * Rational(1, 3);
  CHECK(p.serialize() == "0:1/3,1:4/3,2:1/3");
  CHECK(QPoly::parse(p.str()) == p);
  CHECK(P("2*q-q^3").str() == "2*q-q^3");
}

TEST_CASE("t-polynomials") {
  TPoly a = TPoly::monomial(1, P("1+q"));
  TPoly b = TPoly::monomial(2, P("q"));
  TPoly s = a + b;
  CHECK(s.coeff(1) == P("1+q"));
  CHECK((a * b).coeff(3) == P("q+q^2"));
  CHECK((a + TPoly::monomial(1, P("-1-q"))).is_zero());
}
