// Exact univariate polynomials in q over the rationals, Laurent polynomials,
// and polynomials in an auxiliary variable t with QPoly coefficients.
#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>

namespace cqsf {

using Rational = mpq_class;

struct NotDivisible : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class QLaurent;

class QPoly {
 public:
  QPoly() = default;
  QPoly(long c);  // NOLINT: constants convert implicitly
  QPoly(const Rational& c);  // NOLINT

  static QPoly monomial(int exp, const Rational& c = 1);
  static QPoly q() { return monomial(1); }

  bool is_zero() const { return c_.empty(); }
  int degree() const;  // -1 for zero
  int low_degree() const;  // -1 for zero
  Rational coeff(int exp) const;
  const std::map<int, Rational>& terms() const { return c_; }
  void add_term(int exp, const Rational& c);

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const QPoly& o);
  QPoly& operator*=(const Rational& r);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(QPoly a, const QPoly& b) { return a *= b; }
  friend QPoly operator*(QPoly a, const Rational& r) { return a *= r; }
  friend QPoly operator*(const Rational& r, QPoly a) { return a *= r; }
  QPoly operator-() const;
  bool operator==(const QPoly& o) const { return c_ == o.c_; }
  bool operator!=(const QPoly& o) const { return !(*this == o); }

  QPoly pow(unsigned k) const;
  // p(q) -> p(q + s)
  QPoly shift(const Rational& s) const;
  // p(q) -> p(q^k)
  QPoly dilate(int k) const;
  Rational eval(const Rational& x) const;

  bool nonnegative() const;  // every coefficient >= 0
  bool integral() const;

  // "1+4*q+q^2"
  std::string str() const;
  // "0:1/1,1:4/1,2:1/1"
  std::string serialize() const;
  static QPoly parse(const std::string& s);

 private:
  std::map<int, Rational> c_;
};

class QLaurent {
 public:
  QLaurent() = default;
  QLaurent(const QPoly& p);  // NOLINT
  static QLaurent monomial(int exp, const Rational& c = 1);

  bool is_zero() const { return c_.empty(); }
  int degree() const;
  int low_degree() const;
  Rational coeff(int exp) const;
  const std::map<int, Rational>& terms() const { return c_; }
  void add_term(int exp, const Rational& c);

  QLaurent& operator+=(const QLaurent& o);
  QLaurent& operator-=(const QLaurent& o);
  QLaurent& operator*=(const QLaurent& o);
  friend QLaurent operator+(QLaurent a, const QLaurent& b) { return a += b; }
  friend QLaurent operator-(QLaurent a, const QLaurent& b) { return a -= b; }
  friend QLaurent operator*(QLaurent a, const QLaurent& b) { return a *= b; }
  bool operator==(const QLaurent& o) const { return c_ == o.c_; }
  bool operator!=(const QLaurent& o) const { return !(*this == o); }

  // p(q) -> p(1/q)
  QLaurent invert() const;
  bool is_poly() const { return c_.empty() || c_.begin()->first >= 0; }
  QPoly to_poly() const;  // throws if negative exponents are present

  std::string str() const;
  std::string serialize() const;

 private:
  std::map<int, Rational> c_;
};

class TPoly {
 public:
  TPoly() = default;
  static TPoly monomial(int texp, const QPoly& c);
  bool is_zero() const { return c_.empty(); }
  QPoly coeff(int texp) const;
  const std::map<int, QPoly>& terms() const { return c_; }
  void add_term(int texp, const QPoly& c);
  TPoly& operator+=(const TPoly& o);
  TPoly& operator*=(const TPoly& o);
  friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
  friend TPoly operator*(TPoly a, const TPoly& b) { return a *= b; }
  bool operator==(const TPoly& o) const { return c_ == o.c_; }
  bool operator!=(const TPoly& o) const { return !(*this == o); }
  std::string str() const;

 private:
  std::map<int, QPoly> c_;
};

QPoly q_int(int n);
QPoly q_factorial(int n);
QPoly eulerian_poly(int n);

bool is_palindromic(const QPoly& p, const Rational& center);
bool is_unimodal(const QPoly& p);

QPoly exact_div(const QPoly& p, const QPoly& d);
QLaurent exact_div(const QLaurent& p, const QLaurent& d);

std::string rational_str(const Rational& r);

}  // namespace cqsf
