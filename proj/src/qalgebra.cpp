#include "cqsf/qalgebra.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <vector>

namespace cqsf {

namespace {

template <class Map>
void add_into(Map& m, int exp, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = m.try_emplace(exp, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) m.erase(it);
  }
}

template <class Map>
std::string human(const Map& m) {
  if (m.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : m) {
    Rational mag = abs(c);
    bool neg = c < 0;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? '-' : '+');
    }
    first = false;
    if (e == 0) {
      os << rational_str(mag);
      continue;
    }
    if (mag != 1) os << rational_str(mag) << '*';
    os << 'q';
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

template <class Map>
std::string serial(const Map& m) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : m) {
    if (!first) os << ',';
    first = false;
    os << e << ':' << c.get_num().get_str() << '/' << c.get_den().get_str();
  }
  return os.str();
}

}  // namespace

std::string rational_str(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// ---- QPoly

QPoly::QPoly(long c) { add_into(c_, 0, Rational(c)); }
QPoly::QPoly(const Rational& c) { add_into(c_, 0, c); }

QPoly QPoly::monomial(int exp, const Rational& c) {
  if (exp < 0) throw std::invalid_argument("QPoly exponent must be non-negative");
  QPoly p;
  add_into(p.c_, exp, c);
  return p;
}

int QPoly::degree() const { return c_.empty() ? -1 : c_.rbegin()->first; }
int QPoly::low_degree() const { return c_.empty() ? -1 : c_.begin()->first; }

Rational QPoly::coeff(int exp) const {
  auto it = c_.find(exp);
  return it == c_.end() ? Rational(0) : it->second;
}

void QPoly::add_term(int exp, const Rational& c) {
  if (exp < 0) throw std::invalid_argument("QPoly exponent must be non-negative");
  add_into(c_, exp, c);
}

QPoly& QPoly::operator+=(const QPoly& o) {
  for (const auto& [e, c] : o.c_) add_into(c_, e, c);
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  for (const auto& [e, c] : o.c_) add_into(c_, e, -c);
  return *this;
}

QPoly& QPoly::operator*=(const QPoly& o) {
  std::map<int, Rational> r;
  for (const auto& [e1, c1] : c_)
    for (const auto& [e2, c2] : o.c_) add_into(r, e1 + e2, c1 * c2);
  c_ = std::move(r);
  return *this;
}

QPoly& QPoly::operator*=(const Rational& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& [e, c] : c_) c *= s;
  return *this;
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& [e, c] : r.c_) c = -c;
  return r;
}

QPoly QPoly::pow(unsigned k) const {
  QPoly result(1), base = *this;
  while (k) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k) base *= base;
  }
  return result;
}

QPoly QPoly::shift(const Rational& s) const {
  // Horner in the shifted variable.
  QPoly lin = QPoly::q() + QPoly(s);
  QPoly r;
  int d = degree();
  for (int e = d; e >= 0; --e) {
    r *= lin;
    r += QPoly(coeff(e));
  }
  return r;
}

QPoly QPoly::dilate(int k) const {
  if (k < 0) throw std::invalid_argument("dilate needs k >= 0");
  QPoly r;
  for (const auto& [e, c] : c_) add_into(r.c_, e * k, c);
  return r;
}

Rational QPoly::eval(const Rational& x) const {
  Rational r = 0;
  for (int e = degree(); e >= 0; --e) r = r * x + coeff(e);
  return r;
}

bool QPoly::nonnegative() const {
  return std::all_of(c_.begin(), c_.end(), [](const auto& kv) { return kv.second > 0; });
}

bool QPoly::integral() const {
  return std::all_of(c_.begin(), c_.end(), [](const auto& kv) { return kv.second.get_den() == 1; });
}

std::string QPoly::str() const { return human(c_); }
std::string QPoly::serialize() const { return serial(c_); }

QPoly QPoly::parse(const std::string& text) {
  // Accepts the human form: signed terms of the shape [c*]q[^e] or c.
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw std::invalid_argument("empty polynomial");
  QPoly p;
  size_t i = 0;
  auto fail = [&] { throw std::invalid_argument("cannot parse polynomial: " + text); };
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    }
    Rational c = 1;
    size_t j = i;
    while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '/')) ++j;
    bool has_num = j > i;
    if (has_num) {
      c = Rational(s.substr(i, j - i));
      c.canonicalize();
      i = j;
    }
    int e = 0;
    if (i < s.size() && s[i] == '*') {
      ++i;
      if (i >= s.size() || s[i] != 'q') fail();
    }
    if (i < s.size() && s[i] == 'q') {
      ++i;
      e = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        size_t k = i;
        while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
        if (k == i) fail();
        e = std::stoi(s.substr(i, k - i));
        i = k;
      }
    } else if (!has_num) {
      fail();
    }
    p.add_term(e, sign * c);
    if (i < s.size() && s[i] != '+' && s[i] != '-') fail();
  }
  return p;
}

// ---- QLaurent

QLaurent::QLaurent(const QPoly& p) {
  for (const auto& [e, c] : p.terms()) c_.emplace(e, c);
}

QLaurent QLaurent::monomial(int exp, const Rational& c) {
  QLaurent p;
  add_into(p.c_, exp, c);
  return p;
}

int QLaurent::degree() const {
  if (c_.empty()) throw std::domain_error("degree of zero Laurent polynomial");
  return c_.rbegin()->first;
}

int QLaurent::low_degree() const {
  if (c_.empty()) throw std::domain_error("degree of zero Laurent polynomial");
  return c_.begin()->first;
}

Rational QLaurent::coeff(int exp) const {
  auto it = c_.find(exp);
  return it == c_.end() ? Rational(0) : it->second;
}

void QLaurent::add_term(int exp, const Rational& c) { add_into(c_, exp, c); }

QLaurent& QLaurent::operator+=(const QLaurent& o) {
  for (const auto& [e, c] : o.c_) add_into(c_, e, c);
  return *this;
}

QLaurent& QLaurent::operator-=(const QLaurent& o) {
  for (const auto& [e, c] : o.c_) add_into(c_, e, -c);
  return *this;
}

QLaurent& QLaurent::operator*=(const QLaurent& o) {
  std::map<int, Rational> r;
  for (const auto& [e1, c1] : c_)
    for (const auto& [e2, c2] : o.c_) add_into(r, e1 + e2, c1 * c2);
  c_ = std::move(r);
  return *this;
}

QLaurent QLaurent::invert() const {
  QLaurent r;
  for (const auto& [e, c] : c_) r.c_.emplace(-e, c);
  return r;
}

QPoly QLaurent::to_poly() const {
  if (!is_poly()) throw std::domain_error("Laurent polynomial has negative exponents");
  QPoly p;
  for (const auto& [e, c] : c_) p.add_term(e, c);
  return p;
}

std::string QLaurent::str() const { return human(c_); }
std::string QLaurent::serialize() const { return serial(c_); }

// ---- TPoly

TPoly TPoly::monomial(int texp, const QPoly& c) {
  TPoly t;
  t.add_term(texp, c);
  return t;
}

QPoly TPoly::coeff(int texp) const {
  auto it = c_.find(texp);
  return it == c_.end() ? QPoly() : it->second;
}

void TPoly::add_term(int texp, const QPoly& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = c_.try_emplace(texp, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) c_.erase(it);
  }
}

TPoly& TPoly::operator+=(const TPoly& o) {
  for (const auto& [e, c] : o.c_) add_term(e, c);
  return *this;
}

TPoly& TPoly::operator*=(const TPoly& o) {
  TPoly r;
  for (const auto& [e1, c1] : c_)
    for (const auto& [e2, c2] : o.c_) r.add_term(e1 + e2, c1 * c2);
  *this = std::move(r);
  return *this;
}

std::string TPoly::str() const {
  if (c_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : c_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.str() + ")";
    if (e == 1) out += "*t";
    if (e > 1) out += "*t^" + std::to_string(e);
  }
  return out;
}

// ---- free functions

QPoly q_int(int n) {
  if (n < 0) throw std::invalid_argument("q_int of negative integer");
  QPoly p;
  for (int i = 0; i < n; ++i) p.add_term(i, 1);
  return p;
}

QPoly q_factorial(int n) {
  QPoly p(1);
  for (int i = 2; i <= n; ++i) p *= q_int(i);
  return p;
}

QPoly eulerian_poly(int n) {
  if (n < 1) throw std::invalid_argument("eulerian_poly needs n >= 1");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<long> count(n, 0);
  do {
    int des = 0;
    for (int i = 0; i + 1 < n; ++i) des += perm[i] > perm[i + 1];
    ++count[des];
  } while (std::next_permutation(perm.begin(), perm.end()));
  QPoly p;
  for (int d = 0; d < n; ++d) p.add_term(d, count[d]);
  return p;
}

bool is_palindromic(const QPoly& p, const Rational& center) {
  if (p.is_zero()) return true;
  Rational twice = 2 * center;
  if (twice.get_den() != 1) return false;
  long s = twice.get_num().get_si();
  for (const auto& [e, c] : p.terms()) {
    long mirror = s - e;
    if (mirror < 0 || p.coeff(static_cast<int>(mirror)) != c) return false;
  }
  return true;
}

bool is_unimodal(const QPoly& p) {
  if (p.is_zero()) return true;
  bool falling = false;
  Rational prev = p.coeff(0);
  for (int e = 1; e <= p.degree(); ++e) {
    Rational cur = p.coeff(e);
    if (cur < prev) falling = true;
    else if (cur > prev && falling) return false;
    prev = cur;
  }
  return true;
}

QPoly exact_div(const QPoly& p, const QPoly& d) {
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  QPoly rem = p, quot;
  int dd = d.degree();
  Rational lead = d.coeff(dd);
  while (!rem.is_zero() && rem.degree() >= dd) {
    int shift = rem.degree() - dd;
    Rational f = rem.coeff(rem.degree()) / lead;
    quot.add_term(shift, f);
    rem -= QPoly::monomial(shift, f) * d;
  }
  if (!rem.is_zero())
    throw NotDivisible("(" + p.str() + ") / (" + d.str() + ") leaves remainder " + rem.str());
  return quot;
}

QLaurent exact_div(const QLaurent& p, const QLaurent& d) {
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  if (p.is_zero()) return {};
  int sp = p.low_degree(), sd = d.low_degree();
  QLaurent pp = p * QLaurent::monomial(-sp), dd = d * QLaurent::monomial(-sd);
  QPoly quot = exact_div(pp.to_poly(), dd.to_poly());
  return QLaurent(quot) * QLaurent::monomial(sp - sd);
}

}  // namespace cqsf
