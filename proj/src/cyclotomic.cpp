#include "pqv/cyclotomic.hpp"

#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "pqv/errors.hpp"

namespace pqv {

namespace {

using Poly = std::vector<Rational>;  // low degree first

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder of p modulo the monic integer polynomial m.
Poly poly_rem(Poly p, const std::vector<BigInt>& m) {
  trim(p);
  const std::size_t dm = m.size() - 1;
  while (p.size() > dm) {
    const Rational lead = p.back();
    const std::size_t shift = p.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) p[shift + i] -= lead * Rational(m[i]);
    trim(p);
  }
  return p;
}

Poly poly_rem_q(Poly a, const Poly& b) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db && !a.empty()) {
    const Rational f = a.back() / b.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] -= f * b[i];
    trim(a);
  }
  return a;
}

Poly poly_divmod(Poly a, const Poly& b, Poly& rem) {
  trim(a);
  const std::size_t db = b.size() - 1;
  Poly q(a.size() > db ? a.size() - db : 1, Rational(0));
  while (a.size() > db && !a.empty()) {
    const Rational f = a.back() / b.back();
    const std::size_t shift = a.size() - 1 - db;
    q[shift] = f;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] -= f * b[i];
    trim(a);
  }
  rem = a;
  trim(q);
  return q;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

Poly poly_sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

int lcm_int(int a, int b) { return std::lcm(a, b); }

}  // namespace

const std::vector<BigInt>& cyclotomic_polynomial(int n) {
  static std::recursive_mutex mu;
  static std::map<int, std::vector<BigInt>> cache;  // node-based: references stay valid
  std::lock_guard<std::recursive_mutex> lock(mu);
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  // x^n - 1 divided by Phi_d for every proper divisor d of n.
  std::vector<BigInt> p(static_cast<std::size_t>(n) + 1, BigInt(0));
  p[0] = -1;
  p[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const std::vector<BigInt>& div = cyclotomic_polynomial(d);
    const std::size_t dd = div.size() - 1;
    std::vector<BigInt> q(p.size() - dd, BigInt(0));
    for (std::size_t i = p.size() - 1;; --i) {
      const BigInt c = p[i];
      if (c != 0) {
        const std::size_t s = i - dd;
        q[s] = c;
        for (std::size_t k = 0; k <= dd; ++k) p[s + k] -= c * div[k];
      }
      if (i == dd) break;
    }
    p = std::move(q);
  }
  return cache.emplace(n, std::move(p)).first->second;
}

Cyclotomic::Cyclotomic(int conductor) {
  if (conductor < 1) throw std::invalid_argument("cyclotomic conductor must be positive");
  coeffs_.assign(static_cast<std::size_t>(conductor), Rational(0));
}

Cyclotomic::Cyclotomic(const Rational& q) : coeffs_{q} {}

Cyclotomic Cyclotomic::zeta(int conductor, std::int64_t exponent, const Rational& coeff) {
  Cyclotomic z(conductor);
  z.coeffs_[static_cast<std::size_t>(mod(exponent, conductor))] = coeff;
  return z;
}

Cyclotomic Cyclotomic::lifted(int new_conductor) const {
  const int n = conductor();
  if (new_conductor % n != 0) throw std::invalid_argument("lift target must be a multiple of the conductor");
  if (new_conductor == n) return *this;
  Cyclotomic r(new_conductor);
  const int step = new_conductor / n;
  for (int i = 0; i < n; ++i) r.coeffs_[static_cast<std::size_t>(i * step)] = coeffs_[static_cast<std::size_t>(i)];
  return r;
}

std::vector<Rational> Cyclotomic::normal_form() const {
  return poly_rem(coeffs_, cyclotomic_polynomial(conductor()));
}

bool Cyclotomic::is_zero() const {
  bool all_zero = true;
  for (const auto& c : coeffs_) {
    if (c != 0) {
      all_zero = false;
      break;
    }
  }
  return all_zero || normal_form().empty();
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& other) {
  const int l = lcm_int(conductor(), other.conductor());
  if (l != conductor()) *this = lifted(l);
  const Cyclotomic o = other.lifted(l);
  for (int i = 0; i < l; ++i) coeffs_[static_cast<std::size_t>(i)] += o.coeffs_[static_cast<std::size_t>(i)];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& other) { return *this += -other; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& other) {
  const int l = lcm_int(conductor(), other.conductor());
  const Cyclotomic a = lifted(l);
  const Cyclotomic b = other.lifted(l);
  std::vector<std::size_t> nz_b;
  for (int j = 0; j < l; ++j)
    if (b.coeffs_[static_cast<std::size_t>(j)] != 0) nz_b.push_back(static_cast<std::size_t>(j));
  Cyclotomic r(l);
  for (int i = 0; i < l; ++i) {
    const Rational& ai = a.coeffs_[static_cast<std::size_t>(i)];
    if (ai == 0) continue;
    for (std::size_t j : nz_b) r.coeffs_[(static_cast<std::size_t>(i) + j) % static_cast<std::size_t>(l)] += ai * b.coeffs_[j];
  }
  *this = std::move(r);
  return *this;
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& other) { return *this *= other.inverse(); }

Cyclotomic Cyclotomic::inverse() const {
  const int n = conductor();
  const auto& phi_int = cyclotomic_polynomial(n);
  Poly phi(phi_int.begin(), phi_int.end());
  Poly a = normal_form();
  if (a.empty()) throw std::domain_error("division by zero in cyclotomic field");
  // Extended Euclid: s*a + t*phi = gcd; phi is irreducible so gcd is a unit.
  Poly r0 = phi, r1 = a, s0 = {}, s1 = {Rational(1)};
  while (!r1.empty()) {
    Poly rem;
    Poly q = poly_divmod(r0, r1, rem);
    Poly s2 = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant.
  const Rational c = r0.front();
  Poly inv = poly_rem_q(s0, phi);
  Cyclotomic r(n);
  for (std::size_t i = 0; i < inv.size(); ++i) r.coeffs_[i] = inv[i] / c;
  return r;
}

Cyclotomic Cyclotomic::pow(std::int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  Cyclotomic result(Rational(1));
  Cyclotomic base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

std::string Cyclotomic::str() const {
  std::ostringstream out;
  bool first = true;
  const int n = conductor();
  for (int i = 0; i < n; ++i) {
    Rational c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!first) {
      out << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    } else if (c < 0) {
      out << "-";
      c = -c;
    }
    first = false;
    if (i == 0) {
      out << c.str();
    } else {
      if (c != 1) out << c.str() << "*";
      out << "z(" << n << ")^" << i;
    }
  }
  if (first) out << "0";
  return out.str();
}

namespace {

class LiteralParser {
 public:
  explicit LiteralParser(const std::string& s) : s_(s) {}

  Cyclotomic parse() {
    skip();
    Cyclotomic total(Rational(0));
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      Cyclotomic term = parse_term();
      total += sign > 0 ? term : -term;
      first = false;
      skip();
    }
    if (first) fail("empty literal");
    return total;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw UsageError("bad cyclotomic literal '" + s_ + "': " + what + " at offset " + std::to_string(pos_));
  }

  std::int64_t parse_int() {
    skip();
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos_;
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
    std::int64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) v = v * 10 + (s_[pos_++] - '0');
    return neg ? -v : v;
  }

  Cyclotomic parse_factor() {
    skip();
    if (peek() == 'z') {
      ++pos_;
      skip();
      if (peek() != '(') fail("expected '(' after z");
      ++pos_;
      const std::int64_t n = parse_int();
      if (n < 1) fail("conductor must be positive");
      skip();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      skip();
      std::int64_t e = 1;
      if (peek() == '^') {
        ++pos_;
        e = parse_int();
      }
      return Cyclotomic::zeta(static_cast<int>(n), e);
    }
    const std::int64_t num = parse_int();
    skip();
    std::int64_t den = 1;
    if (peek() == '/') {
      ++pos_;
      den = parse_int();
      if (den == 0) fail("zero denominator");
    }
    return Cyclotomic(make_rational(num, den));
  }

  Cyclotomic parse_term() {
    Cyclotomic t = parse_factor();
    skip();
    while (peek() == '*') {
      ++pos_;
      t *= parse_factor();
      skip();
    }
    return t;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

Cyclotomic parse_cyclotomic(const std::string& text) { return LiteralParser(text).parse(); }

}  // namespace pqv
