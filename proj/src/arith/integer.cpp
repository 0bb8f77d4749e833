#include "ellbr/arith/integer.hpp"

#include <cctype>

namespace ellbr {

Integer ipow(const Integer& base, unsigned long exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

Integer ipow(long base, unsigned long exponent) { return ipow(Integer(base), exponent); }

Integer mod(const Integer& a, const Integer& m) {
  if (m <= 0) throw std::invalid_argument("mod: modulus must be positive");
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

long mod(long a, long m) {
  if (m <= 0) throw std::invalid_argument("mod: modulus must be positive");
  long r = a % m;
  return r < 0 ? r + m : r;
}

int valuation(const Integer& a, long p) {
  if (a == 0) throw std::invalid_argument("valuation of zero");
  if (p < 2) throw std::invalid_argument("valuation: bad prime");
  Integer q = a;
  int v = 0;
  while (mpz_divisible_ui_p(q.get_mpz_t(), static_cast<unsigned long>(p))) {
    mpz_divexact_ui(q.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(p));
    ++v;
  }
  return v;
}

int valuation(const Rational& a, long p) {
  if (a == 0) throw std::invalid_argument("valuation of zero");
  return valuation(Integer(a.get_num()), p) - valuation(Integer(a.get_den()), p);
}

Integer inverse_mod(const Integer& a, const Integer& m) {
  Integer r;
  if (m == 1) return 0;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw std::domain_error("inverse_mod: not invertible");
  return r;
}

bool is_prime(long n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  if (n > 1000000000000L) return is_prime(Integer(n));
  for (long d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

std::vector<std::pair<Integer, int>> factor(Integer n) {
  if (n == 0) throw std::invalid_argument("factor: zero");
  if (n < 0) n = -n;
  std::vector<std::pair<Integer, int>> out;
  for (unsigned long d = 2; Integer(d) * d <= n; ++d) {
    if (!mpz_divisible_ui_p(n.get_mpz_t(), d)) continue;
    int e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), d);
      ++e;
    }
    out.emplace_back(Integer(d), e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

int legendre_unit(const Rational& u, long p) {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("legendre_unit: p must be an odd prime");
  if (u == 0 || valuation(u, p) != 0) throw std::invalid_argument("legendre_unit: argument is not a p-unit");
  Integer pp(p);
  Integer r = mod(Integer(u.get_num()) * Integer(u.get_den()), pp);
  return mpz_legendre(r.get_mpz_t(), pp.get_mpz_t());
}

Integer squarefree_part(const Integer& n) {
  Integer r = n < 0 ? -1 : 1;
  for (auto& [q, e] : factor(n))
    if (e % 2) r *= q;
  return r;
}

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw std::invalid_argument("empty rational");
  auto slash = s.find('/');
  auto check = [&](const std::string& part) {
    size_t i = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    if (i >= part.size()) throw std::invalid_argument("malformed rational: " + text);
    for (; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i])))
        throw std::invalid_argument("malformed rational: " + text);
  };
  std::string num = s.substr(0, slash);
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  check(num);
  Rational r;
  if (slash == std::string::npos) {
    r = Rational(Integer(num));
  } else {
    std::string den = s.substr(slash + 1);
    check(den);
    Integer d(den);
    if (d == 0) throw std::invalid_argument("zero denominator: " + text);
    r = Rational(Integer(num), d);
  }
  r.canonicalize();
  return r;
}

std::string to_string(const Integer& a) { return a.get_str(); }
std::string to_string(const Rational& a) { return a.get_str(); }

long to_long(const Integer& a) {
  if (!a.fits_slong_p()) throw std::overflow_error("integer does not fit in long: " + a.get_str());
  return a.get_si();
}

}  // namespace ellbr
