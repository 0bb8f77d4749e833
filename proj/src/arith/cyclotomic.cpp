#include "ellbr/arith/cyclotomic.hpp"

#include <algorithm>
#include <numeric>

namespace ellbr {

CyclotomicElement::CyclotomicElement(int n, const QPoly& representative)
    : n_(n), phi_(QPoly::cyclotomic(n)), r_(representative % phi_) {}

CyclotomicElement CyclotomicElement::zeta_power(int n, long k) {
  return CyclotomicElement(n, QPoly::monomial(1, static_cast<int>(mod(k, static_cast<long>(n)))));
}

CyclotomicElement CyclotomicElement::constant(int n, const Rational& c) { return CyclotomicElement(n, QPoly::monomial(c, 0)); }

std::vector<Rational> CyclotomicElement::coefficients() const {
  std::vector<Rational> c(phi_.degree(), Rational(0));
  for (int i = 0; i <= r_.degree(); ++i) c[i] = r_.coeff(i);
  return c;
}

CyclotomicElement CyclotomicElement::galois(long a) const {
  if (std::gcd(a, static_cast<long>(n_)) != 1) throw std::invalid_argument("galois: exponent not a unit mod n");
  std::vector<Rational> c(n_, Rational(0));
  for (int i = 0; i <= r_.degree(); ++i) c[mod(a * i, static_cast<long>(n_))] += r_.coeff(i);
  return CyclotomicElement(n_, QPoly(std::move(c)));
}

Rational CyclotomicElement::trace() const {
  CyclotomicElement sum = constant(n_, 0);
  for (long a : unit_group(n_)) sum = sum + galois(a);
  if (sum.r_.degree() > 0) throw std::logic_error("trace: sum of conjugates is not rational");
  return sum.r_.coeff(0);
}

CyclotomicElement operator+(const CyclotomicElement& x, const CyclotomicElement& y) {
  if (x.n_ != y.n_) throw std::invalid_argument("CyclotomicElement: mismatched conductors");
  return CyclotomicElement(x.n_, x.r_ + y.r_);
}

CyclotomicElement operator-(const CyclotomicElement& x, const CyclotomicElement& y) {
  if (x.n_ != y.n_) throw std::invalid_argument("CyclotomicElement: mismatched conductors");
  return CyclotomicElement(x.n_, x.r_ - y.r_);
}

CyclotomicElement operator*(const CyclotomicElement& x, const CyclotomicElement& y) {
  if (x.n_ != y.n_) throw std::invalid_argument("CyclotomicElement: mismatched conductors");
  return CyclotomicElement(x.n_, x.r_ * y.r_);
}

CyclotomicElement CyclotomicElement::pow(unsigned e) const {
  CyclotomicElement r = constant(n_, 1), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

std::vector<long> unit_group(int n) {
  std::vector<long> u;
  for (long a = 1; a <= n; ++a)
    if (std::gcd(a, static_cast<long>(n)) == 1) u.push_back(a % n);
  std::sort(u.begin(), u.end());
  return u;
}

long euler_phi(int n) { return static_cast<long>(unit_group(n).size()); }

namespace {

// Smallest k >= 1 with g^k in the subgroup `base` (a subset closed under multiplication).
long order_modulo(long g, int n, const std::vector<long>& base) {
  long x = g % n;
  for (long k = 1;; ++k) {
    if (std::find(base.begin(), base.end(), x) != base.end()) return k;
    x = x * g % n;
  }
}

}  // namespace

GaussianPeriod gaussian_period(int n, int d) {
  if (n < 3) throw std::invalid_argument("gaussian_period: conductor too small");
  std::vector<long> units = unit_group(n);
  long phi = static_cast<long>(units.size());
  std::vector<long> base{1};
  long quotient = phi;
  long gen = -1;
  for (long g : units)
    if (order_modulo(g, n, base) == quotient) {
      gen = g;
      break;
    }
  if (gen < 0) {
    base = {1, n - 1};
    quotient = phi / 2;
    for (long g : units)
      if (order_modulo(g, n, base) == quotient) {
        gen = g;
        break;
      }
    if (gen < 0) throw std::invalid_argument("gaussian_period: (Z/n)^x is not cyclic, even modulo +-1");
  }
  if (d < 1 || quotient % d != 0)
    throw std::invalid_argument("gaussian_period: degree must divide the order of the cyclic quotient");
  // H = preimage of <gen^d> in (Z/n)^x.
  std::vector<long> h;
  long gd = 1;
  for (long i = 0; i < d; ++i) gd = gd * gen % n;
  long x = 1;
  for (long i = 0; i < quotient / d; ++i) {
    for (long b : base) h.push_back(x * b % n);
    x = x * gd % n;
  }
  std::sort(h.begin(), h.end());
  h.erase(std::unique(h.begin(), h.end()), h.end());

  CyclotomicElement eta = CyclotomicElement::constant(n, 0);
  for (long e : h) eta = eta + CyclotomicElement::zeta_power(n, e);

  // Conjugates eta, sigma(eta), ... under the generator; they must be distinct.
  std::vector<CyclotomicElement> conj{eta};
  for (int i = 1; i < d; ++i) conj.push_back(conj.back().galois(gen));
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      if (conj[i] == conj[j]) throw std::invalid_argument("gaussian_period: period does not generate a degree-d field");
  if (!(conj.back().galois(gen) == eta)) throw std::logic_error("gaussian_period: conjugates do not close up");

  // Power sums p_k = Tr_{Q(eta)/Q}(eta^k) = Tr_{Q(zeta)/Q}(eta^k) / [Q(zeta):Q(eta)], then Newton.
  long index = phi / d;
  std::vector<Rational> ps(d + 1), e(d + 1);
  CyclotomicElement power = CyclotomicElement::constant(n, 1);
  for (int k = 1; k <= d; ++k) {
    power = power * eta;
    ps[k] = power.trace() / index;
  }
  e[0] = 1;
  for (int k = 1; k <= d; ++k) {
    Rational s = 0;
    for (int i = 1; i <= k; ++i) s += ((i % 2) ? 1 : -1) * e[k - i] * ps[i];
    e[k] = s / k;
  }
  std::vector<Rational> coeffs(d + 1);
  for (int k = 0; k <= d; ++k) coeffs[d - k] = (k % 2 ? -1 : 1) * e[k];
  QPoly f(coeffs);
  if (!f.is_integral()) throw std::logic_error("gaussian_period: minimal polynomial is not integral");
  return {n, d, h, eta, f};
}

QPoly period_minimal_polynomial(int n, int d) { return gaussian_period(n, d).minimal_polynomial; }

}  // namespace ellbr
