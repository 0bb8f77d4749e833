#pragma once

#include <string>
#include <vector>

#include "ellbr/arith/poly.hpp"

namespace ellbr {

// Exact element of Q(zeta_n), stored as its residue mod Phi_n (phi(n) coefficients).
class CyclotomicElement {
 public:
  CyclotomicElement(int n, const QPoly& representative);
  static CyclotomicElement zeta_power(int n, long k);
  static CyclotomicElement constant(int n, const Rational& c);

  int conductor() const { return n_; }
  const QPoly& residue() const { return r_; }
  std::vector<Rational> coefficients() const;

  // The automorphism zeta -> zeta^a, gcd(a, n) = 1.
  CyclotomicElement galois(long a) const;
  Rational trace() const;

  friend CyclotomicElement operator+(const CyclotomicElement& x, const CyclotomicElement& y);
  friend CyclotomicElement operator-(const CyclotomicElement& x, const CyclotomicElement& y);
  friend CyclotomicElement operator*(const CyclotomicElement& x, const CyclotomicElement& y);
  friend bool operator==(const CyclotomicElement& x, const CyclotomicElement& y) { return x.n_ == y.n_ && x.r_ == y.r_; }
  CyclotomicElement pow(unsigned e) const;

  std::string to_string() const { return r_.to_string("z"); }

 private:
  int n_;
  QPoly phi_;
  QPoly r_;
};

std::vector<long> unit_group(int n);
long euler_phi(int n);

struct GaussianPeriod {
  int conductor;
  int degree;
  std::vector<long> subgroup;  // H: the period is the sum of zeta^h over H
  CyclotomicElement period;
  QPoly minimal_polynomial;
};

// Degree-d Gaussian period in Q(zeta_n). (Z/n)^x must be cyclic, or cyclic modulo {+-1}
// with d dividing phi(n)/2 (the real-subfield case, e.g. n = 16).
GaussianPeriod gaussian_period(int n, int d);
QPoly period_minimal_polynomial(int n, int d);

}  // namespace ellbr
