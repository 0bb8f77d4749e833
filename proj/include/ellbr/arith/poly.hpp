#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ellbr/arith/integer.hpp"

namespace ellbr {

// Dense polynomial over Q, coefficients from the constant term up.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rational> coeffs);
  static QPoly from_ints(std::initializer_list<long> coeffs_low_to_high);
  static QPoly monomial(const Rational& c, int degree);
  static QPoly x() { return monomial(1, 1); }
  static QPoly cyclotomic(int n);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rational coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : Rational(0); }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_integral() const;
  QPoly derivative() const;
  QPoly monic() const;
  Rational eval(const Rational& x) const;

  friend QPoly operator+(const QPoly& f, const QPoly& g);
  friend QPoly operator-(const QPoly& f, const QPoly& g);
  friend QPoly operator*(const QPoly& f, const QPoly& g);
  friend QPoly operator*(const Rational& c, const QPoly& g);
  friend bool operator==(const QPoly& f, const QPoly& g) { return f.c_ == g.c_; }

  // f = q*g + r with deg r < deg g.
  std::pair<QPoly, QPoly> divmod(const QPoly& g) const;
  QPoly operator%(const QPoly& g) const { return divmod(g).second; }

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

Rational resultant(const QPoly& f, const QPoly& g);
Rational discriminant(const QPoly& f);

// Polynomial over F_p (p prime, p < 2^31), coefficients in [0, p).
class FpPoly {
 public:
  FpPoly(long p, std::vector<long> coeffs);
  // Reduction of an integral rational polynomial.
  static FpPoly reduce(const QPoly& f, long p);

  long prime() const { return p_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  long coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : 0; }
  const std::vector<long>& coeffs() const { return c_; }

  FpPoly monic() const;
  FpPoly derivative() const;
  long eval(long x) const;

  friend FpPoly operator+(const FpPoly& f, const FpPoly& g);
  friend FpPoly operator-(const FpPoly& f, const FpPoly& g);
  friend FpPoly operator*(const FpPoly& f, const FpPoly& g);
  friend bool operator==(const FpPoly& f, const FpPoly& g) { return f.p_ == g.p_ && f.c_ == g.c_; }
  std::pair<FpPoly, FpPoly> divmod(const FpPoly& g) const;
  FpPoly operator%(const FpPoly& g) const { return divmod(g).second; }

  // base^e mod this.
  FpPoly powmod(const FpPoly& base, const Integer& e) const;

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  long p_;
  std::vector<long> c_;
};

FpPoly gcd(FpPoly f, FpPoly g);

// Distinct-degree factorization of a squarefree polynomial: (d, product of the degree-d factors).
std::vector<std::pair<int, FpPoly>> distinct_degree_factorization(const FpPoly& f);
bool is_irreducible(const FpPoly& f);
int count_roots(const FpPoly& f);

}  // namespace ellbr
