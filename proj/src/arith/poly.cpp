#include "ellbr/arith/poly.hpp"

#include <algorithm>
#include <sstream>

namespace ellbr {

namespace {

long mulmod(long a, long b, long p) { return static_cast<long>((__int128)a * b % p); }

long powmod(long a, long e, long p) {
  long r = 1 % p;
  a = mod(a, p);
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

long invmod(long a, long p) {
  if (mod(a, p) == 0) throw std::domain_error("FpPoly: division by zero");
  return powmod(a, p - 2, p);
}

template <class C>
std::string render(const std::vector<C>& c, const std::string& var, auto to_str) {
  if (c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
    if (c[i] == 0) continue;
    std::string s = to_str(c[i]);
    bool neg = s[0] == '-';
    if (neg) s.erase(0, 1);
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    if (i == 0)
      os << s;
    else {
      if (s != "1") os << s << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace

QPoly::QPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  for (auto& x : c_) x.canonicalize();
  trim();
}

QPoly QPoly::from_ints(std::initializer_list<long> coeffs) {
  std::vector<Rational> c;
  for (long v : coeffs) c.emplace_back(v);
  return QPoly(std::move(c));
}

QPoly QPoly::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(degree + 1, Rational(0));
  v[degree] = c;
  return QPoly(std::move(v));
}

QPoly QPoly::cyclotomic(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic: n must be positive");
  QPoly f = monomial(1, n) - monomial(1, 0);
  for (int d = 1; d < n; ++d)
    if (n % d == 0) f = f.divmod(cyclotomic(d)).first;
  return f;
}

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

bool QPoly::is_integral() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return x.get_den() == 1; });
}

QPoly QPoly::derivative() const {
  std::vector<Rational> d;
  for (size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
  return QPoly(std::move(d));
}

QPoly QPoly::monic() const {
  if (is_zero()) return *this;
  Rational l = leading();
  std::vector<Rational> d = c_;
  for (auto& x : d) x /= l;
  return QPoly(std::move(d));
}

Rational QPoly::eval(const Rational& x) const {
  Rational r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

QPoly operator+(const QPoly& f, const QPoly& g) {
  std::vector<Rational> r(std::max(f.c_.size(), g.c_.size()), Rational(0));
  for (size_t i = 0; i < f.c_.size(); ++i) r[i] += f.c_[i];
  for (size_t i = 0; i < g.c_.size(); ++i) r[i] += g.c_[i];
  return QPoly(std::move(r));
}

QPoly operator-(const QPoly& f, const QPoly& g) { return f + Rational(-1) * g; }

QPoly operator*(const QPoly& f, const QPoly& g) {
  if (f.is_zero() || g.is_zero()) return {};
  std::vector<Rational> r(f.c_.size() + g.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < f.c_.size(); ++i)
    for (size_t j = 0; j < g.c_.size(); ++j) r[i + j] += f.c_[i] * g.c_[j];
  return QPoly(std::move(r));
}

QPoly operator*(const Rational& c, const QPoly& g) {
  std::vector<Rational> r = g.c_;
  for (auto& x : r) x *= c;
  return QPoly(std::move(r));
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& g) const {
  if (g.is_zero()) throw std::domain_error("QPoly: division by zero");
  std::vector<Rational> r = c_;
  int dg = g.degree();
  std::vector<Rational> q(std::max(0, degree() - dg + 1), Rational(0));
  for (int i = degree(); i >= dg; --i) {
    if (r[i] == 0) continue;
    Rational f = r[i] / g.leading();
    q[i - dg] = f;
    for (int j = 0; j <= dg; ++j) r[i - dg + j] -= f * g.c_[j];
  }
  return {QPoly(std::move(q)), QPoly(std::move(r))};
}

std::string QPoly::to_string(const std::string& var) const {
  return render(c_, var, [](const Rational& x) { return x.get_str(); });
}

Rational resultant(const QPoly& f, const QPoly& g) {
  int m = f.degree(), n = g.degree();
  if (m < 0 || n < 0) return 0;
  int size = m + n;
  if (size == 0) return 1;
  std::vector<std::vector<Rational>> s(size, std::vector<Rational>(size, Rational(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) s[i][i + j] = f.coeff(m - j);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) s[n + i][i + j] = g.coeff(n - j);
  Rational det = 1;
  for (int col = 0; col < size; ++col) {
    int piv = col;
    while (piv < size && s[piv][col] == 0) ++piv;
    if (piv == size) return 0;
    if (piv != col) {
      std::swap(s[piv], s[col]);
      det = -det;
    }
    det *= s[col][col];
    for (int r = col + 1; r < size; ++r) {
      if (s[r][col] == 0) continue;
      Rational f2 = s[r][col] / s[col][col];
      for (int c = col; c < size; ++c) s[r][c] -= f2 * s[col][c];
    }
  }
  return det;
}

Rational discriminant(const QPoly& f) {
  int n = f.degree();
  if (n < 1) throw std::invalid_argument("discriminant: degree must be positive");
  Rational r = resultant(f, f.derivative()) / f.leading();
  return (n * (n - 1) / 2) % 2 ? -r : r;
}

FpPoly::FpPoly(long p, std::vector<long> coeffs) : p_(p), c_(std::move(coeffs)) {
  if (!is_prime(p)) throw std::invalid_argument("FpPoly: modulus must be prime");
  for (auto& x : c_) x = mod(x, p_);
  trim();
}

FpPoly FpPoly::reduce(const QPoly& f, long p) {
  std::vector<long> c;
  Integer pp(p);
  for (const auto& x : f.coeffs()) {
    if (mod(Integer(x.get_den()), pp) == 0) throw std::domain_error("FpPoly::reduce: denominator divisible by p");
    Integer r = mod(Integer(x.get_num()) * inverse_mod(Integer(x.get_den()), pp), pp);
    c.push_back(r.get_si());
  }
  return FpPoly(p, std::move(c));
}

void FpPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FpPoly FpPoly::monic() const {
  if (is_zero()) return *this;
  long inv = invmod(c_.back(), p_);
  std::vector<long> d = c_;
  for (auto& x : d) x = mulmod(x, inv, p_);
  return FpPoly(p_, std::move(d));
}

FpPoly FpPoly::derivative() const {
  std::vector<long> d;
  for (size_t i = 1; i < c_.size(); ++i) d.push_back(mulmod(c_[i], static_cast<long>(i) % p_, p_));
  return FpPoly(p_, std::move(d));
}

long FpPoly::eval(long x) const {
  long r = 0;
  x = mod(x, p_);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = (mulmod(r, x, p_) + *it) % p_;
  return r;
}

FpPoly operator+(const FpPoly& f, const FpPoly& g) {
  if (f.p_ != g.p_) throw std::invalid_argument("FpPoly: mismatched primes");
  std::vector<long> r(std::max(f.c_.size(), g.c_.size()), 0);
  for (size_t i = 0; i < f.c_.size(); ++i) r[i] += f.c_[i];
  for (size_t i = 0; i < g.c_.size(); ++i) r[i] = (r[i] + g.c_[i]) % f.p_;
  return FpPoly(f.p_, std::move(r));
}

FpPoly operator-(const FpPoly& f, const FpPoly& g) {
  std::vector<long> neg = g.c_;
  for (auto& x : neg) x = (g.p_ - x) % g.p_;
  return f + FpPoly(g.p_, std::move(neg));
}

FpPoly operator*(const FpPoly& f, const FpPoly& g) {
  if (f.p_ != g.p_) throw std::invalid_argument("FpPoly: mismatched primes");
  if (f.is_zero() || g.is_zero()) return FpPoly(f.p_, {});
  std::vector<long> r(f.c_.size() + g.c_.size() - 1, 0);
  for (size_t i = 0; i < f.c_.size(); ++i)
    for (size_t j = 0; j < g.c_.size(); ++j) r[i + j] = (r[i + j] + mulmod(f.c_[i], g.c_[j], f.p_)) % f.p_;
  return FpPoly(f.p_, std::move(r));
}

std::pair<FpPoly, FpPoly> FpPoly::divmod(const FpPoly& g) const {
  if (g.is_zero()) throw std::domain_error("FpPoly: division by zero");
  std::vector<long> r = c_;
  int dg = g.degree();
  long inv = invmod(g.c_.back(), p_);
  std::vector<long> q(std::max(0, degree() - dg + 1), 0);
  for (int i = degree(); i >= dg; --i) {
    if (r[i] == 0) continue;
    long f = mulmod(r[i], inv, p_);
    q[i - dg] = f;
    for (int j = 0; j <= dg; ++j) r[i - dg + j] = mod(r[i - dg + j] - mulmod(f, g.c_[j], p_), p_);
  }
  return {FpPoly(p_, std::move(q)), FpPoly(p_, std::move(r))};
}

FpPoly FpPoly::powmod(const FpPoly& base, const Integer& e) const {
  FpPoly result(p_, {1});
  result = result % *this;
  FpPoly b = base % *this;
  std::string bits = e.get_str(2);
  for (char bit : bits) {
    result = (result * result) % *this;
    if (bit == '1') result = (result * b) % *this;
  }
  return result;
}

std::string FpPoly::to_string(const std::string& var) const {
  return render(c_, var, [](long x) { return std::to_string(x); });
}

FpPoly gcd(FpPoly f, FpPoly g) {
  while (!g.is_zero()) {
    FpPoly r = f % g;
    f = std::move(g);
    g = std::move(r);
  }
  return f.monic();
}

std::vector<std::pair<int, FpPoly>> distinct_degree_factorization(const FpPoly& f) {
  long p = f.prime();
  if (f.degree() < 1) return {};
  if (gcd(f, f.derivative()).degree() > 0) throw std::invalid_argument("distinct_degree_factorization: not squarefree");
  std::vector<std::pair<int, FpPoly>> out;
  FpPoly rest = f.monic();
  FpPoly x(p, {0, 1});
  FpPoly h = x;
  for (int d = 1; 2 * d <= rest.degree(); ++d) {
    h = rest.powmod(h, Integer(p));
    FpPoly g = gcd(rest, h - x);
    if (g.degree() > 0) {
      out.emplace_back(d, g);
      rest = rest.divmod(g).first;
      h = h % rest;
    }
  }
  if (rest.degree() > 0) out.emplace_back(rest.degree(), rest);
  return out;
}

bool is_irreducible(const FpPoly& f) {
  if (f.degree() < 1) return false;
  if (gcd(f, f.derivative()).degree() > 0) return false;
  auto ddf = distinct_degree_factorization(f);
  return ddf.size() == 1 && ddf[0].first == f.degree();
}

int count_roots(const FpPoly& f) {
  int n = 0;
  for (long x = 0; x < f.prime(); ++x)
    if (f.eval(x) == 0) ++n;
  return n;
}

}  // namespace ellbr
