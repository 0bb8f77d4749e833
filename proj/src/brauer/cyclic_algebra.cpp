#include "ellbr/brauer/cyclic_algebra.hpp"

#include <array>
#include <stdexcept>

namespace ellbr {

size_t rational_rank(std::vector<RationalVector> rows) {
  size_t rank = 0;
  if (rows.empty()) return 0;
  size_t cols = rows[0].size();
  for (size_t c = 0; c < cols && rank < rows.size(); ++c) {
    size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    for (size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      Rational q = rows[r][c] / rows[rank][c];
      for (size_t k = c; k < cols; ++k) rows[r][k] -= q * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

const char* to_string(Splitting s) {
  switch (s) {
    case Splitting::split: return "split";
    case Splitting::division: return "division";
    default: return "unknown";
  }
}

namespace {

constexpr long kRankPrime = 2147483647;

// Rank mod a large prime; a lower bound for the rank over Q when every entry is p-integral.
std::optional<size_t> modular_rank(const std::vector<RationalVector>& rows) {
  if (rows.empty()) return 0;
  size_t cols = rows[0].size();
  std::vector<std::vector<long>> m(rows.size(), std::vector<long>(cols));
  Integer P(kRankPrime);
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols; ++j) {
      const Rational& x = rows[i][j];
      if (mpz_divisible_p(x.get_den().get_mpz_t(), P.get_mpz_t())) return std::nullopt;
      m[i][j] = to_long(mod(Integer(x.get_num() * inverse_mod(x.get_den(), P)), P));
    }
  auto mulmod = [](long a, long b) { return static_cast<long>((static_cast<__int128>(a) * b) % kRankPrime); };
  auto inv = [&](long a) {
    long r = 1, e = kRankPrime - 2;
    while (e) {
      if (e & 1) r = mulmod(r, a);
      a = mulmod(a, a);
      e >>= 1;
    }
    return r;
  };
  size_t rank = 0;
  for (size_t c = 0; c < cols && rank < m.size(); ++c) {
    size_t piv = rank;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[rank], m[piv]);
    long iv = inv(m[rank][c]);
    for (size_t r = rank + 1; r < m.size(); ++r) {
      if (m[r][c] == 0) continue;
      long q = mulmod(m[r][c], iv);
      for (size_t k = c; k < cols; ++k) m[r][k] = ((m[r][k] - mulmod(q, m[rank][k])) % kRankPrime + kRankPrime) % kRankPrime;
    }
    ++rank;
  }
  return rank;
}

QPoly compose_mod(const QPoly& h, const QPoly& g, const QPoly& f) {
  QPoly r;
  for (int i = h.degree(); i >= 0; --i) r = (r * g + QPoly({h.coeff(i)})) % f;
  return r;
}

bool is_rational_power(const Rational& x, int n) {
  if (x == 0) return false;
  if (x < 0 && n % 2 == 0) return false;
  auto root = [n](Integer v) {
    bool neg = v < 0;
    if (neg) v = -v;
    Integer r;
    if (!mpz_root(r.get_mpz_t(), v.get_mpz_t(), n)) return false;
    return true;
  };
  return root(x.get_num()) && root(x.get_den());
}

Integer isqrt_floor(const Integer& v) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
  return r;
}

bool is_square(const Integer& v) { return v >= 0 && mpz_perfect_square_p(v.get_mpz_t()); }

}  // namespace

RationalVector CyclicAlgebraTable::basis(size_t index) const {
  RationalVector v(dimension(), Rational(0));
  v[index] = 1;
  return v;
}

RationalVector CyclicAlgebraTable::multiply(const RationalVector& a, const RationalVector& b) const {
  size_t d = dimension();
  RationalVector r(d, Rational(0));
  for (size_t i = 0; i < d; ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < d; ++j) {
      if (b[j] == 0) continue;
      Rational c = a[i] * b[j];
      const RationalVector& e = structure[i][j];
      for (size_t k = 0; k < d; ++k)
        if (e[k] != 0) r[k] += c * e[k];
    }
  }
  return r;
}

namespace {

std::vector<RationalVector> left_multiplication(const CyclicAlgebraTable& A, const RationalVector& a) {
  std::vector<RationalVector> rows;
  for (size_t k = 0; k < A.dimension(); ++k) rows.push_back(A.multiply(a, A.basis(k)));
  return rows;
}

bool is_zero_divisor(const CyclicAlgebraTable& A, const RationalVector& a) {
  bool nonzero = false;
  for (auto& x : a) nonzero = nonzero || x != 0;
  return nonzero && rational_rank(left_multiplication(A, a)) < A.dimension();
}

// a x^2 + b y^2 = z^2 with a, b squarefree. With g = gcd(a, b), a = g a', b = g b', this is
// a' X^2 + b' Y^2 - g Z^2 = 0 with pairwise coprime squarefree coefficients, and Holzer's bound
// |X| <= sqrt|b' g|, |Y| <= sqrt|a' g| holds for some nontrivial solution when one exists.
std::optional<std::array<Integer, 3>> conic_point(const Integer& a, const Integer& b) {
  Integer g = gcd(a, b);
  Integer a1 = a / g, b1 = b / g;
  if (a1 < 0 && b1 < 0) return std::nullopt;
  Integer bx = isqrt_floor(abs(b1 * g)), by = isqrt_floor(abs(a1 * g));
  for (Integer x = 0; x <= bx; ++x)
    for (Integer y = x == 0 ? Integer(1) : -by; y <= by; ++y) {
      Integer t = a1 * x * x + b1 * y * y;
      if (t == 0 && g != 0) return std::array<Integer, 3>{x, y, Integer(0)};
      if (!mpz_divisible_p(t.get_mpz_t(), g.get_mpz_t())) continue;
      Integer q = t / g;
      if (is_square(q)) return std::array<Integer, 3>{x, y, g * isqrt_floor(q)};
    }
  return std::nullopt;
}

void decide_quaternion(CyclicAlgebraTable& A) {
  // delta = 2x + f_1 squares to D = disc(f) and anticommutes with y.
  Rational b1 = A.f.coeff(1);
  Rational D = b1 * b1 - 4 * A.f.coeff(0);
  Integer D0 = squarefree_part(D.get_num() * D.get_den());
  Integer u0 = squarefree_part(A.u.get_num() * A.u.get_den());
  // delta / s squares to D0 and y / t to u0.
  Rational s2 = D / D0, t2 = A.u / u0;
  Rational s_r(isqrt_floor(s2.get_num()), isqrt_floor(s2.get_den()));
  Rational t_r(isqrt_floor(t2.get_num()), isqrt_floor(t2.get_den()));
  auto pt = conic_point(D0, u0);
  if (!pt) {
    A.splitting = Splitting::division;
    return;
  }
  auto [x, y, z] = *pt;
  RationalVector a(4, Rational(0));
  // x*delta/s + y*Y/t - z, basis: 1 (0), y (1), x (2), xy (3).
  a[2] += Rational(2 * x) / s_r;
  a[0] += Rational(x) * b1 / s_r;
  a[1] += Rational(y) / t_r;
  a[0] -= Rational(z);
  if (!is_zero_divisor(A, a)) throw std::logic_error("cyclic_algebra: conic point did not give a zero divisor");
  A.zero_divisor = a;
  A.splitting = Splitting::split;
}

// Looks for c in Z[x] with N(c) u an n-th power r^n; then (c y / r) - 1 is a zero divisor.
void search_norm_zero_divisor(CyclicAlgebraTable& A, const std::vector<QPoly>& gpow) {
  int n = A.degree;
  int range = n == 4 ? 2 : 3;
  std::vector<long> coef(n, -range);
  for (;;) {
    std::vector<Rational> cv;
    for (long c : coef) cv.emplace_back(c);
    QPoly c(cv);
    if (!c.is_zero()) {
      QPoly norm = QPoly({Rational(1)});
      for (int k = 0; k < n; ++k) norm = (norm * compose_mod(c, gpow[(n - k) % n], A.f)) % A.f;
      if (norm.degree() == 0) {
        Rational N = norm.coeff(0) * A.u;
        if (is_rational_power(N, n)) {
          Integer rn, rd;
          Integer num = abs(N.get_num());
          mpz_root(rn.get_mpz_t(), num.get_mpz_t(), n);
          mpz_root(rd.get_mpz_t(), N.get_den().get_mpz_t(), n);
          Rational r(N < 0 ? Integer(-rn) : rn, rd);
          RationalVector a(A.dimension(), Rational(0));
          for (int i = 0; i < n; ++i) a[i * n + 1] = c.coeff(i) / r;
          a[0] -= 1;
          if (is_zero_divisor(A, a)) {
            A.zero_divisor = a;
            A.splitting = Splitting::split;
            return;
          }
        }
      }
    }
    int i = 0;
    while (i < n && coef[i] == range) coef[i++] = -range;
    if (i == n) break;
    ++coef[i];
  }
}

}  // namespace

CyclicAlgebraTable cyclic_algebra(const QPoly& f_in, const Rational& u, int n, const QPoly& g) {
  if (n < 2 || n > 4) throw std::invalid_argument("cyclic_algebra: degree must be 2, 3 or 4");
  if (f_in.degree() != n) throw std::invalid_argument("cyclic_algebra: polynomial degree differs from n");
  if (u == 0) throw std::invalid_argument("cyclic_algebra: u must be nonzero");
  QPoly f = f_in.monic();
  if (!f.is_integral()) throw std::invalid_argument("cyclic_algebra: polynomial must be monic integral");
  QPoly gr = g % f;
  if (!compose_mod(f, gr, f).is_zero()) throw std::invalid_argument("cyclic_algebra: g does not permute the roots of f");
  std::vector<QPoly> gpow{QPoly::x() % f};
  for (int k = 1; k <= n; ++k) gpow.push_back(compose_mod(gpow.back(), gr, f));
  for (int k = 1; k < n; ++k)
    if (gpow[k] == gpow[0]) throw std::invalid_argument("cyclic_algebra: g does not have order n");
  if (!(gpow[n] == gpow[0])) throw std::invalid_argument("cyclic_algebra: g does not have order n");
  // Irreducible over Q: some unramified prime keeps f irreducible (a cyclic field has inert primes).
  Rational disc = discriminant(f);
  bool inert = false;
  for (long p = 2; p < 2000 && !inert; ++p)
    if (is_prime(p) && valuation(disc, p) == 0 && is_irreducible(FpPoly::reduce(f, p))) inert = true;
  if (!inert) throw std::invalid_argument("cyclic_algebra: f does not define a cyclic field");

  CyclicAlgebraTable A;
  A.degree = n;
  A.f = f;
  A.generator = gr;
  A.u = u;
  size_t d = static_cast<size_t>(n) * n;
  A.structure.assign(d, std::vector<RationalVector>(d, RationalVector(d, Rational(0))));
  // (x^a y^b)(x^c y^e) = x^a g^{-b}(x)^c y^(b+e), with y^n = u.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int e = 0; e < n; ++e) {
          QPoly h = QPoly::monomial(1, a);
          for (int k = 0; k < c; ++k) h = (h * gpow[(n - b) % n]) % f;
          Rational scale = b + e >= n ? u : Rational(1);
          int j = (b + e) % n;
          RationalVector& out = A.structure[a * n + b][c * n + e];
          for (int i = 0; i < n; ++i) out[i * n + j] = scale * h.coeff(i);
        }

  A.associative = true;
  for (size_t i = 0; i < d && A.associative; ++i)
    for (size_t j = 0; j < d && A.associative; ++j)
      for (size_t k = 0; k < d; ++k)
        if (A.multiply(A.structure[i][j], A.basis(k)) != A.multiply(A.basis(i), A.structure[j][k])) {
          A.associative = false;
          break;
        }
  if (!A.associative) throw std::logic_error("cyclic_algebra: structure constants are not associative");

  // Center: z commuting with x and y.
  RationalVector xv = A.basis(static_cast<size_t>(n)), yv = A.basis(1);
  std::vector<RationalVector> cols;
  for (size_t k = 0; k < d; ++k) {
    RationalVector e = A.basis(k), col;
    RationalVector p1 = A.multiply(e, xv), p2 = A.multiply(xv, e), p3 = A.multiply(e, yv), p4 = A.multiply(yv, e);
    for (size_t i = 0; i < d; ++i) col.push_back(p1[i] - p2[i]);
    for (size_t i = 0; i < d; ++i) col.push_back(p3[i] - p4[i]);
    cols.push_back(col);
  }
  A.center_dimension = d - rational_rank(cols);

  // Sandwich maps v -> e_a v e_b span End(A) exactly when A is central simple.
  std::vector<RationalVector> sandwich;
  for (size_t a = 0; a < d; ++a)
    for (size_t b = 0; b < d; ++b) {
      RationalVector flat;
      for (size_t v = 0; v < d; ++v) {
        RationalVector img = A.multiply(A.structure[a][v], A.basis(b));
        flat.insert(flat.end(), img.begin(), img.end());
      }
      sandwich.push_back(std::move(flat));
    }
  auto r = modular_rank(sandwich);
  size_t full = d * d;
  A.central_simple = (r && *r == full) || (!r || *r < full ? rational_rank(sandwich) == full : false);
  if (A.center_dimension != 1 || !A.central_simple) throw std::logic_error("cyclic_algebra: algebra is not central simple");

  if (u == 1) {
    RationalVector a(d, Rational(0));
    a[0] = 1;
    a[1] = -1;
    A.zero_divisor = a;
    A.splitting = Splitting::split;
  } else if (n == 2) {
    decide_quaternion(A);
  } else {
    search_norm_zero_divisor(A, gpow);
  }
  return A;
}

CyclicAlgebraTable cyclic_algebra(const QPoly& f, const Rational& u) {
  if (f.degree() != 2) throw std::invalid_argument("cyclic_algebra: expected a quadratic polynomial");
  QPoly m = f.monic();
  return cyclic_algebra(m, u, 2, QPoly({-m.coeff(1), Rational(-1)}));
}

}  // namespace ellbr
