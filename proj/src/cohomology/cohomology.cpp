#include "ellbr/cohomology/cohomology.hpp"

#include <algorithm>
#include <numeric>

namespace ellbr {

namespace {

// h * v for v in ZG^r (index j*n + g).
IntVector act_free(const FiniteGroup& G, int h, const IntVector& v) {
  size_t n = G.order();
  IntVector r(v.size(), Integer(0));
  for (size_t idx = 0; idx < v.size(); ++idx) {
    if (v[idx] == 0) continue;
    size_t j = idx / n;
    int g = static_cast<int>(idx % n);
    r[j * n + G.mul(h, g)] = v[idx];
  }
  return r;
}

Integer dot(const IntVector& a, const IntVector& b) {
  Integer s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Cheap pairwise size reduction so that chosen generators stay small.
void size_reduce(std::vector<IntVector>& basis) {
  for (int round = 0; round < 20; ++round) {
    bool changed = false;
    for (size_t i = 0; i < basis.size(); ++i)
      for (size_t j = 0; j < basis.size(); ++j) {
        if (i == j) continue;
        Integer nj = dot(basis[j], basis[j]);
        if (nj == 0) continue;
        Integer num = 2 * dot(basis[i], basis[j]) + nj;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), Integer(2 * nj).get_mpz_t());
        if (q == 0) continue;
        IntVector cand = basis[i];
        for (size_t t = 0; t < cand.size(); ++t) cand[t] -= q * basis[j][t];
        if (dot(cand, cand) < dot(basis[i], basis[i])) {
          basis[i] = std::move(cand);
          changed = true;
        }
      }
    if (!changed) break;
  }
  std::stable_sort(basis.begin(), basis.end(), [](const IntVector& a, const IntVector& b) { return dot(a, a) < dot(b, b); });
}

IntMatrix block_diagonal(const IntMatrix& block, size_t copies) {
  IntMatrix r(block.rows() * copies, block.cols() * copies);
  for (size_t c = 0; c < copies; ++c)
    for (size_t i = 0; i < block.rows(); ++i)
      for (size_t j = 0; j < block.cols(); ++j) r(c * block.rows() + i, c * block.cols() + j) = block(i, j);
  return r;
}

// Z / B with Z = {x : d_next x in Lambda^(rows/k)} and B = im d_prev + Lambda^(cols/k).
LatticeQuotient cochain_quotient(const GroupModule& M, const IntMatrix* d_prev, const IntMatrix& d_next) {
  size_t k = M.rank();
  size_t m = d_next.cols();
  auto modulus = M.uniform_modulus();
  if (modulus) {
    Integer n = *modulus;
    SmithForm s = smith_normal_form(d_next, kSmithRight);
    struct Col {
      size_t j;
      Integer l;
    };
    std::vector<Col> cols;
    std::vector<size_t> dropped;
    for (size_t j = 0; j < m; ++j) {
      if (j >= s.rank) {
        cols.push_back({j, 1});
      } else if (n == 0) {
        dropped.push_back(j);
      } else {
        cols.push_back({j, n / gcd(n, s.diagonal[j])});
      }
    }
    std::vector<IntVector> zb;
    for (auto& c : cols) {
      IntVector v = s.V.column(c.j);
      for (auto& x : v) x *= c.l;
      zb.push_back(std::move(v));
    }
    IntMatrix Vi = s.V_inv;
    auto coords_of_y = [cols, dropped](const IntVector& y) {
      IntVector c;
      for (size_t j : dropped)
        if (y[j] != 0) throw std::invalid_argument("cochain is not a cocycle");
      for (auto& col : cols) {
        if (!mpz_divisible_p(y[col.j].get_mpz_t(), col.l.get_mpz_t())) throw std::invalid_argument("cochain is not a cocycle");
        c.push_back(y[col.j] / col.l);
      }
      return c;
    };
    auto coords = [Vi, coords_of_y](const IntVector& x) { return coords_of_y(Vi * x); };
    std::vector<IntVector> bc;
    if (d_prev && d_prev->cols() > 0) {
      IntMatrix img = Vi * *d_prev;
      for (size_t j = 0; j < img.cols(); ++j) bc.push_back(coords_of_y(img.column(j)));
    }
    if (n != 0)
      for (size_t t = 0; t < m; ++t) {
        IntVector y = Vi.column(t);
        for (auto& x : y) x *= n;
        bc.push_back(coords_of_y(y));
      }
    IntMatrix zbasis = IntMatrix::from_columns(zb, m);
    return LatticeQuotient(zbasis, IntMatrix::from_columns(bc, zb.size()), coords);
  }
  // General relations: Z from the kernel of [d_next | R^blocks].
  size_t blocks_next = d_next.rows() / k, blocks = m / k;
  IntMatrix big = d_next.hconcat(block_diagonal(M.relations(), blocks_next));
  IntMatrix ker = kernel_basis(big);
  IntMatrix proj(m, ker.cols());
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < ker.cols(); ++j) proj(i, j) = ker(i, j);
  IntMatrix zbasis = column_lattice_basis(proj);
  IntMatrix bgens = block_diagonal(M.relations(), blocks);
  if (d_prev && d_prev->cols() > 0) bgens = d_prev->hconcat(bgens);
  return LatticeQuotient::from_generators(zbasis, bgens);
}

FgAbelianGroup group_of(const LatticeQuotient& q) { return FgAbelianGroup::from_cyclic_orders(q.orders()); }

}  // namespace

FreeResolution::FreeResolution(std::shared_ptr<const FiniteGroup> group, int length) : group_(std::move(group)) {
  const FiniteGroup& G = *group_;
  size_t n = G.order();
  ranks_.push_back(1);
  IntMatrix aug(1, n);
  for (size_t g = 0; g < n; ++g) aug(0, g) = 1;
  boundary_.push_back(aug);
  for (int i = 1; i <= length; ++i) {
    IntMatrix ker = kernel_basis(boundary_.back());
    std::vector<IntVector> cands = ker.columns();
    size_reduce(cands);
    size_t dim = boundary_.back().cols();
    std::vector<IntVector> gens, span;
    for (const IntVector& c : cands) {
      if (!span.empty() && in_column_lattice(IntMatrix::from_columns(span, dim), c)) continue;
      gens.push_back(c);
      for (int h = 0; h < static_cast<int>(n); ++h) span.push_back(act_free(G, h, c));
    }
    std::vector<IntVector> cols;
    for (const IntVector& c : gens)
      for (int g = 0; g < static_cast<int>(n); ++g) cols.push_back(act_free(G, g, c));
    ranks_.push_back(gens.size());
    boundary_.push_back(IntMatrix::from_columns(cols, dim));
  }
}

namespace {

// Hom_G(F_i, M) -> Hom_G(F_{i+1}, M), cochains stored as (f(e_1), ..., f(e_r)).
IntMatrix cochain_differential(const FreeResolution& R, const GroupModule& M, int i) {
  const FiniteGroup& G = R.group();
  size_t n = G.order(), k = M.rank();
  size_t r_i = R.rank(i), r_next = R.rank(i + 1);
  const IntMatrix& bd = R.boundary(i + 1);
  IntMatrix d(r_next * k, r_i * k);
  for (size_t l = 0; l < r_next; ++l)
    for (size_t j = 0; j < r_i; ++j)
      for (size_t g = 0; g < n; ++g) {
        const Integer& c = bd(j * n + g, l * n);
        if (c == 0) continue;
        const IntMatrix& A = M.action(static_cast<int>(g));
        for (size_t a = 0; a < k; ++a)
          for (size_t b = 0; b < k; ++b) d(l * k + a, j * k + b) += c * A(a, b);
      }
  return d;
}

}  // namespace

FgAbelianGroup group_cohomology(const GroupModule& M, int degree, const FreeResolution& R) {
  if (degree < 0) throw std::invalid_argument("group_cohomology: negative degree");
  if (degree + 1 > R.length()) throw std::invalid_argument("group_cohomology: resolution too short");
  IntMatrix next = cochain_differential(R, M, degree);
  if (degree == 0) return group_of(cochain_quotient(M, nullptr, next));
  IntMatrix prev = cochain_differential(R, M, degree - 1);
  return group_of(cochain_quotient(M, &prev, next));
}

FgAbelianGroup group_cohomology(const GroupModule& M, int degree) {
  if (degree < 0 || degree > 4) throw std::invalid_argument("group_cohomology: degree must be between 0 and 4");
  return group_cohomology(M, degree, FreeResolution(M.group_ptr(), degree + 1));
}

BarComplex::BarComplex(const GroupModule& M) : M_(M) {
  int n = M_.group().order();
  position_.assign(n, -1);
  for (int g = 1; g < n; ++g) {
    position_[g] = static_cast<int>(nontrivial_.size());
    nontrivial_.push_back(g);
  }
}

size_t BarComplex::dimension(int i) const {
  size_t d = M_.rank();
  for (int t = 0; t < i; ++t) d *= nontrivial_.size();
  return d;
}

size_t BarComplex::tuple_index(const std::vector<int>& elements) const {
  size_t idx = 0;
  for (int g : elements) {
    if (position_[g] < 0) throw std::invalid_argument("tuple_index: identity in a normalized tuple");
    idx = idx * nontrivial_.size() + position_[g];
  }
  return idx;
}

std::vector<int> BarComplex::tuple(size_t index, int length) const {
  std::vector<int> t(length);
  for (int i = length - 1; i >= 0; --i) {
    t[i] = nontrivial_[index % nontrivial_.size()];
    index /= nontrivial_.size();
  }
  return t;
}

IntMatrix BarComplex::differential(int i) const {
  const FiniteGroup& G = M_.group();
  size_t k = M_.rank();
  size_t tuples_next = dimension(i + 1) / k;
  IntMatrix d(dimension(i + 1), dimension(i));
  auto add_block = [&](size_t row_tuple, size_t col_tuple, const IntMatrix* A, long sign) {
    for (size_t a = 0; a < k; ++a) {
      if (A) {
        for (size_t b = 0; b < k; ++b) d(row_tuple * k + a, col_tuple * k + b) += (*A)(a, b);
      } else {
        d(row_tuple * k + a, col_tuple * k + a) += sign;
      }
    }
  };
  for (size_t r = 0; r < tuples_next; ++r) {
    std::vector<int> g = tuple(r, i + 1);
    add_block(r, tuple_index(std::vector<int>(g.begin() + 1, g.end())), &M_.action(g[0]), 1);
    for (int j = 1; j <= i; ++j) {
      int h = G.mul(g[j - 1], g[j]);
      if (h == 0) continue;
      std::vector<int> merged(g.begin(), g.begin() + (j - 1));
      merged.push_back(h);
      merged.insert(merged.end(), g.begin() + j + 1, g.end());
      add_block(r, tuple_index(merged), nullptr, j % 2 ? -1 : 1);
    }
    add_block(r, tuple_index(std::vector<int>(g.begin(), g.end() - 1)), nullptr, (i + 1) % 2 ? -1 : 1);
  }
  return d;
}

namespace {

LatticeQuotient bar_quotient(const BarComplex& C, int degree) {
  if (degree < 0) throw std::invalid_argument("BarCohomology: negative degree");
  IntMatrix next = C.differential(degree);
  if (degree == 0) return cochain_quotient(C.module(), nullptr, next);
  IntMatrix prev = C.differential(degree - 1);
  return cochain_quotient(C.module(), &prev, next);
}

}  // namespace

BarCohomology::BarCohomology(const BarComplex& complex, int degree) : quotient_(bar_quotient(complex, degree)) {}

FgAbelianGroup BarCohomology::group() const { return group_of(quotient_); }

InvariantsDescription invariants_generator(const GroupModule& M) {
  BarCohomology h0(BarComplex(M), 0);
  InvariantsDescription out{h0.group(), {}, {}};
  auto modulus = M.uniform_modulus();
  std::vector<std::string> labels = M.basis_labels();
  if (labels.empty()) {
    if (M.rank() == 1)
      labels = {"1"};
    else
      for (size_t i = 0; i < M.rank(); ++i) labels.push_back("e" + std::to_string(i + 1));
  }
  for (size_t j = 0; j < h0.generators().size(); ++j) {
    IntVector best = M.reduce(h0.generators()[j]);
    Integer d = h0.orders()[j];
    if (modulus && *modulus != 0 && d != 0) {
      for (Integer u = 2; u < d; ++u) {
        if (gcd(u, d) != 1) continue;
        IntVector cand = h0.generators()[j];
        for (auto& x : cand) x *= u;
        cand = M.reduce(cand);
        if (cand < best) best = cand;
      }
    } else {
      auto first = std::find_if(best.begin(), best.end(), [](const Integer& x) { return x != 0; });
      if (first != best.end() && *first < 0)
        for (auto& x : best) x = -x;
    }
    std::string desc;
    for (size_t i = 0; i < best.size(); ++i) {
      if (best[i] == 0) continue;
      std::string term = (best[i] == 1 ? "" : best[i].get_str() + "*") + labels[i];
      if (labels[i] == "1") term = best[i].get_str();
      desc += (desc.empty() ? "" : " + ") + term;
    }
    out.generators.push_back(best);
    out.descriptions.push_back(desc.empty() ? "0" : desc);
  }
  return out;
}

namespace {

void require_in(const GroupModule& M, const IntMatrix& cols, const std::string& what) {
  for (size_t j = 0; j < cols.cols(); ++j)
    if (!M.in_relations(cols.column(j))) throw std::invalid_argument("short exact sequence: " + what);
}

IntMatrix first_rows(const IntMatrix& m, size_t rows) {
  IntMatrix r(rows, m.cols());
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
  return r;
}

IntVector lift_through(const IntMatrix& map, const GroupModule& target, const IntVector& v, const std::string& what) {
  auto sol = solve_integer(map.hconcat(target.relations()), v);
  if (!sol) throw std::invalid_argument("connecting_map: " + what);
  return IntVector(sol->begin(), sol->begin() + map.cols());
}

}  // namespace

void verify_exact(const ShortExactSequence& s) {
  const FiniteGroup& G = s.A.group();
  if (G.name() != s.B.group().name() || G.name() != s.C.group().name() || G.order() != s.B.group().order())
    throw std::invalid_argument("short exact sequence: modules over different groups");
  if (s.alpha.rows() != s.B.rank() || s.alpha.cols() != s.A.rank() || s.beta.rows() != s.C.rank() || s.beta.cols() != s.B.rank())
    throw std::invalid_argument("short exact sequence: map shapes do not match the modules");
  for (int g = 0; g < G.order(); ++g) {
    require_in(s.B, s.alpha * s.A.action(g) - s.B.action(g) * s.alpha, "alpha is not equivariant");
    require_in(s.C, s.beta * s.B.action(g) - s.C.action(g) * s.beta, "beta is not equivariant");
  }
  require_in(s.B, s.alpha * s.A.relations(), "alpha is not well defined");
  require_in(s.C, s.beta * s.B.relations(), "beta is not well defined");
  require_in(s.C, s.beta * s.alpha, "beta o alpha != 0");
  IntMatrix ka = first_rows(kernel_basis(s.alpha.hconcat(s.B.relations())), s.A.rank());
  require_in(s.A, ka, "alpha is not injective");
  IntMatrix kb = first_rows(kernel_basis(s.beta.hconcat(s.C.relations())), s.B.rank());
  IntMatrix image = s.alpha.hconcat(s.B.relations());
  for (size_t j = 0; j < kb.cols(); ++j)
    if (!in_column_lattice(image, kb.column(j))) throw std::invalid_argument("short exact sequence: not exact at the middle term");
  IntMatrix onto = s.beta.hconcat(s.C.relations());
  for (size_t i = 0; i < s.C.rank(); ++i) {
    IntVector e(s.C.rank(), Integer(0));
    e[i] = 1;
    if (!in_column_lattice(onto, e)) throw std::invalid_argument("short exact sequence: beta is not surjective");
  }
}

ConnectingImage connecting_map(const ShortExactSequence& s, const IntVector& c) {
  verify_exact(s);
  const FiniteGroup& G = s.A.group();
  if (c.size() != s.C.rank()) throw std::invalid_argument("connecting_map: element has wrong length");
  for (int g = 0; g < G.order(); ++g) {
    IntVector moved = s.C.action(g) * c;
    for (size_t i = 0; i < c.size(); ++i) moved[i] -= c[i];
    if (!s.C.in_relations(moved)) throw std::invalid_argument("connecting_map: element is not invariant");
  }
  IntVector b = lift_through(s.beta, s.C, c, "element does not lift");
  BarComplex bar(s.A);
  IntVector f(bar.dimension(1), Integer(0));
  size_t k = s.A.rank();
  for (int g = 1; g < G.order(); ++g) {
    IntVector v = s.B.action(g) * b;
    for (size_t i = 0; i < v.size(); ++i) v[i] -= b[i];
    IntVector a = lift_through(s.alpha, s.B, v, "g.b - b does not come from the kernel");
    size_t t = bar.tuple_index({g});
    for (size_t i = 0; i < k; ++i) f[t * k + i] = a[i];
  }
  BarCohomology h1(bar, 1);
  if (!h1.is_cocycle(f)) throw std::logic_error("connecting_map: g.b - b is not a cocycle");
  return {h1.group(), f, h1.classify(f)};
}

namespace {

// Corestriction of an H-cocycle y of degree i to G, at the cochain level.
IntVector corestriction(const BarComplex& barG, const BarComplex& barH, const std::vector<int>& embedding, const IntVector& y,
                        int i) {
  const GroupModule& M = barG.module();
  const FiniteGroup& G = M.group();
  size_t k = M.rank();
  int n = G.order();
  std::vector<int> in_h(n, -1);
  for (size_t t = 0; t < embedding.size(); ++t) in_h[embedding[t]] = static_cast<int>(t);
  // Right coset representatives: g = rho(g) * rep(g) with rho(g) in H.
  std::vector<int> rho(n, -1), left_reps;
  std::vector<int> reps;
  for (int g = 0; g < n; ++g) {
    for (int t : reps) {
      int h = G.mul(g, G.inv(t));
      if (in_h[h] >= 0) {
        rho[g] = h;
        break;
      }
    }
    if (rho[g] < 0) {
      reps.push_back(g);
      rho[g] = 0;
    }
  }
  std::vector<char> covered(n, 0);
  for (int g = 0; g < n; ++g) {
    if (covered[g]) continue;
    left_reps.push_back(g);
    for (int h : embedding) covered[G.mul(g, h)] = 1;
  }
  // Y_H(h_0..h_i) = h_0 . y(h_0^-1 h_1, ..., h_{i-1}^-1 h_i), zero when an argument is trivial.
  auto YH = [&](const std::vector<int>& hs) {
    IntVector out(k, Integer(0));
    std::vector<int> args;
    for (int j = 1; j <= i; ++j) {
      int a = G.mul(G.inv(hs[j - 1]), hs[j]);
      if (a == 0) return out;
      args.push_back(in_h[a]);
    }
    size_t idx = barH.tuple_index(args);
    IntVector val(y.begin() + idx * k, y.begin() + (idx + 1) * k);
    return M.action(hs[0]) * val;
  };
  IntVector f(barG.dimension(i), Integer(0));
  for (size_t r = 0; r < barG.dimension(i) / k; ++r) {
    std::vector<int> g = barG.tuple(r, i);
    std::vector<int> xs{0};
    for (int x : g) xs.push_back(G.mul(xs.back(), x));
    IntVector acc(k, Integer(0));
    for (int s : left_reps) {
      std::vector<int> hs;
      for (int x : xs) hs.push_back(rho[G.mul(G.inv(s), x)]);
      IntVector term = M.action(s) * YH(hs);
      for (size_t a = 0; a < k; ++a) acc[a] += term[a];
    }
    for (size_t a = 0; a < k; ++a) f[r * k + a] = acc[a];
  }
  return f;
}

}  // namespace

bool transfer_composition_check(const GroupModule& M, int degree) {
  if (M.group().name() != "S3") throw std::invalid_argument("transfer check: module must be over S3");
  if (degree < 0 || degree > 3) throw std::invalid_argument("transfer check: degree must be between 0 and 3");
  auto H = M.group().subgroup({M.group().element("tau")}, "C2");
  GroupModule MH = M.restrict_to(H);
  BarComplex barG(M), barH(MH);
  BarCohomology hG(barG, degree), hH(barH, degree);
  long index = M.group().order() / H.group->order();
  size_t k = M.rank();
  for (size_t j = 0; j < hG.generators().size(); ++j) {
    const IntVector& z = hG.generators()[j];
    IntVector y(barH.dimension(degree), Integer(0));
    for (size_t r = 0; r < barH.dimension(degree) / k; ++r) {
      std::vector<int> hs = barH.tuple(r, degree);
      std::vector<int> gs;
      for (int h : hs) gs.push_back(H.embedding[h]);
      size_t idx = barG.tuple_index(gs);
      for (size_t a = 0; a < k; ++a) y[r * k + a] = z[idx * k + a];
    }
    if (!hH.is_cocycle(y)) return false;
    IntVector c = corestriction(barG, barH, H.embedding, y, degree);
    if (!hG.is_cocycle(c)) return false;
    IntVector cls = hG.classify(c);
    for (size_t t = 0; t < cls.size(); ++t) {
      Integer expect = t == j ? Integer(index) : Integer(0);
      if (hG.orders()[t] != 0) expect = mod(expect, hG.orders()[t]);
      if (cls[t] != expect) return false;
    }
  }
  return true;
}

}  // namespace ellbr
