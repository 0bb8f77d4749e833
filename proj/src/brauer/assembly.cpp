#include "ellbr/brauer/assembly.hpp"

#include <set>
#include <stdexcept>

#include "ellbr/arith/poly.hpp"
#include "ellbr/brauer/characters.hpp"
#include "ellbr/cohomology/cohomology.hpp"
#include "ellbr/cohomology/lattice.hpp"

namespace ellbr {

namespace {

// An irreducible monic quartic over F_p, i.e. the cyclic quartic extension F_{p^4}.
std::optional<FpPoly> irreducible_quartic(long p) {
  for (long c = 0; c < p * p * p * p; ++c) {
    long r = c;
    std::vector<long> coeffs;
    for (int i = 0; i < 4; ++i) {
      coeffs.push_back(r % p);
      r /= p;
    }
    coeffs.push_back(1);
    FpPoly f(p, coeffs);
    if (is_irreducible(f)) return f;
  }
  return std::nullopt;
}

long prime_of(long q) {
  for (long p = 2; p <= q; ++p)
    if (q % p == 0) return p;
  return q;
}

}  // namespace

TwoExtension resolve_two_extension(const BaseProfile& S) {
  if (!S.picard.is_trivial()) throw std::invalid_argument("resolve_two_extension: needs Pic(S) = 0");
  TwoExtension out;
  size_t nu = S.units_mod_2_basis.size(), ng = S.g_basis.size();
  for (auto& v : S.g_basis)
    if (v.size() != nu) throw std::invalid_argument("resolve_two_extension: profile G basis has the wrong length");

  bool order_four = false;
  if (ng > 0) {
    GaussianUnitMap m = gaussian_unit_map(S);
    if (m.images.size() != nu) throw std::invalid_argument("resolve_two_extension: profiles inconsistent");
    std::vector<ModVector> g_images;
    for (auto& g : S.g_basis) {
      ModVector img(m.target_basis.size(), 0);
      for (size_t j = 0; j < nu; ++j)
        if (g[j])
          for (size_t t = 0; t < img.size(); ++t) img[t] = (img[t] + m.images[j][t]) % 2;
      g_images.push_back(img);
    }
    for (auto& n : m.notes) out.audit.push_back("S[i]: " + n);
    if (rank_mod(g_images, 2) == ng) {
      order_four = true;
      out.audit.push_back("G -> Gm(S[i])/2 is injective, so no nonzero lift dies over S[i] and each lift doubles to (g, Delta)_2 != 0");
    } else if (S.kind == BaseKind::finite_field) {
      Integer q = S.q, count = (q * q * q * q - q * q) / 4;
      if (count <= 0) throw std::logic_error("resolve_two_extension: no cyclic quartic extension");
      std::string witness = "F_{q^4} / F_q is cyclic of degree 4 (" + count.get_str() + " irreducible quartics)";
      if (prime_of(S.q) == S.q) {
        auto f = irreducible_quartic(S.q);
        if (!f) throw std::logic_error("resolve_two_extension: no irreducible quartic found");
        witness += ", e.g. " + f->to_string();
      }
      out.audit.push_back(witness);
      out.audit.push_back("its character chi restricts to the quadratic character of g, and 2 (chi, Delta)_4 = (g, Delta)_2 != 0");
      order_four = true;
    } else {
      throw std::invalid_argument("resolve_two_extension: G -> Gm(S[i])/2 is not injective and no quartic character is known");
    }
  }

  // Generators e_u, then l_g; relations 2 e_u = 0 and 2 l_g = e_g.
  size_t n = nu + ng;
  IntMatrix rel(n, n);
  for (size_t j = 0; j < nu; ++j) rel(j, j) = 2;
  for (size_t k = 0; k < ng; ++k) {
    rel(nu + k, nu + k) = 2;
    if (order_four)
      for (size_t j = 0; j < nu; ++j)
        if (S.g_basis[k][j]) rel(j, nu + k) = -1;
  }
  LatticeQuotient Q = LatticeQuotient::from_generators(IntMatrix::identity(n), rel);
  out.group = FgAbelianGroup::from_cyclic_orders(Q.orders());
  auto element_order = [&](size_t index) {
    IntVector e(n, Integer(0));
    e[index] = 1;
    for (long k = 1; k <= 8; ++k) {
      IntVector ke = e;
      for (auto& x : ke) x *= k;
      bool zero = true;
      for (auto& c : Q.classify(ke)) zero = zero && c == 0;
      if (zero) return k;
    }
    throw std::logic_error("resolve_two_extension: element order above 8");
  };
  for (size_t j = 0; j < nu; ++j) out.generators.push_back({"(" + S.units_mod_2_basis[j] + ",Delta)", element_order(j)});
  for (size_t k = 0; k < ng; ++k) out.generators.push_back({"lift of (" + S.g_labels[k] + ",Delta)", element_order(nu + k)});
  out.audit.push_back("2Br-bar'(M_" + S.name + ") = " + out.group.to_string());
  return out;
}

FgAbelianGroup two_extension_closed_form(const std::vector<long>& primes) {
  std::vector<Integer> orders{Integer(2)};  // -1
  for (long p : primes) orders.push_back(Integer(p % 4 == 3 ? 2 : 4));
  return FgAbelianGroup::from_cyclic_orders(orders);
}

PartResult three_part(const BaseProfile& S) {
  PartResult out;
  switch (S.kind) {
    case BaseKind::finite_field: {
      auto s3 = FiniteGroup::symmetric3();
      FgAbelianGroup previous;
      for (int k = 1; k <= 2; ++k) {
        long m = k == 1 ? 3 : 9;
        FgAbelianGroup inv = group_cohomology(GroupModule::by_name(s3, "rhotilde/" + std::to_string(m)), 0);
        out.audit.push_back("(rhotilde/" + std::to_string(m) + ")^S3 = " + inv.to_string());
        if (k == 2 && !(inv == previous)) throw std::logic_error("three_part: invariants ladder did not stabilize");
        previous = inv;
      }
      out.group = GroupDescription(previous);
      out.beyond_base = out.group;
      out.audit.push_back("3Br(F_q) = 0, so 3Br(M_F_q) = (rhotilde (x) Q_3/Z_3)^S3 = " + previous.to_string());
      return out;
    }
    case BaseKind::localized_integers: {
      if (!S.six_invertible()) throw std::invalid_argument("three_part: 6 must be invertible on " + S.name);
      std::set<long> P(S.primes.begin(), S.primes.end());
      std::vector<QPoly> fields = cubic_fields_ramified_in(P);  // rejects P beyond {2, 3}
      // (3^r - 1)/2 cubic fields <-> H^1 = (Z/3)^r
      int r = 0;
      while ((ipow(3, r) - 1) / 2 < static_cast<long>(fields.size())) ++r;
      if ((ipow(3, r) - 1) / 2 != static_cast<long>(fields.size()))
        throw std::logic_error("three_part: field count is not (3^r - 1)/2");
      std::vector<Integer> orders(r, Integer(3));
      for (auto& f : fields) out.audit.push_back("cyclic cubic field " + f.to_string() + ", unramified outside P");
      GroupDescription base = S.brauer.primary_part(3);
      out.beyond_base = GroupDescription(FgAbelianGroup::from_cyclic_orders(orders));
      out.group = base + out.beyond_base;
      out.audit.push_back("3Br(" + S.name + ") = " + base.to_string() + ", H^1(S, C_3) = (Z/3)^" + std::to_string(r));
      return out;
    }
    case BaseKind::algebraically_closed:
      out.audit.push_back("Br = 0 by Tsen and H^1(S, C_3) = 0");
      return out;
    default:
      throw std::invalid_argument("three_part: unsupported profile " + S.name);
  }
}

PartResult p_part_large(const BaseProfile& S, long p, bool dense, bool has_section) {
  if (p < 5 || !is_prime(p)) throw std::invalid_argument("p_part_large: p must be a prime >= 5");
  if (!dense || !has_section) throw std::invalid_argument("p_part_large: density and section hypotheses not asserted");
  PartResult out;
  if (S.kind == BaseKind::finite_field) {
    auto s3 = FiniteGroup::symmetric3();
    FgAbelianGroup inv = group_cohomology(GroupModule::by_name(s3, "rhotilde/" + std::to_string(p)), 0);
    if (!inv.is_trivial()) throw std::logic_error("p_part_large: (rhotilde/p)^S3 is nonzero");
    out.audit.push_back("(rhotilde/" + std::to_string(p) + ")^S3 = 0");
  }
  out.group = S.brauer.primary_part(p);
  out.audit.push_back(std::to_string(p) + "Br(M_S) = " + std::to_string(p) + "Br(S) = " + out.group.to_string());
  return out;
}

}  // namespace ellbr
