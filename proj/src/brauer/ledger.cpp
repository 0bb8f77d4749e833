#include "ellbr/brauer/ledger.hpp"

#include <set>
#include <stdexcept>

namespace ellbr {

const char* to_string(DifferentialStatus s) {
  switch (s) {
    case DifferentialStatus::zero: return "zero";
    case DifferentialStatus::iso: return "iso";
    default: return "unknown";
  }
}

const char* to_string(Figure f) {
  switch (f) {
    case Figure::bcn_descent: return "BCn-descent";
    case Figure::bcn_leray: return "BCn-Leray";
    case Figure::m_two_local: return "M-two-local";
    default: return "C4-comparison";
  }
}

Figure figure_by_name(const std::string& name) {
  for (Figure f : {Figure::bcn_descent, Figure::bcn_leray, Figure::m_two_local, Figure::c4_comparison})
    if (name == to_string(f)) return f;
  throw std::invalid_argument("unknown figure '" + name + "'");
}

namespace {

std::optional<Integer> order_of(const std::optional<GroupDescription>& g) {
  if (!g) return std::nullopt;
  return g->order();
}

bool is_z2(const std::optional<GroupDescription>& g) {
  return g && *g == GroupDescription(FgAbelianGroup::cyclic(2));
}

std::string where(int p, int q, const std::string& label) {
  return "(" + std::to_string(p) + "," + std::to_string(q) + ")" + (label == "*" ? "" : " " + label);
}

}  // namespace

void SpectralLedger::set_entry(int p, int q, std::vector<LedgerSummand> summands) {
  if (p < 0 || q < 0 || p > kMaxP || q > kMaxQ) throw std::invalid_argument("SpectralLedger: bidegree out of range");
  entries_[{p, q}] = std::move(summands);
}

const LedgerSummand& SpectralLedger::find(int p, int q, const std::string& label) const {
  auto it = entries_.find({p, q});
  if (it != entries_.end())
    for (auto& s : it->second)
      if (s.label == label) return s;
  throw std::invalid_argument("SpectralLedger: no summand " + where(p, q, label));
}

void SpectralLedger::add_differential(Differential d) {
  if (d.page < 2) throw std::invalid_argument("SpectralLedger: differentials start on page 2");
  int tp = d.p + d.page, tq = d.q - d.page + 1;
  if (tq < 0 || tp > kMaxP) throw std::invalid_argument("SpectralLedger: differential leaves the ledger");
  if (d.source != "*") find(d.p, d.q, d.source);
  if (d.target != "*") find(tp, tq, d.target);
  if (d.status == DifferentialStatus::iso && (d.source == "*" || d.target == "*"))
    throw std::invalid_argument("SpectralLedger: isomorphisms must name their summands");
  differentials_.push_back(std::move(d));
}

void SpectralLedger::resolve(int page, int p, int q, DifferentialStatus status, const std::string& rule) {
  for (auto& d : differentials_)
    if (d.page == page && d.p == p && d.q == q && d.status == DifferentialStatus::unknown) {
      if (status == DifferentialStatus::iso && (d.source == "*" || d.target == "*"))
        throw std::invalid_argument("SpectralLedger: isomorphisms must name their summands");
      d.status = status;
      d.rule = rule;
    }
}

std::vector<LedgerSummand> SpectralLedger::entry(int p, int q, int page) const {
  std::vector<LedgerSummand> out;
  auto it = entries_.find({p, q});
  if (it == entries_.end()) return out;
  for (auto& s : it->second) {
    bool consumed = false;
    for (auto& d : differentials_) {
      if (d.page >= page || d.status != DifferentialStatus::iso) continue;
      if ((d.p == p && d.q == q && d.source == s.label) ||
          (d.p + d.page == p && d.q - d.page + 1 == q && d.target == s.label))
        consumed = true;
    }
    if (!consumed) out.push_back(s);
  }
  return out;
}

std::optional<Integer> SpectralLedger::entry_order(int p, int q, int page, bool exclude_base) const {
  Integer total = 1;
  for (auto& s : entry(p, q, page)) {
    if (exclude_base && s.from_base) continue;
    auto o = order_of(s.group);
    if (!o) return std::nullopt;
    total *= *o;
  }
  return total;
}

std::optional<Integer> SpectralLedger::diagonal_order(int degree, int page, bool exclude_base) const {
  Integer total = 1;
  for (int p = 0; p <= std::min(degree, kMaxP); ++p) {
    int q = degree - p;
    if (q > kMaxQ) continue;
    auto o = entry_order(p, q, page, exclude_base);
    if (!o) return std::nullopt;
    total *= *o;
  }
  return total;
}

std::vector<const Differential*> SpectralLedger::unknown_touching(int degree) const {
  std::vector<const Differential*> out;
  for (auto& d : differentials_)
    if (d.status == DifferentialStatus::unknown && (d.p + d.q == degree || d.p + d.q + 1 == degree)) out.push_back(&d);
  return out;
}

namespace {

std::optional<Integer> side_order(const SpectralLedger& L, int p, int q, const std::string& label, int page, bool exclude_base) {
  if (label == "*") return L.entry_order(p, q, page, exclude_base);
  for (auto& s : L.entry(p, q, page))
    if (s.label == label) return exclude_base && s.from_base ? Integer(1) : order_of(s.group);
  return Integer(1);
}

}  // namespace

OrderBounds SpectralLedger::diagonal_bounds(int degree, bool exclude_base) const {
  OrderBounds b;
  b.upper = diagonal_order(degree, kInfinity, exclude_base);
  if (!b.upper) return b;
  Integer lower = *b.upper;
  for (auto* d : unknown_touching(degree)) {
    auto s = side_order(*this, d->p, d->q, d->source, d->page, exclude_base);
    auto t = side_order(*this, d->p + d->page, d->q - d->page + 1, d->target, d->page, exclude_base);
    if (!s || !t) return b;
    Integer m = std::min(*s, *t);
    if (lower % m != 0) return b;
    lower /= m;
  }
  b.lower = lower;
  return b;
}

bool SpectralLedger::force_from_abutment(int degree, const Integer& abutment, bool exclude_base, const std::string& rule) {
  auto unknown = unknown_touching(degree);
  if (unknown.empty()) return false;
  auto upper = diagonal_order(degree, kInfinity, exclude_base);
  if (!upper) return false;
  if (*upper == abutment) {
    for (auto* d : unknown) const_cast<Differential*>(d)->status = DifferentialStatus::zero;
    for (auto* d : unknown) const_cast<Differential*>(d)->rule = rule + ": E_2 already has the order of the abutment";
    return true;
  }
  if (*upper == 2 * abutment && unknown.size() == 1 && unknown[0]->source != "*" && unknown[0]->target != "*") {
    const Differential& d = *unknown[0];
    if (is_z2(find(d.p, d.q, d.source).group) && is_z2(find(d.p + d.page, d.q - d.page + 1, d.target).group)) {
      auto* m = const_cast<Differential*>(unknown[0]);
      m->status = DifferentialStatus::iso;
      m->rule = rule + ": the only way to reach order " + abutment.get_str() + " is this Z/2 -> Z/2 being an isomorphism";
      return true;
    }
  }
  return false;
}

void SpectralLedger::validate() const {
  std::set<int> pages;
  for (auto& d : differentials_) pages.insert(d.page);
  for (int r : pages) {
    std::set<std::string> hit, hitting;
    for (auto& d : differentials_) {
      if (d.page != r || d.status == DifferentialStatus::zero) continue;
      int tp = d.p + r, tq = d.q - r + 1;
      auto alive = [&](int p, int q, const std::string& label) {
        if (label == "*") return true;
        for (auto& s : entry(p, q, r))
          if (s.label == label) return true;
        return false;
      };
      if (!alive(d.p, d.q, d.source) || !alive(tp, tq, d.target))
        throw std::logic_error("ledger " + title_ + ": d_" + std::to_string(r) + " uses a summand gone by E_" + std::to_string(r));
      if (d.status == DifferentialStatus::iso && !(find(d.p, d.q, d.source).group == find(tp, tq, d.target).group))
        throw std::logic_error("ledger " + title_ + ": isomorphism between different groups at " + where(d.p, d.q, d.source));
      hitting.insert(where(d.p, d.q, d.source));
      hit.insert(where(tp, tq, d.target));
    }
    for (auto& h : hit)
      if (hitting.count(h)) throw std::logic_error("ledger " + title_ + ": d o d != 0 at " + h);
  }
  for (int degree = 0; degree <= kMaxP + kMaxQ; ++degree)
    for (bool exclude : {false, true}) {
      auto e2 = diagonal_order(degree, 2, exclude), einf = diagonal_order(degree, kInfinity, exclude);
      if (e2 && einf && *e2 % *einf != 0) throw std::logic_error("ledger " + title_ + ": E_infinity order does not divide E_2 order");
    }
}

nlohmann::json SpectralLedger::to_json() const {
  using nlohmann::json;
  auto summands = [](const std::vector<LedgerSummand>& v) {
    json a = json::array();
    for (auto& s : v) a.push_back({{"label", s.label}, {"group", s.group ? s.group->to_string() : "?"}});
    return a;
  };
  json j;
  j["title"] = title_;
  j["entries"] = json::array();
  for (auto& [pq, v] : entries_)
    j["entries"].push_back({{"p", pq.first}, {"q", pq.second}, {"E2", summands(v)}, {"Einf", summands(entry(pq.first, pq.second))}});
  j["differentials"] = json::array();
  for (auto& d : differentials_)
    j["differentials"].push_back({{"page", d.page},
                                  {"source", where(d.p, d.q, d.source)},
                                  {"target", where(d.p + d.page, d.q - d.page + 1, d.target)},
                                  {"status", to_string(d.status)},
                                  {"rule", d.rule}});
  j["diagonal"] = json::object();
  for (int degree = 0; degree <= 2; ++degree) {
    auto e2 = diagonal_order(degree, 2, true), einf = diagonal_order(degree, kInfinity, true);
    j["diagonal"][std::to_string(degree)] = {{"E2", e2 ? e2->get_str() : "infinite"}, {"Einf", einf ? einf->get_str() : "infinite"}};
  }
  j["flags"] = flags;
  return j;
}

namespace {

std::optional<GroupDescription> fg(const std::optional<FgAbelianGroup>& g) {
  if (!g) return std::nullopt;
  return GroupDescription(*g);
}
GroupDescription fg(const FgAbelianGroup& g) { return GroupDescription(g); }

Integer order_or_throw(const FgAbelianGroup& g, const char* what) {
  if (!g.is_finite()) throw std::invalid_argument(std::string("descent_ledger: ") + what + " is infinite");
  return g.order();
}

const char* kSplitLeft = "the composite S -> BC_n -> S is the identity, so the left column splits off";
const char* kPicOnto = "Pic(M_S) -> E_2^{0,1} is onto, since -1 in mu_2 is realized by lambda^6";
const char* kBaseSplits = "2Br'(S) splits off Br'(M_S)";
const char* kGeometricPoint = "pulled back to a geometric point G vanishes while mu_2 stays Z/2";
const char* kEdgeSplit = "edge maps from the bottom row are split injective (pi^* c^* = id)";
const char* kRestriction = "Gm(S)/4 in Br'(BC_4) restricts onto Gm(S)/2, so these are permanent cycles";
const char* kTargetGone = "its target is already zero on E_3";

SpectralLedger bcn_descent(const BaseProfile& S, long n) {
  std::string sn = std::to_string(n);
  SpectralLedger L("BC_" + sn + " descent over " + S.name);
  L.set_entry(0, 0, {{"Gm(S)", fg(S.units), false}});
  L.set_entry(1, 0, {{"mu_" + sn + "(S)", fg(S.mu(n)), false}});
  L.set_entry(2, 0, {{"Gm(S)/" + sn, fg(S.units_mod(n)), false}});
  L.set_entry(3, 0, {{"mu_" + sn + "(S)", fg(S.mu(n)), false}});
  L.set_entry(0, 1, {{"Pic(S)", fg(S.picard), false}});
  L.set_entry(1, 1, {{"Pic(S)[" + sn + "]", fg(S.picard_torsion(n)), false}});
  L.set_entry(2, 1, {{"Pic(S)/" + sn, fg(S.picard_mod(n)), false}});
  L.set_entry(0, 2, {{"Br'(S)", S.brauer, true}});
  L.add_differential({2, 0, 1, "*", "*", DifferentialStatus::zero, kSplitLeft});
  L.add_differential({2, 0, 2, "*", "*", DifferentialStatus::zero, kSplitLeft});
  L.add_differential({3, 0, 2, "*", "*", DifferentialStatus::zero, kSplitLeft});
  L.add_differential({2, 1, 1, "Pic(S)[" + sn + "]", "mu_" + sn + "(S)", DifferentialStatus::unknown, ""});
  // Leray: Br'(BC_n) = Br'(S) + H^1(S, mu_n), |H^1| = |Gm/n| |Pic[n]|.
  Integer h1 = order_or_throw(S.units_mod(n), "Gm(S)/n") * order_or_throw(S.picard_torsion(n), "Pic(S)[n]");
  L.force_from_abutment(2, h1, true, "abutment Br'(S) + H^1(S, mu_n) from the Leray sequence");
  return L;
}

SpectralLedger bcn_leray(const BaseProfile& S, long n) {
  std::string sn = std::to_string(n);
  SpectralLedger L("BC_" + sn + " Leray over " + S.name);
  L.set_entry(0, 0, {{"Gm(S)", fg(S.units), false}});
  L.set_entry(1, 0, {{"Pic(S)", fg(S.picard), false}});
  L.set_entry(2, 0, {{"H^2(S,Gm)", S.brauer, true}});
  L.set_entry(3, 0, {{"H^3(S,Gm)", std::nullopt, true}});
  L.set_entry(0, 1, {{"mu_" + sn + "(S)", fg(S.mu(n)), false}});
  L.set_entry(1, 1, {{"H^1(S,mu_" + sn + ")", fg(S.h1_mu(n)), false}});
  L.set_entry(0, 2, {{"0", GroupDescription(), false}});
  L.add_differential({2, 0, 1, "*", "*", DifferentialStatus::zero, kEdgeSplit});
  L.add_differential({2, 1, 1, "*", "*", DifferentialStatus::zero, kEdgeSplit});
  L.flags.push_back("degenerate and split: Br'(BC_" + sn + ") = Br'(S) + H^1(S, mu_" + sn + ")");
  return L;
}

void two_local_entries(SpectralLedger& L, const BaseProfile& S, bool gaussian) {
  L.set_entry(0, 0, {{"Gm(S)", fg(S.units), false}});
  L.set_entry(1, 0, {{"mu_2(S)", fg(S.mu(2)), false}});
  L.set_entry(2, 0, {{"Gm(S)/2", fg(S.units_mod(2)), false}});
  L.set_entry(3, 0, {{"mu_2(S)", fg(S.mu(2)), false}});
  L.set_entry(0, 1, {{"Pic(S)", fg(gaussian ? S.picard : S.picard.primary_part(2)), false}, {"mu_2(S)", fg(S.mu(2)), false}});
  L.set_entry(1, 1, {{"Pic(S)[2]", fg(S.picard_torsion(2)), false}, {"mu_2(S)", fg(S.mu(2)), false}});
  L.set_entry(2, 1, {{"Pic(S)/2", fg(S.picard_mod(2)), false}, {"mu_2(S)", fg(S.mu(2)), false}});
  if (gaussian)
    L.set_entry(0, 2, {{"Br'(S)", S.brauer, true}, {"Pic(S)[2]", fg(S.picard_torsion(2)), false}, {"Gm(S)/2", fg(S.units_mod(2)), false}});
  else
    L.set_entry(0, 2, {{"2Br'(S)", S.brauer.primary_part(2), true},
                       {"Pic(S)[2]", fg(S.picard_torsion(2)), false},
                       {"G", fg(S.g_group()), false}});
}

// d_2^{0,2} or d_3^{0,2} out of the Pic(S)[2] summand: zero only when the source is.
void pic_torsion_differential(SpectralLedger& L, const BaseProfile& S, int page) {
  bool trivial = S.picard_torsion(2).is_trivial();
  L.add_differential({page, 0, 2, "Pic(S)[2]", "*", trivial ? DifferentialStatus::zero : DifferentialStatus::unknown,
                      trivial ? "source is 0" : ""});
}

SpectralLedger c4_comparison(const BaseProfile& S) {
  if (!S.contains_i()) throw std::invalid_argument("descent_ledger: the C4 comparison needs i in S");
  SpectralLedger L("BC_2 -> BC_4 descent over " + S.name);
  two_local_entries(L, S, true);
  L.add_differential({2, 0, 1, "*", "*", DifferentialStatus::unknown, ""});
  if (S.picard.is_finite())
    L.force_from_abutment(1, S.picard.order() * S.mu(4).order(), false, "degree-1 count against Pic(BC_4) = Pic(S) . mu_4(S)");
  L.add_differential({2, 0, 2, "Br'(S)", "*", DifferentialStatus::zero, "Br'(S) splits off"});
  L.add_differential({2, 0, 2, "Gm(S)/2", "*", DifferentialStatus::zero, kRestriction});
  pic_torsion_differential(L, S, 2);
  L.add_differential({2, 1, 1, "mu_2(S)", "mu_2(S)", DifferentialStatus::unknown, ""});
  if (!S.picard_torsion(2).is_trivial()) L.add_differential({2, 1, 1, "Pic(S)[2]", "mu_2(S)", DifferentialStatus::unknown, ""});
  Integer abut = order_or_throw(S.picard_torsion(4), "Pic(S)[4]") * order_or_throw(S.units_mod(4), "Gm(S)/4");
  L.force_from_abutment(2, abut, true, "abutment Br'(BC_4) = Br'(S) + Pic(S)[4] + Gm(S)/4");
  bool iso = L.unknown_touching(2).empty();
  L.add_differential({3, 0, 2, "Br'(S)", "*", DifferentialStatus::zero, "Br'(S) splits off"});
  L.add_differential({3, 0, 2, "Gm(S)/2", "*", iso ? DifferentialStatus::zero : DifferentialStatus::unknown, iso ? kTargetGone : ""});
  pic_torsion_differential(L, S, 3);
  return L;
}

SpectralLedger m_two_local(const BaseProfile& S) {
  SpectralLedger L("2-local descent for M(2) -> M over " + S.name);
  two_local_entries(L, S, false);
  bool pic0 = S.picard.is_trivial();
  L.add_differential({2, 0, 1, "*", "*", DifferentialStatus::zero, kPicOnto});
  L.add_differential({2, 0, 2, "2Br'(S)", "*", DifferentialStatus::zero, kBaseSplits});
  L.add_differential({2, 0, 2, "G", "*", pic0 ? DifferentialStatus::zero : DifferentialStatus::unknown, pic0 ? kGeometricPoint : ""});
  pic_torsion_differential(L, S, 2);

  // d_2^{1,1} by naturality along Z[1/2] -> S from the comparison over Z[1/2, i].
  SpectralLedger gauss = c4_comparison(gaussian_profile());
  bool forced = false;
  for (auto& d : gauss.differentials())
    if (d.page == 2 && d.p == 1 && d.q == 1 && d.source == "mu_2(S)") forced = d.status == DifferentialStatus::iso;
  if (!forced) throw std::logic_error("descent_ledger: the comparison over Z[1/2,i] did not force d_2^{1,1}");
  bool iso = pic0 && !S.mu(2).is_trivial();
  L.add_differential({2, 1, 1, "mu_2(S)", "mu_2(S)", iso ? DifferentialStatus::iso : DifferentialStatus::unknown,
                      iso ? "isomorphism over Z[1/2,i] (order-16 count), hence over Z[1/2] and S by naturality" : ""});
  if (!S.picard_torsion(2).is_trivial()) L.add_differential({2, 1, 1, "Pic(S)[2]", "mu_2(S)", DifferentialStatus::unknown, ""});

  L.add_differential({3, 0, 2, "2Br'(S)", "*", DifferentialStatus::zero, kBaseSplits});
  L.add_differential({3, 0, 2, "G", "*", iso ? DifferentialStatus::zero : DifferentialStatus::unknown, iso ? kTargetGone : ""});
  pic_torsion_differential(L, S, 3);
  if (!S.g_basis.empty()) L.flags.push_back("extension 0 -> Gm(S)/2 -> 2Br-bar'(M_S) -> G -> 0 left to resolve_two_extension");
  return L;
}

}  // namespace

SpectralLedger descent_ledger(const BaseProfile& S, Figure figure, long n) {
  if (n < 2) throw std::invalid_argument("descent_ledger: n must be at least 2");
  SpectralLedger L = [&] {
    switch (figure) {
      case Figure::bcn_descent: return bcn_descent(S, n);
      case Figure::bcn_leray: return bcn_leray(S, n);
      case Figure::m_two_local: return m_two_local(S);
      default: return c4_comparison(S);
    }
  }();
  L.validate();
  return L;
}

}  // namespace ellbr
