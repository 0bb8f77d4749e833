#include "ellbr/lmfdb/report.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "ellbr/brauer/assembly.hpp"
#include "ellbr/brauer/groups.hpp"
#include "ellbr/brauer/witness.hpp"
#include "ellbr/hilbert/cubic.hpp"
#include "ellbr/hilbert/quadratic.hpp"

namespace ellbr {

std::vector<std::string> witness_labels() { return {"11a3", "15a8", "53a1"}; }

bool Report::ok() const {
  return std::all_of(items.begin(), items.end(), [](const ReportItem& i) { return i.pass(); });
}

std::string Report::text() const {
  // Display width in code points, so the Greek letters line up.
  auto width = [](const std::string& s) {
    return static_cast<size_t>(std::count_if(s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
  };
  size_t w_item = 4, w_exp = 8, w_comp = 8;
  for (auto& i : items) {
    w_item = std::max(w_item, width(i.scope) + 2 + width(i.item));
    w_exp = std::max(w_exp, width(i.expected));
    w_comp = std::max(w_comp, width(i.computed));
  }
  auto pad = [&](const std::string& s, size_t w) {
    return s + std::string(w > width(s) ? w - width(s) : 0, ' ');
  };
  std::ostringstream out;
  out << pad("item", w_item) << "  " << pad("expected", w_exp) << "  " << pad("computed", w_comp) << "  status\n";
  for (auto& i : items)
    out << pad(i.scope + ": " + i.item, w_item) << "  " << pad(i.expected, w_exp) << "  " << pad(i.computed, w_comp) << "  "
        << (i.pass() ? "pass" : "FAIL") << "\n";
  size_t passed = std::count_if(items.begin(), items.end(), [](const ReportItem& i) { return i.pass(); });
  out << passed << "/" << items.size() << " passed\n";
  return out.str();
}

nlohmann::json Report::to_json() const {
  nlohmann::json j{{"scope", scope}, {"ok", ok()}, {"items", nlohmann::json::array()}};
  for (auto& i : items)
    j["items"].push_back({{"scope", i.scope}, {"item", i.item}, {"expected", i.expected}, {"computed", i.computed}, {"pass", i.pass()}});
  return j;
}

namespace {

std::string sign(int s) { return s == 1 ? "+1" : "-1"; }

std::string zeta_power(int e) { return e == 0 ? "1" : e == 1 ? "ζ" : "ζ^" + std::to_string(e); }

std::string join(const std::vector<std::string>& v) {
  if (v.empty()) return "none";
  std::string s;
  for (auto& x : v) s += (s.empty() ? "" : ", ") + x;
  return s;
}

void p2_items(Report& r, const FetchOptions& fetch) {
  const std::map<std::string, long> disc{{"11a3", -11}, {"15a8", -15}, {"53a1", -53}};
  const std::map<std::string, std::pair<int, int>> symbols{{"11a3", {-1, 1}}, {"15a8", {1, 1}}, {"53a1", {-1, -1}}};
  std::vector<NamedCurve> curves;
  for (auto& label : witness_labels()) {
    CurveRecord rec = fetch_curve(label, fetch);
    Rational d = rec.curve().discriminant();
    r.items.push_back({"p2", "discriminant of " + label, std::to_string(disc.at(label)), d.get_str()});
    auto [two, minus_one] = symbols.at(label);
    r.items.push_back({"p2", "(" + d.get_str() + ",2)_2", sign(two), sign(hilbert_two(d, 2))});
    r.items.push_back({"p2", "(" + d.get_str() + ",-1)_2", sign(minus_one), sign(hilbert_two(d, -1))});
    curves.push_back({label, rec.curve()});
  }
  std::vector<WitnessRow> rows;
  for (auto& c : curves) rows.push_back(two_adic_witness(c.label, c.curve));
  r.items.push_back({"p2", "unobstructed combinations of α, β, γ", "none",
                     join(witness_obstruction_check(2, two_adic_classes(), rows).surviving_labels())});
  VerdictOptions v;
  v.two_adic = curves;
  r.items.push_back({"p2", "brauer verdict Br(M)", "0", final_verdict(v)["result"].get<std::string>()});
}

void p3_items(Report& r) {
  WitnessRow w0 = three_adic_witness(0), w1 = three_adic_witness(1);
  r.items.push_back({"p3", "(ζ, t(t-1))_π at t = 2", "ζ", zeta_power(static_cast<int>(w0.values[1]))});
  r.items.push_back({"p3", "(ζ, t(t-1))_π at t = 2 + π", "1", zeta_power(static_cast<int>(w1.values[1]))});
  r.items.push_back({"p3", "unobstructed combinations of σ, θ", "none",
                     join(witness_obstruction_check(3, three_adic_classes(), {w0, w1}).surviving_labels())});
  r.items.push_back({"p3", "3Br(M_Z[1/2])", "0", brauer_of_moduli(localized_integers_profile({2})).p3.primary_part(3).to_string()});
}

void fq_items(Report& r, long q) {
  std::vector<long> qs = q ? std::vector<long>{q} : std::vector<long>{3, 5, 7, 9, 25};
  for (long x : qs) r.items.push_back({"fq", "Br(M_F_" + std::to_string(x) + ")", "Z/12", brauer_of_moduli(finite_field_profile(x)).total.to_string()});
}

void zp_items(Report& r) {
  r.items.push_back({"zp", "Br(Z)", "0", br_localized_integers({}).group.to_string()});
  for (long p : {2L, 3L, 5L})
    r.items.push_back({"zp", "Br(Z[1/" + std::to_string(p) + "])", "Z/2", br_localized_integers({p}).group.to_string()});
  LocalizedBrauer six = br_localized_integers({2, 3});
  r.items.push_back({"zp", "Br(Z[1/6])", "Z/2 + Q/Z", six.group.to_string()});
  r.items.push_back({"zp", "Br(Z[1/6])[12]", "Z/2 + Z/12", six.truncated.to_string()});
  r.items.push_back({"zp", "Br(M_Z[1/2])", "Z/2 + Z/2 + Z/4", brauer_of_moduli(localized_integers_profile({2})).total.to_string()});
  std::vector<long> odd{3, 5, 7, 11, 13};
  int match = 0;
  for (int mask = 0; mask < 32; ++mask) {
    std::vector<long> P{2};
    for (int i = 0; i < 5; ++i)
      if (mask >> i & 1) P.push_back(odd[i]);
    match += resolve_two_extension(localized_integers_profile(P)).group == two_extension_closed_form(P);
  }
  r.items.push_back({"zp", "closed form of 2Br-bar'(M_Z_P), P in {2,3,5,7,11,13}", "32/32", std::to_string(match) + "/32"});
}

}  // namespace

Report reproduce_report(const std::string& scope, const FetchOptions& fetch, long q) {
  static const std::vector<std::string> scopes{"all", "p2", "p3", "fq", "zp"};
  if (std::find(scopes.begin(), scopes.end(), scope) == scopes.end())
    throw std::invalid_argument("unknown scope '" + scope + "' (expected all, p2, p3, fq or zp)");
  Report r;
  r.scope = scope;
  bool all = scope == "all";
  if (all || scope == "p2") p2_items(r, fetch);
  if (all || scope == "p3") p3_items(r);
  if (all || scope == "fq") fq_items(r, q);
  if (all || scope == "zp") zp_items(r);
  return r;
}

}  // namespace ellbr
