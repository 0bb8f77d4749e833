#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "ellbr/brauer/assembly.hpp"
#include "ellbr/brauer/groups.hpp"
#include "ellbr/brauer/profile.hpp"
#include "ellbr/brauer/witness.hpp"
#include "ellbr/cohomology/cohomology.hpp"
#include "ellbr/cohomology/module.hpp"
#include "ellbr/hilbert/cubic.hpp"
#include "ellbr/hilbert/quadratic.hpp"
#include "ellbr/lmfdb/fetch.hpp"
#include "ellbr/lmfdb/report.hpp"

using namespace ellbr;
using nlohmann::json;

namespace {

struct Output {
  bool as_json = false;
  // Prints either the JSON document or the text lines; returns the exit code.
  int emit(const json& j, const std::string& text, bool ok = true) const {
    if (as_json)
      std::cout << j.dump(2) << "\n";
    else
      std::cout << text;
    return ok ? 0 : 1;
  }
};

std::vector<long> parse_primes(const std::string& list) {
  std::vector<long> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(std::stol(item));
  return out;
}

json witness_curve_json(const RationalCurve& E) {
  Rational d = E.discriminant();
  return {{"ainvs", E.to_string()}, {"discriminant", d.get_str()},
          {"hilbert_2", {{"(D,2)", hilbert_two(d, 2)}, {"(D,-1)", hilbert_two(d, -1)}}}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Brauer group computations for moduli of elliptic curves"};
  app.require_subcommand(1);
  Output out;
  bool offline = false;
  std::string cache_dir;
  app.add_flag("--json", out.as_json, "Print JSON instead of text");
  app.add_flag("--offline", offline, "Never touch the network");
  app.add_option("--cache-dir", cache_dir, "Curve cache directory (default $ELLBR_CACHE_DIR)");

  auto fetch_options = [&] {
    FetchOptions f = fetch_options_from_environment();
    f.offline = offline;
    if (!cache_dir.empty()) f.cache_dir = cache_dir;
    return f;
  };

  std::function<int()> run;

  auto* hilbert = app.add_subcommand("hilbert", "Quadratic Hilbert symbol (a,b)_v");
  std::string place, a_text, b_text;
  hilbert->add_option("--p", place, "Place: a prime or inf")->required();
  hilbert->add_option("a", a_text)->required();
  hilbert->add_option("b", b_text)->required();
  hilbert->callback([&] {
    run = [&] {
      Place v = Place::parse(place);
      Rational a = parse_rational(a_text), b = parse_rational(b_text);
      int s = hilbert_symbol(v, a, b);
      return out.emit({{"place", v.to_string()}, {"a", a.get_str()}, {"b", b.get_str()}, {"symbol", s}},
                      std::to_string(s) + "\n");
    };
  });

  auto* cubic = app.add_subcommand("cubic-symbol", "Cubic symbol (zeta, t(t-1)) at t = 2 + b pi over Q_3(zeta_3)");
  std::string cubic_b;
  int precision = 12;
  cubic->add_option("--b", cubic_b, "3-adic integer b (a rational with denominator prime to 3)")->required();
  cubic->add_option("--precision", precision, "pi-adic precision")->check(CLI::Range(4, 200));
  cubic->callback([&] {
    run = [&] {
      PAdic b = PAdic::from_rational(parse_rational(cubic_b), 3, precision);
      CubicSymbol s = cubic_symbol_legendre(b, precision);
      std::string sym = s.exponent() == 0 ? "1" : s.exponent() == 1 ? "zeta" : "zeta^2";
      return out.emit({{"b", cubic_b}, {"exponent", s.exponent()}, {"closed_form", s.closed_form},
                       {"artin_hasse", s.artin_hasse}, {"symbol", sym}},
                      sym + "\n");
    };
  });

  auto* curve = app.add_subcommand("curve", "Fetch a curve by label, or read [a1,a2,a3,a4,a6]");
  std::string curve_arg;
  curve->add_option("curve", curve_arg, "Cremona label or ainvs")->required();
  curve->callback([&] {
    run = [&] {
      json j;
      std::optional<RationalCurve> E;
      if (curve_arg.front() == '[') {
        E = parse_ainvs(curve_arg);
      } else {
        CurveRecord rec = fetch_curve(curve_arg, fetch_options());
        E = rec.curve();
        j = rec.to_json();
        j["source"] = to_string(rec.source);
      }
      j["witness"] = witness_curve_json(*E);
      WitnessRow row = two_adic_witness(curve_arg, *E);
      for (size_t i = 0; i < row.values.size(); ++i) j["witness"]["classes"][two_adic_classes()[i]] = row.values[i];
      std::ostringstream text;
      text << "ainvs " << E->to_string() << "\ndiscriminant " << E->discriminant().get_str() << "\n";
      if (j.contains("source")) text << "source " << j["source"].get<std::string>() << "\n";
      for (size_t i = 0; i < row.values.size(); ++i) text << two_adic_classes()[i] << " " << row.values[i] << "\n";
      return out.emit(j, text.str());
    };
  });

  auto* cohomology = app.add_subcommand("cohomology", "H^i(G, M) for a small finite group");
  std::string group_name = "S3", module_name;
  int degree = 0;
  cohomology->add_option("--group", group_name)->default_val("S3");
  cohomology->add_option("--module", module_name, "Z, Z/n, rho, rho/n, rhotilde, rhotilde/n")->required();
  cohomology->add_option("--degree", degree)->required()->check(CLI::Range(0, 12));
  cohomology->callback([&] {
    run = [&] {
      auto G = FiniteGroup::by_name(group_name);
      FgAbelianGroup H = group_cohomology(GroupModule::by_name(G, module_name), degree);
      return out.emit({{"group", group_name}, {"module", module_name}, {"degree", degree}, {"cohomology", H.to_string()}},
                      H.to_string() + "\n");
    };
  });

  auto* brauer = app.add_subcommand("brauer", "Brauer groups of the moduli stack and of its bases");
  brauer->require_subcommand(1);
  auto* fq = brauer->add_subcommand("fq", "Br(M) over a finite field");
  long q = 0;
  fq->add_option("--q", q, "Odd prime power")->required();
  fq->callback([&] {
    run = [&] {
      ModuliBrauer m = brauer_of_moduli(finite_field_profile(q));
      json j{{"q", q}, {"result", m.total.to_string()}, {"parts", {{"p2", m.p2.to_string()}, {"p3", m.p3.to_string()}, {"pLarge", m.p_large}}},
             {"audit", m.audit}};
      return out.emit(j, m.total.to_string() + "\n");
    };
  });

  auto* zp = brauer->add_subcommand("zp", "Br(Z_P) and, when 2 is in P, the 2-part of Br(M)");
  std::string primes_text;
  zp->add_option("--primes", primes_text, "Comma-separated primes, e.g. 2,3")->required();
  zp->callback([&] {
    run = [&] {
      std::vector<long> P = parse_primes(primes_text);
      LocalizedBrauer b = br_localized_integers(P);
      json j{{"primes", b.primes}, {"brauer", b.group.to_string()}, {"truncated_12", b.truncated.to_string()}};
      std::ostringstream text;
      text << "Br(Z_P) " << b.group.to_string() << "\nBr(Z_P)[12] " << b.truncated.to_string() << "\n";
      if (std::find(b.primes.begin(), b.primes.end(), 2) != b.primes.end()) {
        TwoExtension t = resolve_two_extension(localized_integers_profile(b.primes));
        j["moduli_two_part_beyond_base"] = t.group.to_string();
        j["closed_form"] = two_extension_closed_form(b.primes).to_string();
        j["audit"] = t.audit;
        text << "2Br(M) beyond Br(Z_P) " << t.group.to_string() << "\n";
        if (b.primes == std::vector<long>{2}) {
          std::string total = brauer_of_moduli(localized_integers_profile({2})).total.to_string();
          j["moduli"] = total;
          text << "Br(M) " << total << "\n";
        }
      }
      return out.emit(j, text.str());
    };
  });

  auto* verdict = brauer->add_subcommand("verdict", "Assemble Br(M) from the witness computations");
  std::vector<std::string> witnesses = witness_labels();
  std::string mode = "integers";
  long verdict_q = 0;
  verdict->add_option("--witness", witnesses, "Curves used as 2-adic witnesses")->delimiter(',');
  verdict->add_option("--mode", mode, "integers, fq or closed")->check(CLI::IsMember({"integers", "fq", "closed"}));
  verdict->add_option("--q", verdict_q, "Field size for --mode fq");
  verdict->callback([&] {
    run = [&] {
      VerdictOptions v;
      v.mode = mode == "fq" ? VerdictMode::finite_field : mode == "closed" ? VerdictMode::algebraically_closed : VerdictMode::integers;
      v.q = verdict_q;
      FetchOptions f = fetch_options();
      for (auto& w : witnesses) v.two_adic.push_back({w, fetch_curve(w, f).curve()});
      json j = final_verdict(v);
      return out.emit(j, "Br(M) = " + j["result"].get<std::string>() + "\n");
    };
  });

  auto* reproduce = app.add_subcommand("reproduce", "Recompute the published values and compare");
  std::string scope = "all";
  long reproduce_q = 0;
  reproduce->add_option("scope", scope, "all, p2, p3, fq or zp")->check(CLI::IsMember({"all", "p2", "p3", "fq", "zp"}));
  reproduce->add_option("--q", reproduce_q, "Restrict the fq scope to one field size");
  reproduce->callback([&] {
    run = [&] {
      Report r = reproduce_report(scope, fetch_options(), reproduce_q);
      return out.emit(r.to_json(), r.text(), r.ok());
    };
  });

  CLI11_PARSE(app, argc, argv);
  try {
    return run();
  } catch (const OfflineError& e) {
    std::cerr << "offline: " << e.what() << "\n";
  } catch (const DataIntegrityError& e) {
    std::cerr << "data integrity: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return 2;
}
