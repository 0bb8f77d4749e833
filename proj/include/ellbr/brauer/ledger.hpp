#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ellbr/brauer/profile.hpp"
#include "json.hpp"

namespace ellbr {

enum class DifferentialStatus { zero, iso, unknown };
const char* to_string(DifferentialStatus s);

struct LedgerSummand {
  std::string label;
  std::optional<GroupDescription> group;  // empty: not computed (only allowed off the range of interest)
  bool from_base = false;                 // splits off via the structure map, e.g. Br'(S)
};

// d_r : E_r^{p,q} -> E_r^{p+r,q-r+1}, between one summand of each entry.
struct Differential {
  int page, p, q;
  std::string source, target;
  DifferentialStatus status = DifferentialStatus::unknown;
  std::string rule;
};

struct OrderBounds {
  std::optional<Integer> lower, upper;  // upper: unknown differentials taken to be zero
};

class SpectralLedger {
 public:
  static constexpr int kMaxP = 4, kMaxQ = 2, kInfinity = 99;

  SpectralLedger(std::string title) : title_(std::move(title)) {}

  void set_entry(int p, int q, std::vector<LedgerSummand> summands);
  void add_differential(Differential d);
  // Resolve an unknown differential; the rule is recorded with it.
  void resolve(int page, int p, int q, DifferentialStatus status, const std::string& rule);

  const std::string& title() const { return title_; }
  const std::vector<Differential>& differentials() const { return differentials_; }
  // Summands of E_r^{p,q}: those not yet consumed by an isomorphism on an earlier page.
  std::vector<LedgerSummand> entry(int p, int q, int page = kInfinity) const;
  std::optional<Integer> entry_order(int p, int q, int page = kInfinity, bool exclude_base = false) const;
  std::optional<Integer> diagonal_order(int degree, int page = kInfinity, bool exclude_base = false) const;
  OrderBounds diagonal_bounds(int degree, bool exclude_base = false) const;
  // Unknown differentials with source or target on the given total degree.
  std::vector<const Differential*> unknown_touching(int degree) const;

  // With the abutment of total degree `degree` known: if E_infinity already has that order, the
  // unknown differentials touching it vanish; if it is exactly twice too big and a single unknown
  // Z/2 -> Z/2 remains, that one is an isomorphism. Returns whether anything was resolved.
  bool force_from_abutment(int degree, const Integer& abutment, bool exclude_base, const std::string& rule);

  // Structural checks: no summand is both hit and hitting on a page, isomorphisms join
  // isomorphic groups, pages only use surviving summands, E_infinity order divides E_2 order.
  void validate() const;

  std::vector<std::string> flags;
  nlohmann::json to_json() const;

 private:
  const LedgerSummand& find(int p, int q, const std::string& label) const;
  std::string title_;
  std::map<std::pair<int, int>, std::vector<LedgerSummand>> entries_;
  std::vector<Differential> differentials_;
};

enum class Figure { bcn_descent, bcn_leray, m_two_local, c4_comparison };
const char* to_string(Figure f);
Figure figure_by_name(const std::string& name);

// The low-degree E_2 page for the figure over S, with every differential in range resolved by
// the stated rules where their hypotheses hold and left unknown otherwise. n is the order of
// the cyclic group for the BC_n figures.
SpectralLedger descent_ledger(const BaseProfile& S, Figure figure, long n = 2);

}  // namespace ellbr
