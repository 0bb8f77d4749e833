#pragma once

#include <string>
#include <vector>

#include "ellbr/brauer/modular.hpp"
#include "ellbr/brauer/profile.hpp"
#include "ellbr/curves/weierstrass.hpp"
#include "json.hpp"

namespace ellbr {

// Values over F_l of each basis class at one local point.
struct WitnessRow {
  std::string name;
  ModVector values;
  std::vector<std::string> details;
};

struct ObstructionResult {
  long l = 2;
  std::vector<std::string> classes;
  std::vector<ModVector> surviving;  // nonzero combinations killed by every witness
  std::vector<std::string> surviving_labels() const;
};

ObstructionResult witness_obstruction_check(long l, const std::vector<std::string>& classes, const std::vector<WitnessRow>& witnesses);
std::string combination_label(const ModVector& v, const std::vector<std::string>& classes);

// Classes alpha = (-1,-1), beta = (-1,Delta), gamma = (2,Delta) at the Q_2-point of E.
WitnessRow two_adic_witness(const std::string& name, const RationalCurve& E);
const std::vector<std::string>& two_adic_classes();
// Classes sigma, theta at the Legendre curve with t = 2 + b pi over Z_3[zeta_3]. The sigma
// functional is normalized to 1 (section unit k = 1).
WitnessRow three_adic_witness(long b, int precision = 12);
const std::vector<std::string>& three_adic_classes();

struct ModuliBrauer {
  GroupDescription total, p2, p3;
  std::string p_large;
  std::vector<std::string> audit;
};

// Br(M_S) for F_q, Z[1/2], Z[1/6] and algebraically closed bases.
ModuliBrauer brauer_of_moduli(const BaseProfile& S);

struct NamedCurve {
  std::string label;
  RationalCurve curve;
};

enum class VerdictMode { integers, finite_field, algebraically_closed };

struct VerdictOptions {
  VerdictMode mode = VerdictMode::integers;
  long q = 0;
  std::vector<NamedCurve> two_adic;     // witness curves at 2
  std::vector<long> three_adic{0, 1};  // Legendre witnesses t = 2 + b pi at 3
};

// {result, parts: {p2, p3, pLarge}, witnesses, audit}
nlohmann::json final_verdict(const VerdictOptions& options);

}  // namespace ellbr
