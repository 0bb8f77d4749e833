#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>

#include "ellbr/curves/weierstrass.hpp"
#include "json.hpp"

namespace ellbr {

enum class CurveSource { network, cache, fixture };
const char* to_string(CurveSource s);

struct CurveRecord {
  std::string label;
  std::array<Integer, 5> ainvs;
  Integer discriminant;
  std::optional<Integer> conductor;
  CurveSource source = CurveSource::fixture;

  RationalCurve curve() const;
  nlohmann::json to_json() const;  // without the source
  bool same_data(const CurveRecord& other) const;
};

struct DataIntegrityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct OfflineError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Cremona ("11a3") or LMFDB ("11.a3") curve label.
bool valid_curve_label(const std::string& label);

// Accepts {label | Clabel, ainvs, disc | signD and absD, conductor}; ainvs must be five integers
// and the stored discriminant, when present, must match the one computed from them.
CurveRecord parse_curve_record(const nlohmann::json& j, CurveSource source, const std::string& expected_label = "");

}  // namespace ellbr
