#include "ellbr/lmfdb/record.hpp"

#include <regex>

namespace ellbr {

const char* to_string(CurveSource s) {
  switch (s) {
    case CurveSource::network: return "network";
    case CurveSource::cache: return "cache";
    default: return "fixture";
  }
}

RationalCurve CurveRecord::curve() const {
  return RationalCurve(Rational(ainvs[0]), Rational(ainvs[1]), Rational(ainvs[2]), Rational(ainvs[3]), Rational(ainvs[4]));
}

nlohmann::json CurveRecord::to_json() const {
  nlohmann::json a = nlohmann::json::array();
  for (auto& x : ainvs) {
    if (x.fits_slong_p())
      a.push_back(x.get_si());
    else
      a.push_back(x.get_str());
  }
  nlohmann::json j{{"label", label}, {"ainvs", a}, {"disc", discriminant.fits_slong_p() ? nlohmann::json(discriminant.get_si()) : nlohmann::json(discriminant.get_str())}};
  if (conductor) j["conductor"] = conductor->fits_slong_p() ? nlohmann::json(conductor->get_si()) : nlohmann::json(conductor->get_str());
  return j;
}

bool CurveRecord::same_data(const CurveRecord& o) const {
  return label == o.label && ainvs == o.ainvs && discriminant == o.discriminant && conductor == o.conductor;
}

bool valid_curve_label(const std::string& label) {
  static const std::regex cremona("^[1-9][0-9]*[a-z]+[0-9]+$"), lmfdb("^[1-9][0-9]*\\.[a-z]+[0-9]+$");
  return std::regex_match(label, cremona) || std::regex_match(label, lmfdb);
}

namespace {

Integer json_integer(const nlohmann::json& v, const std::string& what) {
  if (v.is_number_integer()) return v.is_number_unsigned() ? Integer(std::to_string(v.get<unsigned long>())) : Integer(v.get<long>());
  if (v.is_string()) {
    static const std::regex integer("^-?[0-9]+$");
    std::string s = v.get<std::string>();
    if (std::regex_match(s, integer)) return Integer(s);
  }
  throw DataIntegrityError(what + " is not an integer: " + v.dump());
}

}  // namespace

CurveRecord parse_curve_record(const nlohmann::json& j_in, CurveSource source, const std::string& expected_label) {
  const nlohmann::json* j = &j_in;
  if (j->is_object() && j->contains("data")) {
    const auto& data = (*j)["data"];
    if (!data.is_array() || data.size() != 1) throw DataIntegrityError("expected exactly one curve record, got " + std::to_string(data.is_array() ? data.size() : 0));
    j = &data[0];
  }
  if (!j->is_object()) throw DataIntegrityError("curve record is not an object");
  CurveRecord r;
  r.source = source;
  if (j->contains("label") && (*j)["label"].is_string())
    r.label = (*j)["label"];
  else if (j->contains("Clabel") && (*j)["Clabel"].is_string())
    r.label = (*j)["Clabel"];
  else
    throw DataIntegrityError("curve record has no label");
  if (!expected_label.empty() && r.label != expected_label) {
    bool matches_lmfdb = j->contains("lmfdb_label") && (*j)["lmfdb_label"] == expected_label;
    if (!matches_lmfdb) throw DataIntegrityError("asked for " + expected_label + " but received " + r.label);
  }
  if (!j->contains("ainvs") || !(*j)["ainvs"].is_array() || (*j)["ainvs"].size() != 5)
    throw DataIntegrityError(r.label + ": ainvs must be a list of five integers");
  for (size_t i = 0; i < 5; ++i) r.ainvs[i] = json_integer((*j)["ainvs"][i], r.label + ": ainvs entry");
  Rational computed = r.curve().discriminant();
  if (computed == 0) throw DataIntegrityError(r.label + ": singular Weierstrass equation");
  r.discriminant = computed.get_num();
  std::optional<Integer> stored;
  if (j->contains("disc")) stored = json_integer((*j)["disc"], r.label + ": disc");
  else if (j->contains("signD") && j->contains("absD"))
    stored = json_integer((*j)["signD"], r.label + ": signD") * json_integer((*j)["absD"], r.label + ": absD");
  if (stored && *stored != r.discriminant)
    throw DataIntegrityError(r.label + ": stored discriminant " + stored->get_str() + " but ainvs give " + r.discriminant.get_str());
  if (j->contains("conductor")) r.conductor = json_integer((*j)["conductor"], r.label + ": conductor");
  return r;
}

}  // namespace ellbr
