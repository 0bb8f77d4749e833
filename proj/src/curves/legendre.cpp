#include "ellbr/curves/legendre.hpp"

namespace ellbr {

PointSymbols point_symbol_pair(const RationalCurve& curve) {
  Rational d = curve.discriminant();
  if (d == 0) throw std::invalid_argument("point_symbol_pair: singular curve");
  if (valuation(d, 2) != 0) throw std::invalid_argument("point_symbol_pair: discriminant " + d.get_str() + " is not a 2-adic unit");
  return {hilbert_two(-1, d), hilbert_two(2, d)};
}

}  // namespace ellbr
