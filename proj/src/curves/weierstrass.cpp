#include "ellbr/curves/weierstrass.hpp"

#include <sstream>
#include <vector>

namespace ellbr {

RationalCurve parse_ainvs(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '\t') s += c;
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw std::invalid_argument("ainvs must look like [a1,a2,a3,a4,a6]: " + text);
  std::vector<Rational> a;
  std::stringstream ss(s.substr(1, s.size() - 2));
  std::string item;
  while (std::getline(ss, item, ',')) a.push_back(parse_rational(item));
  if (a.size() != 5) throw std::invalid_argument("ainvs must have five entries: " + text);
  return RationalCurve(a[0], a[1], a[2], a[3], a[4]);
}

}  // namespace ellbr
