#include "ellbr/hilbert/invariants.hpp"

#include <stdexcept>

#include "ellbr/arith/integer.hpp"

namespace ellbr {

Place Place::prime(long p) {
  if (!is_prime(p)) throw std::invalid_argument("Place: " + std::to_string(p) + " is not prime");
  return Place(p);
}

Place Place::parse(const std::string& text) {
  if (text == "inf" || text == "oo" || text == "infinity" || text == "real") return infinity();
  size_t pos = 0;
  long p = std::stol(text, &pos);
  if (pos != text.size()) throw std::invalid_argument("Place: cannot parse '" + text + "'");
  return prime(p);
}

InvariantVector::InvariantVector(long n) : n_(n) {
  if (n < 2) throw std::invalid_argument("InvariantVector: modulus must be at least 2");
}

void InvariantVector::set(Place v, long value) {
  value = mod(value, n_);
  if (value == 0)
    entries_.erase(v);
  else
    entries_[v] = value;
}

long InvariantVector::at(Place v) const {
  auto it = entries_.find(v);
  return it == entries_.end() ? 0 : it->second;
}

std::vector<Place> InvariantVector::support() const {
  std::vector<Place> s;
  for (auto& [v, x] : entries_) s.push_back(v);
  return s;
}

long InvariantVector::total() const {
  long t = 0;
  for (auto& [v, x] : entries_) t = (t + x) % n_;
  return t;
}

InvariantVector InvariantVector::operator+(const InvariantVector& other) const {
  if (other.n_ != n_) throw std::invalid_argument("InvariantVector: mismatched moduli");
  InvariantVector r = *this;
  for (auto& [v, x] : other.entries_) r.set(v, r.at(v) + x);
  return r;
}

std::string InvariantVector::to_string() const {
  std::string s = "{";
  bool first = true;
  for (auto& [v, x] : entries_) {
    if (!first) s += ", ";
    first = false;
    s += v.to_string() + ": " + std::to_string(x) + "/" + std::to_string(n_);
  }
  return s + "}";
}

}  // namespace ellbr
