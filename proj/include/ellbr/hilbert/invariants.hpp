#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace ellbr {

// A place of Q: a finite prime, or infinity (stored as 0 and ordered last).
class Place {
 public:
  static Place infinity() { return Place(0); }
  static Place prime(long p);
  bool is_infinite() const { return p_ == 0; }
  long p() const { return p_; }
  std::string to_string() const { return p_ == 0 ? "inf" : std::to_string(p_); }
  // "inf", "oo", "infinity" or a prime.
  static Place parse(const std::string& text);

  friend bool operator==(Place a, Place b) { return a.p_ == b.p_; }
  friend bool operator<(Place a, Place b) {
    if (a.p_ == 0 || b.p_ == 0) return a.p_ != 0 && b.p_ == 0;
    return a.p_ < b.p_;
  }

 private:
  explicit Place(long p) : p_(p) {}
  long p_;
};

// Local invariants of a Brauer class, as residues mod n at finitely many places.
class InvariantVector {
 public:
  explicit InvariantVector(long n);

  long modulus() const { return n_; }
  void set(Place v, long value);
  long at(Place v) const;
  std::vector<Place> support() const;
  bool is_zero() const { return entries_.empty(); }
  long total() const;
  bool satisfies_product_formula() const { return total() == 0; }
  const std::map<Place, long>& entries() const { return entries_; }

  InvariantVector operator+(const InvariantVector& other) const;
  friend bool operator==(const InvariantVector&, const InvariantVector&) = default;
  std::string to_string() const;

 private:
  long n_;
  std::map<Place, long> entries_;
};

}  // namespace ellbr
