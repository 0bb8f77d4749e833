#include "ellbr/curves/domain.hpp"

namespace ellbr {

Fp::Fp(long p, long value) : p_(p), v_(0) {
  if (p < 2 || p >= (1L << 31) || !is_prime(p)) throw std::invalid_argument("Fp: modulus must be a prime below 2^31");
  v_ = mod(value, p);
}

long Fp::check(Fp other) const {
  if (other.p_ != p_) throw std::invalid_argument("Fp: mismatched primes");
  return p_;
}

Fp Fp::inverse() const {
  if (v_ == 0) throw std::domain_error("Fp: division by zero");
  return Fp(p_, inverse_mod(Integer(v_), Integer(p_)).get_si());
}

}  // namespace ellbr
