// GF(p) extended by the symbol -inf, the value of log 0 and of 1/0 in the
// function tables. Arithmetic follows the absorbing rules
//
//   x + (-inf) = -inf      x * (-inf) = -inf      x / (-inf) = 0
//
// for finite x, with (-inf) + (-inf) = -inf and (-inf) / (-inf) undefined.
// Division by a finite element delegates to multiplication by its inverse,
// so (-inf) / x = -inf for finite x != 0.
#pragma once

#include <ostream>
#include <string>

#include "ffcalc/fp.hpp"

namespace ffcalc {

class Ext {
 public:
  // Finite element.
  explicit Ext(Fp v) : minus_inf_(false), v_(v) {}

  static Ext minus_infinity(PrimeModulus m) {
    return Ext(Fp::zero(m.value()), true);
  }

  bool is_minus_infinity() const { return minus_inf_; }
  std::uint64_t modulus() const { return v_.modulus(); }

  // Throws Undefined when applied to -inf.
  const Fp& finite() const {
    if (minus_inf_) throw Undefined("-inf has no finite value");
    return v_;
  }

  Ext operator+(const Ext& o) const {
    require_same_field(o);
    if (minus_inf_ || o.minus_inf_) return minus_infinity_like();
    return Ext(v_ + o.v_);
  }

  Ext operator*(const Ext& o) const {
    require_same_field(o);
    if (minus_inf_ && o.minus_inf_)
      throw Undefined("(-inf) * (-inf) is undefined");
    if (minus_inf_ || o.minus_inf_) return minus_infinity_like();
    return Ext(v_ * o.v_);
  }

  Ext operator/(const Ext& o) const {
    require_same_field(o);
    if (o.minus_inf_) {
      if (minus_inf_) throw Undefined("(-inf) / (-inf) is undefined");
      return Ext(Fp::zero(modulus()));
    }
    if (minus_inf_) return Ext(v_ * o.v_.inv(), true);  // inv() checks for zero
    return Ext(v_ / o.v_);
  }

  bool operator==(const Ext& o) const {
    if (modulus() != o.modulus()) return false;
    if (minus_inf_ != o.minus_inf_) return false;
    return minus_inf_ || v_ == o.v_;
  }
  bool operator!=(const Ext& o) const { return !(*this == o); }

  std::string str() const { return minus_inf_ ? "-inf" : v_.str(); }

 private:
  Ext(Fp v, bool minus_inf) : minus_inf_(minus_inf), v_(v) {}

  Ext minus_infinity_like() const { return Ext(Fp::zero(modulus()), true); }

  void require_same_field(const Ext& o) const {
    if (modulus() != o.modulus())
      throw ModulusMismatch("mixed moduli " + std::to_string(modulus()) +
                            " and " + std::to_string(o.modulus()));
  }

  bool minus_inf_;
  Fp v_;  // zero placeholder while minus_inf_
};

inline std::ostream& operator<<(std::ostream& os, const Ext& a) {
  return os << a.str();
}

}  // namespace ffcalc
