// Gaussian integers over GF(p): elements a + jb with j^2 = -1.
//
// GI(p) is a field exactly when p = 3 (mod 4), i.e. when -1 is a quadratic
// non-residue. For p = 1 (mod 4) the same representation is still useful as
// a formal ring with the symbol j (it is how the purely imaginary sine rows
// over GF(5) are written), but general division is refused there: the ring
// has zero divisors, e.g. (1+j2)(1-j2) = 0 mod 5.
#pragma once

#include <ostream>
#include <string>

#include "ffcalc/fp.hpp"

namespace ffcalc {

class Gaussian {
 public:
  Gaussian(Fp re, Fp im) : re_(re), im_(im) {
    if (re.modulus() != im.modulus())
      throw ModulusMismatch("mixed moduli " + std::to_string(re.modulus()) +
                            " and " + std::to_string(im.modulus()));
  }

  // Embeds a real element as a + j0.
  explicit Gaussian(Fp re) : Gaussian(re, Fp::zero(re.modulus())) {}

  const Fp& re() const { return re_; }
  const Fp& im() const { return im_; }
  std::uint64_t modulus() const { return re_.modulus(); }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

  // True when GI(p) is a field (p = 3 mod 4); otherwise j is formal and
  // division is unavailable.
  bool field_mode() const { return re_.modulus() % 4 == 3; }

  Gaussian conj() const { return Gaussian(re_, -im_); }

  // |z|^2 = re^2 + im^2 = z * conj(z), a real element.
  Fp norm() const { return re_ * re_ + im_ * im_; }

  Gaussian operator-() const { return Gaussian(-re_, -im_); }

  Gaussian operator+(const Gaussian& o) const {
    return Gaussian(re_ + o.re_, im_ + o.im_);
  }
  Gaussian operator-(const Gaussian& o) const {
    return Gaussian(re_ - o.re_, im_ - o.im_);
  }
  Gaussian operator*(const Gaussian& o) const {
    return Gaussian(re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_);
  }

  // Componentwise scaling by a real element; valid in both modes.
  Gaussian operator*(const Fp& s) const { return Gaussian(re_ * s, im_ * s); }
  Gaussian operator/(const Fp& s) const { return *this * s.inv(); }

  // Field division z / w = z * conj(w) / norm(w). Throws NotAField for
  // p = 1 (mod 4) and DivisionByZero on w == 0.
  Gaussian operator/(const Gaussian& o) const {
    if (!field_mode())
      throw NotAField("GI(" + std::to_string(modulus()) +
                      ") is not a field (p = 1 mod 4); division unavailable");
    if (o.is_zero())
      throw DivisionByZero("Gaussian division by zero mod " +
                           std::to_string(modulus()));
    return *this * o.conj() / o.norm();
  }

  Gaussian inv() const {
    return Gaussian(Fp::one(modulus())) / *this;
  }

  Gaussian& operator+=(const Gaussian& o) { return *this = *this + o; }
  Gaussian& operator-=(const Gaussian& o) { return *this = *this - o; }
  Gaussian& operator*=(const Gaussian& o) { return *this = *this * o; }

  bool operator==(const Gaussian& o) const {
    return re_ == o.re_ && im_ == o.im_;
  }
  bool operator!=(const Gaussian& o) const { return !(*this == o); }

  std::string str() const {
    if (im_.is_zero()) return re_.str();
    std::string jpart = "j" + im_.str();
    if (re_.is_zero()) return jpart;
    return re_.str() + "+" + jpart;
  }

  static Gaussian zero(std::uint64_t p) {
    return Gaussian(Fp::zero(p), Fp::zero(p));
  }
  static Gaussian one(std::uint64_t p) {
    return Gaussian(Fp::one(p), Fp::zero(p));
  }
  static Gaussian j(std::uint64_t p) {
    return Gaussian(Fp::zero(p), Fp::one(p));
  }

 private:
  Fp re_, im_;
};

inline std::ostream& operator<<(std::ostream& os, const Gaussian& z) {
  return os << z.str();
}

}  // namespace ffcalc
