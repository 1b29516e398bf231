#include "ffcalc/fp.hpp"

#include <ostream>
#include <sstream>

namespace ffcalc {

namespace {

bool is_odd_prime(std::uint64_t p) {
  if (p < 3 || p % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

PrimeModulus::PrimeModulus(std::uint64_t p) : p_(p) {
  if (p >= (std::uint64_t{1} << 31))
    throw InvalidModulus("modulus too large: " + std::to_string(p));
  if (!is_odd_prime(p))
    throw InvalidModulus("modulus must be an odd prime, got " + std::to_string(p));
}

Fp::Fp(std::int64_t value, PrimeModulus m) : p_(m.value()) {
  std::int64_t r = value % static_cast<std::int64_t>(p_);
  if (r < 0) r += static_cast<std::int64_t>(p_);
  v_ = static_cast<std::uint64_t>(r);
}

void Fp::require_same_field(const Fp& o) const {
  if (p_ != o.p_)
    throw ModulusMismatch("mixed moduli " + std::to_string(p_) + " and " +
                          std::to_string(o.p_));
}

std::int64_t Fp::balanced() const {
  if (v_ <= (p_ - 1) / 2) return static_cast<std::int64_t>(v_);
  return static_cast<std::int64_t>(v_) - static_cast<std::int64_t>(p_);
}

Fp Fp::operator-() const { return raw(v_ == 0 ? 0 : p_ - v_, p_); }

Fp Fp::operator+(const Fp& o) const {
  require_same_field(o);
  std::uint64_t s = v_ + o.v_;
  if (s >= p_) s -= p_;
  return raw(s, p_);
}

Fp Fp::operator-(const Fp& o) const {
  require_same_field(o);
  return raw(v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_, p_);
}

Fp Fp::operator*(const Fp& o) const {
  require_same_field(o);
  return raw(v_ * o.v_ % p_, p_);  // p < 2^31 keeps the product in range
}

Fp Fp::operator/(const Fp& o) const {
  require_same_field(o);
  return *this * o.inv();
}

Fp Fp::inv() const {
  if (v_ == 0) throw DivisionByZero("inverse of zero mod " + std::to_string(p_));
  return pow(static_cast<std::int64_t>(p_) - 2);
}

Fp Fp::pow(std::int64_t e) const {
  if (e < 0) return inv().pow(-e);
  std::uint64_t base = v_, acc = 1 % p_;
  std::uint64_t k = static_cast<std::uint64_t>(e);
  while (k > 0) {
    if (k & 1) acc = acc * base % p_;
    base = base * base % p_;
    k >>= 1;
  }
  return raw(acc, p_);
}

std::string Fp::str() const { return std::to_string(v_); }

std::ostream& operator<<(std::ostream& os, const Fp& a) { return os << a.value(); }

std::uint64_t element_order(const Fp& a) {
  if (a.is_zero())
    throw ZeroHasNoOrder("zero has no multiplicative order mod " +
                         std::to_string(a.modulus()));
  Fp acc = a;
  std::uint64_t k = 1;
  const Fp one = Fp::one(a.modulus());
  while (acc != one) {
    acc *= a;
    ++k;
  }
  return k;
}

bool is_primitive(const Fp& a) {
  return !a.is_zero() && element_order(a) == a.modulus() - 1;
}

QuadraticResidue quadratic_residue(const Fp& a) {
  const std::uint64_t p = a.modulus();
  if (a.is_zero()) return {true, Fp::zero(p)};
  Fp euler = a.pow(static_cast<std::int64_t>((p - 1) / 2));
  if (euler != Fp::one(p)) return {false, std::nullopt};
  for (std::uint64_t y = 1; y < p; ++y) {
    Fp cand = Fp::raw(y, p);
    if (cand * cand == a) return {true, cand};
  }
  // Unreachable: the Euler criterion guarantees a root exists.
  throw Error("no square root found for residue " + a.str());
}

Fp pi_const(PrimeModulus m) { return Fp::raw((m.value() - 1) / 2, m.value()); }

}  // namespace ffcalc
