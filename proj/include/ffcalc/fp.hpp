// Exact arithmetic in the prime field GF(p).
//
// PrimeModulus validates p once (odd prime, desk scale); Fp is a value type
// carrying its residue and modulus, so elements from different fields cannot
// be mixed silently. All results are canonical residues in [0, p-1];
// balanced() gives the signed representative in [-(p-1)/2, (p-1)/2].
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "ffcalc/error.hpp"

namespace ffcalc {

class PrimeModulus {
 public:
  // Accepts odd primes 3 <= p < 2^31; throws InvalidModulus otherwise.
  explicit PrimeModulus(std::uint64_t p);

  std::uint64_t value() const { return p_; }

  friend bool operator==(PrimeModulus a, PrimeModulus b) { return a.p_ == b.p_; }
  friend bool operator!=(PrimeModulus a, PrimeModulus b) { return a.p_ != b.p_; }

 private:
  std::uint64_t p_;
};

class Fp {
 public:
  // Normalizes any signed integer into [0, p-1].
  Fp(std::int64_t value, PrimeModulus m);

  std::uint64_t value() const { return v_; }
  std::uint64_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }

  // Signed representative in [-(p-1)/2, (p-1)/2].
  std::int64_t balanced() const;

  Fp operator-() const;
  Fp operator+(const Fp& o) const;
  Fp operator-(const Fp& o) const;
  Fp operator*(const Fp& o) const;
  Fp operator/(const Fp& o) const;  // throws DivisionByZero on o == 0
  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }
  Fp& operator/=(const Fp& o) { return *this = *this / o; }

  // Multiplicative inverse via Fermat; throws DivisionByZero on zero.
  Fp inv() const;

  // Square-and-multiply; negative exponents go through the inverse.
  // pow(0, 0) == 1 by the global 0^0 := 1 convention.
  Fp pow(std::int64_t e) const;

  bool operator==(const Fp& o) const { return p_ == o.p_ && v_ == o.v_; }
  bool operator!=(const Fp& o) const { return !(*this == o); }

  std::string str() const;

  // Trusted constructor for internal use: v must already be reduced and p
  // already validated.
  static Fp raw(std::uint64_t v, std::uint64_t p) { return Fp(v, p, 0); }

  static Fp zero(std::uint64_t p) { return raw(0, p); }
  static Fp one(std::uint64_t p) { return raw(1 % p, p); }

 private:
  Fp(std::uint64_t v, std::uint64_t p, int) : v_(v), p_(p) {}
  void require_same_field(const Fp& o) const;

  std::uint64_t v_;
  std::uint64_t p_;
};

std::ostream& operator<<(std::ostream& os, const Fp& a);

// Multiplicative order of a in GF(p)*; throws ZeroHasNoOrder on a == 0.
std::uint64_t element_order(const Fp& a);

// True when order(a) == p-1 (a generates the multiplicative group).
bool is_primitive(const Fp& a);

struct QuadraticResidue {
  bool is_residue;
  std::optional<Fp> root;  // smallest root when is_residue; root*root == a
};

// Euler-criterion residue test plus an exhaustive root search (desk scale).
// Zero counts as a residue with root 0.
QuadraticResidue quadratic_residue(const Fp& a);

// The field constant pi := (p-1)/2, the half period of the k-trigonometric
// functions.
Fp pi_const(PrimeModulus m);

}  // namespace ffcalc
