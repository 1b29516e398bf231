// Dense polynomials over GF(p) or GI(p) with a quotient-ring tag.
//
// Plain polynomials live in GF(p)[x]. The Cyclic tag marks elements of the
// quotient by x^(p-1) - 1 and the Negacyclic tag the quotient by
// x^(p-1) + 1 (degree at most p-2 in both); the tags select which derivative
// rule applies in calculus.hpp. Coefficient storage is canonical: trailing
// zeros are trimmed and the zero polynomial is stored as a single zero.
#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "ffcalc/error.hpp"
#include "ffcalc/fp.hpp"
#include "ffcalc/gaussian.hpp"

namespace ffcalc {

enum class Ring { Plain, Cyclic, Negacyclic };

// Promotes a field element into scalar kind S (identity for Fp, real
// embedding for Gaussian).
template <typename S>
S scalar_from_fp(const Fp& x) {
  if constexpr (std::is_same_v<S, Fp>)
    return x;
  else
    return S(x);
}

inline const char* ring_name(Ring r) {
  switch (r) {
    case Ring::Plain: return "plain";
    case Ring::Cyclic: return "cyclic";
    case Ring::Negacyclic: return "negacyclic";
  }
  return "?";
}

template <typename S>
class Polynomial {
 public:
  Polynomial(PrimeModulus m, std::vector<S> coeffs, Ring ring = Ring::Plain)
      : p_(m.value()), ring_(ring), coeffs_(std::move(coeffs)) {
    for (const S& c : coeffs_)
      if (c.modulus() != p_)
        throw ModulusMismatch("coefficient modulus " +
                              std::to_string(c.modulus()) +
                              " does not match " + std::to_string(p_));
    trim();
    if (ring != Ring::Plain && coeffs_.size() > p_ - 1)
      throw WrongRing("degree exceeds p-2 in quotient ring mod " +
                      std::to_string(p_));
  }

  std::uint64_t modulus() const { return p_; }
  Ring ring() const { return ring_; }

  // Storage degree; the zero polynomial reports 0.
  std::size_t degree() const { return coeffs_.size() - 1; }
  const std::vector<S>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0].is_zero(); }

  // Coefficient of x^i, zero beyond the stored degree.
  S coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : S::zero(p_);
  }

  // Coefficients padded with zeros to length n (n >= stored size).
  std::vector<S> padded(std::size_t n) const {
    std::vector<S> out = coeffs_;
    while (out.size() < n) out.push_back(S::zero(p_));
    return out;
  }

  // Horner evaluation. Callers with a real point and Gaussian coefficients
  // promote the point first.
  S eval(const S& x) const {
    S acc = S::zero(p_);
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
  }

  Polynomial operator+(const Polynomial& o) const {
    require_compatible(o);
    std::vector<S> out = padded(std::max(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[i] += o.coeffs_[i];
    return Polynomial(PrimeModulus(p_), std::move(out), ring_);
  }

  Polynomial operator-(const Polynomial& o) const {
    require_compatible(o);
    std::vector<S> out = padded(std::max(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[i] -= o.coeffs_[i];
    return Polynomial(PrimeModulus(p_), std::move(out), ring_);
  }

  Polynomial operator-() const {
    std::vector<S> out = coeffs_;
    for (S& c : out) c = -c;
    return Polynomial(PrimeModulus(p_), std::move(out), ring_);
  }

  Polynomial operator*(const S& s) const {
    std::vector<S> out = coeffs_;
    for (S& c : out) c *= s;
    return Polynomial(PrimeModulus(p_), std::move(out), ring_);
  }

  // Convolution product; Plain ring only.
  Polynomial operator*(const Polynomial& o) const {
    require_compatible(o);
    if (ring_ != Ring::Plain)
      throw WrongRing("product defined on the plain ring only");
    std::vector<S> out(coeffs_.size() + o.coeffs_.size() - 1, S::zero(p_));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
        out[i + j] += coeffs_[i] * o.coeffs_[j];
    return Polynomial(PrimeModulus(p_), std::move(out), Ring::Plain);
  }

  // Synthetic division by (x - beta): returns (quotient, remainder) with
  // *this == quotient * (x - beta) + remainder and remainder == eval(beta).
  std::pair<Polynomial, S> synthetic_divide(const Fp& beta) const {
    if (beta.modulus() != p_)
      throw ModulusMismatch("divisor point modulus " +
                            std::to_string(beta.modulus()) +
                            " does not match " + std::to_string(p_));
    if (coeffs_.size() == 1)
      return {Polynomial(PrimeModulus(p_), {S::zero(p_)}, ring_), coeffs_[0]};
    std::vector<S> q(coeffs_.size() - 1, S::zero(p_));
    q.back() = coeffs_.back();
    for (std::size_t i = coeffs_.size() - 2; i > 0; --i)
      q[i - 1] = coeffs_[i] + q[i] * beta;
    S rem = coeffs_[0] + q[0] * beta;
    return {Polynomial(PrimeModulus(p_), std::move(q), ring_), rem};
  }

  bool operator==(const Polynomial& o) const {
    return p_ == o.p_ && ring_ == o.ring_ && coeffs_ == o.coeffs_;
  }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  std::string str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (i > 0) out += ", ";
      out += coeffs_[i].str();
    }
    return out + ")";
  }

  static Polynomial zero(PrimeModulus m, Ring ring = Ring::Plain) {
    return Polynomial(m, {S::zero(m.value())}, ring);
  }

  static Polynomial constant(const S& c, Ring ring = Ring::Plain) {
    return Polynomial(PrimeModulus(c.modulus()), {c}, ring);
  }

 private:
  void trim() {
    if (coeffs_.empty()) coeffs_.push_back(S::zero(p_));
    while (coeffs_.size() > 1 && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  void require_compatible(const Polynomial& o) const {
    if (p_ != o.p_)
      throw ModulusMismatch("mixed moduli " + std::to_string(p_) + " and " +
                            std::to_string(o.p_));
    if (ring_ != o.ring_)
      throw WrongRing(std::string("mixed rings ") + ring_name(ring_) + " and " +
                      ring_name(o.ring_));
  }

  std::uint64_t p_;
  Ring ring_;
  std::vector<S> coeffs_;
};

template <typename S>
std::ostream& operator<<(std::ostream& os, const Polynomial<S>& a) {
  return os << a.str();
}

using FpPolynomial = Polynomial<Fp>;
using GaussianPolynomial = Polynomial<Gaussian>;

// x^deg * c as a plain polynomial.
inline FpPolynomial monomial(PrimeModulus m, std::size_t deg, const Fp& c) {
  std::vector<Fp> coeffs(deg + 1, Fp::zero(m.value()));
  coeffs[deg] = c;
  return FpPolynomial(m, std::move(coeffs));
}

// Reduces an unrestricted coefficient vector modulo x^(p-1) + 1: every
// exponent p-1+k folds onto exponent k with a sign flip per fold.
template <typename S>
std::vector<S> negacyclic_fold(PrimeModulus m, const std::vector<S>& coeffs) {
  const std::uint64_t n = m.value() - 1;
  std::vector<S> out(n, S::zero(m.value()));
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    std::size_t k = i % n;
    S term = (i / n) % 2 == 0 ? coeffs[i] : -coeffs[i];
    out[k] += term;
  }
  return out;
}

}  // namespace ffcalc
