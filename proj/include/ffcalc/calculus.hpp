// Derivatives and Taylor expansions of polynomials over GF(p).
//
// The classical r-th derivative multiplies by falling factorials and so
// vanishes identically for r >= p; the Hasse derivative divides out the r!
// and stays informative. On the negacyclic ring (mod x^(p-1) + 1) the
// constant term is first rewritten as c = -c x^(p-1) before differentiating,
// which is what makes the exponential series a fixed point.
#pragma once

#include <cstdint>
#include <vector>

#include "ffcalc/error.hpp"
#include "ffcalc/fp.hpp"
#include "ffcalc/polynomial.hpp"

namespace ffcalc {

// n! reduced mod p.
inline Fp factorial(std::uint64_t n, PrimeModulus m) {
  Fp acc = Fp::one(m.value());
  for (std::uint64_t k = 2; k <= n; ++k)
    acc *= Fp::raw(k % m.value(), m.value());
  return acc;
}

// C(n, r) mod p by Lucas: the product of digitwise binomials base p.
inline Fp binomial(std::uint64_t n, std::uint64_t r, PrimeModulus m) {
  const std::uint64_t p = m.value();
  Fp acc = Fp::one(p);
  while (n > 0 || r > 0) {
    const std::uint64_t nd = n % p, rd = r % p;
    if (rd > nd) return Fp::zero(p);
    // C(nd, rd) with nd < p: multiplicative formula, all factors invertible.
    Fp digit = Fp::one(p);
    for (std::uint64_t t = 0; t < rd; ++t) {
      digit *= Fp::raw(nd - t, p);
      digit /= Fp::raw(t + 1, p);
    }
    acc *= digit;
    n /= p;
    r /= p;
  }
  return acc;
}

namespace detail {

template <typename S>
void require_derivable_ring(const Polynomial<S>& a) {
  if (a.ring() == Ring::Negacyclic)
    throw WrongRing("negacyclic polynomials take the negacyclic derivative");
}

}  // namespace detail

// r-th classical derivative: sum_i i(i-1)...(i-r+1) a_i x^(i-r).
// Identically zero for r >= p because any r consecutive integers then
// contain a multiple of p. Plain and cyclic rings only.
template <typename S>
Polynomial<S> classical_derivative(const Polynomial<S>& a, std::uint64_t r) {
  detail::require_derivable_ring(a);
  const std::uint64_t p = a.modulus();
  if (r == 0) return a;
  std::vector<S> out;
  const auto& c = a.coeffs();
  for (std::size_t i = r; i < c.size(); ++i) {
    Fp falling = Fp::one(p);
    for (std::uint64_t t = 0; t < r; ++t)
      falling *= Fp::raw((i - t) % p, p);
    out.push_back(c[i] * falling);
  }
  return Polynomial<S>(PrimeModulus(p), std::move(out), a.ring());
}

// r-th Hasse derivative: sum_i C(i, r) a_i x^(i-r). Plain and cyclic rings.
template <typename S>
Polynomial<S> hasse_derivative(const Polynomial<S>& a, std::uint64_t r) {
  detail::require_derivable_ring(a);
  const std::uint64_t p = a.modulus();
  if (r == 0) return a;
  std::vector<S> out;
  const auto& c = a.coeffs();
  for (std::size_t i = r; i < c.size(); ++i)
    out.push_back(c[i] * binomial(i, r, PrimeModulus(p)));
  return Polynomial<S>(PrimeModulus(p), std::move(out), a.ring());
}

// Hasse derivative on the ring mod x^(p-1) + 1. The constant term c is first
// rewritten as -c x^(p-1) (legitimate since x^(p-1) = -1 there), then the
// plain Hasse rule applies; iterated for r > 1.
template <typename S>
Polynomial<S> negacyclic_hasse_derivative(const Polynomial<S>& a,
                                          std::uint64_t r = 1) {
  if (a.ring() != Ring::Negacyclic)
    throw WrongRing("input is not tagged negacyclic");
  const std::uint64_t p = a.modulus();
  Polynomial<S> cur = a;
  for (std::uint64_t step = 0; step < r; ++step) {
    std::vector<S> c = cur.padded(p - 1);
    c.push_back(-c[0]);  // move the constant to the x^(p-1) slot
    c[0] = S::zero(p);
    std::vector<S> d;
    for (std::size_t i = 1; i < c.size(); ++i)
      d.push_back(c[i] * binomial(i, 1, PrimeModulus(p)));
    cur = Polynomial<S>(PrimeModulus(p), negacyclic_fold(PrimeModulus(p), d),
                        Ring::Negacyclic);
  }
  return cur;
}

// Expansion of a polynomial in powers of (x - beta): the coefficients b_r
// with a(x) = sum_r b_r (x - beta)^r, finite and exact.
template <typename S>
struct AdicExpansion {
  Fp beta;
  std::vector<S> coeffs;

  bool operator==(const AdicExpansion& o) const {
    return beta == o.beta && coeffs == o.coeffs;
  }
};

// Computes the expansion by repeated synthetic division by (x - beta); the
// remainder sequence is exactly b_0, b_1, ... The same numbers arise as
// Hasse derivatives evaluated at beta, which the tests exploit as a second
// route.
template <typename S>
AdicExpansion<S> taylor_expand(const Polynomial<S>& a, const Fp& beta) {
  if (a.ring() != Ring::Plain)
    throw WrongRing("expansion is defined on the plain ring");
  if (beta.modulus() != a.modulus())
    throw ModulusMismatch("expansion point modulus mismatch");
  AdicExpansion<S> out{beta, {}};
  Polynomial<S> cur = a;
  const std::size_t n = a.coeffs().size();
  for (std::size_t k = 0; k < n; ++k) {
    auto [q, rem] = cur.synthetic_divide(beta);
    out.coeffs.push_back(rem);
    cur = std::move(q);
  }
  return out;
}

// Horner reconstruction: sum_r b_r (x - beta)^r back to plain coefficients.
template <typename S>
Polynomial<S> adic_reconstruct(const AdicExpansion<S>& e) {
  const std::uint64_t p = e.beta.modulus();
  const PrimeModulus m(p);
  if (e.coeffs.empty()) return Polynomial<S>::zero(m);
  const Polynomial<S> linear(
      m, {scalar_from_fp<S>(-e.beta), scalar_from_fp<S>(Fp::one(p))});
  Polynomial<S> acc = Polynomial<S>::constant(e.coeffs.back());
  for (std::size_t k = e.coeffs.size() - 1; k-- > 0;)
    acc = acc * linear + Polynomial<S>::constant(e.coeffs[k]);
  return acc;
}

}  // namespace ffcalc
