// Shared shorthand for the test suites: compact constructors for field
// elements, tables and polynomials, and value extractors that turn library
// objects back into plain integer vectors for comparison against expected
// rows.
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ffcalc/fp.hpp"
#include "ffcalc/gaussian.hpp"
#include "ffcalc/polynomial.hpp"
#include "ffcalc/tabulated.hpp"

namespace ffcalc::testing {

using U = std::vector<std::uint64_t>;
using I = std::vector<std::int64_t>;

inline Fp F(std::int64_t v, std::uint64_t p) { return Fp(v, PrimeModulus(p)); }

inline std::vector<Fp> fp_row(const I& vals, std::uint64_t p) {
  std::vector<Fp> out;
  out.reserve(vals.size());
  for (std::int64_t v : vals) out.push_back(F(v, p));
  return out;
}

inline FpTable full_table(const I& vals, std::uint64_t p) {
  return FpTable(DomainDescriptor::full_field(PrimeModulus(p)),
                 fp_row(vals, p));
}

inline FpTable ring_table(const I& vals, std::uint64_t p) {
  return FpTable(DomainDescriptor::index_ring(PrimeModulus(p), vals.size()),
                 fp_row(vals, p));
}

inline FpPolynomial poly(const I& coeffs, std::uint64_t p,
                         Ring ring = Ring::Plain) {
  return FpPolynomial(PrimeModulus(p), fp_row(coeffs, p), ring);
}

inline U values_of(const std::vector<Fp>& row) {
  U out;
  out.reserve(row.size());
  for (const Fp& v : row) out.push_back(v.value());
  return out;
}

inline U values_of(const FpTable& t) { return values_of(t.values()); }

inline U values_of(const FpPolynomial& a) { return values_of(a.coeffs()); }

inline U re_of(const std::vector<Gaussian>& row) {
  U out;
  out.reserve(row.size());
  for (const Gaussian& z : row) out.push_back(z.re().value());
  return out;
}

inline U im_of(const std::vector<Gaussian>& row) {
  U out;
  out.reserve(row.size());
  for (const Gaussian& z : row) out.push_back(z.im().value());
  return out;
}

inline FpTable random_table(std::mt19937_64& rng, std::uint64_t p) {
  std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
  std::vector<Fp> vals;
  vals.reserve(p);
  for (std::uint64_t i = 0; i < p; ++i)
    vals.push_back(Fp::raw(dist(rng), p));
  return FpTable(DomainDescriptor::full_field(PrimeModulus(p)),
                 std::move(vals));
}

inline FpPolynomial random_poly(std::mt19937_64& rng, std::uint64_t p,
                                std::size_t max_len,
                                Ring ring = Ring::Plain) {
  std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
  std::uniform_int_distribution<std::size_t> len_dist(1, max_len);
  std::vector<Fp> coeffs;
  const std::size_t len = len_dist(rng);
  coeffs.reserve(len);
  for (std::size_t i = 0; i < len; ++i)
    coeffs.push_back(Fp::raw(dist(rng), p));
  return FpPolynomial(PrimeModulus(p), std::move(coeffs), ring);
}

inline std::vector<std::uint64_t> small_odd_primes(std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 3; p < bound; ++p) {
    bool prime = p % 2 == 1;
    for (std::uint64_t d = 3; prime && d * d <= p; d += 2)
      if (p % d == 0) prime = false;
    if (prime) out.push_back(p);
  }
  return out;
}

}  // namespace ffcalc::testing
