// Summation calculus over GF(p).
//
// The definite integral of f is the sum of its values over the whole field.
// Power sums obey: sum_x x^n = p-1 when n = p-1 and 0 otherwise (with
// 0^0 := 1), which collapses the integral of a polynomial to (p-1) times its
// top coefficient and gives a coefficient-pairing formula for the inner
// product sum_x f(x) g(x).
#pragma once

#include <cstdint>
#include <vector>

#include "ffcalc/error.hpp"
#include "ffcalc/fp.hpp"
#include "ffcalc/polynomial.hpp"
#include "ffcalc/tabulated.hpp"

namespace ffcalc {

// sum_{x=0}^{p-1} x^n for 0 <= n <= p-1, by direct summation.
Fp power_sum(PrimeModulus m, std::uint64_t n);

// Partial sums S_N(i) = sum_{x=0}^{N} x^i for N = 0..n_max, i = 0..p-1.
// Row N of the result lists S_N(0), ..., S_N(p-1).
std::vector<std::vector<Fp>> power_sum_table(PrimeModulus m,
                                             std::uint64_t n_max);

// sum over the full field of the tabulated values.
Fp definite_integral(const FpTable& f);

// (p-1) * a_{p-1} for a plain polynomial of degree <= p-1: the only power
// whose sum survives is x^(p-1).
Fp integral_via_coefficient(const FpPolynomial& a);

// sum_{x=0}^{N} f(x); N at most p-1.
Fp partial_integral(const FpTable& f, std::uint64_t n);

// Inner product <f, g> = sum_x f(x) g(x) with both routes on record. The
// coefficient route pairs MacLaurin coefficients a_i b_j over i + j = p-1
// and, because x^(2(p-1)) also sums to p-1, the extra pair (p-1, p-1); the
// printed textbook formula omits that aliasing pair and the report keeps its
// value separate.
struct InnerProductReport {
  Fp direct;            // sum of products of values
  Fp coefficient;       // (p-1) * (pairing sum + aliasing pair)
  Fp printed_formula;   // (p-1) * pairing sum only
  Fp aliasing_term;     // (p-1) * a_{p-1} b_{p-1}
};

InnerProductReport inner_product_report(const FpTable& f, const FpTable& g);

// The inner product value (coefficient route; equals the direct sum).
Fp inner_product(const FpTable& f, const FpTable& g);

// A bijection f: GF(p) -> GF(p) must have MacLaurin top coefficient
// a_{p-1} = 0: its values permute the field, so their sum is 0, and that sum
// is (p-1) a_{p-1}. The condition is necessary but not sufficient.
struct InvertibilityCheck {
  bool top_coeff_zero;
  bool is_bijection;
};

InvertibilityCheck invertibility_necessary_check(const FpTable& f);

}  // namespace ffcalc
