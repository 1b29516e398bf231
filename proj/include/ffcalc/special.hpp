// Transcendental-style functions over GF(p).
//
// Two families coexist. The k-trigonometric functions come from powers of a
// fixed element alpha and satisfy the unit circle identity exactly. The
// e-family comes from truncated factorial series (the inverses 1/r! exist
// for r <= p-2); its sine and cosine do not lie on the unit circle, but the
// exponential series is a fixed point of the negacyclic derivative.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ffcalc/error.hpp"
#include "ffcalc/extended.hpp"
#include "ffcalc/fp.hpp"
#include "ffcalc/gaussian.hpp"
#include "ffcalc/polynomial.hpp"
#include "ffcalc/tabulated.hpp"

namespace ffcalc {

// alpha^i, optionally with the exponent reduced mod index_mod first (the
// natural choice is the multiplicative order of alpha).
Fp exp_alpha(const Fp& alpha, std::int64_t i,
             std::optional<std::uint64_t> index_mod = std::nullopt);

// Full-field table of alpha^i for i = 0..p-1.
FpTable exp_alpha_table(const Fp& alpha);

enum class TrigMode {
  Auto,        // Field when p = 3 (mod 4), otherwise Degenerate
  Field,       // j spans GI(p), a genuine field
  Degenerate,  // p = 1 (mod 4): j is replaced by a concrete sqrt(-1) in GF(p)
  Formal,      // j stays symbolic; sine rows are purely imaginary
};

// cos_k and sin_k tables indexed by i = 0..N-1 where N = order(alpha):
//   cos_k(i) = (alpha^(ik) + alpha^(-ik)) / 2
//   sin_k(i) = (alpha^(ik) - alpha^(-ik)) / (2j)
struct KTrigTable {
  Fp alpha;
  std::uint64_t k = 0;
  std::uint64_t order = 0;
  TrigMode mode = TrigMode::Field;  // resolved, never Auto
  std::vector<Gaussian> cos_values;
  std::vector<Gaussian> sin_values;
};

KTrigTable k_trig(const Fp& alpha, std::uint64_t k,
                  TrigMode mode = TrigMode::Auto);

// Truncated series with factorial-inverse coefficients, tagged negacyclic.
// exp: degrees 0..p-2; cosh/sinh: the even/odd halves; cos/sin add the
// alternating signs and require p = 3 (mod 4), being Re/Im of exp(j i).
FpPolynomial exp_series(PrimeModulus m);
FpPolynomial cos_series(PrimeModulus m);
FpPolynomial sin_series(PrimeModulus m);
FpPolynomial cosh_series(PrimeModulus m);
FpPolynomial sinh_series(PrimeModulus m);

// e = sum 1/r! for r = 0..p-2, i.e. the exp series evaluated at 1.
Fp euler_constant(PrimeModulus m);

// e^i for i = 0..p-1 by evaluating the exp series.
FpTable exp_table(PrimeModulus m);

// Discrete logarithm base alpha; alpha must be primitive. log 0 = -inf.
Ext log_alpha(const Fp& alpha, const Ext& x);
ExtTable log_table(const Fp& alpha);

// 1/x with 1/0 = -inf.
ExtTable reciprocal_table(PrimeModulus m);

}  // namespace ffcalc
