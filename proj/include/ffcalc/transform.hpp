// Finite field Fourier transform of length N = order(alpha),
//
//   A_i = sum_j a_j alpha^(ij),    a_j = N^(-1) sum_i A_i alpha^(-ij),
//
// computed by direct summation (desk scale). The bridge ties the transform
// to function tables: reading a full-field table along powers of a primitive
// alpha and inverting recovers the MacLaurin coefficients, except that a_0
// and a_(p-1) fold into one slot because alpha^((p-1)i) = 1.
#pragma once

#include <cstdint>
#include <vector>

#include "ffcalc/error.hpp"
#include "ffcalc/fp.hpp"
#include "ffcalc/polynomial.hpp"
#include "ffcalc/tabulated.hpp"

namespace ffcalc {

struct SpectrumVector {
  Fp alpha;
  std::vector<Fp> values;  // length order(alpha)

  bool operator==(const SpectrumVector& o) const {
    return alpha == o.alpha && values == o.values;
  }
};

// Forward transform of up to N coefficients; alpha must have order n.
SpectrumVector ffft(const std::vector<Fp>& coeffs, const Fp& alpha,
                    std::uint64_t n);

// Convenience overload with n = order(alpha).
SpectrumVector ffft(const std::vector<Fp>& coeffs, const Fp& alpha);

// Inverse transform; returns N coefficients.
std::vector<Fp> inverse_ffft(const SpectrumVector& spectrum);

// Round trip through the spectrum of a full-field table read along powers of
// a primitive alpha: P_i = f(alpha^i) for i = 0..p-2, then inverse FFFT.
struct BridgeReport {
  std::vector<Fp> maclaurin;     // degree <= p-1 coefficients, length p
  std::vector<Fp> log_reordered; // P_i = f(alpha^i)
  std::vector<Fp> recovered;     // inverse FFFT of the above, length p-1
  Fp constant_slot;              // recovered[0] = a_0 + a_{p-1}
  Fp f_at_zero;                  // carried out of band (0 is no power of alpha)
  bool exact;                    // true iff a_{p-1} = 0
};

BridgeReport table_to_series_bridge(const FpTable& f, const Fp& alpha);

}  // namespace ffcalc
