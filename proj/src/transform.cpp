#include "ffcalc/transform.hpp"

#include <string>

#include "ffcalc/interp.hpp"

namespace ffcalc {

SpectrumVector ffft(const std::vector<Fp>& coeffs, const Fp& alpha,
                    std::uint64_t n) {
  const std::uint64_t p = alpha.modulus();
  if (alpha.is_zero() || element_order(alpha) != n)
    throw WrongOrder("alpha = " + alpha.str() + " does not have order " +
                     std::to_string(n));
  if (coeffs.size() > n)
    throw DomainMismatch("more than " + std::to_string(n) + " coefficients");
  for (const Fp& c : coeffs)
    if (c.modulus() != p)
      throw ModulusMismatch("coefficient modulus mismatch");

  SpectrumVector out{alpha, {}};
  out.values.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    const Fp point = alpha.pow(static_cast<std::int64_t>(i));
    Fp acc = Fp::zero(p);
    Fp pw = Fp::one(p);
    for (const Fp& c : coeffs) {
      acc += c * pw;
      pw *= point;
    }
    out.values.push_back(acc);
  }
  return out;
}

SpectrumVector ffft(const std::vector<Fp>& coeffs, const Fp& alpha) {
  return ffft(coeffs, alpha, element_order(alpha));
}

std::vector<Fp> inverse_ffft(const SpectrumVector& spectrum) {
  const Fp& alpha = spectrum.alpha;
  const std::uint64_t p = alpha.modulus();
  const std::uint64_t n = element_order(alpha);
  if (spectrum.values.size() != n)
    throw WrongOrder("spectrum length " +
                     std::to_string(spectrum.values.size()) +
                     " does not match order " + std::to_string(n));
  const Fp ainv = alpha.inv();
  const Fp nval = Fp::raw(n % p, p);
  if (nval.is_zero()) throw DivisionByZero("transform length divides p");
  const Fp ninv = nval.inv();
  std::vector<Fp> out;
  out.reserve(n);
  for (std::uint64_t j = 0; j < n; ++j) {
    const Fp point = ainv.pow(static_cast<std::int64_t>(j));
    Fp acc = Fp::zero(p);
    Fp pw = Fp::one(p);
    for (const Fp& v : spectrum.values) {
      acc += v * pw;
      pw *= point;
    }
    out.push_back(acc * ninv);
  }
  return out;
}

BridgeReport table_to_series_bridge(const FpTable& f, const Fp& alpha) {
  if (f.domain().kind() != DomainDescriptor::Kind::FullField)
    throw DomainMismatch("bridge needs a full field table");
  const std::uint64_t p = f.modulus();
  if (alpha.modulus() != p)
    throw ModulusMismatch("alpha modulus " + std::to_string(alpha.modulus()) +
                          " does not match " + std::to_string(p));
  if (!is_primitive(alpha))
    throw NotPrimitive("alpha = " + alpha.str() + " is not primitive mod " +
                       std::to_string(p));

  const std::vector<Fp> a = maclaurin(f).padded(p);

  // Read the table along powers of alpha: the "f-permutation" that turns
  // evaluation at all nonzero points into a spectrum.
  std::vector<Fp> reordered;
  reordered.reserve(p - 1);
  Fp point = Fp::one(p);
  for (std::uint64_t i = 0; i < p - 1; ++i) {
    reordered.push_back(f.at(point.value()));
    point *= alpha;
  }

  std::vector<Fp> recovered =
      inverse_ffft(SpectrumVector{alpha, reordered});

  BridgeReport report{a,
                      std::move(reordered),
                      std::move(recovered),
                      Fp::zero(p),
                      f.at(0),
                      a[p - 1].is_zero()};
  report.constant_slot = report.recovered[0];
  return report;
}

}  // namespace ffcalc
