#include "ffcalc/special.hpp"

#include <string>

namespace ffcalc {

Fp exp_alpha(const Fp& alpha, std::int64_t i,
             std::optional<std::uint64_t> index_mod) {
  if (index_mod) {
    if (*index_mod == 0) throw IndexOutOfRange("index modulus must be positive");
    std::int64_t n = static_cast<std::int64_t>(*index_mod);
    i = ((i % n) + n) % n;
  }
  return alpha.pow(i);
}

FpTable exp_alpha_table(const Fp& alpha) {
  const std::uint64_t p = alpha.modulus();
  std::vector<Fp> vals;
  vals.reserve(p);
  Fp acc = Fp::one(p);
  for (std::uint64_t i = 0; i < p; ++i) {
    vals.push_back(acc);
    acc *= alpha;
  }
  return FpTable(DomainDescriptor::full_field(PrimeModulus(p)), std::move(vals));
}

KTrigTable k_trig(const Fp& alpha, std::uint64_t k, TrigMode mode) {
  const std::uint64_t p = alpha.modulus();
  const PrimeModulus m(p);
  if (mode == TrigMode::Auto)
    mode = p % 4 == 3 ? TrigMode::Field : TrigMode::Degenerate;
  if (mode == TrigMode::Field && p % 4 != 3)
    throw NotAField("GI(" + std::to_string(p) + ") is not a field");
  if (mode == TrigMode::Degenerate && p % 4 != 1)
    throw CompositeModulusForTrig(
        "degenerate mode needs a square root of -1 in GF(" + std::to_string(p) +
        ")");

  KTrigTable out{alpha, k, element_order(alpha), mode, {}, {}};

  const Fp half = Fp::raw(2 % p, p).inv();
  Fp root = Fp::zero(p);  // sqrt(-1), degenerate mode only
  if (mode == TrigMode::Degenerate)
    root = *quadratic_residue(-Fp::one(p)).root;

  const Fp ak = alpha.pow(static_cast<std::int64_t>(k));
  const Fp aki = ak.inv();
  Fp fwd = Fp::one(p), bwd = Fp::one(p);
  for (std::uint64_t i = 0; i < out.order; ++i) {
    const Fp c = (fwd + bwd) * half;
    const Fp s_half = (fwd - bwd) * half;  // (alpha^ik - alpha^-ik)/2
    out.cos_values.push_back(Gaussian(c));
    if (mode == TrigMode::Degenerate) {
      // 1/j realized as the concrete root: s = (a^ik - a^-ik) / (2 root).
      out.sin_values.push_back(Gaussian(s_half / root));
    } else {
      // 1/(2j) = -j/2, so the sine is purely imaginary with part -s_half.
      out.sin_values.push_back(Gaussian(Fp::zero(p), -s_half));
    }
    fwd *= ak;
    bwd *= aki;
  }
  return out;
}

namespace {

// Coefficients 1/r! for r = 0..p-2 with an optional parity/sign mask.
enum class SeriesKind { Exp, Cos, Sin, Cosh, Sinh };

FpPolynomial factorial_series(PrimeModulus m, SeriesKind kind) {
  const std::uint64_t p = m.value();
  if ((kind == SeriesKind::Cos || kind == SeriesKind::Sin) && p % 4 != 3)
    throw CompositeModulusForTrig(
        "cos/sin series need p = 3 (mod 4); p = " + std::to_string(p));
  std::vector<Fp> coeffs(p - 1, Fp::zero(p));
  Fp fact = Fp::one(p);
  for (std::uint64_t r = 0; r <= p - 2; ++r) {
    if (r > 0) fact *= Fp::raw(r % p, p);
    const bool even = r % 2 == 0;
    bool keep = true;
    Fp term = fact.inv();
    switch (kind) {
      case SeriesKind::Exp: break;
      case SeriesKind::Cosh: keep = even; break;
      case SeriesKind::Sinh: keep = !even; break;
      case SeriesKind::Cos:
        keep = even;
        if (keep && (r / 2) % 2 == 1) term = -term;
        break;
      case SeriesKind::Sin:
        keep = !even;
        if (keep && ((r - 1) / 2) % 2 == 1) term = -term;
        break;
    }
    if (keep) coeffs[r] = term;
  }
  return FpPolynomial(m, std::move(coeffs), Ring::Negacyclic);
}

}  // namespace

FpPolynomial exp_series(PrimeModulus m) {
  return factorial_series(m, SeriesKind::Exp);
}
FpPolynomial cos_series(PrimeModulus m) {
  return factorial_series(m, SeriesKind::Cos);
}
FpPolynomial sin_series(PrimeModulus m) {
  return factorial_series(m, SeriesKind::Sin);
}
FpPolynomial cosh_series(PrimeModulus m) {
  return factorial_series(m, SeriesKind::Cosh);
}
FpPolynomial sinh_series(PrimeModulus m) {
  return factorial_series(m, SeriesKind::Sinh);
}

Fp euler_constant(PrimeModulus m) {
  return exp_series(m).eval(Fp::one(m.value()));
}

FpTable exp_table(PrimeModulus m) {
  const std::uint64_t p = m.value();
  const FpPolynomial e = exp_series(m);
  std::vector<Fp> vals;
  vals.reserve(p);
  for (std::uint64_t i = 0; i < p; ++i) vals.push_back(e.eval(Fp::raw(i, p)));
  return FpTable(DomainDescriptor::full_field(m), std::move(vals));
}

Ext log_alpha(const Fp& alpha, const Ext& x) {
  const std::uint64_t p = alpha.modulus();
  if (x.modulus() != p)
    throw ModulusMismatch("log argument modulus " + std::to_string(x.modulus()) +
                          " does not match " + std::to_string(p));
  if (!is_primitive(alpha))
    throw InvalidBase("log base " + alpha.str() + " is not primitive mod " +
                      std::to_string(p));
  if (x.is_minus_infinity())
    throw Undefined("log(-inf) is undefined");
  if (x.finite().is_zero()) return Ext::minus_infinity(PrimeModulus(p));
  Fp acc = Fp::one(p);
  for (std::uint64_t e = 0; e < p - 1; ++e) {
    if (acc == x.finite()) return Ext(Fp::raw(e, p));
    acc *= alpha;
  }
  throw Error("discrete log search failed for " + x.finite().str());
}

ExtTable log_table(const Fp& alpha) {
  const std::uint64_t p = alpha.modulus();
  const PrimeModulus m(p);
  if (!is_primitive(alpha))
    throw InvalidBase("log base " + alpha.str() + " is not primitive mod " +
                      std::to_string(p));
  std::vector<Ext> vals(p, Ext::minus_infinity(m));
  Fp acc = Fp::one(p);
  for (std::uint64_t e = 0; e < p - 1; ++e) {
    vals[acc.value()] = Ext(Fp::raw(e, p));
    acc *= alpha;
  }
  return ExtTable(DomainDescriptor::full_field(m), std::move(vals));
}

ExtTable reciprocal_table(PrimeModulus m) {
  const std::uint64_t p = m.value();
  std::vector<Ext> vals;
  vals.reserve(p);
  vals.push_back(Ext::minus_infinity(m));
  for (std::uint64_t x = 1; x < p; ++x)
    vals.push_back(Ext(Fp::raw(x, p).inv()));
  return ExtTable(DomainDescriptor::full_field(m), std::move(vals));
}

}  // namespace ffcalc
