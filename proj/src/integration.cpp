#include "ffcalc/integration.hpp"

#include <string>

#include "ffcalc/interp.hpp"

namespace ffcalc {

namespace {

void require_full_field(const FpTable& f, const char* what) {
  if (f.domain().kind() != DomainDescriptor::Kind::FullField)
    throw DomainMismatch(std::string(what) + " needs the full field domain");
}

// x^n with 0^0 = 1.
Fp power(std::uint64_t x, std::uint64_t n, std::uint64_t p) {
  return Fp::raw(x % p, p).pow(static_cast<std::int64_t>(n));
}

}  // namespace

Fp power_sum(PrimeModulus m, std::uint64_t n) {
  const std::uint64_t p = m.value();
  if (n > p - 1)
    throw IndexOutOfRange("exponent " + std::to_string(n) + " exceeds p-1");
  Fp acc = Fp::zero(p);
  for (std::uint64_t x = 0; x < p; ++x) acc += power(x, n, p);
  return acc;
}

std::vector<std::vector<Fp>> power_sum_table(PrimeModulus m,
                                             std::uint64_t n_max) {
  const std::uint64_t p = m.value();
  if (n_max > p - 1)
    throw IndexOutOfRange("upper limit " + std::to_string(n_max) +
                          " exceeds p-1");
  std::vector<std::vector<Fp>> rows;
  std::vector<Fp> acc(p, Fp::zero(p));
  for (std::uint64_t upper = 0; upper <= n_max; ++upper) {
    for (std::uint64_t i = 0; i < p; ++i) acc[i] += power(upper, i, p);
    rows.push_back(acc);
  }
  return rows;
}

Fp definite_integral(const FpTable& f) {
  require_full_field(f, "definite integral");
  Fp acc = Fp::zero(f.modulus());
  for (const Fp& v : f.values()) acc += v;
  return acc;
}

Fp integral_via_coefficient(const FpPolynomial& a) {
  const std::uint64_t p = a.modulus();
  if (a.ring() != Ring::Plain)
    throw WrongRing("coefficient integral is defined on the plain ring");
  if (a.degree() > p - 1)
    throw IndexOutOfRange("degree " + std::to_string(a.degree()) +
                          " exceeds p-1");
  return a.coeff(p - 1) * Fp::raw(p - 1, p);
}

Fp partial_integral(const FpTable& f, std::uint64_t n) {
  require_full_field(f, "partial integral");
  if (n > f.modulus() - 1)
    throw IndexOutOfRange("upper limit " + std::to_string(n) + " exceeds p-1");
  Fp acc = Fp::zero(f.modulus());
  for (std::uint64_t x = 0; x <= n; ++x) acc += f.at(x);
  return acc;
}

InnerProductReport inner_product_report(const FpTable& f, const FpTable& g) {
  require_full_field(f, "inner product");
  require_full_field(g, "inner product");
  if (f.modulus() != g.modulus())
    throw DomainMismatch("inner product across moduli " +
                         std::to_string(f.modulus()) + " and " +
                         std::to_string(g.modulus()));
  const std::uint64_t p = f.modulus();

  Fp direct = Fp::zero(p);
  for (std::uint64_t x = 0; x < p; ++x) direct += f.at(x) * g.at(x);

  const std::vector<Fp> a = maclaurin(f).padded(p);
  const std::vector<Fp> b = maclaurin(g).padded(p);
  Fp pairing = Fp::zero(p);
  for (std::uint64_t i = 0; i < p; ++i) pairing += a[i] * b[p - 1 - i];
  const Fp pm1 = Fp::raw(p - 1, p);
  const Fp aliasing = pm1 * a[p - 1] * b[p - 1];
  return InnerProductReport{direct, pm1 * pairing + aliasing, pm1 * pairing,
                            aliasing};
}

Fp inner_product(const FpTable& f, const FpTable& g) {
  return inner_product_report(f, g).coefficient;
}

InvertibilityCheck invertibility_necessary_check(const FpTable& f) {
  require_full_field(f, "invertibility check");
  const std::uint64_t p = f.modulus();
  const FpPolynomial a = maclaurin(f);
  const bool top_zero = a.coeff(p - 1).is_zero();
  std::vector<bool> seen(p, false);
  bool bijection = true;
  for (const Fp& v : f.values()) {
    if (seen[v.value()]) bijection = false;
    seen[v.value()] = true;
  }
  return InvertibilityCheck{top_zero, bijection};
}

}  // namespace ffcalc
