#include "ffcalc/tabulated.hpp"

namespace ffcalc {

std::pair<FpTable, FpTable> parity_decompose(const FpTable& f) {
  if (f.domain().kind() != DomainDescriptor::Kind::FullField)
    throw DomainMismatch("parity split needs the full field domain");
  const std::uint64_t p = f.modulus();
  const Fp half = Fp::raw(2 % p, p).inv();
  std::vector<Fp> odd, even;
  odd.reserve(p);
  even.reserve(p);
  for (std::uint64_t x = 0; x < p; ++x) {
    // -x mod p indexes f(-x); x == 0 maps to itself.
    const Fp fx = f.at(x);
    const Fp fmx = f.at(x == 0 ? 0 : p - x);
    odd.push_back((fx - fmx) * half);
    even.push_back((fx + fmx) * half);
  }
  return {FpTable(f.domain(), std::move(odd)),
          FpTable(f.domain(), std::move(even))};
}

FpTable invert_function(const FpTable& f) {
  const std::uint64_t n = f.size();
  const std::uint64_t p = f.modulus();
  std::vector<bool> seen(n, false);
  std::vector<Fp> inv(n, Fp::zero(p));
  for (std::uint64_t x = 0; x < n; ++x) {
    const std::uint64_t v = f.at(x).value();
    if (v >= n)
      throw NotBijective("value " + std::to_string(v) +
                         " falls outside the domain of size " +
                         std::to_string(n));
    if (seen[v])
      throw NotBijective("value " + std::to_string(v) + " repeats");
    seen[v] = true;
    inv[v] = Fp::raw(x, p);
  }
  return FpTable(f.domain(), std::move(inv));
}

FpTable identity_table(DomainDescriptor domain) {
  std::vector<Fp> vals;
  vals.reserve(domain.size());
  for (std::uint64_t x = 0; x < domain.size(); ++x)
    vals.push_back(Fp::raw(x, domain.modulus()));
  return FpTable(domain, std::move(vals));
}

}  // namespace ffcalc
