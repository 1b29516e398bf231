// Functions over GF(p) given by their value tables.
//
// A DomainDescriptor is either the full field {0..p-1} or the index ring
// {0..N-1} used when tabulating against powers of an element of order N.
// Values may be field elements, Gaussian elements, or extended elements
// (-inf appears in the logarithm and reciprocal tables).
#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ffcalc/error.hpp"
#include "ffcalc/extended.hpp"
#include "ffcalc/fp.hpp"
#include "ffcalc/gaussian.hpp"

namespace ffcalc {

class DomainDescriptor {
 public:
  enum class Kind { FullField, IndexRing };

  static DomainDescriptor full_field(PrimeModulus m) {
    return DomainDescriptor(Kind::FullField, m.value(), m.value());
  }

  // Index ring {0..n-1}; n must be positive and at most p.
  static DomainDescriptor index_ring(PrimeModulus m, std::uint64_t n) {
    if (n == 0 || n > m.value())
      throw DomainMismatch("index ring size " + std::to_string(n) +
                           " out of range for p = " + std::to_string(m.value()));
    return DomainDescriptor(Kind::IndexRing, m.value(), n);
  }

  Kind kind() const { return kind_; }
  std::uint64_t modulus() const { return p_; }
  std::uint64_t size() const { return size_; }

  bool operator==(const DomainDescriptor& o) const {
    return kind_ == o.kind_ && p_ == o.p_ && size_ == o.size_;
  }
  bool operator!=(const DomainDescriptor& o) const { return !(*this == o); }

 private:
  DomainDescriptor(Kind k, std::uint64_t p, std::uint64_t n)
      : kind_(k), p_(p), size_(n) {}

  Kind kind_;
  std::uint64_t p_;
  std::uint64_t size_;
};

template <typename V>
class TabulatedFunction {
 public:
  TabulatedFunction(DomainDescriptor domain, std::vector<V> values)
      : domain_(domain), values_(std::move(values)) {
    if (values_.size() != domain_.size())
      throw DomainMismatch("expected " + std::to_string(domain_.size()) +
                           " values, got " + std::to_string(values_.size()));
    for (const V& v : values_)
      if (v.modulus() != domain_.modulus())
        throw ModulusMismatch("value modulus " + std::to_string(v.modulus()) +
                              " does not match " +
                              std::to_string(domain_.modulus()));
  }

  const DomainDescriptor& domain() const { return domain_; }
  std::uint64_t modulus() const { return domain_.modulus(); }
  std::uint64_t size() const { return domain_.size(); }
  const std::vector<V>& values() const { return values_; }

  const V& at(std::uint64_t i) const {
    if (i >= values_.size())
      throw IndexOutOfRange("index " + std::to_string(i) +
                            " outside domain of size " +
                            std::to_string(values_.size()));
    return values_[i];
  }

  bool operator==(const TabulatedFunction& o) const {
    return domain_ == o.domain_ && values_ == o.values_;
  }
  bool operator!=(const TabulatedFunction& o) const { return !(*this == o); }

 private:
  DomainDescriptor domain_;
  std::vector<V> values_;
};

using FpTable = TabulatedFunction<Fp>;
using GaussianTable = TabulatedFunction<Gaussian>;
using ExtTable = TabulatedFunction<Ext>;

// Splits a full-field table into its odd and even parts,
//   o(x) = (f(x) - f(-x)) / 2,   e(x) = (f(x) + f(-x)) / 2,
// so that f = o + e with o(-x) = -o(x) and e(-x) = e(x).
std::pair<FpTable, FpTable> parity_decompose(const FpTable& f);

// (outer . inner)(x) = outer(inner(x)); inner values index outer's domain,
// reduced mod N when outer lives on an index ring.
template <typename V>
TabulatedFunction<V> compose(const TabulatedFunction<V>& outer,
                             const FpTable& inner) {
  if (outer.modulus() != inner.modulus())
    throw DomainMismatch("composition across moduli " +
                         std::to_string(outer.modulus()) + " and " +
                         std::to_string(inner.modulus()));
  std::vector<V> out;
  out.reserve(inner.size());
  for (std::uint64_t x = 0; x < inner.size(); ++x) {
    std::uint64_t v = inner.at(x).value();
    if (outer.domain().kind() == DomainDescriptor::Kind::IndexRing)
      v %= outer.domain().size();
    out.push_back(outer.at(v));
  }
  return TabulatedFunction<V>(inner.domain(), std::move(out));
}

// Inverse under composition: g with g(f(x)) = x. Throws NotBijective when
// the value table is not a permutation of the domain.
FpTable invert_function(const FpTable& f);

// Identity table on a domain.
FpTable identity_table(DomainDescriptor domain);

}  // namespace ffcalc
