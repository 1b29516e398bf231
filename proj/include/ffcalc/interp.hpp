// MacLaurin series of tabulated functions by interpolation.
//
// Every function on n distinct nodes of GF(p) is a polynomial of degree at
// most n-1, and that polynomial is unique. Two independent routes are
// provided: classical Lagrange interpolation, and direct solution of the
// Vandermonde system with the constant term pinned to f(0). Values may be
// field elements or Gaussian elements; nodes are always field elements.
#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ffcalc/error.hpp"
#include "ffcalc/polynomial.hpp"
#include "ffcalc/tabulated.hpp"

namespace ffcalc {

// Lagrange interpolation through (node, value) pairs with distinct nodes.
template <typename S>
Polynomial<S> lagrange_interpolate(
    const std::vector<std::pair<Fp, S>>& points) {
  if (points.empty()) throw DomainMismatch("no interpolation points");
  const std::uint64_t p = points[0].first.modulus();
  for (const auto& [x, y] : points) {
    if (x.modulus() != p || y.modulus() != p)
      throw ModulusMismatch("interpolation points mix moduli");
  }
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (points[i].first == points[j].first)
        throw DuplicateNode("node " + points[i].first.str() + " repeats");

  const std::size_t n = points.size();
  std::vector<S> acc(n, S::zero(p));
  for (std::size_t i = 0; i < n; ++i) {
    // Basis numerator prod_{j != i} (x - x_j) as a field polynomial.
    std::vector<Fp> num{Fp::one(p)};
    Fp denom = Fp::one(p);
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const Fp xj = points[j].first;
      std::vector<Fp> next(num.size() + 1, Fp::zero(p));
      for (std::size_t d = 0; d < num.size(); ++d) {
        next[d + 1] += num[d];
        next[d] -= num[d] * xj;
      }
      num = std::move(next);
      denom *= points[i].first - xj;
    }
    const Fp dinv = denom.inv();
    for (std::size_t d = 0; d < num.size(); ++d)
      acc[d] += points[i].second * (num[d] * dinv);
  }
  return Polynomial<S>(PrimeModulus(p), std::move(acc));
}

// Lagrange route applied to a table's domain enumeration 0..N-1.
template <typename V>
Polynomial<V> lagrange_interpolate(const TabulatedFunction<V>& f) {
  std::vector<std::pair<Fp, V>> points;
  points.reserve(f.size());
  for (std::uint64_t x = 0; x < f.size(); ++x)
    points.emplace_back(Fp::raw(x, f.modulus()), f.at(x));
  return lagrange_interpolate(points);
}

// Vandermonde route: a_0 = f(0), then Gaussian elimination on the remaining
// N-1 equations sum_d x^d a_d = f(x) - f(0) for x = 1..N-1.
template <typename V>
Polynomial<V> vandermonde_solve(const TabulatedFunction<V>& f) {
  const std::uint64_t p = f.modulus();
  const std::uint64_t n = f.size();
  std::vector<V> coeffs(n, V::zero(p));
  coeffs[0] = f.at(0);
  if (n == 1) return Polynomial<V>(PrimeModulus(p), std::move(coeffs));

  const std::uint64_t m = n - 1;
  std::vector<std::vector<Fp>> a(m, std::vector<Fp>(m, Fp::zero(p)));
  std::vector<V> b(m, V::zero(p));
  for (std::uint64_t r = 0; r < m; ++r) {
    const Fp x = Fp::raw(r + 1, p);
    Fp pw = x;
    for (std::uint64_t c = 0; c < m; ++c) {
      a[r][c] = pw;
      pw *= x;
    }
    b[r] = f.at(r + 1) - coeffs[0];
  }

  for (std::uint64_t col = 0; col < m; ++col) {
    std::uint64_t piv = col;
    while (piv < m && a[piv][col].is_zero()) ++piv;
    if (piv == m)
      throw SingularSystem("no nonzero pivot in column " + std::to_string(col));
    std::swap(a[col], a[piv]);
    std::swap(b[col], b[piv]);
    const Fp pinv = a[col][col].inv();
    for (auto& e : a[col]) e *= pinv;
    b[col] = b[col] * pinv;
    for (std::uint64_t r = 0; r < m; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      const Fp factor = a[r][col];
      for (std::uint64_t c = 0; c < m; ++c) a[r][c] -= factor * a[col][c];
      b[r] = b[r] - b[col] * factor;
    }
  }
  for (std::uint64_t d = 0; d < m; ++d) coeffs[d + 1] = b[d];
  return Polynomial<V>(PrimeModulus(p), std::move(coeffs));
}

// Canonical MacLaurin series of a table (Vandermonde route; the Lagrange
// route gives the same polynomial and the tests hold both to that).
template <typename V>
Polynomial<V> maclaurin(const TabulatedFunction<V>& f) {
  return vandermonde_solve(f);
}

// Evaluates a polynomial over a domain enumeration, giving back a table.
inline FpTable tabulate(const FpPolynomial& a, DomainDescriptor domain) {
  if (a.modulus() != domain.modulus())
    throw DomainMismatch("polynomial modulus " + std::to_string(a.modulus()) +
                         " does not match domain modulus " +
                         std::to_string(domain.modulus()));
  std::vector<Fp> vals;
  vals.reserve(domain.size());
  for (std::uint64_t x = 0; x < domain.size(); ++x)
    vals.push_back(a.eval(Fp::raw(x, a.modulus())));
  return FpTable(domain, std::move(vals));
}

}  // namespace ffcalc
