#include <cstdint>
#include <vector>

#include "doctest.h"
#include "ffcalc/error.hpp"
#include "ffcalc/fp.hpp"
#include "ffcalc/gaussian.hpp"
#include "helpers.hpp"

using namespace ffcalc;
using namespace ffcalc::testing;

namespace {

Gaussian G(std::int64_t re, std::int64_t im, std::uint64_t p) {
  return Gaussian(F(re, p), F(im, p));
}

std::vector<Gaussian> all_elements(std::uint64_t p) {
  std::vector<Gaussian> out;
  for (std::uint64_t a = 0; a < p; ++a)
    for (std::uint64_t b = 0; b < p; ++b)
      out.push_back(Gaussian(Fp::raw(a, p), Fp::raw(b, p)));
  return out;
}

}  // namespace

TEST_CASE("construction and embedding") {
  Gaussian z = G(2, 3, 7);
  CHECK(z.re().value() == 2);
  CHECK(z.im().value() == 3);

  Gaussian real = Gaussian(F(4, 7));
  CHECK(real.re().value() == 4);
  CHECK(real.im().value() == 0);

  CHECK_THROWS_AS(Gaussian(F(1, 5), F(1, 7)), ModulusMismatch);
}

TEST_CASE("j squares to minus one") {
  for (std::uint64_t p : {3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
    Gaussian j = Gaussian::j(p);
    Gaussian jj = j * j;
    CHECK(jj.re().value() == p - 1);
    CHECK(jj.im().value() == 0);
  }
}

TEST_CASE("ring arithmetic over GF(7)") {
  Gaussian z = G(2, 3, 7);
  Gaussian w = G(2, -3, 7);

  // (2+j3)(2-j3) = 4 + 9 = 13 = 6 mod 7
  Gaussian prod = z * w;
  CHECK(prod.re().value() == 6);
  CHECK(prod.im().value() == 0);

  Gaussian sum = z + w;
  CHECK(sum.re().value() == 4);
  CHECK(sum.im().value() == 0);

  Gaussian diff = z - w;
  CHECK(diff.re().value() == 0);
  CHECK(diff.im().value() == 6);

  Gaussian neg = -z;
  CHECK(neg.re().value() == 5);
  CHECK(neg.im().value() == 4);

  CHECK(z.conj() == w);
  CHECK(z.norm().value() == 6);
  CHECK((z * z.conj()).re() == z.norm());
}

TEST_CASE("scaling by real elements") {
  Gaussian z = G(2, 3, 7);
  Gaussian doubled = z * F(2, 7);
  CHECK(doubled.re().value() == 4);
  CHECK(doubled.im().value() == 6);
  Gaussian halved = z / F(2, 7);
  CHECK((halved * F(2, 7)) == z);
  CHECK_THROWS_AS(z / F(0, 7), DivisionByZero);
}

TEST_CASE("GI(p) is a field exactly when p = 3 mod 4") {
  CHECK(G(1, 1, 3).field_mode());
  CHECK(G(1, 1, 7).field_mode());
  CHECK(G(1, 1, 11).field_mode());
  CHECK(!G(1, 1, 5).field_mode());
  CHECK(!G(1, 1, 13).field_mode());

  // Field mode coincides with -1 being a non-square.
  for (std::uint64_t p : small_odd_primes(60)) {
    bool fld = Gaussian::j(p).field_mode();
    CHECK(fld == !quadratic_residue(F(-1, p)).is_residue);
  }
}

TEST_CASE("division in field mode") {
  Gaussian z = G(2, 3, 7);
  CHECK((z / z) == Gaussian::one(7));

  // 1 / (0 + j2) = -j/2 = -j * 4 = j * 3: (j2)(j3) = -6 = 1 mod 7.
  Gaussian r = Gaussian::one(7) / G(0, 2, 7);
  CHECK(r.re().value() == 0);
  CHECK(r.im().value() == 3);

  CHECK_THROWS_AS(z / Gaussian::zero(7), DivisionByZero);
}

TEST_CASE("every nonzero element is invertible in field mode") {
  for (std::uint64_t p : {3ULL, 7ULL, 11ULL}) {
    for (const Gaussian& z : all_elements(p)) {
      if (z == Gaussian::zero(p)) {
        CHECK_THROWS_AS(z.inv(), DivisionByZero);
        continue;
      }
      CHECK((z * z.inv()) == Gaussian::one(p));
    }
  }
}

TEST_CASE("no zero divisors in field mode") {
  for (const Gaussian& z : all_elements(7)) {
    if (z == Gaussian::zero(7)) continue;
    CHECK(z.norm().value() != 0);
  }
}

TEST_CASE("formal mode allows ring operations but not division") {
  Gaussian z = G(1, 2, 5);
  Gaussian w = G(1, -2, 5);

  // (1+j2)(1-j2) = 1 + 4 = 5 = 0: zero divisors exist, so GI(5) is not a
  // field and general division has no meaning there.
  CHECK((z * w) == Gaussian::zero(5));
  CHECK(z.norm().value() == 0);
  CHECK_THROWS_AS(z / w, NotAField);
  CHECK_THROWS_AS(Gaussian::one(5) / G(0, 2, 5), NotAField);
  CHECK_THROWS_AS(z.inv(), NotAField);

  // Addition, multiplication and real scaling still work.
  CHECK((z + w) == G(2, 0, 5));
  CHECK((z * F(3, 5)) == G(3, 1, 5));
  CHECK((z / F(2, 5)) == G(3, 1, 5));  // 1/2 = 3 mod 5
}

TEST_CASE("ring axioms sampled exhaustively over GI(3)") {
  const auto elems = all_elements(3);
  for (const Gaussian& a : elems)
    for (const Gaussian& b : elems) {
      CHECK((a + b) == (b + a));
      CHECK((a * b) == (b * a));
      for (const Gaussian& c : elems) {
        CHECK(((a + b) + c) == (a + (b + c)));
        CHECK(((a * b) * c) == (a * (b * c)));
        CHECK((a * (b + c)) == (a * b + a * c));
      }
    }
}

TEST_CASE("printing") {
  CHECK(G(2, 3, 7).str() == "2+j3");
  CHECK(G(0, 3, 7).str() == "j3");
  CHECK(G(4, 0, 7).str() == "4");
  CHECK(G(0, 0, 7).str() == "0");
  CHECK(G(1, -2, 7).str() == "1+j5");
}
