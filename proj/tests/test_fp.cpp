#include <cstdint>

#include "doctest.h"
#include "ffcalc/error.hpp"
#include "ffcalc/extended.hpp"
#include "ffcalc/fp.hpp"
#include "helpers.hpp"

using namespace ffcalc;
using namespace ffcalc::testing;

TEST_CASE("modulus validation accepts odd primes only") {
  CHECK_NOTHROW(PrimeModulus(3));
  CHECK_NOTHROW(PrimeModulus(5));
  CHECK_NOTHROW(PrimeModulus(97));
  CHECK_NOTHROW(PrimeModulus(2147483647));  // 2^31 - 1 is prime

  CHECK_THROWS_AS(PrimeModulus(0), InvalidModulus);
  CHECK_THROWS_AS(PrimeModulus(1), InvalidModulus);
  CHECK_THROWS_AS(PrimeModulus(2), InvalidModulus);
  CHECK_THROWS_AS(PrimeModulus(4), InvalidModulus);
  CHECK_THROWS_AS(PrimeModulus(9), InvalidModulus);
  CHECK_THROWS_AS(PrimeModulus(91), InvalidModulus);  // 7 * 13
  CHECK_THROWS_AS(PrimeModulus(2147483648ULL), InvalidModulus);
}

TEST_CASE("construction reduces to the canonical residue") {
  CHECK(F(7, 5).value() == 2);
  CHECK(F(-1, 5).value() == 4);
  CHECK(F(-7, 5).value() == 3);
  CHECK(F(0, 5).value() == 0);
  CHECK(F(-10, 5).value() == 0);
}

TEST_CASE("field arithmetic over GF(5)") {
  CHECK((F(3, 5) + F(4, 5)).value() == 2);
  CHECK((F(1, 5) - F(3, 5)).value() == 3);
  CHECK((F(3, 5) * F(4, 5)).value() == 2);
  CHECK((F(2, 5) / F(3, 5)).value() == 4);  // 3 * 4 = 12 = 2
  CHECK((-F(2, 5)).value() == 3);

  Fp a = F(4, 5);
  a += F(3, 5);
  CHECK(a.value() == 2);
  a *= F(2, 5);
  CHECK(a.value() == 4);
  a -= F(1, 5);
  CHECK(a.value() == 3);
  a /= F(3, 5);
  CHECK(a.value() == 1);
}

TEST_CASE("mixed moduli are rejected") {
  CHECK_THROWS_AS(F(1, 5) + F(1, 7), ModulusMismatch);
  CHECK_THROWS_AS(F(1, 5) * F(1, 7), ModulusMismatch);
  CHECK_THROWS_AS(F(1, 5) / F(1, 7), ModulusMismatch);
}

TEST_CASE("reciprocals over GF(5)") {
  // 1/1=1, 1/2=3, 1/3=2, 1/4=4
  CHECK(F(1, 5).inv().value() == 1);
  CHECK(F(2, 5).inv().value() == 3);
  CHECK(F(3, 5).inv().value() == 2);
  CHECK(F(4, 5).inv().value() == 4);
  CHECK_THROWS_AS(F(0, 5).inv(), DivisionByZero);
  CHECK_THROWS_AS(F(1, 5) / F(0, 5), DivisionByZero);
}

TEST_CASE("inverse is a self-map on nonzero elements") {
  for (std::uint64_t p : {3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 101ULL}) {
    for (std::uint64_t v = 1; v < p; ++v) {
      Fp a = Fp::raw(v, p);
      CHECK((a * a.inv()).value() == 1);
    }
  }
}

TEST_CASE("exhaustive power identities") {
  // a^(p-1) = 1 for a != 0 and a^p = a for every a.
  for (std::uint64_t p : {3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
    for (std::uint64_t v = 0; v < p; ++v) {
      Fp a = Fp::raw(v, p);
      if (v != 0) CHECK(a.pow(static_cast<std::int64_t>(p - 1)).value() == 1);
      CHECK(a.pow(static_cast<std::int64_t>(p)).value() == v);
    }
  }
}

TEST_CASE("power edge cases") {
  CHECK(F(0, 5).pow(0).value() == 1);  // 0^0 is taken to be 1
  CHECK(F(3, 5).pow(0).value() == 1);
  CHECK(F(2, 5).pow(-1).value() == 3);
  CHECK(F(2, 5).pow(-2).value() == 4);  // (1/2)^2 = 3^2 = 9 = 4
  CHECK_THROWS_AS(F(0, 5).pow(-1), DivisionByZero);
}

TEST_CASE("multiplicative orders over GF(5) and GF(7)") {
  CHECK(element_order(F(1, 5)) == 1);
  CHECK(element_order(F(2, 5)) == 4);
  CHECK(element_order(F(3, 5)) == 4);
  CHECK(element_order(F(4, 5)) == 2);
  CHECK(element_order(F(3, 7)) == 6);
  CHECK(element_order(F(2, 7)) == 3);
  CHECK_THROWS_AS(element_order(F(0, 5)), ZeroHasNoOrder);

  CHECK(is_primitive(F(2, 5)));
  CHECK(!is_primitive(F(4, 5)));
  CHECK(is_primitive(F(3, 7)));
  CHECK(!is_primitive(F(2, 7)));
}

TEST_CASE("order divides the group order") {
  for (std::uint64_t p : {3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
    std::uint64_t primitive_count = 0;
    for (std::uint64_t v = 1; v < p; ++v) {
      std::uint64_t n = element_order(Fp::raw(v, p));
      CHECK((p - 1) % n == 0);
      if (n == p - 1) ++primitive_count;
    }
    CHECK(primitive_count > 0);  // the group is cyclic
  }
}

TEST_CASE("balanced representatives") {
  CHECK(F(0, 7).balanced() == 0);
  CHECK(F(3, 7).balanced() == 3);
  CHECK(F(4, 7).balanced() == -3);
  CHECK(F(6, 7).balanced() == -1);
  CHECK(F(2, 5).balanced() == 2);
  CHECK(F(3, 5).balanced() == -2);

  for (std::uint64_t p : {5ULL, 7ULL, 13ULL}) {
    const std::int64_t half = static_cast<std::int64_t>((p - 1) / 2);
    for (std::uint64_t v = 0; v < p; ++v) {
      std::int64_t b = Fp::raw(v, p).balanced();
      CHECK(b >= -half);
      CHECK(b <= half);
      CHECK(F(b, p).value() == v);  // round trip
    }
  }
}

TEST_CASE("half-way constant pi") {
  CHECK(pi_const(PrimeModulus(5)).value() == 2);
  CHECK(pi_const(PrimeModulus(7)).value() == 3);
  CHECK(pi_const(PrimeModulus(13)).value() == 6);
  // pi + pi = p - 1 = -1
  CHECK((pi_const(PrimeModulus(7)) + pi_const(PrimeModulus(7))).value() == 6);
}

TEST_CASE("quadratic residue detection via the Euler criterion") {
  // GF(13): squares are 1,3,4,9,10,12.
  const U squares{1, 3, 4, 9, 10, 12};
  for (std::uint64_t v = 1; v < 13; ++v) {
    QuadraticResidue qr = quadratic_residue(Fp::raw(v, 13));
    bool expect = false;
    for (std::uint64_t s : squares) expect |= (s == v);
    CHECK(qr.is_residue == expect);
    if (qr.is_residue) {
      REQUIRE(qr.root.has_value());
      CHECK((*qr.root * *qr.root).value() == v);
    } else {
      CHECK(!qr.root.has_value());
    }
  }
}

TEST_CASE("minus one is a square exactly when p = 1 mod 4") {
  for (std::uint64_t p : small_odd_primes(100)) {
    QuadraticResidue qr = quadratic_residue(F(-1, p));
    CHECK(qr.is_residue == (p % 4 == 1));
  }
  // Concrete root for GF(5): 2^2 = 4 = -1, and 2 is the smaller of {2, 3}.
  QuadraticResidue qr5 = quadratic_residue(F(-1, 5));
  REQUIRE(qr5.root.has_value());
  CHECK(qr5.root->value() == 2);
}

TEST_CASE("residue counting") {
  for (std::uint64_t p : {5ULL, 7ULL, 11ULL, 13ULL, 17ULL}) {
    std::uint64_t residues = 0;
    for (std::uint64_t v = 1; v < p; ++v)
      if (quadratic_residue(Fp::raw(v, p)).is_residue) ++residues;
    CHECK(residues == (p - 1) / 2);
  }
}

TEST_CASE("zero is its own square root") {
  QuadraticResidue qr = quadratic_residue(F(0, 7));
  CHECK(qr.is_residue);
  REQUIRE(qr.root.has_value());
  CHECK(qr.root->value() == 0);
}

TEST_CASE("printing") {
  CHECK(F(3, 7).str() == "3");
  CHECK(F(10, 7).str() == "3");
}

TEST_CASE("extended arithmetic with the minus-infinity symbol") {
  const PrimeModulus m(5);
  const Ext ninf = Ext::minus_infinity(m);
  const Ext three = Ext(F(3, 5));
  const Ext zero = Ext(F(0, 5));

  CHECK(ninf.is_minus_infinity());
  CHECK(!three.is_minus_infinity());
  CHECK(three.finite().value() == 3);
  CHECK_THROWS_AS(ninf.finite(), Undefined);

  SUBCASE("addition absorbs") {
    CHECK((three + ninf).is_minus_infinity());
    CHECK((ninf + three).is_minus_infinity());
    CHECK((ninf + ninf).is_minus_infinity());
    CHECK((three + Ext(F(4, 5))).finite().value() == 2);
  }

  SUBCASE("multiplication absorbs on one side only") {
    CHECK((three * ninf).is_minus_infinity());
    CHECK((ninf * three).is_minus_infinity());
    CHECK((zero * ninf).is_minus_infinity());
    CHECK_THROWS_AS(ninf * ninf, Undefined);
    CHECK((three * Ext(F(4, 5))).finite().value() == 2);
  }

  SUBCASE("division") {
    CHECK((three / ninf).finite().value() == 0);
    CHECK((zero / ninf).finite().value() == 0);
    CHECK_THROWS_AS(ninf / ninf, Undefined);
    CHECK((ninf / three).is_minus_infinity());
    CHECK_THROWS_AS(ninf / zero, DivisionByZero);
    CHECK_THROWS_AS(three / zero, DivisionByZero);
    CHECK((three / Ext(F(2, 5))).finite().value() == 4);
  }

  SUBCASE("equality and printing") {
    CHECK(ninf == Ext::minus_infinity(m));
    CHECK(ninf != three);
    CHECK(three == Ext(F(3, 5)));
    CHECK(ninf.str() == "-inf");
    CHECK(three.str() == "3");
  }
}
