#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "annular/laurent.hpp"

using namespace annular;

namespace {

Laurent A(int k = 1) { return Laurent::var(VA, k); }

Laurent random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> nterms(0, 4), expo(-3, 3), coef(-5, 5);
  Laurent p;
  int n = nterms(rng);
  for (int i = 0; i < n; ++i)
    p += Laurent::monomial(coef(rng), expo(rng), expo(rng) & 1, expo(rng),
                           0, 0);
  return p;
}

}  // namespace

TEST_CASE("addition: cancellation, identity, inverse") {
  CHECK((A() + A(-1)) + (-A(-1)) == A());
  Laurent p = parse_laurent("2A^3h - t");
  CHECK(p + Laurent() == p);
  Laurent q = parse_laurent("A^2 - A^-2");
  CHECK((q + parse_laurent("A^-2 - A^2")).is_zero());
}

TEST_CASE("multiplication: difference of squares, monomials, identity") {
  CHECK((A() + A(-1)) * (A() - A(-1)) == parse_laurent("A^2 - A^-2"));
  Laurent ht2 = Laurent::var(VH) * Laurent::var(VT, 2);
  CHECK(ht2.term_count() == 1);
  CHECK(ht2.coeff({0, 1, 2, 0, 0}) == 1);
  Laurent p = parse_laurent("3A - 2h + t^-1");
  CHECK(p * Laurent::monomial(1) == p);
}

TEST_CASE("ring axioms on randomized polynomials") {
  std::mt19937 rng(20260823);
  for (int it = 0; it < 200; ++it) {
    Laurent p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
    CHECK(p + q == q + p);
    CHECK(p * q == q * p);
    CHECK((p + q) + r == p + (q + r));
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
  }
}

TEST_CASE("mod2 reduction") {
  CHECK(parse_laurent("2A").reduce_mod2().is_zero());
  Laurent p = parse_laurent("3A + 2h - 5t");
  CHECK(p.reduce_mod2() == parse_laurent("A + t"));
  CHECK(p.reduce_mod2().reduce_mod2() == p.reduce_mod2());
}

TEST_CASE("a4 reduction folds the A exponent into 0..3") {
  CHECK(A(-17).reduce_a4() == A(3));
  Laurent p =
      parse_laurent("A^-8 + A^-6 + A^-5 + A^-4 + A^-1 + 1 + A + A^3 + A^4");
  CHECK(p.reduce_a4().reduce_mod2() == parse_laurent("A + A^2 + A^3"));
}

TEST_CASE("a4 reduction is a ring homomorphism on samples") {
  std::mt19937 rng(7);
  for (int it = 0; it < 100; ++it) {
    Laurent p = random_poly(rng), q = random_poly(rng);
    CHECK((p * q).reduce_a4() ==
          (p.reduce_a4() * q.reduce_a4()).reduce_a4());
    CHECK((p + q).reduce_a4() == (p.reduce_a4() + q.reduce_a4()).reduce_a4());
  }
}

TEST_CASE("invert_A and helpers") {
  Laurent p = parse_laurent("A^3h - 2A^-1t");
  CHECK(p.invert_A() == parse_laurent("A^-3h - 2At"));
  CHECK(p.uses(VH));
  CHECK(!p.uses(VR));
  CHECK(!p.uses_only({VA, VH}));
  CHECK(p.uses_only({VA, VH, VT}));
  CHECK(p.min_exp(VA) == -1);
  CHECK(p.max_exp(VA) == 3);
  CHECK(p.coeff_of(VT, 1) == parse_laurent("-2A^-1"));
}

TEST_CASE("parser handles precedence, exponents and juxtaposition") {
  CHECK(parse_laurent("(A + A^-1)(A - A^-1)") == parse_laurent("A^2 - A^-2"));
  CHECK(parse_laurent("-2*A^-17") == Laurent::monomial(-2, -17));
  CHECK(parse_laurent("h t^2") == Laurent::monomial(1, 0, 1, 2));
  CHECK(parse_laurent("0").is_zero());
  CHECK_THROWS(parse_laurent("A^"));
  CHECK_THROWS(parse_laurent("x"));
}

TEST_CASE("deterministic string form") {
  Laurent p = parse_laurent("A^3ht - 2A^-17ht^2");
  CHECK(parse_laurent(p.str()) == p);
}
