#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "annular/ratfun.hpp"

using namespace annular;

namespace {

Laurent L(const std::string& s) { return parse_laurent(s); }

// Build a dense polynomial from low-to-high integer coefficients.
UniPoly up(std::vector<long> coeffs) {
  std::vector<Int> c(coeffs.begin(), coeffs.end());
  return UniPoly(c);
}

// Apply a matrix over Laurent-in-A to a vector of Laurent entries.
std::vector<Laurent> mat_apply(const std::vector<std::vector<Laurent>>& m,
                               const std::vector<Laurent>& v) {
  std::vector<Laurent> out(m.size());
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < v.size(); ++c)
      out[r] += m[r][c] * v[c];
  return out;
}

}  // namespace

TEST_CASE("unipoly gcd and exact division") {
  // (A+1)^2 (A-2) and (A+1)(A+3) share the primitive factor A+1.
  UniPoly a = up({-2, -3, 0, 1});  // (A+1)^2(A-2)
  UniPoly b = up({3, 4, 1});            // (A+1)(A+3)
  UniPoly g = gcd(a, b);
  CHECK(g == up({1, 1}));
  CHECK(a.exact_div(g) == up({-2, -1, 1}));
  CHECK_THROWS(b.exact_div(up({0, 1})));
}

TEST_CASE("ratfn arithmetic reduces fractions") {
  RatFn half(UniPoly(Int(1)), UniPoly(Int(2)));
  CHECK(half + half == RatFn(UniPoly(Int(1))));
  RatFn x(up({0, 1}));
  CHECK((x / x) == RatFn(UniPoly(Int(1))));
  CHECK((x - x).is_zero());
}

TEST_CASE("kernel: full-rank 1x1 has empty basis") {
  CHECK(kernel_basis({{L("1")}}).empty());
  CHECK(matrix_rank({{L("1")}}) == 1);
}

TEST_CASE("kernel of [A, -1] is spanned by (1, A)") {
  auto basis = kernel_basis({{L("A"), L("-1")}});
  REQUIRE(basis.size() == 1);
  // Normalize direction: entries are (c, cA) for a unit c.
  const Laurent& c = basis[0][0];
  CHECK(basis[0][1] == c * L("A"));
  CHECK(!c.is_zero());
  CHECK(matrix_rank({{L("A"), L("-1")}}) == 1);
}

TEST_CASE("kernel vectors annihilate the matrix exactly") {
  std::vector<std::vector<Laurent>> m = {
      {L("A^2-1"), L("A+1"), L("0"), L("A")},
      {L("A-1"), L("1"), L("A^3"), L("1")},
      {L("A^3-A"), L("A^2+A"), L("0"), L("A^2")},  // A times row 0
  };
  auto basis = kernel_basis(m);
  CHECK(basis.size() == 2);  // rank 2 (row 2 dependent), 4 columns
  for (const auto& v : basis)
    for (const Laurent& entry : mat_apply(m, v)) CHECK(entry.is_zero());
  CHECK(matrix_rank(m) == 2);
}

TEST_CASE("kernel on randomized rank-deficient matrices") {
  std::mt19937 rng(42);
  std::uniform_int_distribution<int> coef(-3, 3), expo(0, 2);
  auto rand_entry = [&] {
    Laurent p;
    for (int t = 0; t < 2; ++t)
      p += Laurent::monomial(coef(rng), expo(rng));
    return p;
  };
  for (int it = 0; it < 20; ++it) {
    // Build a 4x4 matrix whose last column is a combination of the others.
    std::vector<std::vector<Laurent>> m(4, std::vector<Laurent>(4));
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 3; ++c) m[r][c] = rand_entry();
    Laurent k0 = rand_entry(), k1 = rand_entry();
    for (int r = 0; r < 4; ++r) m[r][3] = m[r][0] * k0 + m[r][1] * k1;
    auto basis = kernel_basis(m);
    CHECK(!basis.empty());
    for (const auto& v : basis)
      for (const Laurent& entry : mat_apply(m, v)) CHECK(entry.is_zero());
  }
}
