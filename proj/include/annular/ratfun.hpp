// Exact linear algebra over the field of rational functions in A: dense
// univariate integer polynomials, their fraction field, and right-kernel
// computation for matrices whose entries are univariate Laurent polynomials.
#ifndef ANNULAR_RATFUN_HPP
#define ANNULAR_RATFUN_HPP

#include <vector>

#include "annular/laurent.hpp"

namespace annular {

// Dense polynomial in one variable over the integers; coeffs[i] is the
// coefficient of A^i and the leading coefficient is nonzero.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(Int c);
  explicit UniPoly(std::vector<Int> coeffs);

  // From a Laurent polynomial in A alone, shifted by A^shift_out so that the
  // lowest exponent becomes zero; *shift_out receives the applied shift.
  static UniPoly from_laurent(const Laurent& p, int* shift_out);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Int>& coeffs() const { return c_; }
  const Int& leading() const { return c_.back(); }

  bool operator==(const UniPoly& o) const { return c_ == o.c_; }

  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator-() const;
  UniPoly operator*(const UniPoly& o) const;
  // Exact division; throws if the remainder is nonzero.
  UniPoly exact_div(const UniPoly& o) const;

  // Content (gcd of coefficients, positive) and primitive part.
  Int content() const;
  UniPoly primitive() const;

  Laurent to_laurent(int shift = 0) const;

 private:
  void trim();
  std::vector<Int> c_;
};

// Positive-content primitive gcd via the primitive pseudo-remainder sequence.
UniPoly gcd(UniPoly a, UniPoly b);

// Reduced fraction of univariate polynomials; den is nonzero with positive
// leading coefficient, gcd(num, den) constant.
class RatFn {
 public:
  RatFn() : num_(), den_(Int(1)) {}
  explicit RatFn(UniPoly n) : num_(std::move(n)), den_(Int(1)) {}
  RatFn(UniPoly n, UniPoly d);

  static RatFn from_laurent(const Laurent& p);

  bool is_zero() const { return num_.is_zero(); }
  const UniPoly& num() const { return num_; }
  const UniPoly& den() const { return den_; }

  RatFn operator+(const RatFn& o) const;
  RatFn operator-(const RatFn& o) const;
  RatFn operator*(const RatFn& o) const;
  RatFn operator/(const RatFn& o) const;
  RatFn operator-() const;
  bool operator==(const RatFn& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }

 private:
  void normalize();
  UniPoly num_, den_;
};

// Right kernel of a rows x cols matrix over the rational-function field.
// Entries are Laurent polynomials in A alone.  Returns a basis; each basis
// vector is cleared to Laurent-polynomial entries with trivial common factor.
// The elimination runs twice: exact Gauss-Jordan over the fraction field and
// an independent rank check by fraction-free integer elimination at several
// rational evaluations of A; a mismatch throws.
std::vector<std::vector<Laurent>> kernel_basis(
    const std::vector<std::vector<Laurent>>& matrix);

// Rank over the rational-function field (same double-check as kernel_basis).
int matrix_rank(const std::vector<std::vector<Laurent>>& matrix);

}  // namespace annular

#endif  // ANNULAR_RATFUN_HPP
