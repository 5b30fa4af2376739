// Sparse exact multivariate Laurent polynomials in the variables A, h, t, r, s.
// Coefficients are arbitrary-precision integers; the zero polynomial has an
// empty term map and no stored coefficient is ever zero.
#ifndef ANNULAR_LAURENT_HPP
#define ANNULAR_LAURENT_HPP

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace annular {

using Int = boost::multiprecision::cpp_int;

// Variable indices in the exponent vector.
enum Var : int { VA = 0, VH = 1, VT = 2, VR = 3, VS = 4 };
constexpr int kNumVars = 5;
extern const char kVarNames[kNumVars];

using Expo = std::array<int, kNumVars>;

class Laurent {
 public:
  // Term map in lexicographic exponent order (A, h, t, r, s): this is the
  // canonical form, so two polynomials are equal iff their maps are equal.
  using TermMap = std::map<Expo, Int>;

  Laurent() = default;
  explicit Laurent(Int c);
  Laurent(Int c, const Expo& e);

  static Laurent var(Var v, int power = 1);
  static Laurent monomial(Int c, int a = 0, int h = 0, int t = 0, int r = 0,
                          int s = 0);

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  bool operator==(const Laurent& o) const { return terms_ == o.terms_; }
  bool operator!=(const Laurent& o) const { return terms_ != o.terms_; }
  // Lexicographic on the term map; only used for deterministic containers.
  bool operator<(const Laurent& o) const { return terms_ < o.terms_; }

  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent operator+(const Laurent& o) const;
  Laurent operator-(const Laurent& o) const;
  Laurent operator-() const;
  Laurent operator*(const Laurent& o) const;
  Laurent& operator*=(const Laurent& o);

  // True if every term has zero exponent for each variable outside `allowed`.
  bool uses_only(std::initializer_list<Var> allowed) const;
  // True if some term has a nonzero exponent of v.
  bool uses(Var v) const;

  // Coefficient of the given exponent vector (zero if absent).
  Int coeff(const Expo& e) const;
  // Collect the coefficient of v^k as a polynomial in the other variables.
  Laurent coeff_of(Var v, int k) const;
  // Minimal/maximal exponent of v over all terms (requires nonzero poly).
  int min_exp(Var v) const;
  int max_exp(Var v) const;

  // Map coefficients to {0,1} (drop even ones).
  Laurent reduce_mod2() const;
  // Fold the A-exponent into 0..3 (sets A^4 = 1), re-collecting terms.
  Laurent reduce_a4() const;
  // Substitute A -> A^-1 (mirror of the framing variable).
  Laurent invert_A() const;

  // Deterministic human-readable form, terms in lexicographic exponent order,
  // e.g. "-2*A^-17*h*t^2 + A^3*h*t".
  std::string str() const;

 private:
  void add_term(const Expo& e, const Int& c);
  TermMap terms_;
};

Laurent operator*(const Int& c, const Laurent& p);

// Parse an expression built from integers, the variables A h t r s, '^' with
// an optional-signed integer exponent, '*' or juxtaposition for products,
// '+'/'-', and parentheses.  Used for readable test expectations and for the
// verbatim equation transcriptions.  Throws std::runtime_error on bad input.
Laurent parse_laurent(const std::string& text);

}  // namespace annular

#endif  // ANNULAR_LAURENT_HPP
