#include "annular/ratfun.hpp"

#include <algorithm>
#include <stdexcept>

#include <boost/rational.hpp>

namespace annular {

namespace {
Int int_gcd(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int r = a % b;
    a = b;
    b = r;
  }
  return a;
}
}  // namespace

UniPoly::UniPoly(Int c) {
  if (c != 0) c_.push_back(std::move(c));
}

UniPoly::UniPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::from_laurent(const Laurent& p, int* shift_out) {
  if (!p.uses_only({VA}))
    throw std::runtime_error("from_laurent: polynomial is not univariate in A");
  if (p.is_zero()) {
    *shift_out = 0;
    return UniPoly();
  }
  int lo = p.min_exp(VA), hi = p.max_exp(VA);
  std::vector<Int> c(hi - lo + 1, Int(0));
  for (const auto& [e, v] : p.terms()) c[e[VA] - lo] = v;
  *shift_out = lo;
  return UniPoly(std::move(c));
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  std::vector<Int> c(std::max(c_.size(), o.c_.size()), Int(0));
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] = c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
  return UniPoly(std::move(c));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator-() const {
  std::vector<Int> c(c_);
  for (auto& x : c) x = -x;
  return UniPoly(std::move(c));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (is_zero() || o.is_zero()) return UniPoly();
  std::vector<Int> c(c_.size() + o.c_.size() - 1, Int(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
  return UniPoly(std::move(c));
}

UniPoly UniPoly::exact_div(const UniPoly& o) const {
  if (o.is_zero()) throw std::runtime_error("exact_div by zero");
  if (is_zero()) return UniPoly();
  std::vector<Int> rem(c_);
  int dr = static_cast<int>(rem.size()) - 1;
  int dd = o.degree();
  if (dr < dd) throw std::runtime_error("exact_div: not divisible");
  std::vector<Int> q(dr - dd + 1, Int(0));
  for (int k = dr - dd; k >= 0; --k) {
    Int top = rem[k + dd];
    if (top == 0) continue;
    if (top % o.leading() != 0)
      throw std::runtime_error("exact_div: not divisible");
    Int f = top / o.leading();
    q[k] = f;
    for (int j = 0; j <= dd; ++j) rem[k + j] -= f * o.coeffs()[j];
  }
  for (const Int& x : rem)
    if (x != 0) throw std::runtime_error("exact_div: nonzero remainder");
  return UniPoly(std::move(q));
}

Int UniPoly::content() const {
  Int g = 0;
  for (const Int& x : c_) g = int_gcd(g, x);
  return g;
}

UniPoly UniPoly::primitive() const {
  if (is_zero()) return UniPoly();
  Int g = content();
  if (leading() < 0) g = -g;
  std::vector<Int> c(c_);
  for (auto& x : c) x /= g;
  return UniPoly(std::move(c));
}

Laurent UniPoly::to_laurent(int shift) const {
  Laurent out;
  for (std::size_t i = 0; i < c_.size(); ++i)
    out += Laurent::monomial(c_[i], static_cast<int>(i) + shift);
  return out;
}

namespace {
// Pseudo-remainder: lc(b)^k * a mod b for large enough k.
UniPoly pseudo_rem(UniPoly a, const UniPoly& b) {
  while (!a.is_zero() && a.degree() >= b.degree()) {
    int d = a.degree() - b.degree();
    Int f = a.leading();
    std::vector<Int> c(a.coeffs());
    for (auto& x : c) x *= b.leading();
    for (int j = 0; j <= b.degree(); ++j) c[d + j] -= f * b.coeffs()[j];
    a = UniPoly(std::move(c));
  }
  return a;
}
}  // namespace

UniPoly gcd(UniPoly a, UniPoly b) {
  a = a.primitive();
  b = b.primitive();
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    UniPoly rem = pseudo_rem(a, b).primitive();
    a = b;
    b = rem;
  }
  return a.primitive();
}

RatFn::RatFn(UniPoly n, UniPoly d) : num_(std::move(n)), den_(std::move(d)) {
  if (den_.is_zero()) throw std::runtime_error("RatFn: zero denominator");
  normalize();
}

void RatFn::normalize() {
  if (num_.is_zero()) {
    den_ = UniPoly(Int(1));
    return;
  }
  UniPoly g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_.exact_div(g);
    den_ = den_.exact_div(g);
  }
  Int cg = int_gcd(num_.content(), den_.content());
  if (den_.leading() < 0) cg = -cg;
  if (cg != 1) {
    std::vector<Int> nc(num_.coeffs()), dc(den_.coeffs());
    for (auto& x : nc) x /= cg;
    for (auto& x : dc) x /= cg;
    num_ = UniPoly(std::move(nc));
    den_ = UniPoly(std::move(dc));
  }
}

RatFn RatFn::from_laurent(const Laurent& p) {
  int shift = 0;
  UniPoly u = UniPoly::from_laurent(p, &shift);
  if (shift >= 0) {
    std::vector<Int> s(static_cast<std::size_t>(shift) + 1, Int(0));
    s[shift] = 1;
    return RatFn(u * UniPoly(std::move(s)));
  }
  std::vector<Int> s(static_cast<std::size_t>(-shift) + 1, Int(0));
  s[-shift] = 1;
  return RatFn(u, UniPoly(std::move(s)));
}

RatFn RatFn::operator+(const RatFn& o) const {
  return RatFn(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFn RatFn::operator-(const RatFn& o) const { return *this + (-o); }

RatFn RatFn::operator*(const RatFn& o) const {
  return RatFn(num_ * o.num_, den_ * o.den_);
}

RatFn RatFn::operator/(const RatFn& o) const {
  if (o.is_zero()) throw std::runtime_error("RatFn: division by zero");
  return RatFn(num_ * o.den_, den_ * o.num_);
}

RatFn RatFn::operator-() const {
  RatFn out = *this;
  out.num_ = -out.num_;
  return out;
}

namespace {

using Rational = boost::rational<Int>;

// Rank by plain elimination after evaluating A at a rational point; used as an
// independent cross-check of the symbolic elimination (a random evaluation can
// only lower the rank, so we take the max over several points).
int numeric_rank(const std::vector<std::vector<Laurent>>& m) {
  const int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  const int cols = static_cast<int>(m[0].size());
  const Rational points[] = {Rational(2, 1), Rational(3, 2), Rational(-5, 3),
                             Rational(7, 4)};
  int best = 0;
  for (const Rational& a : points) {
    std::vector<std::vector<Rational>> e(rows,
                                         std::vector<Rational>(cols, Rational(0)));
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) {
        Rational v(0);
        for (const auto& [ex, c] : m[i][j].terms()) {
          Rational p(1);
          int k = ex[VA];
          // Invert by hand: boost::rational<cpp_int> rejects a negative
          // denominator outright (its overflow guard misfires because
          // numeric_limits<cpp_int>::max() is zero for the unbounded type).
          Rational base = k >= 0 || a.numerator() >= 0
                              ? (k >= 0 ? a
                                        : Rational(a.denominator(),
                                                   a.numerator()))
                              : Rational(-a.denominator(), -a.numerator());
          for (int q = 0; q < std::abs(k); ++q) p *= base;
          v += Rational(c, Int(1)) * p;
        }
        e[i][j] = v;
      }
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
      int piv = -1;
      for (int r = rank; r < rows; ++r)
        if (e[r][col] != Rational(0)) {
          piv = r;
          break;
        }
      if (piv < 0) continue;
      std::swap(e[rank], e[piv]);
      for (int r = 0; r < rows; ++r) {
        if (r == rank || e[r][col] == Rational(0)) continue;
        Rational f = e[r][col] / e[rank][col];
        for (int j = col; j < cols; ++j) e[r][j] -= f * e[rank][j];
      }
      ++rank;
    }
    best = std::max(best, rank);
  }
  return best;
}

struct Echelon {
  std::vector<std::vector<RatFn>> m;
  std::vector<int> pivot_col;  // pivot column of each pivot row
};

Echelon reduce(const std::vector<std::vector<Laurent>>& matrix) {
  Echelon out;
  const int rows = static_cast<int>(matrix.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(matrix[0].size());
  out.m.assign(rows, std::vector<RatFn>(cols));
  for (int i = 0; i < rows; ++i) {
    if (static_cast<int>(matrix[i].size()) != cols)
      throw std::runtime_error("kernel_basis: ragged matrix");
    for (int j = 0; j < cols; ++j) out.m[i][j] = RatFn::from_laurent(matrix[i][j]);
  }
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (!out.m[r][col].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(out.m[rank], out.m[piv]);
    RatFn inv = RatFn(UniPoly(Int(1))) / out.m[rank][col];
    for (int j = col; j < cols; ++j) out.m[rank][j] = out.m[rank][j] * inv;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || out.m[r][col].is_zero()) continue;
      RatFn f = out.m[r][col];
      for (int j = col; j < cols; ++j)
        out.m[r][j] = out.m[r][j] - f * out.m[rank][j];
    }
    out.pivot_col.push_back(col);
    ++rank;
  }
  if (rows > 0 && numeric_rank(matrix) != rank)
    throw std::runtime_error("kernel_basis: symbolic/numeric rank mismatch");
  return out;
}

}  // namespace

int matrix_rank(const std::vector<std::vector<Laurent>>& matrix) {
  return static_cast<int>(reduce(matrix).pivot_col.size());
}

std::vector<std::vector<Laurent>> kernel_basis(
    const std::vector<std::vector<Laurent>>& matrix) {
  const int rows = static_cast<int>(matrix.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(matrix[0].size());
  Echelon e = reduce(matrix);
  std::vector<bool> is_pivot(cols, false);
  for (int c : e.pivot_col) is_pivot[c] = true;
  std::vector<std::vector<Laurent>> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    // Solution with x_free = 1, other free variables 0, pivots solved.
    std::vector<RatFn> x(cols);
    x[free] = RatFn(UniPoly(Int(1)));
    for (std::size_t r = 0; r < e.pivot_col.size(); ++r)
      x[e.pivot_col[r]] = -e.m[r][free];
    // Clear denominators: multiply by the product of distinct denominators
    // (each entry's denominator divides it), then strip common content.
    UniPoly mult(Int(1));
    for (int j = 0; j < cols; ++j) {
      if (x[j].is_zero()) continue;
      UniPoly g = gcd(mult, x[j].den());
      mult = mult * x[j].den().exact_div(g);
    }
    std::vector<UniPoly> cleared(cols);
    for (int j = 0; j < cols; ++j) {
      if (x[j].is_zero()) continue;
      cleared[j] = x[j].num() * mult.exact_div(x[j].den());
    }
    Int g = 0;
    for (int j = 0; j < cols; ++j) g = int_gcd(g, cleared[j].content());
    std::vector<Laurent> vec(cols);
    for (int j = 0; j < cols; ++j) {
      UniPoly p = cleared[j];
      if (!p.is_zero() && g > 1) {
        std::vector<Int> c(p.coeffs());
        for (auto& v : c) v /= g;
        p = UniPoly(std::move(c));
      }
      vec[j] = p.to_laurent();
    }
    basis.push_back(std::move(vec));
  }
  // Exactness guard: M * v must vanish for every basis vector.
  for (const auto& v : basis) {
    for (int i = 0; i < rows; ++i) {
      Laurent acc;
      for (int j = 0; j < cols; ++j) acc += matrix[i][j] * v[j];
      if (!acc.is_zero())
        throw std::runtime_error("kernel_basis: residual check failed");
    }
  }
  return basis;
}

}  // namespace annular
