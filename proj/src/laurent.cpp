#include "annular/laurent.hpp"

#include <cctype>
#include <sstream>

namespace annular {

const char kVarNames[kNumVars] = {'A', 'h', 't', 'r', 's'};

Laurent::Laurent(Int c) {
  if (c != 0) terms_[Expo{0, 0, 0, 0, 0}] = std::move(c);
}

Laurent::Laurent(Int c, const Expo& e) {
  if (c != 0) terms_[e] = std::move(c);
}

Laurent Laurent::var(Var v, int power) {
  Expo e{0, 0, 0, 0, 0};
  e[v] = power;
  return Laurent(1, e);
}

Laurent Laurent::monomial(Int c, int a, int h, int t, int r, int s) {
  return Laurent(std::move(c), Expo{a, h, t, r, s});
}

void Laurent::add_term(const Expo& e, const Int& c) {
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Laurent& Laurent::operator+=(const Laurent& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Laurent Laurent::operator+(const Laurent& o) const {
  Laurent out = *this;
  out += o;
  return out;
}

Laurent Laurent::operator-(const Laurent& o) const {
  Laurent out = *this;
  out -= o;
  return out;
}

Laurent Laurent::operator-() const {
  Laurent out;
  for (const auto& [e, c] : terms_) out.terms_[e] = -c;
  return out;
}

Laurent Laurent::operator*(const Laurent& o) const {
  Laurent out;
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      Expo e;
      for (int i = 0; i < kNumVars; ++i) e[i] = e1[i] + e2[i];
      out.add_term(e, c1 * c2);
    }
  }
  return out;
}

Laurent& Laurent::operator*=(const Laurent& o) {
  *this = *this * o;
  return *this;
}

Laurent operator*(const Int& c, const Laurent& p) { return Laurent(c) * p; }

bool Laurent::uses_only(std::initializer_list<Var> allowed) const {
  bool ok[kNumVars] = {};
  for (Var v : allowed) ok[v] = true;
  for (const auto& [e, c] : terms_) {
    (void)c;
    for (int i = 0; i < kNumVars; ++i)
      if (e[i] != 0 && !ok[i]) return false;
  }
  return true;
}

bool Laurent::uses(Var v) const {
  for (const auto& [e, c] : terms_) {
    (void)c;
    if (e[v] != 0) return true;
  }
  return false;
}

Int Laurent::coeff(const Expo& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Int(0) : it->second;
}

Laurent Laurent::coeff_of(Var v, int k) const {
  Laurent out;
  for (const auto& [e, c] : terms_) {
    if (e[v] != k) continue;
    Expo f = e;
    f[v] = 0;
    out.add_term(f, c);
  }
  return out;
}

int Laurent::min_exp(Var v) const {
  if (terms_.empty()) throw std::runtime_error("min_exp of zero polynomial");
  bool first = true;
  int m = 0;
  for (const auto& [e, c] : terms_) {
    (void)c;
    if (first || e[v] < m) m = e[v];
    first = false;
  }
  return m;
}

int Laurent::max_exp(Var v) const {
  if (terms_.empty()) throw std::runtime_error("max_exp of zero polynomial");
  bool first = true;
  int m = 0;
  for (const auto& [e, c] : terms_) {
    (void)c;
    if (first || e[v] > m) m = e[v];
    first = false;
  }
  return m;
}

Laurent Laurent::reduce_mod2() const {
  Laurent out;
  for (const auto& [e, c] : terms_) {
    if (c % 2 != 0) out.terms_[e] = 1;
  }
  return out;
}

Laurent Laurent::reduce_a4() const {
  Laurent out;
  for (const auto& [e, c] : terms_) {
    Expo f = e;
    f[VA] = ((e[VA] % 4) + 4) % 4;
    out.add_term(f, c);
  }
  return out;
}

Laurent Laurent::invert_A() const {
  Laurent out;
  for (const auto& [e, c] : terms_) {
    Expo f = e;
    f[VA] = -e[VA];
    out.add_term(f, c);
  }
  return out;
}

std::string Laurent::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Int a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool any_var = false;
    for (int i = 0; i < kNumVars; ++i) any_var = any_var || e[i] != 0;
    std::ostringstream body;
    bool lead = true;
    if (a != 1 || !any_var) {
      body << a;
      lead = false;
    }
    for (int i = 0; i < kNumVars; ++i) {
      if (e[i] == 0) continue;
      if (!lead) body << "*";
      lead = false;
      body << kVarNames[i];
      if (e[i] != 1) body << "^" << e[i];
    }
    os << body.str();
  }
  return os.str();
}

namespace {

// Recursive-descent parser: expr := term (('+'|'-') term)*;
// term := factor (('*')? factor)*; factor := integer | variable ['^' int]
// | '(' expr ')'.
struct Parser {
  const std::string& s;
  std::size_t i = 0;

  explicit Parser(const std::string& text) : s(text) {}

  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }

  bool peek(char c) {
    skip();
    return i < s.size() && s[i] == c;
  }

  bool eat(char c) {
    if (peek(c)) {
      ++i;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw std::runtime_error("parse error at position " + std::to_string(i) +
                             ": " + what + " in \"" + s + "\"");
  }

  long long integer() {
    skip();
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = s[i++] == '-';
    skip();
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
      fail("expected integer");
    long long v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
      v = v * 10 + (s[i++] - '0');
    return neg ? -v : v;
  }

  int var_index(char c) {
    for (int k = 0; k < kNumVars; ++k)
      if (kVarNames[k] == c) return k;
    return -1;
  }

  bool factor_ahead() {
    skip();
    if (i >= s.size()) return false;
    char c = s[i];
    return std::isdigit(static_cast<unsigned char>(c)) || c == '(' ||
           var_index(c) >= 0;
  }

  Laurent factor() {
    skip();
    if (i >= s.size()) fail("expected factor");
    char c = s[i];
    if (c == '(') {
      ++i;
      Laurent v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Laurent(integer());
    int vi = var_index(c);
    if (vi < 0) fail("unknown variable");
    ++i;
    int p = 1;
    if (eat('^')) p = static_cast<int>(integer());
    return Laurent::var(static_cast<Var>(vi), p);
  }

  Laurent term() {
    Laurent v = factor();
    for (;;) {
      if (eat('*')) {
        v = v * factor();
      } else if (factor_ahead()) {
        v = v * factor();
      } else {
        return v;
      }
    }
  }

  Laurent expr() {
    skip();
    bool neg = false;
    while (peek('+') || peek('-')) {
      if (eat('-')) neg = !neg;
      else eat('+');
    }
    Laurent v = term();
    if (neg) v = -v;
    for (;;) {
      skip();
      if (eat('+')) {
        v += term();
      } else if (eat('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }
};

}  // namespace

Laurent parse_laurent(const std::string& text) {
  Parser p(text);
  Laurent v = p.expr();
  p.skip();
  if (p.i != text.size()) p.fail("trailing input");
  return v;
}

}  // namespace annular
