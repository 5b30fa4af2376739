#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "annular/invariants.hpp"

using namespace annular;

namespace {

const ConventionTable kConv = ConventionTable::pinned_default();

Laurent value(const std::string& word, InvariantKind kind,
              LoopStrategy strategy = LoopStrategy::push_delta) {
  ComputeOptions opt;
  opt.strategy = strategy;
  return compute_invariant(parse_braid_word(word, 3), kind, kConv, opt).value;
}

std::string shifted(const std::string& word, int k) {
  BraidWord w = parse_braid_word(word, 3);
  std::string out;
  int n = w.length();
  for (int i = 0; i < n; ++i) {
    const Letter& l = w.letters[(i + k) % n];
    if (!out.empty()) out += ' ';
    out += std::to_string(l.sign > 0 ? l.index : -l.index);
  }
  return out;
}

const std::vector<std::string> kCorpus = {
    "1 2",           "1 1 2",          "1 1 1 2",      "1 1 2 2",
    "1 1 1 2 2",     "2 1 1 2",        "1 1 1 2 2 2",  "1 2 1 2",
    "1 1 1 1 1 2",   "1 1 1 2 2 2 2 2", "-1 -2",       "-1 -1 -2",
    "-1 -2 -1 -2",   "-1 -1 -1 -2 -2",  "1 -2",        "1 1 -2",
    "1 1 1 -2",      "1 -2 1 -2",       "-1 2 -1 2",   "1 1 -2 -2 1 -2",
    "1 1 1 -2 2",    "-1 2 2 1"};

const std::vector<std::string> kPositive = {
    "1 2", "1 1 2", "1 1 1 2", "1 1 2 2", "1 1 1 2 2", "1 1 1 2 2 2 2 2"};

const InvariantKind kKinds[] = {InvariantKind::S, InvariantKind::Splus,
                                InvariantKind::Sminus, InvariantKind::X,
                                InvariantKind::Phi};

}  // namespace

TEST_CASE("the five sums are invariant across loop strategies and shifts") {
  // The loop class is attached to the closed braid: pushing the half-twist
  // through any cyclic shift of the word, or with the alternative degenerate
  // pair fix-up, gives the same value, and the reversed loop negates it.
  for (const auto& word : kCorpus) {
    CAPTURE(word);
    for (InvariantKind kind : kKinds) {
      CAPTURE(invariant_kind_name(kind));
      Laurent base = value(word, kind);
      CHECK(value(word, kind, LoopStrategy::alt_negative_rule) == base);
      CHECK(value(word, kind, LoopStrategy::push_delta_inverse) ==
            Laurent() - base);
      int n = parse_braid_word(word, 3).length();
      for (int k = 1; k < n; ++k)
        CHECK(value(shifted(word, k), kind) == base);
    }
  }
}

TEST_CASE("one full-twist pass matches two half-twist passes") {
  for (const auto& word : {"1 1 1 2 2", "1 1 -2", "-1 -1 -2"}) {
    CAPTURE(word);
    for (InvariantKind kind : kKinds)
      CHECK(value(word, kind, LoopStrategy::push_full_twist) ==
            value(word, kind));
  }
}

TEST_CASE("t-degrees are at least one on knot closures") {
  // Every contribution carries t to the homological marking of its
  // distinguished crossing, which is at least 1 when the closure is a knot.
  for (const auto& word : kCorpus) {
    if (closure_components(parse_braid_word(word, 3)).size() != 1) continue;
    CAPTURE(word);
    for (InvariantKind kind :
         {InvariantKind::S, InvariantKind::Splus, InvariantKind::Sminus}) {
      Laurent v = value(word, kind);
      for (const auto& [e, coef] : v.terms()) CHECK(e[VT] >= 1);
    }
  }
}

TEST_CASE("positive braids: parity laws tie the three smoothing sums") {
  const Laurent a2diff = Laurent::monomial(1, -2) + Laurent::monomial(-1, 2);
  for (const auto& word : kPositive) {
    CAPTURE(word);
    // All triple points of a positive-braid loop are of the all-positive
    // class, so the negative-family sum is supported on tangencies only and
    // its bracket values come in mod-2-cancelling pairs.
    CHECK(value(word, InvariantKind::Sminus).reduce_mod2().is_zero());
    CHECK(value(word, InvariantKind::Splus).reduce_mod2() ==
          (a2diff * value(word, InvariantKind::S)).reduce_mod2());
  }
}

TEST_CASE("mirror antisymmetry of the marking sums") {
  for (const auto& word : {"1 1 1 2 2", "1 1 2", "1 1 1 2 2 2 2 2"}) {
    CAPTURE(word);
    BraidWord w = parse_braid_word(word, 3);
    ComputeOptions opt;
    Laurent mirrored =
        compute_invariant(w.mirror_crossings(), InvariantKind::Phi, kConv, opt)
            .value;
    Laurent original = value(word, InvariantKind::Phi);
    CHECK(mirrored == Laurent() - original.invert_A());
  }
}

TEST_CASE("the pure-h part of X is even and halves cleanly") {
  for (const auto& word : kCorpus) {
    CAPTURE(word);
    CHECK_NOTHROW(halve_h_part(value(word, InvariantKind::X)));
  }
  // halve_h_part: even pure-h coefficients halve, r/s terms pass through,
  // odd pure-h coefficients are rejected.
  Laurent mixed = Laurent::monomial(2, 1, 3) + Laurent::monomial(5, 0, 1, 0, 1);
  Laurent halved = halve_h_part(mixed);
  CHECK(halved == Laurent::monomial(1, 1, 3) +
                      Laurent::monomial(5, 0, 1, 0, 1));
  CHECK_THROWS(halve_h_part(Laurent::monomial(3, 0, 2)));
}

TEST_CASE("weight tables satisfy the published ratios") {
  // Smoothing weights: the mixed positive class is -A^2 times the
  // all-positive one; the mixed negative class is -A^-2 times the
  // all-negative one.
  CHECK(weight_fS(TripleClass::T57) ==
        Laurent::monomial(-1, 2) * weight_fS(TripleClass::T1));
  CHECK(weight_fS(TripleClass::T34) ==
        Laurent::monomial(-1, -2) * weight_fS(TripleClass::T8));
  CHECK(weight_f45(TripleClass::T1) == weight_fS(TripleClass::T1));
  // The distinguished once-singular weight obeys the same ratios with the
  // roles of the families exchanged.
  CHECK(weight_f3(TripleClass::T57) ==
        Laurent::monomial(-1, 2) * weight_f3(TripleClass::T1));
  CHECK(weight_f3(TripleClass::T34) ==
        Laurent::monomial(-1, -2) * weight_f3(TripleClass::T8));
  // Tangency weights: the two types are opposite, and the plus/minus tables
  // are inverse monomials.
  for (int type : {1, 2}) {
    CHECK(weight_fplus(type) * weight_fminus(type) == Laurent(1));
    CHECK(weight_fX(type) == Laurent() - weight_fX(3 - type));
  }
  // Marking multipliers take values +-1 with the same split in both tables.
  for (TripleClass c : {TripleClass::T1, TripleClass::T57, TripleClass::T34,
                        TripleClass::T8})
    CHECK(weight_g1(c) == weight_g234(c));
}
