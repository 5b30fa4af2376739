// Acceptance suite: one pass/fail line per top-level criterion.  Criteria
// whose reference values are unreachable under faithful semantics are kept
// failing on purpose (the notes say why); nothing here is weakened to force
// a green run.
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "annular/equations.hpp"
#include "annular/invariants.hpp"
#include "annular/ratfun.hpp"
#include "annular/statesum.hpp"

using namespace annular;

namespace {

const ConventionTable kConv = ConventionTable::pinned_default();

Laurent L(const std::string& s) { return parse_laurent(s); }

Laurent value(const std::string& word, InvariantKind kind,
              LoopStrategy strategy = LoopStrategy::push_delta,
              const std::string& part = "", bool no_tangencies = false) {
  ComputeOptions opt;
  opt.strategy = strategy;
  opt.part = part;
  opt.no_tangencies = no_tangencies;
  return compute_invariant(parse_braid_word(word, 3), kind, kConv, opt).value;
}

const std::vector<std::string> kCorpus = {
    "1 2",           "1 1 2",           "1 1 1 2",     "1 1 2 2",
    "1 1 1 2 2",     "2 1 1 2",         "1 1 1 2 2 2", "1 2 1 2",
    "1 1 1 1 1 2",   "1 1 1 2 2 2 2 2", "-1 -2",       "-1 -1 -2",
    "-1 -2 -1 -2",   "-1 -1 -1 -2 -2",  "1 -2",        "1 1 -2",
    "1 1 1 -2",      "1 -2 1 -2",       "-1 2 -1 2",   "1 1 -2 -2 1 -2",
    "1 1 1 -2 2",    "-1 2 2 1"};

const std::vector<std::string> kPositive = {
    "1 2", "1 1 2", "1 1 1 2", "1 1 2 2", "1 1 1 2 2", "1 1 1 2 2 2 2 2"};

const InvariantKind kKinds[] = {InvariantKind::S, InvariantKind::Splus,
                                InvariantKind::Sminus, InvariantKind::X,
                                InvariantKind::Phi};

std::string shifted(const std::string& word, int k) {
  BraidWord w = parse_braid_word(word, 3);
  std::string out;
  for (int i = 0; i < w.length(); ++i) {
    const Letter& l = w.letters[(i + k) % w.length()];
    if (!out.empty()) out += ' ';
    out += std::to_string(l.sign > 0 ? l.index : -l.index);
  }
  return out;
}

int failures(const std::vector<CheckResult>& rs) {
  int n = 0;
  for (const auto& r : rs) n += !r.pass;
  return n;
}

bool in_span(const std::vector<std::vector<Laurent>>& basis,
             const std::vector<Laurent>& v) {
  std::vector<std::vector<Laurent>> m = basis;
  int base = matrix_rank(m);
  m.push_back(v);
  return matrix_rank(m) == base;
}

std::vector<Laurent> assignment_vector(const EquationSystem& sys,
                                       const Assignment& a) {
  std::vector<Laurent> v;
  for (const auto& var : sys.variables) v.push_back(a.at(var));
  return v;
}

// ---------------------------------------------------------------------------
// Criterion 10 oracles: from-scratch enumerators, sharing nothing with the
// library's state-sum code paths beyond the diagram/region combinatorics.

// Bracket oracle: explicit half-edge walk over the smoothed closed-braid
// diagram, with the winding of each circle counted as the signed number of
// passages through the gluing boundary.
Laurent bracket_oracle(const BraidWord& w) {
  const int c = w.length(), n = w.strands;
  if (c == 0) return Laurent::monomial(1, 0, n);
  const Laurent dfac = L("-A^2 - A^-2");
  Laurent total;
  for (int mask = 0; mask < (1 << c); ++mask) {
    int aexp = 0;
    std::vector<char> capcup(c);
    for (int j = 0; j < c; ++j) {
      bool a_choice = (mask >> j) & 1;
      // The A-smoothing of a positive letter is the identity tangle.
      capcup[j] = a_choice != (w.letters[j].sign > 0);
      aexp += a_choice ? 1 : -1;
    }
    // Ports of column j: 0..n-1 on its left boundary, n..2n-1 on its right.
    std::vector<std::vector<char>> seen(c, std::vector<char>(2 * n, 0));
    int d_circles = 0, h_circles = 0;
    for (int j0 = 0; j0 < c; ++j0)
      for (int q0 = 0; q0 < 2 * n; ++q0) {
        if (seen[j0][q0]) continue;
        int j = j0, q = q0, net = 0;
        do {
          seen[j][q] = 1;
          const int k = w.letters[j].index;
          const int p = q % n + 1;
          const bool left = q < n;
          int qq;
          if (capcup[j] && (p == k || p == k + 1)) {
            int other = (p == k ? k + 1 : k) - 1;
            qq = left ? other : n + other;
          } else {
            qq = left ? q + n : q - n;
          }
          seen[j][qq] = 1;
          const int p2 = qq % n;
          if (qq < n) {  // continue through boundary j into column j-1
            if (j == 0) --net;
            j = (j + c - 1) % c;
            q = n + p2;
          } else {  // through boundary j+1 into column j+1
            j = (j + 1) % c;
            if (j == 0) ++net;
            q = p2;
          }
        } while (j != j0 || q != q0);
        const int wind = net < 0 ? -net : net;
        if (wind == 0)
          ++d_circles;
        else if (wind == 1)
          ++h_circles;
        else
          throw std::logic_error("bracket oracle: embedded circle winding > 1");
      }
    Laurent term = Laurent::monomial(1, aexp, h_circles);
    for (int i = 0; i < d_circles; ++i) term *= dfac;
    total += term;
  }
  return total;
}

// Matching oracle: exhaustive recursion over crossing-corner choices with an
// explicit inversion-count sign, multiplying raw corner weights.
Laurent matching_oracle(const BraidWord& w, const ConventionTable& conv) {
  SingularEventDiagram d =
      SingularEventDiagram::from_word(w, -1, 0, std::nullopt, 1);
  RegionMap rm = enumerate_regions(d);
  const int c = w.length();
  if (rm.region_count - 2 != c) return Laurent();
  std::vector<char> used(rm.region_count, 0);
  used[rm.inner_star] = used[rm.outer_star] = 1;
  std::vector<int> regions(c);
  Laurent total;
  std::function<void(int, int, int)> rec = [&](int k, int aexp, int sgn) {
    if (k == c) {
      int inv = 0;
      for (int i = 0; i < c; ++i)
        for (int j = i + 1; j < c; ++j)
          if (regions[i] > regions[j]) ++inv;
      if (conv.alex_parity && inv % 2) sgn = -sgn;
      total += Laurent::monomial(sgn, aexp);
      return;
    }
    const int base = d.crossings[k].sign > 0 ? 0 : 4;
    for (int corner = 0; corner < 4; ++corner) {
      const int r = rm.crossing_corners[k][corner];
      if (used[r]) continue;
      used[r] = 1;
      regions[k] = r;
      rec(k + 1, aexp + conv.alex_exp[base + corner],
          sgn * conv.alex_sgn[base + corner]);
      used[r] = 0;
    }
  };
  rec(0, 0, 1);
  return total;
}

// All closed-braid diagram words with at most `max_len` crossings on the
// given strand count.
std::vector<BraidWord> all_words(int strands, int max_len, int min_len) {
  std::vector<int> alphabet;
  for (int i = 1; i < strands; ++i) {
    alphabet.push_back(i);
    alphabet.push_back(-i);
  }
  std::vector<BraidWord> out;
  std::vector<int> stack;
  std::function<void()> rec = [&]() {
    if (static_cast<int>(stack.size()) >= min_len) {
      BraidWord w;
      w.strands = strands;
      for (int v : stack) w.letters.push_back({v > 0 ? v : -v, v > 0 ? 1 : -1});
      out.push_back(w);
    }
    if (static_cast<int>(stack.size()) == max_len) return;
    for (int v : alphabet) {
      stack.push_back(v);
      rec();
      stack.pop_back();
    }
  };
  rec();
  return out;
}

// ---------------------------------------------------------------------------
// The criteria

struct Criterion {
  int id;
  bool pass;
  std::string note;
};

Criterion criterion_1() {
  Laurent target =
      L("(h t^2 + h t)(-2A^-17 + A^-13 - A^-9 + 2A^-5 - A^-1 + A^3)");
  Laurent got = value("1 1 1 2 2 2 2 2", InvariantKind::S);
  bool pass = got == target;
  std::string note = pass ? "exact match"
                          : "computed S = " + got.str() +
                                "; the reference value is unreachable: every "
                                "couple difference on this loop is palindromic "
                                "about A-degree -5 while the reference is "
                                "centered at -7 (see the decision record)";
  return {1, pass, note};
}

Criterion criterion_2() {
  Laurent target = L("2(A + A^-1)(-3A^-2 + 4 - 3A^2)");
  Laurent got = value("1 1 1 2 2", InvariantKind::Phi,
                      LoopStrategy::push_delta, "1");
  BraidWord mirror = parse_braid_word("1 1 1 2 2", 3).mirror_crossings();
  ComputeOptions opt;
  opt.part = "1";
  Laurent got_mirror = compute_invariant(mirror, InvariantKind::Phi, kConv, opt).value;
  bool pass = got == target && got_mirror == Laurent() - target;
  std::string note =
      pass ? "exact match, mirror negated"
           : "computed Phi(1) = " + got.str() +
                 "; unreachable: the two sectors above and below a triple "
                 "point are the star regions here, so the four couples "
                 "through them vanish identically and no surviving couple "
                 "spans the reference value";
  return {2, pass, note};
}

Criterion criterion_3() {
  // Triple-point part of the distinguished once-singular sum.
  Laurent v = value("1 1 1 2 2", InvariantKind::X, LoopStrategy::push_delta,
                    "4", /*no_tangencies=*/true);
  Laurent hpart;
  for (const auto& [e, c] : v.terms())
    if (e[VH] == 1 && e[VR] == 0 && e[VS] == 0)
      hpart += Laurent::monomial(c, e[VA]);
  bool all_even = true;
  Laurent half;
  for (const auto& [e, c] : hpart.terms()) {
    if (c % 2 != 0) all_even = false;
    half += Laurent::monomial(c / 2, e[VA]);
  }
  Laurent target = L("A^-8 + A^-6 + A^-5 + A^-4 + A^-1 + 1 + A + A^3 + A^4");
  Laurent target_a4 = L("A + A^2 + A^3");
  bool pass = all_even && half.reduce_mod2() == target &&
              half.reduce_mod2().reduce_a4() == target_a4;
  std::string note =
      pass ? "h-part halves, folds and matches"
           : std::string("h-part all even: ") + (all_even ? "yes" : "no") +
                 "; computed half mod 2 = " + half.reduce_mod2().str() +
                 "; unreachable: every event diagram on this loop has 8 "
                 "crossings, so all bracket A-degrees are even, while the "
                 "reference mixes parities (survives the A^4 = 1 fold)";
  return {3, pass, note};
}

Criterion criterion_4() {
  const EquationSystem& sys = system_smoothing();
  auto kernel = system_kernel(sys);
  bool s1 = failures(verify_assignment(sys, solution_smoothing_1())) == 0;
  bool s2 = failures(verify_assignment(sys, solution_smoothing_2())) == 0;
  bool contained =
      in_span(kernel, assignment_vector(sys, solution_smoothing_1())) &&
      in_span(kernel, assignment_vector(sys, solution_smoothing_2()));
  bool pass = s1 && s2 && contained && kernel.size() == 2;
  return {4, pass,
          "39 equations; both solutions pass; kernel dimension = " +
              std::to_string(kernel.size()) + " (expected 2), containing both "
              "solution lines"};
}

Criterion criterion_5() {
  const EquationSystem& sys = system_marking();
  auto kernel = system_kernel(sys);
  bool sol = failures(verify_assignment(sys, solution_marking())) == 0;
  bool contained =
      in_span(kernel, assignment_vector(sys, solution_marking()));
  bool pass = sol && contained;
  std::string note = "48 equations; solution passes; kernel dimension = " +
                     std::to_string(kernel.size()) + " (expected 1";
  note += kernel.size() == 1
              ? ")"
              : "; FINDING: extra kernel line C4 = A, bC5 = -A^2, bC6 = 1 -- "
                "reported, not silently accepted)";
  return {5, pass, note};
}

Criterion criterion_6() {
  auto diff = diff_assembly_against_listing();
  std::set<std::string> mismatched;
  for (const auto& r : diff)
    if (!r.pass) mismatched.insert(r.name.substr(r.name.rfind('.') + 1));
  EquationSystem assembled = assemble_four_point();
  bool s1 = failures(verify_assignment(assembled, solution_smoothing_1())) == 0;
  int s2_fail = 0, s2_fail_outside = 0;
  for (const auto& r : verify_assignment(assembled, solution_smoothing_2()))
    if (!r.pass) {
      ++s2_fail;
      if (!mismatched.count(r.name.substr(r.name.rfind('.') + 1)))
        ++s2_fail_outside;
    }
  bool pass = mismatched.empty() && s1 && s2_fail == 0;
  std::string gens;
  for (const auto& g : mismatched) gens += (gens.empty() ? "" : ",") + g;
  return {6, pass,
          "structured diff emitted; " + std::to_string(mismatched.size()) +
              " of 63 generators mismatch the listing {" + gens +
              "} (transcription re-derived by hand; the listed system is the "
              "error-controlled side); solution 1 annihilates the assembled "
              "system, solution 2 fails on " + std::to_string(s2_fail) +
              " mismatched generators and " +
              std::to_string(s2_fail_outside) + " others"};
}

Criterion criterion_7() {
  int bad = failures(verify_flex()) + failures(verify_cube_edges()) +
            failures(verify_weight_cube());
  return {7, bad == 0,
          bad == 0 ? "flex kernel exact; edge systems satisfied (one equation "
                     "in completed form, recorded); all face defects "
                     "compensated"
                   : std::to_string(bad) + " checks failed"};
}

Criterion criterion_8() {
  int words = 0;
  for (const auto& word : kCorpus) {
    ++words;
    for (InvariantKind kind : kKinds) {
      Laurent base = value(word, kind);
      if (value(word, kind, LoopStrategy::alt_negative_rule) != base)
        return {8, false, "alt-negative mismatch on " + word};
      if (value(word, kind, LoopStrategy::push_delta_inverse) !=
          Laurent() - base)
        return {8, false, "reversed-loop antisymmetry fails on " + word};
      int n = parse_braid_word(word, 3).length();
      for (int k = 1; k < n; ++k)
        if (value(shifted(word, k), kind) != base)
          return {8, false, "cyclic shift mismatch on " + word};
    }
  }
  return {8, true,
          std::to_string(words) + " words x 5 invariants: cyclic shifts, "
          "alternative degenerate-pair rule, reversed-loop antisymmetry"};
}

Criterion criterion_9() {
  for (const auto& word : kCorpus)
    for (InvariantKind kind :
         {InvariantKind::S, InvariantKind::Splus, InvariantKind::Sminus})
      for (const auto& [e, c] : value(word, kind).terms())
        if (e[VT] < 1) return {9, false, "t-exponent < 1 on " + word};
  const Laurent a2diff = L("A^-2 - A^2");
  for (const auto& word : kPositive) {
    if (!value(word, InvariantKind::Sminus).reduce_mod2().is_zero())
      return {9, false, "S- parity law fails on " + word};
    if (value(word, InvariantKind::Splus).reduce_mod2() !=
        (a2diff * value(word, InvariantKind::S)).reduce_mod2())
      return {9, false, "S+ parity law fails on " + word};
  }
  int phi_words = 0;
  for (const auto& word : kPositive) {
    ++phi_words;
    BraidWord w = parse_braid_word(word, 3);
    Laurent mirrored = compute_invariant(w.mirror_crossings(),
                                         InvariantKind::Phi, kConv, {})
                           .value;
    if (mirrored != Laurent() - value(word, InvariantKind::Phi).invert_A())
      return {9, false, "mirror antisymmetry fails on " + word};
  }
  return {9, true,
          "t-exponents >= 1 on 22 words; parity laws on " +
              std::to_string(kPositive.size()) + " positive words; mirror "
              "antisymmetry on " + std::to_string(phi_words) + " words"};
}

Criterion criterion_10() {
  long diagrams = 0;
  for (int strands : {2, 3}) {
    for (const BraidWord& w : all_words(strands, 6, strands == 2 ? 0 : 1)) {
      ++diagrams;
      SingularEventDiagram d =
          SingularEventDiagram::from_word(w, -1, 0, std::nullopt, 1);
      if (jones_bracket(d) != bracket_oracle(w))
        return {10, false, "bracket oracle mismatch on " + w.str()};
      if (alexander_statesum(d, {}, kConv) != matching_oracle(w, kConv))
        return {10, false, "matching oracle mismatch on " + w.str()};
    }
  }
  return {10, true,
          "both state sums match their independent enumerators on " +
              std::to_string(diagrams) + " diagrams with <= 6 crossings"};
}

}  // namespace

int main() {
  std::vector<Criterion> results;
  for (auto* fn : {criterion_1, criterion_2, criterion_3, criterion_4,
                   criterion_5, criterion_6, criterion_7, criterion_8,
                   criterion_9, criterion_10})
    results.push_back(fn());
  int failed = 0;
  for (const auto& c : results) {
    failed += !c.pass;
    std::printf("criterion %2d: %s -- %s\n", c.id, c.pass ? "PASS" : "FAIL",
                c.note.c_str());
  }
  std::printf("%d of %zu criteria pass\n", static_cast<int>(results.size()) - failed,
              results.size());
  return failed == 0 ? 0 : 1;
}
