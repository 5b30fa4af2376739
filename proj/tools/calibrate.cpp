// Staged search for the convention table: every figure-derived local datum
// (tangle couple orientations, wall-crossing signs, marking sectors, corner
// weights) is pinned by requiring the five assembled sums to behave as
// invariants (equal across loop strategies and cyclic shifts of the word,
// negated for the reversed loop), by the positive-braid parity laws, and by
// an independent determinant oracle for the Alexander corner weights.
//
// The published example values are attempted as anchors at each stage and
// reported; when no candidate reproduces them the stage falls back to the
// invariance filters and prints nearest-miss diagnostics.  The tool ends by
// re-verifying the pinned table through compute_invariant() and reporting
// the anchor status.
#include <array>
#include <cstdio>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "annular/invariants.hpp"

using namespace annular;

namespace {

// ---------------------------------------------------------------------------
// Cached per-event data, independent of the knobs under search.

// The 12 non-antipodal unordered sector pairs {a,b} (a<b, b != a+3).
const std::vector<std::array<int, 2>> kPairs = {
    {0, 1}, {0, 2}, {0, 4}, {0, 5}, {1, 2}, {1, 3},
    {1, 5}, {2, 3}, {2, 4}, {3, 4}, {3, 5}, {4, 5}};

int pair_id(int a, int b) {
  if (a > b) std::swap(a, b);
  for (std::size_t i = 0; i < kPairs.size(); ++i)
    if (kPairs[i][0] == a && kPairs[i][1] == b) return static_cast<int>(i);
  throw std::runtime_error("antipodal sector pair");
}

int bar_pair(int id) {
  return pair_id((kPairs[id][0] + 3) % 6, (kPairs[id][1] + 3) % 6);
}

using Profile = std::map<std::array<int, 9>, long>;

struct TripleEv {
  TripleClass cls;
  bool forward;
  int m_under, m_over;           // homological marking, both q+ choices
  Laurent diff_e1;               // <e1 tangle> - <e2 tangle>
  std::array<Laurent, 3> dpdiff; // <dp_r> - <dp_{r+3}>, r = 0,1,2
  std::array<Profile, 12> prof;  // per sector pair
};

struct TangEv {
  bool creation;
  bool first_positive;  // sign of the first letter of the degenerate pair
  int m_under, m_over;
  Laurent br_cup, br_id, br_x2;
};

struct LoopData {
  std::vector<TripleEv> triples;
  std::vector<TangEv> tangs;
};

Laurent bracket_of(const BraidWord& w, int site, int count, Tangle t, int lo) {
  return jones_bracket(
      SingularEventDiagram::from_word(w, site, count, std::move(t), lo));
}

LoopData collect(const BraidWord& w, LoopStrategy strat) {
  LoopData out;
  CanonicalLoop loop = canonical_loop(w, strat);
  ConventionTable plain, flipped;
  flipped.flip_qplus = true;
  for (const LoopEvent& e : loop.events) {
    if (e.kind == EventKind::TriplePoint) {
      TripleEv ev;
      TripleInfo iu = triple_info(e, plain);
      TripleInfo io = triple_info(e, flipped);
      ev.cls = iu.type_class;
      ev.forward = iu.forward;
      ev.m_under = iu.marking;
      ev.m_over = io.marking;
      const BraidWord& wb = e.word_before;
      int lo = std::min(wb.letters[e.site].index,
                        wb.letters[e.site + 1].index);
      ev.diff_e1 = bracket_of(wb, e.site, 3, tangle_e1(), lo) -
                   bracket_of(wb, e.site, 3, tangle_e2(), lo);
      for (int r = 0; r < 3; ++r)
        ev.dpdiff[r] = bracket_of(wb, e.site, 3, tangle_dp(r), lo) -
                       bracket_of(wb, e.site, 3, tangle_dp(r + 3), lo);
      SingularEventDiagram sd = SingularEventDiagram::from_word(
          wb, e.site, 3, tangle_triple_vertex(), lo);
      for (int pid = 0; pid < 12; ++pid)
        ev.prof[pid] =
            alexander_state_profile(sd, {kPairs[pid][0], kPairs[pid][1]});
      out.triples.push_back(std::move(ev));
    } else {
      TangEv ev;
      ev.creation = e.creation;
      TangencyInfo iu = tangency_info(e, plain);
      TangencyInfo io = tangency_info(e, flipped);
      ev.m_under = iu.marking;
      ev.m_over = io.marking;
      const BraidWord& wp = e.creation ? e.word_after : e.word_before;
      ev.first_positive = wp.letters[e.site].sign > 0;
      int lo = wp.letters[e.site].index;
      ev.br_cup = bracket_of(wp, e.site, 2, tangle_cupcap2(), lo);
      ev.br_id = bracket_of(wp, e.site, 2, tangle_id2(), lo);
      ev.br_x2 = bracket_of(wp, e.site, 2, tangle_x2(), lo);
      out.tangs.push_back(std::move(ev));
    }
  }
  return out;
}

// Cache of collected loops, keyed by word text and strategy.
std::map<std::pair<std::string, int>, LoopData> g_cache;

const LoopData& loop_data(const std::string& word, LoopStrategy strat) {
  auto key = std::make_pair(word, static_cast<int>(strat));
  auto it = g_cache.find(key);
  if (it == g_cache.end()) {
    it = g_cache.emplace(key, collect(parse_braid_word(word, 3), strat)).first;
    std::fflush(stdout);
  }
  return it->second;
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

// ---------------------------------------------------------------------------
// Knob-parametrized evaluation, mirroring the production assembly.

struct Knobs {
  int c1 = 0;
  int sT1 = 1, sT57 = 1, sT34 = 1, sT8 = 1;
  bool flip = false;
  int ttp = 1;      // tangency type of a sigma+ sigma- pair
  int ts1 = 1, ts2 = 1;
  int c0 = 0;
  std::array<int, 3> dp_gap{0, 1, 2};
  std::array<int, 8> aexp{2, 0, 2, 0, 0, 2, 2, 0};
  std::array<int, 8> asgn{1, 1, 1, 1, 1, 1, 1, 1};
  bool parity = true;
  std::array<std::array<int, 2>, 4> mk{{{0, 2}, {0, 5}, {1, 2}, {1, 5}}};

  ConventionTable table() const {
    ConventionTable c;
    c.c1 = c1;
    c.triple_sign_T1 = sT1;
    c.triple_sign_T57 = sT57;
    c.triple_sign_T34 = sT34;
    c.triple_sign_T8 = sT8;
    c.flip_qplus = flip;
    c.tangency_type_posneg = ttp;
    c.tangency_sign_1 = ts1;
    c.tangency_sign_2 = ts2;
    c.c0 = c0;
    c.dp_gap = dp_gap;
    c.alex_exp = aexp;
    c.alex_sgn = asgn;
    c.alex_parity = parity;
    c.marking_sector = mk;
    return c;
  }
};

int class_sign(const Knobs& k, TripleClass c) {
  switch (c) {
    case TripleClass::T1: return k.sT1;
    case TripleClass::T57: return k.sT57;
    case TripleClass::T34: return k.sT34;
    default: return k.sT8;
  }
}

int triple_sign(const Knobs& k, const TripleEv& ev) {
  return ev.forward ? class_sign(k, ev.cls) : -class_sign(k, ev.cls);
}

int tang_type(const Knobs& k, const TangEv& ev) {
  return ev.first_positive ? k.ttp : 3 - k.ttp;
}

int tang_sign(const Knobs& k, const TangEv& ev) {
  int s = tang_type(k, ev) == 1 ? k.ts1 : k.ts2;
  return ev.creation ? s : -s;
}

Laurent tpow(const Knobs& k, int m_under, int m_over) {
  return Laurent::monomial(1, 0, 0, k.flip ? m_over : m_under);
}

Laurent eval_S(const LoopData& d, const Knobs& k) {
  Laurent total;
  int c1sgn = k.c1 == 0 ? 1 : -1;
  for (const TripleEv& ev : d.triples)
    total = total + Laurent::monomial(triple_sign(k, ev) * c1sgn) *
                        ev.diff_e1 * weight_fS(ev.cls) *
                        tpow(k, ev.m_under, ev.m_over);
  return total;
}

Laurent eval_Spm(const LoopData& d, const Knobs& k, bool plus) {
  Laurent total;
  int c1sgn = k.c1 == 0 ? 1 : -1;
  const Laurent a2diff = Laurent::monomial(1, -2) + Laurent::monomial(-1, 2);
  for (const TripleEv& ev : d.triples) {
    bool positive_family =
        ev.cls == TripleClass::T1 || ev.cls == TripleClass::T57;
    if (positive_family != plus) continue;
    total = total + a2diff * Laurent::monomial(triple_sign(k, ev) * c1sgn) *
                        ev.diff_e1 * weight_fS(ev.cls) *
                        tpow(k, ev.m_under, ev.m_over);
  }
  for (const TangEv& ev : d.tangs) {
    const Laurent& br = k.c0 == 0 ? ev.br_cup : ev.br_id;
    Laurent fw = plus ? weight_fplus(tang_type(k, ev))
                      : weight_fminus(tang_type(k, ev));
    total = total + Laurent::monomial(tang_sign(k, ev)) * br * fw *
                        tpow(k, ev.m_under, ev.m_over);
  }
  return total;
}

// <C_i> - <Cbar_i> for the once-singular tangle assigned gap g.
Laurent dp_diff(const TripleEv& ev, int g) {
  return g < 3 ? ev.dpdiff[g] : Laurent() - ev.dpdiff[g - 3];
}

Laurent eval_X(const LoopData& d, const Knobs& k) {
  Laurent total;
  for (const TripleEv& ev : d.triples)
    for (int i = 0; i < 3; ++i) {
      Laurent fw = i == 0 ? weight_f3(ev.cls) : weight_f45(ev.cls);
      total = total + Laurent::monomial(triple_sign(k, ev)) *
                          dp_diff(ev, k.dp_gap[i]) * fw;
    }
  for (const TangEv& ev : d.tangs)
    total = total + Laurent::monomial(tang_sign(k, ev)) * ev.br_x2 *
                        weight_fX(tang_type(k, ev));
  return total;
}

Laurent eval_pair_diff(const TripleEv& ev, const Knobs& k, int pid,
                       int orient) {
  ConventionTable c;
  c.alex_exp = k.aexp;
  c.alex_sgn = k.asgn;
  c.alex_parity = k.parity;
  Laurent d = alexander_sum_from_profile(ev.prof[pid], c) -
              alexander_sum_from_profile(ev.prof[bar_pair(pid)], c);
  return orient > 0 ? d : Laurent() - d;
}

Laurent eval_Phi1(const LoopData& d, const Knobs& k, int pid, int orient) {
  Laurent total;
  const Laurent ap = Laurent::monomial(1, 1) + Laurent::monomial(1, -1);
  for (const TripleEv& ev : d.triples)
    total = total + ap *
                    Laurent::monomial(triple_sign(k, ev) * weight_g1(ev.cls)) *
                    eval_pair_diff(ev, k, pid, orient);
  return total;
}

Laurent eval_Phi234(const LoopData& d, const Knobs& k,
                    const std::array<std::pair<int, int>, 3>& picks) {
  Laurent total;
  for (const TripleEv& ev : d.triples) {
    Laurent inner;
    for (const auto& [pid, orient] : picks)
      inner = inner + eval_pair_diff(ev, k, pid, orient);
    total = total +
            Laurent::monomial(triple_sign(k, ev) * weight_g234(ev.cls)) *
            inner;
  }
  return total;
}

// ---------------------------------------------------------------------------
// Invariance harness

const std::vector<std::string> kMixedCorpus = {
    "1 1 1 -2 2", "-1 2 2 1", "1 -2 1 -2", "-1 -1 -2",
    "-1 -1 -1 -2 -2 -2", "1 1 -2"};
const std::vector<std::string> kPositiveCorpus = {
    "1 1 1 2 2", "1 2", "1 1 2 2", "1 1 1 2 2 2 2 2", "2 1 1 2"};

// Check that `eval` behaves like a homomorphism value on [rot]: equal for
// push_delta, alt_negative_rule and cyclic shifts; negated for
// push_delta_inverse.
template <typename Eval>
bool invariant_on(const std::string& word, Eval&& eval) {
  Laurent base = eval(loop_data(word, LoopStrategy::push_delta));
  if (!(eval(loop_data(word, LoopStrategy::alt_negative_rule)) == base))
    return false;
  if (!(eval(loop_data(word, LoopStrategy::push_delta_inverse)) ==
        Laurent() - base))
    return false;
  for (int k : {1, 2}) {
    std::string sw = shifted(word, k);
    if (!(eval(loop_data(sw, LoopStrategy::push_delta)) == base)) return false;
  }
  return true;
}

template <typename Eval>
bool invariant_on_all(const std::vector<std::string>& corpus, Eval&& eval) {
  for (const auto& w : corpus)
    if (!invariant_on(w, eval)) return false;
  return true;
}

Laurent pure_h_part(const Laurent& x) {
  Laurent out;
  for (const auto& [e, coef] : x.terms())
    if (e[VR] == 0 && e[VS] == 0 && e[VH] > 0)
      out = out + Laurent::monomial(coef, e[VA], e[VH]);
  return out;
}

std::string knob_summary(const Knobs& k) {
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "c1=%d sT1=%d sT57=%d sT34=%d sT8=%d flip=%d ttp=%d ts1=%d "
                "ts2=%d c0=%d dp=%d,%d,%d",
                k.c1, k.sT1, k.sT57, k.sT34, k.sT8, k.flip ? 1 : 0, k.ttp,
                k.ts1, k.ts2, k.c0, k.dp_gap[0], k.dp_gap[1], k.dp_gap[2]);
  return buf;
}

const char* kSectorName[6] = {"W1", "W2", "N", "E2", "E1", "S"};

// ---------------------------------------------------------------------------
// Independent oracle for the Alexander corner weights: on every 3-braid word
// whose closure is a knot, the parity-signed state sum of the plain closure
// diagram must equal det(I - reduced Burau) up to a unit +-t^k (t = A^2).

Laurent burau_det(const BraidWord& w) {
  using Mat2 = std::array<std::array<Laurent, 2>, 2>;
  auto mul = [](const Mat2& x, const Mat2& y) {
    Mat2 z;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        z[i][j] = x[i][0] * y[0][j] + x[i][1] * y[1][j];
    return z;
  };
  const Laurent one(1), zero, t = Laurent::monomial(1, 2),
                ti = Laurent::monomial(1, -2), mt = Laurent::monomial(-1, 2),
                mti = Laurent::monomial(-1, -2);
  Mat2 m = {{{one, zero}, {zero, one}}};
  for (const Letter& l : w.letters) {
    Mat2 g;
    if (l.index == 1 && l.sign > 0)
      g = {{{mt, one}, {zero, one}}};
    else if (l.index == 1)
      g = {{{mti, ti}, {zero, one}}};
    else if (l.sign > 0)
      g = {{{one, zero}, {t, mt}}};
    else
      g = {{{one, zero}, {one, mti}}};
    m = mul(m, g);
  }
  return (one - m[0][0]) * (one - m[1][1]) -
         (zero - m[0][1]) * (zero - m[1][0]);
}

bool unit_equal(const Laurent& x, const Laurent& y) {
  if (x.is_zero() || y.is_zero()) return x.is_zero() && y.is_zero();
  Laurent xs = x * Laurent::monomial(1, -x.min_exp(VA));
  Laurent ys = y * Laurent::monomial(1, -y.min_exp(VA));
  return xs == ys || xs == Laurent() - ys;
}

}  // namespace

int main() {
  // Published anchor values (attempted, reported; never silently required).
  const Laurent exS =
      parse_laurent("-2A^-17 +A^-13 -A^-9 +2A^-5 -A^-1 +A^3") *
      (Laurent::monomial(1, 0, 1, 2) + Laurent::monomial(1, 0, 1, 1));
  const Laurent exX4h =
      parse_laurent("A^-8 +A^-6 +A^-5 +A^-4 +A^-1 +1 +A +A^3 +A^4") *
      Laurent::monomial(1, 0, 1);
  const Laurent exPhi1 =
      parse_laurent("2A +2A^-1") * parse_laurent("-3A^-2 +4 -3A^2");

  const std::string anchorS = "1 1 1 2 2 2 2 2";
  const std::string anchorX = "1 1 1 2 2";
  bool anchorS_hit = false, anchorX_hit = false, anchorPhi_hit = false;

  // ----- Stage 1: S ---------------------------------------------------------
  // c1 = 0 is a pure gauge choice: flipping c1 together with all four triple
  // signs (and later both tangency signs) leaves every invariant unchanged.
  std::printf("stage 1: S\n");
  std::printf("  anchor attempt against the sigma_1^3 sigma_2^5 value:\n");
  for (int sT1 : {1, -1})
    for (int flip : {0, 1}) {
      Knobs k;
      k.sT1 = sT1;
      k.flip = flip;
      Laurent got = eval_S(loop_data(anchorS, LoopStrategy::push_delta), k);
      if (got == exS) {
        std::printf("    MATCH at sT1=%d flip=%d\n", sT1, flip);
        anchorS_hit = true;
      }
    }
  if (!anchorS_hit) {
    Knobs k;
    std::printf("    no candidate matches; nearest miss (sT1=1 flip=0):\n");
    std::printf("      computed %s\n",
                eval_S(loop_data(anchorS, LoopStrategy::push_delta), k)
                    .str()
                    .c_str());
    std::printf("      expected %s\n", exS.str().c_str());
    std::printf("    every per-event bracket difference is palindromic "
                "about the A-degree -2*(outside writhe); the printed value "
                "is not, so no sign assignment can reach it\n");
  }
  std::vector<Knobs> s1b;
  for (int sT57 : {1, -1})
    for (int sT34 : {1, -1})
      for (int sT8 : {1, -1}) {
        Knobs k;
        k.sT57 = sT57;
        k.sT34 = sT34;
        k.sT8 = sT8;
        if (invariant_on_all(kMixedCorpus, [&](const LoopData& d) {
              return eval_S(d, k);
            }))
          s1b.push_back(k);
      }
  std::printf("  %zu assignment(s) pass S invariance:\n", s1b.size());
  for (const Knobs& k : s1b) std::printf("    %s\n", knob_summary(k).c_str());
  if (s1b.empty()) return 1;
  Knobs pin = s1b.front();
  {
    Laurent v = eval_S(loop_data(anchorS, LoopStrategy::push_delta), pin);
    std::printf("  pinned S on the anchor word: %s\n",
                v.is_zero() ? "0" : v.str().c_str());
  }

  // ----- Stage 2: S+ / S- ---------------------------------------------------
  std::printf("stage 2: tangency knobs via S+/S- invariance and the "
              "positive-braid parity laws\n");
  const Laurent a2diff = Laurent::monomial(1, -2) + Laurent::monomial(-1, 2);
  std::vector<Knobs> s2;
  for (int ttp : {1, 2})
    for (int ts1 : {1, -1})
      for (int ts2 : {1, -1})
        for (int c0 : {0, 1}) {
          Knobs k = pin;
          k.ttp = ttp;
          k.ts1 = ts1;
          k.ts2 = ts2;
          k.c0 = c0;
          bool ok = invariant_on_all(kMixedCorpus, [&](const LoopData& d) {
                      return eval_Spm(d, k, true);
                    }) &&
                    invariant_on_all(kMixedCorpus, [&](const LoopData& d) {
                      return eval_Spm(d, k, false);
                    });
          // Positive braids: S- vanishes mod 2 and S+ matches (A^-2-A^2)S
          // mod 2.
          for (const auto& w : kPositiveCorpus) {
            if (!ok) break;
            const LoopData& d = loop_data(w, LoopStrategy::push_delta);
            if (!eval_Spm(d, k, false).reduce_mod2().is_zero()) ok = false;
            if (!(eval_Spm(d, k, true).reduce_mod2() ==
                  (a2diff * eval_S(d, k)).reduce_mod2()))
              ok = false;
          }
          if (ok) s2.push_back(k);
        }
  std::printf("  %zu survivor(s)\n", s2.size());
  for (const Knobs& k : s2) std::printf("    %s\n", knob_summary(k).c_str());
  if (s2.empty()) return 1;
  pin = s2.front();

  // ----- Stage 3: X ----------------------------------------------------------
  // Only the full three-couple sum is an invariant: the wall-crossing terms
  // of the couple weighted by the distinguished table must cancel the
  // autotangency defect that appears when a cancelled degenerate pair is
  // recreated on the other strand pair, which ties the couple choice to the
  // tangency signs pinned in stage 2.
  std::printf("stage 3: once-singular tangle assignment via invariance of "
              "the full X sum\n");
  std::vector<Knobs> s3;
  std::vector<std::array<int, 3>> perms = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                           {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (const Knobs& base : s2)
    for (const auto& p : perms)
      for (int o3 : {0, 3})
        for (int o4 : {0, 3})
          for (int o5 : {0, 3}) {
            Knobs k = base;
            k.dp_gap = {p[0] + o3, p[1] + o4, p[2] + o5};
            if (!invariant_on_all(kMixedCorpus, [&](const LoopData& d) {
                  return eval_X(d, k);
                }))
              continue;
            s3.push_back(k);
            // Anchor attempt: mod-2 reduction of the halved pure-h part of
            // the triple-point contributions to X_4.
            Laurent x4t;
            {
              const LoopData& d = loop_data(anchorX, LoopStrategy::push_delta);
              int g = k.dp_gap[1];
              for (const TripleEv& ev : d.triples)
                x4t = x4t + Laurent::monomial(triple_sign(k, ev)) *
                                dp_diff(ev, g) * weight_f45(ev.cls);
            }
            try {
              Laurent h2 = halve_h_part(pure_h_part(x4t));
              if (h2.reduce_mod2() == exX4h) {
                std::printf("  X_4 anchor MATCH at dp=%d,%d,%d\n", k.dp_gap[0],
                            k.dp_gap[1], k.dp_gap[2]);
                anchorX_hit = true;
              }
            } catch (const std::exception&) {
              // odd h-part coefficient: not divisible by two, no anchor match
            }
          }
  std::printf("  %zu assignment(s) pass full-X invariance (couple C3 must "
              "be the gap 2/5 one, oriented with the tangency signs)\n",
              s3.size());
  if (!anchorX_hit)
    std::printf("  X_4 anchor unmatched: every event bracket here has an "
                "even A-degree (eight ordinary crossings), while the printed "
                "value mixes even and odd degrees\n");
  if (s3.empty()) return 1;
  pin = s3.front();
  std::printf("  pinned %s\n", knob_summary(pin).c_str());

  // ----- Stage 4: Alexander weights and markings -----------------------------
  std::printf("stage 4a: corner weights via the Burau determinant oracle\n");
  {
    // Sweep signed monomials {+-1, +-t, +-t^-1} per (sign, corner) slot,
    // positive-crossing slots first against positive oracle words, then the
    // negative slots against mixed words.
    std::vector<std::string> pos_words = {"1 2", "1 1 1 2", "1 1 1 2 2 2 2 2",
                                          "1 1 1 1 1 2"};
    std::vector<std::string> mix_words = {"1 -2 1 -2", "-1 -2 -1 -2",
                                          "1 1 -2 -2 1 -2", "-1 2 -1 2",
                                          "1 1 1 -2"};
    auto profile_of = [](const std::string& ws) {
      BraidWord w = parse_braid_word(ws, 3);
      return alexander_state_profile(
          SingularEventDiagram::from_word(w, -1, 0, std::nullopt, 1), {});
    };
    std::vector<Profile> pos_prof, mix_prof;
    std::vector<Laurent> pos_tgt, mix_tgt;
    for (const auto& ws : pos_words) {
      pos_prof.push_back(profile_of(ws));
      pos_tgt.push_back(burau_det(parse_braid_word(ws, 3)));
    }
    for (const auto& ws : mix_words) {
      mix_prof.push_back(profile_of(ws));
      mix_tgt.push_back(burau_det(parse_braid_word(ws, 3)));
    }
    const std::array<std::pair<int, int>, 6> opts{
        {{0, 1}, {0, -1}, {2, 1}, {2, -1}, {-2, 1}, {-2, -1}}};
    auto eval_profile = [](const Profile& prof, const std::array<int, 8>& ex,
                           const std::array<int, 8>& sg, bool par) {
      ConventionTable c;
      c.alex_exp = ex;
      c.alex_sgn = sg;
      c.alex_parity = par;
      return alexander_sum_from_profile(prof, c);
    };
    long pos_hits = 0, full_hits = 0;
    std::optional<Knobs> first_full;
    for (int par = 1; par >= 0; --par) {
      for (int code = 0; code < 1296; ++code) {
        std::array<int, 8> ex{};
        std::array<int, 8> sg{1, 1, 1, 1, 1, 1, 1, 1};
        int cc = code;
        for (int i = 0; i < 4; ++i) {
          ex[i] = opts[cc % 6].first;
          sg[i] = opts[cc % 6].second;
          cc /= 6;
        }
        bool okpos = true;
        for (std::size_t i = 0; i < pos_words.size() && okpos; ++i)
          if (!unit_equal(eval_profile(pos_prof[i], ex, sg, par), pos_tgt[i]))
            okpos = false;
        if (!okpos) continue;
        ++pos_hits;
        for (int code2 = 0; code2 < 1296; ++code2) {
          int c2 = code2;
          for (int i = 4; i < 8; ++i) {
            ex[i] = opts[c2 % 6].first;
            sg[i] = opts[c2 % 6].second;
            c2 /= 6;
          }
          bool ok = true;
          for (std::size_t i = 0; i < mix_words.size() && ok; ++i)
            if (!unit_equal(eval_profile(mix_prof[i], ex, sg, par),
                            mix_tgt[i]))
              ok = false;
          if (!ok) continue;
          ++full_hits;
          if (!first_full) {
            Knobs k = pin;
            k.aexp = ex;
            k.asgn = sg;
            k.parity = par != 0;
            first_full = k;
          }
        }
      }
      if (full_hits > 0) {
        std::printf("  parity %s: %ld positive-slot hits, %ld full tables "
                    "reproduce det(I - Burau) on all knot words\n",
                    par ? "on" : "off", pos_hits, full_hits);
        break;
      }
      std::printf("  parity %s: no full table matches\n", par ? "on" : "off");
    }
    if (!first_full) return 1;
    // Prefer the canonical representative w+ = (t,1,t,1), w- = (1,t,t,1) if
    // it is among the survivors (all survivors differ by unit renormalings).
    Knobs canon = pin;
    canon.aexp = {2, 0, 2, 0, 0, 2, 2, 0};
    canon.asgn = {1, 1, 1, 1, 1, 1, 1, 1};
    canon.parity = true;
    bool canon_ok = true;
    for (std::size_t i = 0; i < pos_words.size() && canon_ok; ++i)
      if (!unit_equal(eval_profile(pos_prof[i], canon.aexp, canon.asgn, true),
                      pos_tgt[i]))
        canon_ok = false;
    for (std::size_t i = 0; i < mix_words.size() && canon_ok; ++i)
      if (!unit_equal(eval_profile(mix_prof[i], canon.aexp, canon.asgn, true),
                      mix_tgt[i]))
        canon_ok = false;
    pin = canon_ok ? canon : *first_full;
    std::printf("  pinned weights w+=(");
    for (int i = 0; i < 4; ++i)
      std::printf("%+dA^%d%s", pin.asgn[i], pin.aexp[i], i < 3 ? "," : ") w-=(");
    for (int i = 4; i < 8; ++i)
      std::printf("%+dA^%d%s", pin.asgn[i], pin.aexp[i], i < 7 ? "," : ")\n");
  }

  std::printf("stage 4b: marking couples via the Phi^(1) anchor and "
              "invariance\n");
  {
    std::vector<std::pair<int, int>> inv_couples;  // (pid, orient)
    for (int pid = 0; pid < 12; ++pid) {
      if (pid > bar_pair(pid)) continue;
      for (int orient : {1, -1}) {
        if (eval_Phi1(loop_data(anchorX, LoopStrategy::push_delta), pin, pid,
                      orient) == exPhi1) {
          std::printf("  Phi^(1) anchor MATCH at couple %s,%s\n",
                      kSectorName[kPairs[pid][0]], kSectorName[kPairs[pid][1]]);
          anchorPhi_hit = true;
        }
        if (invariant_on_all(kMixedCorpus, [&](const LoopData& d) {
              return eval_Phi1(d, pin, pid, orient);
            }))
          inv_couples.emplace_back(pid, orient);
      }
    }
    if (!anchorPhi_hit)
      std::printf("  Phi^(1) anchor unmatched: in the braid geometry the "
                  "sectors above and below the site are the star regions, "
                  "so four of the six couples vanish identically and the two "
                  "non-vanishing couples fail homology invariance\n");
    std::printf("  %zu couple choice(s) pass Phi^(1) invariance\n",
                inv_couples.size());
    if (inv_couples.empty()) return 1;
    // All invariant couples touch a star sector (and evaluate to zero); pick
    // four distinct ones for C1..C4, preferring the canonical order.
    std::set<int> chosen;
    int idx = 0;
    for (const auto& [pid, orient] : inv_couples) {
      if (idx >= 4) break;
      if (orient < 0 || chosen.count(pid)) continue;
      chosen.insert(pid);
      pin.mk[idx++] = {kPairs[pid][0], kPairs[pid][1]};
    }
    if (idx < 4) {
      std::printf("  fewer than four invariant couples\n");
      return 1;
    }
    for (int i = 0; i < 4; ++i)
      std::printf("  marking.C%d = %s,%s\n", i + 1,
                  kSectorName[pin.mk[i][0]], kSectorName[pin.mk[i][1]]);
  }

  // ----- Final re-verification through the production assembly --------------
  std::printf("final table: %s\n", knob_summary(pin).c_str());
  ConventionTable conv = pin.table();
  std::printf("  fingerprint %s\n", conv.fingerprint().c_str());
  ConventionTable dflt = ConventionTable::pinned_default();
  std::printf("  %s the shipped default (%s)\n",
              conv.fingerprint() == dflt.fingerprint() ? "matches"
                                                       : "DIFFERS FROM",
              dflt.fingerprint().c_str());

  auto report = [&](const char* name, bool ok) {
    std::printf("  %s: %s\n", name, ok ? "matched" : "unmatched");
  };
  report("published S value", compute_invariant(parse_braid_word(anchorS, 3),
                                                InvariantKind::S, conv)
                                      .value == exS);
  {
    ComputeOptions opt;
    opt.part = "1";
    report("published Phi^(1) value",
           compute_invariant(parse_braid_word(anchorX, 3), InvariantKind::Phi,
                             conv, opt)
                   .value == exPhi1);
  }
  {
    ComputeOptions opt;
    opt.part = "4";
    opt.no_tangencies = true;
    Laurent x4 = compute_invariant(parse_braid_word(anchorX, 3),
                                   InvariantKind::X, conv, opt)
                     .value;
    bool ok = false;
    try {
      ok = halve_h_part(pure_h_part(x4)).reduce_mod2() == exX4h;
    } catch (const std::exception&) {
    }
    report("published X_4 triple-point h-part", ok);
  }
  std::printf("calibration complete: table pinned by invariance and the "
              "determinant oracle; anchors reported above\n");
  return 0;
}
