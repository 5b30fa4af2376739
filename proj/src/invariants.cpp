#include "annular/invariants.hpp"

#include <algorithm>
#include <stdexcept>

namespace annular {

InvariantKind parse_invariant_kind(const std::string& name) {
  if (name == "S") return InvariantKind::S;
  if (name == "S+" || name == "Splus" || name == "S-plus")
    return InvariantKind::Splus;
  if (name == "S-" || name == "Sminus" || name == "S-minus")
    return InvariantKind::Sminus;
  if (name == "X") return InvariantKind::X;
  if (name == "Phi" || name == "phi") return InvariantKind::Phi;
  throw std::runtime_error("unknown invariant " + name);
}

const char* invariant_kind_name(InvariantKind k) {
  switch (k) {
    case InvariantKind::S: return "S";
    case InvariantKind::Splus: return "S+";
    case InvariantKind::Sminus: return "S-";
    case InvariantKind::X: return "X";
    default: return "Phi";
  }
}

Laurent weight_fS(TripleClass c) {
  switch (c) {
    case TripleClass::T1: return Laurent::monomial(1);
    case TripleClass::T34: return Laurent::monomial(1, 4);
    case TripleClass::T57: return Laurent::monomial(-1, 2);
    default: return Laurent::monomial(-1, 6);
  }
}

Laurent weight_f3(TripleClass c) {
  switch (c) {
    case TripleClass::T1: return Laurent::monomial(-1, 4);
    case TripleClass::T34: return Laurent::monomial(-1);
    case TripleClass::T57: return Laurent::monomial(1, 6);
    default: return Laurent::monomial(1, 2);
  }
}

Laurent weight_f45(TripleClass c) { return weight_fS(c); }

Laurent weight_fplus(int tangency_type) {
  return Laurent::monomial(tangency_type == 1 ? 1 : -1, 3);
}

Laurent weight_fminus(int tangency_type) {
  return Laurent::monomial(tangency_type == 1 ? 1 : -1, -3);
}

Laurent weight_fX(int tangency_type) {
  Laurent v = Laurent::monomial(1, 5) + Laurent::monomial(1, 1);
  return tangency_type == 1 ? v : Laurent() - v;
}

int weight_g1(TripleClass c) {
  return (c == TripleClass::T1 || c == TripleClass::T34) ? 1 : -1;
}

int weight_g234(TripleClass c) { return weight_g1(c); }

namespace {

Laurent bracket_of(const BraidWord& w, int site, int count, Tangle tangle,
                   int lo) {
  return jones_bracket(
      SingularEventDiagram::from_word(w, site, count, std::move(tangle), lo));
}

// <D_p(C)> - <D_p(Cbar)> for a smoothing or once-singular couple.
Laurent jones_couple_diff(const BraidWord& w, int site, const Tangle& c,
                          const Tangle& cbar, int lo) {
  return bracket_of(w, site, 3, c, lo) - bracket_of(w, site, 3, cbar, lo);
}

}  // namespace

Laurent halve_h_part(const Laurent& x) {
  Laurent out;
  for (const auto& [e, coef] : x.terms()) {
    if (e[VR] == 0 && e[VS] == 0) {
      if (coef % 2 != 0)
        throw std::runtime_error(
            "halve_h_part: odd coefficient in the pure-h part");
      out = out + Laurent::monomial(coef / 2, e[VA], e[VH], e[VT], 0, 0);
    } else {
      out = out + Laurent::monomial(coef, e[VA], e[VH], e[VT], e[VR], e[VS]);
    }
  }
  return out;
}

InvariantResult compute_invariant(const BraidWord& w, InvariantKind kind,
                                  const ConventionTable& conv,
                                  const ComputeOptions& opt) {
  CanonicalLoop loop = canonical_loop(w, opt.strategy);
  InvariantResult res;

  const Tangle c1 = conv.c1 == 0 ? tangle_e1() : tangle_e2();
  const Tangle c1bar = conv.c1 == 0 ? tangle_e2() : tangle_e1();
  const Tangle c0 = conv.c0 == 0 ? tangle_cupcap2() : tangle_id2();

  std::vector<int> x_parts;  // which of C3, C4, C5 enter the triple sum
  if (kind == InvariantKind::X) {
    if (opt.part.empty())
      x_parts = {3, 4, 5};
    else if (opt.part == "3" || opt.part == "4" || opt.part == "5")
      x_parts = {opt.part[0] - '0'};
    else
      throw std::runtime_error("X part must be 3, 4 or 5");
  }
  bool phi1 = true, phi234 = true;
  if (kind == InvariantKind::Phi && !opt.part.empty()) {
    if (opt.part == "1")
      phi234 = false;
    else if (opt.part == "234")
      phi1 = false;
    else
      throw std::runtime_error("Phi part must be 1 or 234");
  }
  if (!opt.part.empty() && kind != InvariantKind::X &&
      kind != InvariantKind::Phi)
    throw std::runtime_error("--part applies only to X and Phi");

  const Laurent a2diff =
      Laurent::monomial(1, -2) + Laurent::monomial(-1, 2);  // A^-2 - A^2
  const Laurent aplus = Laurent::monomial(1, 1) + Laurent::monomial(1, -1);

  int ev_index = 0;
  for (const LoopEvent& e : loop.events) {
    Laurent contrib;
    std::string type_name;
    int ev_sign = 0, ev_marking = 0;

    if (e.kind == EventKind::TriplePoint) {
      ++res.triple_events;
      TripleInfo info = triple_info(e, conv);
      type_name = triple_class_name(info.type_class);
      ev_sign = info.sign;
      ev_marking = info.marking;
      const BraidWord& wb = e.word_before;
      int lo = std::min(wb.letters[e.site].index, wb.letters[e.site + 1].index);
      Laurent sgn = Laurent::monomial(info.sign);

      switch (kind) {
        case InvariantKind::S: {
          Laurent diff = jones_couple_diff(wb, e.site, c1, c1bar, lo);
          contrib = sgn * diff * weight_fS(info.type_class) *
                    Laurent::monomial(1, 0, 0, info.marking);
          break;
        }
        case InvariantKind::Splus:
        case InvariantKind::Sminus: {
          bool positive_family = info.type_class == TripleClass::T1 ||
                                 info.type_class == TripleClass::T57;
          bool wanted = (kind == InvariantKind::Splus) == positive_family;
          if (!wanted) break;
          Laurent diff = jones_couple_diff(wb, e.site, c1, c1bar, lo);
          contrib = a2diff * sgn * diff * weight_fS(info.type_class) *
                    Laurent::monomial(1, 0, 0, info.marking);
          break;
        }
        case InvariantKind::X: {
          for (int i : x_parts) {
            int gap = conv.dp_gap[i - 3];
            Laurent diff = jones_couple_diff(wb, e.site, tangle_dp(gap),
                                             tangle_dp((gap + 3) % 6), lo);
            Laurent fw = i == 3 ? weight_f3(info.type_class)
                                : weight_f45(info.type_class);
            contrib = contrib + sgn * diff * fw;
          }
          break;
        }
        case InvariantKind::Phi: {
          SingularEventDiagram sd = SingularEventDiagram::from_word(
              wb, e.site, 3, tangle_triple_vertex(), lo);
          auto couple_diff = [&](int which) {
            auto [s0, s1] = std::pair(conv.marking_sector[which][0],
                                      conv.marking_sector[which][1]);
            Laurent a = alexander_statesum(sd, {s0, s1}, conv);
            Laurent b = alexander_statesum(
                sd, {(s0 + 3) % 6, (s1 + 3) % 6}, conv);
            return a - b;
          };
          if (phi1)
            contrib = contrib + aplus * sgn * couple_diff(0) *
                          Laurent::monomial(weight_g1(info.type_class));
          if (phi234)
            for (int i = 1; i < 4; ++i)
              contrib = contrib + sgn * couple_diff(i) *
                            Laurent::monomial(weight_g234(info.type_class));
          break;
        }
      }
    } else {
      ++res.tangency_events;
      TangencyInfo info = tangency_info(e, conv);
      type_name = std::to_string(info.type);
      ev_sign = info.sign;
      ev_marking = info.marking;
      if (!opt.no_tangencies) {
        const BraidWord& wp = e.creation ? e.word_after : e.word_before;
        int lo = wp.letters[e.site].index;
        Laurent sgn = Laurent::monomial(info.sign);
        switch (kind) {
          case InvariantKind::Splus:
          case InvariantKind::Sminus: {
            Laurent br = bracket_of(wp, e.site, 2, c0, lo);
            Laurent fw = kind == InvariantKind::Splus
                             ? weight_fplus(info.type)
                             : weight_fminus(info.type);
            contrib =
                sgn * br * fw * Laurent::monomial(1, 0, 0, info.marking);
            break;
          }
          case InvariantKind::X: {
            Laurent br = bracket_of(wp, e.site, 2, tangle_x2(), lo);
            contrib = sgn * br * weight_fX(info.type);
            break;
          }
          default:
            break;  // S and Phi ignore autotangencies
        }
      }
    }

    res.value = res.value + contrib;
    if (opt.dump_events) {
      EventContribution ec;
      ec.index = ev_index;
      ec.kind = e.kind;
      ec.pass = e.pass_index;
      ec.site = e.site;
      ec.word = e.word_before.str();
      ec.type = type_name;
      ec.sign = ev_sign;
      ec.marking = ev_marking;
      ec.contribution = contrib;
      res.events.push_back(std::move(ec));
    }
    ++ev_index;
  }

  if (opt.a4) res.value = res.value.reduce_a4();
  if (opt.mod2) res.value = res.value.reduce_mod2();
  return res;
}

}  // namespace annular
