#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "annular/diagram.hpp"

using namespace annular;

namespace {

// rot_pi on a width-3 tangle: port L_k <-> R_{4-k}.  Returns the arc set as a
// canonical pairing for comparison.
std::set<std::pair<int, int>> pairing(const Tangle& t, bool rotate) {
  auto port_id = [&](TanglePort p) {
    if (rotate) p = TanglePort{1 - p.side, t.width + 1 - p.pos};
    return p.side * 8 + p.pos;
  };
  std::set<std::pair<int, int>> out;
  for (const auto& a : t.arcs) {
    int x = port_id(a.a), y = port_id(a.b);
    out.insert({std::min(x, y), std::max(x, y)});
  }
  return out;
}

SingularEventDiagram site_only(int strands, Tangle t, int lo) {
  SingularEventDiagram d;
  d.strands = strands;
  d.site = std::move(t);
  d.site_column = 0;
  d.site_lo = lo;
  d.total_columns = 2;
  return d;
}

}  // namespace

TEST_CASE("tangle catalog forms rot_pi couples") {
  CHECK(pairing(tangle_e1(), true) == pairing(tangle_e2(), false));
  for (int g = 0; g < 6; ++g)
    CHECK(pairing(tangle_dp(g), true) ==
          pairing(tangle_dp((g + 3) % 6), false));
  CHECK(pairing(tangle_cupcap2(), true) == pairing(tangle_cupcap2(), false));
  CHECK(pairing(tangle_x2(), true) == pairing(tangle_x2(), false));
  CHECK_THROWS(tangle_dp(6));
}

TEST_CASE("state circles of the sigma_1 closure in B_2") {
  BraidWord w = parse_braid_word("1");
  auto d = SingularEventDiagram::from_word(w, -1, 0, std::nullopt, 1);
  // Identity smoothing: two essential circles.
  auto s1 = trace_state_circles(d, {true});
  REQUIRE(s1.circles.size() == 2);
  CHECK(s1.h_count() == 2);
  CHECK(s1.d_count() == 0);
  // Cap-cup smoothing: one contractible circle.
  auto s2 = trace_state_circles(d, {false});
  REQUIRE(s2.circles.size() == 1);
  CHECK(s2.d_count() == 1);
}

TEST_CASE("a bare cap-cup site is one contractible circle") {
  auto d = site_only(2, tangle_cupcap2(), 1);
  auto s = trace_state_circles(d, {});
  REQUIRE(s.circles.size() == 1);
  CHECK(s.circles[0].winding == 0);
  CHECK(!s.circles[0].singular);
}

TEST_CASE("the transverse double point site alone is a double circle") {
  auto d = site_only(2, tangle_x2(), 1);
  auto s = trace_state_circles(d, {});
  REQUIRE(s.circles.size() == 1);
  CHECK(s.circles[0].winding == 2);
  CHECK(s.circles[0].singular);
  CHECK(s.has_double_circle);
  CHECK(s.inner_h == 0);
  CHECK(s.outer_h == 0);
}

TEST_CASE("double circle with an inner and an outer h-circle") {
  // B_4: double point on strands 2,3; strands 1 and 4 are h-circles on the
  // inner respectively outer side.
  auto d = site_only(4, tangle_x2(), 2);
  auto s = trace_state_circles(d, {});
  REQUIRE(s.circles.size() == 3);
  CHECK(s.has_double_circle);
  CHECK(s.inner_h == 1);
  CHECK(s.outer_h == 1);
}

TEST_CASE("once-singular tangles trace to a single singular curve in B_3") {
  for (int g = 0; g < 6; ++g) {
    auto d = site_only(3, tangle_dp(g), 1);
    auto s = trace_state_circles(d, {});
    int singulars = 0;
    for (const auto& c : s.circles) singulars += c.singular;
    CHECK(singulars == 1);
  }
}

TEST_CASE("region counts: plain closed braids") {
  auto d1 = SingularEventDiagram::from_word(parse_braid_word("1"), -1, 0,
                                            std::nullopt, 1);
  auto r1 = enumerate_regions(d1);
  CHECK(r1.region_count == 3);
  CHECK(r1.inner_star != r1.outer_star);

  auto d3 = SingularEventDiagram::from_word(parse_braid_word("1 1 1"), -1, 0,
                                            std::nullopt, 1);
  CHECK(enumerate_regions(d3).region_count == 5);

  // c ordinary crossings -> c+2 regions on a bigger mixed word.
  BraidWord w = parse_braid_word("1 1 1 2 2 -1 2 2");
  auto dw = SingularEventDiagram::from_word(w, -1, 0, std::nullopt, 1);
  CHECK(enumerate_regions(dw).region_count == w.length() + 2);
}

TEST_CASE("region counts: one triple point gives c+4 regions") {
  BraidWord w = parse_braid_word("1 2 1 2 2 1 1 2");
  auto d = SingularEventDiagram::from_word(w, 0, 3, tangle_triple_vertex(), 1);
  auto r = enumerate_regions(d);
  CHECK(r.region_count == (w.length() - 3) + 4);
  // All six sectors are present and antipodal ones differ.
  for (int i = 0; i < 6; ++i) CHECK(r.site_sectors[i] >= 0);
  // Crossingless tangles are rejected here.
  auto bad = SingularEventDiagram::from_word(w, 0, 3, tangle_e1(), 1);
  CHECK_THROWS(enumerate_regions(bad));
}

TEST_CASE("region counts: tangency vertex gives c+3 regions") {
  BraidWord w = parse_braid_word("1 -1 2 2 1");
  auto d = SingularEventDiagram::from_word(w, 0, 2, tangle_x2(), 1);
  auto r = enumerate_regions(d);
  CHECK(r.region_count == (w.length() - 2) + 3);
  for (int i = 0; i < 4; ++i) CHECK(r.site_sectors[i] >= 0);
}

TEST_CASE("triple point classification by sign pattern") {
  int dist = -1, slot = -1;
  CHECK(classify_triple({1, 1}, {2, 1}, {1, 1}, &dist, &slot) ==
        TripleClass::T1);
  CHECK(classify_triple({1, -1}, {2, -1}, {1, -1}, &dist, &slot) ==
        TripleClass::T8);
  CHECK(classify_triple({1, 1}, {2, 1}, {1, -1}, &dist, &slot) ==
        TripleClass::T57);
  CHECK(classify_triple({1, -1}, {2, -1}, {1, 1}, &dist, &slot) ==
        TripleClass::T34);
  CHECK(classify_triple({2, 1}, {1, 1}, {2, -1}, &dist, &slot) ==
        TripleClass::T57);
  // The impossible cyclic patterns abort distinctly.
  CHECK_THROWS_AS(classify_triple({1, 1}, {2, -1}, {1, 1}, nullptr, nullptr),
                  StarLikeConfiguration);
  CHECK_THROWS_AS(classify_triple({1, -1}, {2, 1}, {1, -1}, nullptr, nullptr),
                  StarLikeConfiguration);
}

TEST_CASE("distinguished crossing is the highest-lowest one") {
  // sigma_1 sigma_2 sigma_1 all positive: strand entering at 1 passes over
  // both others (highest); strand entering at 3 under both (lowest); they
  // cross at the middle letter.
  int dist = -1;
  classify_triple({1, 1}, {2, 1}, {1, 1}, &dist, nullptr);
  CHECK(dist == 1);
}

TEST_CASE("homological markings of crossings") {
  // Trefoil as closure of sigma_1^3 in B_2: knot, markings sum to n = 2.
  BraidWord w3 = parse_braid_word("1 1 1");
  for (int pos = 0; pos < 3; ++pos) {
    int under = homological_marking(w3, pos, false);
    int over = homological_marking(w3, pos, true);
    CHECK(under + over == 2);
    CHECK(under >= 1);
  }
  // sigma_1^2 closes to a 2-component link: branches on different components.
  CHECK(homological_marking(parse_braid_word("1 1"), 0, false) == 0);
  // A 3-braid knot: markings in {1, 2}, sum 3.
  BraidWord w = parse_braid_word("1 1 1 2 2 2 2 2");
  auto comps = closure_components(w);
  REQUIRE(comps.size() == 1);
  for (int pos = 0; pos < w.length(); ++pos) {
    int under = homological_marking(w, pos, false);
    int over = homological_marking(w, pos, true);
    CHECK(under + over == 3);
  }
}

TEST_CASE("event info: signs flip with direction and creation") {
  ConventionTable conv;
  BraidWord w = parse_braid_word("1 1 1 2 2 2 2 2");
  CanonicalLoop loop = canonical_loop(w);
  for (const auto& e : loop.events) {
    if (e.kind == EventKind::TriplePoint) {
      TripleInfo info = triple_info(e, conv);
      CHECK(info.type_class == TripleClass::T1);  // positive braid
      CHECK(info.sign == (info.forward ? conv.triple_sign_T1
                                       : -conv.triple_sign_T1));
      CHECK(info.whitney == 0);
      CHECK(info.marking >= 1);
    } else {
      TangencyInfo info = tangency_info(e, conv);
      CHECK((info.type == 1 || info.type == 2));
      CHECK(info.sign != 0);
    }
  }
  // Matching creations and annihilations carry equal markings (per pass, the
  // cancelled pairs are the created ones).  A pair is created in the
  // sigma+ sigma- pattern and annihilated in the swapped sigma- sigma+ one,
  // so the types are opposite and the signed type weights cancel.
  for (int pass = 1; pass <= 2; ++pass) {
    std::multiset<int> created, killed;
    int weighted = 0;
    for (const auto& e : loop.events) {
      if (e.kind != EventKind::Autotangency || e.pass_index != pass) continue;
      TangencyInfo info = tangency_info(e, conv);
      CHECK(info.type == (e.creation ? 1 : 2));
      (e.creation ? created : killed).insert(info.marking);
      weighted += info.sign * (info.type == 1 ? 1 : -1);
    }
    CHECK(created == killed);
    CHECK(weighted == 0);
  }
}

TEST_CASE("convention table: fingerprint and overrides") {
  ConventionTable a, b;
  CHECK(a.fingerprint() == b.fingerprint());
  b.apply_override_line("triple_sign.T1.forward = -1");
  CHECK(b.triple_sign_T1 == -1);
  CHECK(a.fingerprint() != b.fingerprint());
  b.apply_override_line("triple_sign.T8.backward = +1");
  CHECK(b.triple_sign_T8 == -1);
  b.apply_override_line("tangle.C1 = m16_23_45");
  CHECK(b.c1 == 1);
  b.apply_override_line("tangle.C3 = dp4");
  CHECK(b.dp_gap[0] == 4);
  b.apply_override_line("alex_weight.pos.W = -A^4");
  CHECK(b.alex_sgn[0] == -1);
  CHECK(b.alex_exp[0] == 4);
  b.apply_override_line("alex_weight.neg.S = A^-2");
  CHECK(b.alex_sgn[7] == 1);
  CHECK(b.alex_exp[7] == -2);
  b.apply_override_line("alex_parity = off");
  CHECK(!b.alex_parity);
  b.apply_override_line("marking.C2 = W1,N");
  CHECK(b.marking_sector[1][0] == 0);
  CHECK(b.marking_sector[1][1] == 2);
  b.apply_override_line("qplus = over");
  CHECK(b.flip_qplus);
  b.apply_override_line("  # comment only");
  CHECK_THROWS(b.apply_override_line("marking.C2 = W1,E2"));  // antipodal
  CHECK_THROWS(b.apply_override_line("nonsense = 1"));
  CHECK_THROWS(b.apply_override_line("triple_sign.T9 = 1"));
}
