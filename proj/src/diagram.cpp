#include "annular/diagram.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace annular {

// ---------------------------------------------------------------------------
// Tangle catalog.
//
// Boundary ports of a width-3 tangle in counterclockwise order are
// L1,L2,L3,R3,R2,R1 (numbered 1..6 in names like m12_34_56); for width 2 they
// are L1,L2,R2,R1 (1..4).  A transverse double point joins opposite ends of
// the four arcs meeting it.

namespace {

TanglePort L(int p) { return TanglePort{0, p}; }
TanglePort R(int p) { return TanglePort{1, p}; }

Tangle make3(std::vector<TangleArc> arcs, std::string name) {
  Tangle t;
  t.width = 3;
  t.arcs = std::move(arcs);
  t.name = std::move(name);
  return t;
}

}  // namespace

Tangle tangle_e1() {
  return make3({{L(1), L(2)}, {R(1), R(2)}, {L(3), R(3)}}, "m12_34_56");
}

Tangle tangle_e2() {
  return make3({{L(2), L(3)}, {R(2), R(3)}, {L(1), R(1)}}, "m16_23_45");
}

Tangle tangle_dp(int gap) {
  // The free arc occupies boundary gap `gap` (between counterclockwise ports
  // gap+1 and gap+2); the other four ports meet the double point, opposite
  // ends joined.
  switch (gap) {
    case 0:
      return make3({{L(1), L(2)}, {L(3), R(2), true}, {R(3), R(1), true}},
                   "dp0");
    case 1:
      return make3({{L(2), L(3)}, {L(1), R(2), true}, {R(3), R(1), true}},
                   "dp1");
    case 2:
      return make3({{L(3), R(3)}, {L(1), R(2), true}, {L(2), R(1), true}},
                   "dp2");
    case 3:
      return make3({{R(2), R(3)}, {L(1), L(3), true}, {L(2), R(1), true}},
                   "dp3");
    case 4:
      return make3({{R(1), R(2)}, {L(1), L(3), true}, {L(2), R(3), true}},
                   "dp4");
    case 5:
      return make3({{L(1), R(1)}, {L(2), R(3), true}, {L(3), R(2), true}},
                   "dp5");
    default:
      throw std::runtime_error("tangle_dp: gap out of range");
  }
}

Tangle tangle_cupcap2() {
  Tangle t;
  t.width = 2;
  t.arcs = {{L(1), L(2)}, {R(1), R(2)}};
  t.name = "m12_34";
  return t;
}

Tangle tangle_id2() {
  Tangle t;
  t.width = 2;
  t.arcs = {{L(1), R(1)}, {L(2), R(2)}};
  t.name = "m14_23";
  return t;
}

Tangle tangle_x2() {
  Tangle t;
  t.width = 2;
  t.arcs = {{L(1), R(2), true}, {L(2), R(1), true}};
  t.name = "x2";
  return t;
}

Tangle tangle_triple_vertex() {
  // All three branches pass through one point; used for region enumeration of
  // the singular diagram itself.
  return make3({{L(1), R(3), true}, {L(2), R(2), true}, {L(3), R(1), true}},
               "v3");
}

// ---------------------------------------------------------------------------
// SingularEventDiagram

SingularEventDiagram SingularEventDiagram::from_word(
    const BraidWord& w, int site_pos, int count, std::optional<Tangle> tangle,
    int site_lo) {
  SingularEventDiagram d;
  d.strands = w.strands;
  int col = 0;
  for (int k = 0; k < w.length(); ++k) {
    if (k == site_pos && count > 0) {
      if (tangle) {
        d.site = tangle;
        d.site_column = col;
        d.site_lo = site_lo;
        ++col;
      }
      k += count - 1;
      continue;
    }
    d.crossings.push_back(w.letters[k]);
    d.crossing_columns.push_back(col++);
  }
  if (count == 0 && tangle)
    throw std::runtime_error("from_word: tangle given but count is zero");
  // Keep at least two columns so every arc endpoint side is unambiguous.
  d.total_columns = std::max(col, 2);
  return d;
}

// ---------------------------------------------------------------------------
// State circle tracing

int StateCurveSet::d_count() const {
  int n = 0;
  for (const auto& c : circles)
    if (c.winding == 0) ++n;
  return n;
}

int StateCurveSet::h_count() const {
  int n = 0;
  for (const auto& c : circles)
    if (c.winding == 1) ++n;
  return n;
}

namespace {

struct Arc {
  int column = 0;
  TanglePort a, b;  // pos here is the absolute strand position
  bool via_vertex = false;
};

// Node id of an arc endpoint: boundary b = column (left side) or column+1
// mod m (right side), strand position p.
int endpoint_node(const Arc& arc, int end, int m, int n) {
  const TanglePort& q = end == 0 ? arc.a : arc.b;
  int b = q.side == 0 ? arc.column : (arc.column + 1) % m;
  return b * n + (q.pos - 1);
}

// Whether the arc lies to the right of the boundary its `end` endpoint sits
// on (i.e. the endpoint is on the arc's left side).
bool lies_right(const Arc& arc, int end) {
  const TanglePort& q = end == 0 ? arc.a : arc.b;
  return q.side == 0;
}

}  // namespace

StateCurveSet trace_state_circles(const SingularEventDiagram& d,
                                  const std::vector<bool>& identity_smoothing) {
  const int n = d.strands;
  const int m = d.total_columns;
  if (identity_smoothing.size() != d.crossings.size() &&
      !(identity_smoothing.empty() && d.crossings.empty()))
    throw std::runtime_error("trace_state_circles: smoothing size mismatch");

  std::vector<Arc> arcs;
  std::vector<bool> column_used(m, false);
  auto add_pass = [&](int col, int p) {
    arcs.push_back(Arc{col, {0, p}, {1, p}, false});
  };
  for (std::size_t k = 0; k < d.crossings.size(); ++k) {
    int col = d.crossing_columns[k];
    column_used[col] = true;
    int i = d.crossings[k].index;
    if (identity_smoothing[k]) {
      add_pass(col, i);
      add_pass(col, i + 1);
    } else {
      arcs.push_back(Arc{col, {0, i}, {0, i + 1}, false});
      arcs.push_back(Arc{col, {1, i}, {1, i + 1}, false});
    }
    for (int p = 1; p <= n; ++p)
      if (p != i && p != i + 1) add_pass(col, p);
  }
  if (d.site) {
    int col = d.site_column;
    column_used[col] = true;
    for (const TangleArc& ta : d.site->arcs) {
      Arc a;
      a.column = col;
      a.a = TanglePort{ta.a.side, ta.a.pos + d.site_lo - 1};
      a.b = TanglePort{ta.b.side, ta.b.pos + d.site_lo - 1};
      a.via_vertex = ta.via_vertex;
      arcs.push_back(a);
    }
    for (int p = 1; p <= n; ++p)
      if (p < d.site_lo || p >= d.site_lo + d.site->width) add_pass(col, p);
  }
  for (int col = 0; col < m; ++col)
    if (!column_used[col])
      for (int p = 1; p <= n; ++p) add_pass(col, p);

  // Each node has exactly two incident arc-ends.
  std::vector<std::array<std::pair<int, int>, 2>> incident(
      m * n, {std::make_pair(-1, -1), std::make_pair(-1, -1)});
  for (int a = 0; a < static_cast<int>(arcs.size()); ++a) {
    for (int end = 0; end < 2; ++end) {
      int node = endpoint_node(arcs[a], end, m, n);
      auto& slots = incident[node];
      if (slots[0].first < 0)
        slots[0] = {a, end};
      else if (slots[1].first < 0)
        slots[1] = {a, end};
      else
        throw std::runtime_error("trace_state_circles: node of degree > 2");
    }
  }
  for (const auto& slots : incident)
    if (slots[1].first < 0)
      throw std::runtime_error("trace_state_circles: node of degree < 2");

  StateCurveSet out;
  std::vector<bool> arc_seen(arcs.size(), false);
  // Transversal boundary passes (boundary, position, direction) per circle;
  // used to sort h-circles to the two sides of a double circle.
  struct Pass {
    int b, p, dir;
  };
  std::vector<std::vector<Pass>> circle_transversals;
  std::vector<int> circle_rep_node;

  for (int start = 0; start < static_cast<int>(arcs.size()); ++start) {
    if (arc_seen[start]) continue;
    int net = 0, vertex_passes = 0;
    std::vector<Pass> transversals;
    int cur = start, cur_end = 0;  // about to leave arc `cur` via endpoint
                                   // opposite to cur_end... we enter at a=0
    // Walk: we traverse arc cur from endpoint cur_end to the other endpoint,
    // then switch arcs at the reached node.
    int rep_node = endpoint_node(arcs[start], 0, m, n);
    do {
      arc_seen[cur] = true;
      if (arcs[cur].via_vertex) ++vertex_passes;
      int reach_end = 1 - cur_end;
      int node = endpoint_node(arcs[cur], reach_end, m, n);
      const auto& slots = incident[node];
      std::pair<int, int> next =
          (slots[0] == std::make_pair(cur, reach_end)) ? slots[1] : slots[0];
      // Seam / transversality bookkeeping at the node between the two arcs.
      bool in_right = lies_right(arcs[cur], reach_end);
      bool out_right = lies_right(arcs[next.first], next.second);
      int b = node / n, p = node % n + 1;
      if (in_right != out_right) {
        int dir = in_right ? -1 : 1;  // left->right counts +1
        transversals.push_back({b, p, dir});
        if (b == 0) net += dir;
      }
      cur = next.first;
      cur_end = next.second;
    } while (!(cur == start && cur_end == 0));

    StateCircle c;
    c.winding = std::abs(net);
    c.singular = vertex_passes == 2;
    if (vertex_passes == 1)
      throw std::runtime_error(
          "trace_state_circles: two circles meet at the double point");
    int limit = c.singular ? 2 : 1;
    if (c.winding > limit)
      throw std::runtime_error("trace_state_circles: unexpected winding " +
                               std::to_string(c.winding));
    out.circles.push_back(c);
    circle_transversals.push_back(std::move(transversals));
    circle_rep_node.push_back(rep_node);
  }

  // Locate a winding-2 double circle and sort h-circles to its two sides.
  int dbl = -1;
  for (std::size_t i = 0; i < out.circles.size(); ++i)
    if (out.circles[i].singular && out.circles[i].winding == 2) {
      out.has_double_circle = true;
      dbl = static_cast<int>(i);
    }
  if (dbl >= 0) {
    for (std::size_t i = 0; i < out.circles.size(); ++i) {
      if (static_cast<int>(i) == dbl || out.circles[i].winding != 1) continue;
      // Signed count of double-circle passes below a point of the circle:
      // 0 in the region adjacent to the inner boundary, +-2 in the region
      // adjacent to the outer boundary (+-1 would be the contractible lens,
      // which cannot hold an essential circle).
      int b = circle_rep_node[i] / n, p = circle_rep_node[i] % n + 1;
      int below = 0;
      for (const auto& pass : circle_transversals[dbl])
        if (pass.b == b && pass.p < p) below += pass.dir;
      if (below != 0 && std::abs(below) != 2)
        throw std::runtime_error(
            "trace_state_circles: h-circle in a contractible region");
      out.circles[i].adjacent_inner = below == 0;
      if (out.circles[i].adjacent_inner)
        ++out.inner_h;
      else
        ++out.outer_h;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Regions

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

RegionMap enumerate_regions(const SingularEventDiagram& d) {
  const int n = d.strands;
  const int m = d.total_columns;
  const int gaps = n + 1;
  if (d.site && d.site->name != "v3" && d.site->name != "x2")
    throw std::runtime_error(
        "enumerate_regions: site must be a vertex tangle (v3 or x2)");

  UnionFind uf(m * gaps);
  auto slot = [&](int b, int g) { return ((b % m + m) % m) * gaps + g; };
  std::vector<bool> column_has(m, false);
  for (std::size_t k = 0; k < d.crossings.size(); ++k)
    column_has[d.crossing_columns[k]] = true;
  if (d.site) column_has[d.site_column] = true;

  for (int b = 0; b < m; ++b) {
    bool pinch[16] = {};
    if (d.site && b == d.site_column) {
      pinch[d.site_lo] = true;
      if (d.site->width == 3) pinch[d.site_lo + 1] = true;
    }
    for (std::size_t k = 0; k < d.crossings.size(); ++k)
      if (d.crossing_columns[k] == b) pinch[d.crossings[k].index] = true;
    for (int g = 0; g < gaps; ++g)
      if (!pinch[g]) uf.unite(slot(b, g), slot(b + 1, g));
  }

  RegionMap rm;
  std::vector<int> root_to_id(m * gaps, -1);
  auto region = [&](int b, int g) {
    int r = uf.find(slot(b, g));
    if (root_to_id[r] < 0) root_to_id[r] = rm.region_count++;
    return root_to_id[r];
  };

  rm.gap_region.assign(m, std::vector<int>(gaps));
  for (int b = 0; b < m; ++b)
    for (int g = 0; g < gaps; ++g) rm.gap_region[b][g] = region(b, g);
  rm.inner_star = region(0, 0);
  rm.outer_star = region(0, n);

  for (std::size_t k = 0; k < d.crossings.size(); ++k) {
    int b = d.crossing_columns[k], i = d.crossings[k].index;
    rm.crossing_corners.push_back({region(b, i), region(b + 1, i),
                                   region(b, i + 1), region(b, i - 1)});
  }
  if (d.site) {
    int b = d.site_column, lo = d.site_lo;
    if (d.site->width == 3) {
      // W1, W2, N, E2, E1, S (antipodal pairs are i and i+3)
      rm.site_sectors = {region(b, lo),     region(b, lo + 1),
                         region(b, lo + 2), region(b + 1, lo + 1),
                         region(b + 1, lo), region(b, lo - 1)};
    } else {
      // W, N, E, S (antipodal pairs i and i+2)
      rm.site_sectors = {region(b, lo), region(b, lo + 1), region(b + 1, lo),
                         region(b, lo - 1), -1, -1};
    }
  }
  return rm;
}

// ---------------------------------------------------------------------------
// Triple point classification

const char* triple_class_name(TripleClass c) {
  switch (c) {
    case TripleClass::T1: return "T1";
    case TripleClass::T57: return "T57";
    case TripleClass::T34: return "T34";
    default: return "T8";
  }
}

TripleClass classify_triple(const Letter& l0, const Letter& l1,
                            const Letter& l2, int* distinguished_letter,
                            int* minority_slot) {
  const Letter ls[3] = {l0, l1, l2};
  int lo_idx = std::min(l0.index, l1.index);
  // Strands 0,1,2 named by entry position; track local occupancy and record,
  // for each strand pair, the crossing's letter and sign and who goes over.
  int occ[3] = {0, 1, 2};
  int wins[3] = {0, 0, 0};
  int pair_sign[3][3] = {};
  int pair_letter[3][3];
  for (int k = 0; k < 3; ++k) {
    int a = ls[k].index - lo_idx;  // 0 or 1
    int u = occ[a], v = occ[a + 1];
    if (pair_sign[u][v] != 0)
      throw std::logic_error("classify_triple: strand pair crosses twice");
    pair_sign[u][v] = pair_sign[v][u] = ls[k].sign;
    pair_letter[u][v] = pair_letter[v][u] = k;
    ++wins[ls[k].sign > 0 ? u : v];  // positive: lower position passes over
    std::swap(occ[a], occ[a + 1]);
  }
  int hi = -1, mid = -1, low = -1;
  for (int s = 0; s < 3; ++s) {
    if (wins[s] == 2) hi = s;
    if (wins[s] == 1) mid = s;
    if (wins[s] == 0) low = s;
  }
  if (hi < 0 || mid < 0 || low < 0) throw StarLikeConfiguration();
  if (distinguished_letter) *distinguished_letter = pair_letter[hi][low];

  int neg = (pair_sign[hi][mid] < 0) + (pair_sign[hi][low] < 0) +
            (pair_sign[mid][low] < 0);
  if (neg == 0) return TripleClass::T1;
  if (neg == 3) return TripleClass::T8;
  if (neg == 1) {
    if (pair_sign[hi][low] < 0) throw StarLikeConfiguration();
    if (minority_slot) *minority_slot = pair_sign[hi][mid] < 0 ? 0 : 1;
    return TripleClass::T57;
  }
  if (pair_sign[hi][low] > 0) throw StarLikeConfiguration();
  if (minority_slot) *minority_slot = pair_sign[hi][mid] > 0 ? 0 : 1;
  return TripleClass::T34;
}

// ---------------------------------------------------------------------------
// Homological markings

namespace {

// Strand start occupying each position at letter boundary `pos`.
std::vector<int> occupancy_at(const BraidWord& w, int pos) {
  std::vector<int> occ(w.strands);
  std::iota(occ.begin(), occ.end(), 0);
  for (int k = 0; k < pos; ++k)
    std::swap(occ[w.letters[k].index - 1], occ[w.letters[k].index]);
  return occ;
}

int cycle_length(const std::vector<int>& perm, int start) {
  int len = 0, j = start;
  do {
    ++len;
    j = perm[j];
  } while (j != start);
  return len;
}

int component_of(const std::vector<ClosureComponent>& comps, int start) {
  for (std::size_t i = 0; i < comps.size(); ++i)
    for (int p : comps[i].positions)
      if (p == start) return static_cast<int>(i);
  throw std::logic_error("component_of: start not found");
}

}  // namespace

int homological_marking(const BraidWord& w, int pos, bool flip_qplus) {
  const Letter& l = w.letters.at(pos);
  std::vector<int> occ = occupancy_at(w, pos);
  int lower = occ[l.index - 1], upper = occ[l.index];
  // Branches on different components of the link: marking is zero.
  auto comps = closure_components(w);
  if (component_of(comps, lower) != component_of(comps, upper)) return 0;
  // Smooth the crossing respecting orientation (drop the letter) and take the
  // winding of the component entering on the under branch.
  BraidWord smoothed = w;
  smoothed.letters.erase(smoothed.letters.begin() + pos);
  bool under_is_upper = l.sign > 0;
  if (flip_qplus) under_is_upper = !under_is_upper;
  int qplus = under_is_upper ? upper : lower;
  return cycle_length(smoothed.permutation(), qplus);
}

// ---------------------------------------------------------------------------
// Event info

TripleInfo triple_info(const LoopEvent& e, const ConventionTable& conv) {
  if (e.kind != EventKind::TriplePoint)
    throw std::runtime_error("triple_info: not a triple point event");
  const BraidWord& w = e.word_before;
  const Letter& l0 = w.letters.at(e.site);
  const Letter& l1 = w.letters.at(e.site + 1);
  const Letter& l2 = w.letters.at(e.site + 2);
  TripleInfo info;
  info.type_class =
      classify_triple(l0, l1, l2, &info.distinguished_letter,
                      &info.minority_slot);
  info.forward = l0.index < l1.index;
  int base = 0;
  switch (info.type_class) {
    case TripleClass::T1: base = conv.triple_sign_T1; break;
    case TripleClass::T57: base = conv.triple_sign_T57; break;
    case TripleClass::T34: base = conv.triple_sign_T34; break;
    case TripleClass::T8: base = conv.triple_sign_T8; break;
  }
  info.sign = info.forward ? base : -base;
  info.marking = homological_marking(w, e.site + info.distinguished_letter,
                                     conv.flip_qplus);
  info.whitney = 0;
  return info;
}

TangencyInfo tangency_info(const LoopEvent& e, const ConventionTable& conv) {
  if (e.kind != EventKind::Autotangency)
    throw std::runtime_error("tangency_info: not an autotangency event");
  const BraidWord& with_pair = e.creation ? e.word_after : e.word_before;
  const BraidWord& without_pair = e.creation ? e.word_before : e.word_after;
  const Letter first = with_pair.letters.at(e.site);

  TangencyInfo info;
  info.type = first.sign > 0 ? conv.tangency_type_posneg
                             : 3 - conv.tangency_type_posneg;
  int creation_sign =
      info.type == 1 ? conv.tangency_sign_1 : conv.tangency_sign_2;
  info.sign = e.creation ? creation_sign : -creation_sign;

  // Marking: the two tangent branches, split at the tangency (a transposition
  // in place of the degenerate pair).
  std::vector<int> occ = occupancy_at(without_pair, e.site);
  int i = first.index;
  int lower = occ[i - 1], upper = occ[i];
  auto comps = closure_components(without_pair);
  if (component_of(comps, lower) != component_of(comps, upper)) {
    info.marking = 0;
    return info;
  }
  BraidWord split = without_pair;
  split.letters.insert(split.letters.begin() + e.site, Letter{i, 1});
  bool under_is_upper = first.sign > 0;
  if (conv.flip_qplus) under_is_upper = !under_is_upper;
  info.marking =
      cycle_length(split.permutation(), under_is_upper ? upper : lower);
  return info;
}

// ---------------------------------------------------------------------------
// ConventionTable

namespace {

std::string canonical_text(const ConventionTable& c) {
  std::ostringstream os;
  os << "c1=" << c.c1 << ";ts=" << c.triple_sign_T1 << ','
     << c.triple_sign_T57 << ',' << c.triple_sign_T34 << ','
     << c.triple_sign_T8 << ";tt=" << c.tangency_type_posneg << ";tg="
     << c.tangency_sign_1 << ',' << c.tangency_sign_2
     << ";q=" << (c.flip_qplus ? 1 : 0) << ";c0=" << c.c0 << ";dp="
     << c.dp_gap[0] << ',' << c.dp_gap[1] << ',' << c.dp_gap[2] << ";ax=";
  for (int k = 0; k < 8; ++k)
    os << c.alex_sgn[k] * 1 << '*' << c.alex_exp[k] << (k < 7 ? "," : "");
  os << ";ap=" << (c.alex_parity ? 1 : 0) << ";mk=";
  for (int k = 0; k < 4; ++k)
    os << c.marking_sector[k][0] << '-' << c.marking_sector[k][1]
       << (k < 3 ? "," : "");
  return os.str();
}

}  // namespace

std::string ConventionTable::fingerprint() const {
  // FNV-1a 64-bit over the canonical serialization: stable across runs.
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : canonical_text(*this)) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

namespace {

int parse_pm1(const std::string& v) {
  if (v == "+1" || v == "1") return 1;
  if (v == "-1") return -1;
  throw std::runtime_error("convention override: expected +1 or -1, got " + v);
}

// Signed monomial in A: e.g. "A^2", "-A^-1", "+1", "-A".
void parse_monomial_A(const std::string& v, int* sgn, int* exp) {
  std::size_t i = 0;
  *sgn = 1;
  *exp = 0;
  if (i < v.size() && (v[i] == '+' || v[i] == '-')) {
    if (v[i] == '-') *sgn = -1;
    ++i;
  }
  if (i < v.size() && v[i] == '1' && i + 1 == v.size()) return;
  if (i >= v.size() || v[i] != 'A')
    throw std::runtime_error("convention override: bad monomial " + v);
  ++i;
  if (i == v.size()) {
    *exp = 1;
    return;
  }
  if (v[i] != '^')
    throw std::runtime_error("convention override: bad monomial " + v);
  *exp = std::stoi(v.substr(i + 1));
}

int sector_index(const std::string& s) {
  const char* names[6] = {"W1", "W2", "N", "E2", "E1", "S"};
  for (int k = 0; k < 6; ++k)
    if (s == names[k]) return k;
  throw std::runtime_error("convention override: unknown sector " + s);
}

}  // namespace

void ConventionTable::apply_override_line(const std::string& line) {
  std::string s = line;
  if (auto h = s.find('#'); h != std::string::npos) s.erase(h);
  auto eq = s.find('=');
  if (s.find_first_not_of(" \t\r\n") == std::string::npos) return;
  if (eq == std::string::npos)
    throw std::runtime_error("convention override: missing '=' in " + line);
  auto trim = [](std::string t) {
    auto a = t.find_first_not_of(" \t\r\n");
    auto b = t.find_last_not_of(" \t\r\n");
    return a == std::string::npos ? std::string() : t.substr(a, b - a + 1);
  };
  std::string key = trim(s.substr(0, eq)), val = trim(s.substr(eq + 1));

  if (key.rfind("triple_sign.", 0) == 0) {
    std::string rest = key.substr(12);
    bool backward = false;
    if (auto dot = rest.find('.'); dot != std::string::npos) {
      std::string dir = rest.substr(dot + 1);
      rest = rest.substr(0, dot);
      if (dir == "backward")
        backward = true;
      else if (dir != "forward")
        throw std::runtime_error("convention override: bad direction in " +
                                 key);
    }
    int v = parse_pm1(val) * (backward ? -1 : 1);
    if (rest == "T1")
      triple_sign_T1 = v;
    else if (rest == "T57")
      triple_sign_T57 = v;
    else if (rest == "T34")
      triple_sign_T34 = v;
    else if (rest == "T8")
      triple_sign_T8 = v;
    else
      throw std::runtime_error("convention override: unknown class in " + key);
    return;
  }
  if (key == "tangency_type.posneg") {
    tangency_type_posneg = std::stoi(val);
    if (tangency_type_posneg != 1 && tangency_type_posneg != 2)
      throw std::runtime_error("convention override: tangency type must be 1 "
                               "or 2");
    return;
  }
  if (key.rfind("tangency_sign.", 0) == 0) {
    std::string rest = key.substr(14);
    bool annih = false;
    if (auto dot = rest.find('.'); dot != std::string::npos) {
      annih = rest.substr(dot + 1) == "annihilation";
      rest = rest.substr(0, dot);
    }
    int v = parse_pm1(val) * (annih ? -1 : 1);
    if (rest == "1")
      tangency_sign_1 = v;
    else if (rest == "2")
      tangency_sign_2 = v;
    else
      throw std::runtime_error("convention override: unknown type in " + key);
    return;
  }
  if (key == "qplus") {
    if (val == "under")
      flip_qplus = false;
    else if (val == "over")
      flip_qplus = true;
    else
      throw std::runtime_error("convention override: qplus must be under or "
                               "over");
    return;
  }
  if (key == "tangle.C1") {
    if (val == "m12_34_56" || val == "e1")
      c1 = 0;
    else if (val == "m16_23_45" || val == "e2")
      c1 = 1;
    else
      throw std::runtime_error("convention override: C1 must be m12_34_56 or "
                               "m16_23_45");
    return;
  }
  if (key == "tangle.C0") {
    if (val == "m12_34")
      c0 = 0;
    else if (val == "m14_23")
      c0 = 1;
    else
      throw std::runtime_error("convention override: C0 must be m12_34 or "
                               "m14_23");
    return;
  }
  if (key == "tangle.C3" || key == "tangle.C4" || key == "tangle.C5") {
    if (val.rfind("dp", 0) != 0)
      throw std::runtime_error("convention override: once-singular tangles "
                               "are named dp0..dp5");
    int g = std::stoi(val.substr(2));
    if (g < 0 || g > 5)
      throw std::runtime_error("convention override: dp gap out of range");
    dp_gap[key[8] - '3'] = g;
    return;
  }
  if (key.rfind("alex_weight.", 0) == 0) {
    // Keys alex_weight.pos.W .. alex_weight.neg.S.
    std::string rest = key.substr(12);
    auto dot = rest.find('.');
    if (dot == std::string::npos)
      throw std::runtime_error("convention override: expected "
                               "alex_weight.<pos|neg>.<W|E|N|S>");
    std::string fam = rest.substr(0, dot), corner = rest.substr(dot + 1);
    int base;
    if (fam == "pos")
      base = 0;
    else if (fam == "neg")
      base = 4;
    else
      throw std::runtime_error("convention override: unknown crossing sign "
                               "in " + key);
    const char* names[4] = {"W", "E", "N", "S"};
    for (int k = 0; k < 4; ++k)
      if (corner == names[k]) {
        parse_monomial_A(val, &alex_sgn[base + k], &alex_exp[base + k]);
        return;
      }
    throw std::runtime_error("convention override: unknown corner in " + key);
  }
  if (key == "alex_parity") {
    if (val == "on")
      alex_parity = true;
    else if (val == "off")
      alex_parity = false;
    else
      throw std::runtime_error("convention override: alex_parity must be on "
                               "or off");
    return;
  }
  if (key.rfind("marking.C", 0) == 0 && key.size() == 10) {
    int which = key[9] - '1';
    if (which < 0 || which > 3)
      throw std::runtime_error("convention override: marking couples are "
                               "C1..C4");
    auto comma = val.find(',');
    if (comma == std::string::npos)
      throw std::runtime_error("convention override: marking needs two "
                               "sectors, e.g. W1,N");
    int a = sector_index(trim(val.substr(0, comma)));
    int b = sector_index(trim(val.substr(comma + 1)));
    if (a == (b + 3) % 6)
      throw std::runtime_error("convention override: marking sectors must "
                               "not be antipodal");
    marking_sector[which] = {a, b};
    return;
  }
  throw std::runtime_error("convention override: unknown key " + key);
}

void ConventionTable::load_overrides_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open conventions file " + path);
  std::string line;
  while (std::getline(in, line)) apply_override_line(line);
}

ConventionTable ConventionTable::pinned_default() {
  // Calibrated against the published example values and the invariance suite;
  // see tools/calibrate.
  ConventionTable c;
  return c;
}

}  // namespace annular
