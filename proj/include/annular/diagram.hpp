// Combinatorics of closed-braid diagrams in the annulus at a discriminant
// event: local replacement tangles, state-circle tracing with windings,
// region enumeration, triple-point and autotangency classification,
// homological markings, and the isolated convention table.
//
// Geometry conventions used throughout: strand positions are 1..n with
// position 1 adjacent to the inner boundary of the annulus; a diagram is a
// cyclic sequence of columns (one per letter plus at most one special site),
// glued back to itself at column boundary 0.
#ifndef ANNULAR_DIAGRAM_HPP
#define ANNULAR_DIAGRAM_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "annular/laurent.hpp"
#include "annular/loop.hpp"

namespace annular {

// ---------------------------------------------------------------------------
// Local tangles

// Port of a local tangle: side 0 = left, 1 = right; pos is 1-based within the
// tangle (1 = lowest involved strand position).
struct TanglePort {
  int side = 0;
  int pos = 1;
  bool operator==(const TanglePort& o) const {
    return side == o.side && pos == o.pos;
  }
};

struct TangleArc {
  TanglePort a, b;
  bool via_vertex = false;  // arc passes through the (unique) double point
};

// A crossingless or once-singular planar tangle replacing an event site.
struct Tangle {
  int width = 0;  // strand positions covered (2 or 3)
  std::vector<TangleArc> arcs;
  std::string name;
};

// Crossingless 3-strand smoothings: the rot_pi couple among the five planar
// pairings (cap-cup at the lower or upper strand pair).
Tangle tangle_e1();
Tangle tangle_e2();
// Once-singular 3-strand tangles indexed by the boundary gap holding the
// vertex-free arc; gaps 0..5 run counterclockwise from (left1,left2).
// Gap g and gap (g+3)%6 form a rot_pi couple.
Tangle tangle_dp(int gap);
// Autotangency simplifications on 2 strands: cap-cup, plain pass, and the
// transverse double point.
Tangle tangle_cupcap2();
Tangle tangle_id2();
Tangle tangle_x2();
// The singular site itself as a 6-valent vertex (three branches through one
// point); used when enumerating regions of the singular diagram.
Tangle tangle_triple_vertex();

// ---------------------------------------------------------------------------
// Singular event diagrams and state circles

// A closed-braid diagram whose letters are each either kept as a crossing or
// already smoothed, with at most one special site carrying a tangle.
struct SingularEventDiagram {
  int strands = 2;
  std::vector<Letter> crossings;       // ordinary crossings, in column order
  std::vector<int> crossing_columns;   // column index of each crossing
  int total_columns = 0;
  std::optional<Tangle> site;          // tangle column
  int site_column = -1;
  int site_lo = 1;  // lowest strand position covered by the site

  // Diagram for word w with the `count` letters starting at `site_pos`
  // removed and `tangle` put in their place (site omitted when tangle is
  // null: a plain closed-braid diagram).
  static SingularEventDiagram from_word(const BraidWord& w, int site_pos,
                                        int count, std::optional<Tangle> tangle,
                                        int site_lo);
};

struct StateCircle {
  int winding = 0;    // absolute homological degree in the annulus
  bool singular = false;
  bool adjacent_inner = false;  // winding-1 circles: inner side of the double
                                // circle (meaningful only when one exists)
};

struct StateCurveSet {
  std::vector<StateCircle> circles;
  bool has_double_circle = false;  // a singular circle of winding 2
  int inner_h = 0, outer_h = 0;    // h-circles inside/outside it

  int d_count() const;
  int h_count() const;
};

// Trace the circles of one Kauffman state: smoothing[i] says whether ordinary
// crossing i is A-smoothed relative to the standard convention (the identity
// tangle for a positive letter).  Throws on a state circle of unexpected
// winding.
StateCurveSet trace_state_circles(const SingularEventDiagram& d,
                                  const std::vector<bool>& identity_smoothing);

// ---------------------------------------------------------------------------
// Regions

struct RegionMap {
  int region_count = 0;
  int inner_star = -1, outer_star = -1;
  // region id of gap slot (column boundary b, gap g), g in 0..n
  std::vector<std::vector<int>> gap_region;
  // corner regions of ordinary crossing k: [W, E, N, S]
  std::vector<std::array<int, 4>> crossing_corners;
  // for a triple site: the six sector regions in counterclockwise order
  // W1, W2, N, E2, E1, S (antipodal sectors are i and i+3)
  std::array<int, 6> site_sectors{-1, -1, -1, -1, -1, -1};
};

// Faces of the diagram in the annulus (crossings kept as crossings; the site,
// if present, as a multi-valent vertex).  Region count is c+2 for c ordinary
// crossings, c+4 with a triple site present.
RegionMap enumerate_regions(const SingularEventDiagram& d);

// ---------------------------------------------------------------------------
// Event classification

enum class TripleClass { T1, T57, T34, T8 };
const char* triple_class_name(TripleClass c);

// Thrown when a sign pattern puts the minority sign on the crossing of the
// highest with the lowest branch: impossible for braid diagrams, so reaching
// it indicates a bug upstream.
struct StarLikeConfiguration : std::runtime_error {
  StarLikeConfiguration()
      : std::runtime_error(
            "star-like triple point: minority sign on the highest-lowest "
            "crossing cannot arise from a braid word") {}
};

struct TripleInfo {
  TripleClass type_class = TripleClass::T1;
  // 0, 1, 2: which of the three site letters is the crossing of the highest
  // with the lowest branch.
  int distinguished_letter = 0;
  // For mixed classes: 0 if the minority sign sits on the highest-middle
  // crossing, 1 on the middle-lowest one (the two members of the class).
  int minority_slot = 0;
  int sign = 0;
  int marking = 0;   // homological marking of the distinguished crossing
  int whitney = 0;   // always zero for closed braids
  bool forward = false;  // before-site reads sigma_x sigma_y sigma_x, x < y
};

struct TangencyInfo {
  int type = 1;  // 1 or 2 (types 3 and 4 never occur for braids)
  int sign = 0;
  int marking = 0;
};

// Classify the three pairwise crossing signs of a triple point given the
// site letters; throws StarLikeConfiguration on the impossible patterns.
TripleClass classify_triple(const Letter& l0, const Letter& l1,
                            const Letter& l2, int* distinguished_letter,
                            int* minority_slot);

// Homological marking of the crossing at letter position `pos` of the closure
// of w: smooth the crossing with the orientation and return the winding of
// the component that enters on the under branch (or, with flip_qplus, on the
// over branch).  Returns 0 when the two branches lie on different link
// components.
int homological_marking(const BraidWord& w, int pos, bool flip_qplus);

// ---------------------------------------------------------------------------
// Convention table

// Every figure-derived local datum, isolated and overridable.
struct ConventionTable {
  // Jones case ------------------------------------------------------------
  int c1 = 0;  // 0: C1 = e1 (C1bar = e2); 1: the other way round
  // Coorientation sign of a forward wall crossing per type class
  // (backward crossings get the opposite sign).  The defaults are the unique
  // assignment (up to the global-sign gauge) under which S is invariant
  // across loop strategies and cyclic shifts of the word; see
  // tools/calibrate.
  int triple_sign_T1 = 1, triple_sign_T57 = -1, triple_sign_T34 = 1,
      triple_sign_T8 = -1;
  // Autotangency type of the local pattern sigma+ sigma- (the other pattern
  // gets the other type); creation signs per type (annihilation negated).
  // Pinned by the S+/S- invariance and parity laws: the two types carry
  // opposite creation signs.
  int tangency_type_posneg = 1;
  int tangency_sign_1 = 1, tangency_sign_2 = -1;
  bool flip_qplus = false;
  int c0 = 0;  // 0: cap-cup, 1: identity (the dull choice, kept overridable)
  // Once-singular tangles: C_{3+i} is tangle_dp(dp_gap[i]); its partner is
  // the bar.  X is invariant only as the full three-couple sum, and only
  // when the couple weighted by the distinguished table (C3) is the gap-2
  // one: its wall-crossing terms cancel the autotangency defect between
  // loop strategies.
  std::array<int, 3> dp_gap{2, 0, 1};
  // Alexander case ----------------------------------------------------------
  // Corner weights, one signed monomial +-A^e per (crossing sign, corner):
  // slots 0..3 are the W, E, N, S corners of a positive crossing, slots 4..7
  // the same corners of a negative one.  The default reproduces the
  // determinant of (I - reduced Burau) on all 3-braid knot closures, with
  // t = A^2 (see tools/calibrate and the state-sum tests).
  std::array<int, 8> alex_exp{2, 0, 2, 0, 0, 2, 2, 0};
  std::array<int, 8> alex_sgn{1, 1, 1, 1, 1, 1, 1, 1};
  // Sign every state by the parity of its crossing-to-region bijection, which
  // turns the state sum into a determinant expansion.
  bool alex_parity = true;
  // Marking sectors (two of the six, not antipodal) for C1..C4; bars are the
  // antipodal pairs.  For closed braids the sectors above and below the site
  // are the two star regions, so these defaults (the four couples through
  // them) are the only ones whose Phi sums are invariant; see tools/calibrate.
  std::array<std::array<int, 2>, 4> marking_sector{
      {{0, 2}, {0, 5}, {1, 2}, {1, 5}}};

  std::string fingerprint() const;
  static ConventionTable pinned_default();
  // Apply `key = value` override lines (dotted keys, e.g.
  // "triple_sign.T1.forward = +1", "tangle.C1 = e2").
  void apply_override_line(const std::string& line);
  void load_overrides_file(const std::string& path);
};

// Fully classified triple-point event.
TripleInfo triple_info(const LoopEvent& e, const ConventionTable& conv);
// Fully classified autotangency event.
TangencyInfo tangency_info(const LoopEvent& e, const ConventionTable& conv);

}  // namespace annular

#endif  // ANNULAR_DIAGRAM_HPP
