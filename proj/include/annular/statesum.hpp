// The two state sums evaluated on singular event diagrams: the annular
// Kauffman bracket (variables A, h, r, s) and the annular Alexander state
// sum (variable A), with site markings acting as pre-placed state markers.
#ifndef ANNULAR_STATESUM_HPP
#define ANNULAR_STATESUM_HPP

#include <array>
#include <map>

#include "annular/diagram.hpp"
#include "annular/laurent.hpp"

namespace annular {

// Kauffman bracket of the diagram: sum over all 2^c smoothings of the
// ordinary crossings.  Each state is scored
//   A^{#A - #A^{-1}} (-A^2-A^{-2})^{#winding-0} h^{#winding-1} r^j s^k,
// where the r^j s^k factor appears when the state contains a singular circle
// of winding 2, with j (resp. k) the winding-1 circles on its inner (resp.
// outer) side.  Unnormalized: a bare contractible circle scores -A^2-A^{-2}.
Laurent jones_bracket(const SingularEventDiagram& d);

// Alexander state sum: states assign every ordinary crossing to one of its
// four corner regions so that each non-star region carries exactly one
// marker; `dot_sectors` (indices into RegionMap::site_sectors) are regions
// already carrying a marker from the site marking.  Each state scores the
// product of the per-(crossing sign, corner) weights from the convention
// table, times the parity sign of the crossing-to-region bijection when
// conv.alex_parity is set (the determinant expansion); the site itself
// contributes no factor.  Returns 0 when no complete state exists.
Laurent alexander_statesum(const SingularEventDiagram& d,
                           const std::vector<int>& dot_sectors,
                           const ConventionTable& conv);

// The weight-independent combinatorial content of the Alexander state sum:
// for each complete state, how many markers sit in each of the eight
// (crossing sign, corner) slots — 0..3 = W,E,N,S corners of positive
// crossings, 4..7 the same for negative ones — plus the bijection parity
// (0 or 1) in the last key entry.  Keyed with multiplicities, so a candidate
// weight table can be evaluated without re-enumerating states.
std::map<std::array<int, 9>, long> alexander_state_profile(
    const SingularEventDiagram& d, const std::vector<int>& dot_sectors);

// Evaluate a state profile against the corner weights of a convention table.
Laurent alexander_sum_from_profile(
    const std::map<std::array<int, 9>, long>& profile,
    const ConventionTable& conv);

}  // namespace annular

#endif  // ANNULAR_STATESUM_HPP
