#include "annular/statesum.hpp"

#include <algorithm>
#include <stdexcept>

namespace annular {

Laurent jones_bracket(const SingularEventDiagram& d) {
  if (d.site) {
    int vertex_ends = 0;
    for (const auto& a : d.site->arcs) vertex_ends += a.via_vertex ? 2 : 0;
    if (vertex_ends > 4)
      throw std::runtime_error(
          "jones_bracket: tangle with more than one double point");
  }
  const int c = static_cast<int>(d.crossings.size());
  if (c > 30) throw std::runtime_error("jones_bracket: too many crossings");

  // Precompute powers of the d-circle factor.
  std::vector<Laurent> dpow(d.strands * (d.total_columns + 2) + 2);
  dpow[0] = Laurent::monomial(1);
  Laurent dfac = Laurent::monomial(-1, 2) + Laurent::monomial(-1, -2);
  for (std::size_t i = 1; i < dpow.size(); ++i) dpow[i] = dpow[i - 1] * dfac;

  Laurent total;
  std::vector<bool> ident(c);
  for (long mask = 0; mask < (1L << c); ++mask) {
    int a_exp = 0;
    for (int k = 0; k < c; ++k) {
      ident[k] = (mask >> k) & 1;
      a_exp += (ident[k] == (d.crossings[k].sign > 0)) ? 1 : -1;
    }
    StateCurveSet cs = trace_state_circles(d, ident);
    Laurent mono = Laurent::monomial(1, a_exp, cs.h_count());
    if (cs.has_double_circle)
      mono = mono * Laurent::monomial(1, 0, 0, 0, cs.inner_h, cs.outer_h);
    total = total + mono * dpow[cs.d_count()];
  }
  return total;
}

std::map<std::array<int, 9>, long> alexander_state_profile(
    const SingularEventDiagram& d, const std::vector<int>& dot_sectors) {
  RegionMap rm = enumerate_regions(d);
  const int c = static_cast<int>(d.crossings.size());
  std::map<std::array<int, 9>, long> profile;

  std::vector<bool> occupied(rm.region_count, false);
  occupied[rm.inner_star] = true;
  occupied[rm.outer_star] = true;
  int available = rm.region_count - 2;
  for (int s : dot_sectors) {
    int r = rm.site_sectors.at(s);
    if (r < 0) throw std::runtime_error("alexander_state_profile: bad sector");
    // A marking on a star region, or two markings in one region, leaves an
    // invalid state configuration: the sum is empty.
    if (occupied[r]) return profile;
    occupied[r] = true;
    --available;
  }
  // Each non-star region must end up with exactly one marker, so the count
  // of free regions has to match the crossings exactly.
  if (available != c) return profile;

  // Weight slot per (crossing sign, corner): slots 0..3 are the W, E, N, S
  // corners of a positive crossing, slots 4..7 the same for a negative one.
  std::vector<int> slot_base(c);
  for (int k = 0; k < c; ++k) slot_base[k] = d.crossings[k].sign > 0 ? 0 : 4;

  // Backtracking over crossings in order; with counts equal, injective
  // implies onto.
  std::vector<int> choice(c, -1);
  std::array<int, 9> counts{};
  int k = 0;
  while (k >= 0) {
    if (k == c) {
      // Parity of the bijection: inversion count of the assigned region ids
      // taken in crossing order (the sign of the corresponding permutation
      // matrix entry pattern).
      int inv = 0;
      for (int i = 0; i < c; ++i)
        for (int j = i + 1; j < c; ++j)
          if (rm.crossing_corners[i][choice[i]] >
              rm.crossing_corners[j][choice[j]])
            ++inv;
      counts[8] = inv % 2;
      ++profile[counts];
      --k;
      continue;
    }
    int corner = choice[k] + 1;
    if (choice[k] >= 0) {
      occupied[rm.crossing_corners[k][choice[k]]] = false;
      --counts[slot_base[k] + choice[k]];
      choice[k] = -1;
    }
    bool advanced = false;
    for (; corner < 4; ++corner) {
      int r = rm.crossing_corners[k][corner];
      if (occupied[r]) continue;
      occupied[r] = true;
      choice[k] = corner;
      ++counts[slot_base[k] + corner];
      ++k;
      advanced = true;
      break;
    }
    if (!advanced) --k;
  }
  return profile;
}

Laurent alexander_sum_from_profile(
    const std::map<std::array<int, 9>, long>& profile,
    const ConventionTable& conv) {
  Laurent total;
  for (const auto& [counts, mult] : profile) {
    int a_exp = 0, sgn = 1;
    for (int t = 0; t < 8; ++t) {
      a_exp += conv.alex_exp[t] * counts[t];
      if (conv.alex_sgn[t] < 0 && counts[t] % 2 != 0) sgn = -sgn;
    }
    if (conv.alex_parity && counts[8] != 0) sgn = -sgn;
    total = total + Laurent::monomial(Int(mult) * sgn, a_exp);
  }
  return total;
}

Laurent alexander_statesum(const SingularEventDiagram& d,
                           const std::vector<int>& dot_sectors,
                           const ConventionTable& conv) {
  return alexander_sum_from_profile(alexander_state_profile(d, dot_sectors),
                                    conv);
}

}  // namespace annular
