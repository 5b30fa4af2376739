// Braid words, the Garside half-twist, and closure combinatorics.
#ifndef ANNULAR_BRAID_HPP
#define ANNULAR_BRAID_HPP

#include <string>
#include <vector>

namespace annular {

// One braid generator: index i (1 <= i <= strands-1) with sign +1 or -1.
struct Letter {
  int index = 1;
  int sign = 1;
  bool operator==(const Letter& o) const {
    return index == o.index && sign == o.sign;
  }
};

struct BraidWord {
  int strands = 2;
  std::vector<Letter> letters;

  bool operator==(const BraidWord& o) const {
    return strands == o.strands && letters == o.letters;
  }
  int length() const { return static_cast<int>(letters.size()); }
  // Underlying permutation: position i on the left ends at perm[i] on the
  // right (0-based positions).
  std::vector<int> permutation() const;
  // sigma_i -> sigma_{n-i}, signs kept (image of the word under the Garside
  // conjugation x -> Delta x Delta^-1).
  BraidWord mirror_positions() const;
  // All letter signs switched.
  BraidWord mirror_crossings() const;
  std::string str() const;
};

// Whitespace-separated signed integers, e.g. "1 1 1 -2 2".  If strands == 0
// it is inferred as max|index| + 1 (minimum 2).  Throws std::runtime_error
// with the offending position on bad input.
BraidWord parse_braid_word(const std::string& text, int strands = 0);

// Garside element: positive half-twist word of length n(n-1)/2 whose
// underlying permutation is i -> n-1-i.
BraidWord garside_delta(int n);

struct ClosureComponent {
  std::vector<int> positions;  // 0-based strand positions in the cycle
  int winding() const { return static_cast<int>(positions.size()); }
};

// Cycles of the closure permutation; winding of a component in the solid
// torus equals its cycle length.
std::vector<ClosureComponent> closure_components(const BraidWord& w);

}  // namespace annular

#endif  // ANNULAR_BRAID_HPP
