#include "annular/braid.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace annular {

std::vector<int> BraidWord::permutation() const {
  std::vector<int> p(strands);
  std::iota(p.begin(), p.end(), 0);
  // p[i] = final position of the strand currently tracked from left slot i:
  // walk the word and swap occupants.
  std::vector<int> occupant(strands);
  std::iota(occupant.begin(), occupant.end(), 0);
  for (const Letter& l : letters)
    std::swap(occupant[l.index - 1], occupant[l.index]);
  for (int pos = 0; pos < strands; ++pos) p[occupant[pos]] = pos;
  return p;
}

BraidWord BraidWord::mirror_positions() const {
  BraidWord out;
  out.strands = strands;
  out.letters.reserve(letters.size());
  for (const Letter& l : letters)
    out.letters.push_back(Letter{strands - l.index, l.sign});
  return out;
}

BraidWord BraidWord::mirror_crossings() const {
  BraidWord out;
  out.strands = strands;
  out.letters.reserve(letters.size());
  for (const Letter& l : letters)
    out.letters.push_back(Letter{l.index, -l.sign});
  return out;
}

std::string BraidWord::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) os << ' ';
    os << letters[i].sign * letters[i].index;
  }
  return os.str();
}

BraidWord parse_braid_word(const std::string& text, int strands) {
  BraidWord w;
  std::istringstream is(text);
  std::string tok;
  int max_index = 1;
  int pos = 0;
  while (is >> tok) {
    ++pos;
    char* end = nullptr;
    long v = std::strtol(tok.c_str(), &end, 10);
    if (end == tok.c_str() || *end != '\0' || v == 0)
      throw std::runtime_error("braid word: bad token \"" + tok +
                               "\" at position " + std::to_string(pos));
    int idx = static_cast<int>(v < 0 ? -v : v);
    w.letters.push_back(Letter{idx, v < 0 ? -1 : 1});
    if (idx > max_index) max_index = idx;
  }
  w.strands = strands > 0 ? strands : max_index + 1;
  if (w.strands < 2) w.strands = 2;
  for (const Letter& l : w.letters)
    if (l.index >= w.strands)
      throw std::runtime_error("braid word: generator index " +
                               std::to_string(l.index) + " out of range for " +
                               std::to_string(w.strands) + " strands");
  return w;
}

BraidWord garside_delta(int n) {
  if (n < 2) throw std::runtime_error("garside_delta: need at least 2 strands");
  BraidWord w;
  w.strands = n;
  // sigma_1 (sigma_2 sigma_1) (sigma_3 sigma_2 sigma_1) ...; for n = 3 this
  // is sigma_1 sigma_2 sigma_1.
  for (int k = 1; k < n; ++k)
    for (int i = k; i >= 1; --i) w.letters.push_back(Letter{i, 1});
  return w;
}

std::vector<ClosureComponent> closure_components(const BraidWord& w) {
  std::vector<int> p = w.permutation();
  std::vector<bool> seen(w.strands, false);
  std::vector<ClosureComponent> out;
  for (int i = 0; i < w.strands; ++i) {
    if (seen[i]) continue;
    ClosureComponent c;
    int j = i;
    do {
      seen[j] = true;
      c.positions.push_back(j);
      j = p[j];
    } while (j != i);
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace annular
