#include "annular/loop.hpp"

#include <algorithm>
#include <stdexcept>

namespace annular {

int CanonicalLoop::triple_count() const {
  int n = 0;
  for (const auto& e : events)
    if (e.kind == EventKind::TriplePoint) ++n;
  return n;
}

int CanonicalLoop::creation_count() const {
  int n = 0;
  for (const auto& e : events)
    if (e.kind == EventKind::Autotangency && e.creation) ++n;
  return n;
}

int CanonicalLoop::annihilation_count() const {
  int n = 0;
  for (const auto& e : events)
    if (e.kind == EventKind::Autotangency && !e.creation) ++n;
  return n;
}

bool is_braid_relation(const Letter& l0, const Letter& l1, const Letter& l2) {
  if (l0.index != l2.index) return false;
  if (std::abs(l0.index - l1.index) != 1) return false;
  // Excluded sign patterns (+,-,+) and (-,+,-): the height tournament of the
  // three branches would be cyclic, which no diagram realizes.
  if (l0.sign != l2.sign) return true;
  return l1.sign == l0.sign;
}

namespace {

struct LoopBuilder {
  BraidWord word;
  CanonicalLoop* out;
  int pass = 1;

  void create(int pos, Letter a) {
    LoopEvent e;
    e.kind = EventKind::Autotangency;
    e.creation = true;
    e.site = pos;
    e.pass_index = pass;
    e.word_before = word;
    word.letters.insert(word.letters.begin() + pos,
                        {a, Letter{a.index, -a.sign}});
    e.word_after = word;
    out->events.push_back(std::move(e));
  }

  void annihilate(int pos) {
    const Letter& a = word.letters.at(pos);
    const Letter& b = word.letters.at(pos + 1);
    if (a.index != b.index || a.sign != -b.sign)
      throw std::logic_error("annihilate: letters are not an inverse pair");
    LoopEvent e;
    e.kind = EventKind::Autotangency;
    e.creation = false;
    e.site = pos;
    e.pass_index = pass;
    e.word_before = word;
    word.letters.erase(word.letters.begin() + pos,
                       word.letters.begin() + pos + 2);
    e.word_after = word;
    out->events.push_back(std::move(e));
  }

  void triple(int pos) {
    Letter l0 = word.letters.at(pos);
    Letter l1 = word.letters.at(pos + 1);
    Letter l2 = word.letters.at(pos + 2);
    if (!is_braid_relation(l0, l1, l2))
      throw std::logic_error("triple: site is not a braid relation");
    LoopEvent e;
    e.kind = EventKind::TriplePoint;
    e.site = pos;
    e.pass_index = pass;
    e.word_before = word;
    // sigma_x^a sigma_y^b sigma_x^c -> sigma_y^c sigma_x^b sigma_y^a
    word.letters[pos] = Letter{l1.index, l2.sign};
    word.letters[pos + 1] = Letter{l0.index, l1.sign};
    word.letters[pos + 2] = Letter{l1.index, l0.sign};
    e.word_after = word;
    out->events.push_back(std::move(e));
  }

  void rotate_left(int k) {
    std::rotate(word.letters.begin(), word.letters.begin() + k,
                word.letters.end());
  }

  // One step of pushing Delta (n = 3) leftwards over the letter at `base`
  // (the four letters base..base+3 are x Delta).
  void push_step_delta3(int base, bool alt_negative) {
    const Letter x = word.letters.at(base);
    if (x.index == 1 && x.sign > 0) {
      triple(base + 1);
    } else if (x.index == 2 && x.sign > 0) {
      triple(base);
    } else if (x.index == 1 && x.sign < 0) {
      if (!alt_negative) {
        annihilate(base);
        create(base, Letter{1, 1});
        triple(base + 1);
      } else {
        annihilate(base);
        create(base + 2, Letter{2, 1});
        triple(base);
      }
    } else {  // sigma_2^-1
      triple(base);
      annihilate(base + 2);
      create(base + 2, Letter{1, 1});
    }
  }

  // One step of pushing Delta^-1 (n = 3) leftwards over the letter at `base`.
  void push_step_delta3_inv(int base) {
    const Letter x = word.letters.at(base);
    if (x.index == 1 && x.sign < 0) {
      triple(base + 1);
    } else if (x.index == 2 && x.sign < 0) {
      triple(base);
    } else if (x.index == 1 && x.sign > 0) {
      annihilate(base);
      create(base, Letter{1, -1});
      triple(base + 1);
    } else {  // sigma_2
      triple(base);
      annihilate(base + 2);
      create(base + 2, Letter{1, -1});
    }
  }

  void push_step_delta2(int base, bool inverse) {
    const Letter x = word.letters.at(base);
    if ((x.sign > 0) != inverse) {
      // x and the half-twist agree; the word is literally unchanged.
      return;
    }
    annihilate(base);
    create(base, Letter{1, inverse ? -1 : 1});
  }

  // Single pass pushing the full twist Delta^2 through the word: gamma ->
  // gamma Delta^2 Delta^-2 (nested RII creations) -> Delta^2 gamma Delta^-2
  // (each letter crosses both half-twists) -> cyclic shift -> gamma
  // Delta^-2 Delta^2 -> gamma (nested RII annihilations).
  void pass_full_twist() {
    const int n = word.strands;
    const int c = word.length();
    const int dlen = n * (n - 1) / 2;
    if (n == 3) {
      // Delta^2 Delta^-2 built outside in; the pair letters, left to right
      // of the seam, read sigma_1 sigma_2 sigma_1 sigma_1 sigma_2 sigma_1.
      static const int idx[6] = {1, 2, 1, 1, 2, 1};
      for (int k = 0; k < 6; ++k) create(c + k, Letter{idx[k], 1});
      for (int k = c - 1; k >= 0; --k) {
        push_step_delta3(k, false);
        push_step_delta3(k + 3, false);
      }
      rotate_left(2 * dlen);
      for (int k = 2 * dlen - 1; k >= 0; --k) annihilate(c + k);
    } else {
      for (int k = 0; k < 2; ++k) create(c + k, Letter{1, 1});
      for (int k = c - 1; k >= 0; --k) {
        if (word.letters.at(k).sign > 0) continue;  // commutes on the nose
        annihilate(k);
        create(k + 1, Letter{1, 1});
      }
      rotate_left(2 * dlen);
      for (int k = 2 * dlen - 1; k >= 0; --k) annihilate(c + k);
    }
  }

  // One full pass: gamma -> mirror(gamma), recording every event.
  void pass_push(LoopStrategy strategy) {
    const int n = word.strands;
    const int c = word.length();
    const int dlen = n * (n - 1) / 2;
    const bool inverse = strategy == LoopStrategy::push_delta_inverse;
    if (!inverse) {
      // gamma -> Delta Delta^-1 gamma, then shift Delta to the back.
      if (n == 3) {
        create(0, Letter{1, 1});
        create(1, Letter{2, 1});
        create(2, Letter{1, 1});
      } else {
        create(0, Letter{1, 1});
      }
      rotate_left(dlen);
      // word = Delta^-1 gamma Delta; push Delta over gamma right to left.
      for (int k = c - 1; k >= 0; --k) {
        int base = dlen + k;
        if (n == 3)
          push_step_delta3(base,
                           strategy == LoopStrategy::alt_negative_rule &&
                               word.letters.at(base).index == 1 &&
                               word.letters.at(base).sign < 0);
        else
          push_step_delta2(base, false);
      }
      // word = Delta^-1 Delta gamma'; cancel the half-twists inside out.
      for (int k = dlen - 1; k >= 0; --k) annihilate(k);
    } else {
      // gamma -> gamma Delta^-1 Delta, then shift Delta to the front.
      if (n == 3) {
        create(c, Letter{1, -1});
        create(c + 1, Letter{2, -1});
        create(c + 2, Letter{1, -1});
      } else {
        create(c, Letter{1, -1});
      }
      rotate_left(c + dlen);
      // word = Delta gamma Delta^-1; push Delta^-1 over gamma right to left.
      for (int k = c - 1; k >= 0; --k) {
        int base = dlen + k;
        if (n == 3)
          push_step_delta3_inv(base);
        else
          push_step_delta2(base, true);
      }
      // word = Delta Delta^-1 gamma'; cancel inside out.
      for (int k = dlen - 1; k >= 0; --k) annihilate(k);
    }
  }
};

}  // namespace

CanonicalLoop canonical_loop(const BraidWord& w, LoopStrategy strategy) {
  if (w.strands != 2 && w.strands != 3) throw UnsupportedStrands(w.strands);
  CanonicalLoop loop;
  loop.base = w;
  loop.strategy = strategy;
  LoopBuilder b{w, &loop, 1};
  if (strategy == LoopStrategy::push_full_twist) {
    b.pass_full_twist();
  } else {
    b.pass_push(strategy);
    if (!(b.word == w.mirror_positions()))
      throw std::logic_error(
          "canonical_loop: first pass did not mirror the word");
    b.pass = 2;
    b.pass_push(strategy);
  }
  if (!(b.word == w))
    throw std::logic_error("canonical_loop: loop did not close");
  return loop;
}

}  // namespace annular
