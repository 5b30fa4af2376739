#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "annular/loop.hpp"

using namespace annular;

namespace {

bool cyclic_equal(const BraidWord& a, const BraidWord& b) {
  if (a.strands != b.strands || a.length() != b.length()) return false;
  for (int k = 0; k < std::max(1, a.length()); ++k) {
    bool ok = true;
    for (int i = 0; i < a.length(); ++i)
      if (!(a.letters[(i + k) % a.length()] == b.letters[i])) ok = false;
    if (ok) return true;
  }
  return false;
}

void check_event_stream(const CanonicalLoop& loop) {
  // Each event applies exactly one local rewrite; between events the word may
  // additionally be shifted cyclically (an isotopy, not an event).
  const BraidWord* prev = &loop.base;
  for (const auto& e : loop.events) {
    CHECK(cyclic_equal(*prev, e.word_before));
    if (e.kind == EventKind::TriplePoint) {
      CHECK(e.word_after.length() == e.word_before.length());
      CHECK(is_braid_relation(e.word_before.letters[e.site],
                              e.word_before.letters[e.site + 1],
                              e.word_before.letters[e.site + 2]));
    } else {
      int delta = e.creation ? 2 : -2;
      CHECK(e.word_after.length() == e.word_before.length() + delta);
    }
    prev = &e.word_after;
  }
  CHECK(cyclic_equal(*prev, loop.base));
}

}  // namespace

TEST_CASE("braid relation recognition") {
  CHECK(is_braid_relation({1, 1}, {2, 1}, {1, 1}));
  CHECK(is_braid_relation({2, 1}, {1, -1}, {2, -1}));
  CHECK(is_braid_relation({1, -1}, {2, -1}, {1, -1}));
  CHECK(!is_braid_relation({1, 1}, {2, -1}, {1, 1}));   // cyclic heights
  CHECK(!is_braid_relation({1, -1}, {2, 1}, {1, -1}));  // cyclic heights
  CHECK(!is_braid_relation({1, 1}, {1, 1}, {1, 1}));    // not adjacent
  CHECK(!is_braid_relation({1, 1}, {2, 1}, {2, 1}));    // outer mismatch
}

TEST_CASE("positive 3-braid loop: 2c triple points, RII balance") {
  BraidWord w = parse_braid_word("1 1 1 2 2 2 2 2");
  CanonicalLoop loop = canonical_loop(w);
  CHECK(loop.triple_count() == 2 * w.length());
  // Positive words: the only RII pairs are the Delta Delta^-1 insertions.
  CHECK(loop.creation_count() == 6);
  CHECK(loop.annihilation_count() == 6);
  check_event_stream(loop);
}

TEST_CASE("mixed-sign 3-braid loops close under every strategy") {
  for (const char* text : {"1 1 1 -2 2", "-1 -1 -2", "1 -2 1 -2", "-1 2 2 1",
                           "1 2", "-1 -2 -1 -2 -1 -2"}) {
    BraidWord w = parse_braid_word(text, 3);
    for (auto strat : {LoopStrategy::push_delta,
                       LoopStrategy::push_delta_inverse,
                       LoopStrategy::alt_negative_rule}) {
      CanonicalLoop loop = canonical_loop(w, strat);
      CHECK(loop.triple_count() == 2 * w.length());
      CHECK(loop.creation_count() == loop.annihilation_count());
      check_event_stream(loop);
    }
  }
}

TEST_CASE("2-strand loops: no triple points") {
  for (const char* text : {"1 1 1", "-1 -1 -1", "1 -1 1", ""}) {
    BraidWord w = parse_braid_word(text, 2);
    CanonicalLoop loop = canonical_loop(w);
    CHECK(loop.triple_count() == 0);
    check_event_stream(loop);
  }
}

TEST_CASE("empty 3-braid word: trivial insert-cancel loop") {
  CanonicalLoop loop = canonical_loop(parse_braid_word("", 3));
  CHECK(loop.triple_count() == 0);
  CHECK(loop.creation_count() == 6);
  check_event_stream(loop);
}

TEST_CASE("unsupported strand counts are rejected distinctly") {
  CHECK_THROWS_AS(canonical_loop(parse_braid_word("1 2 3")),
                  UnsupportedStrands);
}

TEST_CASE("pass indices split the loop into the two half-twist pushes") {
  CanonicalLoop loop = canonical_loop(parse_braid_word("1 1 1 2 2"));
  bool seen2 = false;
  for (const auto& e : loop.events) {
    if (e.pass_index == 2) seen2 = true;
    CHECK(e.pass_index == (seen2 ? 2 : 1));
  }
  CHECK(seen2);
}
