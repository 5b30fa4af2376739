// The combinatorial canonical loop: the event stream produced by inserting
// Delta Delta^-1, cyclically shifting, and pushing the half-twist through the
// braid word twice.
#ifndef ANNULAR_LOOP_HPP
#define ANNULAR_LOOP_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "annular/braid.hpp"

namespace annular {

enum class EventKind { TriplePoint, Autotangency };

// For a TriplePoint the site is three consecutive letters realizing a braid
// relation sigma_x sigma_y sigma_x -> sigma_y sigma_x sigma_y.  For an
// Autotangency the site is the two letters of a Reidemeister II pair
// (creation: the letters exist in word_after; annihilation: in word_before).
struct LoopEvent {
  EventKind kind = EventKind::TriplePoint;
  bool creation = false;  // autotangency only: RII creation vs annihilation
  int site = 0;           // first letter position of the site
  BraidWord word_before;
  BraidWord word_after;
  int pass_index = 1;  // which Delta pass produced it (1 or 2)
};

enum class LoopStrategy {
  push_delta,          // two passes, each pushing Delta through the word
  push_delta_inverse,  // two passes pushing Delta^-1 (the reversed loop)
  alt_negative_rule,   // push_delta with the other RII fix-up at sigma_1^-1
  push_full_twist,     // one pass pushing the full twist Delta^2 through
};

struct CanonicalLoop {
  BraidWord base;
  LoopStrategy strategy = LoopStrategy::push_delta;
  std::vector<LoopEvent> events;

  int triple_count() const;
  int creation_count() const;
  int annihilation_count() const;
};

// True if the three letters form a valid braid relation instance
// sigma_x^a sigma_y^b sigma_x^c with |x-y| = 1 (the height tournament of the
// three branches is transitive).
bool is_braid_relation(const Letter& l0, const Letter& l1, const Letter& l2);

// Event stream of the combinatorial canonical loop.  Supported strand counts:
// 2 and 3 (the half-twist push rules are the published ones for n = 3; n = 2
// pushes a single generator).  Larger strand counts are rejected with a
// distinct error.
CanonicalLoop canonical_loop(const BraidWord& w,
                             LoopStrategy strategy = LoopStrategy::push_delta);

// Thrown for strand counts whose push routine is not implemented.
struct UnsupportedStrands : std::runtime_error {
  explicit UnsupportedStrands(int n)
      : std::runtime_error("no half-twist push routine for " +
                           std::to_string(n) + " strands") {}
};

}  // namespace annular

#endif  // ANNULAR_LOOP_HPP
