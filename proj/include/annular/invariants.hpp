// Assembly of the five loop invariants (S, S+, S-, X, Phi) from the canonical
// loop event stream, the event classifications, and the two state sums.
#ifndef ANNULAR_INVARIANTS_HPP
#define ANNULAR_INVARIANTS_HPP

#include <string>
#include <vector>

#include "annular/diagram.hpp"
#include "annular/laurent.hpp"
#include "annular/loop.hpp"
#include "annular/statesum.hpp"

namespace annular {

enum class InvariantKind { S, Splus, Sminus, X, Phi };

InvariantKind parse_invariant_kind(const std::string& name);
const char* invariant_kind_name(InvariantKind k);

struct ComputeOptions {
  LoopStrategy strategy = LoopStrategy::push_delta;
  bool mod2 = false;
  bool a4 = false;
  bool no_tangencies = false;
  // Restricted sub-sums (nonempty selects one): for Phi "1" or "234"; for X
  // "3", "4" or "5".  These are diagnostic restrictions: for X only the full
  // three-couple sum together with the autotangency terms is an invariant.
  std::string part;
  bool dump_events = false;
};

struct EventContribution {
  int index = 0;
  EventKind kind = EventKind::TriplePoint;
  int pass = 1;
  int site = 0;
  std::string word;
  std::string type;  // triple class name, or tangency type "1"/"2"
  int sign = 0;
  int marking = 0;
  Laurent contribution;
};

struct InvariantResult {
  Laurent value;
  int triple_events = 0;
  int tangency_events = 0;
  std::vector<EventContribution> events;  // filled when dump_events
};

InvariantResult compute_invariant(const BraidWord& w, InvariantKind kind,
                                  const ConventionTable& conv,
                                  const ComputeOptions& opt = {});

// Knot-level reduction of X: halves the pure-h part (terms without r and s),
// whose coefficients are always even for canonical loops; throws
// std::runtime_error on an odd coefficient.
Laurent halve_h_part(const Laurent& x);

// Weight tables, exposed for the equation verifier and tests.
Laurent weight_fS(TripleClass c);       // smoothing weights
Laurent weight_f3(TripleClass c);       // first once-singular weight
Laurent weight_f45(TripleClass c);      // shared weight of C4 and C5
Laurent weight_fplus(int tangency_type);
Laurent weight_fminus(int tangency_type);
Laurent weight_fX(int tangency_type);
int weight_g1(TripleClass c);
int weight_g234(TripleClass c);

}  // namespace annular

#endif  // ANNULAR_INVARIANTS_HPP
