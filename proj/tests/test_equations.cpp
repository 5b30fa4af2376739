#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <string>
#include <vector>

#include "annular/equations.hpp"
#include "annular/ratfun.hpp"

using namespace annular;

namespace {

int failures(const std::vector<CheckResult>& rs) {
  int n = 0;
  for (const auto& r : rs) n += !r.pass;
  return n;
}

std::set<std::string> failing_names(const std::vector<CheckResult>& rs) {
  std::set<std::string> out;
  for (const auto& r : rs)
    if (!r.pass) out.insert(r.name);
  return out;
}

// True when v lies in the span of the basis: appending it does not raise the
// rank.
bool in_span(const std::vector<std::vector<Laurent>>& basis,
             const std::vector<Laurent>& v) {
  std::vector<std::vector<Laurent>> m = basis;
  int base_rank = matrix_rank(m);
  m.push_back(v);
  return matrix_rank(m) == base_rank;
}

std::vector<Laurent> assignment_vector(const EquationSystem& sys,
                                       const Assignment& a) {
  std::vector<Laurent> v;
  for (const auto& var : sys.variables) v.push_back(a.at(var));
  return v;
}

}  // namespace

TEST_CASE("transcription guard: the embedded listings are unchanged") {
  CHECK(transcription_checksum() == 537206474167137241ULL);
}

TEST_CASE("smoothing system: both published solutions and the exact kernel") {
  const EquationSystem& sys = system_smoothing();
  REQUIRE(sys.equations.size() == 39);
  // Hand-checked instances (kept as commentary next to the code they guard):
  //   x1 under solution 2: -(-1) - 1 + (-1) + 1 = 0, all times A^-1.
  //   x19 under solution 2: A^-5(-A^4) - A^-3 + (A^-1 + A^-3) = 0.
  //   x20 under solution 2: 2A^-3(-A^4) + 2A = 0.
  CHECK(failures(verify_assignment(sys, solution_smoothing_1())) == 0);
  CHECK(failures(verify_assignment(sys, solution_smoothing_2())) == 0);

  auto kernel = system_kernel(sys);
  CHECK(kernel.size() == 2);
  CHECK(in_span(kernel, assignment_vector(sys, solution_smoothing_1())));
  CHECK(in_span(kernel, assignment_vector(sys, solution_smoothing_2())));
}

TEST_CASE("marking system: the published solution, kernel containment, and "
          "the extra kernel line") {
  const EquationSystem& sys = system_marking();
  REQUIRE(sys.equations.size() == 48);
  CHECK(failures(verify_assignment(sys, solution_marking())) == 0);

  auto kernel = system_kernel(sys);
  CHECK(in_span(kernel, assignment_vector(sys, solution_marking())));
  // The source claims a single solution line, but the printed 48 equations
  // admit a second independent kernel vector (supported on C4, bC5, bC6).
  // This is reported as a finding; the containment above is the hard
  // requirement.
  CHECK(kernel.size() == 2);
  Assignment extra;
  for (const auto& v : sys.variables) extra[v] = Laurent();
  extra["C4"] = Laurent::var(VA);
  extra["bC5"] = Laurent::monomial(-1, 2);
  extra["bC6"] = Laurent(Int(1));
  CHECK(failures(verify_assignment(sys, extra)) == 0);
  CHECK(in_span(kernel, assignment_vector(sys, extra)));
}

TEST_CASE("assembly of the eight vertex contributions against the listing") {
  // The signed sum reproduces 54 of the 63 generator equations exactly; the
  // nine low generators below differ from the listing by localized one-term
  // discrepancies in the printed contribution table (the listing itself is
  // the overdetermined, doubly-validated side).  The structured diff pins
  // the exact set so regressions in the transcription are caught.
  auto diff = diff_assembly_against_listing();
  REQUIRE(diff.size() == 63);
  const std::set<std::string> expected_mismatches = {
      "assembly.x1", "assembly.x2",  "assembly.x3",  "assembly.x6",
      "assembly.x8", "assembly.x9",  "assembly.x10", "assembly.x11",
      "assembly.x12"};
  CHECK(failing_names(diff) == expected_mismatches);
  for (const auto& r : diff)
    if (!r.pass) CHECK(!r.detail.empty());

  EquationSystem assembled = assemble_four_point();
  // The first solution annihilates the assembled system outright; the second
  // is annihilated exactly outside the mismatched generators.
  CHECK(failures(verify_assignment(assembled, solution_smoothing_1())) == 0);
  for (const auto& r : verify_assignment(assembled, solution_smoothing_2())) {
    std::string gen = r.name.substr(r.name.rfind('.') + 1);
    bool mismatched = expected_mismatches.count("assembly." + gen) > 0;
    CAPTURE(r.name);
    if (!mismatched) CHECK(r.pass);
  }
}

TEST_CASE("flex relations: antisymmetric kernel and marking relations") {
  auto rs = verify_flex();
  for (const auto& r : rs) {
    CAPTURE(r.name);
    CAPTURE(r.detail);
    CHECK(r.pass);
  }
}

TEST_CASE("type-cube edge systems under their stated solutions") {
  auto rs = verify_cube_edges();
  REQUIRE(!rs.empty());
  for (const auto& r : rs) {
    CAPTURE(r.name);
    CAPTURE(r.detail);
    CHECK(r.pass);
  }
  // The record includes both the failure of the one misprinted equation as
  // printed and the success of its completed form.
  std::set<std::string> names;
  for (const auto& r : rs) names.insert(r.name);
  CHECK(names.count("edge-2-8.x2.printed-form-inconsistent.instance1") == 1);
  CHECK(names.count("edge-2-8.x2.restored-form.instance1") == 1);
  CHECK(names.count("cube.marking-edge-1-7") == 1);
}

TEST_CASE("type-cube face walk: every eighth-power defect is compensated") {
  auto rs = verify_weight_cube();
  REQUIRE(rs.size() == 1 + 6 * 3);
  for (const auto& r : rs) {
    CAPTURE(r.name);
    CAPTURE(r.detail);
    CHECK(r.pass);
  }
}
