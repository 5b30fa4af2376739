// Command-line front end for the annular invariant library.
//
// Subcommands:
//   compute  -- one of the five loop invariants of a closed braid, as a
//               deterministic JSON document or a plain line
//   loop     -- the canonical-loop event stream, one line per event
//   verify   -- the symbolic equation verifier (four-point systems, assembly,
//               flex, cube edges, weight cube)
//   corpus   -- run or refresh a corpus of expected documents
//
// Exit codes: 0 success, 1 verification/corpus failure, 2 input error,
// 3 internal invariant violation.
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "annular/equations.hpp"
#include "annular/invariants.hpp"
#include "annular/ratfun.hpp"

using namespace annular;
using nlohmann::ordered_json;

namespace {

// ---------------------------------------------------------------------------
// Shared option plumbing

const std::map<std::string, LoopStrategy> kStrategies = {
    {"delta", LoopStrategy::push_delta},
    {"delta-inverse", LoopStrategy::push_delta_inverse},
    {"alt-negative", LoopStrategy::alt_negative_rule},
};

const char* strategy_name(LoopStrategy s) {
  for (const auto& [name, val] : kStrategies)
    if (val == s) return name.c_str();
  return "?";
}

struct CommonArgs {
  std::string word;
  int strands = 0;
  std::string strategy = "delta";
  std::string conventions_file;
  std::string output = "plain";
};

ConventionTable load_conventions(const CommonArgs& a) {
  ConventionTable conv = ConventionTable::pinned_default();
  if (!a.conventions_file.empty()) conv.load_overrides_file(a.conventions_file);
  return conv;
}

// Canonical text of a parsed word: the cache key and the documents must not
// depend on incidental whitespace in --word.
std::string canonical_word_text(const BraidWord& w) {
  std::string out;
  for (const Letter& l : w.letters) {
    if (!out.empty()) out += ' ';
    out += std::to_string(l.sign > 0 ? l.index : -l.index);
  }
  return out;
}

long long small_int(const Int& c) {
  static const Int lo = (std::numeric_limits<long long>::min)();
  static const Int hi = (std::numeric_limits<long long>::max)();
  if (c < lo || c > hi)
    throw std::logic_error("coefficient exceeds 64-bit range");
  return c.convert_to<long long>();
}

// ---------------------------------------------------------------------------
// Documents

ordered_json document_json(const BraidWord& w, InvariantKind kind,
                           const ComputeOptions& opt,
                           const ConventionTable& conv,
                           const InvariantResult& res) {
  ordered_json doc;
  doc["invariant"] = invariant_kind_name(kind);
  ordered_json opts;
  opts["strategy"] = strategy_name(opt.strategy);
  opts["mod2"] = opt.mod2;
  opts["a4"] = opt.a4;
  opts["part"] = opt.part;
  opts["no_tangencies"] = opt.no_tangencies;
  doc["options"] = opts;
  std::vector<std::string> vars;
  for (int v = 0; v < kNumVars; ++v)
    if (res.value.uses(static_cast<Var>(v)))
      vars.emplace_back(1, kVarNames[v]);
  doc["variables"] = vars;
  ordered_json terms = ordered_json::array();
  for (const auto& [e, c] : res.value.terms()) {
    ordered_json t;
    t["coeff"] = small_int(c);
    t["A"] = e[VA];
    t["h"] = e[VH];
    t["t"] = e[VT];
    t["r"] = e[VR];
    t["s"] = e[VS];
    terms.push_back(t);
  }
  doc["terms"] = terms;
  ordered_json loop;
  loop["word"] = canonical_word_text(w);
  loop["strands"] = w.strands;
  loop["triple_events"] = res.triple_events;
  loop["tangency_events"] = res.tangency_events;
  doc["loop"] = loop;
  doc["fingerprint"] = conv.fingerprint();
  return doc;
}

std::string render_plain(const ordered_json& doc) {
  std::ostringstream os;
  os << "invariant: " << doc["invariant"].get<std::string>() << "\n";
  os << "word: " << doc["loop"]["word"].get<std::string>() << "  (strands "
     << doc["loop"]["strands"].get<int>() << ", strategy "
     << doc["options"]["strategy"].get<std::string>() << ")\n";
  os << "value:";
  if (doc["terms"].empty()) {
    os << " 0";
  } else {
    bool first = true;
    for (const auto& t : doc["terms"]) {
      long long c = t["coeff"].get<long long>();
      os << (first ? " " : c < 0 ? " - " : " + ");
      if (first && c < 0) os << "-";
      first = false;
      long long ac = c < 0 ? -c : c;
      std::string mono;
      for (const char* v : {"A", "h", "t", "r", "s"}) {
        int e = t[v].get<int>();
        if (e == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += v;
        if (e != 1) mono += "^" + std::to_string(e);
      }
      if (mono.empty())
        os << ac;
      else if (ac == 1)
        os << mono;
      else
        os << ac << "*" << mono;
    }
  }
  os << "\n";
  os << "events: " << doc["loop"]["triple_events"].get<int>() << " triple, "
     << doc["loop"]["tangency_events"].get<int>() << " tangency\n";
  os << "fingerprint: " << doc["fingerprint"].get<std::string>() << "\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Content-addressed document cache

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::filesystem::path cache_dir() {
  if (const char* env = std::getenv("ANNULAR_CACHE_DIR")) return env;
  return ".annular-cache";
}

std::string cache_key(const BraidWord& w, InvariantKind kind,
                      const ComputeOptions& opt, const ConventionTable& conv) {
  std::ostringstream os;
  os << canonical_word_text(w) << '|' << w.strands << '|'
     << invariant_kind_name(kind) << '|' << strategy_name(opt.strategy) << '|'
     << opt.mod2 << opt.a4 << opt.no_tangencies << '|' << opt.part << '|'
     << conv.fingerprint();
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx",
                static_cast<unsigned long long>(fnv1a(os.str())));
  return hex;
}

// ---------------------------------------------------------------------------
// compute

ordered_json compute_document(const BraidWord& w, InvariantKind kind,
                              const ComputeOptions& opt,
                              const ConventionTable& conv, bool use_cache) {
  std::filesystem::path entry = cache_dir() / (cache_key(w, kind, opt, conv) +
                                               std::string(".json"));
  if (use_cache && std::filesystem::exists(entry)) {
    std::ifstream in(entry);
    ordered_json doc = ordered_json::parse(in);
    // Never serve a stale document across a convention change: the key
    // already includes the fingerprint, so a mismatch means a corrupt entry.
    if (doc["fingerprint"].get<std::string>() != conv.fingerprint())
      throw std::logic_error("cache entry fingerprint mismatch");
    return doc;
  }
  InvariantResult res = compute_invariant(w, kind, conv, opt);
  ordered_json doc = document_json(w, kind, opt, conv, res);
  if (use_cache) {
    std::error_code ec;
    std::filesystem::create_directories(cache_dir(), ec);
    if (!ec) {
      std::ofstream out(entry);
      out << doc.dump() << "\n";
    }
  }
  return doc;
}

int cmd_compute(const CommonArgs& common, const std::string& invariant,
                bool mod2, bool a4, const std::string& part,
                bool no_tangencies, bool no_cache) {
  InvariantKind kind = parse_invariant_kind(invariant);
  if ((mod2 || a4) && kind != InvariantKind::X)
    throw std::runtime_error("--mod2 and --a4 apply only to X");
  if (!part.empty() && kind != InvariantKind::X && kind != InvariantKind::Phi)
    throw std::runtime_error("--part applies only to X and Phi");
  BraidWord w = parse_braid_word(common.word, common.strands);
  ComputeOptions opt;
  opt.strategy = kStrategies.at(common.strategy);
  opt.mod2 = mod2;
  opt.a4 = a4;
  opt.part = part;
  opt.no_tangencies = no_tangencies;
  ConventionTable conv = load_conventions(common);
  ordered_json doc = compute_document(w, kind, opt, conv, !no_cache);
  if (common.output == "json")
    std::cout << doc.dump() << "\n";
  else
    std::cout << render_plain(doc);
  return 0;
}

// ---------------------------------------------------------------------------
// loop

int cmd_loop(const CommonArgs& common) {
  BraidWord w = parse_braid_word(common.word, common.strands);
  ConventionTable conv = load_conventions(common);
  CanonicalLoop loop = canonical_loop(w, kStrategies.at(common.strategy));
  ordered_json events = ordered_json::array();
  int index = 0;
  for (const LoopEvent& e : loop.events) {
    ordered_json ev;
    ev["index"] = index++;
    ev["pass"] = e.pass_index;
    ev["site"] = e.site;
    if (e.kind == EventKind::TriplePoint) {
      TripleInfo ti = triple_info(e, conv);
      ev["kind"] = "triple";
      ev["type"] = triple_class_name(ti.type_class);
      ev["sign"] = ti.sign;
      ev["marking"] = ti.marking;
    } else {
      TangencyInfo ti = tangency_info(e, conv);
      ev["kind"] = e.creation ? "tangency-creation" : "tangency-annihilation";
      ev["type"] = std::to_string(ti.type);
      ev["sign"] = ti.sign;
      ev["marking"] = ti.marking;
    }
    ev["word_after"] = canonical_word_text(e.word_after);
    events.push_back(ev);
  }
  if (common.output == "json") {
    std::cout << events.dump() << "\n";
    return 0;
  }
  for (const auto& ev : events) {
    std::printf("%03d %-22s pass=%d site=%d type=%-3s sign=%+d marking=%d  %s\n",
                ev["index"].get<int>(), ev["kind"].get<std::string>().c_str(),
                ev["pass"].get<int>(), ev["site"].get<int>(),
                ev["type"].get<std::string>().c_str(), ev["sign"].get<int>(),
                ev["marking"].get<int>(),
                ev["word_after"].get<std::string>().c_str());
  }
  std::printf("%d triple, %d creation, %d annihilation events\n",
              loop.triple_count(), loop.creation_count(),
              loop.annihilation_count());
  return 0;
}

// ---------------------------------------------------------------------------
// verify

void append(std::vector<CheckResult>& out, const std::string& prefix,
            std::vector<CheckResult> part) {
  for (CheckResult& r : part) {
    r.name = prefix + "." + r.name;
    out.push_back(std::move(r));
  }
}

bool vector_in_span(const std::vector<std::vector<Laurent>>& basis,
                    const std::vector<Laurent>& v) {
  std::vector<std::vector<Laurent>> m = basis;
  int base = matrix_rank(m);
  m.push_back(v);
  return matrix_rank(m) == base;
}

std::vector<Laurent> assignment_vector(const EquationSystem& sys,
                                       const Assignment& a) {
  std::vector<Laurent> v;
  for (const auto& var : sys.variables) v.push_back(a.at(var));
  return v;
}

std::vector<CheckResult> run_tetra(bool marking_case) {
  const EquationSystem& sys =
      marking_case ? system_marking() : system_smoothing();
  std::vector<CheckResult> out;
  std::vector<std::pair<std::string, Assignment>> sols;
  if (marking_case) {
    sols.emplace_back("solution", solution_marking());
  } else {
    sols.emplace_back("solution-1", solution_smoothing_1());
    sols.emplace_back("solution-2", solution_smoothing_2());
  }
  for (const auto& [name, a] : sols)
    append(out, name, verify_assignment(sys, a));
  auto kernel = system_kernel(sys);
  int expected = marking_case ? 1 : 2;
  int dim = static_cast<int>(kernel.size());
  // The dimension is reported; exceeding the published count is a recorded
  // finding, not a silent acceptance, while the containment of the published
  // solution lines stays a hard requirement.
  CheckResult dim_check;
  dim_check.name = "kernel.dimension";
  dim_check.pass = dim >= expected;
  dim_check.detail = "dimension = " + std::to_string(dim) + " (published: " +
                     std::to_string(expected) +
                     (dim == expected ? ")" : "; excess reported as a finding)");
  out.push_back(dim_check);
  for (const auto& [name, a] : sols) {
    CheckResult c;
    c.name = "kernel.contains-" + name;
    c.pass = vector_in_span(kernel, assignment_vector(sys, a));
    out.push_back(c);
  }
  if (!marking_case) {
    CheckResult c;
    c.name = "kernel.exactly-the-solution-lines";
    c.pass = dim == 2;
    c.detail = dim_check.detail;
    out.push_back(c);
  }
  return out;
}

std::vector<CheckResult> run_assembly() {
  std::vector<CheckResult> out = diff_assembly_against_listing();
  EquationSystem assembled = assemble_four_point();
  append(out, "assembled.solution-1",
         verify_assignment(assembled, solution_smoothing_1()));
  append(out, "assembled.solution-2",
         verify_assignment(assembled, solution_smoothing_2()));
  return out;
}

int cmd_verify(const std::string& target, const std::string& output) {
  std::vector<CheckResult> results;
  if (target == "tetra-jones" || target == "all")
    append(results, "tetra-jones", run_tetra(false));
  if (target == "tetra-alexander" || target == "all")
    append(results, "tetra-alexander", run_tetra(true));
  if (target == "assembly" || target == "all")
    append(results, "assembly", run_assembly());
  if (target == "flex" || target == "all")
    append(results, "flex", verify_flex());
  if (target == "cube" || target == "all")
    append(results, "cube", verify_cube_edges());
  if (target == "weights" || target == "all")
    append(results, "weights", verify_weight_cube());
  if (results.empty())
    throw std::runtime_error(
        "unknown verify target '" + target +
        "' (expected tetra-jones, tetra-alexander, assembly, flex, cube, "
        "weights or all)");
  int failures = 0;
  for (const auto& r : results) failures += !r.pass;
  if (output == "json") {
    ordered_json arr = ordered_json::array();
    for (const auto& r : results) {
      ordered_json j;
      j["name"] = r.name;
      j["pass"] = r.pass;
      j["detail"] = r.detail;
      arr.push_back(j);
    }
    ordered_json doc;
    doc["target"] = target;
    doc["checks"] = arr;
    doc["failures"] = failures;
    std::cout << doc.dump() << "\n";
  } else {
    for (const auto& r : results) {
      std::cout << (r.pass ? "PASS " : "FAIL ") << r.name;
      if (!r.detail.empty()) std::cout << "  -- " << r.detail;
      std::cout << "\n";
    }
    std::cout << results.size() << " checks, " << failures << " failures\n";
  }
  return failures == 0 ? 0 : 1;
}

// ---------------------------------------------------------------------------
// corpus

struct CorpusLine {
  ordered_json entry;
  bool blank = false;
};

std::vector<CorpusLine> read_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open corpus file " + path);
  std::vector<CorpusLine> lines;
  std::string line;
  while (std::getline(in, line)) {
    CorpusLine cl;
    if (line.empty() || line[0] == '#') {
      cl.blank = true;
      cl.entry = line;
    } else {
      cl.entry = ordered_json::parse(line);
    }
    lines.push_back(std::move(cl));
  }
  return lines;
}

ComputeOptions options_from_json(const ordered_json& o) {
  ComputeOptions opt;
  opt.strategy = kStrategies.at(o.value("strategy", "delta"));
  opt.mod2 = o.value("mod2", false);
  opt.a4 = o.value("a4", false);
  opt.part = o.value("part", "");
  opt.no_tangencies = o.value("no_tangencies", false);
  return opt;
}

int cmd_corpus(const std::string& mode, const std::string& path,
               const std::string& conventions_file, bool no_cache) {
  ConventionTable conv = ConventionTable::pinned_default();
  if (!conventions_file.empty()) conv.load_overrides_file(conventions_file);
  std::vector<CorpusLine> lines = read_corpus(path);
  const std::set<std::string> kProvenance = {"paper-example", "derived-oracle",
                                             "regression"};
  int entries = 0, failures = 0, refreshed = 0;
  for (CorpusLine& cl : lines) {
    if (cl.blank) continue;
    ordered_json& e = cl.entry;
    ++entries;
    std::string prov = e.at("provenance").get<std::string>();
    if (!kProvenance.count(prov))
      throw std::runtime_error("corpus entry " + std::to_string(entries) +
                               ": unknown provenance '" + prov + "'");
    BraidWord w = parse_braid_word(e.at("word").get<std::string>(),
                                   e.value("strands", 0));
    InvariantKind kind =
        parse_invariant_kind(e.at("invariant").get<std::string>());
    ComputeOptions opt = options_from_json(e.value("options", ordered_json::object()));
    ordered_json doc = compute_document(w, kind, opt, conv, !no_cache);
    if (mode == "record") {
      // Expected paper values are ground truth and stay immutable; only
      // machine-derived expectations are refreshed.
      if (prov == "derived-oracle") {
        e["expected"] = doc;
        ++refreshed;
      }
      continue;
    }
    const ordered_json& expected = e.at("expected");
    if (expected == doc) {
      std::cout << "PASS " << prov << " " << e.at("invariant").get<std::string>()
                << "(" << e.at("word").get<std::string>() << ")\n";
    } else {
      ++failures;
      std::cout << "FAIL " << prov << " " << e.at("invariant").get<std::string>()
                << "(" << e.at("word").get<std::string>() << ")\n";
      if (expected.value("fingerprint", "") !=
          doc["fingerprint"].get<std::string>())
        std::cout << "     fingerprint mismatch: expected "
                  << expected.value("fingerprint", "(none)") << ", computed "
                  << doc["fingerprint"].get<std::string>() << "\n";
      std::cout << "     expected terms: " << expected.value("terms", ordered_json::array()).dump()
                << "\n     computed terms: " << doc["terms"].dump() << "\n";
    }
  }
  if (mode == "record") {
    std::ofstream out(path);
    for (const CorpusLine& cl : lines) {
      if (cl.blank)
        out << cl.entry.get<std::string>() << "\n";
      else
        out << cl.entry.dump() << "\n";
    }
    std::cout << "recorded " << refreshed << " derived-oracle entries of "
              << entries << "\n";
    return 0;
  }
  std::cout << entries << " entries, " << failures << " failures\n";
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Loop invariants of closed braids in the solid torus"};
  app.require_subcommand(1);

  CommonArgs common;
  std::string invariant = "S";
  bool mod2 = false, a4 = false, no_tangencies = false, no_cache = false;
  std::string part;
  std::string verify_target;
  std::string corpus_mode, corpus_path;

  auto add_common = [&](CLI::App* sub, bool needs_word) {
    if (needs_word) {
      sub->add_option("--word", common.word, "braid word, signed integers")
          ->required();
      sub->add_option("--strands", common.strands,
                      "strand count (inferred when omitted)");
      sub->add_option("--strategy", common.strategy, "loop strategy")
          ->check(CLI::IsMember({"delta", "delta-inverse", "alt-negative"}));
    }
    sub->add_option("--conventions", common.conventions_file,
                    "convention override file");
    sub->add_option("--output", common.output, "output format")
        ->check(CLI::IsMember({"json", "plain"}));
  };

  CLI::App* compute = app.add_subcommand("compute", "compute one invariant");
  add_common(compute, true);
  compute->add_option("--invariant", invariant, "S, S+, S-, X or Phi")
      ->required();
  compute->add_flag("--mod2", mod2, "reduce coefficients mod 2 (X only)");
  compute->add_flag("--a4", a4, "fold the framing variable by A^4 = 1 (X only)");
  compute->add_option("--part", part, "restricted sub-sum (X: 3/4/5, Phi: 1/234)");
  compute->add_flag("--no-tangencies", no_tangencies,
                    "drop the autotangency terms (diagnostic)");
  compute->add_flag("--no-cache", no_cache, "bypass the document cache");

  CLI::App* loop = app.add_subcommand("loop", "dump the canonical loop events");
  add_common(loop, true);
  bool dump_events = false;
  loop->add_flag("--dump-events", dump_events,
                 "event dump (implied; kept for symmetry)");

  CLI::App* verify = app.add_subcommand("verify", "run the equation verifier");
  verify->add_option("target", verify_target,
                     "tetra-jones | tetra-alexander | assembly | flex | cube | "
                     "weights | all")
      ->required();
  add_common(verify, false);

  CLI::App* corpus = app.add_subcommand("corpus", "run or record a corpus");
  corpus->add_option("mode", corpus_mode, "run | record")
      ->required()
      ->check(CLI::IsMember({"run", "record"}));
  corpus->add_option("path", corpus_path, "corpus file, one JSON entry per line")
      ->required();
  corpus->add_flag("--no-cache", no_cache, "bypass the document cache");
  add_common(corpus, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (compute->parsed())
      return cmd_compute(common, invariant, mod2, a4, part, no_tangencies,
                         no_cache);
    if (loop->parsed()) return cmd_loop(common);
    if (verify->parsed()) return cmd_verify(verify_target, common.output);
    if (corpus->parsed())
      return cmd_corpus(corpus_mode, corpus_path, common.conventions_file,
                        no_cache);
  } catch (const StarLikeConfiguration& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
