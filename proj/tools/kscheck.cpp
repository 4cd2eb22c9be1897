// kscheck: command-line front end to the kskit verification pipelines.
//
// Exit codes: 0 ok, 1 --expect-paper mismatch, 2 usage, 3 unknown set or
// missing/malformed data, 4 search budget exhausted, 5 I/O failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kskit/catalog.hpp"
#include "kskit/colorability.hpp"
#include "kskit/error.hpp"
#include "kskit/game.hpp"
#include "kskit/graph.hpp"
#include "kskit/majorana.hpp"
#include "kskit/weylheisenberg.hpp"

namespace {

using namespace kskit;

enum Exit : int { kOk = 0, kMismatch = 1, kUsage = 2, kData = 3, kTimeout = 4, kIo = 5 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct BudgetExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Pinned values checked under --expect-paper.
struct PinnedRow {
  std::size_t bases;
  std::size_t orbits;
  unsigned long order;
  std::vector<std::size_t> orbit_sizes;  // empty when not pinned
  std::string minimal;                   // "|X|-|Y|"
};

const std::map<std::string, PinnedRow>& pinned_rows() {
  static const std::map<std::string, PinnedRow> rows = {
      {"new33", {14, 3, 144, {3, 12, 18}, "5-9"}},
      {"peres33", {16, 4, 48, {}, "7-9"}},
      {"penrose33", {16, 4, 48, {}, "7-9"}},
      {"conway31", {17, 10, 4, {}, "8-9"}},
      {"schuette33", {20, 9, 8, {}, "8-9"}},
  };
  return rows;
}

const PinnedRow* pinned(const std::string& name) {
  auto it = pinned_rows().find(name);
  return it == pinned_rows().end() ? nullptr : &it->second;
}

// Collects report lines and --expect-paper checks.
class Report {
 public:
  Report(std::string command, bool expect) : expect_(expect) { line("command: " + command); }

  void line(const std::string& s) { std::cout << s << '\n'; }

  template <class T>
  void check(const std::string& what, const T& actual, const T& expected) {
    if (!expect_) return;
    ++checks_;
    std::ostringstream os;
    if (actual == expected) {
      os << "expect " << what << ": ok";
    } else {
      ++mismatches_;
      os << "expect " << what << ": MISMATCH (got " << actual << ", pinned " << expected << ")";
    }
    line(os.str());
  }

  int finish() {
    if (expect_) {
      if (checks_ == 0) line("expect: no pinned values for this input");
      line("expect summary: " + std::to_string(checks_ - mismatches_) + "/" + std::to_string(checks_) + " match");
    }
    return mismatches_ == 0 ? kOk : kMismatch;
  }

 private:
  bool expect_;
  int checks_ = 0;
  int mismatches_ = 0;
};

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string index_list(const std::vector<std::size_t>& v) {
  std::vector<std::string> parts;
  for (auto i : v) parts.push_back(std::to_string(i));
  return "{" + join(parts, ",") + "}";
}

std::string decimal(const Rational& q) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", q.get_d());
  return buf;
}

std::string basis_string(const KSInstance& inst, const Triangle& t) {
  return "{" + inst.rays()[t[0]].to_string() + ", " + inst.rays()[t[1]].to_string() + ", " +
         inst.rays()[t[2]].to_string() + "}";
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << text;
  out.flush();
  if (!out) throw IoError("write to " + path + " failed");
}

KSInstance load(const std::string& name_or_path, Report& r) {
  KSInstance inst = resolve_set(name_or_path);
  r.line("set: " + inst.name());
  if (!inst.provenance().empty()) r.line("provenance: " + inst.provenance());
  for (const auto& n : inst.notes()) r.line("note: " + n);
  return inst;
}

void print_orbits(Report& r, const AutGroupReport& aut) {
  std::vector<std::string> sizes;
  for (const auto& o : aut.orbits) sizes.push_back(std::to_string(o.size()));
  r.line("orbit sizes: " + join(sizes, " "));
}

std::vector<std::size_t> sorted_orbit_sizes(const AutGroupReport& aut) {
  std::vector<std::size_t> s;
  for (const auto& o : aut.orbits) s.push_back(o.size());
  std::sort(s.begin(), s.end());
  return s;
}

std::string sizes_string(const std::vector<std::size_t>& v) {
  std::vector<std::string> parts;
  for (auto s : v) parts.push_back(std::to_string(s));
  return join(parts, "/");
}

// ---------------------------------------------------------------------------

int cmd_verify(const std::string& set, const std::string& cnf_path, bool expect) {
  Report r("verify", expect);
  KSInstance inst = load(set, r);
  r.line("rays: " + std::to_string(inst.size()));
  r.line("complete bases: " + std::to_string(inst.bases().size()));
  ColoringResult res = find_ks_assignment(inst);
  r.line("search nodes: " + std::to_string(res.stats.nodes));
  if (res.colorable()) {
    r.line("verdict: SAT (a KS assignment exists)");
    std::vector<std::string> ones;
    for (std::size_t i = 0; i < inst.size(); ++i)
      if (res.assignment->values[i]) ones.push_back(inst.rays()[i].to_string());
    r.line("assignment (rays valued 1): " + join(ones, " "));
    r.line(std::string("assignment check: ") + (verify_assignment(inst, *res.assignment) ? "INVALID" : "valid"));
  } else {
    r.line("verdict: UNSAT (no KS assignment; exhaustive search)");
  }
  if (!cnf_path.empty()) {
    write_file(cnf_path, to_cnf(inst));
    r.line("cnf: " + cnf_path);
  }
  if (inst.name() == "yuoh13") {
    r.check<std::string>("verdict", res.colorable() ? "SAT" : "UNSAT", "SAT");
  } else if (pinned(inst.name())) {
    r.check<std::string>("verdict", res.colorable() ? "SAT" : "UNSAT", "UNSAT");
  }
  return r.finish();
}

int cmd_bases(const std::string& set, bool expect) {
  Report r("bases", expect);
  KSInstance inst = load(set, r);
  r.line("complete bases: " + std::to_string(inst.bases().size()));
  for (std::size_t i = 0; i < inst.bases().size(); ++i)
    r.line("  b" + std::to_string(i) + " " + basis_string(inst, inst.bases()[i]));
  if (inst.name() == "new33") {
    // The labelled game bases split as the coordinate basis, nine bases
    // through a coordinate ray, and four bases of unimodular rays.
    const GameBases& gb = new33_game_bases();
    std::size_t coordinate = 0, through_axis = 0, unimodular = 0, matched = 0;
    auto classify = [&](const LabelledBasis& lb) {
      std::size_t zeros = 0;
      for (const Ray& ray : lb.basis.rays())
        for (const auto& c : ray.canonical()) zeros += c.is_zero();
      if (zeros == 6) ++coordinate;
      else if (zeros > 0) ++through_axis;
      else ++unimodular;
      Triangle t{};
      for (std::size_t k = 0; k < 3; ++k) t[k] = *inst.index_of(lb.basis[k]);
      std::sort(t.begin(), t.end());
      if (std::find(inst.bases().begin(), inst.bases().end(), t) != inst.bases().end()) ++matched;
    };
    for (const auto& lb : gb.alice) classify(lb);
    for (const auto& lb : gb.bob) classify(lb);
    r.line("partition: " + std::to_string(coordinate) + " + " + std::to_string(through_axis) + " + " +
           std::to_string(unimodular) + " (coordinate | through a coordinate ray | unimodular)");
    r.line("labelled bases found among complete bases: " + std::to_string(matched) + "/14");
    r.check<std::size_t>("labelled bases matched", matched, 14);
    r.check<std::string>("partition", std::to_string(coordinate) + "+" + std::to_string(through_axis) + "+" +
                                          std::to_string(unimodular),
                         "1+9+4");
  }
  if (const PinnedRow* p = pinned(inst.name())) r.check("bases", inst.bases().size(), p->bases);
  return r.finish();
}

int cmd_symmetry(const std::string& set, bool expect) {
  Report r("symmetry", expect);
  KSInstance inst = load(set, r);
  AutGroupReport aut = automorphisms(inst.graph());
  r.line("automorphism group order: " + aut.order.get_str());
  r.line("orbits: " + std::to_string(aut.orbits.size()));
  print_orbits(r, aut);
  r.line("generators: " + std::to_string(aut.generators.size()));
  for (std::size_t i = 0; i < aut.orbits.size(); ++i) {
    std::vector<std::string> members;
    for (auto v : aut.orbits[i]) members.push_back(inst.rays()[v].to_string());
    r.line("  orbit " + std::to_string(i) + ": " + join(members, " "));
  }
  if (const PinnedRow* p = pinned(inst.name())) {
    r.check("order", aut.order.get_str(), std::to_string(p->order));
    r.check("orbits", aut.orbits.size(), p->orbits);
    if (!p->orbit_sizes.empty())
      r.check("orbit sizes", sizes_string(sorted_orbit_sizes(aut)), sizes_string(p->orbit_sizes));
  }
  return r.finish();
}

std::vector<std::size_t> parse_indices(const std::string& text, std::size_t limit, const char* what) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      unsigned long v = std::stoul(item, &pos);
      if (pos != item.size()) throw std::invalid_argument(item);
      if (v >= limit) throw UsageError(std::string(what) + ": basis index " + item + " out of range");
      out.push_back(v);
    } catch (const std::logic_error&) {
      throw UsageError(std::string(what) + ": bad basis index '" + item + "'");
    }
  }
  if (out.empty()) throw UsageError(std::string(what) + ": empty basis list");
  return out;
}

int cmd_game(const std::string& set, const std::string& alice_arg, const std::string& bob_arg,
             const std::string& dimacs, const std::string& legend, const std::string& cnf, bool expect) {
  Report r("game", expect);
  KSInstance inst = load(set, r);
  std::vector<Basis> alice, bob;
  bool labelled = false;
  if (alice_arg.empty() != bob_arg.empty()) throw UsageError("--alice and --bob go together");
  if (alice_arg.empty()) {
    if (inst.name() != "new33") throw UsageError("game on " + inst.name() + " needs --alice and --bob");
    labelled = true;
    for (const auto& lb : new33_game_bases().alice) alice.push_back(lb.basis);
    for (const auto& lb : new33_game_bases().bob) bob.push_back(lb.basis);
    r.line("alice bases: x=0..4 (labelled)");
    r.line("bob bases: y=0..8 (labelled)");
  } else {
    auto to_basis = [&](std::size_t i) {
      const Triangle& t = inst.bases()[i];
      return Basis(inst.rays()[t[0]], inst.rays()[t[1]], inst.rays()[t[2]]);
    };
    auto xs = parse_indices(alice_arg, inst.bases().size(), "--alice");
    auto ys = parse_indices(bob_arg, inst.bases().size(), "--bob");
    for (auto i : xs) alice.push_back(to_basis(i));
    for (auto i : ys) bob.push_back(to_basis(i));
    r.line("alice bases: " + index_list(xs));
    r.line("bob bases: " + index_list(ys));
  }
  Game g = build_game(alice, bob);
  std::size_t shared = 0, orth = 0, other = 0;
  std::map<std::size_t, std::size_t> shared_wins, orth_wins;
  for (const Context& c : g.contexts()) {
    switch (c.type) {
      case ContextType::shared_vector: ++shared; ++shared_wins[c.wins()]; break;
      case ContextType::orthogonal_pair: ++orth; ++orth_wins[c.wins()]; break;
      case ContextType::other: ++other; break;
    }
  }
  auto wins_string = [](const std::map<std::size_t, std::size_t>& m) {
    std::vector<std::string> parts;
    for (auto [w, n] : m) parts.push_back(std::to_string(n) + "x" + std::to_string(w));
    return parts.empty() ? std::string("-") : join(parts, " ");
  };
  r.line("contexts: " + std::to_string(g.contexts().size()));
  r.line("shared-vector contexts: " + std::to_string(shared) + " (winning events: " + wins_string(shared_wins) + ")");
  r.line("orthogonal-pair contexts: " + std::to_string(orth) + " (winning events: " + wins_string(orth_wins) + ")");
  r.line("other contexts: " + std::to_string(other));
  r.line("winning events: " + std::to_string(g.winning_events()));

  ClassicalValue cv = classical_value(g);
  ClassicalValue cv2 = classical_value_by_alice_strategies(g);
  QuantumValue qv = quantum_value_maxent(g, BobMeasurement::conjugated);
  QuantumValue qv_literal = quantum_value_maxent(g, BobMeasurement::as_given);
  r.line("alpha(exclusivity graph): " + std::to_string(cv.contexts_won) + " (" + std::to_string(cv.search_nodes) +
         " nodes)");
  r.line("W_C = " + rational_to_string(cv.value) + " (~" + decimal(cv.value) + ")");
  r.line("W_C by Alice-strategy enumeration = " + rational_to_string(cv2.value));
  r.line("witness strategy: alice " + index_list(cv.witness.alice) + " bob " + index_list(cv.witness.bob) +
         ", wins " + std::to_string(contexts_won(g, cv.witness)) + " contexts");
  r.line("W_Q = " + qv.value.to_string() + " (maximally entangled state, Bob measures conjugated rays)");
  r.line("W_Q with Bob measuring the rays as given = " + qv_literal.value.to_string());
  r.line("W_C = " + rational_to_string(cv.value) + ", W_Q = " + qv.value.to_string());

  if (!dimacs.empty()) {
    std::string leg = legend.empty() ? dimacs + ".legend" : legend;
    try {
      export_exclusivity_graph(g, dimacs, leg);
    } catch (const std::ios_base::failure& e) {
      throw IoError(e.what());
    }
    r.line("exclusivity graph: " + dimacs + " (legend " + leg + ")");
  }
  if (!cnf.empty()) {
    write_file(cnf, to_cnf(inst));
    r.line("cnf: " + cnf);
  }

  if (labelled) {
    r.check<std::size_t>("contexts", g.contexts().size(), 45);
    r.check<std::string>("shared-vector contexts", std::to_string(shared) + " " + wins_string(shared_wins),
                         "9 9x5");
    r.check<std::string>("orthogonal-pair contexts", std::to_string(orth) + " " + wins_string(orth_wins),
                         "36 36x8");
    r.check<std::size_t>("winning events", g.winning_events(), 333);
    r.check<std::string>("W_C", rational_to_string(cv.value), "44/45");
    r.check<std::string>("W_C (enumeration)", rational_to_string(cv2.value), "44/45");
    r.check<std::string>("W_Q", qv.value.to_string(), "1");
  }
  return r.finish();
}

int cmd_minimal(const std::string& set, double budget_seconds, bool no_symmetry, bool expect) {
  Report r("minimal", expect);
  KSInstance inst = load(set, r);
  MinimalSearchOptions opt;
  opt.use_symmetry = !no_symmetry;
  if (budget_seconds > 0)
    opt.time_budget = std::chrono::milliseconds(static_cast<long long>(budget_seconds * 1000.0));
  MinimalSearchResult res = minimal_distribution_search(inst, opt);
  r.line("complete bases: " + std::to_string(inst.bases().size()));
  r.line("symmetry order used: " + res.symmetry_order.get_str());
  r.line("alice sets examined: " + std::to_string(res.alice_candidates) + " (skipped as non-canonical: " +
         std::to_string(res.alice_skipped) + ")");
  r.line(std::string("search complete: ") + (res.complete ? "yes" : "no (budget exhausted)"));
  std::string split = "none";
  if (res.best) {
    split = std::to_string(res.best->alice.size()) + "-" + std::to_string(res.best->bob.size());
    r.line("minimal split: " + split + " (|X|*|Y| = " + std::to_string(res.best->product()) + ")");
    r.line("alice bases: " + index_list(res.best->alice));
    r.line("bob bases: " + index_list(res.best->bob));
    r.line("optimal canonical alice sets: " + std::to_string(res.optimal_alice_sets));
  } else {
    r.line("minimal split: none (no basis distribution defeats every classical strategy)");
  }
  if (const PinnedRow* p = pinned(inst.name())) r.check("minimal split", split, p->minimal);
  int code = r.finish();
  if (!res.complete) throw BudgetExhausted("minimal search budget exhausted; the split above is an upper bound");
  return code;
}

std::vector<Ray> parse_seed(const std::string& seed) {
  std::vector<Ray> out;
  if (!seed.empty() && seed.front() != '(') {
    KSInstance inst = resolve_set(seed);
    return inst.rays();
  }
  std::stringstream ss(seed);
  std::string item;
  while (std::getline(ss, item, ';')) {
    try {
      out.push_back(parse_ray(item));
    } catch (const ParseError& e) {
      throw UsageError(std::string("--seed: ") + e.what());
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--seed: ") + e.what());
    }
  }
  if (out.empty()) throw UsageError("--seed: no rays");
  return out;
}

std::vector<GeneratorMatrix> parse_gens(const std::string& gens) {
  std::vector<GeneratorMatrix> out;
  std::stringstream ss(gens);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(GeneratorMatrix::named(item));
    } catch (const std::invalid_argument&) {
      throw UsageError("--gens: unknown generator '" + item + "' (use X and/or Z)");
    }
  }
  if (out.empty()) throw UsageError("--gens: no generators");
  return out;
}

int cmd_generate(const std::string& seed, const std::string& gens, const std::string& compare, bool expect) {
  Report r("generate", expect);
  std::vector<Ray> seed_rays = ray_set(parse_seed(seed));
  std::vector<GeneratorMatrix> g = parse_gens(gens);
  std::vector<Ray> closure = orbit_closure(seed_rays, g);
  KSInstance cmp = resolve_set(compare);
  r.line("seed: " + seed + " (" + std::to_string(seed_rays.size()) + " rays)");
  r.line("generators: " + gens);
  r.line("closure: " + std::to_string(closure.size()) + " rays");
  bool closed = same_ray_set(closure, seed_rays);
  bool equal = same_ray_set(closure, cmp.rays());
  r.line(std::string("seed closed under generators: ") + (closed ? "yes" : "no"));
  r.line("closure equals " + cmp.name() + ": " + (equal ? "yes" : "no"));
  std::vector<std::string> added;
  for (const Ray& ray : closure)
    if (!std::binary_search(seed_rays.begin(), seed_rays.end(), ray)) added.push_back(ray.to_string());
  r.line("added rays: " + (added.empty() ? std::string("-") : join(added, " ")));
  if (seed == "yuoh13" && cmp.name() == "new33") {
    if (gens == "X") r.check<std::string>("closure is the seed", closed ? "yes" : "no", "yes");
    if (gens == "Z") r.check<std::string>("closure equals new33", equal ? "yes" : "no", "yes");
  }
  return r.finish();
}

int cmd_sic(const std::string& seed, const std::string& gens, bool expect) {
  Report r("sic", expect);
  std::vector<Ray> seed_rays = parse_seed(seed);
  std::vector<GeneratorMatrix> g = parse_gens(gens);
  std::vector<Ray> orbit = orbit_closure(seed_rays, g);
  SicReport rep = is_sic_povm(orbit);
  r.line("seed: " + seed);
  r.line("generators: " + gens);
  r.line("orbit: " + std::to_string(orbit.size()) + " rays");
  for (std::size_t i = 0; i < orbit.size(); ++i) r.line("  u" + std::to_string(i) + " " + orbit[i].to_string());
  r.line("normalized overlaps |<u_i|u_j>|^2/(|u_i|^2|u_j|^2):");
  for (const auto& row : rep.overlaps) {
    std::vector<std::string> cells;
    for (const auto& c : row) cells.push_back(c.to_string());
    r.line("  " + join(cells, " "));
  }
  r.line(std::string("verdict: ") + (rep.is_sic ? "SIC-POVM" : "not a SIC-POVM (" + rep.reason + ")"));
  if (gens == "X,Z" || gens == "Z,X") {
    std::vector<Ray> s = ray_set(seed_rays);
    if (s.size() == 1 && (s[0] == parse_ray("(1,1,0)") || s[0] == parse_ray("(1,-1,0)"))) {
      r.check<std::size_t>("orbit size", orbit.size(), 9);
      r.check<std::string>("verdict", rep.is_sic ? "SIC" : "not SIC", "SIC");
    }
  }
  return r.finish();
}

int cmd_majorana(const std::string& set, const std::string& out, bool expect) {
  Report r("majorana", expect);
  KSInstance inst = load(set, r);
  try {
    export_majorana(inst, out);
  } catch (const std::ios_base::failure& e) {
    throw IoError(e.what());
  } catch (const std::runtime_error& e) {
    throw IoError(e.what());
  }
  r.line("convention: " + std::string(kMajoranaConvention));
  r.line("points: " + std::to_string(2 * inst.size()));
  std::size_t distinct = 0;
  std::vector<std::pair<SpherePoint, SpherePoint>> pairs;
  for (const Ray& ray : inst.rays()) pairs.push_back(majorana_points(ray));
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    bool dup = false;
    for (std::size_t j = 0; j < i && !dup; ++j) dup = same_point_pair(pairs[i], pairs[j], 1e-9);
    distinct += !dup;
  }
  r.line("distinct point pairs: " + std::to_string(distinct));
  r.line("csv: " + out);
  if (inst.name() == "new33") {
    r.check<std::size_t>("points", 2 * inst.size(), 66);
    r.check<std::size_t>("distinct point pairs", distinct, 33);
  }
  return r.finish();
}

int cmd_table1(const std::vector<std::string>& sets, double budget_seconds, bool skip_minimal, bool expect) {
  Report r("table1", expect);
  bool exhausted = false;
  for (const std::string& name : sets) {
    std::optional<KSInstance> inst;
    try {
      inst = builtin(name);
    } catch (const DataUnavailable&) {
      r.line(name + ": data unavailable");
      continue;
    }
    AutGroupReport aut = automorphisms(inst->graph());
    std::string split = "-";
    if (!skip_minimal) {
      MinimalSearchOptions opt;
      if (budget_seconds > 0)
        opt.time_budget = std::chrono::milliseconds(static_cast<long long>(budget_seconds * 1000.0));
      MinimalSearchResult res = minimal_distribution_search(*inst, opt);
      if (res.best) split = std::to_string(res.best->alice.size()) + "-" + std::to_string(res.best->bob.size());
      if (!res.complete) {
        split += " (incomplete)";
        exhausted = true;
      }
    }
    r.line(name + ": " + std::to_string(inst->bases().size()) + " bases, " + std::to_string(aut.orbits.size()) +
           " orbits, " + aut.order.get_str() + " automorphisms, " + split);
    if (const PinnedRow* p = pinned(name)) {
      r.check(name + " bases", inst->bases().size(), p->bases);
      r.check(name + " orbits", aut.orbits.size(), p->orbits);
      r.check(name + " order", aut.order.get_str(), std::to_string(p->order));
      if (!skip_minimal) r.check(name + " minimal split", split, p->minimal);
    }
  }
  int code = r.finish();
  if (exhausted) throw BudgetExhausted("minimal search budget exhausted for at least one row");
  return code;
}

int cmd_export(const std::string& set, const std::string& out, int conductor, bool expect) {
  Report r("export", expect);
  KSInstance inst = load(set, r);
  write_file(out, serialize_vector_set(to_vector_set(inst, conductor)));
  r.line("rays: " + std::to_string(inst.size()));
  r.line("file: " + out);
  return r.finish();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"kscheck: exact checks of qutrit Kochen-Specker sets"};
  app.require_subcommand(1);
  bool expect = false;
  bool timing = false;
  std::string data_dir_flag;
  app.add_flag("--expect-paper", expect, "Compare results with pinned values; exit 1 on mismatch");
  app.add_flag("--timing", timing, "Print wall time on stderr");
  app.add_option("--data-dir", data_dir_flag, "Directory with set data files (overrides KSKIT_DATA_DIR)");

  std::string set, cnf, alice, bob, dimacs, legend, out, seed, gens, compare = "new33";
  double budget = 3600.0;
  bool no_symmetry = false, skip_minimal = false;
  int conductor = 24;
  std::vector<std::string> table_sets = builtin_names();
  table_sets.erase(std::remove(table_sets.begin(), table_sets.end(), "yuoh13"), table_sets.end());

  auto* verify = app.add_subcommand("verify", "KS colourability verdict");
  verify->add_option("set", set, "Builtin name or data file")->required();
  verify->add_option("--cnf", cnf, "Write the DIMACS CNF encoding");

  auto* bases = app.add_subcommand("bases", "List complete bases");
  bases->add_option("set", set)->required();

  auto* symmetry = app.add_subcommand("symmetry", "Automorphism group of the orthogonality graph");
  symmetry->add_option("set", set)->required();

  auto* game = app.add_subcommand("game", "Nonlocal game built from a basis distribution");
  game->add_option("set", set)->required();
  game->add_option("--alice", alice, "Comma-separated basis indices (see 'bases')");
  game->add_option("--bob", bob, "Comma-separated basis indices (see 'bases')");
  game->add_option("--dimacs", dimacs, "Write the exclusivity graph in DIMACS format");
  game->add_option("--legend", legend, "Vertex legend for --dimacs (default <dimacs>.legend)");
  game->add_option("--cnf", cnf, "Write the KS CNF of the set");

  auto* minimal = app.add_subcommand("minimal", "Smallest |X|*|Y| perfect-strategy distribution");
  minimal->add_option("set", set)->required();
  minimal->add_option("--budget", budget, "Time budget in seconds (0 = unlimited)")->capture_default_str();
  minimal->add_flag("--no-symmetry", no_symmetry, "Disable automorphism pruning");

  auto* generate = app.add_subcommand("generate", "Orbit closure of a seed under X and/or Z");
  generate->add_option("--seed", seed, "Set name or ';'-separated ray literals")->required();
  generate->add_option("--gens", gens, "Comma-separated generators from {X,Z}")->required();
  generate->add_option("--compare", compare, "Set to compare the closure with")->capture_default_str();

  auto* sic = app.add_subcommand("sic", "SIC-POVM check of a Weyl-Heisenberg orbit");
  sic->add_option("--seed", seed, "Fiducial ray, e.g. \"(1,1,0)\"")->required();
  std::string sic_gens = "X,Z";
  sic->add_option("--gens", sic_gens, "Comma-separated generators")->capture_default_str();

  auto* majorana = app.add_subcommand("majorana", "Export Majorana points as CSV");
  majorana->add_option("set", set)->required();
  majorana->add_option("--out", out, "CSV path")->required();

  auto* table1 = app.add_subcommand("table1", "Bases, orbits, symmetry and minimal split per shipped set");
  table1->add_option("--sets", table_sets, "Sets to include")->delimiter(',');
  table1->add_option("--budget", budget, "Minimal-search budget per set in seconds (0 = unlimited)")
      ->capture_default_str();
  table1->add_flag("--skip-minimal", skip_minimal, "Leave the minimal-split column out");

  auto* exp = app.add_subcommand("export", "Write a set as a JSON data file");
  exp->add_option("set", set)->required();
  exp->add_option("--out", out, "JSON path")->required();
  exp->add_option("--conductor", conductor, "Conductor recorded in the file")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  if (!data_dir_flag.empty()) setenv("KSKIT_DATA_DIR", data_dir_flag.c_str(), 1);
  auto start = std::chrono::steady_clock::now();
  int code = kOk;
  try {
    if (*verify) code = cmd_verify(set, cnf, expect);
    else if (*bases) code = cmd_bases(set, expect);
    else if (*symmetry) code = cmd_symmetry(set, expect);
    else if (*game) code = cmd_game(set, alice, bob, dimacs, legend, cnf, expect);
    else if (*minimal) code = cmd_minimal(set, budget, no_symmetry, expect);
    else if (*generate) code = cmd_generate(seed, gens, compare, expect);
    else if (*sic) code = cmd_sic(seed, sic_gens, expect);
    else if (*majorana) code = cmd_majorana(set, out, expect);
    else if (*table1) code = cmd_table1(table_sets, budget, skip_minimal, expect);
    else if (*exp) code = cmd_export(set, out, conductor, expect);
  } catch (const UsageError& e) {
    std::cerr << "kscheck: " << e.what() << '\n';
    return kUsage;
  } catch (const UnknownSet& e) {
    std::cerr << "kscheck: " << e.what() << '\n';
    return kData;
  } catch (const DataUnavailable& e) {
    std::cerr << "kscheck: " << e.what() << '\n';
    return kData;
  } catch (const ParseError& e) {
    std::cerr << "kscheck: " << e.what() << '\n';
    return kData;
  } catch (const BudgetExhausted& e) {
    std::cerr << "kscheck: " << e.what() << '\n';
    return kTimeout;
  } catch (const IoError& e) {
    std::cerr << "kscheck: " << e.what() << '\n';
    return kIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "kscheck: " << e.what() << '\n';
    return kUsage;
  }
  if (timing) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    std::cerr << "time: " << ms.count() << " ms\n";
  }
  return code;
}
