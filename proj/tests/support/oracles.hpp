// Independent brute-force oracles used by the unit tests and the acceptance
// binary. Nothing here calls the search code it is meant to check.
#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "kskit/colorability.hpp"
#include "kskit/game.hpp"
#include "kskit/graph.hpp"

namespace oracle {

using kskit::Permutation;
using kskit::SimpleGraph;

inline SimpleGraph random_graph(std::uint64_t seed, std::size_t n, double p) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  SimpleGraph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

inline std::vector<std::uint32_t> adjacency_masks(const SimpleGraph& g) {
  std::vector<std::uint32_t> adj(g.order(), 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= 1U << v;
    adj[v] |= 1U << u;
  }
  return adj;
}

/// Largest independent set size by subset DP over all 2^n subsets (n <= 24).
inline std::size_t brute_alpha(const SimpleGraph& g) {
  const std::size_t n = g.order();
  auto adj = adjacency_masks(g);
  std::vector<std::uint8_t> indep(std::size_t{1} << n, 0);
  indep[0] = 1;
  std::size_t best = 0;
  for (std::uint32_t s = 1; s < (1U << n); ++s) {
    unsigned v = static_cast<unsigned>(__builtin_ctz(s));
    std::uint32_t rest = s & (s - 1);
    indep[s] = indep[rest] && (adj[v] & rest) == 0;
    if (indep[s]) best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcount(s)));
  }
  return best;
}

/// Number of KS assignments by checking all 2^n valuations (n <= 24).
inline std::size_t brute_ks_count(const kskit::KSInstance& inst) {
  const std::size_t n = inst.size();
  const auto edges = inst.graph().edges();
  std::size_t count = 0;
  for (std::uint32_t f = 0; f < (1U << n); ++f) {
    bool ok = true;
    for (auto [u, v] : edges)
      if (((f >> u) & 1U) && ((f >> v) & 1U)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    for (const auto& t : inst.bases()) {
      unsigned s = ((f >> t[0]) & 1U) + ((f >> t[1]) & 1U) + ((f >> t[2]) & 1U);
      if (s != 1) {
        ok = false;
        break;
      }
    }
    count += ok;
  }
  return count;
}

/// Max contexts won over all 3^|X| * 3^|Y| deterministic strategies.
inline std::size_t brute_contexts_won(const kskit::Game& g) {
  const std::size_t nx = g.alice().size(), ny = g.bob().size();
  std::size_t total_a = 1, total_b = 1;
  for (std::size_t i = 0; i < nx; ++i) total_a *= 3;
  for (std::size_t i = 0; i < ny; ++i) total_b *= 3;
  std::size_t best = 0;
  std::vector<std::size_t> a(nx), b(ny);
  for (std::size_t ca = 0; ca < total_a; ++ca) {
    for (std::size_t i = 0, c = ca; i < nx; ++i, c /= 3) a[i] = c % 3;
    for (std::size_t cb = 0; cb < total_b; ++cb) {
      for (std::size_t j = 0, c = cb; j < ny; ++j, c /= 3) b[j] = c % 3;
      std::size_t won = 0;
      for (std::size_t x = 0; x < nx; ++x)
        for (std::size_t y = 0; y < ny; ++y) {
          const auto& ra = g.alice()[x][a[x]];
          const auto& rb = g.bob()[y][b[y]];
          won += !kskit::is_orthogonal(ra, rb);
        }
      best = std::max(best, won);
    }
  }
  return best;
}

inline Permutation compose(const Permutation& p, const Permutation& q) {
  // (p o q)(i) = p[q[i]]
  Permutation r(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) r[i] = p[q[i]];
  return r;
}

/// Every element of the group generated by `gens`, by breadth-first closure.
inline std::set<Permutation> group_closure(std::size_t n, const std::vector<Permutation>& gens) {
  Permutation id(n);
  for (std::size_t i = 0; i < n; ++i) id[i] = i;
  std::set<Permutation> seen{id};
  std::vector<Permutation> frontier{id};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& p : frontier)
      for (const auto& g : gens) {
        Permutation q = compose(g, p);
        if (seen.insert(q).second) next.push_back(std::move(q));
      }
    frontier = std::move(next);
  }
  return seen;
}

/// Orbits as the set of images of each vertex under every group element.
inline std::set<std::set<std::size_t>> orbits_from_elements(std::size_t n, const std::set<Permutation>& group) {
  std::set<std::set<std::size_t>> orbits;
  for (std::size_t v = 0; v < n; ++v) {
    std::set<std::size_t> o;
    for (const auto& p : group) o.insert(p[v]);
    orbits.insert(o);
  }
  return orbits;
}

/// All automorphisms by trying every permutation (n <= 8).
inline std::vector<Permutation> brute_automorphisms(const SimpleGraph& g) {
  const std::size_t n = g.order();
  Permutation p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  std::vector<Permutation> out;
  do {
    bool ok = true;
    for (std::size_t u = 0; u < n && ok; ++u)
      for (std::size_t v = u + 1; v < n && ok; ++v) ok = g.adjacent(u, v) == g.adjacent(p[u], p[v]);
    if (ok) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// ---------------------------------------------------------------------------
// A small DPLL solver over DIMACS CNF text: unit propagation plus
// branching on the first unassigned variable.

struct Cnf {
  int variables = 0;
  std::vector<std::vector<int>> clauses;
};

inline Cnf parse_cnf(const std::string& text) {
  Cnf cnf;
  std::istringstream in(text);
  std::string line;
  std::size_t declared = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream ls(line);
    if (line[0] == 'p') {
      std::string p, fmt;
      ls >> p >> fmt >> cnf.variables >> declared;
      continue;
    }
    std::vector<int> clause;
    int lit = 0;
    while (ls >> lit && lit != 0) clause.push_back(lit);
    cnf.clauses.push_back(clause);
  }
  if (cnf.clauses.size() != declared) throw std::runtime_error("clause count differs from header");
  return cnf;
}

class Dpll {
 public:
  explicit Dpll(const Cnf& cnf) : cnf_(cnf), value_(static_cast<std::size_t>(cnf.variables) + 1, 0) {}

  /// A satisfying assignment (value[v] in {-1, +1}) or nullopt.
  std::optional<std::vector<int>> solve() {
    if (!search()) return std::nullopt;
    return value_;
  }

 private:
  bool propagate(std::vector<int>& trail) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& clause : cnf_.clauses) {
        int unassigned = 0, last = 0;
        bool sat = false;
        for (int lit : clause) {
          int v = value_[static_cast<std::size_t>(std::abs(lit))];
          if (v == 0) {
            ++unassigned;
            last = lit;
          } else if ((v > 0) == (lit > 0)) {
            sat = true;
            break;
          }
        }
        if (sat) continue;
        if (unassigned == 0) return false;
        if (unassigned == 1) {
          value_[static_cast<std::size_t>(std::abs(last))] = last > 0 ? 1 : -1;
          trail.push_back(std::abs(last));
          changed = true;
        }
      }
    }
    return true;
  }

  bool search() {
    std::vector<int> trail;
    if (!propagate(trail)) {
      for (int v : trail) value_[static_cast<std::size_t>(v)] = 0;
      return false;
    }
    int branch = 0;
    for (int v = 1; v <= cnf_.variables; ++v)
      if (value_[static_cast<std::size_t>(v)] == 0) {
        branch = v;
        break;
      }
    if (branch == 0) return true;
    for (int val : {1, -1}) {
      value_[static_cast<std::size_t>(branch)] = val;
      if (search()) return true;
    }
    value_[static_cast<std::size_t>(branch)] = 0;
    for (int v : trail) value_[static_cast<std::size_t>(v)] = 0;
    return false;
  }

  const Cnf& cnf_;
  std::vector<int> value_;
};

}  // namespace oracle
