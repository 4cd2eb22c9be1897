// Individualization-refinement automorphism search.
//
// A first path down the search tree individualizes base vertices
// v1..vk until the equitable partition is discrete (leaf L0). Processing
// levels deepest first, every vertex w in the target cell of level i is
// either already in the orbit of v_i under the generators found so far, or
// its subtree is searched for a leaf L with L0 -> L an automorphism. The
// group order is the product of the orbit lengths |v_i^G(i-1)|.
#include <algorithm>
#include <numeric>

#include "kskit/graph.hpp"

namespace kskit {
namespace {

using Cell = std::vector<std::size_t>;
using Partition = std::vector<Cell>;

// Cell sizes followed by the quotient matrix: for each ordered pair of
// cells, the number of neighbours a vertex of the first has in the second
// (well defined once the partition is equitable).
using Invariant = std::vector<std::size_t>;

class Refiner {
 public:
  explicit Refiner(const SimpleGraph& g) : g_(g) {}

  void refine(Partition& cells) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t s = 0; s < cells.size(); ++s) {
        Bitset splitter(g_.order());
        for (std::size_t v : cells[s]) splitter.set(v);
        Partition next;
        next.reserve(cells.size());
        for (auto& cell : cells) {
          if (cell.size() == 1) {
            next.push_back(std::move(cell));
            continue;
          }
          std::vector<std::pair<std::size_t, std::size_t>> keyed;
          keyed.reserve(cell.size());
          for (std::size_t v : cell) keyed.emplace_back(g_.neighbors(v).count_and(splitter), v);
          std::sort(keyed.begin(), keyed.end());
          Cell part{keyed.front().second};
          for (std::size_t i = 1; i < keyed.size(); ++i) {
            if (keyed[i].first != keyed[i - 1].first) {
              next.push_back(std::move(part));
              part.clear();
              changed = true;
            }
            part.push_back(keyed[i].second);
          }
          next.push_back(std::move(part));
        }
        cells = std::move(next);
      }
    }
  }

  Partition individualize(const Partition& cells, std::size_t v) const {
    Partition out;
    out.reserve(cells.size() + 1);
    for (const auto& cell : cells) {
      if (std::find(cell.begin(), cell.end(), v) == cell.end()) {
        out.push_back(cell);
        continue;
      }
      out.push_back({v});
      Cell rest;
      for (std::size_t u : cell) {
        if (u != v) rest.push_back(u);
      }
      out.push_back(std::move(rest));
    }
    refine(out);
    return out;
  }

  Invariant invariant(const Partition& cells) const {
    Invariant inv;
    inv.reserve(cells.size() * (cells.size() + 1));
    for (const auto& c : cells) inv.push_back(c.size());
    std::vector<Bitset> members;
    members.reserve(cells.size());
    for (const auto& c : cells) {
      Bitset b(g_.order());
      for (std::size_t v : c) b.set(v);
      members.push_back(std::move(b));
    }
    for (const auto& c : cells) {
      for (const auto& m : members) inv.push_back(g_.neighbors(c.front()).count_and(m));
    }
    return inv;
  }

 private:
  const SimpleGraph& g_;
};

std::size_t first_nontrivial(const Partition& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (cells[i].size() > 1) return i;
  }
  return cells.size();
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

class AutomorphismSearch {
 public:
  explicit AutomorphismSearch(const SimpleGraph& g) : g_(g), refiner_(g) {}

  AutGroupReport run() {
    const std::size_t n = g_.order();
    AutGroupReport report;
    if (n == 0) return report;

    Partition cells{Cell(n)};
    std::iota(cells.front().begin(), cells.front().end(), 0);
    refiner_.refine(cells);
    path_.push_back(cells);
    path_inv_.push_back(refiner_.invariant(cells));
    while (true) {
      const std::size_t t = first_nontrivial(path_.back());
      if (t == path_.back().size()) break;
      const std::size_t v = path_.back()[t].front();
      base_.push_back(v);
      path_.push_back(refiner_.individualize(path_.back(), v));
      path_inv_.push_back(refiner_.invariant(path_.back()));
    }
    leaf0_ = leaf_order(path_.back());

    std::vector<std::size_t> orbit_sizes(base_.size(), 1);
    for (std::size_t level = base_.size(); level-- > 0;) {
      const Partition& parent = path_[level];
      const Cell& target = parent[first_nontrivial(parent)];
      const std::size_t v = base_[level];
      for (std::size_t w : target) {
        if (w == v || same_orbit(v, w)) continue;
        if (auto gamma = search(refiner_.individualize(parent, w), level + 1)) generators_.push_back(std::move(*gamma));
      }
      std::size_t len = 0;
      for (std::size_t w : target) len += same_orbit(v, w) ? 1 : 0;
      orbit_sizes[level] = len;
    }

    for (std::size_t s : orbit_sizes) report.order *= static_cast<unsigned long>(s);
    report.generators = generators_;
    report.orbits = orbits_of(n, generators_);
    report.search_nodes = nodes_;
    return report;
  }

 private:
  static Permutation leaf_order(const Partition& cells) {
    Permutation out;
    out.reserve(cells.size());
    for (const auto& c : cells) out.push_back(c.front());
    return out;
  }

  bool same_orbit(std::size_t a, std::size_t b) const {
    UnionFind uf(g_.order());
    for (const auto& p : generators_) {
      for (std::size_t i = 0; i < p.size(); ++i) uf.unite(i, p[i]);
    }
    return uf.find(a) == uf.find(b);
  }

  std::optional<Permutation> search(const Partition& cells, std::size_t depth) {
    ++nodes_;
    if (refiner_.invariant(cells) != path_inv_[depth]) return std::nullopt;
    const std::size_t t = first_nontrivial(cells);
    if (t == cells.size()) {
      const Permutation leaf = leaf_order(cells);
      Permutation gamma(g_.order());
      for (std::size_t i = 0; i < leaf.size(); ++i) gamma[leaf0_[i]] = leaf[i];
      if (is_automorphism(g_, gamma)) return gamma;
      return std::nullopt;
    }
    for (std::size_t u : cells[t]) {
      if (auto gamma = search(refiner_.individualize(cells, u), depth + 1)) return gamma;
    }
    return std::nullopt;
  }

  const SimpleGraph& g_;
  Refiner refiner_;
  std::vector<Partition> path_;
  std::vector<Invariant> path_inv_;
  std::vector<std::size_t> base_;
  Permutation leaf0_;
  std::vector<Permutation> generators_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

bool is_automorphism(const SimpleGraph& g, const Permutation& perm) {
  const std::size_t n = g.order();
  if (perm.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (std::size_t p : perm) {
    if (p >= n || seen[p]) return false;
    seen[p] = true;
  }
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (g.adjacent(u, v) != g.adjacent(perm[u], perm[v])) return false;
    }
  }
  return true;
}

std::vector<std::vector<std::size_t>> orbits_of(std::size_t n, std::span<const Permutation> generators) {
  UnionFind uf(n);
  for (const auto& p : generators) {
    for (std::size_t i = 0; i < n; ++i) uf.unite(i, p[i]);
  }
  std::vector<std::vector<std::size_t>> by_root(n);
  for (std::size_t i = 0; i < n; ++i) by_root[uf.find(i)].push_back(i);
  std::vector<std::vector<std::size_t>> out;
  for (auto& o : by_root) {
    if (!o.empty()) out.push_back(std::move(o));
  }
  return out;  // roots are minimal members, so already sorted by smallest member
}

AutGroupReport automorphisms(const SimpleGraph& g) { return AutomorphismSearch(g).run(); }

}  // namespace kskit
