#include "kskit/colorability.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace kskit {

KSInstance::KSInstance(std::string name, std::span<const Ray> rays, std::string provenance,
                       std::vector<std::string> notes)
    : name_(std::move(name)),
      provenance_(std::move(provenance)),
      notes_(std::move(notes)),
      graph_(build_graph(rays)),
      bases_(complete_bases(graph_.graph())) {}

std::size_t Assignment::ones() const {
  return static_cast<std::size_t>(std::count(values.begin(), values.end(), std::uint8_t{1}));
}

std::string AssignmentViolation::describe(const KSInstance& inst) const {
  const auto& r = inst.rays();
  if (const auto* e = std::get_if<EdgeViolation>(&what)) {
    return "edge constraint: orthogonal rays " + r[e->u].to_string() + " and " + r[e->v].to_string() +
           " are both assigned 1";
  }
  const auto& b = std::get<BasisViolation>(what);
  return "basis constraint: {" + r[b.basis[0]].to_string() + "," + r[b.basis[1]].to_string() + "," +
         r[b.basis[2]].to_string() + "} sums to " + std::to_string(b.sum) + ", expected 1";
}

std::optional<AssignmentViolation> verify_assignment(const KSInstance& inst, const Assignment& f) {
  if (f.values.size() != inst.size()) throw std::invalid_argument("assignment is not total on the instance");
  for (auto v : f.values) {
    if (v > 1) throw std::invalid_argument("assignment values must be 0 or 1");
  }
  for (auto [u, v] : inst.graph().edges()) {
    if (f.values[u] == 1 && f.values[v] == 1) return AssignmentViolation{EdgeViolation{u, v}};
  }
  for (const auto& b : inst.bases()) {
    const std::size_t sum = std::size_t{f.values[b[0]]} + f.values[b[1]] + f.values[b[2]];
    if (sum != 1) return AssignmentViolation{BasisViolation{b, sum}};
  }
  return std::nullopt;
}

namespace {

constexpr std::int8_t kUnset = -1;

class Solver {
 public:
  explicit Solver(const KSInstance& inst)
      : inst_(inst), n_(inst.size()), value_(n_, kUnset), bases_of_(n_), neighbors_(n_) {
    for (std::size_t b = 0; b < inst.bases().size(); ++b) {
      for (std::size_t v : inst.bases()[b]) bases_of_[v].push_back(b);
    }
    for (std::size_t v = 0; v < n_; ++v) neighbors_[v] = inst.graph().neighbors(v).indices();
  }

  // Calls visit(assignment) for each KS assignment; visit returns false to stop.
  template <class Visit>
  void search(bool enumerate_free, Visit&& visit) {
    stop_ = false;
    recurse(enumerate_free, visit);
  }

  SearchStats stats() const { return stats_; }

 private:
  template <class Visit>
  void recurse(bool enumerate_free, Visit& visit) {
    if (stop_) return;
    ++stats_.nodes;
    // pick the open basis with the fewest unset members
    std::optional<std::size_t> pick;
    std::size_t best_free = 4;
    for (std::size_t b = 0; b < inst_.bases().size(); ++b) {
      const auto& t = inst_.bases()[b];
      if (value_[t[0]] == 1 || value_[t[1]] == 1 || value_[t[2]] == 1) continue;
      std::size_t free = 0;
      for (std::size_t v : t) free += value_[v] == kUnset ? 1 : 0;
      if (free < best_free) {
        best_free = free;
        pick = b;
      }
    }
    if (pick) {
      for (std::size_t v : inst_.bases()[*pick]) {
        if (value_[v] != kUnset) continue;
        const std::size_t mark = trail_.size();
        if (assign(v, 1)) recurse(enumerate_free, visit);
        undo(mark);
        if (stop_) return;
      }
      return;
    }

    // every basis holds its 1; what is left touches edge constraints only
    const auto free = std::find(value_.begin(), value_.end(), kUnset);
    if (free == value_.end() || !enumerate_free) {
      Assignment a;
      a.values.reserve(n_);
      for (auto x : value_) a.values.push_back(x == 1 ? 1 : 0);
      if (!visit(std::move(a))) stop_ = true;
      return;
    }
    const auto v = static_cast<std::size_t>(free - value_.begin());
    for (std::int8_t x : {0, 1}) {
      const std::size_t mark = trail_.size();
      if (assign(v, x)) recurse(enumerate_free, visit);
      undo(mark);
      if (stop_) return;
    }
  }

  // Sets v = x and propagates; false on conflict (caller undoes to its mark).
  bool assign(std::size_t v0, std::int8_t x0) {
    std::vector<std::pair<std::size_t, std::int8_t>> queue{{v0, x0}};
    while (!queue.empty()) {
      auto [v, x] = queue.back();
      queue.pop_back();
      if (value_[v] != kUnset) {
        if (value_[v] != x) {
          ++stats_.conflicts;
          return false;
        }
        continue;
      }
      value_[v] = x;
      trail_.push_back(v);
      if (x == 1) {
        for (std::size_t u : neighbors_[v]) queue.emplace_back(u, 0);
        continue;
      }
      for (std::size_t b : bases_of_[v]) {
        const auto& t = inst_.bases()[b];
        std::size_t zeros = 0;
        std::optional<std::size_t> open;
        bool has_one = false;
        for (std::size_t u : t) {
          if (value_[u] == 0) ++zeros;
          if (value_[u] == 1) has_one = true;
          if (value_[u] == kUnset) open = u;
        }
        if (has_one) continue;
        if (zeros == 3) {
          ++stats_.conflicts;
          return false;
        }
        if (zeros == 2) queue.emplace_back(*open, 1);
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      value_[trail_.back()] = kUnset;
      trail_.pop_back();
    }
  }

  const KSInstance& inst_;
  std::size_t n_;
  std::vector<std::int8_t> value_;
  std::vector<std::vector<std::size_t>> bases_of_;
  std::vector<std::vector<std::size_t>> neighbors_;
  std::vector<std::size_t> trail_;
  SearchStats stats_;
  bool stop_ = false;
};

}  // namespace

ColoringResult find_ks_assignment(const KSInstance& inst) {
  Solver solver(inst);
  ColoringResult result;
  solver.search(false, [&](Assignment a) {
    result.assignment = std::move(a);
    return false;
  });
  result.stats = solver.stats();
  return result;
}

Enumeration enumerate_ks_assignments(const KSInstance& inst, std::size_t cap) {
  Solver solver(inst);
  Enumeration out;
  solver.search(true, [&](Assignment a) {
    if (out.assignments.size() == cap) {
      out.truncated = true;
      return false;
    }
    out.assignments.push_back(std::move(a));
    return true;
  });
  out.stats = solver.stats();
  return out;
}

std::string to_cnf(const KSInstance& inst) {
  const auto edges = inst.graph().edges();
  std::ostringstream out;
  out << "c KS constraints for " << inst.name() << ": variable i is ray i assigned 1\n";
  for (std::size_t i = 0; i < inst.size(); ++i) out << "c " << i + 1 << ' ' << inst.rays()[i].to_string() << '\n';
  out << "p cnf " << inst.size() << ' ' << edges.size() + inst.bases().size() << '\n';
  for (auto [u, v] : edges) out << '-' << u + 1 << " -" << v + 1 << " 0\n";
  for (const auto& b : inst.bases()) out << b[0] + 1 << ' ' << b[1] + 1 << ' ' << b[2] + 1 << " 0\n";
  return out.str();
}

}  // namespace kskit
