// Minimal |X|·|Y| basis distribution.
//
// For a fixed Alice set X, an Alice strategy s (one ray per basis) is
// beaten by Bob's basis y exactly when every ray of y is orthogonal to some
// ray of s; call the set of such y the killers K(s). The game (X, Y) has no
// perfect classical strategy iff Y meets K(s) for every s, so the best Y
// for X is a minimum hitting set of {K(s)}. Alice sets are enumerated up to
// the automorphisms of the orthogonality graph acting on the bases.
#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <stdexcept>

#include "kskit/game.hpp"

namespace kskit {
namespace {

using Mask = std::uint64_t;
using Clock = std::chrono::steady_clock;

// Sorted-index-list lexicographic order for masks of equal popcount.
bool lex_less(Mask a, Mask b) {
  const Mask diff = a ^ b;
  if (diff == 0) return false;
  return (a & (diff & (~diff + 1))) != 0;
}

std::vector<std::size_t> indices_of(Mask m) {
  std::vector<std::size_t> out;
  while (m != 0) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

// All elements of the group generated by `gens`, or empty if it exceeds `cap`.
std::vector<Permutation> group_elements(std::size_t n, const std::vector<Permutation>& gens, std::size_t cap) {
  Permutation id(n);
  for (std::size_t i = 0; i < n; ++i) id[i] = i;
  std::set<Permutation> seen{id};
  std::vector<Permutation> queue{id};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& g : gens) {
      Permutation next(n);
      for (std::size_t i = 0; i < n; ++i) next[i] = g[queue[head][i]];
      if (seen.insert(next).second) {
        if (seen.size() > cap) return {};
        queue.push_back(std::move(next));
      }
    }
  }
  return queue;
}

class Combinations {
 public:
  Combinations(std::size_t n, std::size_t k) : n_(n), idx_(k) {
    for (std::size_t i = 0; i < k; ++i) idx_[i] = i;
    valid_ = k <= n;
  }
  bool valid() const { return valid_; }
  Mask mask() const {
    Mask m = 0;
    for (auto i : idx_) m |= Mask{1} << i;
    return m;
  }
  void next() {
    const std::size_t k = idx_.size();
    std::size_t i = k;
    while (i > 0 && idx_[i - 1] == n_ - k + (i - 1)) --i;
    if (i == 0) {
      valid_ = false;
      return;
    }
    ++idx_[i - 1];
    for (std::size_t j = i; j < k; ++j) idx_[j] = idx_[j - 1] + 1;
  }

 private:
  std::size_t n_;
  std::vector<std::size_t> idx_;
  bool valid_ = true;
};

class MinimalSearch {
 public:
  MinimalSearch(const KSInstance& inst, const MinimalSearchOptions& options)
      : inst_(inst), options_(options), m_(inst.bases().size()) {
    if (m_ > 64) throw std::invalid_argument("minimal_distribution_search supports at most 64 complete bases");
    if (options_.time_budget) deadline_ = Clock::now() + *options_.time_budget;
    if (options_.use_symmetry && m_ > 0) build_symmetry();
  }

  MinimalSearchResult run() {
    for (std::size_t p = 1; p <= m_; ++p) {
      if (best_ && p * p > best_->product()) break;
      for (Combinations c(m_, p); c.valid(); c.next()) {
        if (expired()) {
          result_.complete = false;
          return finish();
        }
        const Mask x = c.mask();
        if (!canonical(x)) {
          ++result_.alice_skipped;
          continue;
        }
        ++result_.alice_candidates;
        consider(x, p);
      }
    }
    return finish();
  }

 private:
  void build_symmetry() {
    const auto aut = automorphisms(inst_.graph());
    result_.symmetry_order = aut.order;
    const auto elements = group_elements(inst_.size(), aut.generators, 200000);
    std::map<Triangle, std::size_t> index;
    for (std::size_t b = 0; b < m_; ++b) index[inst_.bases()[b]] = b;
    for (const auto& g : elements) {
      std::vector<std::size_t> on_bases(m_);
      for (std::size_t b = 0; b < m_; ++b) {
        Triangle t;
        for (std::size_t k = 0; k < 3; ++k) t[k] = g[inst_.bases()[b][k]];
        std::sort(t.begin(), t.end());
        on_bases[b] = index.at(t);
      }
      base_perms_.push_back(std::move(on_bases));
    }
  }

  bool canonical(Mask x) const {
    for (const auto& perm : base_perms_) {
      Mask image = 0;
      for (Mask m = x; m != 0; m &= m - 1) image |= Mask{1} << perm[static_cast<std::size_t>(std::countr_zero(m))];
      if (lex_less(image, x)) return false;
    }
    return true;
  }

  bool expired() {
    if (!deadline_) return false;
    return Clock::now() > *deadline_;
  }

  // Killer masks over all Alice strategies for X; nullopt if some strategy has none.
  std::optional<std::vector<Mask>> killers(Mask x) const {
    const auto alice = indices_of(x);
    std::vector<Mask> out;
    std::vector<std::size_t> choice(alice.size(), 0);
    const std::size_t n = inst_.size();
    while (true) {
      Bitset covered(n);
      for (std::size_t i = 0; i < alice.size(); ++i) covered |= inst_.graph().neighbors(inst_.bases()[alice[i]][choice[i]]);
      Mask k = 0;
      for (std::size_t b = 0; b < m_; ++b) {
        const auto& t = inst_.bases()[b];
        if (covered.test(t[0]) && covered.test(t[1]) && covered.test(t[2])) k |= Mask{1} << b;
      }
      if (k == 0) return std::nullopt;
      out.push_back(k);
      std::size_t i = 0;
      while (i < choice.size() && ++choice[i] == 3) choice[i++] = 0;
      if (i == choice.size()) break;
    }
    std::sort(out.begin(), out.end(), [](Mask a, Mask b) {
      const int pa = std::popcount(a);
      const int pb = std::popcount(b);
      return pa != pb ? pa < pb : a < b;
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    // drop supersets: hitting the subset already hits them
    std::vector<Mask> minimal;
    for (Mask k : out) {
      bool redundant = false;
      for (Mask s : minimal) {
        if ((s & k) == s) {
          redundant = true;
          break;
        }
      }
      if (!redundant) minimal.push_back(k);
    }
    return minimal;
  }

  void consider(Mask x, std::size_t p) {
    const std::size_t q_limit = best_ ? best_->product() / p : m_;
    if (q_limit < p) return;
    const auto k = killers(x);
    if (!k) return;
    for (std::size_t q = p; q <= std::min(q_limit, m_); ++q) {
      for (Combinations c(m_, q); c.valid(); c.next()) {
        const Mask y = c.mask();
        bool hits = true;
        for (Mask s : *k) {
          if ((s & y) == 0) {
            hits = false;
            break;
          }
        }
        if (!hits) continue;
        record(x, y);
        return;
      }
    }
  }

  void record(Mask x, Mask y) {
    const std::size_t product = static_cast<std::size_t>(std::popcount(x)) * static_cast<std::size_t>(std::popcount(y));
    if (!best_ || product < best_->product()) {
      best_ = Distribution{indices_of(x), indices_of(y)};
      result_.optimal_alice_sets = 1;
    } else if (product == best_->product()) {
      ++result_.optimal_alice_sets;
    }
  }

  MinimalSearchResult finish() {
    result_.best = best_;
    return result_;
  }

  const KSInstance& inst_;
  MinimalSearchOptions options_;
  std::size_t m_;
  std::optional<Clock::time_point> deadline_;
  std::vector<std::vector<std::size_t>> base_perms_;
  std::optional<Distribution> best_;
  MinimalSearchResult result_;
};

}  // namespace

MinimalSearchResult minimal_distribution_search(const KSInstance& inst, const MinimalSearchOptions& options) {
  return MinimalSearch(inst, options).run();
}

}  // namespace kskit
