#include <algorithm>
#include <numeric>

#include "kskit/graph.hpp"

namespace kskit {
namespace {

// Maximum clique in `h` (the complement of the input graph), vertices
// renumbered so that bitset order equals branching order.
class CliqueSearch {
 public:
  explicit CliqueSearch(std::vector<Bitset> h) : h_(std::move(h)) {}

  void run() {
    Bitset all(h_.size());
    all.set_all();
    std::vector<std::size_t> current;
    expand(current, all);
  }

  const std::vector<std::size_t>& best() const { return best_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  void expand(std::vector<std::size_t>& current, Bitset candidates) {
    ++nodes_;
    // Greedy colouring: each colour class is independent in h, so a clique
    // takes at most one vertex per class.
    order_scratch_.clear();
    Bitset uncolored = candidates;
    std::size_t color = 0;
    while (uncolored.any()) {
      ++color;
      Bitset q = uncolored;
      for (std::size_t v = q.first(); v != Bitset::npos; v = q.next(v + 1)) {
        uncolored.reset(v);
        q.subtract(h_[v]);
        order_scratch_.emplace_back(v, color);
      }
    }
    const auto order = order_scratch_;
    for (std::size_t idx = order.size(); idx-- > 0;) {
      const auto [v, bound] = order[idx];
      if (current.size() + bound <= best_.size()) return;
      current.push_back(v);
      Bitset next = candidates & h_[v];
      if (next.none()) {
        if (current.size() > best_.size()) best_ = current;
      } else {
        expand(current, std::move(next));
      }
      current.pop_back();
      candidates.reset(v);
    }
  }

  std::vector<Bitset> h_;
  std::vector<std::size_t> best_;
  std::vector<std::pair<std::size_t, std::size_t>> order_scratch_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

IndependentSet independence_number(const SimpleGraph& g) {
  const std::size_t n = g.order();
  if (n == 0) return {};

  // Branch on low-degree vertices of g first (high degree in the complement),
  // ties broken by index.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::size_t> deg(n);
  for (std::size_t v = 0; v < n; ++v) deg[v] = g.degree(v);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return deg[a] < deg[b]; });
  std::vector<std::size_t> position(n);
  for (std::size_t i = 0; i < n; ++i) position[order[i]] = i;

  std::vector<Bitset> h(n, Bitset(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && !g.adjacent(order[i], order[j])) h[i].set(j);
    }
  }
  CliqueSearch search(std::move(h));
  search.run();

  IndependentSet out;
  out.size = search.best().size();
  for (std::size_t v : search.best()) out.witness.push_back(order[v]);
  std::sort(out.witness.begin(), out.witness.end());
  out.nodes = search.nodes();
  return out;
}

}  // namespace kskit
