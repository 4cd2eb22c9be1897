// Bipartite nonlocal games built from basis distributions.
//
// Alice receives a basis x, Bob a basis y (uniformly), each outputs one ray
// of their basis, and they win iff the two rays are not orthogonal.
#pragma once

#include <array>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "kskit/colorability.hpp"
#include "kskit/graph.hpp"
#include "kskit/numfield.hpp"
#include "kskit/rays.hpp"

namespace kskit {

enum class ContextType {
  shared_vector,    // the two bases have a ray in common
  orthogonal_pair,  // no common ray, exactly one orthogonal cross pair
  other,
};

std::string_view context_type_name(ContextType t) noexcept;

struct Context {
  std::size_t x = 0;
  std::size_t y = 0;
  ContextType type = ContextType::other;
  std::size_t orthogonal_pairs = 0;  // cross pairs (a, b) with a ⊥ b
  std::array<std::array<bool, 3>, 3> win{};  // win[a][b]
  std::size_t wins() const;
};

class Game {
 public:
  Game(std::vector<Basis> alice, std::vector<Basis> bob);

  const std::vector<Basis>& alice() const noexcept { return alice_; }
  const std::vector<Basis>& bob() const noexcept { return bob_; }
  /// x-major: contexts()[x * bob().size() + y].
  const std::vector<Context>& contexts() const noexcept { return contexts_; }
  const Context& context(std::size_t x, std::size_t y) const { return contexts_[x * bob_.size() + y]; }
  /// Uniform input distribution pi(x, y) = 1 / (|X| |Y|).
  Rational input_weight() const;
  std::size_t winning_events() const;

 private:
  std::vector<Basis> alice_;
  std::vector<Basis> bob_;
  std::vector<Context> contexts_;
};

/// Throws std::invalid_argument when either side is empty.
Game build_game(std::vector<Basis> alice, std::vector<Basis> bob);

/// Deterministic strategy: output index (0..2) per input.
struct Strategy {
  std::vector<std::size_t> alice;
  std::vector<std::size_t> bob;
};

std::size_t contexts_won(const Game& g, const Strategy& s);

struct Event {
  std::size_t x = 0, y = 0, a = 0, b = 0;
};

/// Winning events in (x, y, a, b) lexicographic order.
std::vector<Event> winning_events(const Game& g);
/// Vertices = winning events; edges join events that share an input of one
/// party but give that party different outputs.
SimpleGraph exclusivity_graph(const Game& g);

struct ClassicalValue {
  Rational value;
  std::size_t contexts_won = 0;
  Strategy witness;
  std::uint64_t search_nodes = 0;
};

/// alpha(exclusivity graph) / #contexts, with the strategy read off the witness.
ClassicalValue classical_value(const Game& g);
/// Enumerates Alice's 3^|X| strategies; Bob's best reply is chosen per basis.
ClassicalValue classical_value_by_alice_strategies(const Game& g);

enum class BobMeasurement {
  conjugated,  // Bob projects onto the complex conjugates of his basis rays
  as_given,    // Bob projects onto his basis rays unchanged
};

struct QuantumValue {
  CycNumber value;
  /// probability[context][a][b] on the maximally entangled qutrit pair.
  std::vector<std::array<std::array<CycNumber, 3>, 3>> probability;
};

/// Shared state (|00>+|11>+|22>)/√3, Alice measuring x, Bob measuring y per
/// `convention`. P(a,b) = |<a|b>|² / (3‖a‖²‖b‖²) for the conjugated
/// convention, |sum_j a_j b_j|² / (3‖a‖²‖b‖²) for the literal one.
QuantumValue quantum_value_maxent(const Game& g, BobMeasurement convention = BobMeasurement::conjugated);

/// Writes the DIMACS exclusivity graph and a legend (one line per vertex:
/// "index x y a b", 1-based index).
void export_exclusivity_graph(const Game& g, const std::filesystem::path& dimacs_path,
                              const std::filesystem::path& legend_path);

// ---------------------------------------------------------------------------
// Minimal basis distribution.

struct Distribution {
  std::vector<std::size_t> alice;  // indices into KSInstance::bases()
  std::vector<std::size_t> bob;
  std::size_t product() const { return alice.size() * bob.size(); }
};

struct MinimalSearchOptions {
  std::optional<std::chrono::milliseconds> time_budget;
  bool use_symmetry = true;
};

struct MinimalSearchResult {
  std::optional<Distribution> best;
  bool complete = true;  // false when the time budget ran out
  std::uint64_t alice_candidates = 0;  // Alice sets examined after symmetry pruning
  std::uint64_t alice_skipped = 0;     // Alice sets skipped as non-canonical
  /// Canonical Alice sets attaining the optimum (with some Bob set).
  std::uint64_t optimal_alice_sets = 0;
  Integer symmetry_order = 1;
};

/// Smallest |X|·|Y| over pairs of subsets of the instance's complete bases
/// whose game has classical value < 1 (the maximally entangled strategy
/// always wins, so these are exactly the perfect quantum strategies).
/// Reports |X| <= |Y|; ties break on the smallest (|X|, X, Y) encoding.
/// Throws std::invalid_argument when the instance has more than 64 bases.
MinimalSearchResult minimal_distribution_search(const KSInstance& inst, const MinimalSearchOptions& options = {});

/// True iff some deterministic strategy wins every context.
bool has_perfect_classical_strategy(const Game& g);

}  // namespace kskit
