#include "kskit/game.hpp"

#include <fstream>
#include <stdexcept>

namespace kskit {

std::string_view context_type_name(ContextType t) noexcept {
  switch (t) {
    case ContextType::shared_vector: return "shared-vector";
    case ContextType::orthogonal_pair: return "orthogonal-pair";
    case ContextType::other: return "other";
  }
  return "other";
}

std::size_t Context::wins() const {
  std::size_t n = 0;
  for (const auto& row : win) {
    for (bool w : row) n += w ? 1 : 0;
  }
  return n;
}

Game::Game(std::vector<Basis> alice, std::vector<Basis> bob) : alice_(std::move(alice)), bob_(std::move(bob)) {
  if (alice_.empty() || bob_.empty()) throw std::invalid_argument("a game needs at least one basis per party");
  contexts_.reserve(alice_.size() * bob_.size());
  for (std::size_t x = 0; x < alice_.size(); ++x) {
    for (std::size_t y = 0; y < bob_.size(); ++y) {
      Context c;
      c.x = x;
      c.y = y;
      bool shared = false;
      for (std::size_t a = 0; a < 3; ++a) {
        for (std::size_t b = 0; b < 3; ++b) {
          const auto& ra = alice_[x][a];
          const auto& rb = bob_[y][b];
          c.win[a][b] = !is_orthogonal(ra, rb);
          if (!c.win[a][b]) ++c.orthogonal_pairs;
          if (ra == rb) shared = true;
        }
      }
      if (shared) {
        c.type = ContextType::shared_vector;
      } else if (c.orthogonal_pairs == 1) {
        c.type = ContextType::orthogonal_pair;
      }
      contexts_.push_back(c);
    }
  }
}

Rational Game::input_weight() const { return {1, static_cast<unsigned long>(alice_.size() * bob_.size())}; }

std::size_t Game::winning_events() const {
  std::size_t n = 0;
  for (const auto& c : contexts_) n += c.wins();
  return n;
}

Game build_game(std::vector<Basis> alice, std::vector<Basis> bob) { return {std::move(alice), std::move(bob)}; }

std::size_t contexts_won(const Game& g, const Strategy& s) {
  std::size_t won = 0;
  for (const auto& c : g.contexts()) won += c.win[s.alice.at(c.x)][s.bob.at(c.y)] ? 1 : 0;
  return won;
}

std::vector<Event> winning_events(const Game& g) {
  std::vector<Event> out;
  for (const auto& c : g.contexts()) {
    for (std::size_t a = 0; a < 3; ++a) {
      for (std::size_t b = 0; b < 3; ++b) {
        if (c.win[a][b]) out.push_back({c.x, c.y, a, b});
      }
    }
  }
  return out;
}

SimpleGraph exclusivity_graph(const Game& g) {
  const auto events = winning_events(g);
  SimpleGraph h(events.size());
  for (std::size_t i = 0; i < events.size(); ++i) {
    for (std::size_t j = i + 1; j < events.size(); ++j) {
      const auto& e = events[i];
      const auto& f = events[j];
      if ((e.x == f.x && e.a != f.a) || (e.y == f.y && e.b != f.b)) h.add_edge(i, j);
    }
  }
  return h;
}

ClassicalValue classical_value(const Game& g) {
  const auto events = winning_events(g);
  const auto alpha = independence_number(exclusivity_graph(g));
  ClassicalValue out;
  out.witness.alice.assign(g.alice().size(), 0);
  out.witness.bob.assign(g.bob().size(), 0);
  for (std::size_t v : alpha.witness) {
    out.witness.alice[events[v].x] = events[v].a;
    out.witness.bob[events[v].y] = events[v].b;
  }
  out.contexts_won = contexts_won(g, out.witness);
  if (out.contexts_won != alpha.size) throw std::logic_error("independent set does not replay as a strategy");
  out.value = Rational(static_cast<unsigned long>(alpha.size), static_cast<unsigned long>(g.contexts().size()));
  out.value.canonicalize();
  out.search_nodes = alpha.nodes;
  return out;
}

namespace {

// Advances a base-3 counter; false after the last value.
bool next_choice(std::vector<std::size_t>& digits) {
  for (auto& d : digits) {
    if (++d < 3) return true;
    d = 0;
  }
  return false;
}

}  // namespace

ClassicalValue classical_value_by_alice_strategies(const Game& g) {
  const std::size_t nx = g.alice().size();
  const std::size_t ny = g.bob().size();
  ClassicalValue out;
  std::vector<std::size_t> alice(nx, 0);
  bool first = true;
  do {
    ++out.search_nodes;
    std::size_t won = 0;
    std::vector<std::size_t> bob(ny, 0);
    for (std::size_t y = 0; y < ny; ++y) {
      std::size_t best = 0;
      for (std::size_t b = 0; b < 3; ++b) {
        std::size_t w = 0;
        for (std::size_t x = 0; x < nx; ++x) w += g.context(x, y).win[alice[x]][b] ? 1 : 0;
        if (w > best) {
          best = w;
          bob[y] = b;
        }
      }
      won += best;
    }
    if (first || won > out.contexts_won) {
      first = false;
      out.contexts_won = won;
      out.witness = {alice, bob};
    }
  } while (next_choice(alice));
  out.value = Rational(static_cast<unsigned long>(out.contexts_won), static_cast<unsigned long>(g.contexts().size()));
  out.value.canonicalize();
  return out;
}

bool has_perfect_classical_strategy(const Game& g) {
  const std::size_t nx = g.alice().size();
  std::vector<std::size_t> alice(nx, 0);
  do {
    bool all = true;
    for (std::size_t y = 0; y < g.bob().size() && all; ++y) {
      bool some = false;
      for (std::size_t b = 0; b < 3 && !some; ++b) {
        bool beats = true;
        for (std::size_t x = 0; x < nx && beats; ++x) beats = g.context(x, y).win[alice[x]][b];
        some = beats;
      }
      all = some;
    }
    if (all) return true;
  } while (next_choice(alice));
  return false;
}

QuantumValue quantum_value_maxent(const Game& g, BobMeasurement convention) {
  QuantumValue out;
  out.value = 0;
  const CycNumber weight = g.input_weight();
  for (const auto& c : g.contexts()) {
    std::array<std::array<CycNumber, 3>, 3> p;
    CycNumber won = 0;
    for (std::size_t a = 0; a < 3; ++a) {
      const Ray& ra = g.alice()[c.x][a];
      for (std::size_t b = 0; b < 3; ++b) {
        const Ray& rb = g.bob()[c.y][b];
        CycNumber amp;
        if (convention == BobMeasurement::conjugated) {
          amp = inner(ra, rb);
        } else {
          const auto& u = ra.components();
          const auto& v = rb.components();
          amp = u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
        }
        p[a][b] = amp * amp.conj() / (CycNumber(3) * ra.norm_squared() * rb.norm_squared());
        if (c.win[a][b]) won += p[a][b];
      }
    }
    out.value += weight * won;
    out.probability.push_back(std::move(p));
  }
  return out;
}

void export_exclusivity_graph(const Game& g, const std::filesystem::path& dimacs_path,
                              const std::filesystem::path& legend_path) {
  const auto events = winning_events(g);
  const auto h = exclusivity_graph(g);
  std::ofstream dimacs(dimacs_path);
  if (!dimacs) throw std::runtime_error("cannot write " + dimacs_path.string());
  dimacs << to_dimacs(h, "exclusivity graph of winning events; legend in " + legend_path.filename().string());
  std::ofstream legend(legend_path);
  if (!legend) throw std::runtime_error("cannot write " + legend_path.string());
  legend << "# vertex x y a b (vertex 1-based; x, y, a, b 0-based)\n";
  for (std::size_t i = 0; i < events.size(); ++i) {
    legend << i + 1 << ' ' << events[i].x << ' ' << events[i].y << ' ' << events[i].a << ' ' << events[i].b << '\n';
  }
  if (!dimacs || !legend) throw std::runtime_error("write failed for exclusivity graph export");
}

}  // namespace kskit
