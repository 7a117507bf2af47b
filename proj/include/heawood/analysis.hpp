#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "heawood/graph.hpp"
#include "heawood/intlin.hpp"
#include "heawood/quotient.hpp"

namespace heawood {

struct BipartiteResult {
    bool bipartite = false;
    std::vector<int> colouring;  // 0/1 per vertex when bipartite
    std::vector<int> odd_cycle;  // closed walk witness otherwise
};

BipartiteResult is_bipartite(const Graph& g);

enum class CycleKind { HexagonFace, SquareFace, Other };
std::string to_string(CycleKind k);

struct CycleReport {
    std::vector<int> vertices;  // starts at the query vertex
    CycleKind kind = CycleKind::Other;
    std::size_t length() const { return vertices.size(); }
};

/// Simple cycles of the given length through v, one per cyclic class, each
/// written from v in its lexicographically smaller direction.
std::vector<std::vector<int>> cycles_through(const Graph& g, int v, int length);

/// Six-cycles through v, tagged by whether they bound a 2-face of the tiling.
std::vector<CycleReport> six_cycles_through(const QuotientGraph& h, int v);
std::vector<CycleReport> classify_cycles(const QuotientGraph& h, const std::vector<std::vector<int>>& cycles);

enum class WalkOutcome { HamiltonianCycle, PrematureClosure, NoneFound, Indeterminate };
std::string to_string(WalkOutcome o);

struct HamiltonianWalkResult {
    std::string mode;  // "alternating" or "backtracking"
    int i = 0;
    WalkOutcome outcome = WalkOutcome::NoneFound;
    std::vector<int> walk;  // the cycle, or the vertices visited before closing
    std::size_t length = 0;
    std::size_t vertices = 0;
    bool closed_at_start = false;
    std::uint64_t nodes = 0;
};

/// From the seed vertex, alternately add e_i - e_{i+1} and e_i - e_{i-1}
/// (1-based, cyclic) until a vertex repeats. Throws invalid-walk if a move is
/// not an edge, which happens at the seed whenever d >= 3.
HamiltonianWalkResult hamiltonian_alternating(const QuotientGraph& h, int i);

/// Depth-first search with fewest-options-first ordering. Indeterminate when
/// the node budget runs out.
HamiltonianWalkResult hamiltonian_backtracking(const Graph& g, std::uint64_t budget = 50'000'000);

/// True when the closed vertex sequence is a Hamiltonian cycle of g.
bool is_hamiltonian_cycle(const Graph& g, const std::vector<int>& cycle);

struct ChromaticResult {
    int lower = 0;
    int upper = 0;
    bool exact = false;
    std::vector<int> colouring;  // proper colouring with `upper` colours
    std::uint64_t nodes = 0;
};

/// DSATUR bound, then exact branch and bound when the graph has at most `cap`
/// vertices. Over the cap only bounds come back.
ChromaticResult chromatic_number(const Graph& g, std::size_t cap = 60, std::uint64_t budget = 100'000'000);

/// floor((7 + sqrt(1 + 48 p)) / 2) in exact integer arithmetic.
Integer heawood_number(const Integer& p);

}  // namespace heawood
