#ifndef ICOL_SOLVER_HPP
#define ICOL_SOLVER_HPP

#include <functional>
#include <optional>

#include "icol/coloring.hpp"
#include "icol/graph.hpp"

namespace icol {

// Search limits. The node limit counts color assignments; the wall-clock
// limit is optional and, unlike the node limit, machine-dependent.
struct SolveBudget {
    long long max_nodes = 50'000'000;
    std::optional<double> max_seconds;
};

enum class SolveStatus { feasible, infeasible, unknown };

// infeasible is only ever reported after the search space was exhausted
// within budget; running out of budget yields unknown, never infeasible.
struct SolveOutcome {
    SolveStatus status = SolveStatus::unknown;
    std::optional<EdgeColoring> certificate; // present iff feasible
    long long nodes_explored = 0;
    double elapsed_seconds = 0.0;
};

// Decides whether g admits an interval t-coloring by deterministic
// backtracking over edges (most-colored-neighborhood first, canonical edge
// order as tie-break), with interval-window pruning at each touched vertex,
// a surjectivity lookahead, and mirror symmetry breaking (c -> t+1-c) on the
// first edge. Colors are limited to t <= 62.
SolveOutcome find_interval_coloring(const Graph& g, int t, const SolveBudget& budget = {});

// Exact count of interval t-colorings using the same pruned search but with
// symmetry breaking disabled (the all-solutions mode of the search engine).
struct CountOutcome {
    long long count = 0;
    SolveStatus status = SolveStatus::unknown; // feasible/infeasible mirror count>0
    long long nodes_explored = 0;
};

CountOutcome count_interval_colorings(const Graph& g, int t, const SolveBudget& budget = {});

// Largest t for which g has an interval t-coloring, found by trying each
// t from the applicable diameter cutoff downward. Feasibility is not
// monotone in t, so every t is tested independently.
//   status feasible:   w holds the exact value
//   status infeasible: no t in [max degree, cutoff] works; g has no interval
//                      coloring at all (w empty)
//   status unknown:    some subcall ran out of budget before resolution; w,
//                      when present, is only a lower bound
struct WOutcome {
    std::optional<int> w;
    SolveStatus status = SolveStatus::unknown;
    long long nodes_explored = 0;
    double elapsed_seconds = 0.0;
};

WOutcome compute_w_exact(const Graph& g, const SolveBudget& budget = {});

// Brute-force oracle: enumerates every total assignment satisfying the
// interval-t definition by trying all colors per edge in canonical order,
// with no pruning beyond properness. Intentionally unoptimized; refuses
// graphs with more than max_edges edges. Returns the exact count and feeds
// each solution to visit when provided.
long long enumerate_interval_colorings(
    const Graph& g, int t,
    const std::function<void(const EdgeColoring&)>& visit = {},
    int max_edges = 12);

} // namespace icol

#endif
