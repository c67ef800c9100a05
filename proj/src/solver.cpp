#include "icol/solver.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace icol {

namespace {

using Clock = std::chrono::steady_clock;

constexpr int kMaxColor = 62; // color c lives in bit c of a uint64_t mask

int max_degree(const Graph& g) {
    int deg = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        deg = std::max(deg, g.degree(v));
    return deg;
}

// Backtracking state shared by the decision and counting searches.
struct Search {
    const Graph& g;
    int t;
    int m;
    bool count_all;     // keep going after the first solution
    bool break_mirror;  // restrict the first edge's color to 1..ceil(t/2)

    std::vector<std::array<int, 2>> ends;  // edge id -> endpoints
    std::vector<std::vector<int>> inc;     // vertex -> incident edge ids
    std::vector<int> deg;

    std::vector<int> color;       // 0 = uncolored
    std::vector<uint64_t> used;   // per-vertex color bitmask
    std::vector<int> colored_at;  // per-vertex count of colored incident edges
    std::vector<int> color_use;   // per-color global usage count
    int unused_colors;
    int uncolored;

    long long nodes = 0;
    long long max_nodes;
    std::optional<Clock::time_point> deadline;
    bool out_of_budget = false;

    long long solutions = 0;
    std::vector<int> first_solution; // decision mode keeps the first certificate

    Search(const Graph& graph, int colors, const SolveBudget& budget, bool count)
        : g(graph), t(colors), m(graph.edge_count()), count_all(count),
          break_mirror(!count) {
        ends.reserve(m);
        for (const Edge& e : g.edges())
            ends.push_back({e.first, e.second});
        inc.resize(g.vertex_count());
        for (int e = 0; e < m; ++e) {
            inc[ends[e][0]].push_back(e);
            inc[ends[e][1]].push_back(e);
        }
        deg.resize(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v)
            deg[v] = g.degree(v);
        color.assign(m, 0);
        used.assign(g.vertex_count(), 0);
        colored_at.assign(g.vertex_count(), 0);
        color_use.assign(t + 1, 0);
        unused_colors = t;
        uncolored = m;
        max_nodes = budget.max_nodes;
        if (budget.max_seconds)
            deadline = Clock::now() +
                       std::chrono::duration_cast<Clock::duration>(
                           std::chrono::duration<double>(*budget.max_seconds));
    }

    bool budget_exceeded() {
        if (nodes > max_nodes)
            return true;
        if (deadline && (nodes & 1023) == 0 && Clock::now() > *deadline)
            return true;
        return false;
    }

    // Necessary condition at v: the colors used so far must fit in some
    // interval of length deg(v) inside [1, t]. Exact once v is fully colored
    // (span == deg forces consecutive colors).
    bool window_ok(Vertex v) const {
        uint64_t s = used[v];
        if (s == 0)
            return true;
        int lo = std::countr_zero(s);
        int hi = 63 - std::countl_zero(s);
        int d = deg[v];
        if (hi - lo + 1 > d)
            return false;
        int start_min = std::max(1, hi - d + 1);
        int start_max = std::min(lo, t - d + 1);
        return start_min <= start_max;
    }

    // Most constrained first: pick the uncolored edge whose endpoints carry
    // the most colored incident edges, canonical edge order breaking ties.
    int pick_edge() const {
        int best = -1, best_score = -1;
        for (int e = 0; e < m; ++e) {
            if (color[e])
                continue;
            int score = colored_at[ends[e][0]] + colored_at[ends[e][1]];
            if (score > best_score) {
                best_score = score;
                best = e;
            }
        }
        return best;
    }

    // Returns false when the search was aborted by budget; otherwise the
    // space below the current node was fully explored.
    bool dfs() {
        if (uncolored == 0) {
            if (unused_colors == 0) {
                ++solutions;
                if (first_solution.empty())
                    first_solution = color;
            }
            return true;
        }
        // every remaining edge introduces at most one missing color
        if (uncolored < unused_colors)
            return true;
        int e = pick_edge();
        int u = ends[e][0], v = ends[e][1];
        int limit = (break_mirror && uncolored == m) ? (t + 1) / 2 : t;
        for (int c = 1; c <= limit; ++c) {
            uint64_t bit = uint64_t{1} << c;
            if ((used[u] | used[v]) & bit)
                continue;
            ++nodes;
            if (budget_exceeded()) {
                out_of_budget = true;
                return false;
            }
            color[e] = c;
            used[u] |= bit;
            used[v] |= bit;
            ++colored_at[u];
            ++colored_at[v];
            --uncolored;
            if (color_use[c]++ == 0)
                --unused_colors;
            bool keep_going = true;
            if (window_ok(u) && window_ok(v)) {
                if (!dfs())
                    keep_going = false;
                else if (!count_all && solutions > 0)
                    keep_going = false; // found one, unwind
            }
            color[e] = 0;
            used[u] &= ~bit;
            used[v] &= ~bit;
            --colored_at[u];
            --colored_at[v];
            ++uncolored;
            if (--color_use[c] == 0)
                ++unused_colors;
            if (!keep_going)
                return !out_of_budget;
        }
        return true;
    }

    EdgeColoring extract() const {
        EdgeColoring c;
        for (int e = 0; e < m; ++e)
            c.assignment[{ends[e][0], ends[e][1]}] = first_solution[e];
        return c;
    }
};

void check_t(int t) {
    if (t < 1 || t > kMaxColor)
        throw std::invalid_argument("color count t must be in 1.." +
                                    std::to_string(kMaxColor));
}

} // namespace

SolveOutcome find_interval_coloring(const Graph& g, int t, const SolveBudget& budget) {
    check_t(t);
    if (budget.max_nodes < 1)
        throw std::invalid_argument("budget needs max_nodes >= 1");
    auto start = Clock::now();
    SolveOutcome out;
    if (t < max_degree(g)) {
        // a maximum-degree vertex already needs t distinct colors
        out.status = SolveStatus::infeasible;
        out.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
        return out;
    }
    Search search(g, t, budget, /*count=*/false);
    search.dfs();
    out.nodes_explored = search.nodes;
    out.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (search.solutions > 0) {
        out.status = SolveStatus::feasible;
        out.certificate = search.extract();
    } else if (search.out_of_budget) {
        out.status = SolveStatus::unknown;
    } else {
        out.status = SolveStatus::infeasible;
    }
    return out;
}

CountOutcome count_interval_colorings(const Graph& g, int t, const SolveBudget& budget) {
    check_t(t);
    CountOutcome out;
    if (t < max_degree(g)) {
        out.status = SolveStatus::infeasible;
        return out;
    }
    Search search(g, t, budget, /*count=*/true);
    search.dfs();
    out.nodes_explored = search.nodes;
    if (search.out_of_budget) {
        out.status = SolveStatus::unknown;
        out.count = search.solutions; // lower bound only
    } else {
        out.count = search.solutions;
        out.status = out.count > 0 ? SolveStatus::feasible : SolveStatus::infeasible;
    }
    return out;
}

WOutcome compute_w_exact(const Graph& g, const SolveBudget& budget) {
    GraphStats s = stats(g);
    if (!s.connected)
        throw std::invalid_argument("compute_w_exact requires a connected graph");
    WOutcome out;
    const int d = *s.diameter;
    const int deg = s.max_degree;
    const int cutoff = s.bipartite ? d * (deg - 1) + 1 : (d + 1) * (deg - 1) + 1;
    auto start = Clock::now();
    bool poisoned = false;
    for (int t = cutoff; t >= std::max(deg, 1); --t) {
        SolveOutcome sub = find_interval_coloring(g, t, budget);
        out.nodes_explored += sub.nodes_explored;
        if (sub.status == SolveStatus::feasible) {
            out.w = t;
            out.status = poisoned ? SolveStatus::unknown : SolveStatus::feasible;
            out.elapsed_seconds =
                std::chrono::duration<double>(Clock::now() - start).count();
            return out;
        }
        if (sub.status == SolveStatus::unknown)
            poisoned = true;
    }
    out.status = poisoned ? SolveStatus::unknown : SolveStatus::infeasible;
    out.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return out;
}

long long enumerate_interval_colorings(const Graph& g, int t,
                                       const std::function<void(const EdgeColoring&)>& visit,
                                       int max_edges) {
    check_t(t);
    const int m = g.edge_count();
    if (m > max_edges)
        throw std::invalid_argument("enumeration oracle is capped at " +
                                    std::to_string(max_edges) + " edges");
    std::vector<std::array<int, 2>> ends;
    for (const Edge& e : g.edges())
        ends.push_back({e.first, e.second});
    std::vector<int> color(m, 0);
    std::vector<uint64_t> used(g.vertex_count(), 0);
    long long count = 0;

    // full interval-t check, run only at complete assignments
    auto leaf_ok = [&]() {
        uint64_t all = 0;
        for (int v = 0; v < g.vertex_count(); ++v) {
            uint64_t s = used[v];
            all |= s;
            if (s == 0)
                continue;
            int lo = std::countr_zero(s);
            int hi = 63 - std::countl_zero(s);
            if (hi - lo + 1 != std::popcount(s))
                return false; // spectrum has a gap
        }
        for (int c = 1; c <= t; ++c)
            if (!(all >> c & 1))
                return false; // color unused
        return true;
    };

    auto rec = [&](auto&& self, int e) -> void {
        if (e == m) {
            if (leaf_ok()) {
                ++count;
                if (visit) {
                    EdgeColoring c;
                    for (int i = 0; i < m; ++i)
                        c.assignment[{ends[i][0], ends[i][1]}] = color[i];
                    visit(c);
                }
            }
            return;
        }
        int u = ends[e][0], v = ends[e][1];
        for (int c = 1; c <= t; ++c) {
            uint64_t bit = uint64_t{1} << c;
            if ((used[u] | used[v]) & bit)
                continue; // properness, the only pruning allowed here
            color[e] = c;
            used[u] |= bit;
            used[v] |= bit;
            self(self, e + 1);
            used[u] &= ~bit;
            used[v] &= ~bit;
            color[e] = 0;
        }
    };
    rec(rec, 0);
    return count;
}

} // namespace icol
