#ifndef ICOL_GRAPH_HPP
#define ICOL_GRAPH_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace icol {

using Vertex = int;

// Undirected edge, always stored with first() < second().
using Edge = std::pair<Vertex, Vertex>;

// Normalizes endpoint order; rejects self-loops.
Edge make_edge(Vertex u, Vertex v);

// Finite simple undirected graph on vertex ids 0..n-1. Immutable after
// construction. The edge sequence is kept strictly sorted under
// (min-endpoint, max-endpoint), so serialization is canonical.
// Duplicate edges in the input are an error, not silently deduplicated.
class Graph {
public:
    Graph(int n, std::vector<Edge> edges,
          std::map<Vertex, std::string> labels = {});

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::map<Vertex, std::string>& labels() const { return labels_; }

    bool has_edge(Vertex u, Vertex v) const;
    int degree(Vertex v) const;
    const std::vector<Vertex>& neighbors(Vertex v) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_ && a.labels_ == b.labels_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::map<Vertex, std::string> labels_;
    std::vector<std::vector<Vertex>> adj_;
};

// Exact structural queries. diameter is empty iff the graph is disconnected;
// it is never a sentinel integer.
struct GraphStats {
    std::optional<int> diameter;
    int max_degree = 0;
    bool bipartite = false;
    bool connected = false;
    bool triangle_free = false;
};

Graph make_path(int n);                             // path on n vertices
Graph make_cycle(int n);                            // cycle on n >= 3 vertices
Graph make_complete(int n);
Graph make_complete_bipartite(int m, int n);        // parts labeled u_i / v_j

// Cartesian product: vertex (x, y) flattens to x * h.vertex_count() + y;
// ((u1,u2),(v1,v2)) is an edge iff exactly one coordinate is equal and the
// other pair is an edge of its factor. Labels of the factors are dropped.
Graph cartesian_product(const Graph& g, const Graph& h);

GraphStats stats(const Graph& g);

// perm[old_id] = new_id; perm must be a permutation of 0..n-1.
// Labels travel with their vertices.
Graph relabel(const Graph& g, const std::vector<Vertex>& perm);

} // namespace icol

#endif
