#include "icol/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace icol {

Edge make_edge(Vertex u, Vertex v) {
    if (u == v)
        throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    return u < v ? Edge{u, v} : Edge{v, u};
}

Graph::Graph(int n, std::vector<Edge> edges, std::map<Vertex, std::string> labels)
    : n_(n), labels_(std::move(labels)) {
    if (n < 1)
        throw std::invalid_argument("graph needs at least one vertex");
    edges_.reserve(edges.size());
    for (const Edge& e : edges) {
        Edge ne = make_edge(e.first, e.second);
        if (ne.second >= n_ || ne.first < 0)
            throw std::invalid_argument("edge endpoint out of range: (" +
                                        std::to_string(e.first) + "," +
                                        std::to_string(e.second) + ")");
        edges_.push_back(ne);
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end())
        throw std::invalid_argument("duplicate edge (" + std::to_string(dup->first) +
                                    "," + std::to_string(dup->second) + ")");
    for (const auto& [v, text] : labels_) {
        if (v < 0 || v >= n_)
            throw std::invalid_argument("label on unknown vertex " + std::to_string(v));
        if (text.empty())
            throw std::invalid_argument("empty label on vertex " + std::to_string(v));
    }
    adj_.resize(n_);
    for (const Edge& e : edges_) {
        adj_[e.first].push_back(e.second);
        adj_[e.second].push_back(e.first);
    }
    for (auto& nb : adj_)
        std::sort(nb.begin(), nb.end());
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (u == v)
        return false;
    Edge e = make_edge(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

int Graph::degree(Vertex v) const {
    return static_cast<int>(neighbors(v).size());
}

const std::vector<Vertex>& Graph::neighbors(Vertex v) const {
    if (v < 0 || v >= n_)
        throw std::invalid_argument("unknown vertex id " + std::to_string(v));
    return adj_[v];
}

Graph make_path(int n) {
    if (n < 1)
        throw std::invalid_argument("path needs n >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i)
        edges.push_back({i, i + 1});
    return Graph(n, std::move(edges));
}

Graph make_cycle(int n) {
    if (n < 3)
        throw std::invalid_argument("cycle needs n >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i)
        edges.push_back({i, i + 1});
    edges.push_back({0, n - 1});
    return Graph(n, std::move(edges));
}

Graph make_complete(int n) {
    if (n < 1)
        throw std::invalid_argument("complete graph needs n >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            edges.push_back({i, j});
    return Graph(n, std::move(edges));
}

Graph make_complete_bipartite(int m, int n) {
    if (m < 1 || n < 1)
        throw std::invalid_argument("complete bipartite graph needs both parts nonempty");
    std::vector<Edge> edges;
    std::map<Vertex, std::string> labels;
    for (int i = 0; i < m; ++i)
        labels[i] = "u_" + std::to_string(i + 1);
    for (int j = 0; j < n; ++j)
        labels[m + j] = "v_" + std::to_string(j + 1);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            edges.push_back({i, m + j});
    return Graph(m + n, std::move(edges), std::move(labels));
}

Graph cartesian_product(const Graph& g, const Graph& h) {
    const int ng = g.vertex_count();
    const int nh = h.vertex_count();
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(ng) * h.edge_count() +
                  static_cast<size_t>(nh) * g.edge_count());
    auto id = [nh](Vertex x, Vertex y) { return x * nh + y; };
    for (int x = 0; x < ng; ++x)
        for (const Edge& e : h.edges())
            edges.push_back({id(x, e.first), id(x, e.second)});
    for (const Edge& e : g.edges())
        for (int y = 0; y < nh; ++y)
            edges.push_back({id(e.first, y), id(e.second, y)});
    return Graph(ng * nh, std::move(edges));
}

namespace {

// Breadth-first distances from src; unreached vertices stay -1.
std::vector<int> bfs_dist(const Graph& g, Vertex src) {
    std::vector<int> dist(g.vertex_count(), -1);
    std::queue<Vertex> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        for (Vertex w : g.neighbors(v))
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
    }
    return dist;
}

} // namespace

GraphStats stats(const Graph& g) {
    const int n = g.vertex_count();
    GraphStats s;
    for (int v = 0; v < n; ++v)
        s.max_degree = std::max(s.max_degree, g.degree(v));

    // connectivity + diameter via all-pairs BFS
    std::vector<int> from0 = bfs_dist(g, 0);
    s.connected = std::find(from0.begin(), from0.end(), -1) == from0.end();
    if (s.connected) {
        int diam = 0;
        for (int v = 0; v < n; ++v) {
            std::vector<int> d = bfs_dist(g, v);
            diam = std::max(diam, *std::max_element(d.begin(), d.end()));
        }
        s.diameter = diam;
    }

    // 2-coloring over every component
    s.bipartite = true;
    std::vector<int> side(n, -1);
    for (int src = 0; src < n && s.bipartite; ++src) {
        if (side[src] >= 0)
            continue;
        side[src] = 0;
        std::queue<Vertex> q;
        q.push(src);
        while (!q.empty() && s.bipartite) {
            Vertex v = q.front();
            q.pop();
            for (Vertex w : g.neighbors(v)) {
                if (side[w] < 0) {
                    side[w] = 1 - side[v];
                    q.push(w);
                } else if (side[w] == side[v]) {
                    s.bipartite = false;
                    break;
                }
            }
        }
    }

    // triangles via sorted-neighborhood intersection per edge
    s.triangle_free = true;
    for (const Edge& e : g.edges()) {
        const auto& a = g.neighbors(e.first);
        const auto& b = g.neighbors(e.second);
        auto ia = a.begin();
        auto ib = b.begin();
        while (ia != a.end() && ib != b.end()) {
            if (*ia < *ib)
                ++ia;
            else if (*ib < *ia)
                ++ib;
            else {
                s.triangle_free = false;
                break;
            }
        }
        if (!s.triangle_free)
            break;
    }
    return s;
}

Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
    const int n = g.vertex_count();
    if (static_cast<int>(perm.size()) != n)
        throw std::invalid_argument("permutation size does not match vertex count");
    std::vector<bool> seen(n, false);
    for (Vertex p : perm) {
        if (p < 0 || p >= n || seen[p])
            throw std::invalid_argument("not a permutation of 0..n-1");
        seen[p] = true;
    }
    std::vector<Edge> edges;
    edges.reserve(g.edges().size());
    for (const Edge& e : g.edges())
        edges.push_back(make_edge(perm[e.first], perm[e.second]));
    std::map<Vertex, std::string> labels;
    for (const auto& [v, text] : g.labels())
        labels[perm[v]] = text;
    return Graph(n, std::move(edges), std::move(labels));
}

} // namespace icol
