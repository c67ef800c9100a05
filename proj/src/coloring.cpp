#include "icol/coloring.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace icol {

namespace {

std::string edge_str(const Edge& e) {
    return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
}

} // namespace

int EdgeColoring::at(Vertex u, Vertex v) const {
    auto it = assignment.find(make_edge(u, v));
    if (it == assignment.end())
        throw std::invalid_argument("edge " + edge_str({u, v}) + " is not colored");
    return it->second;
}

bool Spectrum::is_interval() const {
    if (colors.size() <= 1)
        return true;
    return colors.back() - colors.front() + 1 == static_cast<int>(colors.size());
}

Spectrum spectrum(const Graph& g, const EdgeColoring& c, Vertex v) {
    std::set<int> seen;
    for (Vertex w : g.neighbors(v)) { // throws on unknown vertex id
        auto it = c.assignment.find(make_edge(v, w));
        if (it != c.assignment.end())
            seen.insert(it->second);
    }
    return Spectrum{std::vector<int>(seen.begin(), seen.end())};
}

std::string Violation::describe() const {
    std::ostringstream out;
    switch (kind) {
    case Kind::ColorNonpositive:
        out << "edge " << edge_str(edge_a) << " has nonpositive color " << color;
        break;
    case Kind::AdjacentSameColor:
        out << "vertex " << vertex << ": edges " << edge_str(edge_a) << " and "
            << edge_str(edge_b) << " share color " << color;
        break;
    case Kind::SpectrumNotInterval: {
        out << "vertex " << vertex << ": spectrum {";
        for (size_t i = 0; i < spectrum.size(); ++i)
            out << (i ? "," : "") << spectrum[i];
        out << "} is not an interval";
        break;
    }
    case Kind::ColorUnused:
        out << "color " << color << " is unused";
        break;
    }
    return out.str();
}

ValidationReport validate_interval(const Graph& g, const EdgeColoring& c) {
    // totality: assignment keys must be exactly the edge set
    if (c.assignment.size() != g.edges().size())
        throw std::invalid_argument("coloring is not total: " +
                                    std::to_string(c.assignment.size()) + " colored, " +
                                    std::to_string(g.edges().size()) + " edges");
    {
        auto it = c.assignment.begin();
        for (const Edge& e : g.edges()) {
            if (it->first != e)
                throw std::invalid_argument("coloring does not match edge set near " +
                                            edge_str(it->first));
            ++it;
        }
    }

    ValidationReport report;
    int t = 0;
    for (const auto& [e, color] : c.assignment)
        t = std::max(t, color);
    report.t = t;

    // Refuse to materialize absurd numbers of unused-color records; a sane
    // coloring never has more colors than edges.
    if (t > static_cast<int>(g.edges().size()) + 1000000)
        throw std::invalid_argument("color values exceed plausible range (max " +
                                    std::to_string(t) + ")");

    for (const auto& [e, color] : c.assignment)
        if (color < 1)
            report.violations.push_back(
                {Violation::Kind::ColorNonpositive, -1, e, {-1, -1}, {}, color});

    // same-color clashes, grouped per vertex and ordered by (vertex, color)
    std::vector<Violation> clashes;
    std::vector<Violation> gaps;
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::map<int, std::vector<Edge>> by_color;
        for (Vertex w : g.neighbors(v))
            by_color[c.at(v, w)].push_back(make_edge(v, w));
        for (const auto& [color, es] : by_color)
            for (size_t i = 0; i < es.size(); ++i)
                for (size_t j = i + 1; j < es.size(); ++j)
                    clashes.push_back(
                        {Violation::Kind::AdjacentSameColor, v, es[i], es[j], {}, color});
        Spectrum s = spectrum(g, c, v);
        if (!s.is_interval())
            gaps.push_back(
                {Violation::Kind::SpectrumNotInterval, v, {-1, -1}, {-1, -1}, s.colors, 0});
    }
    report.violations.insert(report.violations.end(), clashes.begin(), clashes.end());
    report.violations.insert(report.violations.end(), gaps.begin(), gaps.end());

    std::vector<bool> used(static_cast<size_t>(std::max(t, 0)) + 1, false);
    for (const auto& [e, color] : c.assignment)
        if (color >= 1)
            used[color] = true;
    for (int i = 1; i <= t; ++i)
        if (!used[i])
            report.violations.push_back(
                {Violation::Kind::ColorUnused, -1, {-1, -1}, {-1, -1}, {}, i});

    report.valid = report.violations.empty();
    return report;
}

BoundsReport bounds(const Graph& g) {
    GraphStats s = stats(g);
    if (!s.connected)
        throw std::invalid_argument(
            "bounds require a connected graph; this graph is disconnected");
    BoundsReport r;
    r.connected = true;
    r.bipartite = s.bipartite;
    r.triangle_free = s.triangle_free;
    const int d = *s.diameter;
    const int deg = s.max_degree;
    r.general_diameter_bound = (d + 1) * (deg - 1) + 1;
    if (s.bipartite)
        r.bipartite_diameter_bound = d * (deg - 1) + 1;
    if (s.triangle_free)
        r.triangle_free_bound = g.vertex_count() - 1;
    if (g.vertex_count() >= 3)
        r.general_vertex_bound = 2 * g.vertex_count() - 4;
    return r;
}

int color_count(const EdgeColoring& c) {
    if (c.assignment.empty())
        throw std::invalid_argument("color_count of an empty coloring");
    int t = 0;
    for (const auto& [e, color] : c.assignment)
        t = std::max(t, color);
    return t;
}

EdgeColoring normalize_to_one(const EdgeColoring& c) {
    if (c.assignment.empty())
        return c;
    int lo = c.assignment.begin()->second;
    for (const auto& [e, color] : c.assignment)
        lo = std::min(lo, color);
    EdgeColoring out;
    for (const auto& [e, color] : c.assignment)
        out.assignment[e] = color - lo + 1;
    return out;
}

EdgeColoring relabel(const EdgeColoring& c, const std::vector<Vertex>& perm) {
    EdgeColoring out;
    const int n = static_cast<int>(perm.size());
    for (const auto& [e, color] : c.assignment) {
        if (e.first >= n || e.second >= n)
            throw std::invalid_argument("permutation too small for colored edge");
        out.assignment[make_edge(perm[e.first], perm[e.second])] = color;
    }
    return out;
}

} // namespace icol
