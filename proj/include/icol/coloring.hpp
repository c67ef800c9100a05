#ifndef ICOL_COLORING_HPP
#define ICOL_COLORING_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "icol/graph.hpp"

namespace icol {

// Assignment of positive integer colors to edges. Totality with respect to a
// graph is a property checked by the operations, not by the container, so the
// same type also carries partial colorings.
struct EdgeColoring {
    std::map<Edge, int> assignment;

    void set(Vertex u, Vertex v, int color) { assignment[make_edge(u, v)] = color; }
    bool has(Vertex u, Vertex v) const { return assignment.count(make_edge(u, v)) > 0; }
    int at(Vertex u, Vertex v) const;
    bool empty() const { return assignment.empty(); }
    size_t size() const { return assignment.size(); }

    friend bool operator==(const EdgeColoring& a, const EdgeColoring& b) {
        return a.assignment == b.assignment;
    }
};

// Set of colors seen on colored edges incident to one vertex.
struct Spectrum {
    std::vector<int> colors; // sorted ascending, no duplicates

    // Empty and singleton spectra count as intervals.
    bool is_interval() const;
    bool empty() const { return colors.empty(); }
    size_t size() const { return colors.size(); }
};

// Colors on colored edges incident to v. Partial colorings are allowed;
// uncolored incident edges contribute nothing.
Spectrum spectrum(const Graph& g, const EdgeColoring& c, Vertex v);

struct Violation {
    enum class Kind {
        ColorNonpositive,    // edge_a carries a color < 1
        AdjacentSameColor,   // edge_a, edge_b meet at vertex with equal color
        SpectrumNotInterval, // vertex spectrum has gaps
        ColorUnused,         // color in 1..t missing from the coloring
    };
    Kind kind;
    Vertex vertex = -1;
    Edge edge_a{-1, -1};
    Edge edge_b{-1, -1};
    std::vector<int> spectrum; // for SpectrumNotInterval
    int color = 0;             // for ColorNonpositive / AdjacentSameColor / ColorUnused

    std::string describe() const;
};

// verdict is true iff violations is empty; when true, the used colors are
// exactly {1..t}. Violations come out in a deterministic order: nonpositive
// colors by edge, then same-color clashes by (vertex, color), then non-interval
// spectra by vertex, then unused colors ascending.
struct ValidationReport {
    bool valid = false;
    int t = 0; // max color present (the t of a valid coloring)
    std::vector<Violation> violations;
};

// Checks the full definition: adjacent edges differ, every vertex spectrum is
// an interval, and with t = max color every color 1..t is used. The coloring
// must be total on g's edges; anything else throws. All violations are
// enumerated, not just the first.
ValidationReport validate_interval(const Graph& g, const EdgeColoring& c);

// Diameter-based and order-based upper bounds on the number of colors any
// interval coloring of g can use. Requires a connected graph.
struct BoundsReport {
    int general_diameter_bound = 0;                 // (diam+1)(maxdeg-1)+1
    std::optional<int> bipartite_diameter_bound;    // diam*(maxdeg-1)+1, iff bipartite
    std::optional<int> triangle_free_bound;         // |V|-1, iff triangle-free
    std::optional<int> general_vertex_bound;        // 2|V|-4, iff |V| >= 3
    bool connected = false;
    bool bipartite = false;
    bool triangle_free = false;
};

BoundsReport bounds(const Graph& g);

// Maximum color value; throws on an empty coloring.
int color_count(const EdgeColoring& c);

// Shifts all colors so the smallest used color becomes 1. A coloring whose
// used set is {a..b} comes out using {1..b-a+1}. Gaps are preserved, so a
// non-contiguous coloring stays invalid after the shift.
EdgeColoring normalize_to_one(const EdgeColoring& c);

// Transports a coloring along a vertex permutation (perm[old] = new).
EdgeColoring relabel(const EdgeColoring& c, const std::vector<Vertex>& perm);

} // namespace icol

#endif
