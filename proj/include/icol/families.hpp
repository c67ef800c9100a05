#ifndef ICOL_FAMILIES_HPP
#define ICOL_FAMILIES_HPP

#include <optional>
#include <string>

#include "icol/coloring.hpp"
#include "icol/graph.hpp"

namespace icol {

enum class FamilyId { cycle, kbb, k2q, gdq, gdd_even, gdd_3, gdd_odd };

std::string family_name(FamilyId id);
std::optional<FamilyId> family_from_name(const std::string& name);

// A constructed extremal graph together with its closed-form interval
// coloring. The expected_* fields are computed from the family's formulas
// up front; every builder asserts them against the built object before
// returning, so a constructed instance always validates.
struct FamilyInstance {
    Graph graph;
    EdgeColoring coloring;
    int expected_diameter = 0;
    int expected_max_degree = 0;
    int expected_colors = 0;
    FamilyId family;
};

// Even cycle C_2d (d >= 2) with its interval (d+1)-coloring: the closing
// edge gets 1 and the two arcs mirror each other with colors 2..d+1.
FamilyInstance build_cycle_family(int d);

// K_{delta,delta} (delta >= 2) colored by color(u_i, v_j) = i+j-1, which is
// interval with 2*delta-1 colors, the maximum possible for this graph.
FamilyInstance build_kbb(int delta);

// Complete graph K_{2^q} (q >= 1) with an interval (2^{q+1}-2-q)-coloring.
// The coloring is loaded from the certificate cache (see certificates.hpp)
// and re-validated; on a cache miss the exact solver searches for one, and
// a run out of budget is an error. Desk scale: q <= 4.
FamilyInstance color_k2q(int q);

// Layered product of a path on d vertices with K_{2^q}: each layer carries
// the K_{2^q} coloring shifted by (i-1)*2^q, and each rung joining layers i
// and i+1 at vertex j gets one more than the top of j's layer spectrum.
// Colors used: 2^{q+1}-2-q (d=1), 3*2^q-2-q (d=2), (d+1)*2^q-2-q (d>=3).
FamilyInstance build_gdq(int d, int q);

// Bipartite delta-regular graph of even diameter d (d >= 4, delta >= 3):
// a chain of d/2 near-complete K_{delta,delta} blocks joined by crossed
// connector edges, colored with exactly d(delta-1)+1 colors, matching the
// bipartite diameter bound.
FamilyInstance build_gdd_even(int d, int delta);

// Bipartite delta-regular graph of diameter 3 (delta >= 3): two complete
// bipartite blocks K_{delta-1,delta} bridged by a perfect matching on the
// v-sides, colored with 3*delta-2 colors.
FamilyInstance build_gdd_3(int delta);

// Bipartite graph of odd diameter d (d >= 5, delta >= 3) and maximum degree
// delta: the even-case chain with the first junction replaced by a two-
// vertex bridge gadget carrying 2*(delta-3) pendant vertices; colored with
// d(delta-1)+1 colors.
FamilyInstance build_gdd_odd(int d, int delta);

// Closed-form max degree and color count of build_gdq(d, q), straight from
// the family's case display; useful without building the instance.
struct GdqExpected {
    int max_degree;
    int colors;
};

GdqExpected gdq_expected(int d, int q);

} // namespace icol

#endif
