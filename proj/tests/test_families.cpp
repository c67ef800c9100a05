#include "doctest.h"

#include "icol/certificates.hpp"
#include "icol/coloring.hpp"
#include "icol/families.hpp"
#include "icol/io.hpp"

using namespace icol;

namespace {

// Full instance check: the published statistics hold and the coloring is a
// genuine interval coloring meeting them.
void check_instance(const FamilyInstance& inst) {
    ValidationReport rep = validate_interval(inst.graph, inst.coloring);
    CHECK(rep.valid);
    CHECK(rep.t == inst.expected_colors);
    GraphStats st = stats(inst.graph);
    REQUIRE(st.diameter.has_value());
    CHECK(*st.diameter == inst.expected_diameter);
    CHECK(st.max_degree == inst.expected_max_degree);
    CHECK(st.connected);
}

bool is_regular(const Graph& g, int k) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != k)
            return false;
    return true;
}

} // namespace

TEST_CASE("even cycle family, exact colors for d=2") {
    FamilyInstance inst = build_cycle_family(2);
    CHECK(inst.coloring.at(0, 3) == 1); // closing edge (v_1, v_4)
    CHECK(inst.coloring.at(0, 1) == 2);
    CHECK(inst.coloring.at(1, 2) == 3);
    CHECK(inst.coloring.at(2, 3) == 2);
    CHECK(inst.expected_colors == 3);
    check_instance(inst);

    CHECK(build_cycle_family(3).expected_colors == 4);
    CHECK_THROWS_AS(build_cycle_family(1), std::invalid_argument);
}

TEST_CASE("cycle family meets the bipartite bound with equality") {
    FamilyInstance inst = build_cycle_family(5);
    CHECK(inst.expected_colors == 6);
    BoundsReport b = bounds(inst.graph);
    REQUIRE(b.bipartite_diameter_bound.has_value());
    CHECK(*b.bipartite_diameter_bound == 6);
}

TEST_CASE("complete bipartite family") {
    FamilyInstance d2 = build_kbb(2);
    CHECK(d2.expected_colors == 3);
    CHECK(spectrum(d2.graph, d2.coloring, 0).colors == std::vector<int>{1, 2});
    CHECK(spectrum(d2.graph, d2.coloring, 1).colors == std::vector<int>{2, 3});
    check_instance(d2);

    CHECK(build_kbb(3).expected_colors == 5);

    FamilyInstance d5 = build_kbb(5);
    CHECK(d5.expected_colors == 9);
    for (int v = 0; v < d5.graph.vertex_count(); ++v) {
        Spectrum s = spectrum(d5.graph, d5.coloring, v);
        CHECK(s.size() == 5);
        CHECK(s.is_interval());
    }
    CHECK_THROWS_AS(build_kbb(1), std::invalid_argument);
}

TEST_CASE("complete graph certificates") {
    FamilyInstance q1 = color_k2q(1);
    CHECK(q1.graph.edge_count() == 1);
    CHECK(q1.coloring.at(0, 1) == 1);
    CHECK(q1.expected_colors == 1);

    CHECK(color_k2q(2).expected_colors == 4);
    CHECK(color_k2q(3).expected_colors == 11);
    for (int q = 1; q <= 3; ++q)
        check_instance(color_k2q(q));
    CHECK_THROWS_AS(color_k2q(0), std::invalid_argument);
}

TEST_CASE("certificate files fail closed") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "icol_cert_test";
    fs::remove_all(dir);
    fs::create_directories(dir);

    CHECK_FALSE(load_k2q_certificate(7, dir).has_value()); // missing -> miss

    FamilyInstance q2 = color_k2q(2);
    write_k2q_certificate(2, q2.coloring, dir);
    auto loaded = load_k2q_certificate(2, dir);
    REQUIRE(loaded.has_value());
    CHECK(*loaded == q2.coloring);

    // flip one byte of the body: integrity check must reject
    std::string text = read_file(dir / "q2.icol");
    text[text.rfind(" 4")+1] = '3';
    write_file(dir / "q2.icol", text);
    CHECK_THROWS_AS(load_k2q_certificate(2, dir), CacheError);
    fs::remove_all(dir);
}

TEST_CASE("layered clique family, small exact cases") {
    // d=1 is exactly the complete-graph certificate
    FamilyInstance flat = build_gdq(1, 2);
    FamilyInstance base = color_k2q(2);
    CHECK(flat.graph.edges() == base.graph.edges());
    CHECK(flat.coloring == base.coloring);

    // d=3, q=1: ladder with clique colors 1,3,5 and rungs 2,4
    FamilyInstance ladder = build_gdq(3, 1);
    CHECK(ladder.expected_colors == 5);
    CHECK(ladder.coloring.at(0, 1) == 1);
    CHECK(ladder.coloring.at(2, 3) == 3);
    CHECK(ladder.coloring.at(4, 5) == 5);
    CHECK(ladder.coloring.at(0, 2) == 2);
    CHECK(ladder.coloring.at(1, 3) == 2);
    CHECK(ladder.coloring.at(2, 4) == 4);
    check_instance(ladder);

    FamilyInstance g42 = build_gdq(4, 2);
    CHECK(g42.expected_colors == 16); // (d+1)*2^q - 2 - q
    CHECK(g42.expected_max_degree == 5);
    CHECK(g42.expected_diameter == 4);
    check_instance(g42);

    CHECK_THROWS_AS(build_gdq(0, 1), std::invalid_argument);
}

TEST_CASE("gdq closed-form statistics") {
    GdqExpected e13 = gdq_expected(1, 3);
    CHECK(e13.max_degree == 7);
    CHECK(e13.colors == 11);
    GdqExpected e22 = gdq_expected(2, 2);
    CHECK(e22.max_degree == 4);
    CHECK(e22.colors == 8);
    GdqExpected e52 = gdq_expected(5, 2);
    CHECK(e52.max_degree == 5);
    CHECK(e52.colors == 20);

    // the statement's case display agrees with the direct per-layer form
    for (int d = 1; d <= 6; ++d)
        for (int q = 1; q <= 4; ++q) {
            GdqExpected e = gdq_expected(d, q);
            int direct = d == 1 ? (2 << q) - 2 - q
                       : d == 2 ? 3 * (1 << q) - 2 - q
                                : (d + 1) * (1 << q) - 2 - q;
            CHECK(e.colors == direct);
        }
}

TEST_CASE("even-diameter bipartite family") {
    FamilyInstance d43 = build_gdd_even(4, 3);
    CHECK(d43.graph.edge_count() == 18); // 8 + 8 + 2 connectors
    CHECK(d43.expected_colors == 9);
    // the i=2 junction color
    bool found5 = false;
    for (const auto& [e, color] : d43.coloring.assignment)
        if (d43.graph.labels().at(e.first) == "u_3_1" &&
            d43.graph.labels().at(e.second) == "v_1_2")
            found5 = color == 5;
    CHECK(found5);
    check_instance(d43);
    CHECK(is_regular(d43.graph, 3));

    FamilyInstance d64 = build_gdd_even(6, 4);
    CHECK(d64.expected_colors == 19);
    CHECK(is_regular(d64.graph, 4));
    CHECK(stats(d64.graph).bipartite);
    check_instance(d64);

    CHECK_THROWS_AS(build_gdd_even(5, 3), std::invalid_argument);
    CHECK_THROWS_AS(build_gdd_even(2, 3), std::invalid_argument);
    CHECK_THROWS_AS(build_gdd_even(4, 2), std::invalid_argument);
}

TEST_CASE("diameter-3 bipartite family") {
    FamilyInstance d3 = build_gdd_3(3);
    CHECK(d3.graph.vertex_count() == 10);
    CHECK(d3.graph.edge_count() == 15);
    CHECK(d3.expected_colors == 7);
    check_instance(d3);
    CHECK(is_regular(d3.graph, 3));

    // matching edge (v_2, v'_2) carries delta+1
    const auto& labels = d3.graph.labels();
    for (const auto& [e, color] : d3.coloring.assignment)
        if (labels.at(e.first) == "v_2" && labels.at(e.second) == "v'_2")
            CHECK(color == 4);

    FamilyInstance d5 = build_gdd_3(5);
    CHECK(d5.expected_colors == 13);
    CHECK(is_regular(d5.graph, 5));
    check_instance(d5);

    CHECK_THROWS_AS(build_gdd_3(2), std::invalid_argument);
}

TEST_CASE("odd-diameter bipartite family") {
    FamilyInstance d53 = build_gdd_odd(5, 3);
    CHECK(d53.expected_colors == 11);
    check_instance(d53);
    // delta=3 has no pendants
    for (const auto& [v, text] : d53.graph.labels())
        CHECK(text.rfind("pend", 0) != 0);

    FamilyInstance d54 = build_gdd_odd(5, 4);
    const auto& labels = d54.graph.labels();
    auto color_between = [&](const std::string& a, const std::string& b) {
        for (const auto& [e, color] : d54.coloring.assignment)
            if ((labels.at(e.first) == a && labels.at(e.second) == b) ||
                (labels.at(e.first) == b && labels.at(e.second) == a))
                return color;
        return -1;
    };
    CHECK(color_between("a", "c") == 8);
    CHECK(color_between("a", "pend_a_1") == 9);
    CHECK(color_between("a", "u_1_2") == 10);
    check_instance(d54);

    FamilyInstance d74 = build_gdd_odd(7, 4);
    CHECK(d74.expected_colors == 22);
    CHECK(*stats(d74.graph).diameter == 7);
    check_instance(d74);

    CHECK_THROWS_AS(build_gdd_odd(4, 3), std::invalid_argument);
    CHECK_THROWS_AS(build_gdd_odd(3, 3), std::invalid_argument);
    CHECK_THROWS_AS(build_gdd_odd(5, 2), std::invalid_argument);
}

TEST_CASE("exhaustive grids: every instance validates with its statistics") {
    for (int d = 2; d <= 10; ++d)
        check_instance(build_cycle_family(d));
    for (int delta = 2; delta <= 8; ++delta)
        check_instance(build_kbb(delta));
    for (int q = 1; q <= 3; ++q)
        check_instance(color_k2q(q));
    for (int d = 1; d <= 6; ++d)
        for (int q = 1; q <= 3; ++q)
            check_instance(build_gdq(d, q));
    for (int d : {4, 6, 8})
        for (int delta = 3; delta <= 6; ++delta)
            check_instance(build_gdd_even(d, delta));
    for (int delta = 3; delta <= 8; ++delta)
        check_instance(build_gdd_3(delta));
    for (int d : {5, 7})
        for (int delta = 3; delta <= 6; ++delta)
            check_instance(build_gdd_odd(d, delta));
}

TEST_CASE("gdq tightness gap depends only on q") {
    for (int d = 1; d <= 6; ++d)
        for (int q = 1; q <= 3; ++q) {
            FamilyInstance inst = build_gdq(d, q);
            BoundsReport b = bounds(inst.graph);
            int gap = b.general_diameter_bound - inst.expected_colors;
            int expect = d == 1 ? q - 1 : d == 2 ? q : q + 3;
            CHECK(gap == expect);
        }
}

TEST_CASE("bipartite families meet the bipartite bound exactly") {
    std::vector<FamilyInstance> insts;
    for (int d = 2; d <= 10; ++d)
        insts.push_back(build_cycle_family(d));
    for (int delta = 2; delta <= 8; ++delta)
        insts.push_back(build_kbb(delta));
    for (int d : {4, 6, 8})
        for (int delta = 3; delta <= 6; ++delta)
            insts.push_back(build_gdd_even(d, delta));
    for (int delta = 3; delta <= 8; ++delta)
        insts.push_back(build_gdd_3(delta));
    for (int d : {5, 7})
        for (int delta = 3; delta <= 6; ++delta)
            insts.push_back(build_gdd_odd(d, delta));
    for (const FamilyInstance& inst : insts) {
        BoundsReport b = bounds(inst.graph);
        REQUIRE(b.bipartite_diameter_bound.has_value());
        CHECK(inst.expected_colors == *b.bipartite_diameter_bound);
    }
}

TEST_CASE("regularity and structure of the bipartite families") {
    for (int d : {4, 6})
        for (int delta = 3; delta <= 5; ++delta)
            CHECK(is_regular(build_gdd_even(d, delta).graph, delta));
    for (int delta = 3; delta <= 6; ++delta)
        CHECK(is_regular(build_gdd_3(delta).graph, delta));

    // pendants give the odd family minimum degree 1 once delta > 3
    FamilyInstance odd = build_gdd_odd(5, 5);
    int min_deg = odd.graph.vertex_count();
    for (int v = 0; v < odd.graph.vertex_count(); ++v)
        min_deg = std::min(min_deg, odd.graph.degree(v));
    CHECK(min_deg == 1);
    CHECK(stats(odd.graph).max_degree == 5);

    // layered cliques are bipartite only for q=1
    CHECK(stats(build_gdq(3, 1).graph).bipartite);
    CHECK_FALSE(stats(build_gdq(3, 2).graph).bipartite);
    for (int d = 1; d <= 4; ++d)
        for (int q = 1; q <= 3; ++q)
            CHECK(stats(build_gdq(d, q).graph).connected);
}
