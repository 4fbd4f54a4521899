#include <optional>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "potc/coloring.hpp"
#include "potc/configuration.hpp"
#include "potc/corpus.hpp"
#include "potc/engine.hpp"
#include "potc/graph.hpp"
#include "potc/suite.hpp"

using namespace potc;

namespace {

TotalColoring blank(const Graph& g, int palette) {
    TotalColoring c;
    c.palette_size = palette;
    c.vertex_colors.assign(g.vertex_count(), 0);
    return c;
}

// Elements of `after` outside `touched` must match `before` exactly.
void check_untouched(const Graph& g, const TotalColoring& before,
                     const TotalColoring& after, const std::vector<ElementRef>& touched) {
    auto is_touched = [&](const ElementRef& el) {
        for (const auto& t : touched)
            if (t == el) return true;
        return false;
    };
    for (int v = 0; v < g.vertex_count(); ++v) {
        ElementRef el = ElementRef::vertex(v);
        if (!is_touched(el)) CHECK(after.vertex_color(v) == before.vertex_color(v));
    }
    for (const Edge& e : g.edges()) {
        ElementRef el = ElementRef::edge(e);
        if (!is_touched(el)) CHECK(after.edge_color(e) == before.edge_color(e));
    }
}

}  // namespace

TEST_CASE("available_set lists the free colors of an element") {
    Graph g = fixture("C4").graph;
    auto c = blank(g, 6);
    c.set_vertex(1, 1);
    c.set_edge({1, 2}, 2);
    auto av = available_set(g, c, ElementRef::edge({0, 1}), 5);
    CHECK(av.element == ElementRef::edge({0, 1}));
    CHECK(av.colors == std::vector<int>{3, 4, 5, 6});
}

TEST_CASE("peel strips hanging trees lowest id first") {
    // triangle 2-3-4 with a path 0-1-2 hanging off it
    Graph g = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
    auto pr = peel_low_degree(g);
    CHECK(pr.core.vertex_count() == 3);
    CHECK(pr.core.edge_count() == 3);
    REQUIRE(pr.removed.size() == 2);
    CHECK(pr.removed[0].vertex == 0);
    CHECK(pr.removed[0].anchor == 1);
    CHECK(pr.removed[1].vertex == 1);
    CHECK(pr.removed[1].anchor == 2);
    CHECK(pr.remap == std::vector<int>{-1, -1, 0, 1, 2});

    SUBCASE("a forest peels away completely") {
        Graph tree = Graph::from_edges(4, {{0, 1}, {1, 2}, {1, 3}});
        auto all = peel_low_degree(tree);
        CHECK(all.core.vertex_count() == 0);
        CHECK(all.removed.size() == 4);
    }

    SUBCASE("a 2-core survives unchanged") {
        Graph k4 = fixture("K4").graph;
        auto none = peel_low_degree(k4);
        CHECK(none.core == k4);
        CHECK(none.removed.empty());
    }
}

TEST_CASE("local_exhaustive_extend") {
    Graph g = fixture("K4").graph;

    SUBCASE("zero elements returns the partial as-is") {
        auto c = blank(g, 6);
        c.set_vertex(0, 3);
        auto out = local_exhaustive_extend(g, c, {}, 5);
        REQUIRE(out.has_value());
        CHECK(out->vertex_color(0) == 3);
    }

    SUBCASE("completes a full coloring of K4") {
        auto c = blank(g, 6);
        std::vector<ElementRef> els;
        for (int v = 0; v < 4; ++v) els.push_back(ElementRef::vertex(v));
        for (const Edge& e : g.edges()) els.push_back(ElementRef::edge(e));
        REQUIRE(els.size() == 10);
        // ten elements exceed the cap; split into two rounds
        std::vector<ElementRef> first(els.begin(), els.begin() + 5);
        std::vector<ElementRef> rest(els.begin() + 5, els.end());
        auto half = local_exhaustive_extend(g, c, first, 5);
        REQUIRE(half.has_value());
        auto full = local_exhaustive_extend(g, *half, rest, 5);
        REQUIRE(full.has_value());
        CHECK(verify_total_coloring(g, *full).valid());
        CHECK(full->assigned_count() == 10);
    }

    SUBCASE("reports impossibility") {
        // vertex 0 of K4 sees colors 1..6 once its surroundings use all six
        auto c = blank(g, 6);
        c.set_vertex(1, 1);
        c.set_vertex(2, 2);
        c.set_vertex(3, 3);
        c.set_edge({0, 1}, 4);
        c.set_edge({0, 2}, 5);
        c.set_edge({0, 3}, 6);
        auto out = local_exhaustive_extend(g, c, {ElementRef::vertex(0)}, 5);
        CHECK_FALSE(out.has_value());
    }

    SUBCASE("more than nine elements throws") {
        auto c = blank(g, 6);
        std::vector<ElementRef> els;
        for (int v = 0; v < 4; ++v) els.push_back(ElementRef::vertex(v));
        for (const Edge& e : g.edges()) els.push_back(ElementRef::edge(e));
        CHECK_THROWS_AS(local_exhaustive_extend(g, c, els, 5), std::invalid_argument);
    }
}

TEST_CASE("degree-two edge extension recolors the low vertex last") {
    Graph g = fixture("C4").graph;
    auto partial = blank(g, 6);
    partial.set_vertex(1, 1);
    partial.set_vertex(2, 2);
    partial.set_vertex(3, 1);
    partial.set_vertex(0, 2);
    partial.set_edge({1, 2}, 3);
    partial.set_edge({2, 3}, 4);
    partial.set_edge({0, 3}, 3);

    auto out = extend_claim1(g, partial, DegreeTwoEdge{0, 1}, 5);
    CHECK(verify_total_coloring(g, out).valid());
    CHECK(out.edge_color({0, 1}) == 2);
    CHECK(out.vertex_color(0) == 4);
    check_untouched(g, partial, out,
                    {ElementRef::edge({0, 1}), ElementRef::vertex(0)});
}

TEST_CASE("light four-cycle extension colors the ring then the low pair") {
    Graph g = fixture("C4").graph;
    auto partial = blank(g, 6);
    partial.set_vertex(1, 1);
    partial.set_vertex(3, 1);

    auto out = extend_claim2(g, partial, LightFourCycle{0, 1, 2, 3}, 5);
    CHECK(verify_total_coloring(g, out).valid());
    CHECK(out.edge_color({0, 1}) == 2);
    CHECK(out.edge_color({1, 2}) == 3);
    CHECK(out.edge_color({0, 3}) == 3);
    CHECK(out.edge_color({2, 3}) == 2);
    CHECK(out.vertex_color(0) == 4);
    CHECK(out.vertex_color(2) == 4);
    CHECK(out.vertex_color(1) == 1);
    CHECK(out.vertex_color(3) == 1);
}

TEST_CASE("chorded four-cycle extension, direct branch") {
    Graph g = fixture("K4").graph;
    auto partial = blank(g, 6);
    // proper coloring of K4 minus the 0-2 chord
    partial.set_vertex(0, 1);
    partial.set_vertex(1, 2);
    partial.set_vertex(2, 3);
    partial.set_vertex(3, 4);
    partial.set_edge({0, 1}, 3);
    partial.set_edge({0, 3}, 2);
    partial.set_edge({1, 2}, 4);
    partial.set_edge({1, 3}, 5);
    partial.set_edge({2, 3}, 1);

    Claim3Trace trace;
    auto out = extend_claim3(g, partial, ChordedFourCycle{0, 1, 2, 3}, 5, nullptr,
                             &trace);
    CHECK(trace.branch == "direct");
    CHECK(verify_total_coloring(g, out).valid());
    // surroundings of 0-2 use {1,3,3,2,4,1}: smallest free color is 5
    CHECK(out.edge_color({0, 2}) == 5);
    check_untouched(g, partial, out, {ElementRef::edge({0, 2})});
}

TEST_CASE("chorded four-cycle extension, saturated branch") {
    Graph g = fixture("claim3-gadget").graph;
    auto partial = blank(g, 6);
    partial.vertex_colors = {5, 6, 4, 3, 1, 2, 1};
    partial.set_edge({0, 2}, 1);
    partial.set_edge({0, 3}, 2);
    partial.set_edge({1, 2}, 3);
    partial.set_edge({1, 3}, 4);
    partial.set_edge({2, 4}, 5);
    partial.set_edge({4, 5}, 3);
    partial.set_edge({2, 5}, 6);
    partial.set_edge({2, 6}, 2);

    Claim3Trace trace;
    auto out = extend_claim3(g, partial, ChordedFourCycle{0, 2, 1, 3}, 5, nullptr,
                             &trace);
    // all six colors surround the chord, and both ring partners of u are
    // pinned, so the procedure recolors v
    CHECK(trace.branch == "recolor_v1");
    CHECK(verify_total_coloring(g, out).valid());
    CHECK(out.vertex_color(1) == 1);
    CHECK(out.edge_color({0, 1}) == 6);
    check_untouched(g, partial, out,
                    {ElementRef::edge({0, 1}), ElementRef::vertex(1)});
}

TEST_CASE("chorded four-cycle extension separates equal chord endpoints") {
    Graph g = fixture("K4").graph;
    auto partial = blank(g, 6);
    // proper on K4 minus 0-2, but 0 and 2 share color 1
    partial.vertex_colors = {1, 2, 1, 3};
    partial.set_edge({0, 1}, 4);
    partial.set_edge({0, 3}, 5);
    partial.set_edge({1, 2}, 6);
    partial.set_edge({1, 3}, 1);
    partial.set_edge({2, 3}, 2);
    REQUIRE(verify_total_coloring(g.remove_edge(0, 2), partial).valid());

    Claim3Trace trace;
    auto out = extend_claim3(g, partial, ChordedFourCycle{0, 1, 2, 3}, 5, nullptr,
                             &trace);
    CHECK(trace.branch == "direct");
    CHECK(verify_total_coloring(g, out).valid());
    // u moves off the shared color before the chord is placed
    CHECK(out.vertex_color(0) == 6);
    CHECK(out.edge_color({0, 2}) == 3);
    check_untouched(g, partial, out,
                    {ElementRef::edge({0, 2}), ElementRef::vertex(0)});
}

TEST_CASE("seven-path extension, exchange branch") {
    Graph g = seven_path_host();
    auto partial = blank(g, 6);
    partial.vertex_colors = {4, 0, 2, 0, 5, 0, 3};
    partial.set_edge({0, 2}, 5);
    partial.set_edge({0, 4}, 6);
    partial.set_edge({2, 4}, 3);
    partial.set_edge({4, 6}, 2);
    partial.set_edge({2, 6}, 4);

    Claim4Trace trace;
    auto out = extend_claim4(g, partial, SevenPath{0, 1, 2, 3, 4, 5, 6}, 5, nullptr,
                             &trace);
    CHECK(trace.exchanged);
    CHECK_FALSE(trace.pendants_differ);
    CHECK(verify_total_coloring(g, out).valid());
    // both pendants demand the same color, which the x side needs too, so
    // xx' hands its color to ux'
    CHECK(out.edge_color({0, 2}) == 1);
    CHECK(out.edge_color({0, 1}) == 5);
    CHECK(out.edge_color({1, 2}) == 6);
    CHECK(out.edge_color({2, 3}) == 5);
    CHECK(out.edge_color({3, 4}) == 1);
    CHECK(out.edge_color({4, 5}) == 4);
    CHECK(out.edge_color({5, 6}) == 1);
    CHECK(out.vertex_color(1) == 1);
    CHECK(out.vertex_color(3) == 3);
    CHECK(out.vertex_color(5) == 2);
    // untouched elements keep their colors
    CHECK(out.vertex_color(0) == 4);
    CHECK(out.edge_color({2, 4}) == 3);
    CHECK(out.edge_color({4, 6}) == 2);
    CHECK(out.edge_color({2, 6}) == 4);
}

TEST_CASE("seven-path extension, distinct pendant colors") {
    Graph g = seven_path_host();
    auto partial = blank(g, 6);
    partial.vertex_colors = {4, 0, 2, 0, 5, 0, 1};  // yp now colored 1
    partial.set_edge({0, 2}, 5);
    partial.set_edge({0, 4}, 6);
    partial.set_edge({2, 4}, 3);
    partial.set_edge({4, 6}, 2);
    partial.set_edge({2, 6}, 4);

    Claim4Trace trace;
    auto out = extend_claim4(g, partial, SevenPath{0, 1, 2, 3, 4, 5, 6}, 5, nullptr,
                             &trace);
    CHECK(trace.pendants_differ);
    CHECK_FALSE(trace.exchanged);
    CHECK(verify_total_coloring(g, out).valid());
    // the near pendant color is reused on vx, the far side stays clear
    CHECK(out.edge_color({0, 1}) == 1);
    CHECK(out.edge_color({2, 3}) == 1);
    CHECK(out.edge_color({1, 2}) == 6);
    CHECK(out.edge_color({0, 2}) == 5);  // no exchange this time
}

TEST_CASE("full run on fixtures stays within the palette") {
    for (const char* name : {"K4", "K23", "C4", "claim4-gadget"}) {
        CAPTURE(name);
        Graph g = fixture(name).graph;
        int M = std::max(5, g.max_degree());
        EngineReport report;
        auto c = total_color(g, M, report);
        CHECK(verify_total_coloring(g, c).valid());
        CHECK(c.palette_size == M + 1);
        CHECK(c.assigned_count() == g.vertex_count() + g.edge_count());
        CHECK(report.divergences == 0);
        CHECK_FALSE(report.steps.empty());
    }
}

TEST_CASE("claim3-gadget exercises peel plus blocks in one run") {
    Graph g = fixture("claim3-gadget").graph;
    EngineReport report;
    auto c = total_color(g, 5, report);
    CHECK(verify_total_coloring(g, c).valid());
    bool peeled = false;
    for (const auto& s : report.steps)
        if (s.kind == StepKind::peel) peeled = true;
    CHECK(peeled);  // the pendant vertex comes off first
}

TEST_CASE("palette bound guardrails") {
    Graph g = fixture("K4").graph;
    CHECK_THROWS_AS(total_color(g, 4), std::invalid_argument);
    Graph big = fixture("claim4-gadget").graph;  // max degree six
    CHECK_THROWS_AS(total_color(big, 5), std::invalid_argument);
    CHECK_NOTHROW(total_color(big, 6));
}

TEST_CASE("non-members are rejected by the reduction") {
    Graph k5(5);
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) k5.add_edge(i, j);
    CHECK_THROWS_AS(total_color(k5, 5), not_pseudo_outerplanar_error);
    // the automatic front door may still color it exactly: max degree four
    // sends it to the exact search, which finds five colors
    auto c = total_color_auto(k5);
    CHECK(verify_total_coloring(k5, c).valid());
    CHECK(c.palette_size == 5);
}

TEST_CASE("automatic palette choice") {
    auto c4 = total_color_auto(fixture("C4").graph);
    CHECK(c4.palette_size == 4);  // exact search beats the reduction here
    CHECK(verify_total_coloring(fixture("C4").graph, c4).valid());

    Graph big = fixture("claim4-gadget").graph;
    auto c = total_color_auto(big);
    CHECK(c.palette_size == big.max_degree() + 1);
    CHECK(verify_total_coloring(big, c).valid());
}

TEST_CASE("merge_block_colorings reconciles clashing block palettes") {
    // bowtie: triangles 0-1-2 and 2-3-4 share cut vertex 2
    Graph g = Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
    auto dec = blocks(g);
    REQUIRE(dec.blocks.size() == 2);

    // color each triangle in isolation with deliberately clashing choices
    std::vector<TotalColoring> per_block(2);
    for (std::size_t b = 0; b < 2; ++b) {
        auto& c = per_block[b];
        c = blank(g, 6);
        const auto& vs = dec.block_vertices[b];
        c.set_vertex(vs[0], 1);
        c.set_vertex(vs[1], 2);
        c.set_vertex(vs[2], 3);
        c.set_edge(dec.blocks[b][0], 4);
        c.set_edge(dec.blocks[b][1], 5);
        c.set_edge(dec.blocks[b][2], 6);
        // make both sides disagree about the cut vertex and reuse edge colors
    }
    REQUIRE(per_block[0].vertex_color(2) != per_block[1].vertex_color(2));

    auto merged = merge_block_colorings(g, dec, per_block, 5);
    CHECK(verify_total_coloring(g, merged).valid());
    CHECK(merged.assigned_count() == g.vertex_count() + g.edge_count());

    SUBCASE("block count mismatch throws") {
        per_block.pop_back();
        CHECK_THROWS_AS(merge_block_colorings(g, dec, per_block, 5),
                        std::invalid_argument);
    }

    SUBCASE("isolated vertices get a default color") {
        Graph iso(3);
        iso.add_edge(0, 1);
        auto d2 = blocks(iso);
        std::vector<TotalColoring> pb(1);
        pb[0] = blank(iso, 6);
        pb[0].set_vertex(0, 1);
        pb[0].set_vertex(1, 2);
        pb[0].set_edge({0, 1}, 3);
        auto m = merge_block_colorings(iso, d2, pb, 5);
        CHECK(m.vertex_color(2) == 1);
        CHECK(verify_total_coloring(iso, m).valid());
    }
}
