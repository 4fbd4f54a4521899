#include <algorithm>
#include <numeric>
#include <vector>

#include "doctest.h"
#include "potc/configuration.hpp"
#include "potc/corpus.hpp"
#include "potc/embedding.hpp"
#include "potc/graph.hpp"
#include "potc/io.hpp"

using namespace potc;

namespace {

// Reference membership test: try every circular order of the vertices and
// accept when no chord is crossed twice. Exponential, for cross-checks only.
bool reference_member(const Graph& g) {
    const int k = g.vertex_count();
    if (k <= 3) return true;
    std::vector<int> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::vector<Edge> es = g.edges();
    do {
        bool good = true;
        for (std::size_t i = 0; i < es.size() && good; ++i) {
            int crossings = 0;
            for (std::size_t j = 0; j < es.size(); ++j)
                if (i != j && chords_cross(order, es[i], es[j])) ++crossings;
            if (crossings > 1) good = false;
        }
        if (good) return true;
        // first position pinned: rotations revisit the same drawing
    } while (std::next_permutation(order.begin() + 1, order.end()));
    return false;
}

// Every graph on exactly k labeled vertices, reduced to one per class.
std::vector<Graph> reference_classes(int k) {
    std::vector<Edge> cand;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) cand.push_back({i, j});
    std::vector<Graph> reps;
    for (unsigned mask = 0; mask < (1u << cand.size()); ++mask) {
        Graph g(k);
        for (std::size_t b = 0; b < cand.size(); ++b)
            if (mask & (1u << b)) g.add_edge(cand[b].first, cand[b].second);
        bool fresh = true;
        for (const Graph& r : reps)
            if (r.edge_count() == g.edge_count() && graphs_isomorphic(r, g)) {
                fresh = false;
                break;
            }
        if (fresh) reps.push_back(std::move(g));
    }
    return reps;
}

}  // namespace

TEST_CASE("class counts are frozen") {
    auto count = [](int n) {
        return enumerate_pseudo_outerplanar(n, [](const Graph&) { return true; });
    };
    CHECK(count(1) == 1);
    CHECK(count(5) == 49);
    CHECK(count(6) == 170);
    CHECK(count(7) == 720);
    CHECK(count(8) == 3901);
}

TEST_CASE("enumeration agrees with the reference search up to n = 5") {
    // gather the reference answer: all classes on exactly k vertices that
    // pass the brute-force drawing test
    std::vector<Graph> members;
    for (int k = 1; k <= 5; ++k)
        for (Graph& g : reference_classes(k))
            if (reference_member(g)) members.push_back(std::move(g));
    CHECK(members.size() == 49);

    std::vector<char> hit(members.size(), 0);
    long long produced = enumerate_pseudo_outerplanar(5, [&](const Graph& g) {
        int match = -1;
        for (std::size_t i = 0; i < members.size(); ++i) {
            if (members[i].vertex_count() != g.vertex_count()) continue;
            if (members[i].edge_count() != g.edge_count()) continue;
            if (graphs_isomorphic(members[i], g)) {
                match = static_cast<int>(i);
                break;
            }
        }
        REQUIRE(match >= 0);         // member of the class
        REQUIRE(hit[match] == 0);    // no repeats up to isomorphism
        hit[match] = 1;
        return true;
    });
    CHECK(produced == 49);
    CHECK(std::count(hit.begin(), hit.end(), 1) == 49);  // nothing missed
}

TEST_CASE("enumeration stops when the callback declines") {
    int seen = 0;
    long long produced = enumerate_pseudo_outerplanar(6, [&](const Graph&) {
        return ++seen < 10;
    });
    CHECK(seen == 10);
    CHECK(produced == 10);
}

TEST_CASE("generator output is deterministic and self-consistent") {
    GeneratorSpec spec;
    spec.n = 24;
    spec.seed = 1234;
    spec.density = 0.7;
    auto a = random_pseudo_outerplanar(spec);
    auto b = random_pseudo_outerplanar(spec);
    CHECK(a.graph == b.graph);
    CHECK(write_embedding(a.embedding) == write_embedding(b.embedding));
    CHECK(validate_embedding(a.graph, a.embedding).valid);
    CHECK(a.graph.vertex_count() == 24);
    CHECK(a.graph.min_degree() >= 2);  // the rim alone gives two

    SUBCASE("another seed moves the chords") {
        spec.seed = 99;
        auto c = random_pseudo_outerplanar(spec);
        CHECK(validate_embedding(c.graph, c.embedding).valid);
        CHECK_FALSE(c.graph == a.graph);
    }

    SUBCASE("without the rim the graph can be sparse") {
        GeneratorSpec bare;
        bare.n = 10;
        bare.outer_cycle = false;
        bare.density = 0.2;
        bare.seed = 5;
        auto c = random_pseudo_outerplanar(bare);
        CHECK(validate_embedding(c.graph, c.embedding).valid);
    }
}

TEST_CASE("maximal generation leaves no addable chord") {
    GeneratorSpec spec;
    spec.n = 12;
    spec.seed = 31;
    spec.maximal = true;
    auto out = random_pseudo_outerplanar(spec);
    REQUIRE(validate_embedding(out.graph, out.embedding).valid);
    REQUIRE(out.embedding.blocks.size() == 1);
    const auto& order = out.embedding.blocks[0].order;
    const auto edges = out.graph.edges();

    auto crossings_of = [&](const Edge& e) {
        int c = 0;
        for (const Edge& f : edges)
            if (f != e && chords_cross(order, e, f)) ++c;
        return c;
    };
    for (int u = 0; u < spec.n; ++u)
        for (int v = u + 1; v < spec.n; ++v) {
            if (out.graph.has_edge(u, v)) continue;
            // adding uv must either cross two chords or re-cross one
            Edge e{u, v};
            int crossed = 0;
            bool victim_busy = false;
            for (const Edge& f : edges)
                if (chords_cross(order, e, f)) {
                    ++crossed;
                    if (crossings_of(f) >= 1) victim_busy = true;
                }
            bool blocked = crossed >= 2 || victim_busy;
            CAPTURE(u);
            CAPTURE(v);
            CHECK(blocked);
        }
}

TEST_CASE("fixtures are wired up correctly") {
    const auto& names = fixture_names();
    CHECK(names.size() == 6);
    for (const auto& name : names) {
        CAPTURE(name);
        Fixture f = fixture(name);
        CHECK(f.graph.vertex_count() > 0);
        if (f.embedding) CHECK(validate_embedding(f.graph, *f.embedding).valid);
    }
    CHECK_THROWS(fixture("no-such-thing"));

    Graph k4 = fixture("K4").graph;
    CHECK(k4.vertex_count() == 4);
    CHECK(k4.edge_count() == 6);

    Graph k23 = fixture("K23").graph;
    CHECK(k23.vertex_count() == 5);
    CHECK(k23.edge_count() == 6);
    std::vector<int> degs;
    for (int v = 0; v < 5; ++v) degs.push_back(k23.degree(v));
    std::sort(degs.begin(), degs.end());
    CHECK(degs == std::vector<int>{2, 2, 2, 3, 3});

    CHECK(graphs_isomorphic(fixture("sharpness-witness").graph, k4));

    Graph gadget = fixture("claim4-gadget").graph;
    CHECK(gadget.vertex_count() == 12);
    CHECK(gadget.edge_count() == 22);
    CHECK(gadget.max_degree() == 6);
    auto cfg = find_configuration(gadget);
    REQUIRE(cfg.has_value());
    CHECK(configuration_variant(*cfg) == "C4");
}

TEST_CASE("isomorphism decision") {
    Graph a = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    Graph b = Graph::from_edges(4, {{0, 2}, {2, 1}, {1, 3}, {0, 3}});  // relabeled C4
    CHECK(graphs_isomorphic(a, b));
    CHECK(graphs_isomorphic(Graph(), Graph()));

    // same degree sequence, different structure
    Graph c6 = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
    Graph two_triangles =
        Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    CHECK_FALSE(graphs_isomorphic(c6, two_triangles));
    CHECK_FALSE(graphs_isomorphic(c6, Graph::from_edges(6, {{0, 1}})));
    CHECK_FALSE(graphs_isomorphic(Graph(3), Graph(4)));
}
