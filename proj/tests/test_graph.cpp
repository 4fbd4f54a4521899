#include <algorithm>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "potc/graph.hpp"

using namespace potc;

TEST_CASE("make_edge normalizes and rejects garbage") {
    CHECK(make_edge(3, 1) == Edge{1, 3});
    CHECK(make_edge(0, 7) == Edge{0, 7});
    CHECK_THROWS_AS(make_edge(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(make_edge(-1, 0), std::invalid_argument);
}

TEST_CASE("graph construction and basic queries") {
    Graph g = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 4);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 0));
    CHECK_FALSE(g.has_edge(0, 2));
    CHECK(g.degree(0) == 2);
    CHECK(g.max_degree() == 2);
    CHECK(g.min_degree() == 2);
    CHECK(g.neighbors(0) == std::vector<int>{1, 3});
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}, {2, 3}});

    SUBCASE("duplicate and loop edges are rejected") {
        CHECK_THROWS(g.add_edge(0, 1));
        CHECK_THROWS(g.add_edge(1, 0));
        CHECK_THROWS(g.add_edge(2, 2));
        CHECK_THROWS(g.add_edge(3, 4));
    }

    SUBCASE("adjacency stays sorted after insertion") {
        g.add_edge(0, 2);
        CHECK(g.neighbors(0) == std::vector<int>{1, 2, 3});
        CHECK(g.neighbors(2) == std::vector<int>{0, 1, 3});
    }

    SUBCASE("empty graph degrees") {
        Graph empty;
        CHECK(empty.vertex_count() == 0);
        CHECK(empty.max_degree() == 0);
        CHECK(empty.min_degree() == 0);
    }

    SUBCASE("isolated vertices count toward min_degree") {
        Graph h(3);
        h.add_edge(0, 1);
        CHECK(h.min_degree() == 0);
        CHECK(h.max_degree() == 1);
    }
}

TEST_CASE("remove_edge returns a copy and validates") {
    Graph g = Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
    Graph h = g.remove_edge(2, 0);
    CHECK(g.edge_count() == 3);  // original untouched
    CHECK(h.edge_count() == 2);
    CHECK_FALSE(h.has_edge(0, 2));
    CHECK(h.has_edge(0, 1));
    CHECK_THROWS(h.remove_edge(0, 2));
}

TEST_CASE("remove_vertices compacts ids via remap") {
    // path 0-1-2-3-4, drop 1 and 3
    Graph g = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    auto del = g.remove_vertices({3, 1});
    CHECK(del.graph.vertex_count() == 3);
    CHECK(del.graph.edge_count() == 0);
    CHECK(del.remap == std::vector<int>{0, -1, 1, -1, 2});

    SUBCASE("surviving edges follow the remap") {
        Graph h = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
        auto d2 = h.remove_vertices({0});
        CHECK(d2.remap == std::vector<int>{-1, 0, 1, 2});
        CHECK(d2.graph.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
    }
}

TEST_CASE("block decomposition of a bowtie") {
    // two triangles glued at vertex 2
    Graph g = Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
    auto dec = blocks(g);
    REQUIRE(dec.blocks.size() == 2);
    CHECK(dec.cut_vertices == std::vector<int>{2});
    // every edge lands in exactly one block
    int total = 0;
    for (const auto& b : dec.blocks) total += static_cast<int>(b.size());
    CHECK(total == g.edge_count());
    for (const Edge& e : g.edges()) CHECK(dec.block_of_edge(e) != -1);
    CHECK(dec.block_of_edge({0, 3}) == -1);
    // the cut vertex belongs to both blocks
    REQUIRE(dec.blocks_of_cut.size() == 1);
    CHECK(dec.blocks_of_cut[0].size() == 2);
    for (const auto& cuts : dec.cuts_of_block) CHECK(cuts == std::vector<int>{2});
}

TEST_CASE("bridges are their own blocks") {
    // triangle 0-1-2, bridge 2-3, pendant edge 3-4
    Graph g = Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}});
    auto dec = blocks(g);
    CHECK(dec.blocks.size() == 3);
    CHECK(dec.cut_vertices == std::vector<int>{2, 3});
    std::vector<int> sizes;
    for (const auto& b : dec.blocks) sizes.push_back(static_cast<int>(b.size()));
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<int>{1, 1, 3});
}

TEST_CASE("2-connected graph is one block with no cut vertices") {
    Graph g = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}});
    auto dec = blocks(g);
    CHECK(dec.blocks.size() == 1);
    CHECK(dec.cut_vertices.empty());
    CHECK(dec.block_vertices[0] == std::vector<int>{0, 1, 2, 3});
}
