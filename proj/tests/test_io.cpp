#include <cstdio>
#include <sstream>
#include <string>

#include "doctest.h"
#include "potc/corpus.hpp"
#include "potc/dot.hpp"
#include "potc/io.hpp"

using namespace potc;

TEST_CASE("edge list round trip") {
    Graph g = fixture("K23").graph;
    std::string text = write_edge_list(g);
    std::istringstream in(text);
    Graph back = read_edge_list(in);
    CHECK(back == g);

    SUBCASE("header first, then one edge per line, endpoints ascending") {
        Graph p = Graph::from_edges(3, {{1, 2}, {0, 2}});
        CHECK(write_edge_list(p) == "3 2\n0 2\n1 2\n");
    }

    SUBCASE("whitespace layout is free-form") {
        std::istringstream odd("3  2\n\n0 2\t1 2");
        CHECK(read_edge_list(odd) == Graph::from_edges(3, {{0, 2}, {1, 2}}));
    }
}

TEST_CASE("edge list rejections") {
    auto reject = [](const std::string& text) {
        std::istringstream in(text);
        CHECK_THROWS_AS(read_edge_list(in), format_error);
    };
    reject("");
    reject("3");
    reject("-1 0");
    reject("3 2\n0 1");          // fewer edges than promised
    reject("2 1\n1 0");          // endpoints must ascend
    reject("2 1\n0 0");          // loop
    reject("2 1\n0 5");          // endpoint out of range
    reject("2 2\n0 1\n0 1");     // duplicate edge
    reject("2000000 0");         // header cap
    CHECK_THROWS_AS(read_edge_list_file("/nonexistent/x.txt"), format_error);
}

TEST_CASE("coloring JSON round trip") {
    TotalColoring c;
    c.palette_size = 5;
    c.vertex_colors = {1, 2, 0};
    c.set_edge({0, 1}, 4);
    c.set_edge({1, 2}, 3);
    std::string text = write_coloring(c);
    TotalColoring back = parse_coloring(text);
    CHECK(back == c);
    CHECK(back.vertex_color(2) == 0);

    SUBCASE("zero edge colors are dropped on write") {
        c.set_edge({0, 2}, 0);
        TotalColoring again = parse_coloring(write_coloring(c));
        CHECK(again.edge_colors.count({0, 2}) == 0);
    }

    SUBCASE("uncolored edges may be spelled out on read") {
        auto parsed = parse_coloring(
            R"({"k": 3, "vertices": [1], "edges": [[0, 1, 0]]})");
        CHECK(parsed.edge_color({0, 1}) == 0);
    }
}

TEST_CASE("coloring JSON rejections") {
    auto reject = [](const std::string& text) {
        CHECK_THROWS_AS(parse_coloring(text), format_error);
    };
    reject("not json");
    reject("[]");
    reject(R"({"k": 3, "vertices": []})");              // missing edges
    reject(R"({"k": "three", "vertices": [], "edges": []})");
    reject(R"({"k": -1, "vertices": [], "edges": []})");
    reject(R"({"k": 3, "vertices": [1.5], "edges": []})");
    reject(R"({"k": 3, "vertices": [], "edges": [[0, 1]]})");      // two fields
    reject(R"({"k": 3, "vertices": [], "edges": [[0, 0, 1]]})");   // loop
    reject(R"({"k": 3, "vertices": [], "edges": [[0,1,1],[0,1,2]]})");
}

TEST_CASE("embedding JSON round trip") {
    CircularEmbedding emb;
    emb.blocks.push_back({{0, 1, 2, 3}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}}});
    emb.blocks.push_back({{4, 5}, {{4, 5}}});
    CircularEmbedding back = parse_embedding(write_embedding(emb));
    REQUIRE(back.blocks.size() == 2);
    CHECK(back.blocks[0].order == emb.blocks[0].order);
    CHECK(back.blocks[0].chords == emb.blocks[0].chords);
    CHECK(back.blocks[1].order == emb.blocks[1].order);

    SUBCASE("rejections") {
        auto reject = [](const std::string& text) {
            CHECK_THROWS_AS(parse_embedding(text), format_error);
        };
        reject("{}");
        reject(R"({"blocks": [{}]})");
        reject(R"({"blocks": [{"order": [0], "edges": [[0]]}]})");
        reject(R"({"blocks": [{"order": [0], "edges": [[0, 0]]}]})");
    }
}

TEST_CASE("text files round trip bytes") {
    const std::string path = std::string(POTC_TEST_TMP) + "/io_probe.txt";
    const std::string payload = "line\nwith\x01 bytes\n";
    write_text_file(path, payload);
    CHECK(read_text_file(path) == payload);
    std::remove(path.c_str());
    CHECK_THROWS_AS(read_text_file(path), format_error);
}

TEST_CASE("digest matches the published reference values") {
    CHECK(fnv1a_digest("") == 14695981039346656037ull);
    CHECK(fnv1a_hex("") == "cbf29ce484222325");
    CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
    CHECK(fnv1a_hex("foobar") == "85944171f73967e8");
    CHECK(fnv1a_hex("3 2") == "56f20b18221abffc");
}

TEST_CASE("dot export is stable and reflects colors and layout") {
    Graph g = fixture("C4").graph;
    TotalColoring c;
    c.palette_size = 4;
    c.vertex_colors = {1, 2, 1, 3};
    c.set_edge({0, 1}, 4);
    CircularEmbedding emb;
    emb.blocks.push_back({{0, 1, 2, 3}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}});

    std::string plain = export_dot(g, nullptr, nullptr);
    CHECK(plain.find("graph") != std::string::npos);
    CHECK(plain.find("0 -- 1") != std::string::npos);

    std::string full = export_dot(g, &c, &emb);
    CHECK(full.find("palette") != std::string::npos);
    CHECK(full.find("pos=") != std::string::npos);
    CHECK(full == export_dot(g, &c, &emb));  // byte-stable
}
