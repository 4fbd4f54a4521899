#include "potc/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace potc {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw format_error(std::string("invalid JSON: ") + e.what());
    }
}

int as_int(const json& j, const char* what) {
    if (!j.is_number_integer())
        throw format_error(std::string(what) + " must be an integer");
    return j.get<int>();
}

}  // namespace

Graph read_edge_list(std::istream& in) {
    long long n = 0, m = 0;
    if (!(in >> n >> m)) throw format_error("edge list must start with \"n m\"");
    if (n < 0 || m < 0) throw format_error("negative counts in edge list header");
    if (n > 1000000 || m > 5000000) throw format_error("edge list header too large");
    Graph g(static_cast<int>(n));
    for (long long i = 0; i < m; ++i) {
        long long u = 0, v = 0;
        if (!(in >> u >> v))
            throw format_error("edge list ends after " + std::to_string(i) +
                               " of " + std::to_string(m) + " edges");
        if (u >= v) throw format_error("edges must be written as \"u v\" with u < v");
        if (u < 0 || v >= n) throw format_error("edge endpoint out of range");
        try {
            g.add_edge(static_cast<int>(u), static_cast<int>(v));
        } catch (const std::invalid_argument& e) {
            throw format_error(std::string("bad edge: ") + e.what());
        }
    }
    return g;
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw format_error("cannot open " + path);
    return read_edge_list(in);
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << " " << g.edge_count() << "\n";
    for (const Edge& e : g.edges()) out << e.first << " " << e.second << "\n";
    return out.str();
}

TotalColoring parse_coloring(const std::string& text) {
    json j = parse_json(text);
    if (!j.is_object() || !j.contains("k") || !j.contains("vertices") ||
        !j.contains("edges"))
        throw format_error("coloring needs fields k, vertices, edges");

    TotalColoring c;
    c.palette_size = as_int(j["k"], "k");
    if (c.palette_size < 0) throw format_error("k must be non-negative");

    if (!j["vertices"].is_array()) throw format_error("vertices must be an array");
    for (const auto& col : j["vertices"])
        c.vertex_colors.push_back(as_int(col, "vertex color"));

    if (!j["edges"].is_array()) throw format_error("edges must be an array");
    for (const auto& t : j["edges"]) {
        if (!t.is_array() || t.size() != 3)
            throw format_error("each edge entry must be [u, v, color]");
        int u = as_int(t[0], "edge endpoint");
        int v = as_int(t[1], "edge endpoint");
        int col = as_int(t[2], "edge color");
        try {
            Edge e = make_edge(u, v);
            if (c.edge_colors.count(e)) throw format_error("duplicate edge entry");
            if (col != 0) c.set_edge(e, col);
        } catch (const std::invalid_argument& e) {
            throw format_error(std::string("bad edge entry: ") + e.what());
        }
    }
    return c;
}

TotalColoring read_coloring_file(const std::string& path) {
    return parse_coloring(read_text_file(path));
}

std::string write_coloring(const TotalColoring& c) {
    json j;
    j["k"] = c.palette_size;
    j["vertices"] = c.vertex_colors;
    json edges = json::array();
    for (const auto& [e, col] : c.edge_colors)
        if (col != 0) edges.push_back({e.first, e.second, col});
    j["edges"] = std::move(edges);
    return j.dump(2) + "\n";
}

CircularEmbedding parse_embedding(const std::string& text) {
    json j = parse_json(text);
    if (!j.is_object() || !j.contains("blocks") || !j["blocks"].is_array())
        throw format_error("embedding needs a blocks array");
    CircularEmbedding emb;
    for (const auto& jb : j["blocks"]) {
        if (!jb.is_object() || !jb.contains("order") || !jb.contains("edges"))
            throw format_error("each block needs order and edges");
        EmbeddedBlock blk;
        if (!jb["order"].is_array()) throw format_error("order must be an array");
        for (const auto& v : jb["order"]) blk.order.push_back(as_int(v, "order entry"));
        if (!jb["edges"].is_array()) throw format_error("edges must be an array");
        for (const auto& t : jb["edges"]) {
            if (!t.is_array() || t.size() != 2)
                throw format_error("each chord must be [u, v]");
            try {
                blk.chords.push_back(
                    make_edge(as_int(t[0], "chord endpoint"), as_int(t[1], "chord endpoint")));
            } catch (const std::invalid_argument& e) {
                throw format_error(std::string("bad chord: ") + e.what());
            }
        }
        emb.blocks.push_back(std::move(blk));
    }
    return emb;
}

CircularEmbedding read_embedding_file(const std::string& path) {
    return parse_embedding(read_text_file(path));
}

std::string write_embedding(const CircularEmbedding& emb) {
    json blocks = json::array();
    for (const auto& blk : emb.blocks) {
        json jb;
        jb["order"] = blk.order;
        json chords = json::array();
        for (const Edge& e : blk.chords) chords.push_back({e.first, e.second});
        jb["edges"] = std::move(chords);
        blocks.push_back(std::move(jb));
    }
    json j;
    j["blocks"] = std::move(blocks);
    return j.dump(2) + "\n";
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw format_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw format_error("cannot write " + path);
    out << text;
    if (!out) throw format_error("write failed for " + path);
}

std::uint64_t fnv1a_digest(const std::string& text) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return h;
}

std::string fnv1a_hex(const std::string& text) {
    static const char* digits = "0123456789abcdef";
    std::uint64_t h = fnv1a_digest(text);
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

}  // namespace potc
