#include "potc/embedding.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace potc {

bool chords_cross(const std::vector<int>& order, const Edge& a, const Edge& b) {
    std::map<int, int> pos;
    for (size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
    auto position = [&](int v) {
        auto it = pos.find(v);
        if (it == pos.end())
            throw std::invalid_argument("chord endpoint " + std::to_string(v) +
                                        " not on the circle");
        return it->second;
    };
    int ai = position(a.first), aj = position(a.second);
    int bi = position(b.first), bj = position(b.second);
    if (a.first == b.first || a.first == b.second || a.second == b.first ||
        a.second == b.second)
        return false;
    int n = static_cast<int>(order.size());
    // Rotate so a.first sits at 0; the chords cross iff exactly one of b's
    // endpoints falls strictly between the endpoints of a.
    int span = (aj - ai + n) % n;
    int p = (bi - ai + n) % n;
    int q = (bj - ai + n) % n;
    return (p < span) != (q < span);
}

namespace {

int count_crossings(const EmbeddedBlock& block, const Edge& chord) {
    int count = 0;
    for (const Edge& other : block.chords)
        if (other != chord && chords_cross(block.order, chord, other)) ++count;
    return count;
}

}  // namespace

EmbeddingReport validate_embedding(const Graph& g, const CircularEmbedding& emb) {
    std::set<Edge> covered;
    for (size_t b = 0; b < emb.blocks.size(); ++b) {
        const EmbeddedBlock& block = emb.blocks[b];
        std::set<int> on_circle;
        for (int v : block.order) {
            if (v < 0 || v >= g.vertex_count())
                throw embedding_mismatch_error("circle lists unknown vertex " +
                                               std::to_string(v));
            if (!on_circle.insert(v).second)
                throw embedding_mismatch_error("circle repeats vertex " +
                                               std::to_string(v));
        }
        for (const Edge& e : block.chords) {
            Edge norm = make_edge(e.first, e.second);
            if (!g.has_edge(norm.first, norm.second))
                throw embedding_mismatch_error("embedded edge absent from graph");
            if (!on_circle.count(norm.first) || !on_circle.count(norm.second))
                throw embedding_mismatch_error("embedded edge leaves its circle");
            if (!covered.insert(norm).second)
                throw embedding_mismatch_error("edge embedded twice");
        }
    }
    if (static_cast<int>(covered.size()) != g.edge_count())
        throw embedding_mismatch_error("embedding misses some edges of the graph");

    // No block of g may straddle two circles; crossings inside one circle
    // restrict consistently to each block it carries.
    BlockDecomposition dec = blocks(g);
    std::map<Edge, int> circle_of;
    for (size_t b = 0; b < emb.blocks.size(); ++b)
        for (const Edge& e : emb.blocks[b].chords)
            circle_of[make_edge(e.first, e.second)] = static_cast<int>(b);
    for (const auto& block : dec.blocks) {
        int circle = circle_of.at(block.front());
        for (const Edge& e : block)
            if (circle_of.at(e) != circle)
                throw embedding_mismatch_error("graph block split across circles");
    }

    for (size_t b = 0; b < emb.blocks.size(); ++b) {
        for (const Edge& chord : emb.blocks[b].chords) {
            int crossings = count_crossings(emb.blocks[b], chord);
            if (crossings >= 2) {
                EmbeddingReport report;
                report.valid = false;
                report.block = static_cast<int>(b);
                report.chord = make_edge(chord.first, chord.second);
                report.crossings = crossings;
                return report;
            }
        }
    }
    return {};
}

CircularEmbedding induced_embedding(const CircularEmbedding& emb, const Graph& sub,
                                    const std::vector<int>& remap) {
    CircularEmbedding out;
    for (const EmbeddedBlock& block : emb.blocks) {
        EmbeddedBlock reduced;
        for (int v : block.order) {
            if (v < 0 || v >= static_cast<int>(remap.size())) continue;
            int nv = remap[v];
            if (nv >= 0) reduced.order.push_back(nv);
        }
        for (const Edge& e : block.chords) {
            if (e.first >= static_cast<int>(remap.size()) ||
                e.second >= static_cast<int>(remap.size()))
                continue;
            int u = remap[e.first], v = remap[e.second];
            if (u >= 0 && v >= 0 && sub.has_edge(u, v))
                reduced.chords.push_back(make_edge(u, v));
        }
        if (!reduced.chords.empty()) {
            std::sort(reduced.chords.begin(), reduced.chords.end());
            out.blocks.push_back(std::move(reduced));
        }
    }
    return out;
}

}  // namespace potc
