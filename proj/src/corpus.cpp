#include "potc/corpus.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace potc {

namespace {

// Two chords of a circle cross iff their endpoints interleave. Positions
// here are vertex ids, since the circle order is always 0..n-1.
bool ids_cross(const Edge& a, const Edge& b) {
    if (a.first == b.first || a.first == b.second || a.second == b.first ||
        a.second == b.second)
        return false;
    bool c_in = a.first < b.first && b.first < a.second;
    bool d_in = a.first < b.second && b.second < a.second;
    return c_in != d_in;
}

// Embedding of a circle-drawn graph, one circle per block, each circle
// keeping the global vertex order.
CircularEmbedding per_block_embedding(const Graph& g) {
    CircularEmbedding emb;
    BlockDecomposition dec = blocks(g);
    for (std::size_t b = 0; b < dec.blocks.size(); ++b) {
        EmbeddedBlock blk;
        blk.order = dec.block_vertices[b];  // sorted = circle order restricted
        blk.chords = dec.blocks[b];
        emb.blocks.push_back(std::move(blk));
    }
    return emb;
}

// ---- Exhaustive enumeration ------------------------------------------------

// All C(k,2) chords of a k-point circle, their pairwise crossing masks, and
// the edge permutations induced by the 2k-1 non-identity symmetries of the
// circle. Everything fits in 64-bit masks (k <= 9 gives m <= 36).
struct CircleTables {
    int k = 0;
    int m = 0;
    std::array<std::array<int, 9>, 9> index{};
    std::array<Edge, 36> chord{};
    std::array<std::uint64_t, 36> cross{};
    std::vector<std::array<std::uint8_t, 36>> sym;

    explicit CircleTables(int kk) : k(kk) {
        for (int a = 0; a < k; ++a)
            for (int b = a + 1; b < k; ++b) {
                index[a][b] = m;
                chord[m] = {a, b};
                ++m;
            }
        for (int e = 0; e < m; ++e)
            for (int f = 0; f < m; ++f)
                if (ids_cross(chord[e], chord[f]))
                    cross[e] |= std::uint64_t{1} << f;

        for (int reflect = 0; reflect < 2; ++reflect)
            for (int rot = 0; rot < k; ++rot) {
                if (reflect == 0 && rot == 0) continue;  // identity
                std::array<std::uint8_t, 36> map{};
                for (int e = 0; e < m; ++e) {
                    int a = chord[e].first, b = chord[e].second;
                    int ia = reflect ? (k - a) % k : a;
                    int ib = reflect ? (k - b) % k : b;
                    ia = (ia + rot) % k;
                    ib = (ib + rot) % k;
                    map[e] = static_cast<std::uint8_t>(
                        index[std::min(ia, ib)][std::max(ia, ib)]);
                }
                sym.push_back(map);
            }
    }
};

// Isomorphism over adjacency rows stored as bitmasks, one row per vertex.
// Vertices are matched in descending degree order with degree-compatible
// candidates only.
bool rows_isomorphic(const std::vector<std::uint64_t>& a,
                     const std::vector<std::uint64_t>& b) {
    const int n = static_cast<int>(a.size());
    std::vector<int> deg_a(n), deg_b(n);
    for (int v = 0; v < n; ++v) {
        deg_a[v] = std::popcount(a[v]);
        deg_b[v] = std::popcount(b[v]);
    }
    {
        auto sa = deg_a, sb = deg_b;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }

    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[v] = v;
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        if (deg_a[x] != deg_a[y]) return deg_a[x] > deg_a[y];
        return x < y;
    });

    std::vector<int> map_ab(n, -1);
    std::uint64_t used = 0;

    std::function<bool(int)> place = [&](int pos) {
        if (pos == n) return true;
        int va = order[pos];
        for (int vb = 0; vb < n; ++vb) {
            if (used & (std::uint64_t{1} << vb)) continue;
            if (deg_b[vb] != deg_a[va]) continue;
            bool ok = true;
            for (int q = 0; q < pos; ++q) {
                int ua = order[q], ub = map_ab[ua];
                bool adj_a = (a[va] >> ua) & 1;
                bool adj_b = (b[vb] >> ub) & 1;
                if (adj_a != adj_b) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            map_ab[va] = vb;
            used |= std::uint64_t{1} << vb;
            if (place(pos + 1)) return true;
            used &= ~(std::uint64_t{1} << vb);
            map_ab[va] = -1;
        }
        return false;
    };
    return place(0);
}

std::vector<std::uint64_t> rows_of_mask(const CircleTables& ct, std::uint64_t mask) {
    std::vector<std::uint64_t> rows(ct.k, 0);
    for (std::uint64_t rest = mask; rest;) {
        int e = std::countr_zero(rest);
        rest &= rest - 1;
        rows[ct.chord[e].first] |= std::uint64_t{1} << ct.chord[e].second;
        rows[ct.chord[e].second] |= std::uint64_t{1} << ct.chord[e].first;
    }
    return rows;
}

// Cheap isomorphism invariant: degree sequence, edge degree pairs and
// per-vertex neighbor degree multisets, hashed. Equal for isomorphic
// graphs; collisions between distinct classes are resolved by the full
// test above.
std::uint64_t invariant_key(const CircleTables& ct, std::uint64_t mask,
                            const std::vector<std::uint64_t>& rows) {
    std::array<int, 9> deg{};
    for (int v = 0; v < ct.k; ++v) deg[v] = std::popcount(rows[v]);

    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&](std::uint64_t x) {
        h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    };
    mix(static_cast<std::uint64_t>(ct.k));
    mix(static_cast<std::uint64_t>(std::popcount(mask)));

    std::array<int, 9> sd{};
    for (int v = 0; v < ct.k; ++v) sd[v] = deg[v];
    std::sort(sd.begin(), sd.begin() + ct.k);
    for (int v = 0; v < ct.k; ++v) mix(static_cast<std::uint64_t>(sd[v]));

    // Vertex signatures: own degree plus sorted neighbor degrees.
    std::array<std::uint64_t, 9> sig{};
    for (int v = 0; v < ct.k; ++v) {
        std::array<int, 9> nd{};
        int t = 0;
        for (std::uint64_t rest = rows[v]; rest;) {
            int u = std::countr_zero(rest);
            rest &= rest - 1;
            nd[t++] = deg[u];
        }
        std::sort(nd.begin(), nd.begin() + t);
        std::uint64_t s = 0x100000001b3ull * (deg[v] + 1);
        for (int i = 0; i < t; ++i) s = s * 31 + static_cast<std::uint64_t>(nd[i]);
        sig[v] = s;
    }
    std::sort(sig.begin(), sig.begin() + ct.k);
    for (int v = 0; v < ct.k; ++v) mix(sig[v]);

    // Triangle count separates most remaining near-misses.
    int triangles = 0;
    for (int v = 0; v < ct.k; ++v)
        for (std::uint64_t rest = rows[v] >> (v + 1) << (v + 1); rest;) {
            int u = std::countr_zero(rest);
            rest &= rest - 1;
            if (u > v) triangles += std::popcount(rows[v] & rows[u]);
        }
    mix(static_cast<std::uint64_t>(triangles));
    return h;
}

// One vertex count's worth of enumeration state: stream every subset whose
// mask is minimal in its dihedral orbit, then keep one representative per
// isomorphism class.
class KEnumerator {
public:
    KEnumerator(int k, const std::function<bool(const Graph&)>& yield)
        : ct_(k), yield_(yield), tmask_(ct_.sym.size(), 0) {}

    // Returns false when the consumer asked to stop.
    bool run() { return walk(0, 0, 0); }

    long long yielded() const { return yielded_; }

private:
    bool emit(std::uint64_t chosen) {
        for (std::uint64_t tm : tmask_)
            if (tm < chosen) return true;  // not the orbit representative

        auto rows = rows_of_mask(ct_, chosen);
        std::uint64_t key = invariant_key(ct_, chosen, rows);
        auto& bucket = classes_[key];
        for (std::uint32_t rep : bucket)
            if (rows_isomorphic(rows, rows_of_mask(ct_, rep_masks_[rep])))
                return true;  // seen this graph already
        bucket.push_back(static_cast<std::uint32_t>(rep_masks_.size()));
        rep_masks_.push_back(chosen);

        Graph g(ct_.k);
        for (std::uint64_t rest = chosen; rest;) {
            int e = std::countr_zero(rest);
            rest &= rest - 1;
            g.add_edge(ct_.chord[e].first, ct_.chord[e].second);
        }
        ++yielded_;
        return yield_(g);
    }

    bool walk(int start, std::uint64_t chosen, std::uint64_t crossed) {
        if (!emit(chosen)) return false;
        for (int f = start; f < ct_.m; ++f) {
            const std::uint64_t bit = std::uint64_t{1} << f;
            std::uint64_t hits = chosen & ct_.cross[f];
            std::uint64_t crossed_next = crossed;
            if (hits) {
                if (hits & (hits - 1)) continue;   // would cross two chords
                if (hits & crossed) continue;      // its victim is saturated
                crossed_next |= hits | bit;
            }
            for (std::size_t s = 0; s < tmask_.size(); ++s)
                tmask_[s] ^= std::uint64_t{1} << ct_.sym[s][f];
            if (!walk(f + 1, chosen | bit, crossed_next)) return false;
            for (std::size_t s = 0; s < tmask_.size(); ++s)
                tmask_[s] ^= std::uint64_t{1} << ct_.sym[s][f];
        }
        return true;
    }

    CircleTables ct_;
    const std::function<bool(const Graph&)>& yield_;
    std::vector<std::uint64_t> tmask_;
    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> classes_;
    std::vector<std::uint64_t> rep_masks_;
    long long yielded_ = 0;
};

}  // namespace

GeneratedGraph random_pseudo_outerplanar(const GeneratorSpec& spec) {
    if (spec.n < 1) throw std::invalid_argument("need at least one vertex");
    const int n = spec.n;
    Graph g(n);

    std::vector<Edge> accepted;
    std::vector<char> crossed;  // parallel to accepted
    auto try_add = [&](const Edge& cand) {
        int hit = -1;
        for (std::size_t i = 0; i < accepted.size(); ++i) {
            if (!ids_cross(cand, accepted[i])) continue;
            if (hit >= 0) return;            // crosses two present chords
            if (crossed[i]) return;          // victim already crossed
            hit = static_cast<int>(i);
        }
        if (hit >= 0) crossed[hit] = 1;
        accepted.push_back(cand);
        crossed.push_back(hit >= 0);
        g.add_edge(cand.first, cand.second);
    };

    std::vector<Edge> candidates;
    if (spec.outer_cycle && n >= 3) {
        for (int v = 0; v < n; ++v) try_add(make_edge(v, (v + 1) % n));
        for (int a = 0; a < n; ++a)
            for (int b = a + 2; b < n; ++b)
                if (!(a == 0 && b == n - 1)) candidates.push_back({a, b});
    } else {
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) candidates.push_back({a, b});
    }

    std::mt19937 rng(static_cast<std::uint32_t>(spec.seed ^ (spec.seed >> 32)));
    // Fisher-Yates with modulo draws: bit-identical across platforms.
    for (std::size_t i = candidates.size(); i > 1; --i)
        std::swap(candidates[i - 1], candidates[rng() % i]);

    std::size_t attempts = candidates.size();
    if (!spec.maximal) {
        double d = std::clamp(spec.density, 0.0, 1.0);
        attempts = static_cast<std::size_t>(d * candidates.size() + 0.5);
    }
    for (std::size_t i = 0; i < attempts; ++i) try_add(candidates[i]);

    GeneratedGraph out{std::move(g), {}};
    out.embedding = per_block_embedding(out.graph);
    if (!validate_embedding(out.graph, out.embedding).valid)
        throw std::logic_error("generator produced an invalid drawing");
    return out;
}

long long enumerate_pseudo_outerplanar(
    int n, const std::function<bool(const Graph&)>& yield) {
    if (n < 0) throw std::invalid_argument("vertex bound must be non-negative");
    if (n > 9) throw std::invalid_argument("enumeration capped at nine vertices");
    long long total = 0;
    for (int k = 1; k <= n; ++k) {
        KEnumerator en(k, yield);
        bool keep_going = en.run();
        total += en.yielded();
        if (!keep_going) break;
    }
    return total;
}

bool graphs_isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
        return false;
    if (a.vertex_count() > 64)
        throw std::invalid_argument("isomorphism test capped at 64 vertices");
    auto rows = [](const Graph& g) {
        std::vector<std::uint64_t> r(g.vertex_count(), 0);
        for (const Edge& e : g.edges()) {
            r[e.first] |= std::uint64_t{1} << e.second;
            r[e.second] |= std::uint64_t{1} << e.first;
        }
        return r;
    };
    return rows_isomorphic(rows(a), rows(b));
}

namespace {

Fixture make_k4() {
    Graph g = Graph::from_edges(
        4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CircularEmbedding emb;
    emb.blocks.push_back(
        {{0, 1, 2, 3}, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}});
    return {std::move(g), std::move(emb)};
}

Fixture make_k23() {
    // Parts {0,1} and {2,3,4}; circle order 0,2,1,3,4 has the single
    // crossing {0,3}x{1,4}.
    Graph g = Graph::from_edges(
        5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
    CircularEmbedding emb;
    emb.blocks.push_back(
        {{0, 2, 1, 3, 4}, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}}});
    return {std::move(g), std::move(emb)};
}

Fixture make_c4() {
    Graph g = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    CircularEmbedding emb;
    emb.blocks.push_back({{0, 1, 2, 3}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}});
    return {std::move(g), std::move(emb)};
}

// A crossing-free host for the chorded 4-cycle pattern: the cycle 0-2-1-3
// with chord 0-1 (so vertices 0 and 1 have degree three), vertex 2 pushed
// to degree five by a pendant triangle 2-4-5 and a leaf 6.
Fixture make_claim3_gadget() {
    Graph g = Graph::from_edges(7, {{0, 1},
                                    {0, 2},
                                    {0, 3},
                                    {1, 2},
                                    {1, 3},
                                    {2, 4},
                                    {2, 5},
                                    {2, 6},
                                    {4, 5}});
    CircularEmbedding emb;
    emb.blocks.push_back({{1, 3, 0, 2}, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}});
    emb.blocks.push_back({{2, 4, 5}, {{2, 4}, {2, 5}, {4, 5}}});
    emb.blocks.push_back({{2, 6}, {{2, 6}}});
    return {std::move(g), std::move(emb)};
}

// Six hubs 0..5 on a ring, a degree-two connector between consecutive hubs
// (6+i joins i and i+1), and four skip chords {5,1},{0,2},{2,4},{3,5}.
// Hubs 0,1,3,4 end up with degree five, hubs 2,5 with degree six, so the
// only reducible pattern present is the seven-path one.
Fixture make_claim4_gadget() {
    std::vector<Edge> edges;
    for (int i = 0; i < 6; ++i) {
        edges.push_back(make_edge(i, (i + 1) % 6));       // ring
        edges.push_back(make_edge(i, 6 + i));             // hub to connector
        edges.push_back(make_edge((i + 1) % 6, 6 + i));   // connector onward
    }
    edges.push_back(make_edge(5, 1));
    edges.push_back(make_edge(0, 2));
    edges.push_back(make_edge(2, 4));
    edges.push_back(make_edge(3, 5));
    Graph g = Graph::from_edges(12, edges);

    // Alternating hubs and connectors around the circle leaves exactly the
    // crossings {5,1}x{0,2} and {2,4}x{3,5}.
    CircularEmbedding emb;
    std::vector<int> order;
    for (int i = 0; i < 6; ++i) {
        order.push_back(i);
        order.push_back(6 + i);
    }
    std::vector<Edge> chords = g.edges();
    emb.blocks.push_back({std::move(order), std::move(chords)});
    return {std::move(g), std::move(emb)};
}

}  // namespace

Fixture fixture(const std::string& name) {
    if (name == "K4") return make_k4();
    if (name == "K23") return make_k23();
    if (name == "C4") return make_c4();
    if (name == "claim3-gadget") return make_claim3_gadget();
    if (name == "claim4-gadget") return make_claim4_gadget();
    if (name == "sharpness-witness") return make_k4();
    throw std::invalid_argument("unknown fixture: " + name);
}

const std::vector<std::string>& fixture_names() {
    static const std::vector<std::string> names = {
        "K4", "K23", "C4", "claim3-gadget", "claim4-gadget", "sharpness-witness"};
    return names;
}

}  // namespace potc
