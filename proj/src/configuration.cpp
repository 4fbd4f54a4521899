#include "potc/configuration.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace potc {

std::string configuration_variant(const Configuration& c) {
    switch (c.index()) {
        case 0: return "C1";
        case 1: return "C2";
        case 2: return "C3";
        default: return "C4";
    }
}

std::vector<int> configuration_vertices(const Configuration& c) {
    if (const auto* w = std::get_if<DegreeTwoEdge>(&c)) return {w->u, w->v};
    if (const auto* w = std::get_if<LightFourCycle>(&c)) return {w->u, w->x, w->v, w->y};
    if (const auto* w = std::get_if<ChordedFourCycle>(&c))
        return {w->u, w->x, w->v, w->y};
    const auto& w = std::get<SevenPath>(c);
    return {w.xp, w.u, w.x, w.v, w.y, w.w, w.yp};
}

namespace {

std::optional<DegreeTwoEdge> find_c1(const Graph& g) {
    for (int u = 0; u < g.vertex_count(); ++u) {
        if (g.degree(u) != 2) continue;
        for (int v : g.neighbors(u))
            if (g.degree(v) <= 4) return DegreeTwoEdge{u, v};
    }
    return std::nullopt;
}

// Shared scan for the two 4-cycle variants; the predicate checks the
// degree/edge conditions on (u, v). Nested ascending loops emit witness
// tuples (u, x, v, y) in lexicographic order.
template <typename Pred>
std::optional<std::array<int, 4>> find_four_cycle(const Graph& g, Pred pred) {
    for (int u = 0; u < g.vertex_count(); ++u) {
        if (!pred.u_ok(u)) continue;
        for (int x : g.neighbors(u)) {
            for (int v : g.neighbors(x)) {
                if (v == u || !pred.v_ok(u, v)) continue;
                for (int y : g.neighbors(v)) {
                    if (y == x || y == u || !g.has_edge(y, u)) continue;
                    return std::array<int, 4>{u, x, v, y};
                }
            }
        }
    }
    return std::nullopt;
}

struct C2Pred {
    const Graph& g;
    bool u_ok(int u) const { return g.degree(u) == 2; }
    bool v_ok(int, int v) const { return g.degree(v) == 2; }
};

struct C3Pred {
    const Graph& g;
    bool u_ok(int u) const { return g.degree(u) == 3; }
    bool v_ok(int u, int v) const { return g.degree(v) == 3 && g.has_edge(u, v); }
};

std::optional<SevenPath> find_c4(const Graph& g) {
    std::optional<SevenPath> best;
    auto consider = [&](const SevenPath& cand) {
        auto key = [](const SevenPath& s) {
            return std::array<int, 7>{s.xp, s.u, s.x, s.v, s.y, s.w, s.yp};
        };
        if (!best || key(cand) < key(*best)) best = cand;
    };
    for (int xp = 0; xp < g.vertex_count(); ++xp) {
        for (int u : g.neighbors(xp)) {
            if (g.degree(u) != 2) continue;
            int x = g.neighbors(u)[0] == xp ? g.neighbors(u)[1] : g.neighbors(u)[0];
            if (g.degree(x) != 5 || !g.has_edge(x, xp)) continue;
            for (int v : g.neighbors(x)) {
                if (v == u || v == xp || g.degree(v) != 2) continue;
                int y = g.neighbors(v)[0] == x ? g.neighbors(v)[1] : g.neighbors(v)[0];
                if (g.degree(y) != 5 || y == xp || y == u) continue;
                if (!g.has_edge(x, y) || !g.has_edge(xp, y)) continue;
                for (int w : g.neighbors(y)) {
                    if (w == v || w == u || w == x || w == xp || g.degree(w) != 2)
                        continue;
                    int yp = g.neighbors(w)[0] == y ? g.neighbors(w)[1]
                                                   : g.neighbors(w)[0];
                    if (yp == xp || yp == u || yp == x || yp == v) continue;
                    if (!g.has_edge(y, yp) || !g.has_edge(x, yp)) continue;
                    if (xp < yp) consider({xp, u, x, v, y, w, yp});
                }
            }
        }
    }
    return best;
}

}  // namespace

std::optional<Configuration> find_configuration(const Graph& g) {
    if (g.vertex_count() == 0) return std::nullopt;
    if (g.min_degree() < 2)
        throw std::invalid_argument("configuration search needs minimum degree two");
    if (auto c1 = find_c1(g)) return Configuration{*c1};
    if (auto c2 = find_four_cycle(g, C2Pred{g}))
        return Configuration{LightFourCycle{(*c2)[0], (*c2)[1], (*c2)[2], (*c2)[3]}};
    if (auto c3 = find_four_cycle(g, C3Pred{g}))
        return Configuration{ChordedFourCycle{(*c3)[0], (*c3)[1], (*c3)[2], (*c3)[3]}};
    if (auto c4 = find_c4(g)) return Configuration{*c4};
    return std::nullopt;
}

namespace {

bool in_range(const Graph& g, const std::vector<int>& vs) {
    for (int v : vs)
        if (v < 0 || v >= g.vertex_count()) return false;
    return true;
}

bool all_distinct(std::vector<int> vs) {
    std::sort(vs.begin(), vs.end());
    return std::adjacent_find(vs.begin(), vs.end()) == vs.end();
}

bool four_cycle(const Graph& g, int u, int x, int v, int y) {
    return g.has_edge(u, x) && g.has_edge(x, v) && g.has_edge(v, y) &&
           g.has_edge(y, u);
}

}  // namespace

bool validate_configuration(const Graph& g, const Configuration& c) {
    std::vector<int> vs = configuration_vertices(c);
    if (!in_range(g, vs) || !all_distinct(vs)) return false;
    if (const auto* w = std::get_if<DegreeTwoEdge>(&c))
        return g.has_edge(w->u, w->v) && g.degree(w->u) == 2 && g.degree(w->v) <= 4;
    if (const auto* w = std::get_if<LightFourCycle>(&c))
        return four_cycle(g, w->u, w->x, w->v, w->y) && g.degree(w->u) == 2 &&
               g.degree(w->v) == 2;
    if (const auto* w = std::get_if<ChordedFourCycle>(&c))
        return four_cycle(g, w->u, w->x, w->v, w->y) && g.degree(w->u) == 3 &&
               g.degree(w->v) == 3 && g.has_edge(w->u, w->v);
    const auto& w = std::get<SevenPath>(c);
    bool path = g.has_edge(w.xp, w.u) && g.has_edge(w.u, w.x) && g.has_edge(w.x, w.v) &&
                g.has_edge(w.v, w.y) && g.has_edge(w.y, w.w) && g.has_edge(w.w, w.yp);
    bool degrees = g.degree(w.u) == 2 && g.degree(w.v) == 2 && g.degree(w.w) == 2 &&
                   g.degree(w.x) == 5 && g.degree(w.y) == 5;
    bool extras = g.has_edge(w.x, w.xp) && g.has_edge(w.y, w.yp) &&
                  g.has_edge(w.x, w.y) && g.has_edge(w.xp, w.y) &&
                  g.has_edge(w.x, w.yp);
    return path && degrees && extras;
}

}  // namespace potc
