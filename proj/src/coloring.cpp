#include "potc/coloring.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace potc {

int TotalColoring::vertex_color(int v) const {
    if (v < 0 || v >= static_cast<int>(vertex_colors.size()))
        throw std::invalid_argument("vertex id outside coloring");
    return vertex_colors[v];
}

int TotalColoring::edge_color(const Edge& e) const {
    auto it = edge_colors.find(e);
    return it == edge_colors.end() ? 0 : it->second;
}

int TotalColoring::color_of(const ElementRef& el) const {
    return el.is_edge ? edge_color({el.u, el.v}) : vertex_color(el.u);
}

void TotalColoring::set_vertex(int v, int color) {
    if (v < 0 || v >= static_cast<int>(vertex_colors.size()))
        throw std::invalid_argument("vertex id outside coloring");
    vertex_colors[v] = color;
}

void TotalColoring::set_edge(const Edge& e, int color) {
    edge_colors[make_edge(e.first, e.second)] = color;
}

void TotalColoring::set(const ElementRef& el, int color) {
    if (el.is_edge)
        set_edge({el.u, el.v}, color);
    else
        set_vertex(el.u, color);
}

int TotalColoring::assigned_count() const {
    int n = 0;
    for (int c : vertex_colors)
        if (c > 0) ++n;
    for (const auto& [e, c] : edge_colors)
        if (c > 0) ++n;
    return n;
}

int TotalColoring::distinct_colors_used() const {
    std::set<int> used;
    for (int c : vertex_colors)
        if (c > 0) used.insert(c);
    for (const auto& [e, c] : edge_colors)
        if (c > 0) used.insert(c);
    return static_cast<int>(used.size());
}

VerifyResult verify_total_coloring(const Graph& g, const TotalColoring& c) {
    if (static_cast<int>(c.vertex_colors.size()) != g.vertex_count())
        throw std::invalid_argument("coloring sized for a different graph");
    VerifyResult res;
    auto out_of_range = [&](int color) { return color < 0 || color > c.palette_size; };

    for (int v = 0; v < g.vertex_count(); ++v)
        if (out_of_range(c.vertex_colors[v]))
            res.violations.push_back(
                {ViolationKind::color_out_of_range, ElementRef::vertex(v), {}});

    for (const auto& [e, color] : c.edge_colors) {
        if (!g.has_edge(e.first, e.second)) {
            if (color > 0)
                res.violations.push_back(
                    {ViolationKind::unknown_element, ElementRef::edge(e), {}});
            continue;
        }
        if (out_of_range(color))
            res.violations.push_back(
                {ViolationKind::color_out_of_range, ElementRef::edge(e), {}});
    }

    for (const Edge& e : g.edges()) {
        int cu = c.vertex_colors[e.first];
        int cv = c.vertex_colors[e.second];
        int ce = c.edge_color(e);
        if (cu > 0 && cu == cv)
            res.violations.push_back({ViolationKind::adjacent_vertices,
                                      ElementRef::vertex(e.first),
                                      ElementRef::vertex(e.second)});
        if (ce > 0 && ce == cu)
            res.violations.push_back({ViolationKind::edge_endpoint,
                                      ElementRef::edge(e),
                                      ElementRef::vertex(e.first)});
        if (ce > 0 && ce == cv)
            res.violations.push_back({ViolationKind::edge_endpoint,
                                      ElementRef::edge(e),
                                      ElementRef::vertex(e.second)});
    }

    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto& nb = g.neighbors(v);
        for (size_t i = 0; i < nb.size(); ++i) {
            Edge ei = make_edge(v, nb[i]);
            int ci = c.edge_color(ei);
            if (ci == 0) continue;
            for (size_t j = i + 1; j < nb.size(); ++j) {
                Edge ej = make_edge(v, nb[j]);
                if (c.edge_color(ej) == ci)
                    res.violations.push_back({ViolationKind::incident_edges,
                                              ElementRef::edge(ei),
                                              ElementRef::edge(ej)});
            }
        }
    }
    return res;
}

std::uint64_t used_color_mask(const Graph& g, const TotalColoring& c,
                              const ElementRef& el) {
    std::uint64_t mask = 0;
    auto add = [&](int color) {
        if (color > 0) {
            if (color > 63) throw std::invalid_argument("palette too large for mask");
            mask |= std::uint64_t{1} << color;
        }
    };
    if (el.is_edge) {
        Edge e = make_edge(el.u, el.v);
        add(c.vertex_color(e.first));
        add(c.vertex_color(e.second));
        for (int end : {e.first, e.second})
            for (int w : g.neighbors(end)) {
                Edge f = make_edge(end, w);
                if (f != e) add(c.edge_color(f));
            }
    } else {
        for (int w : g.neighbors(el.u)) {
            add(c.vertex_color(w));
            add(c.edge_color(make_edge(el.u, w)));
        }
    }
    return mask;
}

bool element_proper(const Graph& g, const TotalColoring& c, const ElementRef& el) {
    int color = c.color_of(el);
    if (color == 0) return true;
    if (color < 0 || color > 63) return false;
    return (used_color_mask(g, c, el) & (std::uint64_t{1} << color)) == 0;
}

std::vector<int> available_colors(const Graph& g, const TotalColoring& c,
                                  const ElementRef& el, int palette) {
    if (palette < 0 || palette > 63)
        throw std::invalid_argument("palette must be between 0 and 63");
    std::uint64_t used = used_color_mask(g, c, el);
    std::vector<int> out;
    for (int col = 1; col <= palette; ++col)
        if (!(used & (std::uint64_t{1} << col))) out.push_back(col);
    return out;
}

}  // namespace potc
