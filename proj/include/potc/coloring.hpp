#ifndef POTC_COLORING_HPP
#define POTC_COLORING_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <vector>

#include "potc/graph.hpp"

namespace potc {

// A vertex or an edge of some graph.
struct ElementRef {
    bool is_edge = false;
    int u = -1;  // vertex id, or smaller edge endpoint
    int v = -1;  // -1 for vertices, larger edge endpoint otherwise

    static ElementRef vertex(int id) { return {false, id, -1}; }
    static ElementRef edge(const Edge& e) { return {true, e.first, e.second}; }

    auto operator<=>(const ElementRef&) const = default;
};

// Assignment of colors 1..palette_size to vertices and edges; 0 means
// uncolored. May be partial.
struct TotalColoring {
    int palette_size = 0;
    std::vector<int> vertex_colors;     // indexed by vertex id
    std::map<Edge, int> edge_colors;

    int vertex_color(int v) const;
    int edge_color(const Edge& e) const;
    int color_of(const ElementRef& el) const;
    void set_vertex(int v, int color);
    void set_edge(const Edge& e, int color);
    void set(const ElementRef& el, int color);

    int assigned_count() const;
    int distinct_colors_used() const;

    bool operator==(const TotalColoring&) const = default;
};

enum class ViolationKind {
    adjacent_vertices,   // endpoints of an edge share a color
    incident_edges,      // two edges at a common vertex share a color
    edge_endpoint,       // an edge shares its color with an endpoint
    color_out_of_range,  // color outside 1..palette_size
    unknown_element,     // colored edge not present in the graph
};

struct Violation {
    ViolationKind kind;
    ElementRef a;
    ElementRef b;  // second element of the clashing pair; unused otherwise

    bool operator==(const Violation&) const = default;
};

struct VerifyResult {
    std::vector<Violation> violations;
    bool valid() const { return violations.empty(); }
};

// Checks every properness clause on the assigned elements. Partial
// colorings are fine; uncolored elements constrain nothing.
VerifyResult verify_total_coloring(const Graph& g, const TotalColoring& c);

// True when `el` (colored or not) would clash with no currently colored
// neighbor if it kept / received its color. Used for cheap local re-checks.
bool element_proper(const Graph& g, const TotalColoring& c, const ElementRef& el);

// Bitmask of colors already used by elements adjacent or incident to `el`;
// bit i corresponds to color i. Palette sizes above 63 are rejected.
std::uint64_t used_color_mask(const Graph& g, const TotalColoring& c, const ElementRef& el);

// Ascending list of colors in 1..palette that `el` could take right now.
std::vector<int> available_colors(const Graph& g, const TotalColoring& c,
                                  const ElementRef& el, int palette);

}  // namespace potc

#endif
