#include "potc/dot.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

namespace potc {

std::string export_dot(const Graph& g, const TotalColoring* coloring,
                       const CircularEmbedding* embedding) {
    std::ostringstream out;
    out << "graph g {\n";

    // Circle positions: walk the embedding's circles in order, placing each
    // vertex at its first appearance; stragglers follow at the end.
    std::vector<int> position(g.vertex_count(), -1);
    if (embedding) {
        out << "  layout=neato;\n";
        int next = 0;
        for (const auto& blk : embedding->blocks)
            for (int v : blk.order)
                if (v >= 0 && v < g.vertex_count() && position[v] < 0)
                    position[v] = next++;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (position[v] < 0) position[v] = next++;
    }

    const int n = g.vertex_count();
    for (int v = 0; v < n; ++v) {
        out << "  " << v;
        std::vector<std::string> attrs;
        if (embedding && n > 0) {
            double angle = 2.0 * 3.14159265358979323846 * position[v] / n;
            char buf[64];
            std::snprintf(buf, sizeof buf, "pos=\"%.4f,%.4f!\"", 2.0 * std::cos(angle),
                          2.0 * std::sin(angle));
            attrs.push_back(buf);
        }
        if (coloring && v < static_cast<int>(coloring->vertex_colors.size()) &&
            coloring->vertex_colors[v] > 0)
            attrs.push_back("palette=" + std::to_string(coloring->vertex_colors[v]));
        if (!attrs.empty()) {
            out << " [";
            for (std::size_t i = 0; i < attrs.size(); ++i)
                out << (i ? ", " : "") << attrs[i];
            out << "]";
        }
        out << ";\n";
    }

    for (const Edge& e : g.edges()) {
        out << "  " << e.first << " -- " << e.second;
        if (coloring) {
            int col = coloring->edge_color(e);
            if (col > 0) out << " [palette=" << col << "]";
        }
        out << ";\n";
    }

    out << "}\n";
    return out.str();
}

}  // namespace potc
