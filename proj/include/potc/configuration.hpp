#ifndef POTC_CONFIGURATION_HPP
#define POTC_CONFIGURATION_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "potc/graph.hpp"

namespace potc {

// The four local structures at least one of which every pseudo-outerplanar
// graph of minimum degree two contains. Each one admits a color-extension
// step, so together they drive the reduction engine.

// C1: edge uv with d(u) = 2 and d(v) <= 4.
struct DegreeTwoEdge {
    int u, v;
    bool operator==(const DegreeTwoEdge&) const = default;
};

// C2: 4-cycle u-x-v-y with d(u) = d(v) = 2.
struct LightFourCycle {
    int u, x, v, y;
    bool operator==(const LightFourCycle&) const = default;
};

// C3: 4-cycle u-x-v-y with d(u) = d(v) = 3 and uv an edge.
struct ChordedFourCycle {
    int u, x, v, y;
    bool operator==(const ChordedFourCycle&) const = default;
};

// C4: path x'-u-x-v-y-w-y' with d(u) = d(v) = d(w) = 2, d(x) = d(y) = 5,
// and edges xx', yy', xy, x'y, xy' present. Normalized so that x' < y'.
struct SevenPath {
    int xp, u, x, v, y, w, yp;
    bool operator==(const SevenPath&) const = default;
};

using Configuration =
    std::variant<DegreeTwoEdge, LightFourCycle, ChordedFourCycle, SevenPath>;

// "C1".."C4"
std::string configuration_variant(const Configuration& c);
// Witness vertices in the order fixed by the variant.
std::vector<int> configuration_vertices(const Configuration& c);

// Scans variants in order C1, C2, C3, C4 and returns the lexicographically
// smallest witness of the first variant present. Requires minimum degree
// two (throws otherwise; empty graphs yield nothing). A nullopt answer
// certifies that the graph is not pseudo-outerplanar.
std::optional<Configuration> find_configuration(const Graph& g);

// Re-checks every defining condition of the witness on g.
bool validate_configuration(const Graph& g, const Configuration& c);

}  // namespace potc

#endif
