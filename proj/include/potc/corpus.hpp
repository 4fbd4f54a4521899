#ifndef POTC_CORPUS_HPP
#define POTC_CORPUS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "potc/embedding.hpp"
#include "potc/graph.hpp"

namespace potc {

struct GeneratorSpec {
    int n = 10;
    // Fraction of the shuffled chord candidates that get attempted; ignored
    // when maximal is set.
    double density = 0.5;
    bool maximal = false;
    std::uint64_t seed = 1;
    // Start from the full rim cycle (n >= 3). Rim edges cross nothing, so
    // this biases the output toward high degrees.
    bool outer_cycle = true;
};

struct GeneratedGraph {
    Graph graph;
    CircularEmbedding embedding;
};

// Places n vertices on a circle and adds chords in seeded random order,
// accepting one only if it crosses at most one present chord and every
// chord it crosses is itself uncrossed. Identical specs give identical
// output; the embedding always validates.
GeneratedGraph random_pseudo_outerplanar(const GeneratorSpec& spec);

// Calls yield for every graph with 1..n vertices, up to isomorphism, that
// has a circle drawing with every chord crossed at most once. Stops early
// when yield returns false. Returns how many graphs were yielded.
// n is capped at 9.
long long enumerate_pseudo_outerplanar(
    int n, const std::function<bool(const Graph&)>& yield);

struct Fixture {
    Graph graph;
    std::optional<CircularEmbedding> embedding;
};

// Named test graphs: K4, K23, C4, claim3-gadget, claim4-gadget,
// sharpness-witness. Throws on unknown names.
Fixture fixture(const std::string& name);
const std::vector<std::string>& fixture_names();

// Exact isomorphism decision by backtracking; both graphs must have at
// most 64 vertices.
bool graphs_isomorphic(const Graph& a, const Graph& b);

}  // namespace potc

#endif
