#ifndef POTC_EMBEDDING_HPP
#define POTC_EMBEDDING_HPP

#include <stdexcept>
#include <vector>

#include "potc/graph.hpp"

namespace potc {

// One circle: vertices in cyclic order plus the chords drawn inside it.
struct EmbeddedBlock {
    std::vector<int> order;
    std::vector<Edge> chords;
};

// Per-block circular drawing. A circle may carry several graph blocks as
// long as none of them is split across circles.
struct CircularEmbedding {
    std::vector<EmbeddedBlock> blocks;
};

// Thrown when an embedding does not cover the graph's blocks.
struct embedding_mismatch_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// True iff the endpoints of a and b interleave around the circle given by
// `order`. Chords sharing an endpoint never cross. Throws when an endpoint
// is missing from the order.
bool chords_cross(const std::vector<int>& order, const Edge& a, const Edge& b);

struct EmbeddingReport {
    bool valid = true;
    int block = -1;       // circle containing the offender
    Edge chord{-1, -1};   // a chord crossed at least twice
    int crossings = 0;
};

// Checks that every chord is crossed at most once. Throws
// embedding_mismatch_error when the circles do not carry exactly the edges
// of g, or when some block of g is split across circles.
EmbeddingReport validate_embedding(const Graph& g, const CircularEmbedding& emb);

// Embedding inherited by a subgraph: deleted vertices leave the circles,
// deleted chords are dropped, empty circles disappear. `remap` maps host
// ids to subgraph ids (-1 for removed vertices).
CircularEmbedding induced_embedding(const CircularEmbedding& emb, const Graph& sub,
                                    const std::vector<int>& remap);

}  // namespace potc

#endif
