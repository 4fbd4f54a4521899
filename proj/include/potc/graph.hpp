#ifndef POTC_GRAPH_HPP
#define POTC_GRAPH_HPP

#include <utility>
#include <vector>

namespace potc {

// Undirected edge, stored with first < second.
using Edge = std::pair<int, int>;

// Normalizes endpoint order. Throws std::invalid_argument on loops or
// negative ids.
Edge make_edge(int u, int v);

// Simple undirected graph over dense 0-based vertex ids. Adjacency lists
// stay sorted; loops and parallel edges are rejected.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    static Graph from_edges(int n, const std::vector<Edge>& edges);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return edge_count_; }

    void add_edge(int u, int v);
    bool has_edge(int u, int v) const;

    int degree(int v) const;
    int max_degree() const;  // 0 for the empty graph
    int min_degree() const;  // 0 for the empty graph

    const std::vector<int>& neighbors(int v) const;
    std::vector<Edge> edges() const;  // sorted lexicographically

    // Returns a copy without the edge. Throws if the edge is absent.
    Graph remove_edge(int u, int v) const;

    struct VertexDeletion;
    // Removes the given vertices and all incident edges. Surviving ids are
    // compacted in order, so downstream code never sees holes.
    VertexDeletion remove_vertices(const std::vector<int>& victims) const;

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(int v) const;

    std::vector<std::vector<int>> adj_;
    int edge_count_ = 0;
};

struct Graph::VertexDeletion {
    Graph graph;
    std::vector<int> remap;  // old id -> new id, -1 for removed
};

// Blocks are the maximal 2-connected subgraphs plus bridges; every edge
// lies in exactly one of them.
struct BlockDecomposition {
    std::vector<std::vector<Edge>> blocks;         // each sorted
    std::vector<std::vector<int>> block_vertices;  // vertices per block, sorted
    std::vector<int> cut_vertices;                 // sorted
    // Bipartite incidence between cut vertices and blocks.
    std::vector<std::vector<int>> blocks_of_cut;   // aligned with cut_vertices
    std::vector<std::vector<int>> cuts_of_block;   // aligned with blocks

    int block_of_edge(const Edge& e) const;  // -1 when absent
};

BlockDecomposition blocks(const Graph& g);

}  // namespace potc

#endif
