#include "potc/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace potc {

Edge make_edge(int u, int v) {
    if (u < 0 || v < 0)
        throw std::invalid_argument("edge endpoint must be non-negative");
    if (u == v)
        throw std::invalid_argument("loops are not allowed");
    if (u > v) std::swap(u, v);
    return {u, v};
}

Graph::Graph(int n) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    adj_.resize(n);
}

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
    Graph g(n);
    for (const Edge& e : edges) g.add_edge(e.first, e.second);
    return g;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= vertex_count())
        throw std::invalid_argument("vertex id out of range: " + std::to_string(v));
}

void Graph::add_edge(int u, int v) {
    Edge e = make_edge(u, v);
    check_vertex(e.first);
    check_vertex(e.second);
    if (has_edge(e.first, e.second))
        throw std::invalid_argument("parallel edges are not allowed");
    auto insert_sorted = [](std::vector<int>& list, int x) {
        list.insert(std::lower_bound(list.begin(), list.end(), x), x);
    };
    insert_sorted(adj_[e.first], e.second);
    insert_sorted(adj_[e.second], e.first);
    ++edge_count_;
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count() || u == v)
        return false;
    const std::vector<int>& list = adj_[u];
    return std::binary_search(list.begin(), list.end(), v);
}

int Graph::degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& list : adj_) d = std::max(d, static_cast<int>(list.size()));
    return d;
}

int Graph::min_degree() const {
    if (adj_.empty()) return 0;
    int d = static_cast<int>(adj_[0].size());
    for (const auto& list : adj_) d = std::min(d, static_cast<int>(list.size()));
    return d;
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph Graph::remove_edge(int u, int v) const {
    Edge e = make_edge(u, v);
    check_vertex(e.first);
    check_vertex(e.second);
    if (!has_edge(e.first, e.second))
        throw std::invalid_argument("cannot remove absent edge");
    Graph g = *this;
    auto erase_one = [](std::vector<int>& list, int x) {
        list.erase(std::lower_bound(list.begin(), list.end(), x));
    };
    erase_one(g.adj_[e.first], e.second);
    erase_one(g.adj_[e.second], e.first);
    --g.edge_count_;
    return g;
}

Graph::VertexDeletion Graph::remove_vertices(const std::vector<int>& victims) const {
    std::vector<char> gone(vertex_count(), 0);
    for (int v : victims) {
        check_vertex(v);
        gone[v] = 1;
    }
    std::vector<int> remap(vertex_count(), -1);
    int next = 0;
    for (int v = 0; v < vertex_count(); ++v)
        if (!gone[v]) remap[v] = next++;
    Graph g(next);
    for (int u = 0; u < vertex_count(); ++u) {
        if (gone[u]) continue;
        for (int v : adj_[u])
            if (u < v && !gone[v]) g.add_edge(remap[u], remap[v]);
    }
    return {std::move(g), std::move(remap)};
}

int BlockDecomposition::block_of_edge(const Edge& e) const {
    for (int b = 0; b < static_cast<int>(blocks.size()); ++b)
        if (std::binary_search(blocks[b].begin(), blocks[b].end(), e)) return b;
    return -1;
}

namespace {

// Iterative lowpoint DFS; pops one block's edges whenever a child subtree
// cannot reach above the current vertex.
struct BlockFinder {
    const Graph& g;
    std::vector<int> num, low;
    std::vector<char> is_cut;
    std::vector<Edge> stack;
    std::vector<std::vector<Edge>> out;
    int counter = 0;

    explicit BlockFinder(const Graph& graph)
        : g(graph),
          num(graph.vertex_count(), -1),
          low(graph.vertex_count(), 0),
          is_cut(graph.vertex_count(), 0) {}

    void pop_block(const Edge& top) {
        std::vector<Edge> block;
        while (true) {
            Edge e = stack.back();
            stack.pop_back();
            block.push_back(e);
            if (e == top) break;
        }
        std::sort(block.begin(), block.end());
        out.push_back(std::move(block));
    }

    void run_from(int root) {
        struct Frame {
            int v, parent;
            size_t next = 0;
        };
        std::vector<Frame> frames;
        frames.push_back({root, -1});
        num[root] = low[root] = counter++;
        int root_children = 0;
        while (!frames.empty()) {
            Frame& f = frames.back();
            const std::vector<int>& nb = g.neighbors(f.v);
            if (f.next < nb.size()) {
                int w = nb[f.next++];
                if (w == f.parent) continue;
                if (num[w] == -1) {
                    if (f.v == root) ++root_children;
                    stack.push_back(make_edge(f.v, w));
                    num[w] = low[w] = counter++;
                    frames.push_back({w, f.v});
                } else if (num[w] < num[f.v]) {
                    stack.push_back(make_edge(f.v, w));
                    low[f.v] = std::min(low[f.v], num[w]);
                }
            } else {
                int v = f.v, parent = f.parent;
                frames.pop_back();
                if (parent == -1) break;
                low[parent] = std::min(low[parent], low[v]);
                if (low[v] >= num[parent]) {
                    if (parent != root) is_cut[parent] = 1;
                    pop_block(make_edge(parent, v));
                }
            }
        }
        if (root_children >= 2) is_cut[root] = 1;
    }
};

}  // namespace

BlockDecomposition blocks(const Graph& g) {
    BlockFinder finder(g);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (finder.num[v] == -1 && g.degree(v) > 0) finder.run_from(v);

    BlockDecomposition dec;
    dec.blocks = std::move(finder.out);
    std::sort(dec.blocks.begin(), dec.blocks.end());
    for (const auto& block : dec.blocks) {
        std::vector<int> verts;
        for (const Edge& e : block) {
            verts.push_back(e.first);
            verts.push_back(e.second);
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        dec.block_vertices.push_back(std::move(verts));
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (finder.is_cut[v]) dec.cut_vertices.push_back(v);
    dec.blocks_of_cut.resize(dec.cut_vertices.size());
    dec.cuts_of_block.resize(dec.blocks.size());
    for (size_t c = 0; c < dec.cut_vertices.size(); ++c) {
        int v = dec.cut_vertices[c];
        for (size_t b = 0; b < dec.blocks.size(); ++b) {
            const auto& verts = dec.block_vertices[b];
            if (std::binary_search(verts.begin(), verts.end(), v)) {
                dec.blocks_of_cut[c].push_back(static_cast<int>(b));
                dec.cuts_of_block[b].push_back(v);
            }
        }
    }
    return dec;
}

}  // namespace potc
