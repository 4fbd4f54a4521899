#include "potc/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

namespace potc {

namespace {

// Elements 0..n-1 are the vertices, the rest are the edges in sorted order.
struct ConflictModel {
    int n = 0;
    std::vector<Edge> edge_list;
    std::vector<std::vector<int>> conflicts;

    explicit ConflictModel(const Graph& g) : n(g.vertex_count()) {
        edge_list = g.edges();
        int total = n + static_cast<int>(edge_list.size());
        conflicts.resize(total);
        auto edge_index = [&](const Edge& e) {
            return n + static_cast<int>(std::lower_bound(edge_list.begin(),
                                                         edge_list.end(), e) -
                                        edge_list.begin());
        };
        for (int v = 0; v < n; ++v)
            for (int w : g.neighbors(v)) {
                conflicts[v].push_back(w);
                conflicts[v].push_back(edge_index(make_edge(v, w)));
            }
        for (int i = 0; i < static_cast<int>(edge_list.size()); ++i) {
            const Edge& e = edge_list[i];
            int self = n + i;
            conflicts[self].push_back(e.first);
            conflicts[self].push_back(e.second);
            for (int end : {e.first, e.second})
                for (int w : g.neighbors(end)) {
                    Edge f = make_edge(end, w);
                    if (f != e) conflicts[self].push_back(edge_index(f));
                }
        }
        for (auto& list : conflicts) {
            std::sort(list.begin(), list.end());
            list.erase(std::unique(list.begin(), list.end()), list.end());
        }
    }

    int total() const { return static_cast<int>(conflicts.size()); }

    TotalColoring to_coloring(const std::vector<int>& colors, int k) const {
        TotalColoring c;
        c.palette_size = k;
        c.vertex_colors.assign(n, 0);
        for (int v = 0; v < n; ++v) c.vertex_colors[v] = colors[v];
        for (size_t i = 0; i < edge_list.size(); ++i)
            c.edge_colors[edge_list[i]] = colors[n + i];
        return c;
    }
};

struct Searcher {
    const ConflictModel& model;
    int k;
    std::vector<int> order;       // position -> element
    std::vector<int> limit;       // per position, highest color allowed
    std::vector<int> color;       // per element, 0 = unset
    std::vector<std::vector<int>> conflict_count;  // element x color

    Searcher(const ConflictModel& m, int colors, bool break_symmetry)
        : model(m), k(colors) {
        int total = model.total();
        order.resize(total);
        std::iota(order.begin(), order.end(), 0);
        if (break_symmetry) {
            // Most constrained first: static sort by conflict degree.
            std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
                return model.conflicts[a].size() > model.conflicts[b].size();
            });
        }
        limit.assign(total, k);
        if (break_symmetry && total > 0) {
            limit[0] = 1;
            for (int pos = 1; pos < total; ++pos) {
                const auto& cf = model.conflicts[order[0]];
                if (std::binary_search(cf.begin(), cf.end(), order[pos])) {
                    limit[pos] = std::min(limit[pos], 2);
                    break;
                }
            }
        }
        color.assign(total, 0);
        conflict_count.assign(total, std::vector<int>(k + 1, 0));
    }

    void assign(int el, int c) {
        color[el] = c;
        for (int other : model.conflicts[el]) ++conflict_count[other][c];
    }

    void unassign(int el, int c) {
        color[el] = 0;
        for (int other : model.conflicts[el]) --conflict_count[other][c];
    }

    bool solve(int pos) {
        if (pos == model.total()) return true;
        int el = order[pos];
        for (int c = 1; c <= limit[pos]; ++c) {
            if (conflict_count[el][c] != 0) continue;
            assign(el, c);
            if (solve(pos + 1)) return true;
            unassign(el, c);
        }
        return false;
    }

    // Enumeration variant; visit() returning false stops the walk.
    bool enumerate(int pos, int& produced, int limit_count,
                   const std::function<bool(const TotalColoring&)>& visit) {
        if (pos == model.total()) {
            ++produced;
            if (!visit(model.to_coloring(color, k))) return false;
            return limit_count == 0 || produced < limit_count;
        }
        int el = order[pos];
        for (int c = 1; c <= limit[pos]; ++c) {
            if (conflict_count[el][c] != 0) continue;
            assign(el, c);
            bool go_on = enumerate(pos + 1, produced, limit_count, visit);
            unassign(el, c);
            if (!go_on) return false;
        }
        return true;
    }
};

void check_cap(const Graph& g, const OracleOptions& opt) {
    if (g.vertex_count() + g.edge_count() > opt.max_elements)
        throw element_cap_error("instance exceeds the element cap of " +
                                std::to_string(opt.max_elements));
}

}  // namespace

std::optional<TotalColoring> is_k_total_colorable(const Graph& g, int k,
                                                  const OracleOptions& opt) {
    check_cap(g, opt);
    if (k < 0 || k > 63) throw std::invalid_argument("palette must be in 0..63");
    ConflictModel model(g);
    if (model.total() == 0) {
        TotalColoring empty;
        empty.palette_size = k;
        return empty;
    }
    if (k == 0) return std::nullopt;
    Searcher s(model, k, true);
    if (!s.solve(0)) return std::nullopt;
    return model.to_coloring(s.color, k);
}

int total_chromatic_number(const Graph& g, const OracleOptions& opt) {
    check_cap(g, opt);
    int total = g.vertex_count() + g.edge_count();
    for (int k = g.max_degree() + 1; k <= std::max(total, 1); ++k)
        if (is_k_total_colorable(g, k, opt)) return k;
    return std::max(total, 1);  // distinct colors always suffice
}

int for_each_k_total_coloring(const Graph& g, int k, int limit,
                              const std::function<bool(const TotalColoring&)>& visit,
                              const OracleOptions& opt) {
    check_cap(g, opt);
    if (k < 0 || k > 63) throw std::invalid_argument("palette must be in 0..63");
    ConflictModel model(g);
    int produced = 0;
    if (model.total() == 0) {
        TotalColoring empty;
        empty.palette_size = k;
        ++produced;
        visit(empty);
        return produced;
    }
    if (k == 0) return 0;
    Searcher s(model, k, false);
    s.enumerate(0, produced, limit, visit);
    return produced;
}

}  // namespace potc
