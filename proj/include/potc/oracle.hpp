#ifndef POTC_ORACLE_HPP
#define POTC_ORACLE_HPP

#include <functional>
#include <optional>
#include <stdexcept>

#include "potc/coloring.hpp"
#include "potc/graph.hpp"

namespace potc {

struct element_cap_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OracleOptions {
    // Refuse instances with more than this many vertices plus edges.
    int max_elements = 45;
};

// Exact backtracking search. Returns a witness coloring when one exists,
// nullopt when provably none does. Deterministic. Throws element_cap_error
// on oversized inputs.
std::optional<TotalColoring> is_k_total_colorable(const Graph& g, int k,
                                                  const OracleOptions& opt = {});

// Smallest k admitting a total coloring; never below max_degree + 1.
int total_chromatic_number(const Graph& g, const OracleOptions& opt = {});

// Enumerates proper k-total-colorings in a fixed order until `visit`
// returns false or `limit` colorings were produced (0 = no limit).
// Returns the number visited. No symmetry breaking, so restarting with a
// larger limit extends the same sequence.
int for_each_k_total_coloring(const Graph& g, int k, int limit,
                              const std::function<bool(const TotalColoring&)>& visit,
                              const OracleOptions& opt = {});

}  // namespace potc

#endif
