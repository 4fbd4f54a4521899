#ifndef POTC_DOT_HPP
#define POTC_DOT_HPP

#include <string>

#include "potc/coloring.hpp"
#include "potc/embedding.hpp"
#include "potc/graph.hpp"

namespace potc {

// Graphviz text for g. Colored elements carry a `palette` attribute; when
// an embedding is given, vertices get fixed positions on a circle in
// embedding order. Output is byte-stable for fixed input.
std::string export_dot(const Graph& g, const TotalColoring* coloring,
                       const CircularEmbedding* embedding);

}  // namespace potc

#endif
