#ifndef POTC_IO_HPP
#define POTC_IO_HPP

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "potc/coloring.hpp"
#include "potc/embedding.hpp"
#include "potc/graph.hpp"

namespace potc {

// Malformed input file. The CLI maps this to its own exit code.
struct format_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Edge-list text: first line "n m", then m lines "u v" with 0 <= u < v < n.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
std::string write_edge_list(const Graph& g);

// Coloring JSON: {"k": int, "vertices": [int, ...], "edges": [[u,v,c], ...]}
// with 0 meaning uncolored.
TotalColoring parse_coloring(const std::string& text);
TotalColoring read_coloring_file(const std::string& path);
std::string write_coloring(const TotalColoring& c);

// Embedding JSON: {"blocks": [{"order": [v, ...], "edges": [[u,v], ...]}]}.
CircularEmbedding parse_embedding(const std::string& text);
CircularEmbedding read_embedding_file(const std::string& path);
std::string write_embedding(const CircularEmbedding& emb);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

// 64-bit FNV-1a, used to fingerprint inputs in run reports.
std::uint64_t fnv1a_digest(const std::string& text);
std::string fnv1a_hex(const std::string& text);

}  // namespace potc

#endif
