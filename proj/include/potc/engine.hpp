#ifndef POTC_ENGINE_HPP
#define POTC_ENGINE_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "potc/coloring.hpp"
#include "potc/configuration.hpp"
#include "potc/graph.hpp"

namespace potc {

// Raised when the reduction runs out of configurations on a minimum-degree-
// two residual, which certifies the input is not pseudo-outerplanar.
struct not_pseudo_outerplanar_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class StepKind { peel, block_split, claim1, claim2, claim3, claim4 };

std::string step_kind_name(StepKind k);

struct EngineReport {
    struct Step {
        StepKind kind;
        int before_vertices = 0, before_edges = 0;
        int after_vertices = 0, after_edges = 0;
        std::optional<Configuration> witness;
    };
    std::vector<Step> steps;
    int divergences = 0;                  // extensions rescued by brute force
    std::vector<std::string> divergence_notes;
};

// Colors an uncolored element could take right now without breaking
// properness. A color belongs to the set iff assigning it keeps every
// verification clause satisfied.
struct AvailableSet {
    ElementRef element;
    std::vector<int> colors;  // ascending subset of 1..M+1
};

AvailableSet available_set(const Graph& g, const TotalColoring& c,
                           const ElementRef& element, int M);

struct PeelEntry {
    int vertex;
    int anchor;  // surviving neighbor at removal time, -1 if none
};

struct PeelResult {
    Graph core;                    // minimum degree >= 2, possibly empty
    std::vector<int> remap;        // input id -> core id, -1 for peeled
    std::vector<PeelEntry> removed;  // in removal order, input ids
};

// Strips degree <= 1 vertices, lowest id first, until none remain.
PeelResult peel_low_degree(const Graph& g);

// Colors g with palette M + 1. Requires M >= 5 and M >= max_degree(g).
// Throws not_pseudo_outerplanar_error when reduction gets stuck.
TotalColoring total_color(const Graph& g, int M);
TotalColoring total_color(const Graph& g, int M, EngineReport& report);

// Minimum-palette front door: max_degree >= 5 runs the reduction with
// M = max_degree; smaller degrees go to exact search when the instance is
// small enough, and to the M = 5 reduction otherwise.
TotalColoring total_color_auto(const Graph& g);

// Reconciles per-block colorings (palette M + 1, global ids, one entry per
// block of `dec`) into one coloring of g by permuting block palettes at
// cut vertices. Requires every cut vertex's total degree <= M.
TotalColoring merge_block_colorings(const Graph& g, const BlockDecomposition& dec,
                                    const std::vector<TotalColoring>& per_block,
                                    int M);

// Exhaustively extends `partial` to the given uncolored elements with
// colors 1..M+1. At most 9 elements (throws above that). Returns nullopt
// when no extension exists.
std::optional<TotalColoring> local_exhaustive_extend(
    const Graph& g, const TotalColoring& partial,
    const std::vector<ElementRef>& elements, int M);

// One extension step per configuration variant. Each takes the host graph
// g (the graph before the reduction), a proper partial coloring of the
// reduced graph expressed on g's ids, the witness, and the palette bound.
// The branch taken is reported through the optional trace; failures of the
// derived case analysis fall back to exhaustive extension and are counted
// in the report as divergences.

struct Claim3Trace {
    // "direct": a free color existed; "recolor_u4", "recolor_u3",
    // "recolor_v1": the saturated branches after palette normalization.
    std::string branch;
};

struct Claim4Trace {
    bool pendants_differ = false;  // trimmed pendant availabilities distinct
    bool exchanged = false;        // colors of ux' and xx' swapped
};

TotalColoring extend_claim1(const Graph& g, const TotalColoring& partial,
                            const DegreeTwoEdge& w, int M,
                            EngineReport* report = nullptr);
TotalColoring extend_claim2(const Graph& g, const TotalColoring& partial,
                            const LightFourCycle& w, int M,
                            EngineReport* report = nullptr);
TotalColoring extend_claim3(const Graph& g, const TotalColoring& partial,
                            const ChordedFourCycle& w, int M,
                            EngineReport* report = nullptr,
                            Claim3Trace* trace = nullptr);
TotalColoring extend_claim4(const Graph& g, const TotalColoring& partial,
                            const SevenPath& w, int M,
                            EngineReport* report = nullptr,
                            Claim4Trace* trace = nullptr);

}  // namespace potc

#endif
