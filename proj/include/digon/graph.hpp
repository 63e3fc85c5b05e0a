#pragma once

#include <string>
#include <vector>

#include "digon/family.hpp"

namespace digon {

enum class EdgeColor { Red, Blue };

enum class CircleLabel { Unclassified, Internal, External };

const char* to_string(CircleLabel l);

struct GraphEdge {
    int i = -1, j = -1;  // circle indices, i < j
    EdgeColor color = EdgeColor::Red;
    Segment seg;         // straight segment between the two centers
};

// Geometric graph on the circle centers: a red edge per lens-creating pair,
// a blue edge per lune-creating pair, plus the internal/external labels.
struct ColoredGraph {
    std::vector<Point> centers;
    std::vector<GraphEdge> edges;
    std::vector<CircleLabel> labels;
    std::vector<int> label_conflicts;                 // circles both internal and external
    std::vector<std::pair<int, int>> dual_color_pairs;  // pairs with a lens and a lune
    bool pair_family = false;                         // n == 2, degenerate for the lemmata
    Tolerance tol;

    int red_count() const;
    int blue_count() const;
};

struct Labeling {
    std::vector<CircleLabel> labels;
    std::vector<int> conflicts;  // BothInternalAndExternal circles
};

// Internal: supports a lens, or a lune inside its own disc.
// External: supports a lune lying outside its disc.
Labeling classify_circles(const CircleFamily& fam, const std::vector<DigonRecord>& digons);

ColoredGraph build_colored_graph(const CircleFamily& fam, const std::vector<DigonRecord>& digons);

struct EdgePairViolation {
    int e1 = -1, e2 = -1;  // indices into ColoredGraph::edges
    Segment s1, s2;
    std::string detail;
};

struct LemmaReport {
    std::string id;
    std::vector<EdgePairViolation> violations;
    bool pass() const { return violations.empty(); }
};

// Blue edges never cross each other.
LemmaReport verify_lemma_lunes(const ColoredGraph& g);
// Red edges never form an avoiding pair.
LemmaReport verify_lemma_lenses(const ColoredGraph& g);
// No disjoint red edge whose full supporting line meets a blue edge.
LemmaReport verify_lemma_mixed(const ColoredGraph& g);
// Blue edges join internal to external centers, red edges internal to internal.
LemmaReport verify_bipartite_structure(const ColoredGraph& g);

}  // namespace digon
