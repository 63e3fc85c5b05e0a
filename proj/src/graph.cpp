#include "digon/graph.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace digon {

const char* to_string(CircleLabel l) {
    switch (l) {
        case CircleLabel::Unclassified: return "unclassified";
        case CircleLabel::Internal: return "internal";
        case CircleLabel::External: return "external";
    }
    return "?";
}

int ColoredGraph::red_count() const {
    return static_cast<int>(
        std::count_if(edges.begin(), edges.end(),
                      [](const GraphEdge& e) { return e.color == EdgeColor::Red; }));
}

int ColoredGraph::blue_count() const {
    return static_cast<int>(edges.size()) - red_count();
}

Labeling classify_circles(const CircleFamily& fam, const std::vector<DigonRecord>& digons) {
    const int n = fam.size();
    std::vector<bool> internal(static_cast<size_t>(n), false);
    std::vector<bool> external(static_cast<size_t>(n), false);

    for (const auto& r : digons) {
        if (r.i < 0 || r.j >= n || r.i >= r.j)
            throw PreconditionError("classify_circles: digon record does not match the family");
        switch (r.kind) {
            case DigonKind::Lens:
                internal[static_cast<size_t>(r.i)] = true;
                internal[static_cast<size_t>(r.j)] = true;
                break;
            case DigonKind::LuneInsideFirst:
                internal[static_cast<size_t>(r.i)] = true;
                external[static_cast<size_t>(r.j)] = true;
                break;
            case DigonKind::LuneInsideSecond:
                internal[static_cast<size_t>(r.j)] = true;
                external[static_cast<size_t>(r.i)] = true;
                break;
        }
    }

    Labeling out;
    out.labels.resize(static_cast<size_t>(n), CircleLabel::Unclassified);
    for (int i = 0; i < n; ++i) {
        const bool in = internal[static_cast<size_t>(i)];
        const bool ex = external[static_cast<size_t>(i)];
        if (in && ex) out.conflicts.push_back(i);
        if (in)
            out.labels[static_cast<size_t>(i)] = CircleLabel::Internal;
        else if (ex)
            out.labels[static_cast<size_t>(i)] = CircleLabel::External;
    }
    return out;
}

ColoredGraph build_colored_graph(const CircleFamily& fam, const std::vector<DigonRecord>& digons) {
    const int n = fam.size();
    ColoredGraph g;
    g.tol = fam.tol();
    g.pair_family = n == 2;
    g.centers.reserve(static_cast<size_t>(n));
    for (const Circle& c : fam.circles()) g.centers.push_back(c.center);

    std::set<std::pair<int, int>> red_pairs, blue_pairs;
    for (const auto& r : digons) {
        if (r.i < 0 || r.j >= n || r.i >= r.j)
            throw PreconditionError("build_colored_graph: digon record does not match the family");
        (r.kind == DigonKind::Lens ? red_pairs : blue_pairs).insert({r.i, r.j});
    }
    for (const auto& pr : red_pairs)
        if (blue_pairs.count(pr)) g.dual_color_pairs.push_back(pr);

    for (const auto& [i, j] : red_pairs)
        g.edges.push_back({i, j, EdgeColor::Red,
                           {g.centers[static_cast<size_t>(i)], g.centers[static_cast<size_t>(j)]}});
    for (const auto& [i, j] : blue_pairs)
        g.edges.push_back({i, j, EdgeColor::Blue,
                           {g.centers[static_cast<size_t>(i)], g.centers[static_cast<size_t>(j)]}});

    auto labeling = classify_circles(fam, digons);
    g.labels = std::move(labeling.labels);
    g.label_conflicts = std::move(labeling.conflicts);
    return g;
}

namespace {

bool share_circle(const GraphEdge& a, const GraphEdge& b) {
    return a.i == b.i || a.i == b.j || a.j == b.i || a.j == b.j;
}

std::string pair_detail(const GraphEdge& a, const GraphEdge& b) {
    return "edges (" + std::to_string(a.i) + "," + std::to_string(a.j) + ") and (" +
           std::to_string(b.i) + "," + std::to_string(b.j) + ")";
}

}  // namespace

LemmaReport verify_lemma_lunes(const ColoredGraph& g) {
    LemmaReport report{"lunes_noncrossing", {}};
    const int m = static_cast<int>(g.edges.size());
    for (int a = 0; a < m; ++a) {
        const auto& ea = g.edges[static_cast<size_t>(a)];
        if (ea.color != EdgeColor::Blue) continue;
        for (int b = a + 1; b < m; ++b) {
            const auto& eb = g.edges[static_cast<size_t>(b)];
            if (eb.color != EdgeColor::Blue || share_circle(ea, eb)) continue;
            if (segments_properly_cross(ea.seg, eb.seg, g.tol))
                report.violations.push_back({a, b, ea.seg, eb.seg,
                                             "blue " + pair_detail(ea, eb) + " cross"});
        }
    }
    return report;
}

LemmaReport verify_lemma_lenses(const ColoredGraph& g) {
    LemmaReport report{"lenses_nonavoiding", {}};
    const int m = static_cast<int>(g.edges.size());
    for (int a = 0; a < m; ++a) {
        const auto& ea = g.edges[static_cast<size_t>(a)];
        if (ea.color != EdgeColor::Red) continue;
        for (int b = a + 1; b < m; ++b) {
            const auto& eb = g.edges[static_cast<size_t>(b)];
            if (eb.color != EdgeColor::Red || share_circle(ea, eb)) continue;
            if (segments_avoiding(ea.seg, eb.seg, g.tol))
                report.violations.push_back({a, b, ea.seg, eb.seg,
                                             "red " + pair_detail(ea, eb) + " are avoiding"});
        }
    }
    return report;
}

LemmaReport verify_lemma_mixed(const ColoredGraph& g) {
    LemmaReport report{"red_line_misses_blue", {}};
    const int m = static_cast<int>(g.edges.size());
    for (int a = 0; a < m; ++a) {
        const auto& red = g.edges[static_cast<size_t>(a)];
        if (red.color != EdgeColor::Red) continue;
        for (int b = 0; b < m; ++b) {
            const auto& blue = g.edges[static_cast<size_t>(b)];
            if (blue.color != EdgeColor::Blue || share_circle(red, blue)) continue;
            // Asymmetric on purpose: only the red edge's line is extended.
            if (line_of_first_hits_second(red.seg, blue.seg, g.tol))
                report.violations.push_back({a, b, red.seg, blue.seg,
                                             "line through red " + pair_detail(red, blue) +
                                                 " hits the blue edge"});
        }
    }
    return report;
}

LemmaReport verify_bipartite_structure(const ColoredGraph& g) {
    LemmaReport report{"red_blue_structure", {}};
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
        const auto& edge = g.edges[static_cast<size_t>(e)];
        const CircleLabel li = g.labels[static_cast<size_t>(edge.i)];
        const CircleLabel lj = g.labels[static_cast<size_t>(edge.j)];
        bool ok;
        if (edge.color == EdgeColor::Red)
            ok = li == CircleLabel::Internal && lj == CircleLabel::Internal;
        else
            ok = (li == CircleLabel::Internal && lj == CircleLabel::External) ||
                 (li == CircleLabel::External && lj == CircleLabel::Internal);
        if (!ok)
            report.violations.push_back(
                {e, -1, edge.seg, edge.seg,
                 std::string(edge.color == EdgeColor::Red ? "red " : "blue ") +
                     pair_detail(edge, edge) + " joins " + to_string(li) + " and " +
                     to_string(lj)});
    }
    return report;
}

}  // namespace digon
