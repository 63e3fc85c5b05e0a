#include "digon/svg.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "digon/graph.hpp"
#include "digon/halfedge.hpp"

namespace digon {

namespace {

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

// Math coordinates are y-up; SVG is y-down, so y is negated and arc sweep
// direction flips.
std::string pt(Point p) { return num(p.x) + " " + num(-p.y); }

void append_digon_path(std::ostringstream& svg, const Arrangement& arr,
                       const Arrangement::Face& face, const CircleFamily& fam,
                       const std::string& fill) {
    const auto& e0 = arr.half_edges[static_cast<size_t>(face.edges[0])];
    const auto& e1 = arr.half_edges[static_cast<size_t>(face.edges[1])];
    const Point start = arr.vertices[static_cast<size_t>(e0.from)].p;
    svg << "  <path d=\"M " << pt(start);
    for (const auto* he : {&e0, &e1}) {
        const double r = fam.circle(he->circle).radius;
        const double extent = he->ccw ? normalize_angle(he->angle_to - he->angle_from)
                                      : normalize_angle(he->angle_from - he->angle_to);
        const int large = extent > 3.141592653589793 ? 1 : 0;
        const int sweep = he->ccw ? 0 : 1;
        svg << " A " << num(r) << " " << num(r) << " 0 " << large << " " << sweep << " "
            << pt(arr.vertices[static_cast<size_t>(he->to)].p);
    }
    svg << " Z\" fill=\"" << fill << "\" fill-opacity=\"0.55\" stroke=\"none\"/>\n";
}

}  // namespace

std::string render_svg(const CircleFamily& fam, const RenderLayers& layers) {
    double min_x = 1e300, min_y = 1e300, max_x = -1e300, max_y = -1e300;
    for (const Circle& c : fam.circles()) {
        min_x = std::min(min_x, c.center.x - c.radius);
        max_x = std::max(max_x, c.center.x + c.radius);
        min_y = std::min(min_y, c.center.y - c.radius);
        max_y = std::max(max_y, c.center.y + c.radius);
    }
    const double margin = 0.1 * std::max(max_x - min_x, max_y - min_y);
    const double x0 = min_x - margin;
    const double y0 = -(max_y + margin);  // y flipped
    const double w = (max_x - min_x) + 2.0 * margin;
    const double h = (max_y - min_y) + 2.0 * margin;
    const double stroke = 0.004 * std::max(w, h);

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(x0) << " " << num(y0)
        << " " << num(w) << " " << num(h) << "\">\n";

    if (layers.digons) {
        const Arrangement arr = build_arrangement(fam);
        for (const auto& face : arr.faces) {
            if (!face.bounded || face.edges.size() != 2) continue;
            const auto& e0 = arr.half_edges[static_cast<size_t>(face.edges[0])];
            const auto& e1 = arr.half_edges[static_cast<size_t>(face.edges[1])];
            if (e0.circle == e1.circle) continue;
            const bool lens = e0.ccw && e1.ccw;
            const bool lune = e0.ccw != e1.ccw;
            if (!lens && !lune) continue;
            append_digon_path(svg, arr, face, fam, lens ? "#e4572e" : "#4c86c6");
        }
    }

    if (layers.circles) {
        for (const Circle& c : fam.circles())
            svg << "  <circle cx=\"" << num(c.center.x) << "\" cy=\"" << num(-c.center.y)
                << "\" r=\"" << num(c.radius)
                << "\" fill=\"none\" stroke=\"black\" stroke-width=\"" << num(stroke) << "\"/>\n";
    }

    if (layers.graph) {
        const auto records = detect_digons_pairwise(fam);
        const ColoredGraph graph = build_colored_graph(fam, records);
        for (const auto& edge : graph.edges)
            svg << "  <line x1=\"" << num(edge.seg.a.x) << "\" y1=\"" << num(-edge.seg.a.y)
                << "\" x2=\"" << num(edge.seg.b.x) << "\" y2=\"" << num(-edge.seg.b.y)
                << "\" stroke=\"" << (edge.color == EdgeColor::Red ? "#c1121f" : "#2660a4")
                << "\" stroke-width=\"" << num(1.5 * stroke) << "\"/>\n";
    }

    svg << "</svg>\n";
    return svg.str();
}

}  // namespace digon
