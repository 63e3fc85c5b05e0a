#include "digon/sphere.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace digon {

UnitVec3 operator-(UnitVec3 v) { return {-v.x, -v.y, -v.z}; }

UnitVec3 cross(UnitVec3 a, UnitVec3 b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

double dot(UnitVec3 a, UnitVec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

double norm3(UnitVec3 v) { return std::sqrt(dot(v, v)); }

UnitVec3 normalized(UnitVec3 v) {
    const double n = norm3(v);
    return {v.x / n, v.y / n, v.z / n};
}

UnitVec3 project_to_sphere(Point p) {
    const double n = std::sqrt(p.x * p.x + p.y * p.y + 1.0);
    return {p.x / n, p.y / n, -1.0 / n};
}

GreatArc make_great_arc(UnitVec3 a, UnitVec3 b, Tolerance tol) {
    if (norm3(cross(a, b)) <= tol.eps)
        throw PreconditionError("make_great_arc: endpoints coincide or are antipodal");
    return {a, b};
}

bool great_arc_interior_contains(const GreatArc& arc, UnitVec3 p, Tolerance tol) {
    const UnitVec3 n = normalized(cross(arc.a, arc.b));
    return dot(cross(arc.a, p), n) > tol.eps && dot(cross(p, arc.b), n) > tol.eps;
}

namespace {

// Signed angle of p within the frame of the arc's great circle, measured
// from arc.a in the direction of arc.b.
double angle_in_plane(const GreatArc& frame, UnitVec3 p) {
    const UnitVec3 n = normalized(cross(frame.a, frame.b));
    const UnitVec3 e1 = normalized(frame.a);
    const UnitVec3 e2 = cross(n, e1);
    return normalize_angle(std::atan2(dot(p, e2), dot(p, e1)));
}

}  // namespace

ArcPairKind classify_great_arc_pair(const GreatArc& u, const GreatArc& v, Tolerance tol) {
    const UnitVec3 nu = cross(u.a, u.b);
    const UnitVec3 nv = cross(v.a, v.b);
    const UnitVec3 d = cross(nu, nv);

    if (norm3(d) <= tol.eps * std::max(norm3(nu) * norm3(nv), 1e-30)) {
        // Common great circle: overlap of the two angular intervals.
        AngularInterval iu{-1, 0.0, angle_in_plane(u, u.b)};
        const double va = angle_in_plane(u, v.a);
        const double vb = angle_in_plane(u, v.b);
        AngularInterval iv{-1, 0.0, 0.0};
        if (normalize_angle(vb - va) <= kTwoPi - normalize_angle(vb - va)) {
            iv.start = va;
            iv.extent = normalize_angle(vb - va);
        } else {
            iv.start = vb;
            iv.extent = normalize_angle(va - vb);
        }
        return intervals_overlap(iu, iv, tol) ? ArcPairKind::DegenerateOverlap
                                              : ArcPairKind::NoCross;
    }

    const UnitVec3 dir = normalized(d);
    for (const UnitVec3& p : {dir, -dir})
        if (great_arc_interior_contains(u, p, tol) && great_arc_interior_contains(v, p, tol))
            return ArcPairKind::Cross;
    return ArcPairKind::NoCross;
}

bool great_arcs_cross(const GreatArc& u, const GreatArc& v, Tolerance tol) {
    return classify_great_arc_pair(u, v, tol) == ArcPairKind::Cross;
}

GreatArc SphereGraph::arc_of(const Edge& e) const {
    return {vertices[static_cast<size_t>(e.a)].pos, vertices[static_cast<size_t>(e.b)].pos};
}

SphereGraph build_doubled_graph(const ColoredGraph& g) {
    const int n = static_cast<int>(g.centers.size());
    if (n < 3) throw PreconditionError("build_doubled_graph: needs at least three circles");
    if (!g.label_conflicts.empty())
        throw PreconditionError("build_doubled_graph: conflicting internal/external labels");
    for (const auto& e : g.edges)
        if (g.labels[static_cast<size_t>(e.i)] == CircleLabel::Unclassified ||
            g.labels[static_cast<size_t>(e.j)] == CircleLabel::Unclassified)
            throw PreconditionError("build_doubled_graph: edge endpoint lacks a label");

    SphereGraph sg;
    sg.tol = g.tol;
    sg.vertices.reserve(static_cast<size_t>(2 * n));
    for (int i = 0; i < n; ++i) {
        const UnitVec3 south = project_to_sphere(g.centers[static_cast<size_t>(i)]);
        const bool ext = g.labels[static_cast<size_t>(i)] == CircleLabel::External;
        // Parts are A u -B and B u -A, with A the external and B the internal
        // centers on the southern hemisphere. Unclassified circles are
        // isolated; grouping them with A keeps the assignment deterministic.
        sg.vertices.push_back({south, i, false, ext ? 0 : 1});
        sg.vertices.push_back({-south, i, true, ext ? 1 : 0});
    }

    for (const auto& e : g.edges) {
        const int us = sg.vertex_id(e.i, false), ua = sg.vertex_id(e.i, true);
        const int vs = sg.vertex_id(e.j, false), va = sg.vertex_id(e.j, true);
        if (e.color == EdgeColor::Blue) {
            sg.edges.push_back({us, vs, EdgeColor::Blue});
            sg.edges.push_back({ua, va, EdgeColor::Blue});
        } else {
            // Complementary arcs of the great circle through the projected
            // segment: each rerouted arc shares one endpoint with the
            // original arc and is otherwise disjoint from it.
            sg.edges.push_back({us, va, EdgeColor::Red});
            sg.edges.push_back({ua, vs, EdgeColor::Red});
            const GreatArc original{sg.vertices[static_cast<size_t>(us)].pos,
                                    sg.vertices[static_cast<size_t>(vs)].pos};
            const GreatArc rerouted{sg.vertices[static_cast<size_t>(us)].pos,
                                    sg.vertices[static_cast<size_t>(va)].pos};
            if (classify_great_arc_pair(original, rerouted, sg.tol) != ArcPairKind::NoCross)
                throw std::logic_error("build_doubled_graph: rerouted arc overlaps the original");
        }
    }
    return sg;
}

GPrimeReport verify_gprime(const SphereGraph& sg) {
    GPrimeReport report;
    const int m = static_cast<int>(sg.edges.size());
    report.edge_count = m;
    report.edge_bound = 2 * static_cast<int>(sg.vertices.size()) - 4;

    for (int a = 0; a < m; ++a) {
        const auto& ea = sg.edges[static_cast<size_t>(a)];
        for (int b = a + 1; b < m; ++b) {
            const auto& eb = sg.edges[static_cast<size_t>(b)];
            const auto kind = classify_great_arc_pair(sg.arc_of(ea), sg.arc_of(eb), sg.tol);
            if (kind != ArcPairKind::NoCross)
                report.crossings.push_back({a, b, kind == ArcPairKind::DegenerateOverlap});
        }
    }

    for (int e = 0; e < m; ++e) {
        const auto& edge = sg.edges[static_cast<size_t>(e)];
        if (sg.vertices[static_cast<size_t>(edge.a)].part ==
            sg.vertices[static_cast<size_t>(edge.b)].part)
            report.part_violations.push_back(e);
    }

    // Independent check: a breadth-first 2-coloring must exist and agree with
    // the declared parts on every connected component (up to swapping).
    const int vcount = static_cast<int>(sg.vertices.size());
    std::vector<std::vector<int>> adj(static_cast<size_t>(vcount));
    for (const auto& e : sg.edges) {
        adj[static_cast<size_t>(e.a)].push_back(e.b);
        adj[static_cast<size_t>(e.b)].push_back(e.a);
    }
    std::vector<int> color(static_cast<size_t>(vcount), -1);
    for (int start = 0; start < vcount; ++start) {
        if (color[static_cast<size_t>(start)] >= 0 || adj[static_cast<size_t>(start)].empty())
            continue;
        color[static_cast<size_t>(start)] = sg.vertices[static_cast<size_t>(start)].part;
        std::queue<int> q;
        q.push(start);
        while (!q.empty()) {
            const int v = q.front();
            q.pop();
            for (int w : adj[static_cast<size_t>(v)]) {
                if (color[static_cast<size_t>(w)] < 0) {
                    color[static_cast<size_t>(w)] = 1 - color[static_cast<size_t>(v)];
                    q.push(w);
                } else if (color[static_cast<size_t>(w)] == color[static_cast<size_t>(v)]) {
                    report.coloring_consistent = false;
                }
            }
        }
    }
    for (int v = 0; v < vcount; ++v)
        if (color[static_cast<size_t>(v)] >= 0 &&
            color[static_cast<size_t>(v)] != sg.vertices[static_cast<size_t>(v)].part)
            report.coloring_consistent = false;

    return report;
}

}  // namespace digon
