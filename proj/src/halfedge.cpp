#include "digon/halfedge.hpp"

#include <algorithm>
#include <cmath>

namespace digon {

namespace {

// Direction of the half-edge where it leaves vertex v.
Point outgoing_direction(const Circle& c, Point v, bool ccw) {
    Point t = perp(v - c.center);
    return ccw ? t : Point{-t.x, -t.y};
}

}  // namespace

Arrangement build_arrangement(const CircleFamily& fam) {
    const int n = fam.size();
    Arrangement arr;

    // Vertices in deterministic (i, j, first/second) order.
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const auto& ps = fam.pair_points(i, j);
            arr.vertices.push_back({ps.first, i, j});
            arr.vertices.push_back({ps.second, i, j});
        }

    // Split each circle into arcs at its incident vertices.
    struct OnCircle {
        double angle;
        int vertex;
    };
    std::vector<std::vector<OnCircle>> on_circle(static_cast<size_t>(n));
    for (int v = 0; v < arr.vertex_count(); ++v) {
        const auto& vx = arr.vertices[static_cast<size_t>(v)];
        for (int c : {vx.ci, vx.cj})
            on_circle[static_cast<size_t>(c)].push_back(
                {angle_on_circle(fam.circle(c), vx.p), v});
    }

    for (int c = 0; c < n; ++c) {
        auto& pts = on_circle[static_cast<size_t>(c)];
        std::sort(pts.begin(), pts.end(),
                  [](const OnCircle& a, const OnCircle& b) { return a.angle < b.angle; });
        const int m = static_cast<int>(pts.size());
        for (int t = 0; t < m; ++t) {
            const OnCircle& a = pts[static_cast<size_t>(t)];
            const OnCircle& b = pts[static_cast<size_t>((t + 1) % m)];
            const int fwd = static_cast<int>(arr.half_edges.size());
            arr.half_edges.push_back({c, a.vertex, b.vertex, true, a.angle, b.angle, fwd + 1, -1, -1});
            arr.half_edges.push_back({c, b.vertex, a.vertex, false, b.angle, a.angle, fwd, -1, -1});
        }
    }

    // Outgoing half-edges per vertex with their departure angles.
    struct Outgoing {
        int edge;
        double dir;
    };
    std::vector<std::vector<Outgoing>> out(static_cast<size_t>(arr.vertex_count()));
    for (int e = 0; e < static_cast<int>(arr.half_edges.size()); ++e) {
        const auto& he = arr.half_edges[static_cast<size_t>(e)];
        const Point d = outgoing_direction(fam.circle(he.circle),
                                           arr.vertices[static_cast<size_t>(he.from)].p, he.ccw);
        out[static_cast<size_t>(he.from)].push_back({e, std::atan2(d.y, d.x)});
    }

    // next(e): at the target vertex, the outgoing edge first clockwise from
    // the reversed arrival direction keeps the face on the left.
    for (int e = 0; e < static_cast<int>(arr.half_edges.size()); ++e) {
        auto& he = arr.half_edges[static_cast<size_t>(e)];
        const auto& twin = arr.half_edges[static_cast<size_t>(he.twin)];
        const Point rev = outgoing_direction(fam.circle(he.circle),
                                             arr.vertices[static_cast<size_t>(he.to)].p, twin.ccw);
        const double ref = std::atan2(rev.y, rev.x);
        int best = -1;
        double best_turn = kTwoPi + 1.0;
        for (const auto& cand : out[static_cast<size_t>(he.to)]) {
            if (cand.edge == he.twin) continue;
            double turn = normalize_angle(ref - cand.dir);
            if (turn == 0.0) turn = kTwoPi;
            if (turn < best_turn) {
                best_turn = turn;
                best = cand.edge;
            }
        }
        he.next = best >= 0 ? best : he.twin;
    }

    // Trace face cycles and integrate x dy - y dx along each arc.
    std::vector<int> order(arr.half_edges.size());
    for (size_t e = 0; e < order.size(); ++e) order[e] = static_cast<int>(e);
    for (int start : order) {
        if (arr.half_edges[static_cast<size_t>(start)].face >= 0) continue;
        const int face_id = arr.face_count();
        Arrangement::Face face;
        double area2 = 0.0;
        int e = start;
        do {
            auto& he = arr.half_edges[static_cast<size_t>(e)];
            he.face = face_id;
            face.edges.push_back(e);
            const Circle& c = fam.circle(he.circle);
            const Point pa = arr.vertices[static_cast<size_t>(he.from)].p;
            const Point pb = arr.vertices[static_cast<size_t>(he.to)].p;
            const double sweep = he.ccw ? normalize_angle(he.angle_to - he.angle_from)
                                        : -normalize_angle(he.angle_from - he.angle_to);
            area2 += c.center.x * (pb.y - pa.y) - c.center.y * (pb.x - pa.x) +
                     c.radius * c.radius * sweep;
            e = he.next;
        } while (e != start);
        face.signed_area = 0.5 * area2;
        face.bounded = face.signed_area > 0.0;
        arr.faces.push_back(std::move(face));
    }

    for (int f = 0; f < arr.face_count(); ++f)
        if (!arr.faces[static_cast<size_t>(f)].bounded) arr.unbounded_face = f;

    // Deterministic face order: by smallest incident vertex, then smallest edge.
    std::vector<int> perm(arr.faces.size());
    for (size_t f = 0; f < perm.size(); ++f) perm[f] = static_cast<int>(f);
    auto face_key = [&](int f) {
        const auto& edges = arr.faces[static_cast<size_t>(f)].edges;
        int min_vertex = arr.vertex_count();
        int min_edge = static_cast<int>(arr.half_edges.size());
        for (int e : edges) {
            min_vertex = std::min(min_vertex, arr.half_edges[static_cast<size_t>(e)].from);
            min_edge = std::min(min_edge, e);
        }
        return std::pair<int, int>{min_vertex, min_edge};
    };
    std::sort(perm.begin(), perm.end(),
              [&](int a, int b) { return face_key(a) < face_key(b); });
    std::vector<int> inverse(perm.size());
    for (size_t pos = 0; pos < perm.size(); ++pos) inverse[static_cast<size_t>(perm[pos])] = static_cast<int>(pos);
    std::vector<Arrangement::Face> reordered(arr.faces.size());
    for (size_t f = 0; f < arr.faces.size(); ++f)
        reordered[static_cast<size_t>(inverse[f])] = std::move(arr.faces[f]);
    arr.faces = std::move(reordered);
    for (auto& he : arr.half_edges) he.face = inverse[static_cast<size_t>(he.face)];
    if (arr.unbounded_face >= 0) arr.unbounded_face = inverse[static_cast<size_t>(arr.unbounded_face)];

    return arr;
}

DigonFaceReport enumerate_digon_faces(const Arrangement& arr) {
    DigonFaceReport report;
    for (int f = 0; f < arr.face_count(); ++f) {
        const auto& face = arr.faces[static_cast<size_t>(f)];
        if (!face.bounded || face.edges.size() != 2) continue;

        const auto& e0 = arr.half_edges[static_cast<size_t>(face.edges[0])];
        const auto& e1 = arr.half_edges[static_cast<size_t>(face.edges[1])];
        if (e0.circle == e1.circle) {
            report.anomalies.push_back("face " + std::to_string(f) +
                                       ": two-edge face on a single circle");
            continue;
        }
        const bool swap = e0.circle > e1.circle;
        const auto& lo = swap ? e1 : e0;
        const auto& hi = swap ? e0 : e1;

        // A ccw half-edge keeps its disc's interior on the left, so the face
        // lies inside that disc; a cw half-edge puts the face outside.
        if (lo.ccw && hi.ccw)
            report.records.push_back({lo.circle, hi.circle, DigonKind::Lens});
        else if (lo.ccw && !hi.ccw)
            report.records.push_back({lo.circle, hi.circle, DigonKind::LuneInsideFirst});
        else if (!lo.ccw && hi.ccw)
            report.records.push_back({lo.circle, hi.circle, DigonKind::LuneInsideSecond});
        else
            report.anomalies.push_back("face " + std::to_string(f) +
                                       ": bounded two-edge face inside neither disc");
    }
    std::sort(report.records.begin(), report.records.end());
    return report;
}

}  // namespace digon
