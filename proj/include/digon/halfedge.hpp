#pragma once

#include <string>
#include <vector>

#include "digon/family.hpp"

namespace digon {

// Planar subdivision induced by the circle family, as a half-edge structure.
// Every vertex is a crossing of exactly two circles (degree 4), every
// half-edge is a directed arc between angularly consecutive vertices on one
// circle, and faces are next-cycles with the interior on the left.
struct Arrangement {
    struct Vertex {
        Point p;
        int ci = -1, cj = -1;  // the two crossing circles, ci < cj
    };
    struct HalfEdge {
        int circle = -1;
        int from = -1, to = -1;       // vertex ids
        bool ccw = true;              // direction along the circle
        double angle_from = 0.0;      // angles of the endpoints on the circle
        double angle_to = 0.0;
        int twin = -1, next = -1;
        int face = -1;
    };
    struct Face {
        std::vector<int> edges;       // one next-cycle
        double signed_area = 0.0;     // negative exactly for the unbounded face
        bool bounded = true;
    };

    std::vector<Vertex> vertices;
    std::vector<HalfEdge> half_edges;
    std::vector<Face> faces;
    int unbounded_face = -1;

    int vertex_count() const { return static_cast<int>(vertices.size()); }
    int edge_count() const { return static_cast<int>(half_edges.size()) / 2; }
    int face_count() const { return static_cast<int>(faces.size()); }
    bool euler_ok() const { return vertex_count() - edge_count() + face_count() == 2; }
};

Arrangement build_arrangement(const CircleFamily& fam);

struct DigonFaceReport {
    std::vector<DigonRecord> records;     // sorted by (i, j, kind)
    std::vector<std::string> anomalies;   // 2-edge bounded faces inside neither disc, etc.
};

// Every bounded face with exactly two boundary edges, classified by the
// orientation of its half-edges. The unbounded face is never reported.
DigonFaceReport enumerate_digon_faces(const Arrangement& arr);

}  // namespace digon
