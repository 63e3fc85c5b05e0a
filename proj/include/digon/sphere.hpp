#pragma once

#include <string>
#include <vector>

#include "digon/graph.hpp"

namespace digon {

struct UnitVec3 {
    double x = 0.0, y = 0.0, z = 0.0;
};

UnitVec3 operator-(UnitVec3 v);
UnitVec3 cross(UnitVec3 a, UnitVec3 b);
double dot(UnitVec3 a, UnitVec3 b);
double norm3(UnitVec3 v);
UnitVec3 normalized(UnitVec3 v);

// Central projection onto the unit sphere of the plane embedded at z = -1.
// The image always lies in the open southern hemisphere.
UnitVec3 project_to_sphere(Point p);

// Minor great-circle arc between two non-antipodal unit vectors.
struct GreatArc {
    UnitVec3 a, b;
};

GreatArc make_great_arc(UnitVec3 a, UnitVec3 b, Tolerance tol);

// Whether p lies strictly inside the minor arc (endpoints excluded, within
// angular tolerance). p is assumed to lie on the arc's great circle.
bool great_arc_interior_contains(const GreatArc& arc, UnitVec3 p, Tolerance tol);

enum class ArcPairKind { NoCross, Cross, DegenerateOverlap };

// Algebraic crossing test: intersect the two great-circle planes and check
// both +/- directions against the arcs' angular ranges. Arcs on a common
// great circle are degenerate when they overlap in more than a point.
ArcPairKind classify_great_arc_pair(const GreatArc& u, const GreatArc& v, Tolerance tol);

bool great_arcs_cross(const GreatArc& u, const GreatArc& v, Tolerance tol);

// The doubled graph: every center projected south plus its antipode, blue
// edges copied to both hemispheres, red edges rerouted to antipodal partners.
struct SphereGraph {
    struct Vertex {
        UnitVec3 pos;
        int circle = -1;
        bool antipode = false;
        int part = 0;  // 0 = external-south / internal-north, 1 = the complement
    };
    struct Edge {
        int a = -1, b = -1;  // vertex ids
        EdgeColor color = EdgeColor::Red;
    };

    std::vector<Vertex> vertices;
    std::vector<Edge> edges;
    Tolerance tol;

    GreatArc arc_of(const Edge& e) const;
    int vertex_id(int circle, bool antipode) const { return 2 * circle + (antipode ? 1 : 0); }
};

// Requires n >= 3, no label conflicts, and labels on every edge endpoint.
SphereGraph build_doubled_graph(const ColoredGraph& g);

struct GPrimeReport {
    struct ArcPairViolation {
        int e1 = -1, e2 = -1;
        bool degenerate = false;
    };
    std::vector<ArcPairViolation> crossings;
    std::vector<int> part_violations;      // edges not joining the two parts
    bool coloring_consistent = true;       // BFS 2-coloring exists and matches parts
    int edge_count = 0;
    int edge_bound = 0;                    // 2*(2n) - 4

    bool noncrossing() const { return crossings.empty(); }
    bool bipartite() const { return part_violations.empty() && coloring_consistent; }
    bool edge_bound_ok() const { return edge_count <= edge_bound; }
    bool all_ok() const { return noncrossing() && bipartite() && edge_bound_ok(); }
};

GPrimeReport verify_gprime(const SphereGraph& sg);

}  // namespace digon
