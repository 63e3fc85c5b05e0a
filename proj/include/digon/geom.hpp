#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

namespace digon {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

// Numeric slack shared by every predicate in the project.
// Must satisfy 0 < eps < 1e-3.
struct Tolerance {
    double eps = 1e-9;
};

struct Point {
    double x = 0.0;
    double y = 0.0;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point p) { return std::hypot(p.x, p.y); }
inline double dist(Point a, Point b) { return norm(b - a); }
inline Point perp(Point p) { return {-p.y, p.x}; }

struct Circle {
    Point center;
    double radius = 1.0;   // strictly positive and finite
};

struct Segment {
    Point a;
    Point b;
};

// Open counterclockwise arc from `start` to `start + extent` on the circle
// identified by `circle` (index into some family; -1 when standalone).
struct AngularInterval {
    int circle = -1;
    double start = 0.0;    // in [0, 2pi)
    double extent = 0.0;   // in (0, 2pi)
};

// Thrown when an operation's geometric precondition does not hold.
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

double normalize_angle(double a);                       // into [0, 2pi)
double angle_on_circle(const Circle& c, Point p);
Point circle_point(const Circle& c, double angle);

// Total length of the overlap of two arcs on the same circle.
double interval_overlap_length(const AngularInterval& a, const AngularInterval& b);
bool intervals_overlap(const AngularInterval& a, const AngularInterval& b, Tolerance tol);
// a \ closure(b) empty up to tol, i.e. a is covered by b.
bool interval_covered_by(const AngularInterval& a, const AngularInterval& b, Tolerance tol);

enum class CirclePairKind { TwoPoints, Tangent, Disjoint, Nested, Identical };

struct CirclePairIntersection {
    CirclePairKind kind;
    // Valid only for TwoPoints. `first` is the point on the left of the
    // directed line from c1.center to c2.center.
    Point first;
    Point second;
};

CirclePairIntersection circle_circle_intersection(const Circle& c1, const Circle& c2,
                                                  Tolerance tol);

// The open arc of c strictly interior to the disc bounded by d.
// Requires the circles to properly cross; throws PreconditionError otherwise.
AngularInterval arc_inside_disc(const Circle& c, const Circle& d, Tolerance tol);

Point arc_midpoint(const Circle& c, const AngularInterval& iv);

enum class SegmentCrossKind { None, Proper, CollinearOverlap };

SegmentCrossKind classify_segment_crossing(const Segment& e, const Segment& f, Tolerance tol);

// True iff the segment interiors meet. Shared endpoints do not count;
// collinear overlap counts (and is distinguishable via classify_segment_crossing).
bool segments_properly_cross(const Segment& e, const Segment& f, Tolerance tol);

// True iff the supporting lines meet at a single point strictly outside both
// closed segments (opposite edges of a convex quadrilateral). Parallel -> false.
bool segments_avoiding(const Segment& e, const Segment& f, Tolerance tol);

// True iff e and f are disjoint point sets and the full line through e meets
// the closed segment f. A hit at an endpoint of f counts.
bool line_of_first_hits_second(const Segment& e, const Segment& f, Tolerance tol);

double segment_distance(const Segment& e, const Segment& f);

// Image of c under inversion p -> center + k*(p-center)/|p-center|^2.
// The inversion center must not lie on the curve of c.
Circle invert_circle(const Circle& c, Point center, double k, Tolerance tol);

// Observation-style predicate used by the test harness: requires D to contain
// A,B and exclude Ap,Bp, and Dp the reverse; then reports whether [AB] and
// [ApBp] are disjoint. Precondition failures throw PreconditionError.
bool discs_separate_segments(Point A, Point B, Point Ap, Point Bp,
                             const Circle& D, const Circle& Dp, Tolerance tol);

}  // namespace digon
