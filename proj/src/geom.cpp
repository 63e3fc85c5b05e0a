#include "digon/geom.hpp"

#include <algorithm>
#include <cmath>

namespace digon {

double normalize_angle(double a) {
    double r = std::fmod(a, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    if (r >= kTwoPi) r = 0.0;
    return r;
}

double angle_on_circle(const Circle& c, Point p) {
    return normalize_angle(std::atan2(p.y - c.center.y, p.x - c.center.x));
}

Point circle_point(const Circle& c, double angle) {
    return {c.center.x + c.radius * std::cos(angle),
            c.center.y + c.radius * std::sin(angle)};
}

double interval_overlap_length(const AngularInterval& a, const AngularInterval& b) {
    // Unroll b at the three shifts that can meet a within [0, 4pi).
    double total = 0.0;
    for (double shift : {-kTwoPi, 0.0, kTwoPi}) {
        double lo = std::max(a.start, b.start + shift);
        double hi = std::min(a.start + a.extent, b.start + shift + b.extent);
        if (hi > lo) total += hi - lo;
    }
    return total;
}

bool intervals_overlap(const AngularInterval& a, const AngularInterval& b, Tolerance tol) {
    return interval_overlap_length(a, b) > tol.eps;
}

bool interval_covered_by(const AngularInterval& a, const AngularInterval& b, Tolerance tol) {
    return a.extent - interval_overlap_length(a, b) <= tol.eps;
}

CirclePairIntersection circle_circle_intersection(const Circle& c1, const Circle& c2,
                                                  Tolerance tol) {
    const double d = dist(c1.center, c2.center);
    const double rsum = c1.radius + c2.radius;
    const double rdiff = std::fabs(c1.radius - c2.radius);

    if (d <= tol.eps && rdiff <= tol.eps)
        return {CirclePairKind::Identical, {}, {}};
    if (d >= rsum - tol.eps) {
        if (d <= rsum + tol.eps) return {CirclePairKind::Tangent, {}, {}};
        return {CirclePairKind::Disjoint, {}, {}};
    }
    // Near-internal-tangency is reported as Nested, never TwoPoints.
    if (d <= rdiff + tol.eps)
        return {CirclePairKind::Nested, {}, {}};

    const Point dir = c2.center - c1.center;
    const double a = (d * d + c1.radius * c1.radius - c2.radius * c2.radius) / (2.0 * d);
    const double h2 = c1.radius * c1.radius - a * a;
    const double h = std::sqrt(std::max(h2, 0.0));
    const Point mid = c1.center + (a / d) * dir;
    const Point off = (h / d) * perp(dir);
    return {CirclePairKind::TwoPoints, mid + off, mid - off};
}

AngularInterval arc_inside_disc(const Circle& c, const Circle& d, Tolerance tol) {
    const auto isect = circle_circle_intersection(c, d, tol);
    if (isect.kind != CirclePairKind::TwoPoints)
        throw PreconditionError("arc_inside_disc: circles do not properly cross");

    const double ap = angle_on_circle(c, isect.first);
    const double aq = angle_on_circle(c, isect.second);
    AngularInterval iv{-1, ap, normalize_angle(aq - ap)};
    Point mid = arc_midpoint(c, iv);
    if (dist(mid, d.center) < d.radius)
        return iv;
    return {-1, aq, kTwoPi - iv.extent};
}

Point arc_midpoint(const Circle& c, const AngularInterval& iv) {
    return circle_point(c, iv.start + 0.5 * iv.extent);
}

namespace {

// Sign of the orientation of (p,q,r) with a tolerance scaled to the
// segment lengths involved; 0 means collinear within slack.
int orient_sign(Point p, Point q, Point r, Tolerance tol) {
    const double v = cross(q - p, r - p);
    const double scale = dist(p, q) * (dist(p, r) + dist(q, r));
    if (std::fabs(v) <= tol.eps * std::max(scale, 1.0)) return 0;
    return v > 0.0 ? 1 : -1;
}

double point_segment_distance(Point p, const Segment& s) {
    const Point d = s.b - s.a;
    const double len2 = dot(d, d);
    if (len2 == 0.0) return dist(p, s.a);
    double t = dot(p - s.a, d) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return dist(p, s.a + t * d);
}

}  // namespace

SegmentCrossKind classify_segment_crossing(const Segment& e, const Segment& f, Tolerance tol) {
    const int o1 = orient_sign(e.a, e.b, f.a, tol);
    const int o2 = orient_sign(e.a, e.b, f.b, tol);
    const int o3 = orient_sign(f.a, f.b, e.a, tol);
    const int o4 = orient_sign(f.a, f.b, e.b, tol);

    if (o1 * o2 < 0 && o3 * o4 < 0) return SegmentCrossKind::Proper;

    if (o1 == 0 && o2 == 0 && o3 == 0 && o4 == 0) {
        // All four endpoints collinear; overlap iff the 1D projections share
        // more than a point.
        const Point d = e.b - e.a;
        const double len2 = dot(d, d);
        if (len2 == 0.0) return SegmentCrossKind::None;
        double t1 = dot(f.a - e.a, d) / len2;
        double t2 = dot(f.b - e.a, d) / len2;
        if (t1 > t2) std::swap(t1, t2);
        const double lo = std::max(0.0, t1);
        const double hi = std::min(1.0, t2);
        if ((hi - lo) * std::sqrt(len2) > tol.eps) return SegmentCrossKind::CollinearOverlap;
    }
    return SegmentCrossKind::None;
}

bool segments_properly_cross(const Segment& e, const Segment& f, Tolerance tol) {
    return classify_segment_crossing(e, f, tol) != SegmentCrossKind::None;
}

bool segments_avoiding(const Segment& e, const Segment& f, Tolerance tol) {
    const Point de = e.b - e.a;
    const Point df = f.b - f.a;
    const double denom = cross(de, df);
    const double scale = norm(de) * norm(df);
    if (std::fabs(denom) <= tol.eps * std::max(scale, 1.0)) return false;  // parallel

    const Point w = f.a - e.a;
    const double t = cross(w, df) / denom;   // along e
    const double u = cross(w, de) / denom;   // along f
    const double te = tol.eps / std::max(norm(de), tol.eps);
    const double tf = tol.eps / std::max(norm(df), tol.eps);
    const bool outside_e = t < -te || t > 1.0 + te;
    const bool outside_f = u < -tf || u > 1.0 + tf;
    return outside_e && outside_f;
}

bool line_of_first_hits_second(const Segment& e, const Segment& f, Tolerance tol) {
    if (segment_distance(e, f) <= tol.eps) return false;  // not disjoint
    const int o1 = orient_sign(e.a, e.b, f.a, tol);
    const int o2 = orient_sign(e.a, e.b, f.b, tol);
    // Opposite sides, or an endpoint of f on the line: the line meets closed f.
    return o1 * o2 <= 0;
}

double segment_distance(const Segment& e, const Segment& f) {
    if (classify_segment_crossing(e, f, Tolerance{1e-300}) == SegmentCrossKind::Proper)
        return 0.0;
    double best = point_segment_distance(e.a, f);
    best = std::min(best, point_segment_distance(e.b, f));
    best = std::min(best, point_segment_distance(f.a, e));
    best = std::min(best, point_segment_distance(f.b, e));
    return best;
}

Circle invert_circle(const Circle& c, Point center, double k, Tolerance tol) {
    if (!(k > 0.0)) throw PreconditionError("invert_circle: power must be positive");
    const double d = dist(c.center, center);
    const double clearance = std::fabs(d - c.radius);
    if (clearance <= tol.eps)
        throw PreconditionError("invert_circle: inversion center lies on the curve");

    const double denom = d * d - c.radius * c.radius;
    const double s = k / denom;
    return {center + s * (c.center - center), std::fabs(s) * c.radius};
}

bool discs_separate_segments(Point A, Point B, Point Ap, Point Bp,
                             const Circle& D, const Circle& Dp, Tolerance tol) {
    auto inside = [&](Point p, const Circle& c) { return dist(p, c.center) < c.radius - tol.eps; };
    auto outside = [&](Point p, const Circle& c) { return dist(p, c.center) > c.radius + tol.eps; };

    if (!inside(A, D) || !inside(B, D) || !outside(Ap, D) || !outside(Bp, D) ||
        !inside(Ap, Dp) || !inside(Bp, Dp) || !outside(A, Dp) || !outside(B, Dp))
        throw PreconditionError("discs_separate_segments: containment preconditions violated");

    return segment_distance({A, B}, {Ap, Bp}) > tol.eps;
}

}  // namespace digon
