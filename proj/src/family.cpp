#include "digon/family.hpp"

#include <algorithm>
#include <cmath>

namespace digon {

const char* to_string(FamilyErrorKind k) {
    switch (k) {
        case FamilyErrorKind::NotIntersecting: return "NotIntersecting";
        case FamilyErrorKind::Tangent: return "Tangent";
        case FamilyErrorKind::Nested: return "Nested";
        case FamilyErrorKind::TriplePoint: return "TriplePoint";
        case FamilyErrorKind::NearDegenerate: return "NearDegenerate";
    }
    return "?";
}

const char* to_string(DigonKind k) {
    switch (k) {
        case DigonKind::Lens: return "lens";
        case DigonKind::LuneInsideFirst: return "lune_inside_first";
        case DigonKind::LuneInsideSecond: return "lune_inside_second";
    }
    return "?";
}

namespace {

size_t pair_index(int n, int i, int j) {
    // Upper triangle of an n x n table, i < j.
    return static_cast<size_t>(i) * n - static_cast<size_t>(i) * (i + 1) / 2 +
           static_cast<size_t>(j - i - 1);
}

}  // namespace

std::variant<CircleFamily, FamilyError> CircleFamily::validate(std::vector<Circle> circles,
                                                               Tolerance tol) {
    const int n = static_cast<int>(circles.size());
    if (n < 2)
        return FamilyError{FamilyErrorKind::NearDegenerate, -1, -1, -1,
                           "a family needs at least two circles"};
    for (int i = 0; i < n; ++i) {
        const Circle& c = circles[static_cast<size_t>(i)];
        if (!(c.radius > 0.0) || !std::isfinite(c.radius) || !std::isfinite(c.center.x) ||
            !std::isfinite(c.center.y))
            return FamilyError{FamilyErrorKind::NearDegenerate, i, -1, -1,
                               "circle " + std::to_string(i) + " is not a valid circle"};
    }

    std::vector<CirclePairIntersection> pairs;
    pairs.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            auto isect = circle_circle_intersection(circles[static_cast<size_t>(i)],
                                                    circles[static_cast<size_t>(j)], tol);
            switch (isect.kind) {
                case CirclePairKind::TwoPoints: break;
                case CirclePairKind::Disjoint:
                    return FamilyError{FamilyErrorKind::NotIntersecting, i, j, -1,
                                       "circles " + std::to_string(i) + "," + std::to_string(j) +
                                           " do not intersect"};
                case CirclePairKind::Tangent:
                    return FamilyError{FamilyErrorKind::Tangent, i, j, -1,
                                       "circles " + std::to_string(i) + "," + std::to_string(j) +
                                           " are tangent (within tolerance)"};
                case CirclePairKind::Nested:
                    return FamilyError{FamilyErrorKind::Nested, i, j, -1,
                                       "circle pair " + std::to_string(i) + "," +
                                           std::to_string(j) + " is nested"};
                case CirclePairKind::Identical:
                    return FamilyError{FamilyErrorKind::NearDegenerate, i, j, -1,
                                       "circles " + std::to_string(i) + "," + std::to_string(j) +
                                           " coincide"};
            }
            pairs.push_back(isect);
        }
    }

    // Simplicity: no intersection point may lie on (within tol of) a third curve.
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const auto& ps = pairs[pair_index(n, i, j)];
            for (const Point& p : {ps.first, ps.second}) {
                for (int k = 0; k < n; ++k) {
                    if (k == i || k == j) continue;
                    const Circle& ck = circles[static_cast<size_t>(k)];
                    if (std::fabs(dist(p, ck.center) - ck.radius) <= tol.eps)
                        return FamilyError{FamilyErrorKind::TriplePoint, i, j, k,
                                           "intersection of " + std::to_string(i) + "," +
                                               std::to_string(j) + " lies on circle " +
                                               std::to_string(k)};
                }
            }
        }
    }

    // No two intersection points may coincide within tol.
    struct TaggedPoint {
        Point p;
        int i, j;
    };
    std::vector<TaggedPoint> points;
    points.reserve(pairs.size() * 2);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const auto& ps = pairs[pair_index(n, i, j)];
            points.push_back({ps.first, i, j});
            points.push_back({ps.second, i, j});
        }
    }
    for (size_t a = 0; a < points.size(); ++a)
        for (size_t b = a + 1; b < points.size(); ++b)
            if (dist(points[a].p, points[b].p) <= tol.eps)
                return FamilyError{FamilyErrorKind::NearDegenerate, points[a].i, points[a].j, -1,
                                   "intersection points of pairs (" + std::to_string(points[a].i) +
                                       "," + std::to_string(points[a].j) + ") and (" +
                                       std::to_string(points[b].i) + "," +
                                       std::to_string(points[b].j) +
                                       ") coincide within tolerance"};

    return CircleFamily(std::move(circles), tol, std::move(pairs));
}

const CirclePairIntersection& CircleFamily::pair_points(int i, int j) const {
    if (i > j) std::swap(i, j);
    return pairs_[pair_index(size(), i, j)];
}

std::vector<DigonRecord> detect_digons_pairwise(const CircleFamily& fam) {
    const int n = fam.size();
    const Tolerance tol = fam.tol();

    // arc_in[k][m]: the arc of circle k strictly inside disc m.
    std::vector<std::vector<AngularInterval>> arc_in(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) {
        arc_in[static_cast<size_t>(k)].resize(static_cast<size_t>(n));
        for (int m = 0; m < n; ++m) {
            if (m == k) continue;
            auto iv = arc_inside_disc(fam.circle(k), fam.circle(m), tol);
            iv.circle = k;
            arc_in[static_cast<size_t>(k)][static_cast<size_t>(m)] = iv;
        }
    }

    std::vector<DigonRecord> out;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            bool lens = true;      // disc(i) & disc(j) untouched by third curves
            bool lune_ij = true;   // disc(i) \ disc(j)
            bool lune_ji = true;   // disc(j) \ disc(i)
            for (int k = 0; k < n && (lens || lune_ij || lune_ji); ++k) {
                if (k == i || k == j) continue;
                const auto& in_i = arc_in[static_cast<size_t>(k)][static_cast<size_t>(i)];
                const auto& in_j = arc_in[static_cast<size_t>(k)][static_cast<size_t>(j)];
                if (lens && intervals_overlap(in_i, in_j, tol)) lens = false;
                if (lune_ij && !interval_covered_by(in_i, in_j, tol)) lune_ij = false;
                if (lune_ji && !interval_covered_by(in_j, in_i, tol)) lune_ji = false;
            }
            if (lens) out.push_back({i, j, DigonKind::Lens});
            if (lune_ij) out.push_back({i, j, DigonKind::LuneInsideFirst});
            if (lune_ji) out.push_back({i, j, DigonKind::LuneInsideSecond});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Census census_from_records(int n, const std::vector<DigonRecord>& records) {
    Census c;
    c.n = n;
    for (const auto& r : records)
        (r.kind == DigonKind::Lens ? c.lenses : c.lunes) += 1;
    c.digons = static_cast<int>(records.size());
    c.digon_bound = 2 * n - 2;
    c.lens_bound = 2 * n - 2;
    c.lune_bound = 2 * n - 4;
    c.lune_bound_prior = 2 * n - 2;
    c.bounds_applicable = n >= 3;
    c.within_bounds = !c.bounds_applicable ||
                      (c.digons <= c.digon_bound && c.lenses <= c.lens_bound &&
                       c.lunes <= c.lune_bound);
    return c;
}

Census digon_census(const CircleFamily& fam) {
    return census_from_records(fam.size(), detect_digons_pairwise(fam));
}

}  // namespace digon
