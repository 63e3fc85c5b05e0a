#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "digon/generate.hpp"
#include "digon/report.hpp"
#include "digon/sphere.hpp"

using namespace digon;

namespace {

const Tolerance kTol{};

UnitVec3 slerp(UnitVec3 a, UnitVec3 b, double t) {
    const double omega = std::acos(std::clamp(dot(a, b), -1.0, 1.0));
    const double s = std::sin(omega);
    const double wa = std::sin((1.0 - t) * omega) / s;
    const double wb = std::sin(t * omega) / s;
    return normalized({wa * a.x + wb * b.x, wa * a.y + wb * b.y, wa * a.z + wb * b.z});
}

double segment_distance_3d(UnitVec3 p1, UnitVec3 q1, UnitVec3 p2, UnitVec3 q2) {
    // Closest distance between two 3D segments (standard clamped solve).
    const UnitVec3 d1{q1.x - p1.x, q1.y - p1.y, q1.z - p1.z};
    const UnitVec3 d2{q2.x - p2.x, q2.y - p2.y, q2.z - p2.z};
    const UnitVec3 r{p1.x - p2.x, p1.y - p2.y, p1.z - p2.z};
    const double a = dot(d1, d1), e = dot(d2, d2), f = dot(d2, r);
    const double c = dot(d1, r), b = dot(d1, d2);
    const double denom = a * e - b * b;
    double s = denom > 1e-15 ? std::clamp((b * f - c * e) / denom, 0.0, 1.0) : 0.0;
    double t = e > 1e-15 ? (b * s + f) / e : 0.0;
    if (t < 0.0) {
        t = 0.0;
        s = std::clamp(-c / a, 0.0, 1.0);
    } else if (t > 1.0) {
        t = 1.0;
        s = std::clamp((b - c) / a, 0.0, 1.0);
    }
    const UnitVec3 w{r.x + s * d1.x - t * d2.x, r.y + s * d1.y - t * d2.y,
                     r.z + s * d1.z - t * d2.z};
    return std::sqrt(dot(w, w));
}

// Chord-subdivision oracle: smallest distance between the two arcs, each
// replaced by 64 chords.
double chord_oracle_distance(const GreatArc& u, const GreatArc& v) {
    constexpr int kChords = 64;
    double best = 1e300;
    for (int i = 0; i < kChords; ++i) {
        const UnitVec3 a0 = slerp(u.a, u.b, static_cast<double>(i) / kChords);
        const UnitVec3 a1 = slerp(u.a, u.b, static_cast<double>(i + 1) / kChords);
        for (int j = 0; j < kChords; ++j) {
            const UnitVec3 b0 = slerp(v.a, v.b, static_cast<double>(j) / kChords);
            const UnitVec3 b1 = slerp(v.a, v.b, static_cast<double>(j + 1) / kChords);
            best = std::min(best, segment_distance_3d(a0, a1, b0, b1));
        }
    }
    return best;
}

UnitVec3 random_unit(Rng& rng) {
    for (;;) {
        const UnitVec3 v{rng.range(-1, 1), rng.range(-1, 1), rng.range(-1, 1)};
        const double n = norm3(v);
        if (n > 0.1 && n <= 1.0) return normalized(v);
    }
}

ColoredGraph synthetic_labeled(int n, std::vector<GraphEdge> edges,
                               std::vector<CircleLabel> labels) {
    ColoredGraph g;
    g.tol = kTol;
    g.labels = std::move(labels);
    g.centers.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) g.centers[static_cast<size_t>(i)] = {double(i), double(i % 2)};
    g.edges = std::move(edges);
    return g;
}

}  // namespace

TEST_CASE("central projection onto the southern hemisphere") {
    const auto south = project_to_sphere({0, 0});
    CHECK(south.x == doctest::Approx(0));
    CHECK(south.z == doctest::Approx(-1));

    const auto p = project_to_sphere({1, 0});
    CHECK(p.x == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(p.z == doctest::Approx(-1.0 / std::sqrt(2.0)));

    const auto q = project_to_sphere({3, 4});
    CHECK(q.x == doctest::Approx(3.0 / std::sqrt(26.0)));
    CHECK(q.y == doctest::Approx(4.0 / std::sqrt(26.0)));
    CHECK(q.z == doctest::Approx(-1.0 / std::sqrt(26.0)));

    Rng rng(31);
    for (int i = 0; i < 200; ++i) {
        const auto v = project_to_sphere({rng.range(-50, 50), rng.range(-50, 50)});
        CHECK(std::fabs(norm3(v) - 1.0) < 1e-12);
        CHECK(v.z < 0.0);
    }
}

TEST_CASE("projection fidelity: the great arc is the projected segment") {
    Rng rng(32);
    for (int trial = 0; trial < 100; ++trial) {
        const Point a{rng.range(-5, 5), rng.range(-5, 5)};
        const Point b{rng.range(-5, 5), rng.range(-5, 5)};
        if (dist(a, b) < 0.1) continue;
        const GreatArc arc{project_to_sphere(a), project_to_sphere(b)};
        const UnitVec3 n = normalized(cross(arc.a, arc.b));
        for (int s = 1; s < 64; ++s) {
            const double t = static_cast<double>(s) / 64.0;
            const UnitVec3 p = project_to_sphere(a + t * (b - a));
            CHECK(std::fabs(dot(p, n)) < 1e-9);                      // on the great circle
            CHECK(great_arc_interior_contains(arc, p, Tolerance{})); // inside the minor arc
        }
    }
}

TEST_CASE("great arc crossing") {
    const UnitVec3 ex{1, 0, 0}, ey{0, 1, 0}, ez{0, 0, 1};
    SUBCASE("orthogonal arcs meeting at their midpoints cross") {
        const double s = 1.0 / std::sqrt(2.0);
        const GreatArc u{ex, ey};
        const GreatArc v{{0.5, 0.5, s}, {0.5, 0.5, -s}};
        CHECK(great_arcs_cross(u, v, kTol));
    }
    SUBCASE("antipodal quarter arcs do not cross") {
        const GreatArc u{ex, ey};
        const GreatArc v{-ex, {0, -1, 0}};
        CHECK_FALSE(great_arcs_cross(u, v, kTol));
        // Same great circle, no overlap: not degenerate either.
        CHECK(classify_great_arc_pair(u, v, kTol) == ArcPairKind::NoCross);
    }
    SUBCASE("meridian quarter arcs in different planes miss") {
        const GreatArc u{ex, ez};
        const GreatArc v{ey, -ez};
        CHECK_FALSE(great_arcs_cross(u, v, kTol));
        // Brute-force corroboration: the arcs stay far apart.
        CHECK(chord_oracle_distance(u, v) > 1e-2);
    }
    SUBCASE("shared endpoints do not count as crossings") {
        const GreatArc u{ex, ey};
        const GreatArc v{ey, ez};
        CHECK_FALSE(great_arcs_cross(u, v, kTol));
    }
    SUBCASE("overlapping arcs on one great circle are degenerate") {
        const double s = 1.0 / std::sqrt(2.0);
        const GreatArc u{ex, {0, 1, 0}};
        const GreatArc v{{s, s, 0}, {-s, s, 0}};
        CHECK(classify_great_arc_pair(u, v, kTol) == ArcPairKind::DegenerateOverlap);
    }
    SUBCASE("degenerate arc construction is rejected") {
        CHECK_THROWS_AS(make_great_arc(ex, -ex, kTol), PreconditionError);
        CHECK_THROWS_AS(make_great_arc(ex, ex, kTol), PreconditionError);
    }
}

TEST_CASE("algebraic crossing test agrees with the chord oracle") {
    Rng rng(33);
    int compared = 0;
    while (compared < 400) {
        const UnitVec3 a = random_unit(rng), b = random_unit(rng);
        const UnitVec3 c = random_unit(rng), d = random_unit(rng);
        if (norm3(cross(a, b)) < 0.1 || norm3(cross(c, d)) < 0.1) continue;
        const GreatArc u{a, b}, v{c, d};
        const double oracle = chord_oracle_distance(u, v);
        // Skip the ambiguous band where chord resolution cannot decide.
        if (oracle > 1e-6 && oracle < 1e-2) continue;
        ++compared;
        CHECK(great_arcs_cross(u, v, kTol) == (oracle <= 1e-6));
    }
}

TEST_CASE("doubling a single blue edge") {
    // Circle 0 external, circle 1 internal, circle 2 isolated.
    const auto g = synthetic_labeled(
        3, {{0, 1, EdgeColor::Blue, {{0, 0}, {1, 1}}}},
        {CircleLabel::External, CircleLabel::Internal, CircleLabel::Unclassified});
    const auto sg = build_doubled_graph(g);
    REQUIRE(sg.vertices.size() == 6);
    REQUIRE(sg.edges.size() == 2);
    for (const auto& e : sg.edges) {
        CHECK(e.color == EdgeColor::Blue);
        CHECK(sg.vertices[size_t(e.a)].part != sg.vertices[size_t(e.b)].part);
    }
    // External south and internal north share a part.
    CHECK(sg.vertices[size_t(sg.vertex_id(0, false))].part ==
          sg.vertices[size_t(sg.vertex_id(1, true))].part);
}

TEST_CASE("doubling a single red edge reroutes to antipodal partners") {
    const auto g = synthetic_labeled(
        3, {{0, 1, EdgeColor::Red, {{0, 0}, {1, 1}}}},
        {CircleLabel::Internal, CircleLabel::Internal, CircleLabel::Unclassified});
    const auto sg = build_doubled_graph(g);
    REQUIRE(sg.edges.size() == 2);
    for (const auto& e : sg.edges) {
        // One endpoint south, the other an antipode.
        CHECK(sg.vertices[size_t(e.a)].antipode != sg.vertices[size_t(e.b)].antipode);
        CHECK(sg.vertices[size_t(e.a)].part != sg.vertices[size_t(e.b)].part);
    }
}

TEST_CASE("doubling rejects bad inputs") {
    SUBCASE("edges on unlabeled endpoints") {
        const auto g = synthetic_labeled(
            3, {{0, 1, EdgeColor::Red, {{0, 0}, {1, 1}}}},
            {CircleLabel::Internal, CircleLabel::Unclassified, CircleLabel::Unclassified});
        CHECK_THROWS_AS(build_doubled_graph(g), PreconditionError);
    }
    SUBCASE("fewer than three circles") {
        const auto g = synthetic_labeled(2, {}, {CircleLabel::Internal, CircleLabel::Internal});
        CHECK_THROWS_AS(build_doubled_graph(g), PreconditionError);
    }
}

TEST_CASE("doubled graph of the tight family") {
    const auto fam = tight_family(5);
    const auto graph = build_colored_graph(fam, detect_digons_pairwise(fam));
    const auto sg = build_doubled_graph(graph);
    CHECK(sg.vertices.size() == 10);
    CHECK(sg.edges.size() == 16);
    for (const auto& e : sg.edges) CHECK(e.color == EdgeColor::Red);

    const auto report = verify_gprime(sg);
    CHECK(report.noncrossing());
    CHECK(report.bipartite());
    CHECK(report.edge_count == 16);
    CHECK(report.edge_bound == 16);
    CHECK(report.edge_bound_ok());

    // Antipodal symmetry: flipping every vertex maps the edge set to itself.
    auto flip = [](int v) { return v ^ 1; };
    for (const auto& e : sg.edges) {
        bool found = false;
        for (const auto& f : sg.edges) {
            if ((f.a == flip(e.a) && f.b == flip(e.b)) ||
                (f.a == flip(e.b) && f.b == flip(e.a)))
                found = true;
        }
        CHECK(found);
    }
}

TEST_CASE("verify_gprime flags planted defects") {
    SUBCASE("planted crossing arcs") {
        SphereGraph sg;
        sg.tol = kTol;
        const double s = 1.0 / std::sqrt(2.0);
        sg.vertices = {{{1, 0, 0}, 0, false, 0},
                       {{0, 1, 0}, 0, true, 1},
                       {{0.5, 0.5, s}, 1, false, 0},
                       {{0.5, 0.5, -s}, 1, true, 1}};
        sg.edges = {{0, 1, EdgeColor::Blue}, {2, 3, EdgeColor::Blue}};
        const auto report = verify_gprime(sg);
        CHECK_FALSE(report.noncrossing());
        REQUIRE(report.crossings.size() == 1);
        CHECK(report.crossings[0].e1 == 0);
        CHECK(report.crossings[0].e2 == 1);
    }
    SUBCASE("planted odd cycle breaks bipartiteness") {
        SphereGraph sg;
        sg.tol = kTol;
        sg.vertices = {{{1, 0, 0}, 0, false, 0},
                       {{0, 1, 0}, 1, false, 1},
                       {{0, 0, 1}, 2, false, 0}};
        sg.edges = {{0, 1, EdgeColor::Blue}, {1, 2, EdgeColor::Blue}, {2, 0, EdgeColor::Blue}};
        const auto report = verify_gprime(sg);
        CHECK_FALSE(report.bipartite());
    }
}

TEST_CASE("doubled graphs of random families pass all checks") {
    for (uint64_t seed = 0; seed < 150; ++seed) {
        const int n = 3 + static_cast<int>(seed % 8);
        const auto fam = random_family({n, 9000 + seed});
        const auto report = run_verify_pipeline(fam);
        CHECK(report.ok);
        REQUIRE(report.gprime.has_value());
        CHECK(report.gprime->noncrossing());
        CHECK(report.gprime->bipartite());
        CHECK(report.gprime->edge_bound_ok());
        // Twice the planar graph's edges, by construction.
        const auto g = build_colored_graph(fam, detect_digons_pairwise(fam));
        CHECK(report.gprime->edge_count == 2 * static_cast<int>(g.edges.size()));
    }
}
