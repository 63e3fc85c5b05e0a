#pragma once

#include <string>
#include <variant>
#include <vector>

#include "digon/geom.hpp"

namespace digon {

enum class FamilyErrorKind { NotIntersecting, Tangent, Nested, TriplePoint, NearDegenerate };

struct FamilyError {
    FamilyErrorKind kind;
    int i = -1;           // offending circle indices; k = -1 unless a triple is involved
    int j = -1;
    int k = -1;
    std::string message;
};

const char* to_string(FamilyErrorKind k);

// A family of n >= 2 circles validated to form a simple arrangement of
// pairwise properly crossing circles: every pair classifies TwoPoints, no
// intersection point lies within tol of a third curve, and no two
// intersection points coincide within tol.
class CircleFamily {
  public:
    static std::variant<CircleFamily, FamilyError> validate(std::vector<Circle> circles,
                                                            Tolerance tol = {});

    const std::vector<Circle>& circles() const { return circles_; }
    const Circle& circle(int i) const { return circles_[static_cast<size_t>(i)]; }
    int size() const { return static_cast<int>(circles_.size()); }
    Tolerance tol() const { return tol_; }

    // Both crossing points of the pair (i, j), cached at validation time.
    const CirclePairIntersection& pair_points(int i, int j) const;

  private:
    CircleFamily(std::vector<Circle> circles, Tolerance tol,
                 std::vector<CirclePairIntersection> pairs)
        : circles_(std::move(circles)), tol_(tol), pairs_(std::move(pairs)) {}

    std::vector<Circle> circles_;
    Tolerance tol_;
    std::vector<CirclePairIntersection> pairs_;  // row-major upper triangle
};

enum class DigonKind {
    Lens,              // intersection of the two discs
    LuneInsideFirst,   // disc(i) minus disc(j), contained in disc(i)
    LuneInsideSecond,  // disc(j) minus disc(i), contained in disc(j)
};

struct DigonRecord {
    int i = -1;  // i < j
    int j = -1;
    DigonKind kind = DigonKind::Lens;

    friend bool operator==(const DigonRecord&, const DigonRecord&) = default;
    friend auto operator<=>(const DigonRecord&, const DigonRecord&) = default;
};

const char* to_string(DigonKind k);

// For each pair, decide which of its three candidate digons (lens and the two
// lunes) survive as faces by testing every third curve's arcs. Sorted by
// (i, j, kind).
std::vector<DigonRecord> detect_digons_pairwise(const CircleFamily& fam);

struct Census {
    int n = 0;
    int lenses = 0;
    int lunes = 0;
    int digons = 0;
    int digon_bound = 0;       // 2n-2
    int lens_bound = 0;        // 2n-2
    int lune_bound = 0;        // 2n-4, the tight bound
    int lune_bound_prior = 0;  // 2n-2, the earlier published bound
    bool bounds_applicable = false;  // false for n <= 2
    bool within_bounds = true;       // vacuously true when not applicable
};

Census census_from_records(int n, const std::vector<DigonRecord>& records);
Census digon_census(const CircleFamily& fam);

}  // namespace digon
