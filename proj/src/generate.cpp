#include "digon/generate.hpp"

#include <algorithm>
#include <cmath>

namespace digon {

namespace {

uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

uint64_t Rng::next() {
    // splitmix64 stream: portable and fast enough for every use here.
    state_ += 0x9e3779b97f4a7c15ULL;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double Rng::unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

double Rng::range(double lo, double hi) { return lo + (hi - lo) * unit(); }

int Rng::uniform_int(int lo, int hi) {
    return lo + static_cast<int>(next() % static_cast<uint64_t>(hi - lo + 1));
}

uint64_t derive_seed(uint64_t master, uint64_t counter) {
    return splitmix64(master ^ splitmix64(counter * 0x9e3779b97f4a7c15ULL));
}

namespace {

Point sample_in_disc(Rng& rng, double radius) {
    for (;;) {
        const double x = rng.range(-1.0, 1.0);
        const double y = rng.range(-1.0, 1.0);
        if (x * x + y * y <= 1.0) return {radius * x, radius * y};
    }
}

std::vector<Point> sample_centers(Rng& rng, int n, double disc_radius, double min_gap,
                                  int max_retries) {
    std::vector<Point> centers;
    centers.reserve(static_cast<size_t>(n));
    int attempts = 0;
    while (static_cast<int>(centers.size()) < n) {
        if (++attempts > max_retries * std::max(n, 1) + 1000)
            throw RetriesExhausted("could not place centers with the requested gap");
        const Point p = sample_in_disc(rng, disc_radius);
        bool ok = true;
        for (const Point& q : centers)
            if (dist(p, q) < min_gap) {
                ok = false;
                break;
            }
        if (ok) centers.push_back(p);
    }
    return centers;
}

}  // namespace

CircleFamily random_family(const GeneratorParams& params) {
    if (params.n < 3) throw PreconditionError("random_family: n must be at least 3");
    Rng rng(params.seed);
    for (int attempt = 0; attempt < params.max_retries; ++attempt) {
        auto centers = sample_centers(rng, params.n, 1.0, params.center_min_gap,
                                      params.max_retries);
        double d_max = 0.0;
        for (size_t i = 0; i < centers.size(); ++i)
            for (size_t j = i + 1; j < centers.size(); ++j)
                d_max = std::max(d_max, dist(centers[i], centers[j]));

        // r_i + r_j > d_max >= d(i,j) and |r_i - r_j| < spread*gap <= d(i,j),
        // so every pair properly crosses; validation still arbitrates the
        // simplicity conditions.
        const double lo = d_max / 2.0 + params.radius_margin;
        const double hi = lo + params.radius_spread * params.center_min_gap;
        std::vector<Circle> circles;
        circles.reserve(centers.size());
        for (const Point& c : centers) circles.push_back({c, rng.range(lo, hi)});

        auto result = CircleFamily::validate(std::move(circles), Tolerance{});
        if (auto* fam = std::get_if<CircleFamily>(&result)) return std::move(*fam);
    }
    throw RetriesExhausted("random_family: no valid family after max_retries attempts");
}

CircleFamily unit_family(int n, uint64_t seed, int max_retries) {
    if (n < 2) throw PreconditionError("unit_family: n must be at least 2");
    Rng rng(seed);
    for (int attempt = 0; attempt < max_retries; ++attempt) {
        auto centers = sample_centers(rng, n, 0.95, 0.05, max_retries);
        std::vector<Circle> circles;
        circles.reserve(centers.size());
        for (const Point& c : centers) circles.push_back({c, 1.0});
        auto result = CircleFamily::validate(std::move(circles), Tolerance{});
        if (auto* fam = std::get_if<CircleFamily>(&result)) return std::move(*fam);
    }
    throw RetriesExhausted("unit_family: no valid family after max_retries attempts");
}

// ---------------------------------------------------------------------------
// Tight families
// ---------------------------------------------------------------------------

namespace {

// Stored witness chain, found by search_tight and frozen here. Two large
// circles crossing at right angles at the origin, plus small circles marching
// geometrically along the outer wedge, each poking shallowly across both
// large curves. The n-circle witness is the 2 + (n-2) prefix; its census is
// 2n-2 digons, all lenses: the two large circles lens with each other and
// with every small circle, and the two extreme small circles lens together.
// tight_family re-verifies the census on every call and never trusts these
// numbers. Layout: x, y, r per circle.
const double kTightChain[] = {
    -7.0710678118654755, -7.0710678118654755, 10,
    -7.0710678118654755, 7.0710678118654755,  10,
    1,                   -0.0001,             0.73130476479704376,
    1.25,                0.0002,              0.92083469687063868,
    1.5625,              -0.0003,             1.1610795640949829,
    1.953125,            0.0004,              1.4662681874913357,
    2.44140625,          -0.0005,             1.8547915084292765,
    3.0517578125,        0.0006,              2.3503930699477942,
    3.814697265625,      -0.0007,             2.9836324389205333,
    4.76837158203125,    0.0008,              3.793641438055773,
    5.9604644775390625,  -0.0009,             4.8301863447821445,
    7.4505805969238281,  0.001,               6.1560596747010337,
};

}  // namespace

int tight_family_min_n() { return 4; }
int tight_family_max_n() { return 12; }

CircleFamily tight_family(int n, Tolerance tol) {
    if (n < tight_family_min_n() || n > tight_family_max_n())
        throw ConstructionUnavailable(n);

    std::vector<Circle> circles;
    circles.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        circles.push_back({{kTightChain[3 * i], kTightChain[3 * i + 1]}, kTightChain[3 * i + 2]});

    auto result = CircleFamily::validate(std::move(circles), tol);
    auto* fam = std::get_if<CircleFamily>(&result);
    if (fam == nullptr)
        throw std::logic_error("tight_family: stored witness failed validation for n = " +
                               std::to_string(n));
    const Census census = digon_census(*fam);
    if (census.digons != 2 * n - 2 || census.lunes != 0)
        throw std::logic_error("tight_family: stored witness census is off for n = " +
                               std::to_string(n));
    return std::move(*fam);
}

// ---------------------------------------------------------------------------
// Search
// ---------------------------------------------------------------------------

namespace {

struct Evaluation {
    bool valid = false;
    int lenses = 0;
    int lunes = 0;
    // Higher is better; target is lenses == 2n-2 with zero lunes.
    double score = -1.0;
};

Evaluation evaluate_candidate(const std::vector<Circle>& circles, Tolerance tol) {
    Evaluation ev;
    auto result = CircleFamily::validate(circles, tol);
    auto* fam = std::get_if<CircleFamily>(&result);
    if (fam == nullptr) return ev;
    const Census c = digon_census(*fam);
    ev.valid = true;
    ev.lenses = c.lenses;
    ev.lunes = c.lunes;
    ev.score = static_cast<double>(c.lenses) - static_cast<double>(c.lunes);
    return ev;
}

// Two large circles crossing at right angles at the origin plus a geometric
// chain of small circles in the outer wedge, each poking shallowly across
// both large curves. This is the seed the climbs start from; the stored
// witness chain is this template with zero jitter.
std::vector<Circle> tight_template(int n, Rng& rng) {
    const double big_r = 10.0;
    const double c45 = std::sqrt(0.5);
    const double ratio = 1.25;
    const double beta = 0.003;
    std::vector<Circle> circles;
    circles.push_back({{-big_r * c45, -big_r * c45}, big_r});
    circles.push_back({{-big_r * c45, big_r * c45}, big_r});

    const int k = n - 2;
    double d = 1.0;
    for (int i = 0; i < k; ++i) {
        const double sidestep = 0.0001 * (i + 1) * (i % 2 ? 1.0 : -1.0);
        const Point center{d * (1.0 + 0.001 * rng.range(-1.0, 1.0)),
                           sidestep + d * 0.001 * rng.range(-1.0, 1.0)};
        double clearance = 0.0;
        for (int b = 0; b < 2; ++b)
            clearance = std::max(clearance,
                                 dist(center, circles[static_cast<size_t>(b)].center) - big_r);
        const double r = clearance + beta * (norm(center) - clearance);
        circles.push_back({center, r});
        d *= ratio;
    }
    return circles;
}

bool reaches_target(const Evaluation& ev, int n) {
    return ev.valid && ev.lenses == 2 * n - 2 && ev.lunes == 0;
}

}  // namespace

std::optional<CircleFamily> search_tight(int n, uint64_t seed, int budget) {
    if (n < 4) throw PreconditionError("search_tight: n must be at least 4");
    const Tolerance search_tol{1e-6};  // margin so found witnesses stay robust
    Rng rng(seed);

    std::vector<Circle> current = tight_template(n, rng);
    Evaluation best = evaluate_candidate(current, search_tol);
    int evaluations = 1;
    double step = 0.08;
    int stagnant = 0;

    auto finish = [&](const std::vector<Circle>& circles) -> std::optional<CircleFamily> {
        auto strict = CircleFamily::validate(circles, Tolerance{});
        auto* fam = std::get_if<CircleFamily>(&strict);
        if (fam == nullptr) return std::nullopt;
        const Census c = digon_census(*fam);
        if (c.digons != 2 * n - 2 || c.lunes != 0) return std::nullopt;
        return std::move(*fam);
    };

    if (budget > 0 && reaches_target(best, n))
        if (auto fam = finish(current)) return fam;

    while (evaluations < budget) {
        std::vector<Circle> candidate = current;
        const int tweaks = 1 + rng.uniform_int(0, 2);
        for (int t = 0; t < tweaks; ++t) {
            const int idx = rng.uniform_int(0, n - 1);
            auto& c = candidate[static_cast<size_t>(idx)];
            const double scale = step * std::max(c.radius, 0.05);
            switch (rng.uniform_int(0, 2)) {
                case 0: c.center.x += rng.range(-scale, scale); break;
                case 1: c.center.y += rng.range(-scale, scale); break;
                default:
                    c.radius = std::max(1e-3, c.radius + rng.range(-scale, scale));
                    break;
            }
        }

        const Evaluation ev = evaluate_candidate(candidate, search_tol);
        ++evaluations;
        if (ev.score > best.score || (ev.score == best.score && ev.valid && rng.unit() < 0.5)) {
            if (ev.score > best.score) {
                stagnant = 0;
                step = 0.08;
            }
            best = ev;
            current = std::move(candidate);
            if (reaches_target(best, n))
                if (auto fam = finish(current)) return fam;
        } else if (++stagnant > 80) {
            step *= 0.7;
            stagnant = 0;
            if (step < 1e-4) {
                current = tight_template(n, rng);
                best = evaluate_candidate(current, search_tol);
                ++evaluations;
                step = 0.08;
            }
        }
    }
    return std::nullopt;
}

}  // namespace digon
