#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "digon/family.hpp"

namespace digon {

// Deterministic, platform-independent uniform doubles on a splitmix64 stream.
class Rng {
  public:
    explicit Rng(uint64_t seed) : state_(seed) {}
    uint64_t next();
    double unit();                        // [0, 1)
    double range(double lo, double hi);   // [lo, hi)
    int uniform_int(int lo, int hi);      // inclusive

  private:
    uint64_t state_;
};

// Order-independent per-trial seed derivation from a master seed.
uint64_t derive_seed(uint64_t master, uint64_t counter);

struct GeneratorParams {
    int n = 3;                   // >= 3
    uint64_t seed = 0;
    double center_min_gap = 0.05;
    double radius_margin = 0.01;   // added above half the center spread
    double radius_spread = 0.9;    // band width as a fraction of center_min_gap
    int max_retries = 1000;
};

struct RetriesExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConstructionUnavailable : std::runtime_error {
    explicit ConstructionUnavailable(int n)
        : std::runtime_error("no tight construction is stored for n = " + std::to_string(n)) {}
};

// Random simple family of pairwise properly crossing circles: centers in the
// unit disc separated by at least center_min_gap, radii in a band that forces
// every pair to cross. Bitwise reproducible per seed.
CircleFamily random_family(const GeneratorParams& params);

// All radii exactly 1, centers in a disc of radius 0.95, so every pair
// crosses; validated simple. Bitwise reproducible per seed.
CircleFamily unit_family(int n, uint64_t seed, int max_retries = 1000);

// Stored extremal witness: a simple family of n pairwise intersecting circles
// whose census is exactly 2n-2 digons, all lenses. Supported for n in 4..12.
// Witness coordinates are re-verified through the census before returning.
CircleFamily tight_family(int n, Tolerance tol = {});

int tight_family_min_n();
int tight_family_max_n();

// Randomized hill-climbing search for a 2n-2 lens family, seeded from the
// same two-large-plus-chain template the stored witnesses came from.
// Returns the first validated family reaching the target, or nullopt after
// `budget` evaluations. Deterministic for fixed (seed, budget).
std::optional<CircleFamily> search_tight(int n, uint64_t seed, int budget);

}  // namespace digon
