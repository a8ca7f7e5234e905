#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace pyjama {

/// A complex point X = x + iy together with its margin: the least distance
/// of any x cos(2 pi k / n) + y sin(2 pi k / n), 0 <= k < n, from the
/// nearest integer. Margin > eps means every rotation avoids the closed
/// eps-neighbourhood of the integers.
struct Witness {
    double x = 0;
    double y = 0;
    long n = 0;
    double margin = 0;
    std::uint64_t evaluations = 0;
};

/// Deterministic search parameters. Identical seed and config give a
/// bit-identical Witness regardless of thread count.
struct SearchConfig {
    std::uint64_t seed = 1;
    int starts = 40;
    int max_iterations = 300;   // descent sweeps per start
    double initial_step = 0.5;
    double shrink = 0.5;
    double radius = 0;          // box for random starts; <= 0 means 2n
};

SearchConfig default_search_config(long n);

double margin(double x, double y, long n);

/// Margin over an arbitrary list of rotation angles (radians).
double margin_angles(double x, double y, const std::vector<double>& angles);

/// Warm-start candidate: solve two rotation coordinates exactly against the
/// extremal vector over a grid of integer shifts and keep the best margin.
/// For powers of two (no extremal vector) falls back to origin-centered
/// deterministic random candidates.
std::pair<double, double> seed_from_xi(long n);

/// Multistart coordinate pattern search maximizing the margin. Start 0 is
/// the warm start (extremal-vector target, or the half-ones target when n
/// is a power of two); the rest are seeded random points. Ties between
/// starts break toward the lowest start index.
Witness search_witness(long n, const SearchConfig& config, int threads = 1);

/// Max margin over `samples` uniform random points in the disk of the given
/// radius. Throws invariant_violation if it exceeds 1/2 - delta_n + 1e-9,
/// which would contradict the closed form.
double sample_upper_check(long n, long samples, double radius, std::uint64_t seed);

}  // namespace pyjama
