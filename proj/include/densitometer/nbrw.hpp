// Random-walk laboratory on d-out-regular digraphs: walk distributions and
// total-variation mixing, cutoff diagnostics, almost-diameter, dense and
// estimated spectra with density counts, operator-norm profiles, collision
// tests and covering exponents.

#pragma once

#include "densitometer/digraph.hpp"

#include <Eigen/Dense>

#include <optional>
#include <vector>

namespace dsm::nbrw {

using Dist = std::vector<double>;

// One step of the walk: mass at v splits equally over its d out-neighbors.
Dist walk_step(const Digraph& g, const Dist& dist);

// T^l applied to the point mass at x. Checks support growth <= d^l and
// normalization within 1e-12 on every call.
Dist walk_distribution(const Digraph& g, int x, int steps);

// Half L1 distance to uniform.
double tv_to_uniform(const Dist& dist);

struct MixOptions {
    double eps = 0.25;
    int exact_start_threshold = 5000;  // all starts when n <= this
    int sampled_starts = 32;
    std::uint64_t start_seed = 1;
    int max_steps = 0;  // 0 = automatic (generous multiple of log_d n)
};

struct MixResult {
    int t_mix = 0;
    int lower_bound = 0;
    double log_d_n = 0;
    double cutoff_ratio = 0;
    int starts_used = 0;
    bool exact_over_starts = false;
};

// min{ l : max_x tv(P_x^l, u) <= eps }, the max running over all starts
// below the exact threshold, otherwise over orbit representatives plus a
// seeded sample. Requires strong connectivity, aperiodicity and d-in-
// regularity; throws a diagnostic otherwise. Asserts the support lower
// bound on every run.
MixResult mixing_time(const Digraph& g, const MixOptions& opt = {});

// ceil(log_d n - log_d(1/(1-eps))); d must be >= 2.
int mixing_lower_bound(long long n, int d, double eps);

struct DistanceProfile {
    std::vector<long long> pair_counts;  // pair_counts[r] = #{(x,y): dist = r}
    long long unreachable_pairs = 0;
    int sources_used = 0;
    bool exact = false;  // all sources scanned
};

DistanceProfile distance_profile(const Digraph& g, int source_cap = 5000,
                                 std::uint64_t seed = 1);

// Diameter (max distance over sampled pairs; exact when the profile is).
// Throws if any sampled pair is unreachable.
int diameter(const DistanceProfile& profile);

// Smallest R with #{(x,y) : dist(x,y) > R} <= eps * n^2 over the sampled
// sources (scaled to all pairs when sampling).
int almost_diameter(const DistanceProfile& profile, long long n, double eps);

struct SpectrumReport {
    std::vector<double> magnitudes;  // sorted descending
    int trivial_count = 0;           // |lambda| >= 1 - 1e-9
    bool complete = true;            // full spectrum vs top estimates only
};

// Dense spectrum of (1/d) * adjacency. Throws when n exceeds the limit
// (use power_top_magnitude or the lift factorization instead).
SpectrumReport spectrum(const Digraph& g, int dense_limit = 4000);

// Complete spectrum of the non-backtracking lift of a k-regular base graph,
// obtained from the base adjacency spectrum through the quadratic
// mu^2 - lambda mu + (k-1) = 0 plus the +-1 eigenvalues of multiplicity
// m - n. Exact for simple regular base graphs; cheap at large size.
SpectrumReport lift_spectrum_via_base(const UndirectedGraph& base);

// Estimated top nontrivial magnitude by power iteration on the complement
// of the constant vector. Requires in-regularity.
double power_top_magnitude(const Digraph& g, int iterations = 300,
                           std::uint64_t seed = 1);

// #{ nontrivial |lambda_i| >= d^{-1/r} }.
int density_count(const SpectrumReport& report, int d, double r);

struct DensityVerdict {
    double slope = 0;
    double threshold = 0;
    bool pass = false;
};

// Least-squares slope of log max(N(r),1) against log n over a family of at
// least three graphs with increasing n; passes when slope <= 2/r + 0.15.
DensityVerdict density_check(const std::vector<std::pair<long long, int>>& n_and_count,
                             double r);

// ||T^l restricted|\^{1/l} for l = 1..l_max, T and the restriction projector
// given explicitly (the digraph wrapper restricts to the complement of the
// constant vector). Asserts the c * l^s * lambda^l envelope with s = matrix
// size and c fitted at l = 1.
std::vector<double> power_norm_profile(const Eigen::MatrixXd& t,
                                       const Eigen::MatrixXd& projector,
                                       int l_max, double top_nontrivial);

std::vector<double> power_norm_profile(const Digraph& g, int l_max,
                                       int dense_limit = 4000);

// Smallest (earlier, later) pair of steps <= horizon whose supports of
// T^step 1_x intersect, or nullopt if the walk is collision-free up to the
// horizon. Ordered by later step, then earlier.
std::optional<std::pair<int, int>> collision_free_check(const Digraph& g, int x,
                                                        int horizon);

struct CoveringReport {
    int radius_all = 0;    // smallest r with |B(r)| = n
    int radius_most = 0;   // smallest r with |B(r)| >= (1-eps) n
    double kappa = 0;      // radius_all / log_d n
    double kappa_mu = 0;   // radius_most / log_d n
    std::vector<long long> ball_sizes;  // |B(0)|, |B(1)|, ...
};

// Word-metric ball growth from vertex 0 of a vertex-transitive digraph.
CoveringReport covering_exponents(const Digraph& g, double eps = 0.1);

struct WalkReport {
    long long n = 0;
    int d = 0;
    double eps = 0;
    int t_mix = 0;
    double log_d_n = 0;
    double cutoff_ratio = 0;
    int lower_bound = 0;
    int almost_diameter = 0;
    int diameter = 0;
    bool distances_exact = false;
    std::optional<std::pair<int, int>> first_collision;
    int collision_horizon = 0;
};

WalkReport walk_report(const Digraph& g, double eps = 0.25,
                       const MixOptions& opt = {});

}  // namespace dsm::nbrw
