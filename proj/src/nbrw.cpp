#include "densitometer/nbrw.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

namespace dsm::nbrw {

namespace {

void hard_assert(bool cond, const char* what) {
    if (!cond) throw std::logic_error(std::string("invariant violated: ") + what);
}

bool in_regular(const Digraph& g) {
    std::vector<int> indeg(g.n, 0);
    for (int w : g.out) ++indeg[w];
    return std::all_of(indeg.begin(), indeg.end(),
                       [&](int x) { return x == g.d; });
}

double capped_power(int d, int l, long long cap) {
    double p = 1;
    for (int i = 0; i < l; ++i) {
        p *= d;
        if (p >= static_cast<double>(cap)) return static_cast<double>(cap);
    }
    return p;
}

Eigen::MatrixXd transition_matrix(const Digraph& g) {
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(g.n, g.n);
    const double inv_d = 1.0 / g.d;
    for (int v = 0; v < g.n; ++v)
        for (int k = 0; k < g.d; ++k) t(g.out_neighbor(v, k), v) += inv_d;
    return t;  // column v spreads its mass to out-neighbors
}

}  // namespace

Dist walk_step(const Digraph& g, const Dist& dist) {
    Dist next(g.n, 0.0);
    const double inv_d = 1.0 / g.d;
    for (int v = 0; v < g.n; ++v) {
        if (dist[v] == 0.0) continue;
        const double share = dist[v] * inv_d;
        const std::size_t base = static_cast<std::size_t>(v) * g.d;
        for (int k = 0; k < g.d; ++k) next[g.out[base + k]] += share;
    }
    return next;
}

Dist walk_distribution(const Digraph& g, int x, int steps) {
    if (x < 0 || x >= g.n) throw std::invalid_argument("walk_distribution: bad start");
    Dist dist(g.n, 0.0);
    dist[x] = 1.0;
    for (int l = 1; l <= steps; ++l) {
        dist = walk_step(g, dist);
        long long support = std::count_if(dist.begin(), dist.end(),
                                          [](double m) { return m > 0.0; });
        hard_assert(static_cast<double>(support) <= capped_power(g.d, l, g.n) + 0.5,
                    "|supp(P_x^l)| <= d^l");
        double mass = std::accumulate(dist.begin(), dist.end(), 0.0);
        hard_assert(std::abs(mass - 1.0) <= 1e-12, "distribution mass within 1e-12");
    }
    return dist;
}

double tv_to_uniform(const Dist& dist) {
    const double u = 1.0 / static_cast<double>(dist.size());
    double acc = 0.0;
    for (double m : dist) acc += std::abs(m - u);
    return 0.5 * acc;
}

int mixing_lower_bound(long long n, int d, double eps) {
    if (d < 2) throw std::invalid_argument("mixing_lower_bound: d must be >= 2");
    if (!(eps > 0.0 && eps < 1.0))
        throw std::invalid_argument("mixing_lower_bound: eps in (0,1)");
    double r = std::log(static_cast<double>(n) * (1.0 - eps)) / std::log(double(d));
    return std::max(0, static_cast<int>(std::ceil(r - 1e-9)));
}

MixResult mixing_time(const Digraph& g, const MixOptions& opt) {
    if (!(opt.eps > 0.0 && opt.eps < 1.0))
        throw std::invalid_argument("mixing_time: eps in (0,1) required");
    if (!strongly_connected(g))
        throw std::invalid_argument("mixing_time: chain is reducible (not strongly connected)");
    if (period(g) != 1)
        throw std::invalid_argument(
            "mixing_time: chain is periodic with period " + std::to_string(period(g)) +
            "; total variation to uniform never drops");
    if (!in_regular(g))
        throw std::invalid_argument(
            "mixing_time: uniform distribution is not stationary (graph not d-in-regular)");

    std::vector<int> starts;
    bool exact = g.n <= opt.exact_start_threshold;
    if (exact) {
        starts.resize(g.n);
        std::iota(starts.begin(), starts.end(), 0);
    } else {
        std::set<int> chosen;
        if (g.symmetry.vertex_transitive) chosen.insert(0);
        std::mt19937_64 rng(opt.start_seed);
        std::uniform_int_distribution<int> pick(0, g.n - 1);
        while (static_cast<int>(chosen.size()) < std::min(opt.sampled_starts, g.n))
            chosen.insert(pick(rng));
        starts.assign(chosen.begin(), chosen.end());
    }

    int max_steps = opt.max_steps;
    if (max_steps <= 0) {
        double base = g.d >= 2 ? std::log(double(g.n)) / std::log(double(g.d))
                               : static_cast<double>(g.n);
        max_steps = static_cast<int>(4 * base) + 64;
    }

    std::vector<Dist> dists;
    dists.reserve(starts.size());
    for (int s : starts) {
        Dist d0(g.n, 0.0);
        d0[s] = 1.0;
        dists.push_back(std::move(d0));
    }

    MixResult res;
    res.starts_used = static_cast<int>(starts.size());
    res.exact_over_starts = exact;
    res.log_d_n = g.d >= 2 ? std::log(double(g.n)) / std::log(double(g.d)) : 0.0;

    int t = 0;
    for (;; ++t) {
        double worst = 0.0;
        for (const auto& dist : dists) worst = std::max(worst, tv_to_uniform(dist));
        if (worst <= opt.eps) break;
        if (t >= max_steps)
            throw std::runtime_error(
                "mixing_time: no mixing after " + std::to_string(max_steps) +
                " steps (tv = " + std::to_string(worst) + ")");
        for (auto& dist : dists) dist = walk_step(g, dist);
    }
    res.t_mix = t;
    res.lower_bound = g.d >= 2 ? mixing_lower_bound(g.n, g.d, opt.eps) : 0;
    res.cutoff_ratio = res.log_d_n > 0 ? res.t_mix / res.log_d_n : 0.0;
    hard_assert(res.lower_bound <= res.t_mix, "lower_bound <= t_mix");
    return res;
}

DistanceProfile distance_profile(const Digraph& g, int source_cap,
                                 std::uint64_t seed) {
    DistanceProfile prof;
    std::vector<int> sources;
    if (g.n <= source_cap) {
        prof.exact = true;
        sources.resize(g.n);
        std::iota(sources.begin(), sources.end(), 0);
    } else {
        std::set<int> chosen;
        if (g.symmetry.vertex_transitive) chosen.insert(0);
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int> pick(0, g.n - 1);
        while (static_cast<int>(chosen.size()) < std::min(source_cap, 64))
            chosen.insert(pick(rng));
        sources.assign(chosen.begin(), chosen.end());
    }
    prof.sources_used = static_cast<int>(sources.size());
    for (int s : sources) {
        auto dist = bfs_distances(g, s);
        for (int x : dist) {
            if (x < 0) {
                ++prof.unreachable_pairs;
                continue;
            }
            if (static_cast<std::size_t>(x) >= prof.pair_counts.size())
                prof.pair_counts.resize(x + 1, 0);
            ++prof.pair_counts[x];
        }
    }
    return prof;
}

int diameter(const DistanceProfile& profile) {
    if (profile.unreachable_pairs > 0)
        throw std::invalid_argument("diameter: graph has unreachable pairs");
    return static_cast<int>(profile.pair_counts.size()) - 1;
}

int almost_diameter(const DistanceProfile& profile, long long n, double eps) {
    long long sampled_pairs = profile.unreachable_pairs;
    for (long long c : profile.pair_counts) sampled_pairs += c;
    // Threshold scaled to the sampled share of all n^2 pairs.
    double budget = eps * static_cast<double>(sampled_pairs);
    long long beyond = profile.unreachable_pairs;
    int r = static_cast<int>(profile.pair_counts.size()) - 1;
    for (; r >= 0; --r) {
        if (static_cast<double>(beyond + profile.pair_counts[r]) > budget) break;
        beyond += profile.pair_counts[r];
    }
    return std::max(r, 0);
}

SpectrumReport spectrum(const Digraph& g, int dense_limit) {
    if (g.n > dense_limit)
        throw std::invalid_argument(
            "spectrum: n = " + std::to_string(g.n) + " exceeds the dense limit " +
            std::to_string(dense_limit) + "; use power iteration for top magnitudes");
    Eigen::MatrixXd t = transition_matrix(g);
    Eigen::EigenSolver<Eigen::MatrixXd> solver(t, /*computeEigenvectors=*/false);
    SpectrumReport rep;
    rep.magnitudes.resize(g.n);
    for (int i = 0; i < g.n; ++i) rep.magnitudes[i] = std::abs(solver.eigenvalues()[i]);
    std::sort(rep.magnitudes.begin(), rep.magnitudes.end(), std::greater<double>());
    for (double m : rep.magnitudes) {
        hard_assert(m <= 1.0 + 1e-9, "spectrum magnitudes <= 1 + 1e-9");
        if (m >= 1.0 - 1e-9) ++rep.trivial_count;
    }
    hard_assert(rep.trivial_count >= 1, "at least one magnitude-1 eigenvalue");
    return rep;
}

SpectrumReport lift_spectrum_via_base(const UndirectedGraph& base) {
    const int k = base.k;
    if (k < 2) throw std::invalid_argument("lift_spectrum_via_base: degree >= 2 required");
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(base.n, base.n);
    for (int v = 0; v < base.n; ++v)
        for (int w : base.adj[v]) a(v, w) += 1.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);

    const double q = k - 1;  // lift out-degree
    SpectrumReport rep;
    for (int i = 0; i < base.n; ++i) {
        double lam = solver.eigenvalues()[i];
        double disc = lam * lam - 4.0 * q;
        if (disc >= 0) {
            double root = std::sqrt(disc);
            rep.magnitudes.push_back(std::abs((lam + root) / 2.0) / q);
            rep.magnitudes.push_back(std::abs((lam - root) / 2.0) / q);
        } else {
            // conjugate pair of modulus sqrt(q)
            rep.magnitudes.push_back(std::sqrt(q) / q);
            rep.magnitudes.push_back(std::sqrt(q) / q);
        }
    }
    long long extra = static_cast<long long>(base.n) * k / 2 - base.n;  // m - n
    for (long long i = 0; i < 2 * extra; ++i) rep.magnitudes.push_back(1.0 / q);
    std::sort(rep.magnitudes.begin(), rep.magnitudes.end(), std::greater<double>());
    for (double m : rep.magnitudes)
        if (m >= 1.0 - 1e-9) ++rep.trivial_count;
    return rep;
}

double power_top_magnitude(const Digraph& g, int iterations, std::uint64_t seed) {
    if (!in_regular(g))
        throw std::invalid_argument("power_top_magnitude: graph must be d-in-regular");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Dist v(g.n);
    for (auto& x : v) x = gauss(rng);

    auto project_off_ones = [&](Dist& x) {
        double mean = std::accumulate(x.begin(), x.end(), 0.0) / g.n;
        for (auto& c : x) c -= mean;
    };
    auto norm = [](const Dist& x) {
        double s = 0;
        for (double c : x) s += c * c;
        return std::sqrt(s);
    };

    project_off_ones(v);
    double n0 = norm(v);
    for (auto& c : v) c /= n0;

    // Geometric mean of per-step growth over the second half of the run.
    double log_growth = 0.0;
    int counted = 0;
    for (int it = 0; it < iterations; ++it) {
        Dist w = walk_step(g, v);
        project_off_ones(w);
        double nw = norm(w);
        if (nw == 0.0) return 0.0;
        if (it >= iterations / 2) {
            log_growth += std::log(nw);
            ++counted;
        }
        for (auto& c : w) c /= nw;
        v = std::move(w);
    }
    return counted > 0 ? std::exp(log_growth / counted) : 0.0;
}

int density_count(const SpectrumReport& report, int d, double r) {
    double threshold = std::pow(static_cast<double>(d), -1.0 / r);
    int count = 0;
    int trivial_left = report.trivial_count;
    for (double m : report.magnitudes) {
        if (m >= 1.0 - 1e-9 && trivial_left > 0) {
            --trivial_left;
            continue;
        }
        if (m >= threshold) ++count;
    }
    return count;
}

DensityVerdict density_check(
    const std::vector<std::pair<long long, int>>& n_and_count, double r) {
    if (n_and_count.size() < 3)
        throw std::invalid_argument("density_check: need at least 3 family members");
    for (std::size_t i = 1; i < n_and_count.size(); ++i)
        if (n_and_count[i].first <= n_and_count[i - 1].first)
            throw std::invalid_argument("density_check: sizes must increase");

    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double m = static_cast<double>(n_and_count.size());
    for (auto [n, count] : n_and_count) {
        double x = std::log(static_cast<double>(n));
        double y = std::log(static_cast<double>(std::max(count, 1)));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    DensityVerdict v;
    v.slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    v.threshold = 2.0 / r + 0.15;
    v.pass = v.slope <= v.threshold;
    return v;
}

std::vector<double> power_norm_profile(const Eigen::MatrixXd& t,
                                       const Eigen::MatrixXd& projector,
                                       int l_max, double top_nontrivial) {
    const int n = static_cast<int>(t.rows());
    std::vector<double> profile;
    Eigen::MatrixXd restricted = t * projector;
    Eigen::MatrixXd power = restricted;
    double c_fit = 0.0;
    for (int l = 1; l <= l_max; ++l) {
        double sigma = power.jacobiSvd().singularValues()(0);
        if (l == 1) {
            double envelope = std::max(top_nontrivial, 1e-300);
            c_fit = sigma / envelope;
        } else if (top_nontrivial > 0) {
            double envelope =
                c_fit * std::pow(double(l), double(n)) * std::pow(top_nontrivial, l);
            hard_assert(sigma <= envelope * (1 + 1e-9),
                        "||T^l|| <= c l^s lambda^l envelope");
        }
        profile.push_back(std::pow(sigma, 1.0 / l));
        if (l < l_max) power = restricted * power;
    }
    return profile;
}

std::vector<double> power_norm_profile(const Digraph& g, int l_max,
                                       int dense_limit) {
    if (g.n > dense_limit)
        throw std::invalid_argument("power_norm_profile: n exceeds dense limit");
    Eigen::MatrixXd t = transition_matrix(g);
    Eigen::MatrixXd q = Eigen::MatrixXd::Identity(g.n, g.n) -
                        Eigen::MatrixXd::Constant(g.n, g.n, 1.0 / g.n);
    SpectrumReport rep = spectrum(g, dense_limit);
    double top_nontrivial = 0.0;
    int skip = rep.trivial_count;
    for (double m : rep.magnitudes) {
        if (skip > 0) {
            --skip;
            continue;
        }
        top_nontrivial = m;
        break;
    }
    return power_norm_profile(t, q, l_max, top_nontrivial);
}

std::optional<std::pair<int, int>> collision_free_check(const Digraph& g, int x,
                                                        int horizon) {
    if (x < 0 || x >= g.n) throw std::invalid_argument("collision_free_check: bad start");
    // visits[v] = sorted list of steps at which v is in the support
    std::vector<std::vector<int>> visits(g.n);
    Dist dist(g.n, 0.0);
    dist[x] = 1.0;
    visits[x].push_back(0);
    for (int l = 1; l <= horizon; ++l) {
        dist = walk_step(g, dist);
        for (int v = 0; v < g.n; ++v)
            if (dist[v] > 0.0) visits[v].push_back(l);
    }
    std::optional<std::pair<int, int>> best;
    for (int v = 0; v < g.n; ++v) {
        const auto& times = visits[v];
        for (std::size_t i = 1; i < times.size(); ++i) {
            std::pair<int, int> cand{times[i - 1], times[i]};
            std::pair<int, int> key{cand.second, cand.first};
            if (!best ||
                key < std::pair<int, int>{best->second, best->first})
                best = cand;
        }
    }
    return best;
}

CoveringReport covering_exponents(const Digraph& g, double eps) {
    if (g.d < 2)
        throw std::invalid_argument("covering_exponents: degenerate growth at d = 1");
    if (!g.symmetry.vertex_transitive)
        throw std::invalid_argument("covering_exponents: needs a vertex-transitive graph");
    auto dist = bfs_distances(g, 0);
    int max_r = 0;
    for (int x : dist) {
        if (x < 0)
            throw std::invalid_argument("covering_exponents: graph not connected from 0");
        max_r = std::max(max_r, x);
    }
    CoveringReport rep;
    rep.ball_sizes.assign(max_r + 1, 0);
    for (int x : dist) ++rep.ball_sizes[x];
    for (int r = 1; r <= max_r; ++r) rep.ball_sizes[r] += rep.ball_sizes[r - 1];

    const long long most = static_cast<long long>(
        std::ceil((1.0 - eps) * static_cast<double>(g.n)));
    rep.radius_all = max_r;
    rep.radius_most = max_r;
    for (int r = 0; r <= max_r; ++r)
        if (rep.ball_sizes[r] >= most) {
            rep.radius_most = r;
            break;
        }
    const double log_d_n = std::log(double(g.n)) / std::log(double(g.d));
    rep.kappa = rep.radius_all / log_d_n;
    rep.kappa_mu = rep.radius_most / log_d_n;
    hard_assert(rep.radius_most <= rep.radius_all, "kappa_mu <= kappa");
    if (eps < 0.5)
        hard_assert(rep.radius_all <= 2 * rep.radius_most + 1,
                    "radius_all <= 2 radius_most + 1");
    return rep;
}

WalkReport walk_report(const Digraph& g, double eps, const MixOptions& opt_in) {
    MixOptions opt = opt_in;
    opt.eps = eps;
    MixResult mix = mixing_time(g, opt);

    WalkReport rep;
    rep.n = g.n;
    rep.d = g.d;
    rep.eps = eps;
    rep.t_mix = mix.t_mix;
    rep.log_d_n = mix.log_d_n;
    rep.cutoff_ratio = mix.cutoff_ratio;
    rep.lower_bound = mix.lower_bound;

    DistanceProfile prof = distance_profile(g);
    rep.diameter = diameter(prof);
    rep.almost_diameter = almost_diameter(prof, g.n, eps);
    rep.distances_exact = prof.exact;
    hard_assert(rep.almost_diameter <= rep.diameter, "almost_diameter <= diameter");
    if (g.symmetry.vertex_transitive && g.symmetry.orbit_count == 1 && eps < 0.5)
        hard_assert(rep.diameter <= 2 * rep.almost_diameter,
                    "diameter <= 2 * almost_diameter on transitive graphs");

    rep.collision_horizon = std::max(4, static_cast<int>(mix.log_d_n) + 2);
    rep.first_collision = collision_free_check(g, 0, rep.collision_horizon);
    return rep;
}

}  // namespace dsm::nbrw
