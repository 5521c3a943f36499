#include "densitometer/spherical.hpp"

#include <cmath>

namespace dsm::sph {

namespace {

double rat_to_double(const Rat& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

void require_dominant_coweight(const Coweight& lam, const lie::RootDatum& rd) {
    for (const auto& alpha : rd.simple_roots)
        if (lie::pairing(alpha, lam) < Rat(0))
            throw std::invalid_argument("macdonald: coweight is not dominant");
}

}  // namespace

UnramifiedParam UnramifiedParam::make(lie::Weight nu, long long p,
                                      const lie::RootDatum& rd) {
    if (p < 2) throw std::invalid_argument("UnramifiedParam: p must be >= 2");
    lie::Weight zero(rd.rank, Rat(0));
    if (!lie::dominance_leq(zero, nu, rd) ||
        !lie::dominance_leq(nu, rd.weyl_vector, rd))
        throw std::invalid_argument(
            "UnramifiedParam: nu outside the dominance interval [0, rho]");
    return UnramifiedParam{std::move(nu), p};
}

bool lr_converges(const UnramifiedParam& param, const Rat& r,
                  const lie::RootDatum& rd) {
    if (r < Rat(2)) throw std::invalid_argument("lr_converges: r must be >= 2");
    RatVec dir = add(scale(Rat(2), rd.weyl_vector),
                     scale(r, sub(param.nu, rd.weyl_vector)));
    for (const auto& cw : rd.fundamental_coweights)
        if (lie::pairing(dir, cw) >= Rat(0)) return false;
    return true;
}

RateValue decay_threshold(const UnramifiedParam& param, const lie::RootDatum& rd) {
    // <2 rho + r (nu - rho), w_i> < 0 for all i pins the infimum at
    // max_i 2 <rho, w_i> / (<rho, w_i> - <nu, w_i>).
    RateValue best = RateValue::finite(Rat(2));
    for (const auto& cw : rd.fundamental_coweights) {
        Rat p = lie::pairing(rd.weyl_vector, cw);
        Rat q = lie::pairing(param.nu, cw);
        if (q == p) return RateValue::inf();
        Rat threshold = Rat(2) * p / (p - q);
        if (threshold > best.value) best.value = threshold;
    }
    return best;
}

std::map<Rat, int> macdonald_exponents(const UnramifiedParam& param,
                                       const Coweight& lam,
                                       const lie::RootDatum& rd) {
    require_dominant_coweight(lam, rd);
    std::map<Rat, int> exps;
    for (const auto& w : lie::weyl_elements(rd)) {
        Rat e = lie::pairing(sub(w.apply(param.nu), rd.weyl_vector), lam);
        ++exps[e];
    }
    return exps;
}

double macdonald_profile(const UnramifiedParam& param, const Coweight& lam,
                         const lie::RootDatum& rd) {
    double total = 0.0;
    for (const auto& [e, count] : macdonald_exponents(param, lam, rd))
        total += count * std::pow(static_cast<double>(param.p), rat_to_double(e));
    return total;
}

double lr_partial_sum(const UnramifiedParam& param, const Rat& r, int radius,
                      const lie::RootDatum& rd) {
    if (radius < 0) throw std::invalid_argument("lr_partial_sum: negative radius");
    const int n = rd.rank;
    const double p = static_cast<double>(param.p);
    const double rr = rat_to_double(r);

    // Per-generator exponents of p for the volume factor and for each Weyl
    // translate of nu; the box sum then only exponentiates dot products.
    std::vector<double> vol_coeff(n);
    for (int i = 0; i < n; ++i)
        vol_coeff[i] = rat_to_double(
            lie::pairing(scale(Rat(2), rd.weyl_vector), rd.fundamental_coweights[i]));
    std::vector<std::vector<double>> orbit_coeff;
    for (const auto& w : lie::weyl_elements(rd)) {
        RatVec shifted = sub(w.apply(param.nu), rd.weyl_vector);
        std::vector<double> row(n);
        for (int i = 0; i < n; ++i)
            row[i] = rat_to_double(lie::pairing(shifted, rd.fundamental_coweights[i]));
        orbit_coeff.push_back(std::move(row));
    }

    std::vector<int> idx(n, 0);
    double total = 0.0, comp = 0.0;  // Kahan accumulator, deterministic order
    while (true) {
        double vol_exp = 0.0;
        for (int i = 0; i < n; ++i) vol_exp += vol_coeff[i] * idx[i];
        double c = 0.0;
        for (const auto& row : orbit_coeff) {
            double e = 0.0;
            for (int i = 0; i < n; ++i) e += row[i] * idx[i];
            c += std::pow(p, e);
        }
        double term = std::pow(p, vol_exp) * std::pow(c, rr);
        double y = term - comp;
        double t = total + y;
        comp = (t - total) - y;
        total = t;

        int pos = n - 1;
        while (pos >= 0 && idx[pos] == radius) idx[pos--] = 0;
        if (pos < 0) break;
        ++idx[pos];
    }
    return total;
}

double rate_from_eigenvalue(double lambda_abs, long long d) {
    if (!(lambda_abs > 0.0) || lambda_abs > 1.0)
        throw std::invalid_argument("rate_from_eigenvalue: need 0 < |lambda| <= 1");
    if (d < 2) throw std::invalid_argument("rate_from_eigenvalue: d must be >= 2");
    if (lambda_abs == 1.0) return std::numeric_limits<double>::infinity();
    double r = std::log(static_cast<double>(d)) / std::log(1.0 / lambda_abs);
    return std::max(r, 2.0);
}

}  // namespace dsm::sph
