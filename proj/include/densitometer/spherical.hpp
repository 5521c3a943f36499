// Integrability machinery for unramified matrix coefficients: the exact
// L^r-convergence test over the dominant coweight cone, truncated lattice
// sums against the Weyl-sum surrogate for the spherical function, and the
// eigenvalue-to-rate dictionary.

#pragma once

#include "densitometer/arthur.hpp"
#include "densitometer/lie_core.hpp"
#include "densitometer/rate.hpp"

#include <map>
#include <vector>

namespace dsm::sph {

using lie::Coweight;

struct UnramifiedParam {
    lie::Weight nu;  // dominant, 0 <= nu <= rho in dominance order
    long long p;     // residue degree, >= 2

    static UnramifiedParam make(lie::Weight nu, long long p,
                                const lie::RootDatum& rd);
};

// True iff <2 rho + r (nu - rho), omega_i^vee> < 0 strictly for every
// fundamental coweight. Exact and independent of p; r must be >= 2.
bool lr_converges(const UnramifiedParam& param, const Rat& r,
                  const lie::RootDatum& rd);

// inf{ r >= 2 : lr_converges }, computed from the per-generator pairings.
// Agrees exactly with arthur::rate_invariant / rate_oracle.
RateValue decay_threshold(const UnramifiedParam& param, const lie::RootDatum& rd);

// Weyl-sum surrogate for the spherical function at a dominant coweight:
// sum over w in W of p^{<w.nu - rho, lam>}. The Macdonald constants are
// deliberately replaced by 1, so values are comparable only up to the
// constants the asymptotics absorb.
double macdonald_profile(const UnramifiedParam& param, const Coweight& lam,
                         const lie::RootDatum& rd);

// Exact form of the same sum: exponent -> multiplicity over the Weyl group.
std::map<Rat, int> macdonald_exponents(const UnramifiedParam& param,
                                       const Coweight& lam,
                                       const lie::RootDatum& rd);

// Truncated integral surrogate: sum over lam = sum a_i omega_i^vee with
// 0 <= a_i <= radius of p^{<2 rho, lam>} * c(lam)^r, where c is the Weyl-sum
// surrogate above. Monotone non-decreasing in radius; deterministic
// summation order.
double lr_partial_sum(const UnramifiedParam& param, const Rat& r, int radius,
                      const lie::RootDatum& rd);

// Inverts lambda(T) <= d^{-1/r}: r = ln d / ln(1/|lambda|), clamped below
// at 2; |lambda| = 1 maps to infinity. Requires 0 < lambda_abs <= 1.
double rate_from_eigenvalue(double lambda_abs, long long d);

}  // namespace dsm::sph
