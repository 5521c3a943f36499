// Inner-form sign conditions, finite classical group orders, the
// number-theoretic inequalities behind the asymptotic bookkeeping, and the
// exponent ledger comparing proven cohomology-growth exponents against the
// density-hypothesis targets for the six named SO5 shapes.

#pragma once

#include "densitometer/arthur.hpp"
#include "densitometer/rate.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <vector>

namespace dsm::arith {

using BigInt = boost::multiprecision::cpp_int;

// Signature data for an odd orthogonal inner form over a totally real field:
// one entry a_v in [0, n] per infinite place, G(F_v) = SO(2a_v+1, 2n-2a_v).
struct SignatureProfile {
    int n;
    std::vector<int> a_list;
};

// Kottwitz sign of the signature-(2a+1, 2n-2a) form: (-1)^{n(n-1)/2 - a}.
int kottwitz_sign(int n, int a);

// A global inner form with the prescribed archimedean signatures exists iff
// sum_v (n(n-1)/2 + a_v) is even, equivalently iff the Kottwitz signs
// multiply to +1. Both are computed and cross-checked.
bool gross_form_exists(const SignatureProfile& profile);

enum class GroupFamily { Sp, SOodd };

// dim Sp_{2n} = dim SO_{2n+1} = n(2n+1).
long long dim_group(GroupFamily family, int rank);
// dim SO_m = m(m-1)/2.
long long dim_so(long long m);

// |Sp_{2r}(Z/p^m)| (= |SO_{2r+1}| at every level, by the isogeny):
// p^{r^2} prod_{i=1..r} (p^{2i} - 1) at level 1, times p^{(m-1) dim G}.
BigInt group_order(GroupFamily family, int rank, long long p, int level);

struct OmegaReport {
    int omega = 0;          // number of distinct primes
    long long norm = 1;     // |q|
    long long smallest_coprime_prime = 2;
    double omega_bound = 0;     // c log|q| / loglog|q| at c = 2 (NaN if loglog <= 0)
    double coprime_bound = 0;   // d log|q| at d = 2
    bool omega_ok = false;      // omega <= omega_bound
    bool coprime_ok = false;    // smallest coprime prime <= coprime_bound
};

// q given as a factored ideal over Q: distinct (prime, exponent >= 1) pairs.
OmegaReport omega_and_bounds(const std::vector<std::pair<long long, int>>& q);

// Growth exponent of fixed-vector dimensions under parabolic induction from
// the three proper parabolics of SO5; all equal 4.
enum class Parabolic { Borel, Klingen, Siegel };
int induction_growth_exponent(Parabolic parabolic);

struct LedgerRow {
    std::string shape;        // G, Y, F, B, Q, P
    RateValue rate;           // from the shape catalog
    long long bound_exponent; // proven |q|-exponent of the cohomology count
    long long dim_g;          // 10
    Rat target_exponent;      // dim_g * 2 / rate (0 when rate = inf)
    bool pass;                // bound_exponent <= target_exponent
    bool tight;               // equality
};

// Six rows; rates re-derived from the shape catalog, the Saito-Kurokawa
// exponent re-derived from gsk_deficiencies. Exact rational verdicts.
std::vector<LedgerRow> sxdh_ledger();

}  // namespace dsm::arith
