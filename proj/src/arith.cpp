#include "densitometer/arith.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace dsm::arith {

namespace {

int parity(long long x) { return static_cast<int>(((x % 2) + 2) % 2); }

bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

int kottwitz_sign(int n, int a) {
    if (a < 0 || a > n)
        throw std::invalid_argument("kottwitz_sign: a out of [0, n]");
    long long exponent = static_cast<long long>(n) * (n - 1) / 2 - a;
    return parity(exponent) == 0 ? 1 : -1;
}

bool gross_form_exists(const SignatureProfile& profile) {
    long long sum = 0;
    int sign_product = 1;
    for (int a : profile.a_list) {
        if (a < 0 || a > profile.n)
            throw std::invalid_argument("gross_form_exists: signature out of range");
        sum += static_cast<long long>(profile.n) * (profile.n - 1) / 2 + a;
        sign_product *= kottwitz_sign(profile.n, a);
    }
    bool by_parity = parity(sum) == 0;
    if (by_parity != (sign_product == 1))
        throw std::logic_error("gross_form_exists: parity/sign criteria disagree");
    return by_parity;
}

long long dim_group(GroupFamily, int rank) {
    if (rank < 1) throw std::invalid_argument("dim_group: rank must be >= 1");
    return static_cast<long long>(rank) * (2LL * rank + 1);
}

long long dim_so(long long m) {
    if (m < 1) throw std::invalid_argument("dim_so: m must be >= 1");
    return m * (m - 1) / 2;
}

BigInt group_order(GroupFamily family, int rank, long long p, int level) {
    if (!is_prime(p)) throw std::invalid_argument("group_order: p must be prime");
    if (rank < 1 || level < 1)
        throw std::invalid_argument("group_order: rank and level must be >= 1");
    BigInt order = boost::multiprecision::pow(BigInt(p), rank * rank);
    for (int i = 1; i <= rank; ++i)
        order *= boost::multiprecision::pow(BigInt(p), 2 * i) - 1;
    order *= boost::multiprecision::pow(
        BigInt(p), static_cast<unsigned>((level - 1) * dim_group(family, rank)));
    return order;
}

OmegaReport omega_and_bounds(const std::vector<std::pair<long long, int>>& q) {
    OmegaReport rep;
    std::set<long long> primes;
    for (auto [p, e] : q) {
        if (!is_prime(p))
            throw std::invalid_argument("omega_and_bounds: nonprime factor " +
                                        std::to_string(p));
        if (e < 1) throw std::invalid_argument("omega_and_bounds: exponent < 1");
        if (!primes.insert(p).second)
            throw std::invalid_argument("omega_and_bounds: repeated prime " +
                                        std::to_string(p));
        for (int i = 0; i < e; ++i) {
            if (rep.norm > (1LL << 62) / p)
                throw std::overflow_error("omega_and_bounds: |q| overflow");
            rep.norm *= p;
        }
    }
    rep.omega = static_cast<int>(primes.size());

    long long u = 2;
    while (primes.count(u)) {
        do { ++u; } while (!is_prime(u));
    }
    rep.smallest_coprime_prime = u;

    const double log_norm = std::log(static_cast<double>(rep.norm));
    const double loglog = std::log(log_norm);
    rep.omega_bound = loglog > 0 ? 2.0 * log_norm / loglog
                                 : std::numeric_limits<double>::quiet_NaN();
    rep.coprime_bound = 2.0 * log_norm;
    rep.omega_ok = loglog > 0 && rep.omega <= rep.omega_bound;
    rep.coprime_ok = rep.smallest_coprime_prime <= rep.coprime_bound;
    return rep;
}

int induction_growth_exponent(Parabolic parabolic) {
    const long long dim_g = dim_group(GroupFamily::SOodd, 2);
    switch (parabolic) {
        case Parabolic::Borel:
            // Levi GL1 x GL1, abelian: no fixed-vector growth on the Levi.
            return static_cast<int>((dim_g - 2) / 2);
        case Parabolic::Klingen:
        case Parabolic::Siegel:
            // Levi GL2 (dim 4); its fixed-vector dimensions grow with
            // exponent 1.
            return static_cast<int>((dim_g - 4) / 2 + 1);
    }
    throw std::logic_error("induction_growth_exponent: bad parabolic");
}

std::vector<LedgerRow> sxdh_ledger() {
    const long long dim_g = dim_group(GroupFamily::SOodd, 2);
    const long long saito_kurokawa_exponent = arthur::gsk_deficiencies(1, 2).delta2;

    auto bound_exponent = [&](const std::string& name) -> long long {
        // Proven |q|-exponents: the generic shapes are bounded by the full
        // cohomology (volume) count; the one-dimensional shape contributes
        // O(1); B and Q go through parameter counts times induced fixed
        // vectors (0 + 4 and 1 + 4); P through the endoscopic deficiency.
        if (name == "G" || name == "Y") return dim_g;
        if (name == "F") return 0;
        if (name == "B") return 0 + induction_growth_exponent(Parabolic::Borel);
        if (name == "Q") return 1 + induction_growth_exponent(Parabolic::Klingen);
        if (name == "P") return saito_kurokawa_exponent;
        throw std::logic_error("sxdh_ledger: unknown shape " + name);
    };

    std::vector<LedgerRow> rows;
    for (const auto& cat : arthur::shape_catalog_SO5()) {
        LedgerRow row;
        row.shape = cat.shape.name;
        row.rate = cat.rate;
        row.dim_g = dim_g;
        row.bound_exponent = bound_exponent(row.shape);
        row.target_exponent =
            row.rate.infinite ? Rat(0) : Rat(2 * dim_g) / row.rate.value;
        row.pass = Rat(row.bound_exponent) <= row.target_exponent;
        row.tight = Rat(row.bound_exponent) == row.target_exponent;
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace dsm::arith
