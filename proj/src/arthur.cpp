#include "densitometer/arthur.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace dsm {

double RateValue::as_double() const {
    if (infinite) return std::numeric_limits<double>::infinity();
    return static_cast<double>(value.numerator()) /
           static_cast<double>(value.denominator());
}

}  // namespace dsm

namespace dsm::arthur {

int NilpotentOrbit::total() const {
    int s = 0;
    for (int p : partition) s += p;
    return s;
}

std::string NilpotentOrbit::partition_str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < partition.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(partition[i]);
    }
    return out + ")";
}

NilpotentOrbit make_orbit(lie::Family family, std::vector<int> partition) {
    std::sort(partition.begin(), partition.end(), std::greater<int>());
    for (int p : partition)
        if (p <= 0) throw std::invalid_argument("make_orbit: nonpositive part");
    std::map<int, int> mult;
    for (int p : partition) ++mult[p];
    for (auto [part, m] : mult) {
        bool odd_part = part % 2 != 0;
        if (family == lie::Family::C && odd_part && m % 2 != 0)
            throw std::invalid_argument(
                "make_orbit: symplectic partition needs odd parts in even multiplicity");
        if (family == lie::Family::B && !odd_part && m % 2 != 0)
            throw std::invalid_argument(
                "make_orbit: orthogonal partition needs even parts in even multiplicity");
    }
    return NilpotentOrbit{family, std::move(partition)};
}

namespace {

void enumerate_partitions(int remaining, int max_part, std::vector<int>& cur,
                          std::vector<std::vector<int>>& out) {
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        enumerate_partitions(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

bool admissible(lie::Family family, const std::vector<int>& parts) {
    std::map<int, int> mult;
    for (int p : parts) ++mult[p];
    for (auto [part, m] : mult) {
        bool odd_part = part % 2 != 0;
        if (family == lie::Family::C && odd_part && m % 2 != 0) return false;
        if (family == lie::Family::B && !odd_part && m % 2 != 0) return false;
    }
    return true;
}

}  // namespace

std::vector<NilpotentOrbit> nilpotent_partitions(lie::Family family, int total) {
    if (total < 1) throw std::invalid_argument("nilpotent_partitions: N must be >= 1");
    std::vector<std::vector<int>> all;
    std::vector<int> cur;
    enumerate_partitions(total, total, cur, all);
    std::sort(all.begin(), all.end(),
              [](const auto& a, const auto& b) { return a > b; });
    std::vector<NilpotentOrbit> out;
    for (auto& p : all)
        if (admissible(family, p)) out.push_back(NilpotentOrbit{family, p});
    return out;
}

std::vector<long long> weighted_dynkin(const NilpotentOrbit& orbit) {
    const int total = orbit.total();
    const int rank = total / 2;
    if (rank < 1)
        throw std::invalid_argument("weighted_dynkin: rank-0 orbit");

    std::vector<Rat> exponents;
    for (int m : orbit.partition)
        for (int e = m - 1; e >= 1 - m; e -= 2) exponents.emplace_back(e);
    std::sort(exponents.begin(), exponents.end(),
              [](const Rat& a, const Rat& b) { return b < a; });
    RatVec h(exponents.begin(), exponents.begin() + rank);

    lie::RootDatum dual = lie::build_root_datum(orbit.family, rank);
    std::vector<long long> wd(rank);
    for (int i = 0; i < rank; ++i) {
        Rat v = lie::pairing(dual.simple_roots[i], h);
        if (v.denominator() != 1 || v < Rat(0) || v > Rat(2))
            throw std::logic_error("weighted_dynkin: label outside {0,1,2}");
        wd[i] = v.numerator();
    }
    return wd;
}

lie::Weight nu_sigma(const NilpotentOrbit& orbit, const lie::RootDatum& rd) {
    // The orbit lives in the dual group; its family must be dual to rd's.
    lie::Family expected =
        rd.family == lie::Family::B ? lie::Family::C : lie::Family::B;
    if (orbit.family != expected)
        throw std::invalid_argument("nu_sigma: orbit family is not dual to the root datum");
    if (orbit.total() / 2 != rd.rank)
        throw std::invalid_argument("nu_sigma: rank mismatch");

    std::vector<long long> wd = weighted_dynkin(orbit);
    RatMat rows(rd.rank);
    RatVec rhs(rd.rank);
    for (int i = 0; i < rd.rank; ++i) {
        rows[i] = rd.simple_coroots[i];
        rhs[i] = Rat(wd[i], 2);
    }
    return solve_linear(rows, rhs);
}

namespace {

void require_in_interval(const lie::Weight& nu, const lie::RootDatum& rd) {
    lie::Weight zero(rd.rank, Rat(0));
    if (!lie::dominance_leq(zero, nu, rd) ||
        !lie::dominance_leq(nu, rd.weyl_vector, rd))
        throw std::invalid_argument(
            "rate: weight outside the dominance interval [0, rho]");
}

}  // namespace

RateValue rate_invariant(const lie::Weight& nu, const lie::RootDatum& rd) {
    require_in_interval(nu, rd);
    RatVec w_nu(rd.rank);
    for (int i = 0; i < rd.rank; ++i)
        w_nu[i] = lie::pairing(nu, rd.simple_coroots[i]);
    RatVec num = mat_vec(rd.cartan_bar, w_nu);
    RatVec den = mat_vec(rd.cartan_bar, RatVec(rd.rank, Rat(1)));

    RateValue best = RateValue::finite(Rat(2));
    for (int i = 0; i < rd.rank; ++i) {
        if (num[i] == den[i]) return RateValue::inf();
        Rat r = Rat(2) / (Rat(1) - num[i] / den[i]);
        if (r > best.value) best.value = r;
    }
    return best;
}

RateValue rate_oracle(const lie::Weight& nu, const lie::RootDatum& rd) {
    require_in_interval(nu, rd);
    // Per-generator threshold: <nu - (1 - 2/r) rho, omega_i^vee> <= 0 holds
    // exactly when r >= 2 <rho, w_i> / (<rho, w_i> - <nu, w_i>).
    RateValue best = RateValue::finite(Rat(2));
    for (const auto& cw : rd.fundamental_coweights) {
        Rat p = lie::pairing(rd.weyl_vector, cw);
        Rat q = lie::pairing(nu, cw);
        if (q == p) return RateValue::inf();
        Rat threshold = Rat(2) * p / (p - q);
        if (threshold > best.value) best.value = threshold;
    }
    return best;
}

int AShape::total() const {
    int s = 0;
    for (auto [n, m] : pairs) s += n * m;
    return s;
}

NilpotentOrbit arthur_partition_of_shape(const AShape& shape, lie::Family family) {
    std::vector<int> parts;
    for (auto [n, m] : shape.pairs) {
        if (n <= 0 || m <= 0)
            throw std::invalid_argument("arthur_partition_of_shape: nonpositive entry");
        for (int i = 0; i < n; ++i) parts.push_back(m);
    }
    if (parts.empty())
        throw std::invalid_argument("arthur_partition_of_shape: empty shape");
    return make_orbit(family, std::move(parts));
}

const char* levi_name(LeviLabel l) {
    switch (l) {
        case LeviLabel::T: return "T^";
        case LeviLabel::M: return "M^";
        case LeviLabel::S: return "S^";
        case LeviLabel::G: return "G^";
    }
    return "?";
}

LeviLabel principal_levi_of(const NilpotentOrbit& orbit) {
    if (orbit.family != lie::Family::C || orbit.total() != 4)
        throw std::invalid_argument("principal_levi_of: expects a rank-2 symplectic orbit");
    const auto& p = orbit.partition;
    if (p == std::vector<int>{4}) return LeviLabel::G;
    if (p == std::vector<int>{2, 2}) return LeviLabel::S;
    if (p == std::vector<int>{2, 1, 1}) return LeviLabel::M;
    if (p == std::vector<int>{1, 1, 1, 1}) return LeviLabel::T;
    throw std::invalid_argument("principal_levi_of: not a C2 partition");
}

std::vector<CatalogRow> shape_catalog_SO5() {
    const lie::RootDatum b2 = lie::build_root_datum(lie::Family::B, 2);
    std::vector<AShape> shapes = {
        {"G", {{4, 1}}},          // General
        {"Y", {{2, 1}, {2, 1}}},  // Yoshida
        {"F", {{1, 4}}},          // one-dimensional
        {"B", {{1, 2}, {1, 2}}},  // Howe--Piatetski-Shapiro
        {"Q", {{2, 2}}},          // Soudry
        {"P", {{2, 1}, {1, 2}}},  // Saito--Kurokawa
    };
    std::vector<CatalogRow> rows;
    for (auto& s : shapes) {
        CatalogRow row;
        row.orbit = arthur_partition_of_shape(s, lie::Family::C);
        row.levi = principal_levi_of(row.orbit);
        switch (row.levi) {
            case LeviLabel::T: row.sl2_type_name = "trivial"; break;
            case LeviLabel::M: row.sl2_type_name = "minimal"; break;
            case LeviLabel::S: row.sl2_type_name = "subregular"; break;
            case LeviLabel::G: row.sl2_type_name = "principal"; break;
        }
        row.nu = nu_sigma(row.orbit, b2);
        row.rate = rate_invariant(row.nu, b2);
        row.shape = std::move(s);
        rows.push_back(std::move(row));
    }
    return rows;
}

GskDeficiency gsk_deficiencies(int k, int n) {
    if (k < 1 || k >= n)
        throw std::invalid_argument("gsk_deficiencies: need 1 <= k < n");
    auto dim_so = [](long long m) { return m * (m - 1) / 2; };
    long long dim_g = dim_so(2LL * n + 1);
    long long dim_g1 = dim_so(2LL * k + 1);
    long long dim_g2 = dim_so(2LL * (n - k) + 1);
    GskDeficiency d;
    d.delta = (dim_g - dim_g1 - dim_g2) / 2;
    d.delta2 = d.delta + dim_g2;
    if (d.delta2 != (2LL * n + 1) * (n - k))
        throw std::logic_error("gsk_deficiencies: closed form mismatch");
    return d;
}

}  // namespace dsm::arthur
