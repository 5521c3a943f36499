#include "densitometer/lie_core.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace dsm::lie {

namespace {

RatVec basis_vec(int n, int i, const Rat& c) {
    RatVec v(n, Rat(0));
    v[i] = c;
    return v;
}

}  // namespace

RootDatum build_root_datum(Family family, int rank) {
    if (rank < 1) throw std::invalid_argument("build_root_datum: rank must be >= 1");
    RootDatum rd;
    rd.family = family;
    rd.rank = rank;

    for (int i = 0; i + 1 < rank; ++i) {
        RatVec r(rank, Rat(0));
        r[i] = 1;
        r[i + 1] = -1;
        rd.simple_roots.push_back(r);
        rd.simple_coroots.push_back(r);
    }
    if (family == Family::B) {
        // alpha_n = e_n (short), alpha_n^vee = 2 e_n
        rd.simple_roots.push_back(basis_vec(rank, rank - 1, Rat(1)));
        rd.simple_coroots.push_back(basis_vec(rank, rank - 1, Rat(2)));
    } else {
        // alpha_n = 2 e_n (long), alpha_n^vee = e_n
        rd.simple_roots.push_back(basis_vec(rank, rank - 1, Rat(2)));
        rd.simple_coroots.push_back(basis_vec(rank, rank - 1, Rat(1)));
    }

    rd.cartan.assign(rank, std::vector<long long>(rank, 0));
    RatMat cartan_rat(rank, RatVec(rank));
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) {
            Rat c = dot(rd.simple_roots[i], rd.simple_coroots[j]);
            if (c.denominator() != 1)
                throw std::logic_error("build_root_datum: non-integral Cartan entry");
            rd.cartan[i][j] = c.numerator();
            cartan_rat[i][j] = c;
        }
    rd.cartan_bar = invert(transpose(cartan_rat));

    // omega_i solves <omega_i, alpha_j^vee> = delta_ij, and omega_i^vee
    // solves <alpha_j, omega_i^vee> = delta_ij.
    RatMat coroot_rows(rank), root_rows(rank);
    for (int j = 0; j < rank; ++j) {
        coroot_rows[j] = rd.simple_coroots[j];
        root_rows[j] = rd.simple_roots[j];
    }
    for (int i = 0; i < rank; ++i) {
        RatVec e(rank, Rat(0));
        e[i] = 1;
        rd.fundamental_weights.push_back(solve_linear(coroot_rows, e));
        rd.fundamental_coweights.push_back(solve_linear(root_rows, e));
    }

    rd.weyl_vector.assign(rank, Rat(0));
    for (const auto& w : rd.fundamental_weights)
        rd.weyl_vector = add(rd.weyl_vector, w);

    return rd;
}

std::vector<RatVec> positive_roots(const RootDatum& rd) {
    const int n = rd.rank;
    std::vector<RatVec> roots;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            RatVec diff(n, Rat(0)), sum(n, Rat(0));
            diff[i] = 1;
            diff[j] = -1;
            sum[i] = 1;
            sum[j] = 1;
            roots.push_back(diff);
            roots.push_back(sum);
        }
    for (int i = 0; i < n; ++i)
        roots.push_back(basis_vec(n, i, rd.family == Family::B ? Rat(1) : Rat(2)));
    return roots;
}

Rat pairing(const Weight& w, const Coweight& cw) { return dot(w, cw); }

bool dominance_leq(const Weight& nu, const Weight& mu, const RootDatum& rd) {
    RatVec diff = sub(nu, mu);
    for (const auto& cw : rd.fundamental_coweights)
        if (pairing(diff, cw) > Rat(0)) return false;
    return true;
}

WeylElement WeylElement::identity(int rank) {
    WeylElement w;
    w.perm.resize(rank);
    w.sign.assign(rank, 1);
    for (int i = 0; i < rank; ++i) w.perm[i] = i;
    return w;
}

Weight WeylElement::apply(const Weight& x) const {
    if (x.size() != perm.size())
        throw std::invalid_argument("WeylElement::apply: dimension mismatch");
    Weight out(x.size());
    for (std::size_t j = 0; j < x.size(); ++j)
        out[perm[j]] = Rat(sign[j]) * x[j];
    return out;
}

WeylElement WeylElement::compose(const WeylElement& other) const {
    // (this ∘ other)(e_j) = this(other.sign[j] e_{other.perm[j]})
    WeylElement out;
    out.perm.resize(perm.size());
    out.sign.resize(perm.size());
    for (std::size_t j = 0; j < perm.size(); ++j) {
        out.perm[j] = perm[other.perm[j]];
        out.sign[j] = other.sign[j] * sign[other.perm[j]];
    }
    return out;
}

WeylElement reflection_in_root(const RatVec& root) {
    const int n = static_cast<int>(root.size());
    Rat norm2 = dot(root, root);
    if (norm2 == Rat(0)) throw std::invalid_argument("reflection_in_root: zero root");
    WeylElement w = WeylElement::identity(n);
    for (int j = 0; j < n; ++j) {
        RatVec e(n, Rat(0));
        e[j] = 1;
        // s(x) = x - 2 (x,root)/(root,root) root
        RatVec img = sub(e, scale(Rat(2) * root[j] / norm2, root));
        int target = -1, sgn = 0;
        for (int i = 0; i < n; ++i) {
            if (img[i] == Rat(0)) continue;
            if (target != -1 || (img[i] != Rat(1) && img[i] != Rat(-1)))
                throw std::invalid_argument(
                    "reflection_in_root: not a signed-permutation reflection");
            target = i;
            sgn = img[i] == Rat(1) ? 1 : -1;
        }
        if (target == -1)
            throw std::invalid_argument("reflection_in_root: degenerate image");
        w.perm[j] = target;
        w.sign[j] = sgn;
    }
    return w;
}

std::vector<WeylElement> weyl_closure(std::vector<WeylElement> generators, int rank) {
    std::set<WeylElement> seen;
    std::vector<WeylElement> frontier{WeylElement::identity(rank)};
    seen.insert(frontier[0]);
    while (!frontier.empty()) {
        std::vector<WeylElement> next;
        for (const auto& g : frontier)
            for (const auto& s : generators) {
                WeylElement h = s.compose(g);
                if (seen.insert(h).second) next.push_back(h);
            }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

std::vector<WeylElement> weyl_elements(const RootDatum& rd) {
    if (rd.rank > 8)
        throw std::invalid_argument("weyl_elements: rank > 8 enumeration guard");
    std::vector<WeylElement> gens;
    for (const auto& r : rd.simple_roots) gens.push_back(reflection_in_root(r));
    return weyl_closure(std::move(gens), rd.rank);
}

Weight dominant_representative(const Weight& nu, const RootDatum& rd) {
    Weight cur = nu;
    std::vector<WeylElement> simple;
    for (const auto& r : rd.simple_roots) simple.push_back(reflection_in_root(r));
    bool moved = true;
    while (moved) {
        moved = false;
        for (int i = 0; i < rd.rank; ++i) {
            if (pairing(cur, rd.simple_coroots[i]) < Rat(0)) {
                cur = simple[i].apply(cur);
                moved = true;
            }
        }
    }
    return cur;
}

}  // namespace dsm::lie
