// Exact root-datum arithmetic for the classical families B_n and C_n:
// simple (co)roots in the standard e_i coordinates, Cartan matrix and its
// inverse transpose, fundamental (co)weights, Weyl vector, dominance order,
// and the finite Weyl group realized as signed permutations.

#pragma once

#include "densitometer/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dsm::lie {

enum class Family { B, C };

inline const char* family_name(Family f) { return f == Family::B ? "B" : "C"; }

// A weight (element of the dual Cartan, coordinates in the e_i basis).
// Coweights share the representation; the pairing is the standard dot
// product in these coordinates.
using Weight = RatVec;
using Coweight = RatVec;

struct RootDatum {
    Family family;
    int rank;
    std::vector<RatVec> simple_roots;       // alpha_i
    std::vector<RatVec> simple_coroots;     // alpha_i^vee
    std::vector<std::vector<long long>> cartan;  // C_ij = <alpha_i, alpha_j^vee>
    RatMat cartan_bar;                      // (C^t)^{-1}
    std::vector<Weight> fundamental_weights;     // omega_i
    std::vector<Coweight> fundamental_coweights; // omega_i^vee
    Weight weyl_vector;                     // rho = sum of fundamental weights

    std::string name() const { return family_name(family) + std::to_string(rank); }
};

RootDatum build_root_datum(Family family, int rank);

// Positive roots in the chosen coordinates (B_n: e_i +- e_j for i<j and e_i;
// C_n: e_i +- e_j for i<j and 2e_i).
std::vector<RatVec> positive_roots(const RootDatum& rd);

// <w, cw>: the natural pairing, exact. Throws on dimension mismatch.
Rat pairing(const Weight& w, const Coweight& cw);

// nu <= mu in the dominance order: <nu - mu, omega_i^vee> <= 0 for every
// fundamental coweight.
bool dominance_leq(const Weight& nu, const Weight& mu, const RootDatum& rd);

// A Weyl group element w with w(e_j) = sign[j] * e_{perm[j]}.
struct WeylElement {
    std::vector<int> perm;   // perm[j] = image index of basis vector j
    std::vector<int> sign;   // sign[j] in {+1, -1}

    static WeylElement identity(int rank);

    Weight apply(const Weight& x) const;
    WeylElement compose(const WeylElement& other) const;  // this after other

    bool operator==(const WeylElement& o) const {
        return perm == o.perm && sign == o.sign;
    }
    bool operator<(const WeylElement& o) const {
        return perm != o.perm ? perm < o.perm : sign < o.sign;
    }
};

// Reflection in an arbitrary root of the ambient coordinates. The root must
// be of signed-permutation type (e_i, 2e_i, or e_i +- e_j), which covers all
// B/C roots. Throws otherwise.
WeylElement reflection_in_root(const RatVec& root);

// Full Weyl group by closure of the simple reflections. Guarded at rank 8.
std::vector<WeylElement> weyl_elements(const RootDatum& rd);

// Closure of an arbitrary generating set inside the signed-permutation group.
std::vector<WeylElement> weyl_closure(std::vector<WeylElement> generators, int rank);

// The dominance-maximal element of the Weyl orbit of nu.
Weight dominant_representative(const Weight& nu, const RootDatum& rd);

}  // namespace dsm::lie
