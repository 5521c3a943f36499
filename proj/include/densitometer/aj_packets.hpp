// Cohomological A-packet combinatorics for the three real forms of SO5:
// the split SO(3,2), the hyperbolic SO(1,4) and the compact SO(5).
// Packet sizes come from Weyl double cosets, members are tracked by the
// direction lambda of their theta-stable parabolic, and cohomology degrees
// by counting noncompact roots positive on lambda.

#pragma once

#include "densitometer/arthur.hpp"
#include "densitometer/lie_core.hpp"

#include <set>
#include <string>
#include <vector>

namespace dsm::aj {

enum class FormLabel { Split, Hyperbolic, Compact };

const char* form_name(FormLabel f);

struct RealForm {
    FormLabel label;
    std::vector<RatVec> compact_roots;  // closed under negation
    int rank_K;                         // = 2 for all three equal-rank forms
    int dim_p;                          // # noncompact roots

    std::vector<RatVec> noncompact_roots() const;
};

RealForm real_form(FormLabel label);

// All 8 roots of the rank-2 odd orthogonal system: +-e1, +-e2, +-(e1 +- e2).
std::vector<RatVec> so5_roots();

// W(K, T^c): the reflection subgroup generated by the form's compact roots.
// Orders: split 2, hyperbolic 4, compact 8.
std::vector<lie::WeylElement> weyl_K(const RealForm& form);

// W(L^, T^) inside W, keyed by the Levi class: T^ -> trivial,
// M^ -> <s_{e2}>, S^ -> <s_{e1-e2}>, G^ -> the full group.
std::vector<lie::WeylElement> weyl_levi(arthur::LeviLabel levi);

// |W_K \ W / W_L|, by explicit orbit partition of the 8-element group.
int packet_size(const RealForm& form, arthur::LeviLabel levi);

// One lambda direction per W_K-orbit of admissible directions:
// T^ -> regular chamber representatives, M^ -> short-root directions,
// S^ -> long-root directions, G^ -> {0}.
std::vector<RatVec> theta_parabolic_reps(const RealForm& form,
                                         arthur::LeviLabel levi);

struct PacketReport {
    FormLabel form;
    arthur::LeviLabel levi;
    int size = 0;
    std::vector<RatVec> representatives;
    std::vector<std::set<int>> degree_sets;  // one per member
    int total_dim = 0;                       // sum of degree-set sizes
};

// Degree sets: for lambda != 0, R = #{noncompact alpha with <alpha,lambda> > 0}
// and the set is {R, dim_p - R}; the lambda = 0 packet (full Levi) carries the
// Betti degrees of the compact dual instead.
PacketReport cohomology_degrees(const RealForm& form, arthur::LeviLabel levi);

// total_dim == 2^{rank G - rank K} * |W_K \ W|.
bool total_dim_check(const RealForm& form, arthur::LeviLabel levi);

}  // namespace dsm::aj
