// Nilpotent orbits of classical dual groups as partitions, weighted Dynkin
// diagrams, Arthur SL2-types of A-shapes, the closed-form decay-rate
// invariant, and generalized Saito-Kurokawa deficiencies.

#pragma once

#include "densitometer/lie_core.hpp"
#include "densitometer/rate.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dsm::arthur {

// Partition-parametrized nilpotent orbit in the Lie algebra of a classical
// group. The family is the Cartan type of the group the orbit lives in:
//   C (symplectic, N even): every odd part has even multiplicity;
//   B (odd orthogonal):     every even part has even multiplicity.
struct NilpotentOrbit {
    lie::Family family;
    std::vector<int> partition;  // weakly decreasing, positive parts

    int total() const;
    std::string partition_str() const;
};

NilpotentOrbit make_orbit(lie::Family family, std::vector<int> partition);

// All admissible partitions of N under the family's parity constraint,
// sorted descending (lexicographic, a linear extension of dominance).
std::vector<NilpotentOrbit> nilpotent_partitions(lie::Family family, int total);

// Weighted Dynkin diagram of the orbit, computed in the orbit's own root
// system (rank floor(N/2)): each part m contributes exponents
// m-1, m-3, ..., 1-m; the dominant rearrangement h is paired with the
// simple roots. Entries always land in {0,1,2}.
std::vector<long long> weighted_dynkin(const NilpotentOrbit& orbit);

// The weight nu_sigma on the group side: the unique nu with
// <nu, alpha_i^vee> = weighted_dynkin_i / 2 in the given (dual) root datum.
lie::Weight nu_sigma(const NilpotentOrbit& orbit, const lie::RootDatum& rd);

// r(nu) = 2 max_i (1 - (Cbar w_nu)_i / (Cbar 1)_i)^{-1} for 0 <= nu <= rho
// in dominance order; infinity when some ratio reaches 1.
RateValue rate_invariant(const lie::Weight& nu, const lie::RootDatum& rd);

// Independent route: inf{ r >= 2 : nu <= (1 - 2/r) rho }, solved constraint
// by constraint against the fundamental coweights.
RateValue rate_oracle(const lie::Weight& nu, const lie::RootDatum& rd);

// An A-shape: a list of (multiplicity n_i, SL2 block size m_i) pairs.
struct AShape {
    std::string name;  // catalog letter or empty for ad-hoc shapes
    std::vector<std::pair<int, int>> pairs;  // (n_i, m_i)

    int total() const;  // sum n_i * m_i
};

// Partition of the Arthur SL2-type of a shape: the multiset of the m_i with
// multiplicity n_i, validated against the family's parity constraint.
NilpotentOrbit arthur_partition_of_shape(const AShape& shape, lie::Family family);

enum class LeviLabel { T, M, S, G };  // Borel / Klingen / Siegel / full

const char* levi_name(LeviLabel l);

// Conjugacy class of Levi subgroups of Sp4(C) in which a rank-2 symplectic
// orbit is principal. Table-driven; rejects non-C2 input.
LeviLabel principal_levi_of(const NilpotentOrbit& orbit);

struct CatalogRow {
    AShape shape;
    NilpotentOrbit orbit;        // Arthur SL2-type as a C2 partition
    std::string sl2_type_name;   // trivial / minimal / subregular / principal
    LeviLabel levi;
    lie::Weight nu;              // nu_sigma in B2 coordinates
    RateValue rate;
};

// The six named A-shapes of SO5 with their SL2-types and decay rates,
// rates computed from the weighted-Dynkin machinery rather than stored.
std::vector<CatalogRow> shape_catalog_SO5();

// Deficiencies of the generalized Saito-Kurokawa type nu(2k) + nu(1)^{2(n-k)}
// inside SO_{2n+1}: delta = (dim SO_{2n+1} - dim SO_{2k+1} - dim SO_{2(n-k)+1})/2
// and delta2 = delta + dim SO_{2(n-k)+1} = (2n+1)(n-k).
struct GskDeficiency {
    long long delta;
    long long delta2;
};

GskDeficiency gsk_deficiencies(int k, int n);

}  // namespace dsm::arthur
