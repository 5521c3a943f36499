// Exact rational scalars and small dense rational linear algebra.
//
// Everything in the root-datum layer is computed over Q: the quantities of
// interest (Weyl vector pairings, rate thresholds, Cartan inverses) are
// rationals with tiny numerators, so exactness is cheap and float tolerance
// questions never arise.

#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace dsm {

using Rat = boost::rational<long long>;
using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

inline Rat rat(long long num, long long den = 1) { return Rat(num, den); }

std::string to_string(const Rat& r);
std::string to_string(const RatVec& v);

// Parses "3", "-1/2", "7/4". Throws std::invalid_argument on junk.
Rat parse_rat(const std::string& s);

// Parses a comma-separated rational vector, e.g. "1/2,0".
RatVec parse_rat_vec(const std::string& s);

inline Rat dot(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("dot: dimension mismatch (" +
                                    std::to_string(a.size()) + " vs " +
                                    std::to_string(b.size()) + ")");
    Rat acc(0);
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

RatVec add(const RatVec& a, const RatVec& b);
RatVec sub(const RatVec& a, const RatVec& b);
RatVec scale(const Rat& c, const RatVec& v);

// y = M x, with M given row-major.
RatVec mat_vec(const RatMat& m, const RatVec& x);

// Solves A x = b by fraction-exact Gaussian elimination. A must be square
// and nonsingular.
RatVec solve_linear(RatMat a, RatVec b);

// Exact inverse; throws std::domain_error on a singular matrix.
RatMat invert(RatMat a);

RatMat transpose(const RatMat& a);

}  // namespace dsm
