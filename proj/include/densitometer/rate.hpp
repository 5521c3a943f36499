// Decay-rate values: an exact rational r >= 2 or infinity. Infinity orders
// above every finite value and survives round-trips through comparisons and
// report output.

#pragma once

#include "densitometer/rational.hpp"

#include <string>

namespace dsm {

struct RateValue {
    bool infinite = false;
    Rat value = Rat(2);  // meaningful only when !infinite

    static RateValue inf() { return RateValue{true, Rat(0)}; }
    static RateValue finite(const Rat& r) {
        if (r < Rat(2)) throw std::invalid_argument("RateValue: finite rate below 2");
        return RateValue{false, r};
    }

    bool operator==(const RateValue& o) const {
        if (infinite || o.infinite) return infinite == o.infinite;
        return value == o.value;
    }
    bool operator!=(const RateValue& o) const { return !(*this == o); }
    bool operator<(const RateValue& o) const {
        if (infinite) return false;
        if (o.infinite) return true;
        return value < o.value;
    }
    bool operator<=(const RateValue& o) const { return *this < o || *this == o; }

    std::string str() const { return infinite ? "inf" : to_string(value); }
    double as_double() const;
};

}  // namespace dsm
