#include "densitometer/rational.hpp"

#include <cstdlib>

namespace dsm {

std::string to_string(const Rat& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string to_string(const RatVec& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += to_string(v[i]);
    }
    out += ")";
    return out;
}

Rat parse_rat(const std::string& s) {
    std::size_t slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            std::size_t used = 0;
            long long n = std::stoll(s, &used);
            if (used != s.size()) throw std::invalid_argument(s);
            return Rat(n);
        }
        std::size_t used_n = 0, used_d = 0;
        long long n = std::stoll(s.substr(0, slash), &used_n);
        long long d = std::stoll(s.substr(slash + 1), &used_d);
        if (used_n != slash || used_d != s.size() - slash - 1 || d == 0)
            throw std::invalid_argument(s);
        return Rat(n, d);
    } catch (const std::exception&) {
        throw std::invalid_argument("parse_rat: cannot parse '" + s + "'");
    }
}

RatVec parse_rat_vec(const std::string& s) {
    RatVec out;
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t comma = s.find(',', start);
        std::string piece = s.substr(start, comma == std::string::npos
                                                ? std::string::npos
                                                : comma - start);
        out.push_back(parse_rat(piece));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

RatVec add(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("add: dimension mismatch");
    RatVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

RatVec sub(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("sub: dimension mismatch");
    RatVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

RatVec scale(const Rat& c, const RatVec& v) {
    RatVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
    return out;
}

RatVec mat_vec(const RatMat& m, const RatVec& x) {
    RatVec out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) out[i] = dot(m[i], x);
    return out;
}

namespace {

// In-place elimination. Returns false if singular.
bool eliminate(RatMat& a, RatMat& rhs) {
    const std::size_t n = a.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == Rat(0)) ++pivot;
        if (pivot == n) return false;
        std::swap(a[pivot], a[col]);
        std::swap(rhs[pivot], rhs[col]);
        Rat inv_p = Rat(1) / a[col][col];
        for (auto& x : a[col]) x *= inv_p;
        for (auto& x : rhs[col]) x *= inv_p;
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col] == Rat(0)) continue;
            Rat f = a[row][col];
            for (std::size_t k = 0; k < n; ++k) a[row][k] -= f * a[col][k];
            for (std::size_t k = 0; k < rhs[row].size(); ++k)
                rhs[row][k] -= f * rhs[col][k];
        }
    }
    return true;
}

}  // namespace

RatVec solve_linear(RatMat a, RatVec b) {
    const std::size_t n = a.size();
    RatMat rhs(n);
    for (std::size_t i = 0; i < n; ++i) rhs[i] = {b[i]};
    if (!eliminate(a, rhs)) throw std::domain_error("solve_linear: singular system");
    RatVec out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = rhs[i][0];
    return out;
}

RatMat invert(RatMat a) {
    const std::size_t n = a.size();
    RatMat rhs(n, RatVec(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) rhs[i][i] = Rat(1);
    if (!eliminate(a, rhs)) throw std::domain_error("invert: singular matrix");
    return rhs;
}

RatMat transpose(const RatMat& a) {
    if (a.empty()) return {};
    RatMat out(a[0].size(), RatVec(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) out[j][i] = a[i][j];
    return out;
}

}  // namespace dsm
