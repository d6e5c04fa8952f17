#pragma once

// Straight-loop reference model used as an independent oracle in tests. It
// works on std::complex values and nested vectors and shares no code with the
// library's kernels.

#include <complex>
#include <cstdint>
#include <map>
#include <vector>

namespace refmodel {

using C = std::complex<double>;
using Mat = std::vector<std::vector<C>>;
using Vec = std::vector<C>;

inline double sgn(double x) { return x >= 0 ? 1.0 : -1.0; }

inline Vec step(const Mat& m, const Vec& t, const Vec& s) {
    Vec out(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        C acc = 0;
        for (std::size_t j = 0; j < s.size(); ++j) acc += m[i][j] * s[j];
        acc -= t[i];
        out[i] = C(sgn(acc.real()), sgn(acc.imag()));
    }
    return out;
}

struct Cycle {
    std::uint64_t transient;
    std::uint64_t period;
};

// Plain trajectory scan: keep every state in a list and look for the first repeat.
inline Cycle find_cycle(const Mat& m, const Vec& t, Vec s, std::uint64_t max_steps = 100000) {
    std::vector<Vec> seen{s};
    for (std::uint64_t k = 1; k <= max_steps; ++k) {
        s = step(m, t, s);
        for (std::uint64_t j = 0; j < seen.size(); ++j)
            if (seen[j] == s) return {j, k - j};
        seen.push_back(s);
    }
    return {0, 0};
}

inline double energy_serial(const Mat& m, const Vec& t, const Vec& s) {
    C quad = 0, lin = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = 0; j < s.size(); ++j) quad += std::conj(s[i]) * m[i][j] * s[j];
        lin += std::conj(s[i]) * t[i];
    }
    return -(quad - 2.0 * lin).real();
}

inline double energy_parallel(const Mat& m, const Vec& t, const Vec& s1, const Vec& s2) {
    C quad = 0, lin = 0;
    for (std::size_t i = 0; i < s1.size(); ++i) {
        for (std::size_t j = 0; j < s1.size(); ++j) quad += std::conj(s1[i]) * m[i][j] * s2[j];
        lin += std::conj(s1[i] + s2[i]) * t[i];
    }
    return -(quad - lin).real();
}

// All 4^n states in the order: neuron 0 varies fastest through
// 1+i, -1+i, 1-i, -1-i.
inline std::vector<Vec> all_states(std::size_t n) {
    const C pts[4] = {C(1, 1), C(-1, 1), C(1, -1), C(-1, -1)};
    std::vector<Vec> out;
    std::uint64_t total = 1;
    for (std::size_t k = 0; k < n; ++k) total *= 4;
    for (std::uint64_t code = 0; code < total; ++code) {
        Vec s(n);
        std::uint64_t c = code;
        for (std::size_t k = 0; k < n; ++k, c /= 4) s[k] = pts[c % 4];
        out.push_back(s);
    }
    return out;
}

}  // namespace refmodel
