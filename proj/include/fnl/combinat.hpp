#pragma once

#include "fnl/cyclo.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <vector>

namespace fnl {

/// Monomial exponent 4-tuple for x_0..x_3.
struct ExpVec {
    std::array<int, 4> e{0, 0, 0, 0};

    int operator[](int i) const { return e[i]; }
    int& operator[](int i) { return e[i]; }
    int degree() const { return e[0] + e[1] + e[2] + e[3]; }
    auto operator<=>(const ExpVec&) const = default;

    friend ExpVec operator+(ExpVec a, const ExpVec& b) {
        for (int i = 0; i < 4; ++i)
            a.e[i] += b.e[i];
        return a;
    }
};

/// I_N: all tuples with entries in [0, d-2] summing to N, lexicographic.
std::vector<ExpVec> index_set(int d, int N);

/// The paired set with i0+i1 = d-2 and i2+i3 = d-2; size (d-1)^2.
std::vector<ExpVec> balanced_index_set(int d);

/// Parameters of one pencil of cycle pairs (C1, C2).
struct PencilSpec {
    int d = 0;
    int d1 = 0, d2 = 0;
    int s1 = 0, s2 = 0;
    int m1 = 0, m2 = 0;

    bool valid() const;
    auto operator<=>(const PencilSpec&) const = default;
    std::string str() const;
};

/// All valid specs for degree d: (d1,d2) unordered, (s1,s2) ordered,
/// m-ranges inclusive; deterministic nesting order.
std::vector<PencilSpec> enumerate_pencil_specs(int d);

/// Binomial coefficient as exact integer.
Int binomial(int n, int k);

/// h^{2,0} of a degree-d surface: binom(d-1, 3).
int hodge_number_h20(int d);

} // namespace fnl
