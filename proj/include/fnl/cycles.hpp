#pragma once

#include "fnl/cache.hpp"
#include "fnl/combinat.hpp"
#include "fnl/linalg.hpp"

#include <utility>
#include <vector>

namespace fnl {

/// Complete-intersection curve on the Fermat surface of degree d, encoded by
/// the exponent sets of its two binary factors: the (x0,x1)-factor has roots
/// zeta_{2d}^u for u in b0, the (x2,x3)-factor likewise for b1. All exponents
/// are odd, so every root is a d-th root of -1.
struct CICycle {
    std::vector<int> b0;
    std::vector<int> b1;

    bool valid(int d) const;
    auto operator<=>(const CICycle&) const = default;
    std::string str() const;
};

/// The pair (C1, C2) determined by a pencil spec: C1 uses the first d1 (resp.
/// d2) odd exponents, C2 reuses the first m1 (m2) of them and continues with
/// s1-m1 (s2-m2) fresh ones.
std::pair<CICycle, CICycle> build_cycles(const PencilSpec& spec);

/// Rational combination of cycles.
struct CycleCombo {
    std::vector<std::pair<Rat, CICycle>> terms;

    static CycleCombo single(const CICycle& c) { return CycleCombo{{{Rat(1), c}}}; }
    /// r1*[C1] + r2*[C2] with zero coefficients dropped.
    static CycleCombo pencil(const CICycle& c1, const CICycle& c2, const Rat& r1, const Rat& r2);
};

/// Sum of zeta_{2d}^(u*e) over u in the exponent set.
CycloElem power_sum(const std::vector<int>& exps, long e, int d);

/// The period number p_i of eq-style power-sum form: product of the two
/// power sums at i0+1 and i2+1 when i lies in the balanced index set,
/// exactly zero otherwise. deg(i) must be 2d-4.
CycloElem period_p(const CICycle& c, const ExpVec& i, int d);

/// The matrix [p_{i+j}] with rows I_{d-4} and columns I_d.
struct PeriodMatrix {
    int d = 0;
    std::vector<ExpVec> row_index;
    std::vector<ExpVec> col_index;
    CycloMatrix m;
};

PeriodMatrix period_matrix(const CICycle& c, int d, const DiskCache* cache = nullptr);
PeriodMatrix period_matrix(const CycleCombo& combo, int d, const DiskCache* cache = nullptr);

} // namespace fnl
