#include "fnl/deform.hpp"

#include <numeric>

namespace fnl {

DeformSpace deform_space(const CICycle& c1, const CICycle& c2, const PencilSpec& spec,
                         const DiskCache* cache) {
    int d = spec.d;
    PeriodMatrix p1 = period_matrix(c1, d, cache);
    PeriodMatrix p2 = period_matrix(c2, d, cache);
    CycloMatrix A = vconcat(p1.m, p2.m);
    Elimination e = eliminate_exact(A);
    if (e.rank == 0)
        throw std::domain_error("deform_space: zero concatenation");
    DeformSpace ds;
    ds.d = d;
    ds.source = spec;
    ds.istar_cols = e.pivot_cols;
    for (int c : e.pivot_cols)
        ds.istar.push_back(p1.col_index[c]);
    // The selected columns must carry the full rank; recheck exactly.
    if (rank_exact(A.select_columns(ds.istar_cols)) != e.rank)
        throw std::logic_error("deform_space: pivot column recheck failed");
    return ds;
}

bool transversal(const CycleCombo& combo, const DeformSpace& ds, RankMode mode,
                 const DiskCache* cache) {
    CycloMatrix m = period_matrix(combo, ds.d, cache).m;
    int full = rank(m, mode);
    // A pencil member with identically vanishing periods (the combination is
    // a multiple of a class with trivial primitive periods) has no meaningful
    // reduction to the I* space; it is counted as non-transversal.
    if (full == 0)
        return false;
    int restricted = rank(m.select_columns(ds.istar_cols), mode);
    return restricted == full;
}

std::vector<std::pair<int, int>> grid_pairs(const RGrid& grid) {
    std::vector<std::pair<int, int>> out;
    for (int r1 = 1; r1 <= grid.r1_max; ++r1)
        for (int r2 = -grid.r2_max; r2 <= grid.r2_max; ++r2)
            if (std::gcd(r1, std::abs(r2)) == 1)
                out.emplace_back(r1, r2);
    return out;
}

std::vector<std::pair<int, int>> nt_scan(const PencilSpec& spec, const RGrid& grid, RankMode mode,
                                         const DiskCache* cache) {
    auto [c1, c2] = build_cycles(spec);
    DeformSpace ds = deform_space(c1, c2, spec, cache);
    std::vector<std::pair<int, int>> bad;
    for (auto [r1, r2] : grid_pairs(grid)) {
        CycleCombo combo = CycleCombo::pencil(c1, c2, Rat(r1), Rat(r2));
        if (!transversal(combo, ds, mode, cache))
            bad.emplace_back(r1, r2);
    }
    return bad;
}

} // namespace fnl
