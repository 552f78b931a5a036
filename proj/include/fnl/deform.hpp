#pragma once

#include "fnl/cycles.hpp"

#include <utility>
#include <vector>

namespace fnl {

/// The reduced deformation space W spanned by the monomials x^i, i in istar:
/// the column pivots of a deterministic nonsingular rank-size minor of the
/// vertical concatenation of the two period matrices.
struct DeformSpace {
    int d = 0;
    PencilSpec source;
    std::vector<ExpVec> istar;     // exponent tuples, in column order
    std::vector<int> istar_cols;   // positions within index_set(d, d)
};

/// Computes the deformation space from the two cycles. Throws on a zero
/// concatenation. Always uses exact elimination so the pivot choice is
/// reproducible.
DeformSpace deform_space(const CICycle& c1, const CICycle& c2, const PencilSpec& spec,
                         const DiskCache* cache = nullptr);

/// True iff the istar-column submatrix of the combo's period matrix has the
/// same rank as the full matrix.
bool transversal(const CycleCombo& combo, const DeformSpace& ds,
                 RankMode mode = RankMode::Certified, const DiskCache* cache = nullptr);

struct RGrid {
    int r1_max = 10;
    int r2_max = 10;
};

/// Coprime pairs (r1, r2), r1 in [1, r1_max], |r2| <= r2_max, ascending in
/// (r1, r2); each rational r = r2/r1 appears exactly once.
std::vector<std::pair<int, int>> grid_pairs(const RGrid& grid);

/// All coprime grid pairs whose pencil member fails the transversality test.
std::vector<std::pair<int, int>> nt_scan(const PencilSpec& spec, const RGrid& grid,
                                         RankMode mode = RankMode::Certified,
                                         const DiskCache* cache = nullptr);

} // namespace fnl
