#pragma once

#include "fnl/cyclo.hpp"
#include "fnl/modfield.hpp"

#include <optional>
#include <vector>

namespace fnl {

/// Dense matrix over Q(zeta_n); unattached default elements act as zero.
struct CycloMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<CycloElem> a;

    CycloMatrix() = default;
    CycloMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    CycloElem& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const CycloElem& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    static CycloMatrix identity(int n, const CycloField& f);
    CycloMatrix transpose() const;
    CycloMatrix select_columns(const std::vector<int>& cs) const;
    CycloMatrix select(const std::vector<int>& rs, const std::vector<int>& cs) const;
};

CycloMatrix vconcat(const CycloMatrix& top, const CycloMatrix& bottom);
CycloMatrix add_scaled(const CycloMatrix& A, const Rat& ca, const CycloMatrix& B, const Rat& cb);

enum class RankMode {
    Exact,     // fraction-free elimination over Q(zeta)
    Certified, // modular candidate + exact certificates, exact fallback
    Fast,      // two-prime agreement, no exact certificate
};

const char* rank_mode_name(RankMode m);

struct Elimination {
    int rank = 0;
    std::vector<int> pivot_rows; // original row indices, in pivot order
    std::vector<int> pivot_cols; // ascending
};

/// Deterministic forward elimination (first nonzero pivot in row/col order).
Elimination eliminate_exact(CycloMatrix M);

int rank_exact(const CycloMatrix& M);

/// Right kernel basis; every vector exactly annihilates M.
std::vector<std::vector<CycloElem>> kernel_basis(const CycloMatrix& M);

/// Rows/cols of a rank-sized submatrix with nonzero determinant,
/// chosen by the deterministic pivot rule.
Elimination nonsingular_minor(const CycloMatrix& M);

/// Exact determinant of a square matrix.
CycloElem det_exact(CycloMatrix M);

/// Rank of the image of M under zeta -> w mod F.p; always <= rank_exact(M).
int rank_modular(const CycloMatrix& M, const PrimeField& F);

/// Rank under the given policy. Certified mode proves its answer
/// (mod-p minor lower bound + exactly verified kernel) and falls back to
/// exact elimination when certification fails.
int rank(const CycloMatrix& M, RankMode mode);

/// Exact inverse of a square nonsingular matrix (Gauss-Jordan).
CycloMatrix inverse_exact(const CycloMatrix& M);

} // namespace fnl
