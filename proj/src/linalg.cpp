#include "fnl/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace fnl {

CycloMatrix CycloMatrix::identity(int n, const CycloField& f) {
    CycloMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = CycloElem::one(f);
    return m;
}

CycloMatrix CycloMatrix::transpose() const {
    CycloMatrix m(cols, rows);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            m.at(c, r) = at(r, c);
    return m;
}

CycloMatrix CycloMatrix::select_columns(const std::vector<int>& cs) const {
    CycloMatrix m(rows, static_cast<int>(cs.size()));
    for (int r = 0; r < rows; ++r)
        for (size_t c = 0; c < cs.size(); ++c)
            m.at(r, static_cast<int>(c)) = at(r, cs[c]);
    return m;
}

CycloMatrix CycloMatrix::select(const std::vector<int>& rs, const std::vector<int>& cs) const {
    CycloMatrix m(static_cast<int>(rs.size()), static_cast<int>(cs.size()));
    for (size_t r = 0; r < rs.size(); ++r)
        for (size_t c = 0; c < cs.size(); ++c)
            m.at(static_cast<int>(r), static_cast<int>(c)) = at(rs[r], cs[c]);
    return m;
}

CycloMatrix vconcat(const CycloMatrix& top, const CycloMatrix& bottom) {
    if (top.cols != bottom.cols)
        throw std::invalid_argument("vconcat: column mismatch");
    CycloMatrix m(top.rows + bottom.rows, top.cols);
    std::copy(top.a.begin(), top.a.end(), m.a.begin());
    std::copy(bottom.a.begin(), bottom.a.end(), m.a.begin() + top.a.size());
    return m;
}

CycloMatrix add_scaled(const CycloMatrix& A, const Rat& ca, const CycloMatrix& B, const Rat& cb) {
    if (A.rows != B.rows || A.cols != B.cols)
        throw std::invalid_argument("add_scaled: shape mismatch");
    CycloMatrix m(A.rows, A.cols);
    for (size_t i = 0; i < m.a.size(); ++i)
        m.a[i] = A.a[i] * ca + B.a[i] * cb;
    return m;
}

const char* rank_mode_name(RankMode m) {
    switch (m) {
    case RankMode::Exact:
        return "exact";
    case RankMode::Certified:
        return "certified";
    case RankMode::Fast:
        return "fast";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Exact elimination (Bareiss-style, deterministic first-nonzero pivoting).
// ---------------------------------------------------------------------------

namespace {

// Moves row `from` to position `to`, shifting the block in between down one.
// Keeps the original relative order of the untouched rows, so the
// "first nonzero row" rule always refers to original row order.
void rotate_row_to(std::vector<int>& perm, int to, int from) {
    int v = perm[from];
    for (int i = from; i > to; --i)
        perm[i] = perm[i - 1];
    perm[to] = v;
}

struct ExactElim {
    Elimination info;
    std::vector<int> perm; // row permutation used
    CycloMatrix m;         // eliminated matrix (rows permuted via perm)
};

ExactElim forward_eliminate(CycloMatrix M) {
    ExactElim res;
    res.perm.resize(M.rows);
    for (int i = 0; i < M.rows; ++i)
        res.perm[i] = i;
    int k = 0;
    CycloElem prev; // unattached; treated as 1 on the first step
    bool have_prev = false;
    CycloElem prev_inv;
    for (int c = 0; c < M.cols && k < M.rows; ++c) {
        int found = -1;
        for (int i = k; i < M.rows; ++i)
            if (!M.at(res.perm[i], c).is_zero()) {
                found = i;
                break;
            }
        if (found < 0)
            continue;
        rotate_row_to(res.perm, k, found);
        const CycloElem piv = M.at(res.perm[k], c);
        for (int i = k + 1; i < M.rows; ++i) {
            int ri = res.perm[i];
            const CycloElem f = M.at(ri, c);
            if (f.is_zero() && !have_prev)
                continue;
            for (int j = c + 1; j < M.cols; ++j) {
                CycloElem v = M.at(ri, j) * piv - f * M.at(res.perm[k], j);
                if (have_prev)
                    v *= prev_inv;
                M.at(ri, j) = std::move(v);
            }
            M.at(ri, c) = CycloElem();
        }
        res.info.pivot_rows.push_back(res.perm[k]);
        res.info.pivot_cols.push_back(c);
        prev = piv;
        prev_inv = piv.inverse();
        have_prev = true;
        ++k;
    }
    res.info.rank = k;
    res.m = std::move(M);
    return res;
}

} // namespace

Elimination eliminate_exact(CycloMatrix M) {
    return forward_eliminate(std::move(M)).info;
}

int rank_exact(const CycloMatrix& M) {
    return forward_eliminate(M).info.rank;
}

std::vector<std::vector<CycloElem>> kernel_basis(const CycloMatrix& M) {
    // Gauss-Jordan to reduced form over the field, then read the kernel off
    // the free columns.
    CycloMatrix R = M;
    std::vector<int> perm(R.rows);
    for (int i = 0; i < R.rows; ++i)
        perm[i] = i;
    std::vector<int> pivot_cols;
    int k = 0;
    for (int c = 0; c < R.cols && k < R.rows; ++c) {
        int found = -1;
        for (int i = k; i < R.rows; ++i)
            if (!R.at(perm[i], c).is_zero()) {
                found = i;
                break;
            }
        if (found < 0)
            continue;
        rotate_row_to(perm, k, found);
        const CycloElem inv = R.at(perm[k], c).inverse();
        for (int j = c; j < R.cols; ++j)
            R.at(perm[k], j) *= inv;
        for (int i = 0; i < R.rows; ++i) {
            if (i == k)
                continue;
            const CycloElem f = R.at(perm[i], c);
            if (f.is_zero())
                continue;
            for (int j = c; j < R.cols; ++j)
                R.at(perm[i], j) -= f * R.at(perm[k], j);
        }
        pivot_cols.push_back(c);
        ++k;
    }
    std::vector<bool> is_pivot(R.cols, false);
    for (int c : pivot_cols)
        is_pivot[c] = true;
    std::vector<std::vector<CycloElem>> basis;
    for (int f = 0; f < R.cols; ++f) {
        if (is_pivot[f])
            continue;
        std::vector<CycloElem> v(R.cols);
        const CycloField* fld = nullptr;
        for (size_t t = 0; t < pivot_cols.size(); ++t)
            if (!R.at(perm[t], f).is_zero()) {
                v[pivot_cols[t]] = -R.at(perm[t], f);
                fld = &v[pivot_cols[t]].field();
            }
        // The free coordinate is 1 in whatever field the matrix lives in; a
        // fully unattached (all-zero) matrix falls back to the rationals.
        if (!fld) {
            for (const CycloElem& e : M.a)
                if (e.attached()) {
                    fld = &e.field();
                    break;
                }
        }
        v[f] = CycloElem::one(fld ? *fld : CycloField::get(1));
        basis.push_back(std::move(v));
    }
    return basis;
}

Elimination nonsingular_minor(const CycloMatrix& M) {
    Elimination e = eliminate_exact(M);
    std::sort(e.pivot_rows.begin(), e.pivot_rows.end());
    if (e.rank > 0) {
        CycloElem det = det_exact(M.select(e.pivot_rows, e.pivot_cols));
        if (det.is_zero())
            throw std::logic_error("nonsingular_minor: pivot minor recheck failed");
    }
    return e;
}

CycloElem det_exact(CycloMatrix M) {
    if (M.rows != M.cols)
        throw std::invalid_argument("det_exact: matrix not square");
    if (M.rows == 0)
        throw std::invalid_argument("det_exact: empty matrix");
    ExactElim e = forward_eliminate(std::move(M));
    if (e.info.rank < e.m.rows)
        return CycloElem();
    // Bareiss: the last pivot equals det up to the sign of the row permutation.
    int swaps = 0;
    std::vector<int> p = e.perm;
    for (int i = 0; i < static_cast<int>(p.size()); ++i)
        while (p[i] != i) {
            std::swap(p[i], p[p[i]]);
            ++swaps;
        }
    CycloElem det = e.m.at(e.perm[e.info.rank - 1], e.info.pivot_cols.back());
    if (swaps % 2 == 1)
        det = -det;
    return det;
}

// ---------------------------------------------------------------------------
// Modular path.
// ---------------------------------------------------------------------------

namespace {

using I64 = std::int64_t;

struct ModMatrix {
    int rows = 0, cols = 0;
    std::vector<I64> a;
    I64& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    I64 at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

I64 residue_of(const Int& z, I64 p) {
    if (mpz_fits_slong_p(z.get_mpz_t())) {
        I64 v = z.get_si() % p;
        return v < 0 ? v + p : v;
    }
    Int r = z % Int(static_cast<long>(p));
    I64 v = r.get_si();
    return v < 0 ? v + p : v;
}

// Power-basis coordinates of every entry reduced mod p; computed once per
// prime and shared by all embeddings.
struct ModCoeffs {
    int rows = 0, cols = 0, deg = 0;
    std::vector<I64> c; // entry-major, deg values per entry
};

ModCoeffs reduce_coeffs(const CycloMatrix& M, int deg, I64 p) {
    ModCoeffs R;
    R.rows = M.rows;
    R.cols = M.cols;
    R.deg = deg;
    R.c.assign(M.a.size() * deg, 0);
    for (size_t i = 0; i < M.a.size(); ++i) {
        const CycloElem& e = M.a[i];
        if (!e.attached())
            continue;
        const std::vector<Rat>& cs = e.coeffs();
        for (int t = 0; t < deg; ++t) {
            if (cs[t] == 0)
                continue;
            I64 n = residue_of(cs[t].get_num(), p);
            I64 d = residue_of(cs[t].get_den(), p);
            if (d == 0)
                throw bad_prime_error("reduce_coeffs: denominator vanishes mod p");
            R.c[i * deg + t] = mod_mul(n, mod_inv(d, p), p);
        }
    }
    return R;
}

// Image of the coefficient matrix under zeta -> w_sub (Horner, pure int64).
ModMatrix evaluate_embedding(const ModCoeffs& C, I64 w_sub, I64 p) {
    ModMatrix R;
    R.rows = C.rows;
    R.cols = C.cols;
    R.a.resize(static_cast<size_t>(C.rows) * C.cols);
    for (size_t i = 0; i < R.a.size(); ++i) {
        I64 acc = 0;
        const I64* cs = &C.c[i * C.deg];
        for (int t = C.deg - 1; t >= 0; --t) {
            acc = mod_mul(acc, w_sub, p);
            if (cs[t] != 0)
                acc = mod_add(acc, cs[t], p);
        }
        R.a[i] = acc;
    }
    return R;
}

ModMatrix reduce_matrix(const CycloMatrix& M, I64 p, I64 w_sub) {
    int deg = 0;
    for (const CycloElem& e : M.a)
        if (e.attached()) {
            deg = static_cast<int>(e.coeffs().size());
            break;
        }
    if (deg == 0) {
        ModMatrix R;
        R.rows = M.rows;
        R.cols = M.cols;
        R.a.assign(static_cast<size_t>(M.rows) * M.cols, 0);
        return R;
    }
    return evaluate_embedding(reduce_coeffs(M, deg, p), w_sub, p);
}

struct ModRref {
    int rank = 0;
    std::vector<int> pivot_cols;
    std::vector<int> pivot_rows; // original indices, pivot order
    ModMatrix m;                 // fully reduced (RREF) rows, permuted
    std::vector<int> perm;
};

ModRref mod_rref(ModMatrix M, I64 p) {
    ModRref res;
    res.perm.resize(M.rows);
    for (int i = 0; i < M.rows; ++i)
        res.perm[i] = i;
    int k = 0;
    for (int c = 0; c < M.cols && k < M.rows; ++c) {
        int found = -1;
        for (int i = k; i < M.rows; ++i)
            if (M.at(res.perm[i], c) != 0) {
                found = i;
                break;
            }
        if (found < 0)
            continue;
        rotate_row_to(res.perm, k, found);
        const I64 inv = mod_inv(M.at(res.perm[k], c), p);
        for (int j = c; j < M.cols; ++j)
            M.at(res.perm[k], j) = mod_mul(M.at(res.perm[k], j), inv, p);
        for (int i = 0; i < M.rows; ++i) {
            if (i == k)
                continue;
            const I64 f = M.at(res.perm[i], c);
            if (f == 0)
                continue;
            for (int j = c; j < M.cols; ++j)
                M.at(res.perm[i], j) =
                    mod_sub(M.at(res.perm[i], j), mod_mul(f, M.at(res.perm[k], j), p), p);
        }
        res.pivot_cols.push_back(c);
        res.pivot_rows.push_back(res.perm[k]);
        ++k;
    }
    res.rank = k;
    res.m = std::move(M);
    return res;
}

} // namespace

int rank_modular(const CycloMatrix& M, const PrimeField& F) {
    return mod_rref(reduce_matrix(M, F.p, F.w), F.p).rank;
}

// ---------------------------------------------------------------------------
// Certified rank: candidate from two primes, lower bound from the mod-p
// pivot minor, upper bound from a rationally reconstructed kernel that is
// verified exactly. Falls back to exact elimination.
// ---------------------------------------------------------------------------

namespace {

// Rational reconstruction of x mod m with |num|, den <= sqrt(m/2).
std::optional<Rat> rat_reconstruct(const Int& x, const Int& m) {
    Int bound;
    mpz_sqrt(bound.get_mpz_t(), Int(m / 2).get_mpz_t());
    Int r0 = m, r1 = x % m;
    if (r1 < 0)
        r1 += m;
    Int t0 = 0, t1 = 1;
    while (r1 > bound) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        Int t2 = t0 - q * t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    if (t1 == 0)
        return std::nullopt;
    if (t1 < 0) {
        t1 = -t1;
        r1 = -r1;
    }
    if (t1 > bound)
        return std::nullopt;
    Int g;
    mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
    if (g != 1 && g != -1) {
        // gcd(num, den) must be 1 for a valid reconstruction.
        Int gm;
        mpz_gcd(gm.get_mpz_t(), g.get_mpz_t(), m.get_mpz_t());
        if (gm != 1)
            return std::nullopt;
        r1 /= g;
        t1 /= g;
    }
    Rat out(r1, t1);
    out.canonicalize();
    return out;
}

struct EmbeddingSet {
    PrimeField F;
    std::vector<I64> subs;               // primitive substitutions w^j, j coprime to order
    std::vector<std::vector<I64>> vinv;  // inverse Vandermonde mod p
};

// All primitive images zeta -> w^j and the inverse of V[t][i] = subs[t]^i.
EmbeddingSet build_embeddings(const CycloField& f, const PrimeField& F) {
    EmbeddingSet E;
    E.F = F;
    int n = f.order();
    for (int j = 1; j < n; ++j)
        if (std::gcd(j, n) == 1)
            E.subs.push_back(mod_pow(F.w, j, F.p));
    int m = f.degree();
    if (static_cast<int>(E.subs.size()) != m)
        throw std::logic_error("build_embeddings: embedding count != degree");
    // Invert the Vandermonde mod p by Gauss-Jordan.
    std::vector<std::vector<I64>> v(m, std::vector<I64>(2 * m, 0));
    for (int t = 0; t < m; ++t) {
        I64 pw = 1;
        for (int i = 0; i < m; ++i) {
            v[t][i] = pw;
            pw = mod_mul(pw, E.subs[t], F.p);
        }
        v[t][m + t] = 1;
    }
    for (int c = 0; c < m; ++c) {
        int piv = -1;
        for (int r = c; r < m; ++r)
            if (v[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0)
            throw std::logic_error("build_embeddings: singular Vandermonde");
        std::swap(v[c], v[piv]);
        I64 inv = mod_inv(v[c][c], F.p);
        for (int j = 0; j < 2 * m; ++j)
            v[c][j] = mod_mul(v[c][j], inv, F.p);
        for (int r = 0; r < m; ++r) {
            if (r == c || v[r][c] == 0)
                continue;
            I64 fpiv = v[r][c];
            for (int j = 0; j < 2 * m; ++j)
                v[r][j] = mod_sub(v[r][j], mod_mul(fpiv, v[c][j], F.p), F.p);
        }
    }
    E.vinv.assign(m, std::vector<I64>(m));
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c)
            E.vinv[r][c] = v[r][m + c];
    return E;
}

struct PrimePass {
    EmbeddingSet emb;
    std::vector<ModRref> rrefs; // one per embedding, identical pivot structure
    int rank = 0;
    std::vector<int> pivot_cols;
};

// RREF of M at every embedding of one prime; nullopt if the pivot structure
// is not consistent across embeddings (prime considered unusable).
std::optional<PrimePass> prime_pass(const CycloMatrix& M, const CycloField& f, const PrimeField& F) {
    PrimePass P;
    P.emb = build_embeddings(f, F);
    ModCoeffs coeffs = reduce_coeffs(M, f.degree(), F.p);
    for (I64 sub : P.emb.subs) {
        ModRref r = mod_rref(evaluate_embedding(coeffs, sub, F.p), F.p);
        if (!P.rrefs.empty() &&
            (r.rank != P.rrefs.front().rank || r.pivot_cols != P.rrefs.front().pivot_cols))
            return std::nullopt;
        P.rrefs.push_back(std::move(r));
    }
    P.rank = P.rrefs.front().rank;
    P.pivot_cols = P.rrefs.front().pivot_cols;
    return P;
}

// Coordinates (mod p) of the RREF entry at (pivot index t, column c),
// recovered from its images at all embeddings.
std::vector<I64> entry_coords(const PrimePass& P, int t, int c) {
    int m = static_cast<int>(P.emb.subs.size());
    std::vector<I64> y(m);
    for (int e = 0; e < m; ++e) {
        const ModRref& r = P.rrefs[e];
        y[e] = r.m.at(r.perm[t], c);
    }
    std::vector<I64> out(m, 0);
    for (int i = 0; i < m; ++i) {
        I64 acc = 0;
        for (int e = 0; e < m; ++e)
            acc = mod_add(acc, mod_mul(P.emb.vinv[i][e], y[e], P.emb.F.p), P.emb.F.p);
        out[i] = acc;
    }
    return out;
}

const CycloField* matrix_field(const CycloMatrix& M) {
    for (const CycloElem& e : M.a)
        if (e.attached())
            return &e.field();
    return nullptr;
}

// Attempts the full certificate from a set of agreeing prime passes.
// Returns true if the kernel reconstructed from the passes annihilates M
// exactly (proving rank <= r; the mod-p pivot minor proves rank >= r).
bool certify_with(const CycloMatrix& M, const CycloField& f, const std::vector<PrimePass>& passes) {
    const std::vector<int>& pivot_cols = passes.front().pivot_cols;
    int r = passes.front().rank;
    int m = f.degree();
    std::vector<bool> is_pivot(M.cols, false);
    for (int c : pivot_cols)
        is_pivot[c] = true;

    Int modulus = 1;
    for (const PrimePass& P : passes)
        modulus *= Int(static_cast<long>(P.emb.F.p));

    // Reconstruct -RREF[t][c] for free columns c, assemble kernel vectors,
    // verify exactly.
    for (int c = 0; c < M.cols; ++c) {
        if (is_pivot[c])
            continue;
        std::vector<CycloElem> v(M.cols);
        for (int t = 0; t < r; ++t) {
            std::vector<Rat> coords(m);
            bool nonzero = false;
            for (int i = 0; i < m; ++i) {
                // CRT across passes.
                Int x = 0, mod = 1;
                for (const PrimePass& P : passes) {
                    std::vector<I64> cs = entry_coords(P, t, c);
                    Int p(static_cast<long>(P.emb.F.p));
                    Int xi(static_cast<long>(cs[i]));
                    if (mod == 1) {
                        x = xi;
                        mod = p;
                    } else {
                        Int minv;
                        if (mpz_invert(minv.get_mpz_t(), mod.get_mpz_t(), p.get_mpz_t()) == 0)
                            return false;
                        Int t2 = ((xi - x) * minv) % p;
                        if (t2 < 0)
                            t2 += p;
                        x += mod * t2;
                        mod *= p;
                    }
                }
                auto rec = rat_reconstruct(x, modulus);
                if (!rec)
                    return false;
                coords[i] = -*rec;
                if (coords[i] != 0)
                    nonzero = true;
            }
            if (nonzero)
                v[pivot_cols[t]] = CycloElem(f, std::move(coords));
        }
        v[c] = CycloElem::one(f);
        // Exact verification: M * v == 0, accumulating the polynomial
        // convolution per row and reducing once.
        std::vector<Rat> conv(2 * m - 1);
        for (int row = 0; row < M.rows; ++row) {
            for (Rat& x : conv)
                x = 0;
            for (int j = 0; j < M.cols; ++j) {
                if (!v[j].attached() || !M.at(row, j).attached())
                    continue;
                const std::vector<Rat>& a = M.at(row, j).coeffs();
                const std::vector<Rat>& b = v[j].coeffs();
                for (int s = 0; s < m; ++s) {
                    if (a[s] == 0)
                        continue;
                    for (int t2 = 0; t2 < m; ++t2)
                        if (b[t2] != 0)
                            conv[s + t2] += a[s] * b[t2];
                }
            }
            // Fold the high powers into the basis and test for zero.
            std::vector<Rat> out(conv.begin(), conv.begin() + m);
            for (int k = m; k < 2 * m - 1; ++k) {
                if (conv[k] == 0)
                    continue;
                const std::vector<Int>& rowred = f.power_row(k);
                for (int j = 0; j < m; ++j)
                    if (rowred[j] != 0)
                        out[j] += conv[k] * Rat(rowred[j]);
            }
            for (const Rat& x : out)
                if (x != 0)
                    return false;
        }
    }
    return true;
}

// Fetching entry_coords per (t, c, i) repeats the Vandermonde solve; cheap at
// the sizes involved, so clarity wins over caching here.

} // namespace

int rank(const CycloMatrix& M, RankMode mode) {
    if (M.rows == 0 || M.cols == 0)
        return 0;
    const CycloField* f = matrix_field(M);
    if (!f)
        return 0; // all-zero matrix
    if (mode == RankMode::Exact)
        return rank_exact(M);

    if (mode == RankMode::Fast) {
        for (int base = 0; base + 1 < 8; ++base) {
            try {
                int r1 = rank_modular(M, PrimeField::nth_for_order(f->order(), base));
                int r2 = rank_modular(M, PrimeField::nth_for_order(f->order(), base + 1));
                if (r1 == r2)
                    return r1;
            } catch (const bad_prime_error&) {
                continue;
            }
        }
        return rank_exact(M);
    }

    // Certified: gather agreeing passes, certify, escalate, fall back.
    std::vector<PrimePass> passes;
    int next_index = 0;
    const int max_primes = 6;
    while (next_index < max_primes) {
        std::optional<PrimePass> P;
        try {
            P = prime_pass(M, *f, PrimeField::nth_for_order(f->order(), next_index));
        } catch (const bad_prime_error&) {
            P = std::nullopt;
        }
        ++next_index;
        if (!P)
            continue;
        if (!passes.empty() && (P->rank != passes.front().rank ||
                                P->pivot_cols != passes.front().pivot_cols)) {
            // Disagreement: keep the pass with larger rank (mod-p rank only
            // ever undershoots) and continue gathering.
            if (P->rank > passes.front().rank) {
                passes.clear();
                passes.push_back(std::move(*P));
            }
            continue;
        }
        passes.push_back(std::move(*P));
        if (passes.size() >= 2 && certify_with(M, *f, passes))
            return passes.front().rank;
    }
    return rank_exact(M);
}

CycloMatrix inverse_exact(const CycloMatrix& M) {
    if (M.rows != M.cols)
        throw std::invalid_argument("inverse_exact: matrix not square");
    const CycloField* f = matrix_field(M);
    if (!f)
        throw std::domain_error("inverse_exact: zero matrix");
    int n = M.rows;
    CycloMatrix W(n, 2 * n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c)
            W.at(r, c) = M.at(r, c);
        W.at(r, n + r) = CycloElem::one(*f);
    }
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (!W.at(r, c).is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0)
            throw std::domain_error("inverse_exact: singular matrix");
        if (piv != c)
            for (int j = 0; j < 2 * n; ++j)
                std::swap(W.at(c, j), W.at(piv, j));
        CycloElem inv = W.at(c, c).inverse();
        for (int j = 0; j < 2 * n; ++j)
            W.at(c, j) *= inv;
        for (int r = 0; r < n; ++r) {
            if (r == c || W.at(r, c).is_zero())
                continue;
            CycloElem fac = W.at(r, c);
            for (int j = 0; j < 2 * n; ++j)
                W.at(r, j) -= fac * W.at(c, j);
        }
    }
    CycloMatrix out(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            out.at(r, c) = W.at(r, n + c);
    return out;
}

} // namespace fnl
