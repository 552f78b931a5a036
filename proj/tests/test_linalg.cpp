#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fnl/cycles.hpp"
#include "fnl/linalg.hpp"

#include <algorithm>
#include <functional>
#include <random>

using namespace fnl;

namespace {

CycloElem random_elem(const CycloField& f, std::mt19937& rng, int density_pct = 70) {
    std::uniform_int_distribution<int> num(-5, 5), den(1, 3), pct(0, 99);
    std::vector<Rat> c(f.degree());
    if (pct(rng) < density_pct)
        for (Rat& x : c) {
            x = Rat(num(rng), den(rng));
            x.canonicalize();
        }
    return CycloElem(f, std::move(c));
}

CycloMatrix random_matrix(const CycloField& f, int rows, int cols, std::mt19937& rng,
                          int density_pct = 70) {
    CycloMatrix m(rows, cols);
    for (CycloElem& e : m.a)
        e = random_elem(f, rng, density_pct);
    return m;
}

// Independent determinant: Laplace expansion along the first row.
CycloElem laplace_det(const CycloMatrix& m) {
    int n = m.rows;
    if (n == 1)
        return m.at(0, 0);
    CycloElem acc;
    for (int c = 0; c < n; ++c) {
        if (!m.at(0, c).attached() || m.at(0, c).is_zero())
            continue;
        CycloMatrix sub(n - 1, n - 1);
        for (int i = 1; i < n; ++i) {
            int jj = 0;
            for (int j = 0; j < n; ++j) {
                if (j == c)
                    continue;
                sub.at(i - 1, jj++) = m.at(i, j);
            }
        }
        CycloElem term = m.at(0, c) * laplace_det(sub);
        if (c % 2 == 1)
            term = -term;
        acc += term;
    }
    return acc;
}

// Largest size of a submatrix with nonvanishing Laplace determinant.
int brute_rank(const CycloMatrix& m) {
    int bound = std::min(m.rows, m.cols);
    for (int size = bound; size >= 1; --size) {
        std::vector<int> rsel(size), csel(size);
        std::function<bool(int, int)> pick_rows = [&](int start, int k) -> bool {
            if (k == size) {
                std::function<bool(int, int)> pick_cols = [&](int cstart, int ck) -> bool {
                    if (ck == size)
                        return !laplace_det(m.select(rsel, csel)).is_zero();
                    for (int c = cstart; c < m.cols; ++c) {
                        csel[ck] = c;
                        if (pick_cols(c + 1, ck + 1))
                            return true;
                    }
                    return false;
                };
                return pick_cols(0, 0);
            }
            for (int r = start; r < m.rows; ++r) {
                rsel[k] = r;
                if (pick_rows(r + 1, k + 1))
                    return true;
            }
            return false;
        };
        if (pick_rows(0, 0))
            return size;
    }
    return 0;
}

} // namespace

TEST_CASE("identity rank and minor") {
    const CycloField& f = CycloField::get(8);
    CycloMatrix id = CycloMatrix::identity(5, f);
    CHECK(rank_exact(id) == 5);
    Elimination e = nonsingular_minor(id);
    CHECK(e.rank == 5);
    CHECK(e.pivot_rows == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(e.pivot_cols == std::vector<int>{0, 1, 2, 3, 4});
}

TEST_CASE("rank equals the brute-force minor rank on random 3x5 matrices") {
    std::mt19937 rng(23);
    const CycloField& f = CycloField::get(8);
    for (int t = 0; t < 20; ++t) {
        CycloMatrix m = random_matrix(f, 3, 5, rng, 55);
        CHECK(rank_exact(m) == brute_rank(m));
    }
}

TEST_CASE("kernel of the zero matrix is the standard basis") {
    CycloMatrix z(3, 4);
    auto basis = kernel_basis(z);
    CHECK(basis.size() == 4);
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = 0; j < basis[i].size(); ++j)
            CHECK(basis[i][j].is_zero() == (i != j));
}

TEST_CASE("kernel vectors annihilate the matrix exactly") {
    std::mt19937 rng(29);
    const CycloField& f = CycloField::get(10);
    for (int t = 0; t < 10; ++t) {
        CycloMatrix m = random_matrix(f, 4, 7, rng, 60);
        auto basis = kernel_basis(m);
        CHECK(basis.size() == static_cast<size_t>(m.cols - rank_exact(m)));
        for (const auto& v : basis)
            for (int r = 0; r < m.rows; ++r) {
                CycloElem acc;
                for (int c = 0; c < m.cols; ++c)
                    acc += m.at(r, c) * v[c];
                CHECK(acc.is_zero());
            }
    }
}

TEST_CASE("kernel of a vertical concatenation is the kernel intersection") {
    std::mt19937 rng(31);
    const CycloField& f = CycloField::get(8);
    for (int t = 0; t < 8; ++t) {
        CycloMatrix a = random_matrix(f, 3, 6, rng, 50);
        CycloMatrix b = random_matrix(f, 2, 6, rng, 50);
        CycloMatrix cat = vconcat(a, b);
        auto kc = kernel_basis(cat);
        // Membership one way: concat kernel vectors kill both blocks.
        for (const auto& v : kc)
            for (const CycloMatrix* m : {&a, &b})
                for (int r = 0; r < m->rows; ++r) {
                    CycloElem acc;
                    for (int c = 0; c < m->cols; ++c)
                        acc += m->at(r, c) * v[c];
                    CHECK(acc.is_zero());
                }
        // Dimension the other way: solve b on the kernel of a.
        auto ka = kernel_basis(a);
        CycloMatrix bka(b.rows, static_cast<int>(ka.size()));
        for (int r = 0; r < b.rows; ++r)
            for (size_t k = 0; k < ka.size(); ++k) {
                CycloElem acc;
                for (int c = 0; c < b.cols; ++c)
                    acc += b.at(r, c) * ka[k][c];
                bka.at(r, static_cast<int>(k)) = acc;
            }
        size_t dim_intersection = ka.size() - rank_exact(bka);
        CHECK(kc.size() == dim_intersection);
    }
}

TEST_CASE("nonsingular minor of a rank-1 outer product") {
    const CycloField& f = CycloField::get(8);
    CycloMatrix m(3, 4);
    std::vector<CycloElem> u = {CycloElem(f, Rat(0)), root_power(4, 1), root_power(4, 2)};
    std::vector<CycloElem> v = {CycloElem(f, Rat(0)), CycloElem(f, Rat(2)), root_power(4, 3),
                                CycloElem(f, Rat(1))};
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 4; ++c)
            m.at(r, c) = u[r] * v[c];
    Elimination e = nonsingular_minor(m);
    CHECK(e.rank == 1);
    // First nonzero entry in scan order: row 1, column 1.
    CHECK(e.pivot_rows == std::vector<int>{1});
    CHECK(e.pivot_cols == std::vector<int>{1});
    CHECK(!laplace_det(m.select(e.pivot_rows, e.pivot_cols)).is_zero());
}

TEST_CASE("determinant of returned minors is nonzero") {
    std::mt19937 rng(37);
    const CycloField& f = CycloField::get(10);
    for (int t = 0; t < 10; ++t) {
        CycloMatrix m = random_matrix(f, 4, 6, rng, 50);
        Elimination e = nonsingular_minor(m);
        if (e.rank == 0)
            continue;
        CHECK(!det_exact(m.select(e.pivot_rows, e.pivot_cols)).is_zero());
    }
}

TEST_CASE("rank invariances") {
    std::mt19937 rng(41);
    const CycloField& f = CycloField::get(8);
    for (int t = 0; t < 8; ++t) {
        CycloMatrix m = random_matrix(f, 4, 6, rng, 60);
        int r = rank_exact(m);
        CHECK(rank_exact(m.transpose()) == r);
        // Permute rows and scale one row by a nonzero constant.
        CycloMatrix p = m;
        for (int c = 0; c < m.cols; ++c) {
            std::swap(p.at(0, c), p.at(3, c));
            p.at(1, c) *= Rat(-7, 3);
        }
        CHECK(rank_exact(p) == r);
    }
}

TEST_CASE("modular rank never exceeds the exact rank and usually agrees") {
    std::mt19937 rng(43);
    const CycloField& f = CycloField::get(8);
    PrimeField F0 = PrimeField::nth_for_order(8, 0);
    PrimeField F1 = PrimeField::nth_for_order(8, 1);
    int agree = 0;
    const int trials = 50;
    for (int t = 0; t < trials; ++t) {
        CycloMatrix m = random_matrix(f, 10, 20, rng, 40);
        int re = rank_exact(m);
        int r0 = rank_modular(m, F0);
        int r1 = rank_modular(m, F1);
        CHECK(r0 <= re);
        CHECK(r1 <= re);
        if (r0 == re && r1 == re)
            ++agree;
    }
    CHECK(agree == trials); // random small matrices never hit a bad prime here
}

TEST_CASE("certified and fast ranks equal the exact rank") {
    std::mt19937 rng(47);
    const CycloField& f = CycloField::get(10);
    for (int t = 0; t < 10; ++t) {
        CycloMatrix m = random_matrix(f, 5, 9, rng, 50);
        int re = rank_exact(m);
        CHECK(rank(m, RankMode::Certified) == re);
        CHECK(rank(m, RankMode::Fast) == re);
    }
    // Also on structured period matrices.
    for (const PencilSpec& spec :
         {PencilSpec{5, 1, 2, 1, 2, 1, 1}, PencilSpec{5, 2, 2, 2, 2, 0, 0}}) {
        auto [c1, c2] = build_cycles(spec);
        CycloMatrix m = vconcat(period_matrix(c1, 5).m, period_matrix(c2, 5).m);
        CHECK(rank(m, RankMode::Certified) == rank_exact(m));
    }
}

TEST_CASE("exact inverse") {
    std::mt19937 rng(53);
    const CycloField& f = CycloField::get(8);
    for (int t = 0; t < 5; ++t) {
        CycloMatrix m = random_matrix(f, 4, 4, rng, 90);
        if (rank_exact(m) < 4)
            continue;
        CycloMatrix inv = inverse_exact(m);
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) {
                CycloElem acc;
                for (int k = 0; k < 4; ++k)
                    acc += m.at(r, k) * inv.at(k, c);
                if (r == c)
                    CHECK(acc == CycloElem::one(f));
                else
                    CHECK(acc.is_zero());
            }
    }
}
