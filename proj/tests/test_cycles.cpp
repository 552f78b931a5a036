#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fnl/cycles.hpp"

#include <filesystem>
#include <random>

using namespace fnl;

TEST_CASE("cycle construction from spec parameters") {
    // Exceptional degree-8 pair: (3,3)-curve and a disjoint line.
    auto [c1, c2] = build_cycles(PencilSpec{8, 3, 3, 1, 1, 0, 0});
    CHECK(c1.b0 == std::vector<int>{1, 3, 5});
    CHECK(c1.b1 == std::vector<int>{1, 3, 5});
    CHECK(c2.b0 == std::vector<int>{7});
    CHECK(c2.b1 == std::vector<int>{7});

    // m = d = s = 1 collapses both cycles to the same line.
    auto [e1, e2] = build_cycles(PencilSpec{4, 1, 1, 1, 1, 1, 1});
    CHECK(e1 == e2);
    CHECK(e1.b0 == std::vector<int>{1});

    auto [f1, f2] = build_cycles(PencilSpec{4, 1, 1, 1, 1, 0, 0});
    CHECK(f1.b0 == std::vector<int>{1});
    CHECK(f1.b1 == std::vector<int>{1});
    CHECK(f2.b0 == std::vector<int>{3});
    CHECK(f2.b1 == std::vector<int>{3});

    CHECK(c1.valid(8));
    CHECK(c2.valid(8));
}

TEST_CASE("period numbers") {
    CICycle line{{1}, {1}};
    CHECK(period_p(line, ExpVec{{2, 0, 2, 0}}, 4) == root_power(4, 6));
    CHECK(period_p(line, ExpVec{{3, 1, 0, 0}}, 4).is_zero()); // off the balanced set
    CICycle c{{1, 3}, {1}};
    CycloElem expect = (root_power(4, 1) + root_power(4, 3)) * root_power(4, 3);
    CHECK(period_p(c, ExpVec{{0, 2, 2, 0}}, 4) == expect);
    CHECK_THROWS_AS(period_p(line, ExpVec{{1, 1, 1, 0}}, 4), std::invalid_argument);
}

TEST_CASE("swapping the two factors transposes the exponent pairs") {
    std::mt19937 rng(3);
    for (int d : {4, 5, 6}) {
        CICycle c{{1, 2 * d - 1}, {3}};
        CICycle swapped{c.b1, c.b0};
        for (const ExpVec& i : balanced_index_set(d)) {
            ExpVec t{{i[2], i[3], i[0], i[1]}};
            CHECK(period_p(swapped, i, d) == period_p(c, t, d));
        }
    }
}

TEST_CASE("period matrix of a single line at d=4") {
    CICycle line{{1}, {1}};
    PeriodMatrix p = period_matrix(line, 4);
    CHECK(p.m.rows == 1);
    CHECK(p.m.cols == 19);
    int nonzero = 0;
    for (int c = 0; c < p.m.cols; ++c)
        if (p.m.at(0, c).attached() && !p.m.at(0, c).is_zero())
            ++nonzero;
    // Row exponent is zero, so the nonzero columns are exactly the elements
    // of the balanced set that fit the entry bound: 9 of them.
    CHECK(nonzero == 9);
}

TEST_CASE("zero pattern") {
    CICycle c{{1, 3}, {5}};
    int d = 5;
    PeriodMatrix p = period_matrix(c, d);
    for (int r = 0; r < p.m.rows; ++r)
        for (int cc = 0; cc < p.m.cols; ++cc) {
            ExpVec sum = p.row_index[r] + p.col_index[cc];
            if (sum[0] + sum[1] != d - 2 || sum[2] + sum[3] != d - 2)
                CHECK((!p.m.at(r, cc).attached() || p.m.at(r, cc).is_zero()));
        }
}

TEST_CASE("combination matrices are linear in the combination") {
    CICycle a{{1}, {1}}, b{{3}, {5}};
    int d = 4;
    PeriodMatrix pa = period_matrix(a, d), pb = period_matrix(b, d);

    // 1*C - 1*C vanishes.
    CycleCombo cancel{{{Rat(1), a}, {Rat(-1), a}}};
    PeriodMatrix z = period_matrix(cancel, d);
    for (const CycloElem& e : z.m.a)
        CHECK((!e.attached() || e.is_zero()));

    // 2*delta doubles every entry.
    CycleCombo twice{{{Rat(2), a}}};
    PeriodMatrix t = period_matrix(twice, d);
    for (size_t i = 0; i < t.m.a.size(); ++i)
        CHECK(t.m.a[i] == pa.m.a[i] * Rat(2));

    // Random rational combination, checked entrywise.
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> coeff(-5, 5);
    for (int trial = 0; trial < 5; ++trial) {
        Rat ca(coeff(rng), 3), cb(coeff(rng), 2);
        ca.canonicalize();
        cb.canonicalize();
        CycleCombo combo{{{ca, a}, {cb, b}}};
        combo.terms.erase(std::remove_if(combo.terms.begin(), combo.terms.end(),
                                         [](const auto& t2) { return t2.first == 0; }),
                          combo.terms.end());
        PeriodMatrix pc = period_matrix(combo, d);
        for (size_t i = 0; i < pc.m.a.size(); ++i)
            CHECK(pc.m.a[i] == pa.m.a[i] * ca + pb.m.a[i] * cb);
    }
}

TEST_CASE("pencil combo merges identical cycles") {
    CICycle a{{1}, {1}};
    CycleCombo combo = CycleCombo::pencil(a, a, Rat(1), Rat(-1));
    CHECK(combo.terms.empty());
    CycleCombo combo2 = CycleCombo::pencil(a, a, Rat(2), Rat(3));
    REQUIRE(combo2.terms.size() == 1);
    CHECK(combo2.terms[0].first == 5);
}

TEST_CASE("disk cache round trip") {
    std::filesystem::path dir =
        std::filesystem::temp_directory_path() / "fermatnl_test_cache";
    std::filesystem::remove_all(dir);
    DiskCache cache(dir.string());
    CICycle c{{1, 3}, {1}};
    PeriodMatrix fresh = period_matrix(c, 5, &cache);
    PeriodMatrix cached = period_matrix(c, 5, &cache);
    CHECK(fresh.m.rows == cached.m.rows);
    CHECK(fresh.m.cols == cached.m.cols);
    for (size_t i = 0; i < fresh.m.a.size(); ++i)
        CHECK(fresh.m.a[i] == cached.m.a[i]);
    std::filesystem::remove_all(dir);
}
