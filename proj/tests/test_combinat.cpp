#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fnl/combinat.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace fnl;

namespace {

// Independent enumeration: scan the full exponent box and filter.
std::set<ExpVec> brute_index_set(int d, int N) {
    std::set<ExpVec> out;
    for (int i0 = 0; i0 <= d - 2; ++i0)
        for (int i1 = 0; i1 <= d - 2; ++i1)
            for (int i2 = 0; i2 <= d - 2; ++i2)
                for (int i3 = 0; i3 <= d - 2; ++i3)
                    if (i0 + i1 + i2 + i3 == N)
                        out.insert(ExpVec{{i0, i1, i2, i3}});
    return out;
}

} // namespace

TEST_CASE("index_set matches brute force and is lexicographic") {
    for (int d = 4; d <= 9; ++d)
        for (int N : {d - 4, d}) {
            std::vector<ExpVec> got = index_set(d, N);
            std::set<ExpVec> expect = brute_index_set(d, N);
            CHECK(got.size() == expect.size());
            CHECK(std::set<ExpVec>(got.begin(), got.end()) == expect);
            CHECK(std::is_sorted(got.begin(), got.end()));
        }
    CHECK(index_set(4, 0).size() == 1);
    CHECK(index_set(4, 0)[0] == ExpVec{{0, 0, 0, 0}});
    // All entries capped at d-2 = 2; brute force gives 19 of the 35
    // compositions of 4 into 4 parts.
    CHECK(index_set(4, 4).size() == 19);
    CHECK(index_set(4, 4).size() == brute_index_set(4, 4).size());
    CHECK(index_set(5, 1).size() == 4);
    for (const ExpVec& v : index_set(5, 1))
        CHECK(v.degree() == 1);
}

TEST_CASE("|I_{d-4}| is the Hodge number h20") {
    for (int d = 4; d <= 12; ++d)
        CHECK(static_cast<int>(index_set(d, d - 4).size()) == hodge_number_h20(d));
}

TEST_CASE("balanced index set") {
    for (int d = 4; d <= 12; ++d) {
        std::vector<ExpVec> got = balanced_index_set(d);
        CHECK(got.size() == static_cast<size_t>((d - 1) * (d - 1)));
        for (const ExpVec& v : got) {
            CHECK(v[0] + v[1] == d - 2);
            CHECK(v[2] + v[3] == d - 2);
        }
    }
    std::vector<ExpVec> b4 = balanced_index_set(4);
    CHECK(std::count(b4.begin(), b4.end(), ExpVec{{2, 0, 2, 0}}) == 1);
    CHECK(std::count(b4.begin(), b4.end(), ExpVec{{1, 0, 2, 0}}) == 0);
}

TEST_CASE("pencil spec counts match the published table") {
    CHECK(enumerate_pencil_specs(4).size() == 61);
    CHECK(enumerate_pencil_specs(5).size() == 61);
    CHECK(enumerate_pencil_specs(6).size() == 355);
    CHECK(enumerate_pencil_specs(7).size() == 355);
    CHECK(enumerate_pencil_specs(8).size() == 1333);
    CHECK(enumerate_pencil_specs(9).size() == 1333);
    CHECK(enumerate_pencil_specs(10).size() == 3873);
    CHECK(enumerate_pencil_specs(11).size() == 3873);
}

TEST_CASE("pencil spec count closed form") {
    // sum over d1 <= d2 of S(d1) S(d2), S(e) = sum_s (min(e,s)+1).
    for (int d = 4; d <= 11; ++d) {
        int half = d / 2;
        auto S = [&](int e) {
            int s = 0;
            for (int k = 1; k <= half; ++k)
                s += std::min(e, k) + 1;
            return s;
        };
        size_t expect = 0;
        for (int d1 = 1; d1 <= half; ++d1)
            for (int d2 = d1; d2 <= half; ++d2)
                expect += static_cast<size_t>(S(d1)) * S(d2);
        CHECK(enumerate_pencil_specs(d).size() == expect);
    }
}

TEST_CASE("every enumerated spec is valid and distinct") {
    for (int d : {4, 7}) {
        std::vector<PencilSpec> specs = enumerate_pencil_specs(d);
        std::set<PencilSpec> uniq(specs.begin(), specs.end());
        CHECK(uniq.size() == specs.size());
        for (const PencilSpec& s : specs)
            CHECK(s.valid());
    }
}

TEST_CASE("spec validity edges") {
    CHECK(PencilSpec{8, 3, 3, 1, 1, 0, 0}.valid());
    CHECK_FALSE(PencilSpec{8, 3, 2, 1, 1, 0, 0}.valid()); // d1 > d2
    CHECK_FALSE(PencilSpec{8, 1, 1, 5, 1, 0, 0}.valid()); // s1 > d/2
    CHECK_FALSE(PencilSpec{8, 1, 1, 1, 1, 2, 0}.valid()); // m1 > min(d1, s1)
    CHECK(PencilSpec{9, 4, 4, 4, 4, 0, 0}.valid());       // floor(9/2) = 4
}
