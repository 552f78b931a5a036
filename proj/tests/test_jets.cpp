#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fnl/jets.hpp"

#include <random>

using namespace fnl;

namespace {

// Synthetic variable lists; the jet machinery never inspects the exponents.
VarList synth_vars(int n) {
    std::vector<ExpVec> v;
    for (int i = 0; i < n; ++i)
        v.push_back(ExpVec{{i, 0, 0, 0}});
    return make_vars(std::move(v));
}

TruncatedSeries monomial(VarList vars, int order, std::vector<int> exps, const CycloElem& c) {
    TruncatedSeries s(vars, order);
    MultiIdx a(vars->size(), 0);
    for (size_t i = 0; i < exps.size(); ++i)
        a[i] = static_cast<std::uint8_t>(exps[i]);
    s.add_term(a, c);
    return s;
}

} // namespace

TEST_CASE("a linear coordinate ideal is smooth at every order") {
    const CycloField& f = CycloField::get(8);
    VarList vars = synth_vars(3);
    JetIdeal J;
    J.vars = vars;
    J.order = 5;
    J.generators.push_back(monomial(vars, 5, {1, 0, 0}, CycloElem::one(f)));
    J.generators.push_back(monomial(vars, 5, {0, 1, 0}, root_power(4, 3)));
    CHECK(linear_codim(J) == 2);
    for (int N = 1; N <= 5; ++N)
        CHECK(n_smooth(J, N));
    JetAnalysis an = analyze_jets(J);
    CHECK(an.first_failure == 0);
    CHECK(an.pivot_vars == std::vector<int>{0, 1});
}

TEST_CASE("the ideal (w, y^2) fails exactly at order 2") {
    const CycloField& f = CycloField::get(8);
    VarList vars = synth_vars(2); // w = var0, y = var1
    JetIdeal J;
    J.vars = vars;
    J.order = 4;
    J.generators.push_back(monomial(vars, 4, {1, 0}, CycloElem::one(f)));
    J.generators.push_back(monomial(vars, 4, {0, 2}, CycloElem::one(f)));
    CHECK(linear_codim(J) == 1);
    CHECK(n_smooth(J, 1));
    CHECK_FALSE(n_smooth(J, 2));
    CHECK_FALSE(n_smooth(J, 3)); // monotone
    CHECK(analyze_jets(J).first_failure == 2);
}

TEST_CASE("w + y^2 together with w is the same ideal as (w, y^2)") {
    const CycloField& f = CycloField::get(8);
    VarList vars = synth_vars(2);
    JetIdeal J;
    J.vars = vars;
    J.order = 3;
    TruncatedSeries g1 = monomial(vars, 3, {1, 0}, CycloElem::one(f));
    g1 += monomial(vars, 3, {0, 2}, CycloElem::one(f));
    J.generators.push_back(g1);
    J.generators.push_back(monomial(vars, 3, {1, 0}, CycloElem::one(f)));
    CHECK(analyze_jets(J).first_failure == 2);
}

TEST_CASE("a single non-linear hypersurface generator is smooth") {
    const CycloField& f = CycloField::get(8);
    VarList vars = synth_vars(2);
    JetIdeal J;
    J.vars = vars;
    J.order = 4;
    TruncatedSeries g = monomial(vars, 4, {1, 0}, CycloElem::one(f));
    g += monomial(vars, 4, {0, 2}, root_power(4, 1));
    g += monomial(vars, 4, {0, 4}, root_power(4, 5));
    J.generators.push_back(g);
    CHECK(analyze_jets(J).first_failure == 0);
}

TEST_CASE("generators with no linear part") {
    const CycloField& f = CycloField::get(8);
    VarList vars = synth_vars(2);
    JetIdeal J;
    J.vars = vars;
    J.order = 4;
    J.generators.push_back(monomial(vars, 4, {0, 3}, CycloElem::one(f)));
    CHECK(linear_codim(J) == 0);
    CHECK(analyze_jets(J).first_failure == 3);
    JetIdeal Z;
    Z.vars = vars;
    Z.order = 4;
    Z.generators.push_back(TruncatedSeries(vars, 4));
    CHECK(analyze_jets(Z).first_failure == 0);
}

TEST_CASE("randomized smooth-by-construction ideals") {
    std::mt19937 rng(71);
    const CycloField& f = CycloField::get(8);
    std::uniform_int_distribution<int> num(-3, 3), pick(0, 1), exp1(1, 2);
    const int order = 4;
    for (int trial = 0; trial < 10; ++trial) {
        // Three pivots w0,w1,w2 and two free y0,y1 (vars 3,4).
        VarList vars = synth_vars(5);
        auto rnd_tail = [&]() { // random series in the free variables, degrees 1..order
            TruncatedSeries s(vars, order);
            for (int t = 0; t < 3; ++t) {
                MultiIdx a(5, 0);
                a[3] = static_cast<std::uint8_t>(pick(rng) * exp1(rng));
                a[4] = static_cast<std::uint8_t>(exp1(rng));
                std::vector<Rat> c(f.degree());
                c[pick(rng)] = num(rng);
                s.add_term(a, CycloElem(f, std::move(c)));
            }
            return s;
        };
        std::vector<TruncatedSeries> gens;
        for (int i = 0; i < 3; ++i) {
            TruncatedSeries g = monomial(vars, order, {i == 0, i == 1, i == 2}, CycloElem::one(f));
            g += rnd_tail();
            gens.push_back(g);
        }
        // Extra generators: series combinations of the first three.
        for (int extra = 0; extra < 2; ++extra) {
            TruncatedSeries combo(vars, order);
            for (int i = 0; i < 3; ++i) {
                TruncatedSeries u = rnd_tail();
                u += TruncatedSeries::constant(vars, order, CycloElem(f, Rat(num(rng))));
                combo += mul_truncated(u, gens[i], order);
            }
            gens.push_back(combo);
        }
        JetIdeal J;
        J.vars = vars;
        J.order = order;
        J.generators = gens;
        JetAnalysis an = analyze_jets(J);
        CHECK(an.linear_codim == 3);
        CHECK(an.first_failure == 0);

        // Spoil it: add y0^3 to one extra generator; failure lands at 3.
        JetIdeal bad = J;
        bad.generators.push_back(gens[3]);
        bad.generators.back() += monomial(vars, order, {0, 0, 0, 3, 0}, CycloElem::one(f));
        JetAnalysis an2 = analyze_jets(bad);
        CHECK(an2.first_failure == 3);
        CHECK_FALSE(n_smooth(bad, 3));
        CHECK(n_smooth(bad, 2));
        CHECK_FALSE(n_smooth(bad, 4)); // monotone
    }
}

TEST_CASE("result is invariant under generator permutation and scaling") {
    const CycloField& f = CycloField::get(8);
    VarList vars = synth_vars(3);
    JetIdeal J;
    J.vars = vars;
    J.order = 3;
    TruncatedSeries g1 = monomial(vars, 3, {1, 0, 0}, CycloElem::one(f));
    g1 += monomial(vars, 3, {0, 0, 2}, CycloElem::one(f));
    TruncatedSeries g2 = monomial(vars, 3, {0, 1, 0}, root_power(4, 2));
    TruncatedSeries g3 = monomial(vars, 3, {0, 0, 3}, CycloElem::one(f));
    J.generators = {g1, g2, g3};
    int base = analyze_jets(J).first_failure;
    CHECK(base == 3);
    JetIdeal P = J;
    std::swap(P.generators[0], P.generators[2]);
    P.generators[1].scale(Rat(-7, 2));
    CHECK(analyze_jets(P).first_failure == base);
}

TEST_CASE("order guard") {
    const CycloField& f = CycloField::get(8);
    VarList vars = synth_vars(2);
    JetIdeal J;
    J.vars = vars;
    J.order = 2;
    J.generators.push_back(monomial(vars, 2, {1, 0}, CycloElem::one(f)));
    CHECK_THROWS_AS(n_smooth(J, 3), std::invalid_argument);
    CHECK_THROWS_AS(n_smooth(J, 0), std::invalid_argument);
}
