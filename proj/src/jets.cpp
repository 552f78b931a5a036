#include "fnl/jets.hpp"

#include <algorithm>
#include <stdexcept>

namespace fnl {

namespace {

CycloMatrix linear_matrix(const JetIdeal& J) {
    CycloMatrix L(static_cast<int>(J.generators.size()), J.vars ? static_cast<int>(J.vars->size()) : 0);
    for (size_t g = 0; g < J.generators.size(); ++g) {
        std::vector<CycloElem> row = J.generators[g].linear_coeffs();
        for (int c = 0; c < L.cols; ++c)
            L.at(static_cast<int>(g), c) = row[c];
    }
    return L;
}

} // namespace

int linear_codim(const JetIdeal& J) {
    if (J.order < 1)
        throw std::invalid_argument("linear_codim: order must be >= 1");
    return rank_exact(linear_matrix(J));
}

JetAnalysis analyze_jets(const JetIdeal& J) {
    JetAnalysis out;
    const int n = J.vars ? static_cast<int>(J.vars->size()) : 0;
    for (const TruncatedSeries& g : J.generators) {
        if (!g.same_vars(TruncatedSeries{J.vars, J.order}))
            throw std::invalid_argument("analyze_jets: generator variable mismatch");
        CycloElem c0 = g.constant_term();
        if (c0.attached() && !c0.is_zero())
            throw std::invalid_argument("analyze_jets: generator has nonzero constant term");
    }

    // Select pivot generators greedily: keep a generator iff its linear part
    // is independent of the previously kept ones; its pivot variable is the
    // first coordinate surviving reduction.
    CycloMatrix L = linear_matrix(J);
    std::vector<std::vector<CycloElem>> reduced; // reduced rows, unit pivot
    std::vector<int> red_pivot;                  // pivot column of reduced[i]
    for (int g = 0; g < L.rows; ++g) {
        std::vector<CycloElem> row(n);
        for (int c = 0; c < n; ++c)
            row[c] = L.at(g, c);
        for (size_t t = 0; t < reduced.size(); ++t) {
            const CycloElem& f = row[red_pivot[t]];
            if (!f.attached() || f.is_zero())
                continue;
            CycloElem fac = f;
            for (int c = 0; c < n; ++c)
                row[c] -= fac * reduced[t][c];
        }
        int piv = -1;
        for (int c = 0; c < n; ++c)
            if (row[c].attached() && !row[c].is_zero()) {
                piv = c;
                break;
            }
        if (piv < 0)
            continue;
        CycloElem inv = row[piv].inverse();
        for (int c = 0; c < n; ++c)
            row[c] *= inv;
        reduced.push_back(std::move(row));
        red_pivot.push_back(piv);
        out.pivot_generators.push_back(g);
        out.pivot_vars.push_back(piv);
    }
    const int c = static_cast<int>(out.pivot_generators.size());
    out.linear_codim = c;

    if (c == 0) {
        // No linear parts at all: the only smooth germ compatible with this
        // ideal is the whole space, so any surviving term is a failure.
        int best = 0;
        for (const TruncatedSeries& g : J.generators) {
            int m = g.min_nonzero_degree();
            if (m > 0 && (best == 0 || m < best))
                best = m;
        }
        out.first_failure = best;
        return out;
    }

    // Split variables.
    std::vector<bool> is_pivot_var(n, false);
    for (int pv : out.pivot_vars)
        is_pivot_var[pv] = true;
    std::vector<ExpVec> free_list;
    std::vector<int> free_index(n, -1);
    for (int i = 0; i < n; ++i)
        if (!is_pivot_var[i]) {
            free_index[i] = static_cast<int>(free_list.size());
            free_list.push_back((*J.vars)[i]);
        }
    VarList yvars = make_vars(std::move(free_list));

    const CycloField* field = nullptr;
    for (const TruncatedSeries& g : J.generators) {
        for (const auto& [a, cc] : g.terms)
            if (cc.attached()) {
                field = &cc.field();
                break;
            }
        if (field)
            break;
    }
    if (!field)
        throw std::invalid_argument("analyze_jets: all generators are zero");

    // Linear block on the pivot variables and its exact inverse.
    CycloMatrix B(c, c);
    for (int r = 0; r < c; ++r)
        for (int q = 0; q < c; ++q)
            B.at(r, q) = L.at(out.pivot_generators[r], out.pivot_vars[q]);
    CycloMatrix Binv = inverse_exact(B);

    // Variable images: free variables map to themselves, pivot variables to
    // the solved series (built degree by degree).
    std::vector<TruncatedSeries> images(n);
    for (int i = 0; i < n; ++i) {
        if (free_index[i] >= 0)
            images[i] = TruncatedSeries::variable(yvars, J.order, free_index[i], *field);
        else
            images[i] = TruncatedSeries(yvars, J.order);
    }

    for (int deg = 1; deg <= J.order; ++deg) {
        // Residuals of the pivot system are exact through degree `deg` given
        // images solved through degree deg-1.
        std::vector<TruncatedSeries> errs;
        errs.reserve(c);
        bool all_zero = true;
        for (int r = 0; r < c; ++r) {
            TruncatedSeries res = substitute(J.generators[out.pivot_generators[r]], images, deg);
            TruncatedSeries e = res.homogeneous_part(deg);
            if (!e.terms.empty())
                all_zero = false;
            errs.push_back(std::move(e));
        }
        if (all_zero)
            continue;
        for (int q = 0; q < c; ++q) {
            TruncatedSeries delta(yvars, J.order);
            for (int r = 0; r < c; ++r) {
                if (errs[r].terms.empty())
                    continue;
                TruncatedSeries part = errs[r];
                part.scale(Binv.at(q, r));
                delta -= part;
            }
            images[out.pivot_vars[q]] += delta;
        }
    }

    // Back-substitution check: the solved system must vanish through order.
    for (int r = 0; r < c; ++r) {
        TruncatedSeries res = substitute(J.generators[out.pivot_generators[r]], images, J.order);
        if (res.min_nonzero_degree() >= 0)
            throw std::logic_error("analyze_jets: implicit solve back-substitution failed");
    }

    // Residuals of the remaining generators.
    int best = 0;
    std::vector<bool> is_pivot_gen(J.generators.size(), false);
    for (int g : out.pivot_generators)
        is_pivot_gen[g] = true;
    for (size_t g = 0; g < J.generators.size(); ++g) {
        if (is_pivot_gen[g])
            continue;
        TruncatedSeries res = substitute(J.generators[g], images, J.order);
        int m = res.min_nonzero_degree();
        if (m > 0 && (best == 0 || m < best))
            best = m;
    }
    out.first_failure = best;
    return out;
}

bool n_smooth(const JetIdeal& J, int N) {
    if (N < 1)
        throw std::invalid_argument("n_smooth: N must be >= 1");
    if (N > J.order)
        throw std::invalid_argument("n_smooth: N exceeds the ideal's truncation order");
    JetAnalysis a = analyze_jets(J);
    return a.first_failure == 0 || a.first_failure > N;
}

} // namespace fnl
