#include "fnl/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace fnl {

VarList make_vars(std::vector<ExpVec> vars) {
    return std::make_shared<const std::vector<ExpVec>>(std::move(vars));
}

int multi_degree(const MultiIdx& a) {
    int s = 0;
    for (auto e : a)
        s += e;
    return s;
}

TruncatedSeries TruncatedSeries::constant(VarList v, int n, CycloElem c) {
    TruncatedSeries s(std::move(v), n);
    if (c.attached() && !c.is_zero())
        s.terms.emplace(MultiIdx(s.nvars(), 0), std::move(c));
    return s;
}

TruncatedSeries TruncatedSeries::variable(VarList v, int n, int index, const CycloField& f) {
    TruncatedSeries s(std::move(v), n);
    if (n >= 1) {
        MultiIdx a(s.nvars(), 0);
        a.at(index) = 1;
        s.terms.emplace(std::move(a), CycloElem::one(f));
    }
    return s;
}

void TruncatedSeries::add_term(const MultiIdx& a, const CycloElem& c) {
    if (static_cast<int>(a.size()) != nvars())
        throw std::invalid_argument("add_term: multi-index width mismatch");
    if (multi_degree(a) > order)
        return;
    if (!c.attached() || c.is_zero())
        return;
    auto it = terms.find(a);
    if (it == terms.end()) {
        terms.emplace(a, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero())
        terms.erase(it);
}

CycloElem TruncatedSeries::coeff(const MultiIdx& a) const {
    auto it = terms.find(a);
    return it == terms.end() ? CycloElem() : it->second;
}

CycloElem TruncatedSeries::constant_term() const {
    return coeff(MultiIdx(nvars(), 0));
}

std::vector<CycloElem> TruncatedSeries::linear_coeffs() const {
    std::vector<CycloElem> out(nvars());
    MultiIdx a(nvars(), 0);
    for (int i = 0; i < nvars(); ++i) {
        a[i] = 1;
        out[i] = coeff(a);
        a[i] = 0;
    }
    return out;
}

bool TruncatedSeries::same_vars(const TruncatedSeries& o) const {
    if (vars == o.vars)
        return true;
    return vars && o.vars && *vars == *o.vars;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
    if (!same_vars(o))
        throw std::invalid_argument("series add: variable sets differ");
    for (const auto& [a, c] : o.terms)
        add_term(a, c);
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
    if (!same_vars(o))
        throw std::invalid_argument("series sub: variable sets differ");
    for (const auto& [a, c] : o.terms)
        add_term(a, -c);
    return *this;
}

void TruncatedSeries::scale(const CycloElem& c) {
    if (!c.attached() || c.is_zero()) {
        terms.clear();
        return;
    }
    for (auto& [a, v] : terms)
        v *= c;
}

void TruncatedSeries::scale(const Rat& c) {
    if (c == 0) {
        terms.clear();
        return;
    }
    for (auto& [a, v] : terms)
        v *= c;
}

int TruncatedSeries::min_nonzero_degree() const {
    int best = -1;
    for (const auto& [a, c] : terms) {
        int d = multi_degree(a);
        if (best < 0 || d < best)
            best = d;
    }
    return best;
}

TruncatedSeries TruncatedSeries::homogeneous_part(int deg) const {
    TruncatedSeries out(vars, order);
    for (const auto& [a, c] : terms)
        if (multi_degree(a) == deg)
            out.terms.emplace(a, c);
    return out;
}

TruncatedSeries TruncatedSeries::truncated(int n) const {
    TruncatedSeries out(vars, n);
    for (const auto& [a, c] : terms)
        if (multi_degree(a) <= n)
            out.terms.emplace(a, c);
    return out;
}

TruncatedSeries mul_truncated(const TruncatedSeries& a, const TruncatedSeries& b, int n) {
    if (!a.same_vars(b))
        throw std::invalid_argument("series mul: variable sets differ");
    TruncatedSeries out(a.vars, n);
    for (const auto& [ia, ca] : a.terms) {
        int da = multi_degree(ia);
        if (da > n)
            continue;
        for (const auto& [ib, cb] : b.terms) {
            if (da + multi_degree(ib) > n)
                continue;
            MultiIdx sum(ia.size());
            for (size_t t = 0; t < ia.size(); ++t)
                sum[t] = static_cast<std::uint8_t>(ia[t] + ib[t]);
            out.add_term(sum, ca * cb);
        }
    }
    return out;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    return mul_truncated(a, b, std::min(a.order, b.order));
}

TruncatedSeries substitute(const TruncatedSeries& s, const std::vector<TruncatedSeries>& images,
                           int n) {
    if (static_cast<int>(images.size()) != s.nvars())
        throw std::invalid_argument("substitute: image count != variable count");
    for (const TruncatedSeries& im : images)
        if (!im.constant_term().is_zero() && im.constant_term().attached())
            throw std::invalid_argument("substitute: image has nonzero constant term");
    VarList target = images.empty() ? make_vars({}) : images.front().vars;
    TruncatedSeries out(target, n);
    // Memoized powers of each image.
    std::vector<std::vector<TruncatedSeries>> pows(images.size());
    auto power = [&](int i, int e) -> const TruncatedSeries& {
        auto& ps = pows[i];
        if (ps.empty()) {
            ps.push_back(TruncatedSeries::constant(target, n, CycloElem()));
            // index 0 placeholder; replaced below by 1 handled separately
        }
        while (static_cast<int>(ps.size()) <= e) {
            if (ps.size() == 1)
                ps.push_back(images[i].truncated(n));
            else
                ps.push_back(mul_truncated(ps.back(), images[i], n));
        }
        return ps[e];
    };
    for (const auto& [a, c] : s.terms) {
        // Each image has positive valuation, so the composed term has degree
        // at least multi_degree(a).
        if (multi_degree(a) > n)
            continue;
        TruncatedSeries prod = TruncatedSeries::constant(target, n, c);
        bool dead = false;
        for (size_t i = 0; i < a.size() && !dead; ++i) {
            if (a[i] == 0)
                continue;
            const TruncatedSeries& p = power(static_cast<int>(i), a[i]);
            prod = mul_truncated(prod, p, n);
            if (prod.terms.empty())
                dead = true;
        }
        if (!dead)
            out += prod;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Taylor expansion of line periods.
// ---------------------------------------------------------------------------

bool period_constraint_holds(const ExpVec& gamma, int d) {
    int r0 = (gamma[0] + 1) % d;
    int r1 = (gamma[1] + 1) % d;
    int r2 = (gamma[2] + 1) % d;
    int r3 = (gamma[3] + 1) % d;
    return r0 + r1 == d && r2 + r3 == d;
}

CycloElem taylor_gamma_factor(int d, int u, int v, const ExpVec& gamma, ZetaWindow window) {
    if (!period_constraint_holds(gamma, d))
        return CycloElem();
    long e0 = gamma[0] + 1;
    long e2 = gamma[2] + 1;
    if (window == ZetaWindow::Reduced) {
        e0 %= d;
        e2 %= d;
    }
    Rat poch(1);
    for (int i = 0; i < 4; ++i) {
        long val = gamma[i] + 1;
        long q = val / d;
        long rho = val % d;
        Rat base(rho, d);
        base.canonicalize();
        poch *= pochhammer(base, static_cast<unsigned long>(q));
    }
    CycloElem z = root_power(d, static_cast<long>(u) * e0 + static_cast<long>(v) * e2);
    z *= poch;
    return z;
}

namespace {

struct Enumerator {
    int d;
    int u, v;
    ZetaWindow window;
    const std::vector<ExpVec>* vars;
    int order;
    TruncatedSeries* out;
    // reach[pos][b]: residues (gamma0+gamma1 mod d) addable using vars from
    // pos on with total count <= b.
    std::vector<std::vector<std::vector<bool>>> reach;
    std::vector<int> wpair; // (var0+var1) mod d per variable

    void build_reach() {
        int n = static_cast<int>(vars->size());
        reach.assign(n + 1, std::vector<std::vector<bool>>(order + 1, std::vector<bool>(d, false)));
        for (int b = 0; b <= order; ++b)
            reach[n][b][0] = true;
        for (int pos = n - 1; pos >= 0; --pos)
            for (int b = 0; b <= order; ++b)
                for (int c = 0; c <= b; ++c) {
                    int off = (c * wpair[pos]) % d;
                    for (int r = 0; r < d; ++r)
                        if (reach[pos + 1][b - c][r])
                            reach[pos][b][(r + off) % d] = true;
                }
    }

    void recurse(int pos, int budget, ExpVec gamma, MultiIdx& a, const Int& afact) {
        int n = static_cast<int>(vars->size());
        int need = (((d - 2) - (gamma[0] + gamma[1])) % d + d) % d;
        if (!reach[pos][budget][need])
            return;
        if (pos == n) {
            if (!period_constraint_holds(gamma, d))
                return;
            CycloElem c = taylor_gamma_factor(d, u, v, gamma, window);
            c *= Rat(Int(1), afact);
            out->add_term(a, c);
            return;
        }
        const ExpVec& w = (*vars)[pos];
        Int fact = afact;
        for (int cnt = 0; cnt <= budget; ++cnt) {
            if (cnt > 0) {
                fact *= cnt;
                for (int i = 0; i < 4; ++i)
                    gamma[i] += w[i];
            }
            a[pos] = static_cast<std::uint8_t>(cnt);
            recurse(pos + 1, budget - cnt, gamma, a, fact);
        }
        a[pos] = 0;
    }
};

} // namespace

TruncatedSeries taylor_period(int d, int u, int v, const ExpVec& beta, int k, VarList vars, int n,
                              ZetaWindow window) {
    if (u % 2 == 0 || v % 2 == 0)
        throw std::invalid_argument("taylor_period: line exponents must be odd");
    if (beta.degree() != d * k - 4)
        throw std::invalid_argument("taylor_period: deg(beta) must be d*k-4");
    for (const ExpVec& w : *vars)
        if (w.degree() != d)
            throw std::invalid_argument("taylor_period: variables must have degree d");
    TruncatedSeries s(vars, n);
    Enumerator en;
    en.d = d;
    en.u = u;
    en.v = v;
    en.window = window;
    en.vars = vars.get();
    en.order = n;
    en.out = &s;
    en.wpair.resize(vars->size());
    for (size_t i = 0; i < vars->size(); ++i)
        en.wpair[i] = ((*vars)[i][0] + (*vars)[i][1]) % d;
    en.build_reach();
    MultiIdx a(vars->size(), 0);
    en.recurse(0, n, beta, a, Int(1));
    return s;
}

TruncatedSeries combo_taylor(int d, const CycleCombo& combo, const ExpVec& beta, int k,
                             VarList vars, int n, ZetaWindow window) {
    TruncatedSeries acc(vars, n);
    for (const auto& [coeff, cyc] : combo.terms)
        for (int u : cyc.b0)
            for (int v : cyc.b1) {
                TruncatedSeries line = taylor_period(d, u, v, beta, k, vars, n, window);
                line.scale(coeff);
                acc += line;
            }
    return acc;
}

Json series_to_json(const TruncatedSeries& s) {
    Json j;
    j["order"] = s.order;
    Json vars = Json::array();
    for (const ExpVec& v : *s.vars)
        vars.push_back(expvec_to_json(v));
    j["vars"] = std::move(vars);
    Json terms = Json::array();
    for (const auto& [a, c] : s.terms) {
        Json idx = Json::array();
        for (auto e : a)
            idx.push_back(static_cast<int>(e));
        terms.push_back(Json::array({std::move(idx), cyclo_to_json(c)}));
    }
    j["terms"] = std::move(terms);
    return j;
}

TruncatedSeries series_from_json(const Json& j) {
    std::vector<ExpVec> vars;
    for (const auto& v : j.at("vars"))
        vars.push_back(expvec_from_json(v));
    TruncatedSeries s(make_vars(std::move(vars)), j.at("order").get<int>());
    for (const auto& t : j.at("terms")) {
        MultiIdx a;
        for (const auto& e : t.at(0))
            a.push_back(static_cast<std::uint8_t>(e.get<int>()));
        s.terms.emplace(std::move(a), cyclo_from_json(t.at(1)));
    }
    return s;
}

} // namespace fnl
