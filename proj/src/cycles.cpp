#include "fnl/cycles.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace fnl {

bool CICycle::valid(int d) const {
    auto ok = [d](const std::vector<int>& v) {
        if (v.empty())
            return false;
        std::set<int> seen;
        for (int u : v) {
            if (u < 1 || u > 2 * d - 1 || u % 2 == 0)
                return false;
            if (!seen.insert(u).second)
                return false;
        }
        return true;
    };
    return ok(b0) && ok(b1);
}

std::string CICycle::str() const {
    auto part = [](const std::vector<int>& v) {
        std::string s;
        for (size_t i = 0; i < v.size(); ++i)
            s += (i ? "." : "") + std::to_string(v[i]);
        return s;
    };
    return part(b0) + "_" + part(b1);
}

std::pair<CICycle, CICycle> build_cycles(const PencilSpec& spec) {
    if (!spec.valid())
        throw std::invalid_argument("build_cycles: invalid pencil spec");
    auto block = [](int from, int to) {
        std::vector<int> v;
        for (int i = from; i < to; ++i)
            v.push_back(2 * i + 1);
        return v;
    };
    CICycle c1{block(0, spec.d1), block(0, spec.d2)};
    CICycle c2;
    c2.b0 = block(0, spec.m1);
    for (int u : block(spec.d1, spec.d1 + spec.s1 - spec.m1))
        c2.b0.push_back(u);
    c2.b1 = block(0, spec.m2);
    for (int u : block(spec.d2, spec.d2 + spec.s2 - spec.m2))
        c2.b1.push_back(u);
    std::sort(c2.b0.begin(), c2.b0.end());
    std::sort(c2.b1.begin(), c2.b1.end());
    return {c1, c2};
}

CycleCombo CycleCombo::pencil(const CICycle& c1, const CICycle& c2, const Rat& r1, const Rat& r2) {
    CycleCombo combo;
    if (r1 != 0)
        combo.terms.emplace_back(r1, c1);
    if (r2 != 0) {
        if (c2 == c1 && r1 != 0)
            combo.terms.back().first += r2;
        else
            combo.terms.emplace_back(r2, c2);
    }
    combo.terms.erase(std::remove_if(combo.terms.begin(), combo.terms.end(),
                                     [](const auto& t) { return t.first == 0; }),
                      combo.terms.end());
    return combo;
}

CycloElem power_sum(const std::vector<int>& exps, long e, int d) {
    CycloElem acc;
    for (int u : exps)
        acc += root_power(d, static_cast<long>(u) * e);
    return acc;
}

CycloElem period_p(const CICycle& c, const ExpVec& i, int d) {
    if (i.degree() != 2 * d - 4)
        throw std::invalid_argument("period_p: exponent degree must be 2d-4");
    if (i[0] < 0 || i[1] < 0 || i[2] < 0 || i[3] < 0)
        return CycloElem();
    if (i[0] + i[1] != d - 2 || i[2] + i[3] != d - 2)
        return CycloElem();
    return power_sum(c.b0, i[0] + 1, d) * power_sum(c.b1, i[2] + 1, d);
}

namespace {

std::string cache_key(const CICycle& c, int d) {
    return "pm_d" + std::to_string(d) + "_" + c.str();
}

Json matrix_to_json(const PeriodMatrix& p, const CICycle& c) {
    Json j;
    j["d"] = p.d;
    j["b0"] = c.b0;
    j["b1"] = c.b1;
    Json rows = Json::array(), cols = Json::array();
    for (const ExpVec& v : p.row_index)
        rows.push_back(expvec_to_json(v));
    for (const ExpVec& v : p.col_index)
        cols.push_back(expvec_to_json(v));
    j["rows"] = std::move(rows);
    j["cols"] = std::move(cols);
    Json entries = Json::array();
    for (int r = 0; r < p.m.rows; ++r)
        for (int cix = 0; cix < p.m.cols; ++cix) {
            const CycloElem& e = p.m.at(r, cix);
            if (!e.attached() || e.is_zero())
                continue;
            Json cs = Json::array();
            for (const Rat& q : e.coeffs())
                cs.push_back(rat_str(q));
            entries.push_back(Json::array({r, cix, std::move(cs)}));
        }
    j["entries"] = std::move(entries);
    return j;
}

PeriodMatrix matrix_from_json(const Json& j, int d) {
    PeriodMatrix p;
    p.d = d;
    for (const auto& v : j.at("rows"))
        p.row_index.push_back(expvec_from_json(v));
    for (const auto& v : j.at("cols"))
        p.col_index.push_back(expvec_from_json(v));
    p.m = CycloMatrix(static_cast<int>(p.row_index.size()), static_cast<int>(p.col_index.size()));
    const CycloField& f = CycloField::get(2 * d);
    for (const auto& ent : j.at("entries")) {
        std::vector<Rat> cs;
        for (const auto& s : ent.at(2))
            cs.push_back(rat_parse(s.get<std::string>()));
        p.m.at(ent.at(0).get<int>(), ent.at(1).get<int>()) = CycloElem(f, std::move(cs));
    }
    return p;
}

} // namespace

PeriodMatrix period_matrix(const CICycle& c, int d, const DiskCache* cache) {
    if (!c.valid(d))
        throw std::invalid_argument("period_matrix: invalid cycle for degree");
    if (cache && cache->enabled()) {
        if (auto j = cache->load(cache_key(c, d)))
            return matrix_from_json(*j, d);
    }
    PeriodMatrix p;
    p.d = d;
    p.row_index = index_set(d, d - 4);
    p.col_index = index_set(d, d);
    p.m = CycloMatrix(static_cast<int>(p.row_index.size()), static_cast<int>(p.col_index.size()));
    for (int r = 0; r < p.m.rows; ++r)
        for (int cix = 0; cix < p.m.cols; ++cix) {
            ExpVec sum = p.row_index[r] + p.col_index[cix];
            if (sum[0] + sum[1] != d - 2 || sum[2] + sum[3] != d - 2)
                continue; // entry is exactly zero off the balanced set
            p.m.at(r, cix) = power_sum(c.b0, sum[0] + 1, d) * power_sum(c.b1, sum[2] + 1, d);
        }
    if (cache && cache->enabled())
        cache->store(cache_key(c, d), matrix_to_json(p, c));
    return p;
}

PeriodMatrix period_matrix(const CycleCombo& combo, int d, const DiskCache* cache) {
    PeriodMatrix out;
    out.d = d;
    out.row_index = index_set(d, d - 4);
    out.col_index = index_set(d, d);
    out.m = CycloMatrix(static_cast<int>(out.row_index.size()), static_cast<int>(out.col_index.size()));
    for (const auto& [coeff, cyc] : combo.terms) {
        PeriodMatrix part = period_matrix(cyc, d, cache);
        for (size_t i = 0; i < out.m.a.size(); ++i) {
            if (!part.m.a[i].attached())
                continue;
            out.m.a[i] += part.m.a[i] * coeff;
        }
    }
    return out;
}

} // namespace fnl
