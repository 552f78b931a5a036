#include "fnl/tangent.hpp"

namespace fnl {

const char* pencil_class_name(PencilClass c) {
    switch (c) {
    case PencilClass::General:
        return "General";
    case PencilClass::Inclusion:
        return "Inclusion";
    case PencilClass::Candidate:
        return "Candidate";
    }
    return "?";
}

namespace {

CycloMatrix combo_matrix(const CycleCombo& combo, int d, const DiskCache* cache) {
    return period_matrix(combo, d, cache).m;
}

// M(c1) + r * M(c2) for integer r, reusing the two cached cycle matrices.
CycloMatrix pencil_matrix(const CycloMatrix& m1, const CycloMatrix& m2, long r) {
    return add_scaled(m1, Rat(1), m2, Rat(static_cast<long>(r)));
}

} // namespace

int tangent_codim(const CycleCombo& combo, int d, const TangentOptions& opt) {
    if (combo.terms.empty())
        throw std::invalid_argument("tangent_codim: empty combination");
    return rank(combo_matrix(combo, d, opt.cache), opt.mode);
}

int intersection_codim(const CycleCombo& c1, const CycleCombo& c2, int d,
                       const TangentOptions& opt) {
    CycloMatrix m = vconcat(combo_matrix(c1, d, opt.cache), combo_matrix(c2, d, opt.cache));
    return rank(m, opt.mode);
}

std::pair<int, bool> generic_codim(const CycleCombo& c1, const CycleCombo& c2, int d,
                                   const TangentOptions& opt) {
    CycloMatrix m1 = combo_matrix(c1, d, opt.cache);
    CycloMatrix m2 = combo_matrix(c2, d, opt.cache);
    int a3 = rank(pencil_matrix(m1, m2, 11), opt.mode);
    bool stabilized = true;
    if (opt.stabilize) {
        // The verification sweep only compares values; the fast path is
        // enough for it even when the headline rank is certified or exact.
        RankMode sweep = opt.mode == RankMode::Exact ? RankMode::Exact : RankMode::Fast;
        for (long r = 2; r <= a3 + 3; ++r)
            if (rank(pencil_matrix(m1, m2, r), sweep) != a3) {
                stabilized = false;
                break;
            }
    }
    return {a3, stabilized};
}

TangentReport classify_pencil(const PencilSpec& spec, const TangentOptions& opt) {
    auto [c1, c2] = build_cycles(spec);
    TangentReport rep;
    rep.spec = spec;
    rep.h20 = hodge_number_h20(spec.d);

    PeriodMatrix p1 = period_matrix(c1, spec.d, opt.cache);
    PeriodMatrix p2 = period_matrix(c2, spec.d, opt.cache);
    rep.a1 = rank(p1.m, opt.mode);
    rep.a2 = rank(p2.m, opt.mode);
    rep.a4 = rank(vconcat(p1.m, p2.m), opt.mode);

    rep.a3 = rank(pencil_matrix(p1.m, p2.m, 11), opt.mode);
    rep.per_r.emplace_back(11, rep.a3);
    rep.stabilized = true;
    if (opt.stabilize) {
        RankMode sweep = opt.mode == RankMode::Exact ? RankMode::Exact : RankMode::Fast;
        for (long r = 2; r <= rep.a3 + 3; ++r) {
            int cr = rank(pencil_matrix(p1.m, p2.m, r), sweep);
            rep.per_r.emplace_back(r, cr);
            if (cr != rep.a3)
                rep.stabilized = false;
        }
    }

    if (rep.a3 == rep.h20 && rep.a3 != rep.a4)
        rep.cls = PencilClass::General;
    else if (rep.a3 == rep.a4)
        rep.cls = PencilClass::Inclusion;
    else
        rep.cls = PencilClass::Candidate;
    return rep;
}

} // namespace fnl
