#pragma once

#include "fnl/cycles.hpp"

#include <utility>
#include <vector>

namespace fnl {

enum class PencilClass { General, Inclusion, Candidate };

const char* pencil_class_name(PencilClass c);

struct TangentOptions {
    RankMode mode = RankMode::Certified;
    bool stabilize = true; // verify the generic codim at r = 2 .. a3+3
    const DiskCache* cache = nullptr;
};

/// Codimensions attached to one pencil: a1, a2 for the two cycles, a3 for the
/// generic pencil member, a4 for the intersection of the two tangent spaces.
struct TangentReport {
    PencilSpec spec;
    int a1 = 0, a2 = 0, a3 = 0, a4 = 0;
    int h20 = 0;
    PencilClass cls = PencilClass::Candidate;
    bool stabilized = false;
    std::vector<std::pair<long, int>> per_r; // (r, codim) for the tested integer r
};

/// rank of [p_{i+j}(combo)] = codim of the tangent space in T_0 T.
int tangent_codim(const CycleCombo& combo, int d, const TangentOptions& opt = {});

/// rank of the vertical concatenation of the two period matrices.
int intersection_codim(const CycleCombo& c1, const CycleCombo& c2, int d,
                       const TangentOptions& opt = {});

/// Codim at the sentinel r = 11 plus the stabilization verdict over
/// r = 2 .. a3+3.
std::pair<int, bool> generic_codim(const CycleCombo& c1, const CycleCombo& c2, int d,
                                   const TangentOptions& opt = {});

/// Full report: General iff a3 = h20 and a3 != a4; Inclusion iff a3 = a4;
/// Candidate otherwise.
TangentReport classify_pencil(const PencilSpec& spec, const TangentOptions& opt = {});

} // namespace fnl
