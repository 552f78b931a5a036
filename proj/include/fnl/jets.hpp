#pragma once

#include "fnl/linalg.hpp"
#include "fnl/series.hpp"

#include <vector>

namespace fnl {

/// The ideal of truncated period series cutting out an infinitesimal locus:
/// one generator per holomorphic-form exponent, all constant-free, over a
/// common deformation variable list.
struct JetIdeal {
    VarList vars;
    int order = 0;
    std::vector<TruncatedSeries> generators;
};

/// Rank of the matrix of linear coefficients.
int linear_codim(const JetIdeal& J);

struct JetAnalysis {
    int linear_codim = 0;
    /// Least degree <= order at which some residual is nonzero after the
    /// implicit-function elimination; 0 when every residual vanishes.
    int first_failure = 0;
    std::vector<int> pivot_generators;
    std::vector<int> pivot_vars;
};

/// Runs the elimination once through J.order: row-reduces the linear parts to
/// pick pivot generators and variables, solves the pivot variables as series
/// in the free ones degree by degree, back-substitutes (verifying the solved
/// system vanishes), and substitutes into the remaining generators.
JetAnalysis analyze_jets(const JetIdeal& J);

/// True iff the truncation at N is the N-jet of a smooth germ.
/// Throws when N exceeds J.order.
bool n_smooth(const JetIdeal& J, int N);

} // namespace fnl
