#pragma once

#include "fnl/cycles.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

namespace fnl {

/// Shared ordered list of deformation monomials (a subset of I_d).
using VarList = std::shared_ptr<const std::vector<ExpVec>>;

VarList make_vars(std::vector<ExpVec> vars);

/// Exponent vector over a VarList; one entry per variable.
using MultiIdx = std::vector<std::uint8_t>;

int multi_degree(const MultiIdx& a);

/// Sparse multivariate power series truncated at total degree `order`.
/// Zero coefficients are never stored; the term map is ordered, so iteration
/// and serialization are deterministic.
struct TruncatedSeries {
    VarList vars;
    int order = 0;
    std::map<MultiIdx, CycloElem> terms;

    TruncatedSeries() = default;
    TruncatedSeries(VarList v, int n) : vars(std::move(v)), order(n) {}

    int nvars() const { return vars ? static_cast<int>(vars->size()) : 0; }

    static TruncatedSeries constant(VarList v, int n, CycloElem c);
    static TruncatedSeries variable(VarList v, int n, int index, const CycloField& f);

    void add_term(const MultiIdx& a, const CycloElem& c);
    CycloElem coeff(const MultiIdx& a) const;
    CycloElem constant_term() const;
    std::vector<CycloElem> linear_coeffs() const;

    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator-=(const TruncatedSeries& o);
    void scale(const CycloElem& c);
    void scale(const Rat& c);

    /// Least total degree with a nonzero coefficient, or -1 if none.
    int min_nonzero_degree() const;
    /// The homogeneous part of the given total degree.
    TruncatedSeries homogeneous_part(int deg) const;
    TruncatedSeries truncated(int n) const;

    bool same_vars(const TruncatedSeries& o) const;
};

TruncatedSeries mul_truncated(const TruncatedSeries& a, const TruncatedSeries& b, int n);
TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

/// Composition: replaces variable i of s by images[i] (all over a common
/// target VarList), truncating at n. Every image must have zero constant
/// term.
TruncatedSeries substitute(const TruncatedSeries& s, const std::vector<TruncatedSeries>& images,
                           int n);

/// Reduction window for the zeta exponents of the Taylor coefficient
/// formula. Reduced maps an exponent into [0, d-1] before raising the line's
/// root to it; Signed keeps the full exponent (the two differ per term by
/// the sign (-1)^(exponent div d)).
enum class ZetaWindow { Reduced, Signed };

/// The support condition: both halves of gamma+1 must have mod-d residues
/// summing to exactly d.
bool period_constraint_holds(const ExpVec& gamma, int d);

/// Coefficient contributed by total exponent gamma = beta + a* for the line
/// with root exponents (u, v), excluding the 1/a! factor.
CycloElem taylor_gamma_factor(int d, int u, int v, const ExpVec& gamma, ZetaWindow window);

/// Taylor expansion through total degree n of the period of the holomorphic
/// (k=1) or higher (k>=2) residue form x^beta over the monodromy of the line
/// x0 = zeta^u x1, x2 = zeta^v x3. Requires deg(beta) = d*k - 4.
TruncatedSeries taylor_period(int d, int u, int v, const ExpVec& beta, int k, VarList vars, int n,
                              ZetaWindow window = ZetaWindow::Reduced);

/// Linear combination over all lines of the combo's cycles (each cycle is
/// the sum of the |b0| x |b1| lines cut out by its two factors).
TruncatedSeries combo_taylor(int d, const CycleCombo& combo, const ExpVec& beta, int k,
                             VarList vars, int n, ZetaWindow window = ZetaWindow::Reduced);

Json series_to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const Json& j);

} // namespace fnl
