#pragma once

/**
 * @file tprime.hpp
 * @brief The seed t' = mu_{I1}(t0), its monomials written in the t0 torus, and
 *        the generalized monomials E*_{w, frozen}.
 */

#include "qtri/seed.hpp"
#include "qtri/std_basis.hpp"
#include "qtri/strata.hpp"
#include "qtri/torus.hpp"

#include <vector>

namespace qtri {

/// Both seeds for a bipartite quiver. Every element is expressed in the t0 torus.
class TPrimeFrame {
public:
    TPrimeFrame(Seed t0, BipartiteQuiver q);

    const Seed& t0() const { return t0_; }
    const Seed& tprime() const { return tp_; }
    const BipartiteQuiver& quiver() const { return q_; }
    int n() const { return t0_.n(); }

    /// X(t')^u in the t0 torus. Requires u_beta >= 0 for beta in I1 (DomainError).
    TorusElem monomial(const ExpVec& u) const;
    /// X_i(t').
    TorusElem cluster_var(int i) const;
    /// X'_i(t'); for sources this is X_i(t0).
    TorusElem mutated_var(int i) const;

    /// Standard monomial at t' (sinks of t0 first, then sources), normalized by
    /// the all-[b'_k]_+ reference monomial under Lambda'.
    TorusElem std_monomial(const ExpVec& a) const;

private:
    Seed t0_;
    Seed tp_;
    BipartiteQuiver q_;
};

/// E*_{w,frozen}: X(t')^{frozen}, then for sinks in decreasing index
/// X'_i(t')^{w_i} X_i(t')^{w'_i}, then for sources in decreasing index
/// X_i(t')^{w'_i} X'_i(t')^{w_i}. Scaled so the unique monomial of least frozen
/// degree has coefficient 1.
TorusElem e_star(const TPrimeFrame& frame, const WVector& w, const std::vector<int>& frozen);
TorusElem e_star(const Seed& s, const BipartiteQuiver& q, const WVector& w, const std::vector<int>& frozen);

/// sum_v v^{d~ - d} prod_alpha [w_alpha; v_alpha] prod_beta [w'_beta + sum b v_alpha; v_beta] X^{Phi(w) + B~ v}.
TorusElem e_star_closed_form(const Seed& s, const BipartiteQuiver& q, const WVector& w);

struct ReductionTerm {
    int vpower;
    WVector w;
    std::vector<int> frozen;
};

/// One step E*_w = E*_{w1} + v^p E*_{w2, frozen + e_i} at vertex i (0-based),
/// with p = w_i + w'_i - 1. DomainError unless min(w_i, w'_i) > 0.
std::vector<ReductionTerm> e_star_reduce(const BipartiteQuiver& q, const WVector& w,
                                         const std::vector<int>& frozen, int i);
/// Reduces at the smallest reducible vertex.
std::vector<ReductionTerm> e_star_reduce(const BipartiteQuiver& q, const WVector& w,
                                         const std::vector<int>& frozen);

/// Applies e_star_reduce until every w has min(w_i, w'_i) = 0 and returns the
/// coefficients in the t'-standard basis, keyed by (w'_i - w_i)_i ++ frozen.
StdExpansion e_star_full_reduction(const BipartiteQuiver& q, const WVector& w, const std::vector<int>& frozen);

/// Index at t' of the phi-form part of w: (w'_i - w_i)_i ++ frozen.
ExpVec tprime_index(const WVector& w, const std::vector<int>& frozen);

/// X(t')^u == sum_v prod_{I1} [u_i; v_i] X^{sum_{I1} (-u_i e_i + v_i b_i) + sum_{not I1} u_i e_i}.
bool xtprime_expansion_check(const Seed& s, const BipartiteQuiver& q, const ExpVec& u);

}  // namespace qtri
