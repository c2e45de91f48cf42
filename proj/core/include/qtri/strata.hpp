#pragma once

/**
 * @file strata.hpp
 * @brief Dimension-vector combinatorics of the graded quiver varieties F_{v,w}.
 *
 * Everything here is a closed formula or a finite enumeration; no variety is
 * ever constructed. v is a nonnegative integer vector of length n.
 */

#include "qtri/laurent.hpp"
#include "qtri/seed.hpp"
#include "qtri/torus.hpp"

#include <string>
#include <vector>

namespace qtri {

using DimVec = std::vector<int>;

/// 0 <= v_alpha <= w_alpha on I0, 0 <= v_beta <= w'_beta + sum_alpha b_{alpha beta} v_alpha on I1.
bool is_nonempty_F(const BipartiteQuiver& q, const DimVec& v, const WVector& w);

/// w - C_q v >= 0 componentwise.
bool is_l_dominant(const BipartiteQuiver& q, const DimVec& v, const WVector& w);

/// All v with is_nonempty_F, sorted lexicographically.
std::vector<DimVec> nonempty_set(const BipartiteQuiver& q, const WVector& w);

/// Dom(w), sorted lexicographically.
std::vector<DimVec> dom_set(const BipartiteQuiver& q, const WVector& w);

/// v-bar_i = min(v_i, w_i, w'_i + sum_j |b_ij| min(v_j, w_j)).
DimVec vbar(const BipartiteQuiver& q, const DimVec& v, const WVector& w);

/// d_{v,w}. Throws DomainError when F_{v,w} is empty.
long dim_F(const BipartiteQuiver& q, const DimVec& v, const WVector& w);
/// d~_{v,w} = d_{v,w} + sum_alpha v_alpha w'_alpha + sum_beta v_beta w_beta.
long dim_Ftilde(const BipartiteQuiver& q, const DimVec& v, const WVector& w);

/// v^{d} * prod_beta [w'_beta + sum b v_alpha ; v_beta] * prod_alpha [w_alpha ; v_alpha].
LaurentPoly poincare_F(const BipartiteQuiver& q, const DimVec& v, const WVector& w);

/// chi(M(w)) = sum_v v^{d - d~} (q-binomial product) X^{Phi(w) + B~ v}.
TorusElem chi_M(const BipartiteQuiver& q, const Seed& s, const WVector& w);

/// f(v) = -sum_i (a_i + v_i) v_i + sum over arrows of v_source v_target.
long f_bound(const BipartiteQuiver& q, const ExpVec& a, const DimVec& v);

/// { v >= 0 : F_{v, w_of_a(a)} nonempty }, sorted lexicographically.
std::vector<DimVec> support_region(const BipartiteQuiver& q, const ExpVec& a);

/// Tab-separated rows "v_1 ... v_n f(v) in_support" over the bounding box of
/// the support region enlarged by `margin` cells in every direction (clipped at 0).
std::string support_tsv(const BipartiteQuiver& q, const ExpVec& a, int margin = 1);

}  // namespace qtri
