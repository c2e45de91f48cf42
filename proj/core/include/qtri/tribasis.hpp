#pragma once

/**
 * @file tribasis.hpp
 * @brief Triangular basis elements C_a by bar-invariant defect correction, and
 *        the support/degree verifier built on them.
 *
 * Elements are indexed by their g-vector a, so that C_a = sum_v e_v X^{a + B~ v}.
 * The standard-monomial index of the leading E-term is std_index_of(a).
 */

#include "qtri/laurent.hpp"
#include "qtri/seed.hpp"
#include "qtri/std_basis.hpp"
#include "qtri/strata.hpp"
#include "qtri/torus.hpp"

#include <map>
#include <vector>

namespace qtri {

/// Order among correction candidates of equal grade r.
enum class TieBreak { Lex, ReverseLex };

struct TriBasisElem {
    ExpVec a;          ///< g-vector index
    ExpVec std_index;  ///< index of the leading standard monomial
    TorusElem torus_form;
    std::map<DimVec, LaurentPoly> ev_table;  ///< v -> e_v, all nonzero
    /// Correction indices a' with r(a') >= r(std_index); recorded, never fatal.
    std::vector<ExpVec> equal_r_flags;
    /// E-expansion of C_a: 1 at std_index, vZ[v] elsewhere.
    StdExpansion expansion;

    std::vector<DimVec> support() const;
};

/// g = a + sum_k [-a_k]_+ [-b_k]_+ on the cluster block; frozen block unchanged.
ExpVec g_vector_of(const BipartiteQuiver& q, const ExpVec& a_std);
/// Inverse of g_vector_of.
ExpVec std_index_of(const BipartiteQuiver& q, const ExpVec& g);

/// C_a for the g-vector a at the principal seed s of q.
TriBasisElem triangular_basis(const Seed& s, const BipartiteQuiver& q, const ExpVec& a,
                              TieBreak tie = TieBreak::Lex);
/// Same element, indexed by its leading standard monomial.
TriBasisElem triangular_basis_std(const Seed& s, const BipartiteQuiver& q, const ExpVec& a_std,
                                  TieBreak tie = TieBreak::Lex);
/// Variant reusing a caller-owned basis cache.
TriBasisElem triangular_basis_std(StdBasis& basis, const ExpVec& a_std, TieBreak tie = TieBreak::Lex);

struct Theorem1Entry {
    DimVec v;
    LaurentPoly e;
    long f = 0;
    int degree = 0;
    bool symmetric = false;
    bool unimodal = false;
    bool degree_ok = false;
    bool in_region = false;
    bool f_identity = false;  ///< f(v) == 2 d_{v,w} - d~_{v,w}, w = w_of_a(a)

    long margin() const { return f - degree; }
    bool passed() const { return symmetric && unimodal && degree_ok && in_region && f_identity; }
};

struct Theorem1Report {
    TriBasisElem elem;
    std::vector<Theorem1Entry> entries;
    bool bar_invariant = false;
    bool leading_term_one = false;  ///< e_0 == 1

    bool passed() const;
};

Theorem1Report verify_theorem1(const Seed& s, const BipartiteQuiver& q, const ExpVec& a);

}  // namespace qtri
