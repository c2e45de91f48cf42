#pragma once

/**
 * @file std_basis.hpp
 * @brief Standard monomials E_a at the initial bipartite seed and expansion in them.
 */

#include "qtri/seed.hpp"
#include "qtri/torus.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace qtri {

/// Coefficients of an element in the basis {E_a}, keyed by the index a.
using StdExpansion = std::map<ExpVec, LaurentPoly>;

/// r(a) = sum_{k <= n} [-a_k]_+.
int r_grade(const ExpVec& a, int n);

/// Default reduction cap (10^6 steps), or QTRI_ITER_CAP when set to a positive integer.
std::size_t default_iteration_cap();

/// X'_k = X^{-e_k + [b_k]_+} + X^{-e_k + [-b_k]_+} (k 0-based).
TorusElem x_prime(const Seed& s, int k);

/// E_a = v^{v(a)} X^{frozen(a) + sum [a_j]_+ e_j} prod_order (X'_k)^{[-a_k]_+}.
/// v(a) makes the all-[b_k]_+ monomial bar-invariant; the all-[-b_k]_+ choice is
/// recomputed and must agree (InvariantViolation otherwise). DomainError when the
/// order is not a permutation with b_ij <= 0 for i before j.
TorusElem std_monomial(const Seed& s, const ExpVec& a, const std::vector<int>& order);

/// Standard monomials at a principal bipartite seed, with memoized E_a.
/// Not thread-safe; give each thread its own instance.
class StdBasis {
public:
    StdBasis(Seed s, BipartiteQuiver q);

    const Seed& seed() const { return seed_; }
    const BipartiteQuiver& quiver() const { return quiver_; }
    const std::vector<int>& order() const { return order_; }
    int n() const { return seed_.n(); }

    const TorusElem& monomial(const ExpVec& a);

    /// The monomial of E_a with largest frozen-coordinate sum.
    ExpVec top_exponent(const ExpVec& a) const;
    /// Inverse of top_exponent; DomainError if the round trip fails.
    ExpVec top_inverse(const ExpVec& e) const;

    /// f = sum coeff * E_a, peeling off the monomial of largest frozen sum
    /// (ties: lexicographically largest) at every step. InvariantViolation on a
    /// non-decreasing step or when the iteration cap is exceeded.
    StdExpansion expand(const TorusElem& f);
    TorusElem reexpand(const StdExpansion& x);

    void set_iteration_cap(std::size_t cap) { cap_ = cap; }
    std::size_t iteration_cap() const { return cap_; }

private:
    Seed seed_;
    BipartiteQuiver quiver_;
    std::vector<int> order_;
    std::size_t cap_;
    std::map<ExpVec, TorusElem> cache_;
};

}  // namespace qtri
