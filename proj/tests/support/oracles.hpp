#pragma once

// Test-only reference implementations. Each one recomputes a library quantity
// by a different route (closed product formula, brute force, matrix form).

#include "qtri/qtri.hpp"

#include <map>
#include <ostream>
#include <random>
#include <vector>

namespace qtri::oracle {

/// Gaussian binomial from prod (1 - q^{n-k+i}) / (1 - q^i), q = v^2, then
/// centred by v^{-k(n-k)}. Uses exact polynomial long division.
LaurentPoly qbinom_quotient(int n, int k);

/// Number of partitions of j fitting in a k x (n-k) box, j = 0..k(n-k).
std::vector<long> grassmann_betti(int n, int k);

/// Sum over term pairs of c_e c_f v^{e^T L f} X^{e+f}, using plain maps.
std::map<ExpVec, LaurentPoly> torus_product(const IntMatrix& lambda, const std::map<ExpVec, LaurentPoly>& x,
                                            const std::map<ExpVec, LaurentPoly>& y);

/// Mutation in matrix form: L' = E^T L E and B' = E B F with the sign + choice.
Seed mutate_matrix_form(const Seed& s, int k);

/// Componentwise maximum of {v' <= v} intersected with the l-dominant set,
/// found by enumeration. Returns false in `unique` when no single maximum exists.
DimVec brute_vbar(const BipartiteQuiver& q, const DimVec& v, const WVector& w, bool& unique);

/// w - C_q v >= 0 and v >= 0, written out from the arrow list.
bool l_dominant(const IntMatrix& B, const DimVec& v, const WVector& w);

/// Dimension of the iterated Grassmannian tower: sinks pick v_a-planes in C^{w_a},
/// then each source picks a v_b-plane in C^{w'_b + sum_a B(a,b) v_a}.
long tower_dim(const IntMatrix& B, const DimVec& v, const WVector& w);
/// tower_dim plus the fibre rank sum_a v_a w'_a + sum_b v_b w_b.
long tower_dim_bundle(const IntMatrix& B, const DimVec& v, const WVector& w);
bool tower_nonempty(const IntMatrix& B, const DimVec& v, const WVector& w);

/// f(v) = -sum (a_i + v_i) v_i + sum_{B(i,j) > 0} B(i,j) v_i v_j.
long f_value(const IntMatrix& B, const ExpVec& a, const DimVec& v);

bool symmetric(const LaurentPoly& p);
/// Coefficient sequence of the nonzero-parity lattice rises to the centre then falls.
bool unimodal(const LaurentPoly& p);

/// Random skew-symmetric bipartite matrix with entries bounded by bmax.
IntMatrix random_bipartite(std::mt19937_64& rng, int n, int bmax);
std::vector<int> random_vector(std::mt19937_64& rng, int len, int lo, int hi);

}  // namespace qtri::oracle

namespace qtri {

// Readable gtest diagnostics.
inline void PrintTo(const LaurentPoly& p, std::ostream* os) { *os << p.to_string(); }
inline void PrintTo(const WVector& w, std::ostream* os) {
    for (int x : w.interleaved()) *os << x << ' ';
}
inline void PrintTo(const TorusElem& f, std::ostream* os) {
    for (const auto& [e, c] : f.terms()) {
        *os << "(" << c.to_string() << ")X^";
        for (int x : e) *os << x << ',';
        *os << ' ';
    }
}

}  // namespace qtri
