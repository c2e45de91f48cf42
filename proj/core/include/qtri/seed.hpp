#pragma once

/**
 * @file seed.hpp
 * @brief Quantum seeds, mutation, and the bipartite quiver bookkeeping.
 *
 * Vertex indices are 0-based throughout the library. Diagnostics and the
 * command line report them 1-based.
 */

#include "qtri/int_matrix.hpp"
#include "qtri/torus.hpp"

#include <utility>
#include <vector>

namespace qtri {

/// A quantum seed (Lambda, B~). Lambda is shared so torus elements built over
/// the seed can check they live in the same torus cheaply.
struct Seed {
    LambdaHandle lambda;  ///< 2n x 2n, skew-symmetric
    IntMatrix btilde;     ///< 2n x n

    int n() const { return btilde.cols(); }
    int m() const { return btilde.rows(); }
    /// k-th column of B~ (length 2n).
    std::vector<int> b(int k) const { return btilde.column(k); }
    /// Top n x n block of B~.
    IntMatrix exchange_matrix() const;

    /// Lambda(b_k, e_j) = delta_jk for all k <= n, j <= 2n.
    bool is_compatible() const;

    friend bool operator==(const Seed& x, const Seed& y) {
        return x.btilde == y.btilde && *x.lambda == *y.lambda;
    }
};

/// B~ = [B; I], Lambda = [[0, -I], [I, -B]]. Throws DomainError unless B is skew.
Seed principal_seed(const IntMatrix& B);

/// Mutation in direction k (0-based). Throws DomainError when k is out of range.
Seed mutate(const Seed& s, int k);

struct Arrow {
    int source;  ///< in I1
    int target;  ///< in I0
    int mult;    ///< B(target, source) > 0
};

/// Q^op for a bipartite skew-symmetric B: b_ij > 0 means b_ij arrows j -> i.
class BipartiteQuiver {
public:
    /// Throws DomainError for non-skew B and NotBipartiteError naming the first
    /// vertex that both emits and receives arrows. Isolated vertices go to I0.
    static BipartiteQuiver from_matrix(const IntMatrix& B);

    int n() const { return B_.rows(); }
    const IntMatrix& matrix() const { return B_; }
    const std::vector<int>& sinks() const { return sinks_; }      ///< I0, ascending
    const std::vector<int>& sources() const { return sources_; }  ///< I1, ascending
    const std::vector<Arrow>& arrows() const { return arrows_; }
    bool is_source(int i) const { return is_source_[i]; }

    /// Number of arrows between i and j in either direction, |b_ij|.
    int edges(int i, int j) const { return B_(i, j) < 0 ? -B_(i, j) : B_(i, j); }

    /// Acyclic order at the initial seed: sources ascending, then sinks ascending.
    std::vector<int> acyclic_order() const;

private:
    IntMatrix B_;
    std::vector<int> sinks_;
    std::vector<int> sources_;
    std::vector<Arrow> arrows_;
    std::vector<bool> is_source_;
};

BipartiteQuiver bipartite_parts(const IntMatrix& B);

/// Pairs (w_i, w'_i). Usually nonnegative; cq_apply may produce negative entries.
struct WVector {
    std::vector<int> w;
    std::vector<int> wp;

    WVector() = default;
    explicit WVector(int n) : w(n, 0), wp(n, 0) {}
    WVector(std::vector<int> w_, std::vector<int> wp_);

    int n() const { return static_cast<int>(w.size()); }
    bool is_nonnegative() const;
    /// Interleaved form w_1, w'_1, w_2, w'_2, ...
    std::vector<int> interleaved() const;
    static WVector from_interleaved(const std::vector<int>& flat);

    friend bool operator==(const WVector&, const WVector&) = default;
};

/// (u_i, u'_i) = (v_i, v_i - sum_j |b_ij| v_j).
WVector cq_apply(const BipartiteQuiver& q, const std::vector<int>& v);

/// Phi_beta = w_beta - w'_beta on I1, Phi_alpha = w'_alpha - w_alpha on I0; frozen part 0.
ExpVec phi(const BipartiteQuiver& q, const WVector& w);

/// Inverse of phi on the cluster part: reads a_1..a_n only.
WVector w_of_a(const BipartiteQuiver& q, const ExpVec& a);

/// w = fw + phiw with fw_i = fw'_i = min(w_i, w'_i).
std::pair<WVector, WVector> split_w(const WVector& w);

/// Mutation at every source; sources are pairwise non-adjacent so the order is immaterial.
Seed mu_I1(const Seed& s, const BipartiteQuiver& q);

}  // namespace qtri
