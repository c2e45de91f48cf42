#include "qtri/seed.hpp"

#include "qtri/errors.hpp"

#include <algorithm>
#include <memory>
#include <string>

namespace qtri {

IntMatrix Seed::exchange_matrix() const {
    IntMatrix B(n(), n());
    for (int i = 0; i < n(); ++i)
        for (int j = 0; j < n(); ++j) B(i, j) = btilde(i, j);
    return B;
}

bool Seed::is_compatible() const {
    for (int k = 0; k < n(); ++k) {
        const auto bk = b(k);
        for (int j = 0; j < m(); ++j) {
            long s = 0;
            for (int i = 0; i < m(); ++i) s += static_cast<long>(bk[i]) * (*lambda)(i, j);
            if (s != (j == k ? 1 : 0)) return false;
        }
    }
    return true;
}

Seed principal_seed(const IntMatrix& B) {
    if (!B.is_skew_symmetric()) throw DomainError("exchange matrix must be square and skew-symmetric");
    const int n = B.rows();
    IntMatrix lam(2 * n, 2 * n);
    IntMatrix bt(2 * n, n);
    for (int i = 0; i < n; ++i) {
        lam(i, n + i) = -1;
        lam(n + i, i) = 1;
        bt(n + i, i) = 1;
        for (int j = 0; j < n; ++j) {
            lam(n + i, n + j) = -B(i, j);
            bt(i, j) = B(i, j);
        }
    }
    return Seed{std::make_shared<const IntMatrix>(std::move(lam)), std::move(bt)};
}

Seed mutate(const Seed& s, int k) {
    const int n = s.n();
    const int m = s.m();
    if (k < 0 || k >= n)
        throw DomainError("mutation index " + std::to_string(k + 1) + " out of range 1.." + std::to_string(n));

    const IntMatrix& bt = s.btilde;
    IntMatrix nb(m, n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == k || j == k)
                nb(i, j) = -bt(i, j);
            else
                nb(i, j) = bt(i, j) + pos(bt(i, k)) * pos(bt(k, j)) - pos(-bt(i, k)) * pos(-bt(k, j));
        }

    // Lambda'(e_k, e_j) = Lambda(-e_k + [b_k]_+, e_j); all other entries unchanged.
    const IntMatrix& lam = *s.lambda;
    IntMatrix nl = lam;
    std::vector<int> ek(m);
    for (int i = 0; i < m; ++i) ek[i] = pos(bt(i, k)) - (i == k ? 1 : 0);
    for (int j = 0; j < m; ++j) {
        if (j == k) continue;
        int val = 0;
        for (int i = 0; i < m; ++i) val += ek[i] * lam(i, j);
        nl(k, j) = val;
        nl(j, k) = -val;
    }
    return Seed{std::make_shared<const IntMatrix>(std::move(nl)), std::move(nb)};
}

BipartiteQuiver BipartiteQuiver::from_matrix(const IntMatrix& B) {
    if (!B.is_skew_symmetric()) throw DomainError("exchange matrix must be square and skew-symmetric");
    BipartiteQuiver q;
    q.B_ = B;
    const int n = B.rows();
    q.is_source_.assign(n, false);
    for (int i = 0; i < n; ++i) {
        bool emits = false;
        bool receives = false;
        for (int j = 0; j < n; ++j) {
            if (B(j, i) > 0) emits = true;
            if (B(i, j) > 0) receives = true;
        }
        if (emits && receives)
            throw NotBipartiteError(i + 1, "exchange matrix is not bipartite: vertex " + std::to_string(i + 1) +
                                               " is both a source and a sink");
        q.is_source_[i] = emits;
        (emits ? q.sources_ : q.sinks_).push_back(i);
    }
    for (int beta : q.sources_)
        for (int alpha : q.sinks_)
            if (B(alpha, beta) > 0) q.arrows_.push_back({beta, alpha, B(alpha, beta)});
    return q;
}

std::vector<int> BipartiteQuiver::acyclic_order() const {
    std::vector<int> order = sources_;
    order.insert(order.end(), sinks_.begin(), sinks_.end());
    return order;
}

BipartiteQuiver bipartite_parts(const IntMatrix& B) { return BipartiteQuiver::from_matrix(B); }

WVector::WVector(std::vector<int> w_, std::vector<int> wp_) : w(std::move(w_)), wp(std::move(wp_)) {
    if (w.size() != wp.size()) throw DomainError("WVector: w and w' have different lengths");
}

bool WVector::is_nonnegative() const {
    return std::all_of(w.begin(), w.end(), [](int x) { return x >= 0; }) &&
           std::all_of(wp.begin(), wp.end(), [](int x) { return x >= 0; });
}

std::vector<int> WVector::interleaved() const {
    std::vector<int> out;
    out.reserve(2 * w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        out.push_back(w[i]);
        out.push_back(wp[i]);
    }
    return out;
}

WVector WVector::from_interleaved(const std::vector<int>& flat) {
    if (flat.size() % 2 != 0) throw DomainError("w must list pairs w_i, w'_i");
    WVector r(static_cast<int>(flat.size() / 2));
    for (int i = 0; i < r.n(); ++i) {
        r.w[i] = flat[2 * i];
        r.wp[i] = flat[2 * i + 1];
    }
    return r;
}

WVector cq_apply(const BipartiteQuiver& q, const std::vector<int>& v) {
    const int n = q.n();
    if (static_cast<int>(v.size()) != n) throw DomainError("cq_apply: v has wrong length");
    WVector r(n);
    for (int i = 0; i < n; ++i) {
        r.w[i] = v[i];
        r.wp[i] = v[i];
        for (int j = 0; j < n; ++j) r.wp[i] -= q.edges(i, j) * v[j];
    }
    return r;
}

ExpVec phi(const BipartiteQuiver& q, const WVector& w) {
    const int n = q.n();
    if (w.n() != n) throw DomainError("phi: w has wrong length");
    ExpVec e(2 * n, 0);
    for (int i = 0; i < n; ++i) e[i] = q.is_source(i) ? w.w[i] - w.wp[i] : w.wp[i] - w.w[i];
    return e;
}

WVector w_of_a(const BipartiteQuiver& q, const ExpVec& a) {
    const int n = q.n();
    if (static_cast<int>(a.size()) < n) throw DomainError("w_of_a: exponent too short");
    WVector r(n);
    for (int i = 0; i < n; ++i) {
        if (q.is_source(i)) {
            r.w[i] = pos(a[i]);
            r.wp[i] = pos(-a[i]);
        } else {
            r.w[i] = pos(-a[i]);
            r.wp[i] = pos(a[i]);
        }
    }
    return r;
}

std::pair<WVector, WVector> split_w(const WVector& w) {
    WVector f(w.n());
    WVector p(w.n());
    for (int i = 0; i < w.n(); ++i) {
        const int c = std::min(w.w[i], w.wp[i]);
        f.w[i] = f.wp[i] = c;
        p.w[i] = w.w[i] - c;
        p.wp[i] = w.wp[i] - c;
    }
    return {f, p};
}

Seed mu_I1(const Seed& s, const BipartiteQuiver& q) {
    Seed t = s;
    for (int beta : q.sources()) t = mutate(t, beta);
    return t;
}

}  // namespace qtri
