#include "qtri/strata.hpp"

#include "qtri/errors.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace qtri {

namespace {

void check_sizes(const BipartiteQuiver& q, const DimVec& v, const WVector& w) {
    if (static_cast<int>(v.size()) != q.n() || w.n() != q.n())
        throw DomainError("dimension vectors do not match the quiver");
}

/// Upper bound for v_beta on a source, given the sink coordinates of v.
int source_bound(const BipartiteQuiver& q, const DimVec& v, const WVector& w, int beta) {
    int b = w.wp[beta];
    for (int alpha : q.sinks()) b += q.matrix()(alpha, beta) * v[alpha];
    return b;
}

void require_nonempty(const BipartiteQuiver& q, const DimVec& v, const WVector& w) {
    if (!is_nonempty_F(q, v, w)) throw DomainError("F_{v,w} is empty for this (v, w)");
}

}  // namespace

bool is_nonempty_F(const BipartiteQuiver& q, const DimVec& v, const WVector& w) {
    check_sizes(q, v, w);
    for (int alpha : q.sinks())
        if (v[alpha] < 0 || v[alpha] > w.w[alpha]) return false;
    for (int beta : q.sources())
        if (v[beta] < 0 || v[beta] > source_bound(q, v, w, beta)) return false;
    return true;
}

bool is_l_dominant(const BipartiteQuiver& q, const DimVec& v, const WVector& w) {
    check_sizes(q, v, w);
    const WVector c = cq_apply(q, v);
    for (int i = 0; i < q.n(); ++i) {
        if (v[i] < 0) return false;
        if (w.w[i] < c.w[i] || w.wp[i] < c.wp[i]) return false;
    }
    return true;
}

std::vector<DimVec> nonempty_set(const BipartiteQuiver& q, const WVector& w) {
    if (w.n() != q.n()) throw DomainError("w does not match the quiver");
    std::vector<DimVec> out;
    DimVec v(q.n(), 0);
    const auto& sinks = q.sinks();
    const auto& sources = q.sources();
    // Sinks are bounded by w alone; each source bound then depends on the sinks.
    std::function<void(std::size_t)> rec_src = [&](std::size_t idx) {
        if (idx == sources.size()) {
            out.push_back(v);
            return;
        }
        const int beta = sources[idx];
        const int hi = source_bound(q, v, w, beta);
        for (int x = 0; x <= hi; ++x) {
            v[beta] = x;
            rec_src(idx + 1);
        }
        v[beta] = 0;
    };
    std::function<void(std::size_t)> rec_sink = [&](std::size_t idx) {
        if (idx == sinks.size()) {
            rec_src(0);
            return;
        }
        const int alpha = sinks[idx];
        for (int x = 0; x <= w.w[alpha]; ++x) {
            v[alpha] = x;
            rec_sink(idx + 1);
        }
        v[alpha] = 0;
    };
    rec_sink(0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<DimVec> dom_set(const BipartiteQuiver& q, const WVector& w) {
    std::vector<DimVec> out;
    for (auto& v : nonempty_set(q, w))
        if (is_l_dominant(q, v, w)) out.push_back(std::move(v));
    return out;
}

DimVec vbar(const BipartiteQuiver& q, const DimVec& v, const WVector& w) {
    check_sizes(q, v, w);
    const int n = q.n();
    DimVec r(n);
    for (int i = 0; i < n; ++i) {
        int nb = w.wp[i];
        for (int j = 0; j < n; ++j) nb += q.edges(i, j) * std::min(v[j], w.w[j]);
        r[i] = std::min({v[i], w.w[i], nb});
    }
    return r;
}

long dim_F(const BipartiteQuiver& q, const DimVec& v, const WVector& w) {
    require_nonempty(q, v, w);
    long d = 0;
    for (int alpha : q.sinks()) d += static_cast<long>(w.w[alpha]) * v[alpha];
    for (int beta : q.sources()) d += static_cast<long>(w.wp[beta]) * v[beta];
    for (int i = 0; i < q.n(); ++i) d -= static_cast<long>(v[i]) * v[i];
    for (const Arrow& h : q.arrows()) d += static_cast<long>(h.mult) * v[h.source] * v[h.target];
    return d;
}

long dim_Ftilde(const BipartiteQuiver& q, const DimVec& v, const WVector& w) {
    long d = dim_F(q, v, w);
    for (int alpha : q.sinks()) d += static_cast<long>(v[alpha]) * w.wp[alpha];
    for (int beta : q.sources()) d += static_cast<long>(v[beta]) * w.w[beta];
    return d;
}

namespace {

LaurentPoly binomial_product(const BipartiteQuiver& q, const DimVec& v, const WVector& w) {
    LaurentPoly c(1);
    for (int alpha : q.sinks()) c *= qbinom(w.w[alpha], v[alpha]);
    for (int beta : q.sources()) c *= qbinom(source_bound(q, v, w, beta), v[beta]);
    return c;
}

}  // namespace

LaurentPoly poincare_F(const BipartiteQuiver& q, const DimVec& v, const WVector& w) {
    const long d = dim_F(q, v, w);
    return binomial_product(q, v, w).shifted(static_cast<int>(d));
}

TorusElem chi_M(const BipartiteQuiver& q, const Seed& s, const WVector& w) {
    if (s.n() != q.n()) throw DomainError("chi_M: seed and quiver sizes differ");
    if (!w.is_nonnegative()) throw DomainError("chi_M: w must be nonnegative");
    const ExpVec base = phi(q, w);
    const int n = q.n();
    TorusElem r(s.lambda);
    for (const DimVec& v : nonempty_set(q, w)) {
        const long shift = dim_F(q, v, w) - dim_Ftilde(q, v, w);
        ExpVec e = base;
        for (int i = 0; i < s.m(); ++i)
            for (int k = 0; k < n; ++k) e[i] += s.btilde(i, k) * v[k];
        r.add_term(e, binomial_product(q, v, w).shifted(static_cast<int>(shift)));
    }
    return r;
}

long f_bound(const BipartiteQuiver& q, const ExpVec& a, const DimVec& v) {
    const int n = q.n();
    if (static_cast<int>(a.size()) < n || static_cast<int>(v.size()) != n)
        throw DomainError("f_bound: size mismatch");
    long f = 0;
    for (int i = 0; i < n; ++i) f -= static_cast<long>(a[i] + v[i]) * v[i];
    for (const Arrow& h : q.arrows()) f += static_cast<long>(h.mult) * v[h.source] * v[h.target];
    return f;
}

std::vector<DimVec> support_region(const BipartiteQuiver& q, const ExpVec& a) {
    return nonempty_set(q, w_of_a(q, a));
}

std::string support_tsv(const BipartiteQuiver& q, const ExpVec& a, int margin) {
    const int n = q.n();
    const auto region = support_region(q, a);
    const std::set<DimVec> inside(region.begin(), region.end());
    DimVec hi(n, 0);
    for (const auto& v : region)
        for (int i = 0; i < n; ++i) hi[i] = std::max(hi[i], v[i]);
    for (int& h : hi) h += margin;

    std::ostringstream os;
    for (int i = 0; i < n; ++i) os << 'v' << (i + 1) << '\t';
    os << "f\tin_support\n";
    DimVec v(n, 0);
    while (true) {
        for (int i = 0; i < n; ++i) os << v[i] << '\t';
        os << f_bound(q, a, v) << '\t' << (inside.count(v) ? 1 : 0) << '\n';
        int i = n - 1;
        while (i >= 0 && v[i] == hi[i]) v[i--] = 0;
        if (i < 0) break;
        ++v[i];
    }
    return os.str();
}

}  // namespace qtri
