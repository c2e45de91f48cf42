#include "qtri/tprime.hpp"

#include "qtri/errors.hpp"

#include <algorithm>
#include <string>

namespace qtri {

namespace {

ExpVec unit(int m, int i) {
    ExpVec e(m, 0);
    e[i] = 1;
    return e;
}

/// -e_k + [sign * b_k]_+ for column k of B~.
ExpVec exchange_exponent(const Seed& s, int k, int sign) {
    ExpVec e(s.m());
    for (int i = 0; i < s.m(); ++i) e[i] = pos(sign * s.btilde(i, k)) - (i == k ? 1 : 0);
    return e;
}

long ordered_twist(const IntMatrix& lam, const std::vector<ExpVec>& facs) {
    const int m = lam.rows();
    ExpVec prefix(m, 0);
    long tw = 0;
    for (const auto& f : facs) {
        tw += lambda_eval(lam, prefix, f);
        for (int i = 0; i < m; ++i) prefix[i] += f[i];
    }
    return tw;
}

long frozen_degree(const ExpVec& e, int n) {
    long s = 0;
    for (std::size_t i = static_cast<std::size_t>(n); i < e.size(); ++i) s += e[i];
    return s;
}

}  // namespace

TPrimeFrame::TPrimeFrame(Seed t0, BipartiteQuiver q) : t0_(std::move(t0)), q_(std::move(q)) {
    if (t0_.n() != q_.n()) throw DomainError("TPrimeFrame: seed and quiver sizes differ");
    tp_ = mu_I1(t0_, q_);
}

TorusElem TPrimeFrame::monomial(const ExpVec& u) const {
    const int m = t0_.m();
    if (static_cast<int>(u.size()) != m) throw DomainError("t' monomial: exponent has wrong length");
    for (int beta : q_.sources())
        if (u[beta] < 0)
            throw DomainError("t' monomial: exponent at source " + std::to_string(beta + 1) + " is negative");

    const IntMatrix& lp = *tp_.lambda;
    long tw = 0;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) tw += static_cast<long>(lp(i, j)) * u[i] * u[j];

    // X_beta(t') = X'_beta(t0) for sources; every other X_i(t') is X_i(t0).
    TorusElem el = TorusElem::one(t0_.lambda);
    for (int i = 0; i < m; ++i) {
        if (u[i] == 0) continue;
        if (i < q_.n() && q_.is_source(i)) {
            el = el * torus_pow(x_prime(t0_, i), u[i]);
        } else {
            ExpVec e(m, 0);
            e[i] = u[i];
            el = el * TorusElem::monomial(t0_.lambda, e);
        }
    }
    return el.scaled(static_cast<int>(-tw));
}

TorusElem TPrimeFrame::cluster_var(int i) const { return monomial(unit(t0_.m(), i)); }

TorusElem TPrimeFrame::mutated_var(int i) const {
    if (i < 0 || i >= n()) throw DomainError("mutated_var: index out of range");
    if (q_.is_source(i)) return TorusElem::monomial(t0_.lambda, unit(t0_.m(), i));
    return monomial(exchange_exponent(tp_, i, 1)) + monomial(exchange_exponent(tp_, i, -1));
}

TorusElem TPrimeFrame::std_monomial(const ExpVec& a) const {
    const int n = this->n();
    const int m = t0_.m();
    if (static_cast<int>(a.size()) != m) throw DomainError("t' std_monomial: index has wrong length");
    ExpVec c(m, 0);
    for (int i = n; i < m; ++i) c[i] = a[i];
    for (int j = 0; j < n; ++j) c[j] = pos(a[j]);

    std::vector<int> order = q_.sinks();
    order.insert(order.end(), q_.sources().begin(), q_.sources().end());

    std::vector<ExpVec> facs{c};
    TorusElem el = monomial(c);
    for (int k : order) {
        const int mk = pos(-a[k]);
        if (mk == 0) continue;
        el = el * torus_pow(mutated_var(k), mk);
        const ExpVec lead = exchange_exponent(tp_, k, 1);
        for (int t = 0; t < mk; ++t) facs.push_back(lead);
    }
    return el.scaled(static_cast<int>(-ordered_twist(*tp_.lambda, facs)));
}

TorusElem e_star(const TPrimeFrame& frame, const WVector& w, const std::vector<int>& frozen) {
    const BipartiteQuiver& q = frame.quiver();
    const int n = q.n();
    if (w.n() != n || static_cast<int>(frozen.size()) != n) throw DomainError("e_star: size mismatch");
    if (!w.is_nonnegative()) throw DomainError("e_star: w must be nonnegative");

    ExpVec fr(2 * n, 0);
    std::copy(frozen.begin(), frozen.end(), fr.begin() + n);
    TorusElem el = frame.monomial(fr);

    std::vector<int> sinks = q.sinks();
    std::vector<int> sources = q.sources();
    std::reverse(sinks.begin(), sinks.end());
    std::reverse(sources.begin(), sources.end());
    for (int i : sinks) {
        if (w.w[i]) el = el * torus_pow(frame.mutated_var(i), w.w[i]);
        if (w.wp[i]) el = el * torus_pow(frame.cluster_var(i), w.wp[i]);
    }
    for (int i : sources) {
        if (w.wp[i]) el = el * torus_pow(frame.cluster_var(i), w.wp[i]);
        if (w.w[i]) el = el * torus_pow(frame.mutated_var(i), w.w[i]);
    }

    const ExpVec* low = nullptr;
    bool unique = true;
    for (const auto& [e, c] : el.terms()) {
        if (!low || frozen_degree(e, n) < frozen_degree(*low, n)) {
            low = &e;
            unique = true;
        } else if (frozen_degree(e, n) == frozen_degree(*low, n)) {
            unique = false;
        }
    }
    if (!low || !unique) throw InvariantViolation("e_star: no unique monomial of least frozen degree");
    const LaurentPoly& lc = el.terms().at(*low);
    if (lc.num_terms() != 1 || lc.coeff(lc.min_degree()) != 1)
        throw InvariantViolation("e_star: least-frozen coefficient is not a power of v");
    return el.scaled(-lc.min_degree());
}

TorusElem e_star(const Seed& s, const BipartiteQuiver& q, const WVector& w, const std::vector<int>& frozen) {
    return e_star(TPrimeFrame(s, q), w, frozen);
}

TorusElem e_star_closed_form(const Seed& s, const BipartiteQuiver& q, const WVector& w) {
    if (!w.is_nonnegative()) throw DomainError("e_star_closed_form: w must be nonnegative");
    const ExpVec base = phi(q, w);
    const int n = q.n();
    TorusElem r(s.lambda);
    for (const DimVec& v : nonempty_set(q, w)) {
        LaurentPoly c(1);
        for (int alpha : q.sinks()) c *= qbinom(w.w[alpha], v[alpha]);
        for (int beta : q.sources()) {
            int top = w.wp[beta];
            for (int alpha : q.sinks()) top += q.matrix()(alpha, beta) * v[alpha];
            c *= qbinom(top, v[beta]);
        }
        const long shift = dim_Ftilde(q, v, w) - dim_F(q, v, w);
        ExpVec e = base;
        for (int i = 0; i < s.m(); ++i)
            for (int k = 0; k < n; ++k) e[i] += s.btilde(i, k) * v[k];
        r.add_term(e, c.shifted(static_cast<int>(shift)));
    }
    return r;
}

std::vector<ReductionTerm> e_star_reduce(const BipartiteQuiver& q, const WVector& w,
                                         const std::vector<int>& frozen, int i) {
    const int n = q.n();
    if (w.n() != n || static_cast<int>(frozen.size()) != n) throw DomainError("e_star_reduce: size mismatch");
    if (i < 0 || i >= n) throw DomainError("e_star_reduce: vertex out of range");
    if (std::min(w.w[i], w.wp[i]) <= 0)
        throw DomainError("e_star_reduce: min(w_i, w'_i) must be positive at vertex " + std::to_string(i + 1));

    WVector w1 = w;
    --w1.w[i];
    --w1.wp[i];
    WVector w2 = w1;
    if (q.is_source(i)) {
        for (int alpha : q.sinks()) w2.wp[alpha] += q.matrix()(alpha, i);
    } else {
        for (int beta : q.sources()) w2.wp[beta] += q.matrix()(i, beta);
    }
    std::vector<int> f2 = frozen;
    ++f2[i];
    const int p = w.w[i] + w.wp[i] - 1;
    return {{0, std::move(w1), frozen}, {p, std::move(w2), std::move(f2)}};
}

std::vector<ReductionTerm> e_star_reduce(const BipartiteQuiver& q, const WVector& w,
                                         const std::vector<int>& frozen) {
    for (int i = 0; i < w.n(); ++i)
        if (std::min(w.w[i], w.wp[i]) > 0) return e_star_reduce(q, w, frozen, i);
    throw DomainError("e_star_reduce: w has no reducible vertex");
}

ExpVec tprime_index(const WVector& w, const std::vector<int>& frozen) {
    ExpVec a(w.n() * 2, 0);
    for (int i = 0; i < w.n(); ++i) {
        a[i] = w.wp[i] - w.w[i];
        a[w.n() + i] = frozen[i];
    }
    return a;
}

namespace {

void reduce_into(const BipartiteQuiver& q, const WVector& w, const std::vector<int>& frozen, int power,
                 StdExpansion& out) {
    for (int i = 0; i < w.n(); ++i) {
        if (std::min(w.w[i], w.wp[i]) > 0) {
            for (const auto& t : e_star_reduce(q, w, frozen, i)) reduce_into(q, t.w, t.frozen, power + t.vpower, out);
            return;
        }
    }
    const ExpVec a = tprime_index(w, frozen);
    auto [it, inserted] = out.try_emplace(a, LaurentPoly::monomial(power));
    if (!inserted) {
        it->second += LaurentPoly::monomial(power);
        if (it->second.is_zero()) out.erase(it);
    }
}

}  // namespace

StdExpansion e_star_full_reduction(const BipartiteQuiver& q, const WVector& w, const std::vector<int>& frozen) {
    if (w.n() != q.n() || static_cast<int>(frozen.size()) != q.n())
        throw DomainError("e_star_full_reduction: size mismatch");
    StdExpansion out;
    reduce_into(q, w, frozen, 0, out);
    return out;
}

bool xtprime_expansion_check(const Seed& s, const BipartiteQuiver& q, const ExpVec& u) {
    const TPrimeFrame frame(s, q);
    const TorusElem lhs = frame.monomial(u);  // validates u

    const int m = s.m();
    const auto& src = q.sources();
    TorusElem rhs(s.lambda);
    std::vector<int> v(src.size(), 0);
    while (true) {
        LaurentPoly c(1);
        ExpVec e(m, 0);
        for (int i = 0; i < m; ++i)
            if (!(i < q.n() && q.is_source(i))) e[i] += u[i];
        for (std::size_t t = 0; t < src.size(); ++t) {
            const int i = src[t];
            c *= qbinom(u[i], v[t]);
            e[i] -= u[i];
            for (int r = 0; r < m; ++r) e[r] += v[t] * s.btilde(r, i);
        }
        rhs.add_term(e, c);
        std::size_t t = 0;
        while (t < src.size() && v[t] == u[src[t]]) v[t++] = 0;
        if (t == src.size()) break;
        ++v[t];
    }
    return lhs == rhs;
}

}  // namespace qtri
