#include "qtri/std_basis.hpp"

#include "qtri/errors.hpp"

#include <cstdlib>
#include <string>

namespace qtri {

int r_grade(const ExpVec& a, int n) {
    int r = 0;
    for (int k = 0; k < n; ++k) r += pos(-a[k]);
    return r;
}

std::size_t default_iteration_cap() {
    constexpr std::size_t kDefault = 1'000'000;
    if (const char* env = std::getenv("QTRI_ITER_CAP")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return kDefault;
}

TorusElem x_prime(const Seed& s, int k) {
    if (k < 0 || k >= s.n()) throw DomainError("x_prime: index out of range");
    const auto bk = s.b(k);
    ExpVec up(s.m());
    ExpVec down(s.m());
    for (int i = 0; i < s.m(); ++i) {
        up[i] = pos(bk[i]) - (i == k ? 1 : 0);
        down[i] = pos(-bk[i]) - (i == k ? 1 : 0);
    }
    return TorusElem::monomial(s.lambda, up) + TorusElem::monomial(s.lambda, down);
}

namespace {

void check_order(const Seed& s, const std::vector<int>& order) {
    const int n = s.n();
    if (static_cast<int>(order.size()) != n) throw DomainError("vertex order must list every vertex once");
    std::vector<bool> seen(n, false);
    for (int k : order) {
        if (k < 0 || k >= n || seen[k]) throw DomainError("vertex order must list every vertex once");
        seen[k] = true;
    }
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (s.btilde(order[x], order[y]) > 0)
                throw DomainError("vertex order is not acyclic: b_" + std::to_string(order[x] + 1) + "," +
                                  std::to_string(order[y] + 1) + " > 0");
}

/// sum_{i<j} Lambda(f_i, f_j).
long ordered_twist(const IntMatrix& lam, const std::vector<ExpVec>& facs) {
    if (facs.empty()) return 0;
    const int m = lam.rows();
    ExpVec prefix(m, 0);
    long tw = 0;
    for (const auto& f : facs) {
        tw += lambda_eval(lam, prefix, f);
        for (int i = 0; i < m; ++i) prefix[i] += f[i];
    }
    return tw;
}

}  // namespace

TorusElem std_monomial(const Seed& s, const ExpVec& a, const std::vector<int>& order) {
    const int n = s.n();
    const int m = s.m();
    if (static_cast<int>(a.size()) != m) throw DomainError("std_monomial: index has wrong length");
    check_order(s, order);

    ExpVec c(m, 0);
    for (int i = n; i < m; ++i) c[i] = a[i];
    for (int j = 0; j < n; ++j) c[j] = pos(a[j]);

    std::vector<ExpVec> up_facs{c};
    std::vector<ExpVec> down_facs{c};
    TorusElem el = TorusElem::monomial(s.lambda, c);
    for (int k : order) {
        const int mk = pos(-a[k]);
        if (mk == 0) continue;
        const auto bk = s.b(k);
        ExpVec up(m);
        ExpVec down(m);
        for (int i = 0; i < m; ++i) {
            up[i] = pos(bk[i]) - (i == k ? 1 : 0);
            down[i] = pos(-bk[i]) - (i == k ? 1 : 0);
        }
        el = el * torus_pow(x_prime(s, k), mk);
        for (int t = 0; t < mk; ++t) {
            up_facs.push_back(up);
            down_facs.push_back(down);
        }
    }
    const long tw_up = ordered_twist(*s.lambda, up_facs);
    const long tw_down = ordered_twist(*s.lambda, down_facs);
    if (tw_up != tw_down)
        throw InvariantViolation("std_monomial: normalization depends on the chosen summand (" +
                                 std::to_string(tw_up) + " vs " + std::to_string(tw_down) + ")");
    return el.scaled(static_cast<int>(-tw_up));
}

StdBasis::StdBasis(Seed s, BipartiteQuiver q)
    : seed_(std::move(s)), quiver_(std::move(q)), order_(quiver_.acyclic_order()), cap_(default_iteration_cap()) {
    if (seed_.n() != quiver_.n()) throw DomainError("StdBasis: seed and quiver sizes differ");
}

const TorusElem& StdBasis::monomial(const ExpVec& a) {
    auto it = cache_.find(a);
    if (it != cache_.end()) return it->second;
    return cache_.emplace(a, std_monomial(seed_, a, order_)).first->second;
}

ExpVec StdBasis::top_exponent(const ExpVec& a) const {
    const int n = seed_.n();
    const int m = seed_.m();
    if (static_cast<int>(a.size()) != m) throw DomainError("top_exponent: index has wrong length");
    ExpVec e = a;
    for (int k = 0; k < n; ++k) {
        const int mk = pos(-a[k]);
        if (mk == 0) continue;
        // a_k already carries the -e_k part of each factor.
        for (int i = 0; i < m; ++i) e[i] += mk * pos(seed_.btilde(i, k));
    }
    return e;
}

ExpVec StdBasis::top_inverse(const ExpVec& e) const {
    const int n = seed_.n();
    const int m = seed_.m();
    if (static_cast<int>(e.size()) != m) throw DomainError("top_inverse: exponent has wrong length");
    ExpVec a = e;
    // Sources receive nothing from [b_k]_+; sinks are then corrected by the sources;
    // the frozen block last.
    for (int alpha : quiver_.sinks())
        for (int beta : quiver_.sources()) a[alpha] -= pos(-a[beta]) * pos(seed_.btilde(alpha, beta));
    for (int i = n; i < m; ++i)
        for (int k = 0; k < n; ++k) a[i] -= pos(-a[k]) * pos(seed_.btilde(i, k));
    if (top_exponent(a) != e) throw DomainError("top_inverse: exponent is not the top of a standard monomial");
    return a;
}

namespace {

struct FrozenOrder {
    int n;
    bool operator()(const ExpVec& x, const ExpVec& y) const {
        long sx = 0;
        long sy = 0;
        for (std::size_t i = static_cast<std::size_t>(n); i < x.size(); ++i) {
            sx += x[i];
            sy += y[i];
        }
        if (sx != sy) return sx < sy;
        return x < y;
    }
};

}  // namespace

StdExpansion StdBasis::expand(const TorusElem& f) {
    const int n = seed_.n();
    FrozenOrder ord{n};
    std::map<ExpVec, LaurentPoly, FrozenOrder> rem(ord);
    for (const auto& [e, c] : f.terms()) rem.emplace(e, c);

    StdExpansion out;
    std::size_t steps = 0;
    ExpVec last;
    while (!rem.empty()) {
        if (++steps > cap_)
            throw InvariantViolation("expand_in_std: iteration cap " + std::to_string(cap_) +
                                     " exceeded; element is outside the span of finite expansions");
        auto top = std::prev(rem.end());
        const ExpVec e = top->first;
        if (!last.empty() && !ord(e, last))
            throw InvariantViolation("expand_in_std: reduction made no progress");
        last = e;
        const LaurentPoly coef = top->second;
        const ExpVec a = top_inverse(e);
        const TorusElem& E = monomial(a);
        if (E.coeff_at(e) != LaurentPoly(1))
            throw InvariantViolation("expand_in_std: top coefficient of E_a is not 1");

        auto [it, inserted] = out.try_emplace(a, coef);
        if (!inserted) {
            it->second += coef;
            if (it->second.is_zero()) out.erase(it);
        }
        for (const auto& [g, c] : E.terms()) {
            LaurentPoly delta = c * coef;
            auto [rit, ins] = rem.try_emplace(g, -delta);
            if (!ins) {
                rit->second -= delta;
                if (rit->second.is_zero()) rem.erase(rit);
            }
        }
    }
    return out;
}

TorusElem StdBasis::reexpand(const StdExpansion& x) {
    TorusElem r(seed_.lambda);
    for (const auto& [a, c] : x) r += monomial(a).times(c);
    return r;
}

}  // namespace qtri
