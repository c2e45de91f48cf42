#include "qtri/tribasis.hpp"

#include "qtri/errors.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace qtri {

std::vector<DimVec> TriBasisElem::support() const {
    std::vector<DimVec> s;
    s.reserve(ev_table.size());
    for (const auto& [v, e] : ev_table) s.push_back(v);
    return s;
}

ExpVec g_vector_of(const BipartiteQuiver& q, const ExpVec& a_std) {
    if (static_cast<int>(a_std.size()) != 2 * q.n()) throw DomainError("g_vector_of: index has wrong length");
    ExpVec g = a_std;
    for (int beta : q.sources())
        for (int alpha : q.sinks()) g[beta] += pos(-a_std[alpha]) * q.matrix()(alpha, beta);
    return g;
}

ExpVec std_index_of(const BipartiteQuiver& q, const ExpVec& g) {
    if (static_cast<int>(g.size()) != 2 * q.n()) throw DomainError("std_index_of: index has wrong length");
    ExpVec a = g;
    for (int beta : q.sources())
        for (int alpha : q.sinks()) a[beta] -= pos(-g[alpha]) * q.matrix()(alpha, beta);
    return a;
}

namespace {

void accumulate(StdExpansion& into, const ExpVec& a, const LaurentPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = into.try_emplace(a, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) into.erase(it);
    }
}

const ExpVec& pick(const StdExpansion& d, int n, TieBreak tie) {
    const ExpVec* best = nullptr;
    int best_r = -1;
    for (const auto& [a, c] : d) {
        const int r = r_grade(a, n);
        const bool better = r > best_r || (r == best_r && (tie == TieBreak::Lex ? *best < a : a < *best));
        if (better) {
            best = &a;
            best_r = r;
        }
    }
    return *best;
}

void fill_ev_table(TriBasisElem& c, const Seed& s) {
    const int n = s.n();
    const int m = s.m();
    for (const auto& [e, coef] : c.torus_form.terms()) {
        DimVec v(n);
        for (int k = 0; k < n; ++k) v[k] = e[n + k] - c.a[n + k];
        bool ok = std::all_of(v.begin(), v.end(), [](int x) { return x >= 0; });
        for (int i = 0; ok && i < m; ++i) {
            int x = c.a[i];
            for (int k = 0; k < n; ++k) x += s.btilde(i, k) * v[k];
            ok = x == e[i];
        }
        if (!ok) throw InvariantViolation("triangular_basis: monomial outside a + B~ N^n");
        c.ev_table.emplace(std::move(v), coef);
    }
}

}  // namespace

TriBasisElem triangular_basis_std(StdBasis& basis, const ExpVec& a_std, TieBreak tie) {
    const Seed& s = basis.seed();
    const int n = s.n();
    if (static_cast<int>(a_std.size()) != s.m()) throw DomainError("triangular_basis: index has wrong length");

    TorusElem C = basis.monomial(a_std);
    StdExpansion expansion{{a_std, LaurentPoly(1)}};
    StdExpansion D = basis.expand(bar(C) - C);
    std::map<ExpVec, StdExpansion> bar_cache;
    std::vector<ExpVec> flags;
    const int r0 = r_grade(a_std, n);
    const std::size_t cap = basis.iteration_cap();
    std::size_t steps = 0;

    while (!D.empty()) {
        if (++steps > cap) throw InvariantViolation("triangular_basis: iteration cap exceeded");
        const ExpVec ap = pick(D, n, tie);
        const LaurentPoly d = D.at(ap);
        if (ap == a_std) throw InvariantViolation("triangular_basis: defect at the leading index");
        const LaurentPoly qd = positive_part(d);  // throws unless bar(d) == -d
        if (r_grade(ap, n) >= r0) flags.push_back(ap);

        C += basis.monomial(ap).times(qd);
        accumulate(expansion, ap, qd);

        // bar(C) - C gains bar(q) bar(E_a') - q E_a'.
        auto it = bar_cache.find(ap);
        if (it == bar_cache.end()) it = bar_cache.emplace(ap, basis.expand(bar(basis.monomial(ap)))).first;
        if (it->second.count(ap) == 0 || it->second.at(ap) != LaurentPoly(1))
            throw InvariantViolation("triangular_basis: bar(E_a) is not unitriangular");
        const LaurentPoly bq = bar(qd);
        for (const auto& [b, c] : it->second) accumulate(D, b, c * bq);
        accumulate(D, ap, -qd);
    }
    if (!is_bar_invariant(C)) throw InvariantViolation("triangular_basis: result is not bar-invariant");

    TriBasisElem out{g_vector_of(basis.quiver(), a_std), a_std, std::move(C), {}, std::move(flags),
                     std::move(expansion)};
    fill_ev_table(out, s);
    return out;
}

TriBasisElem triangular_basis_std(const Seed& s, const BipartiteQuiver& q, const ExpVec& a_std, TieBreak tie) {
    StdBasis basis(s, q);
    return triangular_basis_std(basis, a_std, tie);
}

TriBasisElem triangular_basis(const Seed& s, const BipartiteQuiver& q, const ExpVec& a, TieBreak tie) {
    if (static_cast<int>(a.size()) != s.m()) throw DomainError("triangular_basis: index has wrong length");
    return triangular_basis_std(s, q, std_index_of(q, a), tie);
}

bool Theorem1Report::passed() const {
    if (!bar_invariant || !leading_term_one) return false;
    return std::all_of(entries.begin(), entries.end(), [](const Theorem1Entry& e) { return e.passed(); });
}

Theorem1Report verify_theorem1(const Seed& s, const BipartiteQuiver& q, const ExpVec& a) {
    Theorem1Report rep{triangular_basis(s, q, a), {}, false, false};
    const auto region = support_region(q, a);
    const std::set<DimVec> inside(region.begin(), region.end());
    const WVector w = w_of_a(q, a);
    rep.bar_invariant = is_bar_invariant(rep.elem.torus_form);
    const DimVec zero(q.n(), 0);
    auto it0 = rep.elem.ev_table.find(zero);
    rep.leading_term_one = it0 != rep.elem.ev_table.end() && it0->second == LaurentPoly(1);

    for (const auto& [v, e] : rep.elem.ev_table) {
        Theorem1Entry ent;
        ent.v = v;
        ent.e = e;
        ent.f = f_bound(q, a, v);
        ent.degree = deg(e);
        ent.symmetric = is_symmetric(e);
        ent.unimodal = is_unimodal(e);
        ent.degree_ok = ent.degree <= ent.f;
        ent.in_region = inside.count(v) > 0;
        if (ent.in_region) ent.f_identity = ent.f == 2 * dim_F(q, v, w) - dim_Ftilde(q, v, w);
        rep.entries.push_back(std::move(ent));
    }
    return rep;
}

}  // namespace qtri
