#include "qtri/torus.hpp"

#include "qtri/errors.hpp"

namespace qtri {

long lambda_eval(const IntMatrix& lambda, const ExpVec& e, const ExpVec& f) {
    return bilinear(lambda, e, f);
}

TorusElem::TorusElem(LambdaHandle lambda) : lambda_(std::move(lambda)) {
    if (!lambda_) throw DomainError("TorusElem: null skew form");
}

TorusElem TorusElem::one(const LambdaHandle& lambda) {
    return monomial(lambda, ExpVec(lambda->rows(), 0));
}

TorusElem TorusElem::monomial(const LambdaHandle& lambda, ExpVec e, const LaurentPoly& c) {
    TorusElem t(lambda);
    if (static_cast<int>(e.size()) != t.dim()) throw DomainError("TorusElem: exponent length mismatch");
    if (!c.is_zero()) t.terms_.emplace(std::move(e), c);
    return t;
}

LaurentPoly TorusElem::coeff_at(const ExpVec& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? LaurentPoly() : it->second;
}

std::vector<ExpVec> TorusElem::support() const {
    std::vector<ExpVec> s;
    s.reserve(terms_.size());
    for (const auto& [e, c] : terms_) s.push_back(e);
    return s;
}

void TorusElem::add_term(const ExpVec& e, const LaurentPoly& c) {
    if (c.is_zero()) return;
    if (static_cast<int>(e.size()) != dim()) throw DomainError("TorusElem: exponent length mismatch");
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TorusElem TorusElem::scaled(int k) const {
    TorusElem r(lambda_);
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, c.shifted(k));
    return r;
}

TorusElem TorusElem::times(const LaurentPoly& c) const {
    TorusElem r(lambda_);
    if (c.is_zero()) return r;
    for (const auto& [e, p] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, p * c);
    return r;
}

void TorusElem::check_compatible(const TorusElem& other) const {
    if (lambda_ != other.lambda_ && !(*lambda_ == *other.lambda_))
        throw DomainError("TorusElem: operands live over different skew forms");
}

TorusElem& TorusElem::operator+=(const TorusElem& rhs) {
    check_compatible(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

TorusElem& TorusElem::operator-=(const TorusElem& rhs) {
    check_compatible(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

TorusElem operator-(const TorusElem& a) {
    TorusElem r(a.lambda_);
    for (const auto& [e, c] : a.terms_) r.terms_.emplace_hint(r.terms_.end(), e, -c);
    return r;
}

TorusElem operator*(const TorusElem& a, const TorusElem& b) {
    a.check_compatible(b);
    const IntMatrix& lam = *a.lambda_;
    const int m = lam.rows();

    // Lambda * f for every right factor, so each pair costs one dot product.
    struct Right {
        const ExpVec* exp;
        const LaurentPoly* coeff;
        std::vector<long> lf;
    };
    std::vector<Right> right;
    right.reserve(b.terms_.size());
    for (const auto& [f, c] : b.terms_) {
        std::vector<long> lf(m, 0);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) lf[i] += static_cast<long>(lam(i, j)) * f[j];
        right.push_back({&f, &c, std::move(lf)});
    }

    TorusElem r(a.lambda_);
    ExpVec sum(m);
    for (const auto& [e, p] : a.terms_) {
        for (const auto& rt : right) {
            long pw = 0;
            for (int i = 0; i < m; ++i) {
                pw += e[i] * rt.lf[i];
                sum[i] = e[i] + (*rt.exp)[i];
            }
            r.add_term(sum, multiply_shifted(p, *rt.coeff, static_cast<int>(pw)));
        }
    }
    return r;
}

bool operator==(const TorusElem& a, const TorusElem& b) {
    a.check_compatible(b);
    return a.terms_ == b.terms_;
}

TorusElem torus_pow(const TorusElem& f, int m) {
    if (m < 0) throw DomainError("torus_pow: negative exponent");
    TorusElem r = TorusElem::one(f.lambda());
    for (int i = 0; i < m; ++i) r = r * f;
    return r;
}

TorusElem bar(const TorusElem& f) {
    TorusElem r(f.lambda());
    for (const auto& [e, c] : f.terms()) r.add_term(e, bar(c));
    return r;
}

bool is_bar_invariant(const TorusElem& f) {
    for (const auto& [e, c] : f.terms())
        if (!is_symmetric(c)) return false;
    return true;
}

}  // namespace qtri
