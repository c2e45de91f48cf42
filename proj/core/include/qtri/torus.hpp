#pragma once

/**
 * @file torus.hpp
 * @brief The based quantum torus: X^e X^f = v^{Lambda(e,f)} X^{e+f}.
 */

#include "qtri/int_matrix.hpp"
#include "qtri/laurent.hpp"

#include <map>
#include <memory>
#include <vector>

namespace qtri {

using ExpVec = std::vector<int>;
using LambdaHandle = std::shared_ptr<const IntMatrix>;

/// e^T Lambda f.
long lambda_eval(const IntMatrix& lambda, const ExpVec& e, const ExpVec& f);

class TorusElem {
public:
    using TermMap = std::map<ExpVec, LaurentPoly>;

    /// The zero element over the given skew form.
    explicit TorusElem(LambdaHandle lambda);

    static TorusElem one(const LambdaHandle& lambda);
    static TorusElem monomial(const LambdaHandle& lambda, ExpVec e, const LaurentPoly& c = 1);

    int dim() const { return lambda_->rows(); }
    const LambdaHandle& lambda() const { return lambda_; }
    const TermMap& terms() const { return terms_; }
    std::size_t num_terms() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    /// Zero polynomial when e is absent.
    LaurentPoly coeff_at(const ExpVec& e) const;
    std::vector<ExpVec> support() const;

    void add_term(const ExpVec& e, const LaurentPoly& c);

    /// Multiplies every coefficient by v^k.
    TorusElem scaled(int k) const;
    /// Multiplies every coefficient by the central scalar c.
    TorusElem times(const LaurentPoly& c) const;

    TorusElem& operator+=(const TorusElem& rhs);
    TorusElem& operator-=(const TorusElem& rhs);
    friend TorusElem operator+(TorusElem a, const TorusElem& b) { return a += b; }
    friend TorusElem operator-(TorusElem a, const TorusElem& b) { return a -= b; }
    friend TorusElem operator-(const TorusElem& a);
    friend TorusElem operator*(const TorusElem& a, const TorusElem& b);

    /// Compares terms only; the forms must agree or DomainError is thrown.
    friend bool operator==(const TorusElem& a, const TorusElem& b);

private:
    void check_compatible(const TorusElem& other) const;

    LambdaHandle lambda_;
    TermMap terms_;
};

TorusElem torus_pow(const TorusElem& f, int m);

/// Applies v -> v^-1 to every coefficient. Anti-multiplicative.
TorusElem bar(const TorusElem& f);
bool is_bar_invariant(const TorusElem& f);

}  // namespace qtri
