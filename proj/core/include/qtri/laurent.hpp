#pragma once

/**
 * @file laurent.hpp
 * @brief Laurent polynomials in one variable v over arbitrary-precision integers.
 *
 * A LaurentPoly is stored as a trimmed dense coefficient run (no zero at either
 * end), so two polynomials are equal exactly when their runs are equal. The
 * degree -> coefficient view with zero entries dropped is available via coeffs().
 * The ring also carries the bar involution v -> v^-1 and the quantum integers
 * and Gaussian binomials used throughout the library.
 */

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace qtri {

using Integer = mpz_class;

class LaurentPoly {
public:
    using CoeffMap = std::map<int, Integer>;

    LaurentPoly() = default;
    LaurentPoly(long c);  // NOLINT: implicit constant embedding is intended
    explicit LaurentPoly(const CoeffMap& coeffs);

    static LaurentPoly monomial(int degree, const Integer& coeff = 1);

    bool is_zero() const { return width() == 0; }
    /// Nonzero coefficients keyed by degree.
    CoeffMap coeffs() const;
    std::size_t num_terms() const;

    Integer coeff(int degree) const;

    /// Largest exponent with a nonzero coefficient. Throws on the zero polynomial.
    int max_degree() const;
    int min_degree() const;

    /// Multiplication by v^k.
    LaurentPoly shifted(int k) const;
    /// Value at v = 1.
    Integer eval_at_one() const;

    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const LaurentPoly& rhs);

    friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
    friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs -= rhs; }
    friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);
    /// lhs * rhs * v^k in one pass.
    friend LaurentPoly multiply_shifted(const LaurentPoly& lhs, const LaurentPoly& rhs, int k);
    friend LaurentPoly operator-(const LaurentPoly& p);
    friend LaurentPoly bar(const LaurentPoly& p);

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

    /// Human-readable form, highest degree first: "v^4 + v^2 + 2 + v^-2 + v^-4".
    std::string to_string() const;

private:
    // Dense coefficients of v^lo_, v^{lo_+1}, ... with nonzero ends; empty means 0.
    // Machine words while every coefficient fits, GMP integers otherwise.
    std::size_t width() const { return big_ ? big_coeffs_.size() : small_.size(); }
    void add_scaled(const LaurentPoly& rhs, long sign);
    void promote();
    void normalize();
    static LaurentPoly from_big(int lo, std::vector<Integer> c);

    int lo_ = 0;
    bool big_ = false;
    std::vector<long long> small_;
    std::vector<Integer> big_coeffs_;
};

/// lhs * rhs * v^k.
LaurentPoly multiply_shifted(const LaurentPoly& lhs, const LaurentPoly& rhs, int k);

/// Substitutes v -> v^-1.
LaurentPoly bar(const LaurentPoly& p);

/// Quantum integer [n] = (v^n - v^-n) / (v - v^-1), n >= 0.
LaurentPoly qint(int n);

/// Gaussian binomial [n choose k] in the balanced (bar-invariant) normalization.
/// Zero when k < 0 or k > n. Computed by the q-Pascal recurrence.
LaurentPoly qbinom(int n, int k);

bool is_symmetric(const LaurentPoly& p);

/// Coefficients weakly increase up to degree 0 and weakly decrease after it.
/// When all exponents share a parity the scan runs over that parity class
/// (v^2 + 1 + v^-2 is unimodal, v^2 + v^-2 is not); otherwise over every degree.
/// The range always reaches the lattice points next to 0; zero gaps count.
bool is_unimodal(const LaurentPoly& p);

/// Largest exponent of v. Throws std::domain_error for the zero polynomial.
int deg(const LaurentPoly& p);

/// For p with bar(p) == -p, returns the unique q in vZ[v] with q - bar(q) == p.
/// Throws InvariantViolation when p is not anti-invariant.
LaurentPoly positive_part(const LaurentPoly& p);

}  // namespace qtri
