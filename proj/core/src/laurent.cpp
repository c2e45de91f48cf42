#include "qtri/laurent.hpp"

#include "qtri/errors.hpp"

#include <algorithm>
#include <climits>
#include <sstream>

namespace qtri {

namespace {

bool fits_ll(const Integer& z) { return mpz_sizeinbase(z.get_mpz_t(), 2) <= 62; }

Integer to_integer(long long x) {
    Integer z;
    mpz_set_si(z.get_mpz_t(), static_cast<long>(x));
    return z;
}

}  // namespace

LaurentPoly::LaurentPoly(long c) {
    if (c != 0) small_.push_back(c);
}

LaurentPoly::LaurentPoly(const CoeffMap& coeffs) {
    if (coeffs.empty()) return;
    const int lo = coeffs.begin()->first;
    std::vector<Integer> c(static_cast<std::size_t>(coeffs.rbegin()->first - lo + 1));
    for (const auto& [d, x] : coeffs) c[d - lo] = x;
    *this = from_big(lo, std::move(c));
}

LaurentPoly LaurentPoly::from_big(int lo, std::vector<Integer> c) {
    LaurentPoly p;
    p.lo_ = lo;
    p.big_ = true;
    p.big_coeffs_ = std::move(c);
    p.normalize();
    return p;
}

LaurentPoly LaurentPoly::monomial(int degree, const Integer& coeff) {
    if (coeff == 0) return {};
    return from_big(degree, {coeff});
}

void LaurentPoly::promote() {
    if (big_) return;
    big_coeffs_.clear();
    big_coeffs_.reserve(small_.size());
    for (long long x : small_) big_coeffs_.push_back(to_integer(x));
    small_.clear();
    big_ = true;
}

void LaurentPoly::normalize() {
    if (big_) {
        auto& c = big_coeffs_;
        std::size_t first = 0;
        while (first < c.size() && c[first] == 0) ++first;
        std::size_t last = c.size();
        while (last > first && c[last - 1] == 0) --last;
        if (first == last) {
            c.clear();
            lo_ = 0;
        } else {
            if (last < c.size()) c.erase(c.begin() + static_cast<long>(last), c.end());
            if (first > 0) c.erase(c.begin(), c.begin() + static_cast<long>(first));
            lo_ += static_cast<int>(first);
        }
        if (std::all_of(c.begin(), c.end(), fits_ll)) {
            small_.clear();
            small_.reserve(c.size());
            for (const auto& z : c) small_.push_back(z.get_si());
            c.clear();
            big_ = false;
        }
        return;
    }
    auto& c = small_;
    std::size_t first = 0;
    while (first < c.size() && c[first] == 0) ++first;
    std::size_t last = c.size();
    while (last > first && c[last - 1] == 0) --last;
    if (first == last) {
        c.clear();
        lo_ = 0;
        return;
    }
    if (last < c.size()) c.erase(c.begin() + static_cast<long>(last), c.end());
    if (first > 0) c.erase(c.begin(), c.begin() + static_cast<long>(first));
    lo_ += static_cast<int>(first);
}

LaurentPoly::CoeffMap LaurentPoly::coeffs() const {
    CoeffMap m;
    for (std::size_t i = 0; i < width(); ++i) {
        const int d = lo_ + static_cast<int>(i);
        if (big_) {
            if (big_coeffs_[i] != 0) m.emplace_hint(m.end(), d, big_coeffs_[i]);
        } else if (small_[i] != 0) {
            m.emplace_hint(m.end(), d, to_integer(small_[i]));
        }
    }
    return m;
}

std::size_t LaurentPoly::num_terms() const {
    if (big_) return static_cast<std::size_t>(std::count_if(big_coeffs_.begin(), big_coeffs_.end(),
                                                            [](const Integer& z) { return z != 0; }));
    return static_cast<std::size_t>(std::count_if(small_.begin(), small_.end(), [](long long x) { return x != 0; }));
}

Integer LaurentPoly::coeff(int degree) const {
    if (degree < lo_ || degree >= lo_ + static_cast<int>(width())) return 0;
    const auto i = static_cast<std::size_t>(degree - lo_);
    return big_ ? big_coeffs_[i] : to_integer(small_[i]);
}

int LaurentPoly::max_degree() const {
    if (is_zero()) throw std::domain_error("degree of the zero Laurent polynomial");
    return lo_ + static_cast<int>(width()) - 1;
}

int LaurentPoly::min_degree() const {
    if (is_zero()) throw std::domain_error("degree of the zero Laurent polynomial");
    return lo_;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly r = *this;
    if (!r.is_zero()) r.lo_ += k;
    return r;
}

Integer LaurentPoly::eval_at_one() const {
    Integer s = 0;
    if (big_)
        for (const auto& z : big_coeffs_) s += z;
    else
        for (long long x : small_) s += to_integer(x);
    return s;
}

void LaurentPoly::add_scaled(const LaurentPoly& rhs, long sign) {
    if (rhs.is_zero()) return;
    if (is_zero()) {
        *this = sign > 0 ? rhs : -rhs;
        return;
    }
    const int lo = std::min(lo_, rhs.lo_);
    const int hi = std::max(max_degree(), rhs.max_degree());
    const auto w = static_cast<std::size_t>(hi - lo + 1);

    if (!big_ && !rhs.big_) {
        std::vector<long long> out(w, 0);
        std::copy(small_.begin(), small_.end(), out.begin() + (lo_ - lo));
        bool overflow = false;
        const std::size_t off = static_cast<std::size_t>(rhs.lo_ - lo);
        for (std::size_t i = 0; i < rhs.small_.size() && !overflow; ++i) {
            long long x = rhs.small_[i];
            if (sign < 0) overflow = __builtin_mul_overflow(x, -1LL, &x);
            if (!overflow) overflow = __builtin_add_overflow(out[off + i], x, &out[off + i]);
        }
        if (!overflow) {
            small_ = std::move(out);
            lo_ = lo;
            normalize();
            return;
        }
    }
    promote();
    LaurentPoly r = rhs;
    r.promote();
    std::vector<Integer> out(w);
    for (std::size_t i = 0; i < big_coeffs_.size(); ++i) out[lo_ - lo + i] = big_coeffs_[i];
    for (std::size_t i = 0; i < r.big_coeffs_.size(); ++i) {
        if (sign > 0)
            out[r.lo_ - lo + i] += r.big_coeffs_[i];
        else
            out[r.lo_ - lo + i] -= r.big_coeffs_[i];
    }
    *this = from_big(lo, std::move(out));
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    add_scaled(rhs, 1);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
    add_scaled(rhs, -1);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
    *this = *this * rhs;
    return *this;
}

LaurentPoly multiply_shifted(const LaurentPoly& lhs, const LaurentPoly& rhs, int k) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    const int lo = lhs.lo_ + rhs.lo_ + k;
    const std::size_t w = lhs.width() + rhs.width() - 1;

    if (!lhs.big_ && !rhs.big_) {
        std::vector<long long> out(w, 0);
        bool overflow = false;
        for (std::size_t i = 0; i < lhs.small_.size() && !overflow; ++i) {
            const long long x = lhs.small_[i];
            if (x == 0) continue;
            for (std::size_t j = 0; j < rhs.small_.size(); ++j) {
                long long prod = 0;
                if (__builtin_mul_overflow(x, rhs.small_[j], &prod) ||
                    __builtin_add_overflow(out[i + j], prod, &out[i + j])) {
                    overflow = true;
                    break;
                }
            }
        }
        if (!overflow) {
            LaurentPoly r;
            r.lo_ = lo;
            r.small_ = std::move(out);
            r.normalize();
            return r;
        }
    }
    LaurentPoly a = lhs;
    LaurentPoly b = rhs;
    a.promote();
    b.promote();
    std::vector<std::size_t> nz;
    for (std::size_t j = 0; j < b.big_coeffs_.size(); ++j)
        if (sgn(b.big_coeffs_[j]) != 0) nz.push_back(j);
    std::vector<Integer> out(w);
    for (std::size_t i = 0; i < a.big_coeffs_.size(); ++i) {
        if (sgn(a.big_coeffs_[i]) == 0) continue;
        for (std::size_t j : nz)
            mpz_addmul(out[i + j].get_mpz_t(), a.big_coeffs_[i].get_mpz_t(), b.big_coeffs_[j].get_mpz_t());
    }
    return LaurentPoly::from_big(lo, std::move(out));
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) { return multiply_shifted(lhs, rhs, 0); }

LaurentPoly operator-(const LaurentPoly& p) {
    LaurentPoly r = p;
    if (!r.big_) {
        for (long long& x : r.small_) {
            if (x == LLONG_MIN) {
                r.promote();
                break;
            }
            x = -x;
        }
        if (!r.big_) return r;
        r = p;
        r.promote();
    }
    for (auto& z : r.big_coeffs_) z = -z;
    r.normalize();
    return r;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.big_ != b.big_ || a.lo_ != b.lo_) return false;
    return a.big_ ? a.big_coeffs_ == b.big_coeffs_ : a.small_ == b.small_;
}

std::string LaurentPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    const auto m = coeffs();
    for (auto it = m.rbegin(); it != m.rend(); ++it) {
        const int d = it->first;
        Integer c = it->second;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        c = abs(c);
        if (d == 0) {
            os << c.get_str();
            continue;
        }
        if (c != 1) os << c.get_str();
        os << "v";
        if (d != 1) os << "^" << d;
    }
    return os.str();
}

LaurentPoly bar(const LaurentPoly& p) {
    LaurentPoly r = p;
    if (r.is_zero()) return r;
    r.lo_ = -p.max_degree();
    if (r.big_)
        std::reverse(r.big_coeffs_.begin(), r.big_coeffs_.end());
    else
        std::reverse(r.small_.begin(), r.small_.end());
    return r;
}

LaurentPoly qint(int n) {
    if (n < 0) throw DomainError("qint: n must be nonnegative");
    LaurentPoly r;
    for (int d = -(n - 1); d <= n - 1; d += 2) r += LaurentPoly::monomial(d);
    return r;
}

LaurentPoly qbinom(int n, int k) {
    if (n < 0) throw DomainError("qbinom: n must be nonnegative");
    if (k < 0 || k > n) return {};
    // [i, j] = v^{i-j} [i-1, j-1] + v^{-j} [i-1, j]
    std::vector<LaurentPoly> row{LaurentPoly(1)};
    for (int i = 1; i <= n; ++i) {
        std::vector<LaurentPoly> next(static_cast<std::size_t>(i) + 1);
        for (int j = 0; j <= i; ++j) {
            LaurentPoly t;
            if (j >= 1) t += row[j - 1].shifted(i - j);
            if (j < i) t += row[j].shifted(-j);
            next[j] = std::move(t);
        }
        row = std::move(next);
    }
    return row[k];
}

bool is_symmetric(const LaurentPoly& p) { return bar(p) == p; }

bool is_unimodal(const LaurentPoly& p) {
    if (p.is_zero()) return true;
    const auto m = p.coeffs();
    // Scan the lattice the exponents live on: step 2 when they share a parity,
    // step 1 otherwise. Zero coefficients inside that lattice count.
    const int parity = ((p.min_degree() % 2) + 2) % 2;
    const bool one_parity =
        std::all_of(m.begin(), m.end(), [parity](const auto& kv) { return ((kv.first % 2) + 2) % 2 == parity; });
    const int step = one_parity ? 2 : 1;
    const int below = (one_parity && parity == 1) ? -1 : 0;  // lattice points nearest 0
    const int above = (one_parity && parity == 1) ? 1 : 0;
    const int lo = std::min(p.min_degree(), below);
    const int hi = std::max(p.max_degree(), above);
    for (int d = lo; d + step <= hi; d += step) {
        if (d + step <= 0 && p.coeff(d) > p.coeff(d + step)) return false;
        if (d >= 0 && p.coeff(d + step) > p.coeff(d)) return false;
    }
    return true;
}

int deg(const LaurentPoly& p) { return p.max_degree(); }

LaurentPoly positive_part(const LaurentPoly& p) {
    if (bar(p) != -p)
        throw InvariantViolation("positive_part: polynomial is not bar-anti-invariant: " + p.to_string());
    LaurentPoly::CoeffMap m;
    for (const auto& [d, c] : p.coeffs())
        if (d > 0) m.emplace(d, c);
    return LaurentPoly(m);
}

}  // namespace qtri
