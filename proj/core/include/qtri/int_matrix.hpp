#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace qtri {

/// Dense row-major matrix of machine integers. Entries of B, B~ and Lambda stay
/// small (arrow multiplicities), so int is ample here; polynomial coefficients
/// live in LaurentPoly instead.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols);
    /// Throws DomainError if the rows are ragged.
    static IntMatrix from_rows(const std::vector<std::vector<int>>& rows);
    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    int& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    int operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

    std::vector<int> column(int j) const;
    std::vector<std::vector<int>> to_rows() const;

    bool is_square() const { return rows_ == cols_; }
    bool is_skew_symmetric() const;

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

    std::string to_string() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<int> data_;
};

/// u^T M w.
long bilinear(const IntMatrix& m, const std::vector<int>& u, const std::vector<int>& w);

inline int pos(int x) { return x > 0 ? x : 0; }

}  // namespace qtri
