#include "qtri/int_matrix.hpp"

#include "qtri/errors.hpp"

#include <sstream>

namespace qtri {

IntMatrix::IntMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0) {
    if (rows < 0 || cols < 0) throw DomainError("IntMatrix: negative dimension");
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r == 0 ? 0 : static_cast<int>(rows.front().size());
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c)
            throw DomainError("matrix rows have different lengths");
        for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

std::vector<int> IntMatrix::column(int j) const {
    std::vector<int> c(rows_);
    for (int i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
}

std::vector<std::vector<int>> IntMatrix::to_rows() const {
    std::vector<std::vector<int>> out(rows_, std::vector<int>(cols_));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j);
    return out;
}

bool IntMatrix::is_skew_symmetric() const {
    if (!is_square()) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i; j < cols_; ++j)
            if ((*this)(i, j) != -(*this)(j, i)) return false;
    return true;
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (int i = 0; i < rows_; ++i) {
        if (i) os << ',';
        os << '[';
        for (int j = 0; j < cols_; ++j) {
            if (j) os << ',';
            os << (*this)(i, j);
        }
        os << ']';
    }
    os << ']';
    return os.str();
}

long bilinear(const IntMatrix& m, const std::vector<int>& u, const std::vector<int>& w) {
    if (static_cast<int>(u.size()) != m.rows() || static_cast<int>(w.size()) != m.cols())
        throw DomainError("bilinear form: dimension mismatch");
    long s = 0;
    for (int i = 0; i < m.rows(); ++i) {
        if (u[i] == 0) continue;
        long row = 0;
        for (int j = 0; j < m.cols(); ++j) row += static_cast<long>(m(i, j)) * w[j];
        s += u[i] * row;
    }
    return s;
}

}  // namespace qtri
