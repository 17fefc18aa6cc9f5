#include "homcert/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace homcert {

IntegerMatrix IntegerMatrix::identity(int n) {
    IntegerMatrix I(n, n);
    for (int i = 0; i < n; ++i) I.row_[i][i] = 1;
    return I;
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<std::vector<Int>>& dense) {
    int r = static_cast<int>(dense.size());
    int c = r == 0 ? 0 : static_cast<int>(dense[0].size());
    IntegerMatrix A(r, c);
    for (int i = 0; i < r; ++i) {
        require(static_cast<int>(dense[i].size()) == c, errc::bad_argument, "ragged matrix rows");
        for (int j = 0; j < c; ++j)
            if (dense[i][j] != 0) A.row_[i][j] = dense[i][j];
    }
    return A;
}

int IntegerMatrix::nnz() const {
    int n = 0;
    for (const auto& r : row_) n += static_cast<int>(r.size());
    return n;
}

Int IntegerMatrix::get(int r, int c) const {
    const auto& m = row_.at(r);
    auto it = m.find(c);
    return it == m.end() ? Int(0) : it->second;
}

void IntegerMatrix::set(int r, int c, Int v) {
    require(r >= 0 && r < rows_ && c >= 0 && c < cols_, errc::bad_argument,
            "matrix index out of range");
    if (v == 0)
        row_[r].erase(c);
    else
        row_[r][c] = std::move(v);
}

void IntegerMatrix::add_to(int r, int c, const Int& v) {
    if (v == 0) return;
    auto& m = row_.at(r);
    auto it = m.find(c);
    if (it == m.end()) {
        m[c] = v;
    } else {
        it->second += v;
        if (it->second == 0) m.erase(it);
    }
}

IntegerMatrix IntegerMatrix::transpose() const {
    IntegerMatrix T(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (const auto& [c, v] : row_[r]) T.row_[c][r] = v;
    return T;
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& other) const {
    require(cols_ == other.rows_, errc::bad_argument, "matrix product shape mismatch");
    IntegerMatrix C(rows_, other.cols_);
    for (int r = 0; r < rows_; ++r) {
        for (const auto& [k, a] : row_[r]) {
            for (const auto& [c, b] : other.row_[k]) C.add_to(r, c, a * b);
        }
    }
    return C;
}

IntegerMatrix IntegerMatrix::operator-(const IntegerMatrix& other) const {
    require(rows_ == other.rows_ && cols_ == other.cols_, errc::bad_argument,
            "matrix difference shape mismatch");
    IntegerMatrix C = *this;
    for (int r = 0; r < rows_; ++r)
        for (const auto& [c, v] : other.row_[r]) C.add_to(r, c, -v);
    return C;
}

bool IntegerMatrix::operator==(const IntegerMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && row_ == other.row_;
}

std::vector<Int> IntegerMatrix::apply(const std::vector<Int>& x) const {
    require(static_cast<int>(x.size()) == cols_, errc::bad_argument, "apply: size mismatch");
    std::vector<Int> y(rows_, 0);
    for (int r = 0; r < rows_; ++r)
        for (const auto& [c, v] : row_[r]) y[r] += v * x[c];
    return y;
}

Int IntegerMatrix::determinant() const {
    require(rows_ == cols_, errc::bad_argument, "determinant of non-square matrix");
    const int n = rows_;
    if (n == 0) return 1;
    // Bareiss fraction-free elimination on a dense copy.
    std::vector<std::vector<Int>> a(n, std::vector<Int>(n, 0));
    for (int r = 0; r < n; ++r)
        for (const auto& [c, v] : row_[r]) a[r][c] = v;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int p = -1;
            for (int r = k + 1; r < n; ++r)
                if (a[r][k] != 0) {
                    p = r;
                    break;
                }
            if (p < 0) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

int symmetric_signature(const IntegerMatrix& A) {
    require(A.rows() == A.cols(), errc::bad_argument, "signature of non-square matrix");
    const int n = A.rows();
    // Jacobi's rule on leading principal minors; symmetric row/col swaps when
    // a minor vanishes.
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    auto minor_det = [&](int k) {
        IntegerMatrix M(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) M.set(i, j, A.get(perm[i], perm[j]));
        return M.determinant();
    };
    std::vector<Int> minors(n + 1);
    minors[0] = 1;
    for (int k = 1; k <= n; ++k) {
        minors[k] = minor_det(k);
        if (minors[k] == 0) {
            bool fixed = false;
            for (int s = k; s < n && !fixed; ++s) {
                std::swap(perm[k - 1], perm[s]);
                Int d = minor_det(k);
                if (d != 0) {
                    minors[k] = d;
                    fixed = true;
                } else {
                    std::swap(perm[k - 1], perm[s]);
                }
            }
            require(fixed, errc::bad_argument,
                    "signature: vanishing principal minors (singular or needs 2x2 pivots)");
        }
    }
    int sig = 0;
    for (int k = 1; k <= n; ++k) sig += (minors[k] * minors[k - 1] > 0) ? 1 : -1;
    return sig;
}

void insert_block(IntegerMatrix& A, const IntegerMatrix& B, int r0, int c0, const Int& scale) {
    for (int r = 0; r < B.rows(); ++r)
        for (const auto& [c, v] : B.row(r)) A.add_to(r0 + r, c0 + c, v * scale);
}

std::string IntegerMatrix::to_string() const {
    std::ostringstream os;
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) os << get(r, c) << (c + 1 == cols_ ? "" : " ");
        os << "\n";
    }
    return os.str();
}

}  // namespace homcert
