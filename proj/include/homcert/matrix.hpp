#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <vector>

#include "homcert/errors.hpp"

namespace homcert {

using Int = boost::multiprecision::cpp_int;

/// Sparse integer matrix over arbitrary-precision integers. Zero entries are
/// never stored.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(int rows, int cols) : rows_(rows), cols_(cols), row_(rows) {}

    static IntegerMatrix identity(int n);
    static IntegerMatrix from_rows(const std::vector<std::vector<Int>>& dense);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int nnz() const;
    bool is_zero() const { return nnz() == 0; }

    Int get(int r, int c) const;
    void set(int r, int c, Int v);
    void add_to(int r, int c, const Int& v);
    const std::map<int, Int>& row(int r) const { return row_.at(r); }

    IntegerMatrix transpose() const;
    IntegerMatrix operator*(const IntegerMatrix& other) const;
    IntegerMatrix operator-(const IntegerMatrix& other) const;
    bool operator==(const IntegerMatrix& other) const;

    std::vector<Int> apply(const std::vector<Int>& x) const;  // A * x

    /// Exact determinant of a square matrix (fraction-free elimination).
    Int determinant() const;

    std::string to_string() const;  // debug dump

private:
    int rows_ = 0, cols_ = 0;
    std::vector<std::map<int, Int>> row_;
};

/// Signature (#positive - #negative eigenvalues) of a symmetric integer
/// matrix with nonzero determinant, via signs of leading principal minors
/// (with symmetric pivoting when a minor vanishes).
int symmetric_signature(const IntegerMatrix& A);

/// Block assembly helper: writes B into A at offset (r0, c0).
void insert_block(IntegerMatrix& A, const IntegerMatrix& B, int r0, int c0, const Int& scale = 1);

}  // namespace homcert
