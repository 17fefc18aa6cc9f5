#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "homcert/smith.hpp"

using namespace homcert;

namespace {

IntegerMatrix random_sparse(std::mt19937& rng, int rows, int cols, int nnz, int vmax) {
    IntegerMatrix A(rows, cols);
    std::uniform_int_distribution<int> dr(0, rows - 1), dc(0, cols - 1), dv(-vmax, vmax);
    for (int k = 0; k < nnz; ++k) A.set(dr(rng), dc(rng), dv(rng));
    return A;
}

void check_snf_contract(const IntegerMatrix& A) {
    SNFResult snf = smith_normal_form(A);
    // U A V = S exactly.
    CHECK(snf.U * A * snf.V == snf.S);
    // U, V unimodular: integer two-sided inverses exist.
    CHECK(snf.U * snf.Uinv == IntegerMatrix::identity(A.rows()));
    CHECK(snf.Uinv * snf.U == IntegerMatrix::identity(A.rows()));
    CHECK(snf.V * snf.Vinv == IntegerMatrix::identity(A.cols()));
    CHECK(snf.Vinv * snf.V == IntegerMatrix::identity(A.cols()));
    // Diagonal, nonnegative, divisibility chain.
    for (int r = 0; r < snf.S.rows(); ++r)
        for (const auto& [c, v] : snf.S.row(r)) CHECK(r == c);
    for (size_t i = 0; i + 1 < snf.divisors.size(); ++i) {
        CHECK(snf.divisors[i] > 0);
        CHECK(snf.divisors[i + 1] % snf.divisors[i] == 0);
    }
}

}  // namespace

TEST_CASE("identity and zero") {
    CHECK(smith_normal_form(IntegerMatrix::identity(3)).S == IntegerMatrix::identity(3));
    IntegerMatrix Z(2, 5);
    SNFResult snf = smith_normal_form(Z);
    CHECK(snf.S.is_zero());
    CHECK(snf.rank == 0);
}

TEST_CASE("diag(2,3) becomes diag(1,6)") {
    IntegerMatrix A = IntegerMatrix::from_rows({{Int(2), Int(0)}, {Int(0), Int(3)}});
    SNFResult snf = smith_normal_form(A);
    CHECK(snf.divisors == std::vector<Int>{1, 6});
    CHECK(snf.U * A * snf.V == snf.S);
    Int du = snf.U.determinant();
    Int dv = snf.V.determinant();
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));
}

TEST_CASE("solve linear systems") {
    IntegerMatrix A = IntegerMatrix::from_rows({{Int(2), Int(4)}, {Int(1), Int(3)}});
    SNFResult snf = smith_normal_form(A);
    auto x = snf.solve({Int(6), Int(4)});
    REQUIRE(x.has_value());
    CHECK(A.apply(*x) == std::vector<Int>{6, 4});
    // 2x + 4y = 1 has no integer solution.
    IntegerMatrix B = IntegerMatrix::from_rows({{Int(2), Int(4)}});
    CHECK(!smith_normal_form(B).solve({Int(1)}).has_value());
}

TEST_CASE("kernel basis") {
    IntegerMatrix A = IntegerMatrix::from_rows({{Int(1), Int(2), Int(3)}});
    auto basis = smith_normal_form(A).kernel_basis();
    CHECK(basis.size() == 2);
    for (const auto& k : basis) {
        auto y = A.apply(k);
        CHECK(y == std::vector<Int>{0});
    }
}

TEST_CASE("randomized contract") {
    std::mt19937 rng(99251u);
    for (int trial = 0; trial < 60; ++trial) {
        int rows = 1 + trial % 17, cols = 1 + (trial * 7) % 13;
        check_snf_contract(random_sparse(rng, rows, cols, rows + cols, 9));
    }
    // Larger sparse instances (about two entries per row).
    for (int trial = 0; trial < 4; ++trial) {
        int n = 60 + 20 * trial;
        check_snf_contract(random_sparse(rng, n, n, 2 * n, 9));
    }
}

TEST_CASE("bareiss determinant and signature") {
    IntegerMatrix A = IntegerMatrix::from_rows({{Int(2), Int(1)}, {Int(1), Int(2)}});
    CHECK(A.determinant() == 3);
    CHECK(symmetric_signature(A) == 2);
    IntegerMatrix B = IntegerMatrix::from_rows({{Int(0), Int(1)}, {Int(1), Int(0)}});
    CHECK(symmetric_signature(B) == 0);
}
