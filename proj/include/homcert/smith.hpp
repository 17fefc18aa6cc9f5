#pragma once

#include <optional>

#include "homcert/matrix.hpp"

namespace homcert {

/// Smith normal form U * A * V = S with S diagonal, nonnegative, and
/// divisibility d1 | d2 | ... along the diagonal; U and V unimodular.
/// Uinv and Vinv are accumulated alongside (empty when transforms are
/// disabled).
struct SNFResult {
    IntegerMatrix S, U, V, Uinv, Vinv;
    int rank = 0;
    std::vector<Int> divisors;  // the nonzero diagonal entries
    bool with_transforms = true;

    /// Solve A x = b exactly; nullopt when no integer solution exists.
    std::optional<std::vector<Int>> solve(const std::vector<Int>& b) const;

    /// Columns of V spanning ker A (a lattice basis).
    std::vector<std::vector<Int>> kernel_basis() const;
};

/// Deterministic SNF. Pivot choice: nonzero entry of minimal absolute value,
/// ties broken by lowest row then lowest column.
SNFResult smith_normal_form(const IntegerMatrix& A, bool with_transforms = true);

/// Rank of A over the integers (divisor count), without transforms.
int integer_rank(const IntegerMatrix& A);

/// Rank of A over Z/p: the number of elementary divisors not divisible by p.
int rank_mod_p(const IntegerMatrix& A, const Int& p);

}  // namespace homcert
