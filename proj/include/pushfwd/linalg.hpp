// Exact dense and sparse linear algebra over the rationals, with a
// prime-field mode for cross-checks.
#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "pushfwd/rational.hpp"

namespace pushfwd {

using ScalarMatrix = std::vector<std::vector<Scalar>>;

// Rank by fraction-free (Bareiss) elimination on the integer matrix
// obtained by clearing row denominators.
int matrix_rank(const ScalarMatrix& m);

// Basis of the right kernel; size == cols - rank, each vector exact.
std::vector<std::vector<Scalar>> kernel_basis(const ScalarMatrix& m);

// Rank of the same matrix with entries reduced mod p (p prime, not
// dividing any denominator).  Used as an independent oracle.
int matrix_rank_mod_p(const ScalarMatrix& m, std::uint64_t p);

// Rows held as column -> coefficient maps; rank by elimination with a
// shortest-row pivot rule.  The workhorse for the truncated-degree
// module computations, whose matrices are large but very sparse.
struct SparseMatrix {
    std::size_t cols = 0;
    std::vector<std::map<std::size_t, Scalar>> rows;

    void add_row(std::map<std::size_t, Scalar> row) { rows.push_back(std::move(row)); }
};

int sparse_rank(SparseMatrix m);

bool matvec_is_zero(const ScalarMatrix& m, const std::vector<Scalar>& v);

}  // namespace pushfwd
