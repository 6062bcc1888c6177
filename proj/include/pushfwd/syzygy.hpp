// Monomial syzygies, truncated-degree kernel oracles, and fiber
// dimensions of submodules of free modules.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "pushfwd/linalg.hpp"
#include "pushfwd/polynomial.hpp"

namespace pushfwd {

// All monomials of total degree exactly d in the given variables,
// in deterministic order.
std::vector<Monomial> monomials_of_degree(const std::vector<std::string>& universe, int d);
// Degrees 0..d inclusive.
std::vector<Monomial> monomials_up_to_degree(const std::vector<std::string>& universe, int d);

// Pairwise lcm relations sigma_ij = (lcm/m_i) e_i - (lcm/m_j) e_j for
// i < j.  For a monomial row these generate the whole syzygy module
// (the Taylor complex in homological degree one).
std::vector<std::vector<Polynomial>> monomial_syzygies(const std::vector<Monomial>& row);

// For each total degree D <= degree_bound: the dimension of the space
// of vectors (v_k) with v_k homogeneous of degree D - deg(row_k) and
// sum row_k v_k = 0.  Row entries must be homogeneous.  The grading is
// by the common degree D of the products row_k v_k, which stays
// uniform when entries have different degrees.
std::map<int, int> truncated_kernel_dim(const std::vector<Polynomial>& row, int degree_bound,
                                        std::vector<std::string> universe = {});

// Dimension of the degree-D graded piece (same grading) of the
// submodule generated by `generators` inside the free module over the
// row's ring.  Comparing this with truncated_kernel_dim is the syzygy
// oracle-equivalence check.
int syzygy_span_dim(const std::vector<std::vector<Polynomial>>& generators,
                    const std::vector<Polynomial>& row, int product_degree,
                    std::vector<std::string> universe = {});

struct FiberDim {
    int value = 0;
    bool stabilized = false;
};

// Number of minimal generators of the submodule spanned by
// `generators` localized at `point`: the point is translated to the
// origin and dim of span(gens) modulo (maximal ideal * module) is
// computed with all data truncated at total degree `degree_bound`.
// The value is trusted only when it agrees with the bound-1 run;
// the flag reports that, it is never silently dropped.
FiberDim fiber_dim_of_submodule(const std::vector<std::vector<Polynomial>>& generators,
                                const PointAssignment& point, int degree_bound);

inline constexpr int kDefaultDegreeBound = 6;

}  // namespace pushfwd
