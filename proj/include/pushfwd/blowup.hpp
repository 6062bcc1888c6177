// Coordinate-subspace blowups of the base: standard charts as monomial
// substitutions, pullbacks of the beta row, and the local-freeness test
// for the pulled-back kernel.
#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "pushfwd/family.hpp"
#include "pushfwd/monomial.hpp"

namespace pushfwd {

// Blowup along the ideal generated by the center parameters.
struct BlowupSpec {
    std::vector<std::string> center;

    void validate(const std::set<std::string>& universe) const;
};

// One standard chart: parameter -> monomial substitution; parameters
// absent from the map are unchanged.  The exceptional divisor is the
// chart's pivot coordinate.
struct Chart {
    std::string pivot;  // fresh coordinate of the blown-up center parameter
    std::map<std::string, Monomial> substitution;

    Monomial apply(const Monomial& m) const;
    std::vector<Monomial> apply_row(const std::vector<Monomial>& row) const;
    // Chart coordinates of a base point away from the center's zero
    // locus (used for overlap consistency checks).
    std::map<std::string, Scalar> chart_point(const std::map<std::string, Scalar>& base_point,
                                              const std::set<std::string>& universe) const;
};

// One chart per center parameter; a single-parameter center is a
// Cartier divisor and yields the identity chart.
std::vector<Chart> charts(const BlowupSpec& spec, const std::set<std::string>& universe);

std::vector<Monomial> pullback_beta(const BetaMap& beta, const Chart& chart);

struct FreenessVerdict {
    bool free = false;
    int rank = 0;         // meaningful when free
    int origin_dim = 0;   // minimal generators at the origin
    int generic_dim = 0;  // minimal generators at a generic point
};

// Decides local freeness of the syzygy kernel of a monomial row: the
// gcd is factored out first (it scales the row without changing the
// kernel); a unit entry gives an explicit free basis; otherwise the
// fiber dimensions at the origin and at a generic point are compared.
FreenessVerdict kernel_local_freeness(const std::vector<Monomial>& row,
                                      int degree_bound = kDefaultDegreeBound);

// Same verdict with the fiber dimension checked on every stratum of
// the row's variables, not just origin and generic point.
FreenessVerdict kernel_local_freeness_sweep(const std::vector<Monomial>& row,
                                            int degree_bound = kDefaultDegreeBound);

struct ChartVerdict {
    std::vector<std::string> path;  // pivot names of the chart chain
    std::vector<Monomial> row;
    FreenessVerdict verdict;
};

struct ResolveReport {
    bool resolved = false;
    std::vector<ChartVerdict> charts;
};

// Applies the blowup sequence as a tree of chart substitutions to the
// configuration's beta row and tests the kernel in every leaf chart.
ResolveReport resolve_check(const FamilyConfig& config, std::vector<int> m,
                            const std::vector<BlowupSpec>& sequence,
                            int degree_bound = kDefaultDegreeBound, bool sweep = false);

}  // namespace pushfwd
