// Families of nodal genus-one curves over a parameter base: the
// beta map of a tail configuration, the free/kernel decomposition of
// the pushforward, fiber ranks over strata, the R^1 skyscraper, and
// the comparison with fiberwise curve cohomology.
#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "pushfwd/cohomology.hpp"
#include "pushfwd/monomial.hpp"
#include "pushfwd/nodalcurve.hpp"
#include "pushfwd/polynomial.hpp"
#include "pushfwd/syzygy.hpp"

namespace pushfwd {

// One rational tail: the smoothing parameter of the node carrying the
// section, its multiplicity, and the ghost-chain parameters connecting
// it to the core (core outward; names may be shared across tails).
struct TailSpec {
    std::string parameter;
    int multiplicity = 1;
    std::vector<std::string> chain;
};

enum class BaseMode { LocalAffine, Multiprojective };

struct FamilyConfig {
    std::string name;
    BaseMode mode = BaseMode::LocalAffine;
    std::vector<TailSpec> tails;

    // Tail parameters in declaration order, then ghost parameters in
    // first-appearance order.
    std::vector<std::string> universe() const;
    const TailSpec& tail(const std::string& parameter) const;
    void validate() const;
};

// A twist class O(-k(V_i + sum_j V_ij)); empty vanishing data is the
// structure sheaf.
struct TwistClass {
    std::map<std::string, int> vanishing;  // parameter -> multiplicity k

    bool is_trivial() const { return vanishing.empty(); }
    MultiDegree as_multidegree(const std::vector<std::string>& universe) const;
    Monomial principal_monomial() const;
    std::string str(BaseMode mode) const;
    bool operator==(const TwistClass& o) const { return vanishing == o.vanishing; }
    bool operator<(const TwistClass& o) const { return vanishing < o.vanishing; }
};

struct BetaMap {
    std::vector<Monomial> entries;  // entry_i = t_i * prod_j t_ij
};

struct PushforwardModel {
    FamilyConfig config;              // zero-multiplicity tails already dropped
    std::vector<int> multiplicities;  // aligned with config.tails
    std::vector<std::string> universe;
    std::vector<TwistClass> v_m0;  // O and every k >= 2 twist
    std::vector<TwistClass> v1;    // the k = 1 twists, beta's domain
    BetaMap beta;
    std::vector<std::vector<Polynomial>> kernel_generators;
    std::vector<std::string> notes;  // normalization log

    int total_multiplicity() const;
};

// R^1 pushforward: a length-one sheaf supported on the zero locus of
// the beta entry ideal, recorded as the minimal coordinate subspaces;
// for chainless configurations this is exactly the intersection of the
// tail divisors.
struct R1Model {
    std::vector<std::set<std::string>> support;  // minimal primes, deterministic order
    std::set<std::string> tail_stratum;          // cap of {t_i = 0} over tails
    int length = 1;
};

BetaMap beta_map(const FamilyConfig& config);

std::vector<TwistClass> pushforward_with_D(const FamilyConfig& config, std::vector<int> m = {});

PushforwardModel pushforward(const FamilyConfig& config, std::vector<int> m = {});

// rank(V_m0) + number of minimal generators of ker beta at the point.
int fiber_rank(const PushforwardModel& model, const PointAssignment& point,
               int degree_bound = kDefaultDegreeBound);

// Fiber rank at a generic point, computed for both deterministic prime
// assignments; disagreement is an error.
int generic_fiber_rank(const PushforwardModel& model, int degree_bound = kDefaultDegreeBound);

R1Model r1_model(const FamilyConfig& config, std::vector<int> m = {});

TwistClass normal_bundle_of_section(const FamilyConfig& config, const std::string& tail_parameter);

// The fiber curve over a stratum point: a node persists exactly where
// its smoothing parameter vanishes; everything else is merged.
struct FiberCurve {
    CurveGraph graph;
    BundleOnCurve bundle;
};
FiberCurve stratum_fiber(const FamilyConfig& config, const std::vector<int>& m,
                         const std::set<std::string>& stratum);

struct BaseChangeReport {
    std::set<std::string> stratum;
    int module_fiber = 0;
    int h0 = 0;
    int h1 = 0;
    int euler = 0;
    int generic_rank = 0;
    bool equal = false;           // module_fiber == h0
    bool semicontinuous = false;  // module_fiber >= generic_rank
    std::string verdict;          // "EQUAL", "JUMP", or "MISMATCH"
};

BaseChangeReport base_change_check(const FamilyConfig& config, std::vector<int> m,
                                   const PointAssignment& point,
                                   int degree_bound = kDefaultDegreeBound);

}  // namespace pushfwd
