// Sections on the central fiber and its thickenings W_k = (k+1)C + kC_a:
// which monomial sections extend at each order, for the plain bundle and
// its D0 - D1 twist, plus the transition-function cocycle checker.
#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pushfwd/linalg.hpp"
#include "pushfwd/rational.hpp"

namespace pushfwd {

struct TwistSpec {
    enum class Kind { None, D0MinusD1 };
    Kind kind = Kind::None;

    static TwistSpec none() { return {Kind::None}; }
    static TwistSpec d0_minus_d1() { return {Kind::D0MinusD1}; }
    bool twisted() const { return kind == Kind::D0MinusD1; }
    std::string str() const { return twisted() ? "d0-d1" : "none"; }
};

// "u0^(m-i)*u1^i" with the usual power conventions.
std::string monomial_label(int m, int i);

// Labeled basis of H0 on the central fiber: all m+1 monomials for the
// plain bundle; the twist kills u0^m and leaves the m monomials
// divisible by u1.
std::vector<std::string> central_sections(int m, TwistSpec twist);

// A labeled section space with its evaluation into the gluing ring
// k[u1]/(u1^(level+1)); columns are the powers of u1.
struct ThickenedSectionSpace {
    int level = 1;
    std::vector<std::string> basis_labels;
    ScalarMatrix evaluation;
};

// Sections over the doubled elliptic component: {a + b t} for the
// plain bundle (t restricts to zero), the single generator s with
// image u1 for the twist.
ThickenedSectionSpace elliptic_side_space(int m, TwistSpec twist);
// Sections over the rational component, expanded at the node up to
// the given level.
ThickenedSectionSpace rational_side_space(int m, TwistSpec twist, int level);

struct ExtendOnceResult {
    std::vector<std::string> extendable;
    std::vector<std::string> obstructed;
    int w1_dim = 0;  // dim H0 of the first-order thickening
};

// Solves the fiber product over k[u1]/(u1^2) and reports which central
// sections lift to the first-order thickening.
ExtendOnceResult extend_once(int m, TwistSpec twist);

// h1 of the restriction to the central fiber of the bundle twisted
// down by the thickening divisor; the reduction makes it independent
// of k, which is asserted rather than assumed by callers.
int obstruction_space(int m, TwistSpec twist, int k);

struct ExtensionReport {
    int m = 1;
    TwistSpec twist;
    int k_max = 1;
    struct Row {
        std::string label;
        bool obstructed_at_level1 = false;
        int extends_through = 0;  // highest thickening level reached
        bool tautological = false;
    };
    std::vector<Row> rows;
    std::vector<int> obstruction_dims;  // step W_k -> W_{k+1}, k = 1..k_max-1
    int level1_dim = 0;
};

ExtensionReport extend_all(int m, TwistSpec twist, int k_max);

// Independent cross-check for levels <= 3: the honest two-variable
// artinian fiber product over k[u1,z]/(u1^(level+1), z^level), with the
// elliptic side parametrized layer by layer through its pole bases.
struct ArtinianResult {
    int dim = 0;
    std::vector<std::string> extendable;
};
ArtinianResult artinian_extension_oracle(int m, TwistSpec twist, int level);

// ---- trivializations and transition cocycles ----

// A scalar times a product of integer (possibly negative) powers.
struct LaurentMonomial {
    Scalar coeff = Scalar(1);
    std::map<std::string, int> exps;

    static LaurentMonomial one() { return {}; }
    static LaurentMonomial var(const std::string& name, int e = 1);
    LaurentMonomial operator*(const LaurentMonomial& o) const;
    LaurentMonomial pow(int e) const;
    LaurentMonomial substituted(const std::map<std::string, LaurentMonomial>& rules) const;
    bool operator==(const LaurentMonomial& o) const;
    std::string str() const;
};

// Charts with coordinate transitions and line-bundle transition
// functions; keys are ordered chart-name pairs.
struct Trivialization {
    std::vector<std::pair<std::string, std::vector<std::string>>> charts;
    std::map<std::pair<std::string, std::string>, std::map<std::string, LaurentMonomial>>
        transitions;
    std::map<std::pair<std::string, std::string>, LaurentMonomial> bundle;
};

struct CocycleCheck {
    bool ok = true;
    std::string first_failure;
};

// Verifies that every transition is invertible, that coordinate
// transitions compose consistently on triple overlaps, and that the
// bundle transitions satisfy g02 = g12 * g01 after transport.
CocycleCheck check_cocycle(const Trivialization& t);

// The blown-up product trivialization with charts (u0,z), (u1,t),
// (z,t) and the degree-m bundle transitions.
Trivialization standard_trivialization(int m);

// All single-exponent bumps of the data, for mutation testing.
std::vector<std::pair<std::string, Trivialization>> exponent_mutations(const Trivialization& t);

}  // namespace pushfwd
