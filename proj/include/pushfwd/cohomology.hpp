// Closed-form cohomology of line bundles on P^1 and (P^1)^r, Ext^1
// between multidegree twists, and genus-one Riemann-Roch rules.
#pragma once

#include <string>
#include <utility>
#include <vector>

namespace pushfwd {

// Line bundle of multidegree (a_1, ..., a_r) on (P^1)^r.
struct MultiDegree {
    std::vector<int> degrees;

    MultiDegree() = default;
    explicit MultiDegree(std::vector<int> d) : degrees(std::move(d)) {}

    std::size_t rank() const { return degrees.size(); }
    MultiDegree operator+(const MultiDegree& o) const;
    MultiDegree operator-(const MultiDegree& o) const;
    MultiDegree operator-() const;
    bool operator==(const MultiDegree& o) const { return degrees == o.degrees; }
    bool operator<(const MultiDegree& o) const { return degrees < o.degrees; }

    std::string str() const;
};

// (h0, h1) of O(d) on P^1.
std::pair<int, int> h_p1(int d);

// Kuenneth: h^k = sum over k-subsets S of the factor set of
// prod_{j in S} h1(a_j) * prod_{j notin S} h0(a_j); returns
// (h^0, ..., h^r).
std::vector<int> h_multi(const MultiDegree& a);

// Ext^1(O(source), O(target)) = h^1(O(target - source)).
int ext1(const MultiDegree& source, const MultiDegree& target);

// Sum of ext1(quotient, sub) over the sub summands; zero certifies
// that an extension of the quotient by their direct sum splits.
int splitting_obstruction(const MultiDegree& quotient, const std::vector<MultiDegree>& subs);

// Line bundle data on a smooth genus-one curve.  Degree zero carries
// the triviality flag: the structure sheaf has (h0,h1) = (1,1), a
// nontrivial degree-zero bundle has (0,0).
struct EllipticBundleData {
    int degree = 0;
    bool trivial = false;
};

std::pair<int, int> h_elliptic(const EllipticBundleData& data);

}  // namespace pushfwd
