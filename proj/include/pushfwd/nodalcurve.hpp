// Dual-graph model of nodal genus-one curves and exact h0/h1 of line
// bundles on them via the normalization sequence.
#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "pushfwd/cohomology.hpp"
#include "pushfwd/primes.hpp"

namespace pushfwd {

// A point on a rational component: [1,0], [0,1], or a named generic
// position.  Elliptic components only carry named positions.
struct PointLabel {
    enum class Kind { Zero, Infinity, Generic };
    Kind kind = Kind::Generic;
    std::string name;  // Generic only

    static PointLabel zero() { return {Kind::Zero, ""}; }
    static PointLabel infinity() { return {Kind::Infinity, ""}; }
    static PointLabel generic(std::string n) { return {Kind::Generic, std::move(n)}; }

    bool operator==(const PointLabel& o) const { return kind == o.kind && name == o.name; }
    std::string str() const;
};

struct CurveComponent {
    std::string id;
    int genus = 0;  // 0 or 1
};

struct NodeEnd {
    std::string component;
    PointLabel point;
};

struct CurveNode {
    NodeEnd a, b;
};

struct CurveGraph {
    std::vector<CurveComponent> components;
    std::vector<CurveNode> nodes;

    const CurveComponent& component(const std::string& id) const;
    bool has_component(const std::string& id) const;
    int arithmetic_genus() const;  // independent cycles + sum of genera
    bool connected() const;
    void validate() const;  // connected, sane labels, genus one
};

// Per-component line bundle data.  Rational components only use the
// degree; elliptic components add the triviality flag and the set of
// node indices lying in the divisor of the distinguished section.
struct ComponentBundle {
    int degree = 0;
    bool trivial = false;
    std::set<std::size_t> divisor_nodes;
};

struct BundleOnCurve {
    std::map<std::string, ComponentBundle> per_component;

    int total_degree() const;
    const ComponentBundle& at(const std::string& id) const;
};

// The genus-one component if there is one, otherwise the unique cycle
// of rational components.
std::set<std::string> core(const CurveGraph& graph);

// Connected components of (graph minus core), each a tree of rational
// components, ordered by smallest member id.
std::vector<std::set<std::string>> tails(const CurveGraph& graph);

int euler_char(const CurveGraph& graph, const BundleOnCurve& bundle);

// Assembles the gluing matrix of the normalization sequence
// 0 -> L -> (+) L|_{C_i} -> (+) k(nodes) -> 0 and returns
// (dim ker, dim coker + sum h1(L|_{C_i})).  Generic positions get
// deterministic prime coordinates; every rank claim involving them is
// recomputed with the second prime sequence and must agree.
std::pair<int, int> h0_h1(const CurveGraph& graph, const BundleOnCurve& bundle);

}  // namespace pushfwd
