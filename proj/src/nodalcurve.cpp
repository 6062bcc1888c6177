#include "pushfwd/nodalcurve.hpp"

#include <algorithm>
#include <stdexcept>

#include "pushfwd/linalg.hpp"

namespace pushfwd {

std::string PointLabel::str() const {
    switch (kind) {
        case Kind::Zero:
            return "[1,0]";
        case Kind::Infinity:
            return "[0,1]";
        default:
            return name;
    }
}

const CurveComponent& CurveGraph::component(const std::string& id) const {
    for (const auto& c : components)
        if (c.id == id)
            return c;
    throw std::invalid_argument("CurveGraph: unknown component " + id);
}

bool CurveGraph::has_component(const std::string& id) const {
    for (const auto& c : components)
        if (c.id == id)
            return true;
    return false;
}

int CurveGraph::arithmetic_genus() const {
    int genus_sum = 0;
    for (const auto& c : components)
        genus_sum += c.genus;
    int cycles = static_cast<int>(nodes.size()) - static_cast<int>(components.size()) + 1;
    return cycles + genus_sum;
}

bool CurveGraph::connected() const {
    if (components.empty())
        return false;
    std::set<std::string> seen{components.front().id};
    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto& n : nodes) {
            bool a = seen.count(n.a.component), b = seen.count(n.b.component);
            if (a != b) {
                seen.insert(a ? n.b.component : n.a.component);
                grew = true;
            }
        }
    }
    return seen.size() == components.size();
}

void CurveGraph::validate() const {
    std::set<std::string> ids;
    for (const auto& c : components) {
        if (c.genus != 0 && c.genus != 1)
            throw std::invalid_argument("component " + c.id + ": genus must be 0 or 1");
        if (!ids.insert(c.id).second)
            throw std::invalid_argument("duplicate component id " + c.id);
    }
    // Node ends reference known components; attachment points on each
    // component are pairwise distinct; elliptic components only take
    // named positions.
    std::map<std::string, std::vector<PointLabel>> used;
    for (const auto& n : nodes) {
        for (const auto* end : {&n.a, &n.b}) {
            const auto& comp = component(end->component);
            if (comp.genus == 1 && end->point.kind != PointLabel::Kind::Generic)
                throw std::invalid_argument("component " + comp.id +
                                            ": elliptic attachment points must be named");
            for (const auto& prev : used[end->component])
                if (prev == end->point)
                    throw std::invalid_argument("component " + end->component +
                                                ": repeated attachment point " +
                                                end->point.str());
            used[end->component].push_back(end->point);
        }
        if (n.a.component == n.b.component && n.a.point == n.b.point)
            throw std::invalid_argument("node glues a point to itself");
    }
    if (!connected())
        throw std::invalid_argument("curve graph is not connected");
    if (arithmetic_genus() != 1)
        throw std::invalid_argument("arithmetic genus is " + std::to_string(arithmetic_genus()) +
                                    ", expected 1");
}

int BundleOnCurve::total_degree() const {
    int d = 0;
    for (const auto& [id, b] : per_component)
        d += b.degree;
    return d;
}

const ComponentBundle& BundleOnCurve::at(const std::string& id) const {
    auto it = per_component.find(id);
    if (it == per_component.end())
        throw std::invalid_argument("BundleOnCurve: no data for component " + id);
    return it->second;
}

std::set<std::string> core(const CurveGraph& graph) {
    graph.validate();
    for (const auto& c : graph.components)
        if (c.genus == 1)
            return {c.id};

    // No elliptic component: the core is the unique cycle, found by
    // repeatedly stripping leaves of the dual multigraph.
    std::set<std::string> alive;
    for (const auto& c : graph.components)
        alive.insert(c.id);
    bool changed = true;
    while (changed) {
        changed = false;
        std::map<std::string, int> degree;
        for (const auto& n : graph.nodes) {
            if (!alive.count(n.a.component) || !alive.count(n.b.component))
                continue;
            degree[n.a.component]++;
            degree[n.b.component]++;
        }
        for (const auto& id : std::set<std::string>(alive)) {
            if (degree[id] <= 1 && alive.size() > 1) {
                alive.erase(id);
                changed = true;
            }
        }
    }
    if (alive.empty())
        throw std::logic_error("core: stripping left no cycle");
    return alive;
}

std::vector<std::set<std::string>> tails(const CurveGraph& graph) {
    auto core_ids = core(graph);
    std::set<std::string> rest;
    for (const auto& c : graph.components)
        if (!core_ids.count(c.id))
            rest.insert(c.id);

    std::vector<std::set<std::string>> out;
    while (!rest.empty()) {
        std::set<std::string> group{*rest.begin()};
        rest.erase(rest.begin());
        bool grew = true;
        while (grew) {
            grew = false;
            for (const auto& n : graph.nodes) {
                bool a = group.count(n.a.component), b = group.count(n.b.component);
                if (a != b) {
                    const auto& other = a ? n.b.component : n.a.component;
                    if (rest.count(other)) {
                        group.insert(other);
                        rest.erase(other);
                        grew = true;
                    }
                }
            }
        }
        out.push_back(std::move(group));
    }
    std::sort(out.begin(), out.end(),
              [](const auto& x, const auto& y) { return *x.begin() < *y.begin(); });
    return out;
}

int euler_char(const CurveGraph& graph, const BundleOnCurve& bundle) {
    int chi = 0;
    for (const auto& c : graph.components)
        chi += bundle.at(c.id).degree + 1 - c.genus;
    return chi - static_cast<int>(graph.nodes.size());
}

namespace {

struct SectionSpace {
    int dim = 0;
    int h1 = 0;
};

SectionSpace section_space(const CurveComponent& comp, const ComponentBundle& bundle) {
    if (comp.genus == 0) {
        auto [h0, h1] = h_p1(bundle.degree);
        return {h0, h1};
    }
    EllipticBundleData data{bundle.degree, bundle.trivial};
    auto [h0, h1] = h_elliptic(data);
    return {h0, h1};
}

// Evaluation of the component's section space at one attachment point,
// as a column of coefficients against the component basis.
std::vector<Scalar> evaluation_column(const CurveComponent& comp,
                                      const ComponentBundle& bundle, std::size_t node_index,
                                      const PointLabel& point,
                                      const std::map<std::string, Scalar>& label_coords,
                                      const std::map<std::pair<std::string, std::size_t>, Scalar>&
                                          elliptic_coords) {
    if (comp.genus == 0) {
        int d = bundle.degree;
        if (d < 0)
            return {};
        std::vector<Scalar> col(static_cast<std::size_t>(d) + 1, Scalar(0));
        switch (point.kind) {
            case PointLabel::Kind::Zero:
                col[0] = Scalar(1);  // u0^d at [1,0]
                break;
            case PointLabel::Kind::Infinity:
                col[static_cast<std::size_t>(d)] = Scalar(1);  // u1^d at [0,1]
                break;
            case PointLabel::Kind::Generic: {
                if (d == 0) {
                    col[0] = Scalar(1);  // constants evaluate to themselves
                    break;
                }
                Scalar lambda = label_coords.at(point.name);
                Scalar pw(1);
                for (int i = 0; i <= d; ++i) {
                    col[static_cast<std::size_t>(i)] = pw;
                    pw *= lambda;
                }
                break;
            }
        }
        return col;
    }

    // Elliptic component.
    int d = bundle.degree;
    if (d == 0 && bundle.trivial)
        return {Scalar(1)};  // the constant section
    if (d <= 0)
        return {};
    bool in_divisor = bundle.divisor_nodes.count(node_index) > 0;
    if (in_divisor) {
        if (d != 1)
            throw std::invalid_argument(
                "component " + comp.id +
                ": evaluation with the divisor through a node is only determined for degree 1");
        return {Scalar(0)};  // the unique section vanishes there
    }
    // General position: a generic functional on the d-dimensional
    // space, Vandermonde in a fresh coordinate so that any <= d of
    // them stay independent.
    Scalar lambda = elliptic_coords.at({comp.id, node_index});
    std::vector<Scalar> col(static_cast<std::size_t>(d));
    Scalar pw(1);
    for (int i = 0; i < d; ++i) {
        col[static_cast<std::size_t>(i)] = pw;
        pw *= lambda;
    }
    return col;
}

std::pair<int, int> h0_h1_pass(const CurveGraph& graph, const BundleOnCurve& bundle,
                               std::size_t feed_start, bool* used_generic) {
    PrimeFeed feed(feed_start);
    *used_generic = false;

    // Deterministic coordinates: named labels first (sorted), then
    // elliptic node functionals in (component, node) order.
    std::set<std::string> names;
    for (const auto& n : graph.nodes)
        for (const auto* end : {&n.a, &n.b})
            if (end->point.kind == PointLabel::Kind::Generic &&
                graph.component(end->component).genus == 0 && bundle.at(end->component).degree >= 1)
                names.insert(end->point.name);
    std::map<std::string, Scalar> label_coords;
    for (const auto& name : names) {
        label_coords[name] = Scalar(feed.take());
        *used_generic = true;
    }

    std::map<std::pair<std::string, std::size_t>, Scalar> elliptic_coords;
    for (const auto& c : graph.components) {
        if (c.genus != 1)
            continue;
        const auto& b = bundle.at(c.id);
        if (b.degree < 1)
            continue;
        for (std::size_t k = 0; k < graph.nodes.size(); ++k) {
            const auto& n = graph.nodes[k];
            if ((n.a.component == c.id || n.b.component == c.id) && !b.divisor_nodes.count(k)) {
                elliptic_coords[{c.id, k}] = Scalar(feed.take());
                *used_generic = true;
            }
        }
    }

    // Column layout: one block per component in listed order.
    std::map<std::string, std::size_t> offset;
    std::size_t total = 0;
    int h1_components = 0;
    for (const auto& c : graph.components) {
        SectionSpace s = section_space(c, bundle.at(c.id));
        offset[c.id] = total;
        total += static_cast<std::size_t>(s.dim);
        h1_components += s.h1;
    }

    ScalarMatrix m(graph.nodes.size(), std::vector<Scalar>(total, Scalar(0)));
    for (std::size_t k = 0; k < graph.nodes.size(); ++k) {
        const auto& n = graph.nodes[k];
        auto put = [&](const NodeEnd& end, const Scalar& sign) {
            const auto& comp = graph.component(end.component);
            auto col = evaluation_column(comp, bundle.at(comp.id), k, end.point, label_coords,
                                         elliptic_coords);
            for (std::size_t i = 0; i < col.size(); ++i)
                m[k][offset[comp.id] + i] += sign * col[i];
        };
        put(n.a, Scalar(1));
        put(n.b, Scalar(-1));
    }

    int rank = matrix_rank(m);
    int h0 = static_cast<int>(total) - rank;
    int h1 = (static_cast<int>(graph.nodes.size()) - rank) + h1_components;
    return {h0, h1};
}

}  // namespace

std::pair<int, int> h0_h1(const CurveGraph& graph, const BundleOnCurve& bundle) {
    graph.validate();
    for (const auto& c : graph.components)
        bundle.at(c.id);  // every component must carry data

    bool used_generic = false;
    auto primary = h0_h1_pass(graph, bundle, kPrimaryFeedStart, &used_generic);
    if (used_generic) {
        bool dummy = false;
        auto check = h0_h1_pass(graph, bundle, kValidationFeedStart, &dummy);
        if (check != primary)
            throw std::runtime_error(
                "h0_h1: rank disagreement between the two generic coordinate assignments");
    }
    return primary;
}

}  // namespace pushfwd
