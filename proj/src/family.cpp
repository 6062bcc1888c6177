#include "pushfwd/family.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace pushfwd {

namespace {

// Ghost tree of a configuration: every ghost parameter has a unique
// parent (the previous chain entry, or the core).
struct GhostTree {
    static constexpr const char* kCore = "";
    std::vector<std::string> ghosts;               // first-appearance order
    std::map<std::string, std::string> parent_of;  // ghost -> parent ghost or kCore

    static GhostTree build(const FamilyConfig& config) {
        GhostTree tree;
        for (const auto& tail : config.tails) {
            std::string prev = kCore;
            for (const auto& g : tail.chain) {
                auto it = tree.parent_of.find(g);
                if (it == tree.parent_of.end()) {
                    tree.parent_of[g] = prev;
                    tree.ghosts.push_back(g);
                } else if (it->second != prev) {
                    throw std::invalid_argument("ghost parameter " + g +
                                                " is attached inconsistently across chains");
                }
                prev = g;
            }
        }
        return tree;
    }
};

std::vector<int> resolve_multiplicities(const FamilyConfig& config, std::vector<int> m) {
    if (m.empty()) {
        for (const auto& tail : config.tails)
            m.push_back(tail.multiplicity);
    }
    if (m.size() != config.tails.size())
        throw std::invalid_argument("multiplicity vector length does not match the tail count");
    return m;
}

}  // namespace

std::vector<std::string> FamilyConfig::universe() const {
    std::vector<std::string> out;
    std::set<std::string> seen;
    for (const auto& tail : tails) {
        if (seen.insert(tail.parameter).second)
            out.push_back(tail.parameter);
    }
    for (const auto& tail : tails)
        for (const auto& g : tail.chain)
            if (seen.insert(g).second)
                out.push_back(g);
    return out;
}

const TailSpec& FamilyConfig::tail(const std::string& parameter) const {
    for (const auto& t : tails)
        if (t.parameter == parameter)
            return t;
    throw std::invalid_argument("no tail with parameter " + parameter);
}

void FamilyConfig::validate() const {
    if (tails.empty())
        throw std::invalid_argument("configuration has no tails");
    std::set<std::string> tail_params;
    for (const auto& t : tails) {
        if (t.parameter.empty())
            throw std::invalid_argument("tail with empty parameter name");
        if (!tail_params.insert(t.parameter).second)
            throw std::invalid_argument("duplicate tail parameter " + t.parameter);
    }
    for (const auto& t : tails)
        for (const auto& g : t.chain)
            if (tail_params.count(g))
                throw std::invalid_argument("parameter " + g +
                                            " is used both as a tail and as a ghost");
    GhostTree::build(*this);  // throws on inconsistent sharing
}

MultiDegree TwistClass::as_multidegree(const std::vector<std::string>& universe) const {
    std::vector<int> d(universe.size(), 0);
    for (const auto& [name, k] : vanishing) {
        auto it = std::find(universe.begin(), universe.end(), name);
        if (it == universe.end())
            throw std::invalid_argument("twist parameter " + name + " not in the universe");
        d[static_cast<std::size_t>(it - universe.begin())] = -k;
    }
    return MultiDegree(d);
}

Monomial TwistClass::principal_monomial() const {
    Monomial m;
    for (const auto& [name, k] : vanishing)
        m = m * Monomial::var(name, k);
    return m;
}

std::string TwistClass::str(BaseMode mode) const {
    if (is_trivial())
        return "O";
    std::string out = "O(";
    bool first = true;
    for (const auto& [name, k] : vanishing) {
        if (!first)
            out += (mode == BaseMode::LocalAffine ? " - " : "-");
        else
            out += "-";
        first = false;
        if (k != 1)
            out += std::to_string(k);
        out += "V(" + name + ")";
    }
    return out + ")";
}

int PushforwardModel::total_multiplicity() const {
    int total = 0;
    for (int mi : multiplicities)
        total += mi;
    return total;
}

BetaMap beta_map(const FamilyConfig& config) {
    config.validate();
    BetaMap beta;
    for (const auto& tail : config.tails) {
        Monomial entry = Monomial::var(tail.parameter);
        for (const auto& g : tail.chain)
            entry = entry * Monomial::var(g);
        beta.entries.push_back(entry);
    }
    return beta;
}

std::vector<TwistClass> pushforward_with_D(const FamilyConfig& config, std::vector<int> m) {
    config.validate();
    m = resolve_multiplicities(config, m);
    for (int mi : m)
        if (mi <= 0)
            throw std::invalid_argument("pushforward_with_D requires all multiplicities >= 1");

    std::vector<TwistClass> out;
    out.push_back(TwistClass{});  // the structure sheaf
    for (std::size_t i = 0; i < config.tails.size(); ++i) {
        for (int k = 1; k <= m[i]; ++k) {
            TwistClass tw;
            tw.vanishing[config.tails[i].parameter] = k;
            for (const auto& g : config.tails[i].chain)
                tw.vanishing[g] = k;
            out.push_back(std::move(tw));
        }
    }
    return out;
}

PushforwardModel pushforward(const FamilyConfig& config, std::vector<int> m) {
    config.validate();
    m = resolve_multiplicities(config, m);
    for (int mi : m)
        if (mi < 0)
            throw std::invalid_argument("negative multiplicity");

    PushforwardModel model;
    // Zero-multiplicity tails do not affect the sheaf; drop them.
    FamilyConfig reduced = config;
    reduced.tails.clear();
    for (std::size_t i = 0; i < config.tails.size(); ++i) {
        if (m[i] == 0) {
            model.notes.push_back("dropped zero-multiplicity tail " + config.tails[i].parameter);
            continue;
        }
        reduced.tails.push_back(config.tails[i]);
        model.multiplicities.push_back(m[i]);
    }
    if (reduced.tails.empty())
        throw std::invalid_argument("all multiplicities are zero");
    reduced.validate();

    model.config = reduced;
    model.universe = reduced.universe();
    model.beta = beta_map(reduced);
    for (std::size_t i = 0; i < reduced.tails.size(); ++i) {
        TwistClass base;
        base.vanishing[reduced.tails[i].parameter] = 1;
        for (const auto& g : reduced.tails[i].chain)
            base.vanishing[g] = 1;
        model.v1.push_back(base);
    }
    model.v_m0.push_back(TwistClass{});
    for (std::size_t i = 0; i < reduced.tails.size(); ++i) {
        for (int k = 2; k <= model.multiplicities[i]; ++k) {
            TwistClass tw;
            for (const auto& [name, one] : model.v1[i].vanishing)
                tw.vanishing[name] = k;
            model.v_m0.push_back(std::move(tw));
        }
    }
    model.kernel_generators = model.beta.entries.size() > 1
                                  ? monomial_syzygies(model.beta.entries)
                                  : std::vector<std::vector<Polynomial>>{};
    return model;
}

int fiber_rank(const PushforwardModel& model, const PointAssignment& point, int degree_bound) {
    point.validate();
    for (const auto& name : model.universe)
        if (!point.values.count(name))
            throw std::invalid_argument("fiber_rank: point misses parameter " + name);
    FiberDim kernel{0, true};
    if (!model.kernel_generators.empty())
        kernel = fiber_dim_of_submodule(model.kernel_generators, point, degree_bound);
    if (!kernel.stabilized)
        throw std::runtime_error("fiber_rank: fiber dimension did not stabilize at bound " +
                                 std::to_string(degree_bound));
    return static_cast<int>(model.v_m0.size()) + kernel.value;
}

int generic_fiber_rank(const PushforwardModel& model, int degree_bound) {
    auto a = fiber_rank(model, PointAssignment::generic(model.universe, {}, kPrimaryFeedStart),
                        degree_bound);
    auto b = fiber_rank(model, PointAssignment::generic(model.universe, {}, kValidationFeedStart),
                        degree_bound);
    if (a != b)
        throw std::runtime_error("generic_fiber_rank: the two generic assignments disagree");
    return a;
}

R1Model r1_model(const FamilyConfig& config, std::vector<int> m) {
    auto model = pushforward(config, std::move(m));
    R1Model out;
    for (const auto& tail : model.config.tails)
        out.tail_stratum.insert(tail.parameter);

    // Minimal primes of the monomial entry ideal: minimal hitting sets
    // of the entry supports.
    std::vector<std::set<std::string>> supports;
    std::vector<std::string> vars;
    std::set<std::string> seen;
    for (const auto& entry : model.beta.entries) {
        supports.push_back(entry.variables());
        for (const auto& v : supports.back())
            if (seen.insert(v).second)
                vars.push_back(v);
    }
    std::vector<std::set<std::string>> primes;
    for (std::size_t mask = 1; mask < (std::size_t{1} << vars.size()); ++mask) {
        std::set<std::string> candidate;
        for (std::size_t j = 0; j < vars.size(); ++j)
            if (mask & (std::size_t{1} << j))
                candidate.insert(vars[j]);
        bool hits_all = true;
        for (const auto& s : supports) {
            bool hit = false;
            for (const auto& v : candidate)
                if (s.count(v)) {
                    hit = true;
                    break;
                }
            if (!hit) {
                hits_all = false;
                break;
            }
        }
        if (!hits_all)
            continue;
        bool contains_kept = false;
        for (const auto& p : primes)
            if (std::includes(candidate.begin(), candidate.end(), p.begin(), p.end())) {
                contains_kept = true;
                break;
            }
        if (!contains_kept)
            primes.push_back(std::move(candidate));
    }
    std::sort(primes.begin(), primes.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a < b;
    });
    out.support = std::move(primes);

    // Length one along each component: every variable of the prime is
    // realized exactly (exponent one) by some entry localized there.
    for (const auto& prime : out.support) {
        for (const auto& v : prime) {
            bool realized = false;
            for (const auto& entry : model.beta.entries) {
                Monomial localized;
                for (const auto& [name, e] : entry.exponents())
                    if (prime.count(name))
                        localized = localized * Monomial::var(name, e);
                if (localized == Monomial::var(v)) {
                    realized = true;
                    break;
                }
            }
            if (!realized)
                throw std::logic_error("r1_model: support component is not reduced at " + v);
        }
    }
    out.length = 1;
    return out;
}

TwistClass normal_bundle_of_section(const FamilyConfig& config, const std::string& tail_parameter) {
    config.validate();
    const TailSpec& tail = config.tail(tail_parameter);
    TwistClass tw;
    tw.vanishing[tail.parameter] = 1;
    for (const auto& g : tail.chain)
        tw.vanishing[g] = 1;
    return tw;
}

FiberCurve stratum_fiber(const FamilyConfig& config, const std::vector<int>& m,
                         const std::set<std::string>& stratum) {
    config.validate();
    auto mm = resolve_multiplicities(config, m);
    for (int mi : mm)
        if (mi < 1)
            throw std::invalid_argument("stratum_fiber requires multiplicities >= 1");
    auto universe = config.universe();
    for (const auto& name : stratum)
        if (std::find(universe.begin(), universe.end(), name) == universe.end())
            throw std::invalid_argument("unrecognized stratum parameter " + name);

    GhostTree tree = GhostTree::build(config);

    // Central-fiber components and the smoothing parameter of every node.
    struct Edge {
        std::string parent, child, parameter;
    };
    std::vector<std::string> comps{"core"};
    auto ghost_id = [](const std::string& g) { return "ghost:" + g; };
    auto tail_id = [](const std::string& t) { return "tail:" + t; };
    std::map<std::string, int> degree{{"core", 0}};
    std::map<std::string, int> genus{{"core", 1}};
    std::vector<Edge> edges;
    for (const auto& g : tree.ghosts) {
        comps.push_back(ghost_id(g));
        degree[ghost_id(g)] = 0;
        genus[ghost_id(g)] = 0;
        const std::string& parent = tree.parent_of[g];
        edges.push_back({parent == GhostTree::kCore ? "core" : ghost_id(parent), ghost_id(g), g});
    }
    for (std::size_t i = 0; i < config.tails.size(); ++i) {
        const auto& tail = config.tails[i];
        comps.push_back(tail_id(tail.parameter));
        degree[tail_id(tail.parameter)] = mm[i];
        genus[tail_id(tail.parameter)] = 0;
        std::string parent = tail.chain.empty() ? "core" : ghost_id(tail.chain.back());
        edges.push_back({parent, tail_id(tail.parameter), tail.parameter});
    }

    // Merge across smoothed nodes (parameter not in the stratum).
    std::map<std::string, std::string> rep;
    for (const auto& c : comps)
        rep[c] = c;
    std::function<std::string(const std::string&)> find = [&](const std::string& x) {
        return rep[x] == x ? x : rep[x] = find(rep[x]);
    };
    for (const auto& e : edges)
        if (!stratum.count(e.parameter))
            rep[find(e.child)] = find(e.parent);

    std::map<std::string, int> group_degree, group_genus;
    std::vector<std::string> group_order;
    for (const auto& c : comps) {
        std::string g = find(c);
        if (!group_degree.count(g)) {
            group_degree[g] = 0;
            group_genus[g] = 0;
            group_order.push_back(g);
        }
        group_degree[g] += degree[c];
        group_genus[g] = std::max(group_genus[g], genus[c]);
    }

    FiberCurve out;
    for (const auto& g : group_order)
        out.graph.components.push_back({g, group_genus[g]});

    // Attachment labels per group: [1,0], then [0,1], then fresh named
    // positions; elliptic groups always take named positions.  Names
    // are globally unique so no two points share a coordinate.
    std::map<std::string, int> label_count;
    int fresh = 0;
    auto next_label = [&](const std::string& group, const std::string& param) {
        int n = label_count[group]++;
        if (group_genus[group] == 1)
            return PointLabel::generic("q_" + param);
        if (n == 0)
            return PointLabel::zero();
        if (n == 1)
            return PointLabel::infinity();
        return PointLabel::generic("p" + std::to_string(fresh++));
    };
    std::vector<Edge> persistent;
    for (const auto& e : edges)
        if (stratum.count(e.parameter))
            persistent.push_back(e);
    std::sort(persistent.begin(), persistent.end(),
              [](const Edge& a, const Edge& b) { return a.parameter < b.parameter; });
    for (const auto& e : persistent) {
        std::string ga = find(e.parent), gb = find(e.child);
        CurveNode node;
        node.a = {ga, next_label(ga, e.parameter)};
        node.b = {gb, next_label(gb, e.parameter)};
        out.graph.nodes.push_back(node);
    }

    for (const auto& g : group_order) {
        ComponentBundle b;
        b.degree = group_degree[g];
        b.trivial = (group_genus[g] == 1 && group_degree[g] == 0);
        out.bundle.per_component[g] = b;
    }
    return out;
}

BaseChangeReport base_change_check(const FamilyConfig& config, std::vector<int> m,
                                   const PointAssignment& point, int degree_bound) {
    auto model = pushforward(config, resolve_multiplicities(config, std::move(m)));
    point.validate();

    BaseChangeReport report;
    report.stratum = point.stratum;
    report.module_fiber = fiber_rank(model, point, degree_bound);
    report.generic_rank = generic_fiber_rank(model, degree_bound);

    FiberCurve fiber = stratum_fiber(model.config, model.multiplicities, point.stratum);
    auto [h0, h1] = h0_h1(fiber.graph, fiber.bundle);
    report.h0 = h0;
    report.h1 = h1;
    report.euler = euler_char(fiber.graph, fiber.bundle);
    report.equal = (report.module_fiber == report.h0);
    report.semicontinuous = (report.module_fiber >= report.generic_rank);
    if (h1 == 0)
        report.verdict = report.equal ? "EQUAL" : "MISMATCH";
    else
        report.verdict = "JUMP";
    return report;
}

}  // namespace pushfwd
