#include "pushfwd/selftest.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "pushfwd/blowup.hpp"
#include "pushfwd/extension.hpp"
#include "pushfwd/family.hpp"

namespace pushfwd::accept {

namespace {

constexpr int kFiberBound = 4;  // stabilization is checked between 3 and 4

struct Checker {
    bool ok = true;
    int checks = 0;
    std::string first_failure;

    void expect(bool condition, const std::string& what) {
        ++checks;
        if (!condition && ok) {
            ok = false;
            first_failure = what;
        }
    }
};

std::string vec_str(const std::vector<int>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? "," : "") + std::to_string(v[i]);
    return out + ")";
}

FamilyConfig make_config(const std::string& name, BaseMode mode,
                         std::vector<std::pair<std::string, std::vector<std::string>>> tails) {
    FamilyConfig config;
    config.name = name;
    config.mode = mode;
    for (auto& [param, chain] : tails)
        config.tails.push_back(TailSpec{param, 1, chain});
    return config;
}

// The configurations swept by the fiber-rank criterion: tails with
// multiplicities up to three, ghost chains of length up to two, shared
// and fresh ghosts.
std::vector<FamilyConfig> sweep_configs() {
    std::vector<FamilyConfig> out;
    out.push_back(make_config("r1", BaseMode::LocalAffine, {{"t1", {}}}));
    out.push_back(make_config("r2", BaseMode::LocalAffine, {{"t1", {}}, {"t2", {}}}));
    out.push_back(
        make_config("r3", BaseMode::LocalAffine, {{"t1", {}}, {"t2", {}}, {"t3", {}}}));
    out.push_back(make_config("r4", BaseMode::LocalAffine,
                              {{"t1", {}}, {"t2", {}}, {"t3", {}}, {"t4", {}}}));
    out.push_back(
        make_config("oabc", BaseMode::LocalAffine, {{"t_b", {"t_a"}}, {"t_c", {"t_a"}}}));
    out.push_back(
        make_config("r2-fresh1", BaseMode::LocalAffine, {{"t1", {"a1"}}, {"t2", {"a2"}}}));
    out.push_back(make_config("r2-fresh2", BaseMode::LocalAffine,
                              {{"t1", {"a1", "a2"}}, {"t2", {"a3", "a4"}}}));
    out.push_back(make_config("r2-shared2", BaseMode::LocalAffine,
                              {{"t1", {"a", "b"}}, {"t2", {"a", "b"}}}));
    out.push_back(make_config("r3-shared", BaseMode::LocalAffine,
                              {{"t1", {"a"}}, {"t2", {"a"}}, {"t3", {"a"}}}));
    out.push_back(make_config("r3-mixed", BaseMode::LocalAffine,
                              {{"t1", {}}, {"t2", {"a"}}, {"t3", {"a", "b"}}}));
    out.push_back(make_config("r4-shared", BaseMode::LocalAffine,
                              {{"t1", {"a"}}, {"t2", {"a"}}, {"t3", {"a"}}, {"t4", {"a"}}}));
    return out;
}

std::vector<std::vector<int>> multiplicity_sweep(std::size_t r) {
    std::vector<std::vector<int>> out;
    // Full 1..3 grid for small r, representative vectors beyond.
    if (r <= 3) {
        std::vector<int> m(r, 1);
        while (true) {
            out.push_back(m);
            std::size_t i = 0;
            while (i < r && m[i] == 3)
                m[i++] = 1;
            if (i == r)
                break;
            ++m[i];
        }
    } else {
        out = {{1, 1, 1, 1}, {3, 3, 3, 3}, {1, 2, 3, 1}, {2, 1, 1, 3}};
    }
    return out;
}

std::vector<std::set<std::string>> strata_of(const std::vector<std::string>& universe) {
    std::vector<std::set<std::string>> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << universe.size()); ++mask) {
        std::set<std::string> s;
        for (std::size_t j = 0; j < universe.size(); ++j)
            if (mask & (std::size_t{1} << j))
                s.insert(universe[j]);
        out.push_back(std::move(s));
    }
    return out;
}

// ---- criterion 1: the one-tail decomposition ----

CriterionResult criterion_one_tail() {
    Checker c;
    for (int m = 1; m <= 6; ++m) {
        auto config = make_config("one-tail", BaseMode::Multiprojective, {{"t", {}}});
        auto model = pushforward(config, {m});
        std::multiset<int> degrees;
        for (const auto& tw : model.v_m0)
            degrees.insert(tw.as_multidegree(model.universe).degrees[0]);
        c.expect(model.kernel_generators.empty(), "m=" + std::to_string(m) + ": kernel not zero");
        std::multiset<int> expected{0};
        for (int k = 2; k <= m; ++k)
            expected.insert(-k);
        c.expect(degrees == expected,
                 "m=" + std::to_string(m) + ": summands differ from {0,-2,...,-m}");
        c.expect(model.v1.size() == 1 &&
                     model.v1[0].as_multidegree(model.universe).degrees[0] == -1,
                 "m=" + std::to_string(m) + ": beta domain is not the degree -1 summand");
        c.expect(model.beta.entries.size() == 1 &&
                     model.beta.entries[0] == Monomial::var("t"),
                 "m=" + std::to_string(m) + ": beta is not (t)");
        auto r1 = r1_model(config, {m});
        c.expect(r1.support.size() == 1 && r1.support[0] == std::set<std::string>{"t"} &&
                     r1.length == 1,
                 "m=" + std::to_string(m) + ": R1 is not the length-one skyscraper at p");
    }
    return {1, "one-tail pushforward decomposition",
            c.ok, c.ok ? std::to_string(c.checks) + " checks" : c.first_failure};
}

// ---- criterion 2: splitting certificates ----

CriterionResult criterion_splitting() {
    Checker c;
    // Rank-one base: quotient O(-m-1) against the full column of
    // summands O(0..-m.
    for (int m = 0; m <= 6; ++m) {
        std::vector<MultiDegree> subs;
        for (int i = 0; i <= m; ++i)
            subs.push_back(MultiDegree({-i}));
        c.expect(splitting_obstruction(MultiDegree({-m - 1}), subs) == 0,
                 "rank-one step m=" + std::to_string(m));
    }
    // Product bases: each inductive step raises one slot; the
    // extension it must split has the new twist against the structure
    // sheaf and the earlier twists of the same slot.
    for (int r = 2; r <= 4; ++r) {
        for (int slot = 0; slot < r; ++slot) {
            for (int b = 0; b < 3; ++b) {
                std::vector<int> q(static_cast<std::size_t>(r), 0);
                q[static_cast<std::size_t>(slot)] = -(b + 1);
                std::vector<MultiDegree> subs{MultiDegree(std::vector<int>(r, 0))};
                for (int k = 1; k <= b; ++k) {
                    std::vector<int> s(static_cast<std::size_t>(r), 0);
                    s[static_cast<std::size_t>(slot)] = -k;
                    subs.push_back(MultiDegree(s));
                }
                c.expect(splitting_obstruction(MultiDegree(q), subs) == 0,
                         "product step r=" + std::to_string(r) + " slot " +
                             std::to_string(slot) + " b=" + std::to_string(b));
            }
        }
    }
    // Chained classes: same inductive certificates for twists carried
    // by a tail divisor plus its ghost chain.
    for (const auto& config : sweep_configs()) {
        FamilyConfig proj = config;
        proj.mode = BaseMode::Multiprojective;
        auto universe = proj.universe();
        for (const auto& tail : proj.tails) {
            for (int b = 0; b < 3; ++b) {
                TwistClass quotient;
                quotient.vanishing[tail.parameter] = b + 1;
                for (const auto& g : tail.chain)
                    quotient.vanishing[g] = b + 1;
                std::vector<MultiDegree> subs{
                    MultiDegree(std::vector<int>(universe.size(), 0))};
                for (int k = 1; k <= b; ++k) {
                    TwistClass sub;
                    sub.vanishing[tail.parameter] = k;
                    for (const auto& g : tail.chain)
                        sub.vanishing[g] = k;
                    subs.push_back(sub.as_multidegree(universe));
                }
                c.expect(splitting_obstruction(quotient.as_multidegree(universe), subs) == 0,
                         "chained step " + config.name + "/" + tail.parameter + " b=" +
                             std::to_string(b));
            }
        }
    }
    // The deliberate non-split witness.
    c.expect(ext1(MultiDegree({0}), MultiDegree({-2})) == 1, "non-split witness");
    return {2, "splitting certificates", c.ok,
            c.ok ? std::to_string(c.checks) + " instances" : c.first_failure};
}

// ---- criterion 3: fiber ranks, base change, semicontinuity ----

CriterionResult criterion_fiber_ranks() {
    Checker c;
    int swept_strata = 0;
    for (const auto& config : sweep_configs()) {
        auto ones = std::vector<int>(config.tails.size(), 1);
        auto base_model = pushforward(config, ones);
        const auto& universe = base_model.universe;
        auto strata = strata_of(universe);

        // Kernel fiber dimensions do not depend on the multiplicities,
        // so compute them once per stratum with both prime feeds.
        std::map<std::set<std::string>, int> kernel_dim;
        for (const auto& stratum : strata) {
            int a = 0, b = 0;
            if (!base_model.kernel_generators.empty()) {
                auto fa = fiber_dim_of_submodule(
                    base_model.kernel_generators,
                    PointAssignment::generic(universe, stratum, kPrimaryFeedStart), kFiberBound);
                auto fb = fiber_dim_of_submodule(
                    base_model.kernel_generators,
                    PointAssignment::generic(universe, stratum, kValidationFeedStart),
                    kFiberBound);
                c.expect(fa.stabilized && fb.stabilized,
                         config.name + ": fiber dimension did not stabilize");
                c.expect(fa.value == fb.value,
                         config.name + ": prime feeds disagree on a fiber dimension");
                a = fa.value;
                b = fb.value;
            }
            (void)b;
            kernel_dim[stratum] = a;
        }

        for (const auto& m : multiplicity_sweep(config.tails.size())) {
            auto model = pushforward(config, m);
            int total = model.total_multiplicity();
            c.expect(generic_fiber_rank(model, kFiberBound) == total,
                     config.name + " m=" + vec_str(m) + ": generic rank != total multiplicity");
            for (const auto& stratum : strata) {
                ++swept_strata;
                int module = static_cast<int>(model.v_m0.size()) + kernel_dim[stratum];
                auto fiber = stratum_fiber(config, m, stratum);
                auto [h0, h1] = h0_h1(fiber.graph, fiber.bundle);
                int chi = euler_char(fiber.graph, fiber.bundle);
                std::string where = config.name + " m=" + vec_str(m) + " stratum {" +
                                    (stratum.empty() ? "" : *stratum.begin()) + "...}";
                c.expect(chi == total, where + ": chi != total multiplicity");
                c.expect(h0 - h1 == chi, where + ": h0 - h1 != chi");
                c.expect(module >= total, where + ": semicontinuity fails");
                if (h1 == 0)
                    c.expect(module == h0, where + ": base change equality fails off the jump locus");
                if (stratum.size() == universe.size()) {
                    c.expect(h0 == 1 + total, where + ": deepest-stratum h0 != 1 + total");
                    c.expect(h1 == 1, where + ": deepest-stratum h1 != 1");
                }
            }
        }

        // The full report path on the all-ones multiplicities.
        for (const auto& stratum : strata) {
            auto report = base_change_check(config, ones,
                                            PointAssignment::generic(universe, stratum),
                                            kFiberBound);
            c.expect(report.semicontinuous, config.name + ": report loses semicontinuity");
            c.expect(report.verdict != "MISMATCH", config.name + ": base-change mismatch");
            c.expect(report.module_fiber ==
                         static_cast<int>(base_model.v_m0.size()) + kernel_dim[stratum],
                     config.name + ": report fiber rank differs from the cached computation");
        }
    }
    return {3, "fiber ranks and base change across strata", c.ok,
            c.ok ? std::to_string(swept_strata) + " stratum checks" : c.first_failure};
}

// ---- criterion 4: syzygy oracle equivalence ----

CriterionResult criterion_syzygy_oracle() {
    Checker c;
    auto mono = [](std::initializer_list<std::pair<std::string, int>> factors) {
        Monomial m;
        for (const auto& [name, e] : factors)
            m = m * Monomial::var(name, e);
        return m;
    };
    std::vector<std::vector<Monomial>> rows = {
        {mono({{"t", 1}})},
        {mono({{"t1", 1}}), mono({{"t2", 1}})},
        {mono({{"t1", 1}}), mono({{"t2", 1}}), mono({{"t3", 1}})},
        {mono({{"t1", 1}}), mono({{"t2", 1}}), mono({{"t3", 1}}), mono({{"t4", 1}})},
        {mono({{"t1", 1}}), mono({{"t2", 1}}), mono({{"t3", 1}}), mono({{"t4", 1}}),
         mono({{"t5", 1}})},
        {mono({{"t_a", 1}, {"t_b", 1}}), mono({{"t_a", 1}, {"t_c", 1}})},
        {mono({{"t1", 1}, {"a", 1}, {"b", 1}}), mono({{"t2", 1}, {"a", 1}, {"b", 1}})},
        {mono({{"t1", 1}, {"a", 1}}), mono({{"t2", 1}, {"a", 1}}), mono({{"t3", 1}, {"a", 1}})},
        {mono({{"a", 1}, {"b", 1}}), mono({{"a", 1}, {"c", 1}}), mono({{"b", 1}, {"c", 1}})},
        {mono({{"a", 1}}), mono({{"a", 1}, {"b", 1}}), mono({{"b", 1}, {"c", 1}})},
        {mono({{"t1", 1}, {"a1", 1}, {"a2", 1}}), mono({{"t2", 1}, {"a3", 1}, {"a4", 1}})},
    };
    for (const auto& row : rows) {
        std::vector<Polynomial> poly_row;
        for (const auto& m : row)
            poly_row.push_back(Polynomial::from_monomial(m));
        auto generators = monomial_syzygies(row);
        auto brute = truncated_kernel_dim(poly_row, 6);
        std::string row_name;
        for (const auto& m : row)
            row_name += m.str() + ";";
        for (int d = 0; d <= 6; ++d) {
            int span = syzygy_span_dim(generators, poly_row, d);
            c.expect(span == brute.at(d), "row (" + row_name + ") degree " + std::to_string(d) +
                                              ": span " + std::to_string(span) + " != kernel " +
                                              std::to_string(brute.at(d)));
        }
    }
    return {4, "syzygy generators span the truncated kernel", c.ok,
            c.ok ? std::to_string(c.checks) + " degreewise comparisons" : c.first_failure};
}

// ---- criterion 5: the blowup proposition ----

CriterionResult criterion_blowup() {
    Checker c;
    struct Case {
        int r;
        int origin_dim;
        int generic_dim;
    };
    for (const auto& cs : {Case{3, 3, 2}, Case{4, 6, 3}}) {
        std::vector<std::pair<std::string, std::vector<std::string>>> tails;
        std::vector<std::string> center;
        for (int i = 1; i <= cs.r; ++i) {
            tails.push_back({"t" + std::to_string(i), {}});
            center.push_back("t" + std::to_string(i));
        }
        auto config = make_config("r" + std::to_string(cs.r), BaseMode::Multiprojective, tails);
        std::vector<int> ones(static_cast<std::size_t>(cs.r), 1);

        auto before = resolve_check(config, ones, {}, kFiberBound);
        c.expect(!before.resolved, "r=" + std::to_string(cs.r) + ": already resolved");
        c.expect(before.charts.size() == 1 && !before.charts[0].verdict.free &&
                     before.charts[0].verdict.origin_dim == cs.origin_dim &&
                     before.charts[0].verdict.generic_dim == cs.generic_dim,
                 "r=" + std::to_string(cs.r) + ": base verdict is not NOT_FREE(" +
                     std::to_string(cs.origin_dim) + "," + std::to_string(cs.generic_dim) + ")");

        auto after = resolve_check(config, ones, {BlowupSpec{center}}, kFiberBound);
        c.expect(after.resolved, "r=" + std::to_string(cs.r) + ": blowup did not resolve");
        c.expect(after.charts.size() == static_cast<std::size_t>(cs.r),
                 "r=" + std::to_string(cs.r) + ": wrong chart count");
        for (const auto& chart : after.charts)
            c.expect(chart.verdict.free && chart.verdict.rank == cs.r - 1,
                     "r=" + std::to_string(cs.r) + ": chart not free of rank r-1");
    }
    return {5, "kernel locally free after one blowup at the deepest stratum", c.ok,
            c.ok ? std::to_string(c.checks) + " checks" : c.first_failure};
}

// ---- criterion 6: extension reports ----

CriterionResult criterion_extensions() {
    Checker c;
    for (int m = 1; m <= 5; ++m) {
        auto report = extend_all(m, TwistSpec::none(), 5);
        c.expect(report.level1_dim == m + 1,
                 "m=" + std::to_string(m) + ": first-order dimension is not m+1");
        for (const auto& row : report.rows) {
            bool should_obstruct = (row.label == monomial_label(m, 1));
            c.expect(row.obstructed_at_level1 == should_obstruct,
                     "m=" + std::to_string(m) + ": " + row.label + " level-1 status wrong");
            c.expect(row.extends_through == (should_obstruct ? 0 : 5),
                     "m=" + std::to_string(m) + ": " + row.label + " does not extend through 5");
        }
        c.expect(static_cast<int>(report.rows.size()) == m + 1,
                 "m=" + std::to_string(m) + ": wrong central basis size");
        for (int d : report.obstruction_dims)
            c.expect(d == 0, "m=" + std::to_string(m) + ": nonzero obstruction space");

        auto twisted = extend_all(m, TwistSpec::d0_minus_d1(), 5);
        c.expect(static_cast<int>(twisted.rows.size()) == m,
                 "m=" + std::to_string(m) + ": twisted central basis is not u0^(m-1)u1..u1^m");
        for (const auto& row : twisted.rows) {
            c.expect(!row.obstructed_at_level1 && row.extends_through == 5,
                     "m=" + std::to_string(m) + ": twisted section " + row.label + " obstructed");
        }
        for (int d : twisted.obstruction_dims)
            c.expect(d == 0, "m=" + std::to_string(m) + ": twisted obstruction nonzero");
    }
    return {6, "extension of sections through level five", c.ok,
            c.ok ? std::to_string(c.checks) + " checks" : c.first_failure};
}

// ---- criterion 7: trivialization cocycle ----

CriterionResult criterion_cocycle() {
    Checker c;
    for (int m = 0; m <= 5; ++m) {
        auto t = standard_trivialization(m);
        c.expect(check_cocycle(t).ok, "m=" + std::to_string(m) + ": cocycle fails");
        auto mutations = exponent_mutations(t);
        c.expect(!mutations.empty(), "m=" + std::to_string(m) + ": no mutations enumerated");
        for (const auto& [what, mutated] : mutations)
            c.expect(!check_cocycle(mutated).ok,
                     "m=" + std::to_string(m) + ": mutation passes (" + what + ")");
    }
    return {7, "trivialization cocycle and its mutations", c.ok,
            c.ok ? std::to_string(c.checks) + " checks" : c.first_failure};
}

// ---- criterion 8: property suites ----

struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return state >> 33;
    }
    int range(int lo, int hi) {  // inclusive
        return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

CriterionResult criterion_properties() {
    Checker c;

    // Serre duality and the Euler product on (P1)^r.
    Rng rng(20240901);
    for (int trial = 0; trial < 500; ++trial) {
        int r = rng.range(1, 4);
        std::vector<int> a(static_cast<std::size_t>(r));
        for (auto& x : a)
            x = rng.range(-6, 6);
        MultiDegree d(a);
        auto h = h_multi(d);
        MultiDegree dual = -(d + MultiDegree(std::vector<int>(a.size(), 2)));
        auto hd = h_multi(dual);
        for (int k = 0; k <= r; ++k)
            c.expect(h[static_cast<std::size_t>(k)] == hd[static_cast<std::size_t>(r - k)],
                     "Serre duality fails at " + d.str());
        long long chi = 0, prod = 1;
        for (int k = 0; k <= r; ++k)
            chi += (k % 2 ? -1 : 1) * h[static_cast<std::size_t>(k)];
        for (int x : a)
            prod *= x + 1;
        c.expect(chi == prod, "Euler product fails at " + d.str());
    }

    // h0 - h1 equals the Euler characteristic on generated nodal
    // genus-one configurations.
    Rng curve_rng(77002211);
    for (int trial = 0; trial < 100; ++trial) {
        CurveGraph graph;
        BundleOnCurve bundle;
        int next_point = 0;
        std::map<std::string, int> points_used;
        auto attach_label = [&](const std::string& comp, int genus) {
            int n = points_used[comp]++;
            if (genus == 1)
                return PointLabel::generic("q" + std::to_string(next_point++));
            if (n == 0)
                return PointLabel::zero();
            if (n == 1)
                return PointLabel::infinity();
            return PointLabel::generic("p" + std::to_string(next_point++));
        };

        bool elliptic_core = curve_rng.range(0, 2) > 0;
        std::vector<std::string> core_ids;
        if (elliptic_core) {
            graph.components.push_back({"e", 1});
            core_ids = {"e"};
            int deg = curve_rng.range(-2, 3);
            ComponentBundle b;
            b.degree = deg;
            b.trivial = (deg == 0) ? (curve_rng.range(0, 1) == 1) : false;
            bundle.per_component["e"] = b;
        } else {
            int len = curve_rng.range(2, 3);
            for (int i = 0; i < len; ++i) {
                std::string id = "c" + std::to_string(i);
                graph.components.push_back({id, 0});
                bundle.per_component[id] = ComponentBundle{curve_rng.range(-2, 3), false, {}};
                core_ids.push_back(id);
            }
            for (int i = 0; i < len; ++i) {
                std::string from = core_ids[static_cast<std::size_t>(i)];
                std::string to = core_ids[static_cast<std::size_t>((i + 1) % len)];
                CurveNode node;
                node.a = {from, attach_label(from, 0)};
                node.b = {to, attach_label(to, 0)};
                graph.nodes.push_back(node);
            }
        }
        int n_tails = curve_rng.range(0, 3);
        for (int t = 0; t < n_tails; ++t) {
            std::string parent = core_ids[static_cast<std::size_t>(
                curve_rng.range(0, static_cast<int>(core_ids.size()) - 1))];
            int path = curve_rng.range(1, 2);
            for (int s = 0; s < path; ++s) {
                std::string id = "t" + std::to_string(t) + "_" + std::to_string(s);
                graph.components.push_back({id, 0});
                bundle.per_component[id] = ComponentBundle{curve_rng.range(-2, 3), false, {}};
                const auto& parent_comp = graph.component(parent);
                CurveNode node;
                node.a = {parent, attach_label(parent, parent_comp.genus)};
                node.b = {id, attach_label(id, 0)};
                graph.nodes.push_back(node);
                parent = id;
            }
        }
        auto [h0, h1] = h0_h1(graph, bundle);
        c.expect(h0 - h1 == euler_char(graph, bundle),
                 "h0 - h1 != chi on generated configuration " + std::to_string(trial));
    }

    // Gcd invariance of the kernel freeness verdict.
    Rng row_rng(431);
    const std::vector<std::string> vars = {"a", "b", "c", "d"};
    for (int trial = 0; trial < 50; ++trial) {
        int n = row_rng.range(2, 4);
        std::vector<Monomial> row;
        for (int i = 0; i < n; ++i) {
            Monomial m;
            int factors = row_rng.range(1, 2);
            for (int f = 0; f < factors; ++f)
                m = m * Monomial::var(vars[static_cast<std::size_t>(row_rng.range(0, 3))]);
            row.push_back(m);
        }
        Monomial g = Monomial::var(vars[static_cast<std::size_t>(row_rng.range(0, 3))],
                                   row_rng.range(1, 2));
        std::vector<Monomial> scaled;
        for (const auto& m : row)
            scaled.push_back(m * g);
        auto v1 = kernel_local_freeness(row, kFiberBound);
        auto v2 = kernel_local_freeness(scaled, kFiberBound);
        c.expect(v1.free == v2.free && v1.rank == v2.rank && v1.origin_dim == v2.origin_dim &&
                     v1.generic_dim == v2.generic_dim,
                 "gcd invariance fails on trial " + std::to_string(trial));
    }

    return {8, "property suites (duality, gluing, gcd invariance)", c.ok,
            c.ok ? std::to_string(c.checks) + " checks" : c.first_failure};
}

}  // namespace

std::vector<CriterionResult> run_criteria() {
    return {
        criterion_one_tail(),      criterion_splitting(), criterion_fiber_ranks(),
        criterion_syzygy_oracle(), criterion_blowup(),    criterion_extensions(),
        criterion_cocycle(),       criterion_properties(),
    };
}

bool run_all(std::ostream& out) {
    bool ok = true;
    for (const auto& result : run_criteria()) {
        out << (result.pass ? "PASS" : "FAIL") << " " << result.index << " " << result.name
            << " (" << result.detail << ")\n";
        ok = ok && result.pass;
    }
    out << (ok ? "acceptance: all criteria passed" : "acceptance: FAILURES PRESENT") << "\n";
    return ok;
}

}  // namespace pushfwd::accept
