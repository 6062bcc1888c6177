#include "pushfwd/extension.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "pushfwd/nodalcurve.hpp"
#include "pushfwd/primes.hpp"

namespace pushfwd {

std::string monomial_label(int m, int i) {
    if (m < 0 || i < 0 || i > m)
        throw std::invalid_argument("monomial_label: bad exponents");
    int e0 = m - i, e1 = i;
    std::string out;
    if (e0 > 0)
        out += e0 == 1 ? "u0" : "u0^" + std::to_string(e0);
    if (e1 > 0) {
        if (!out.empty())
            out += "*";
        out += e1 == 1 ? "u1" : "u1^" + std::to_string(e1);
    }
    return out.empty() ? "1" : out;
}

std::vector<std::string> central_sections(int m, TwistSpec twist) {
    if (m < 1)
        throw std::invalid_argument("central_sections: m must be >= 1");
    std::vector<std::string> out;
    for (int i = twist.twisted() ? 1 : 0; i <= m; ++i)
        out.push_back(monomial_label(m, i));
    return out;
}

ThickenedSectionSpace elliptic_side_space(int m, TwistSpec twist) {
    if (m < 1)
        throw std::invalid_argument("elliptic_side_space: m must be >= 1");
    ThickenedSectionSpace space;
    space.level = 1;
    if (!twist.twisted()) {
        // a + b t with t restricting to zero in k[u1]/(u1^2).
        space.basis_labels = {"1", "t"};
        space.evaluation = {{Scalar(1), Scalar(0)}, {Scalar(0), Scalar(0)}};
    } else {
        // The generator s of the twisted doubled sections has image u1.
        space.basis_labels = {"s"};
        space.evaluation = {{Scalar(0), Scalar(1)}};
    }
    return space;
}

ThickenedSectionSpace rational_side_space(int m, TwistSpec twist, int level) {
    if (m < 1 || level < 1)
        throw std::invalid_argument("rational_side_space: bad arguments");
    ThickenedSectionSpace space;
    space.level = level;
    for (int i = twist.twisted() ? 1 : 0; i <= m; ++i) {
        space.basis_labels.push_back(monomial_label(m, i));
        std::vector<Scalar> row(static_cast<std::size_t>(level) + 1, Scalar(0));
        if (i <= level)
            row[static_cast<std::size_t>(i)] = Scalar(1);  // u1^i at the node
        space.evaluation.push_back(std::move(row));
    }
    return space;
}

namespace {

// Membership of each unit vector of the projected block in the image
// of the solution space.
std::vector<bool> projected_membership(const std::vector<std::vector<Scalar>>& kernel,
                                       std::size_t block_offset, std::size_t block_size) {
    ScalarMatrix image;
    for (const auto& v : kernel)
        image.emplace_back(v.begin() + static_cast<std::ptrdiff_t>(block_offset),
                           v.begin() + static_cast<std::ptrdiff_t>(block_offset + block_size));
    int base_rank = matrix_rank(image);
    std::vector<bool> member(block_size, false);
    for (std::size_t i = 0; i < block_size; ++i) {
        ScalarMatrix probe = image;
        std::vector<Scalar> e(block_size, Scalar(0));
        e[i] = Scalar(1);
        probe.push_back(std::move(e));
        member[i] = (matrix_rank(probe) == base_rank);
    }
    return member;
}

}  // namespace

ExtendOnceResult extend_once(int m, TwistSpec twist) {
    auto elliptic = elliptic_side_space(m, twist);
    auto rational = rational_side_space(m, twist, 1);

    // Unknowns: elliptic coefficients then rational coefficients;
    // one equation per power of u1 in the gluing ring.
    std::size_t ne = elliptic.basis_labels.size();
    std::size_t nr = rational.basis_labels.size();
    ScalarMatrix system(2, std::vector<Scalar>(ne + nr, Scalar(0)));
    for (std::size_t j = 0; j < 2; ++j) {
        for (std::size_t i = 0; i < ne; ++i)
            system[j][i] = elliptic.evaluation[i][j];
        for (std::size_t i = 0; i < nr; ++i)
            system[j][ne + i] = -rational.evaluation[i][j];
    }
    auto kernel = kernel_basis(system);
    auto member = projected_membership(kernel, ne, nr);

    ExtendOnceResult out;
    out.w1_dim = static_cast<int>(kernel.size());
    for (std::size_t i = 0; i < nr; ++i) {
        if (member[i])
            out.extendable.push_back(rational.basis_labels[i]);
        else
            out.obstructed.push_back(rational.basis_labels[i]);
    }
    return out;
}

int obstruction_space(int m, TwistSpec twist, int k) {
    if (m < 1 || k < 1)
        throw std::invalid_argument("obstruction_space: bad arguments");
    // Restriction to the central fiber of the bundle minus the
    // thickening divisor: the elliptic part is O_C(q) for the plain
    // bundle (the divisor is the node itself) and the nontrivial
    // degree-zero O_C(q0 - q1) for the twist; the rational part has
    // degree m - 1 either way.  The value does not depend on k.
    CurveGraph graph;
    graph.components = {{"C", 1}, {"Ca", 0}};
    CurveNode node;
    node.a = {"C", PointLabel::generic("q")};
    node.b = {"Ca", PointLabel::zero()};
    graph.nodes = {node};

    BundleOnCurve bundle;
    ComponentBundle elliptic;
    if (!twist.twisted()) {
        elliptic.degree = 1;
        elliptic.divisor_nodes = {0};
    } else {
        elliptic.degree = 0;
        elliptic.trivial = false;
    }
    bundle.per_component["C"] = elliptic;
    bundle.per_component["Ca"] = ComponentBundle{m - 1, false, {}};

    return h0_h1(graph, bundle).second;
}

ExtensionReport extend_all(int m, TwistSpec twist, int k_max) {
    if (k_max < 1)
        throw std::invalid_argument("extend_all: k_max must be >= 1");
    ExtensionReport report;
    report.m = m;
    report.twist = twist;
    report.k_max = k_max;

    auto once = extend_once(m, twist);
    report.level1_dim = once.w1_dim;
    for (int k = 1; k < k_max; ++k)
        report.obstruction_dims.push_back(obstruction_space(m, twist, k));
    bool unobstructed_above = std::all_of(report.obstruction_dims.begin(),
                                          report.obstruction_dims.end(),
                                          [](int d) { return d == 0; });

    for (const auto& label : central_sections(m, twist)) {
        ExtensionReport::Row row;
        row.label = label;
        row.tautological = (!twist.twisted() && label == monomial_label(m, 0));
        bool level1 =
            std::find(once.extendable.begin(), once.extendable.end(), label) != once.extendable.end();
        row.obstructed_at_level1 = !level1;
        if (row.tautological)
            row.extends_through = k_max;  // restriction of a global section
        else if (!level1)
            row.extends_through = 0;
        else
            row.extends_through = unobstructed_above ? k_max : 1;
        report.rows.push_back(std::move(row));
    }
    return report;
}

namespace {

// Coordinates of the two-variable overlap ring
// k[u1,z]/(u1^(level+1), z^level).
struct OverlapRing {
    int level;
    std::size_t size() const {
        return static_cast<std::size_t>(level + 1) * static_cast<std::size_t>(level);
    }
    // u1^a z^b -> column, or nothing when truncated away.
    std::optional<std::size_t> coord(int a, int b) const {
        if (a < 0 || b < 0 || a > level || b >= level)
            return std::nullopt;
        return static_cast<std::size_t>(a) * static_cast<std::size_t>(level) +
               static_cast<std::size_t>(b);
    }
};

ArtinianResult artinian_pass(int m, TwistSpec twist, int level, std::size_t feed_start) {
    OverlapRing ring{level};
    PrimeFeed feed(feed_start);

    // Elliptic side: layer j contributes t^j g with g running over a
    // basis of the sections with pole order <= j at the node (plus the
    // twist's forced vanishing elsewhere).  In local coordinates
    // t^j z^(-i) = u1^j z^(j-i); basis tails get generic coefficients.
    struct Column {
        std::map<std::size_t, Scalar> entries;
    };
    std::vector<Column> columns;
    auto add_elliptic = [&](int j, int pole) {
        Column col;
        auto put = [&](int a, int b, const Scalar& c) {
            if (auto idx = ring.coord(a, b))
                col.entries[*idx] += c;
        };
        put(j, j - pole, Scalar(1));
        if (pole > 0)  // generic holomorphic tail of the pole basis element
            for (int nu = 0; nu < level; ++nu)
                put(j, j + nu, Scalar(feed.take()));
        columns.push_back(std::move(col));
    };
    int n_elliptic = 0;
    for (int j = twist.twisted() ? 1 : 0; j <= level; ++j) {
        if (!twist.twisted()) {
            add_elliptic(j, 0);  // constants lift through every layer
            ++n_elliptic;
            for (int pole = 2; pole <= j; ++pole) {
                add_elliptic(j, pole);
                ++n_elliptic;
            }
        } else {
            for (int pole = 1; pole <= j; ++pole) {
                add_elliptic(j, pole);
                ++n_elliptic;
            }
        }
    }

    // Rational side: layer nu carries z^nu u1^i, i = 0..m+nu.
    std::vector<std::pair<int, int>> rational_index;  // (nu, i)
    for (int nu = 0; nu < level; ++nu)
        for (int i = 0; i <= m + nu; ++i) {
            Column col;
            if (auto idx = ring.coord(i, nu))
                col.entries[*idx] += Scalar(-1);  // minus: phi1 - phi2 = 0
            columns.push_back(std::move(col));
            rational_index.emplace_back(nu, i);
        }

    ScalarMatrix system(ring.size(), std::vector<Scalar>(columns.size(), Scalar(0)));
    for (std::size_t c = 0; c < columns.size(); ++c)
        for (const auto& [r, v] : columns[c].entries)
            system[r][c] = v;

    auto kernel = kernel_basis(system);

    // Membership of the central monomials inside the projection of the
    // solution space to the layer-zero block.
    std::size_t block = static_cast<std::size_t>(n_elliptic);
    auto member = projected_membership(kernel, block, static_cast<std::size_t>(m) + 1);

    ArtinianResult out;
    out.dim = static_cast<int>(kernel.size());
    for (int i = twist.twisted() ? 1 : 0; i <= m; ++i)
        if (member[static_cast<std::size_t>(i)])
            out.extendable.push_back(monomial_label(m, i));
    return out;
}

}  // namespace

ArtinianResult artinian_extension_oracle(int m, TwistSpec twist, int level) {
    if (m < 1 || level < 1 || level > 3)
        throw std::invalid_argument("artinian_extension_oracle: level must be 1..3");
    auto a = artinian_pass(m, twist, level, kPrimaryFeedStart);
    auto b = artinian_pass(m, twist, level, kValidationFeedStart);
    if (a.dim != b.dim || a.extendable != b.extendable)
        throw std::runtime_error("artinian_extension_oracle: generic tails disagree");
    return a;
}

LaurentMonomial LaurentMonomial::var(const std::string& name, int e) {
    LaurentMonomial out;
    if (e != 0)
        out.exps[name] = e;
    return out;
}

LaurentMonomial LaurentMonomial::operator*(const LaurentMonomial& o) const {
    LaurentMonomial out;
    out.coeff = coeff * o.coeff;
    out.exps = exps;
    for (const auto& [name, e] : o.exps) {
        int& slot = out.exps[name];
        slot += e;
        if (slot == 0)
            out.exps.erase(name);
    }
    return out;
}

LaurentMonomial LaurentMonomial::pow(int e) const {
    if (coeff == 0)
        throw std::domain_error("LaurentMonomial::pow of zero");
    LaurentMonomial out;
    Scalar base = e >= 0 ? coeff : Scalar(1) / coeff;
    int reps = e >= 0 ? e : -e;
    for (int k = 0; k < reps; ++k)
        out.coeff *= base;
    for (const auto& [name, ex] : exps)
        if (ex * e != 0)
            out.exps[name] = ex * e;
    return out;
}

LaurentMonomial LaurentMonomial::substituted(
    const std::map<std::string, LaurentMonomial>& rules) const {
    LaurentMonomial out;
    out.coeff = coeff;
    for (const auto& [name, e] : exps) {
        auto it = rules.find(name);
        if (it == rules.end())
            out = out * LaurentMonomial::var(name, e);
        else
            out = out * it->second.pow(e);
    }
    return out;
}

bool LaurentMonomial::operator==(const LaurentMonomial& o) const {
    return coeff == o.coeff && exps == o.exps;
}

std::string LaurentMonomial::str() const {
    std::string out = to_string(coeff);
    for (const auto& [name, e] : exps) {
        out += "*" + name;
        if (e != 1)
            out += "^" + std::to_string(e);
    }
    return out;
}

CocycleCheck check_cocycle(const Trivialization& t) {
    CocycleCheck result;
    auto fail = [&](const std::string& what) {
        if (result.ok) {
            result.ok = false;
            result.first_failure = what;
        }
    };

    for (const auto& [key, rules] : t.transitions)
        for (const auto& [coord, mon] : rules)
            if (mon.coeff == 0)
                fail("transition " + key.first + "->" + key.second + " kills " + coord);
    for (const auto& [key, g] : t.bundle)
        if (g.coeff == 0)
            fail("bundle transition " + key.first + "->" + key.second + " vanishes");
    if (!result.ok)
        return result;

    // Coordinate consistency: for charts i -> j -> k, substituting the
    // i->j rules into the j->k rules must reproduce the direct i->k map.
    for (const auto& [ij, rules_ij] : t.transitions) {
        for (const auto& [jk, rules_jk] : t.transitions) {
            if (ij.second != jk.first)
                continue;
            auto direct = t.transitions.find({ij.first, jk.second});
            if (direct == t.transitions.end())
                continue;
            for (const auto& [coord, mon] : rules_jk) {
                LaurentMonomial composed = mon.substituted(rules_ij);
                auto it = direct->second.find(coord);
                if (it == direct->second.end() || !(it->second == composed)) {
                    fail("coordinate " + coord + " disagrees along " + ij.first + "->" +
                         ij.second + "->" + jk.second);
                    return result;
                }
            }
        }
    }

    // Bundle cocycle g_ik = (g_jk transported to chart i) * g_ij.
    for (const auto& [ij, g_ij] : t.bundle) {
        for (const auto& [jk, g_jk] : t.bundle) {
            if (ij.second != jk.first)
                continue;
            auto direct = t.bundle.find({ij.first, jk.second});
            if (direct == t.bundle.end())
                continue;
            auto rules_ij = t.transitions.find(ij);
            if (rules_ij == t.transitions.end())
                continue;
            LaurentMonomial expected = g_jk.substituted(rules_ij->second) * g_ij;
            if (!(direct->second == expected)) {
                fail("bundle cocycle fails along " + ij.first + "->" + ij.second + "->" +
                     jk.second);
                return result;
            }
        }
    }
    return result;
}

Trivialization standard_trivialization(int m) {
    if (m < 0)
        throw std::invalid_argument("standard_trivialization: negative degree");
    Trivialization t;
    t.charts = {{"V0", {"u0", "z"}}, {"V1", {"u1", "t"}}, {"V2", {"z", "t"}}};
    // On the overlap u0*z = u1*t with u1 = 1/u0, so t = u0*z.
    t.transitions[{"V0", "V1"}] = {{"u1", LaurentMonomial::var("u0", -1)},
                                   {"t", LaurentMonomial::var("u0") * LaurentMonomial::var("z")}};
    t.transitions[{"V0", "V2"}] = {{"z", LaurentMonomial::var("z")},
                                   {"t", LaurentMonomial::var("u0") * LaurentMonomial::var("z")}};
    t.transitions[{"V1", "V2"}] = {{"z", LaurentMonomial::var("u1") * LaurentMonomial::var("t")},
                                   {"t", LaurentMonomial::var("t")}};
    // V1 and V2 share the trivializing section; V0 differs by the
    // standard degree-m factor (u1/u0)^m, which reads u0^(-m) in the
    // V0 chart where u1 = 1.
    t.bundle[{"V0", "V1"}] = LaurentMonomial::var("u0", -m);
    t.bundle[{"V1", "V2"}] = LaurentMonomial::one();
    t.bundle[{"V0", "V2"}] = LaurentMonomial::var("u0", -m);
    return t;
}

std::vector<std::pair<std::string, Trivialization>> exponent_mutations(const Trivialization& t) {
    std::vector<std::pair<std::string, Trivialization>> out;
    for (const auto& [key, rules] : t.transitions) {
        for (const auto& [coord, mon] : rules) {
            for (const auto& [name, e] : mon.exps) {
                Trivialization mutated = t;
                mutated.transitions[key][coord].exps[name] = e + 1;
                out.emplace_back("transition " + key.first + "->" + key.second + " coord " +
                                     coord + " exponent of " + name,
                                 std::move(mutated));
            }
        }
    }
    for (const auto& [key, g] : t.bundle) {
        for (const auto& [name, e] : g.exps) {
            Trivialization mutated = t;
            mutated.bundle[key].exps[name] = e + 1;
            out.emplace_back("bundle " + key.first + "->" + key.second + " exponent of " + name,
                             std::move(mutated));
        }
    }
    return out;
}

}  // namespace pushfwd
