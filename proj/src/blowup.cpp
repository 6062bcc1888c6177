#include "pushfwd/blowup.hpp"

#include <algorithm>
#include <stdexcept>

namespace pushfwd {

namespace {

std::string fresh_name(const std::string& base, std::set<std::string>& taken) {
    std::string candidate =
        base.size() > 1 && base[0] == 't' ? "s" + base.substr(1) : base + "'";
    while (taken.count(candidate))
        candidate += "'";
    taken.insert(candidate);
    return candidate;
}

Monomial gcd_of_row(const std::vector<Monomial>& row) {
    Monomial g = row.front();
    for (std::size_t i = 1; i < row.size(); ++i)
        g = Monomial::gcd(g, row[i]);
    return g;
}

}  // namespace

void BlowupSpec::validate(const std::set<std::string>& universe) const {
    if (center.empty())
        throw std::invalid_argument("blowup center is empty");
    std::set<std::string> seen;
    for (const auto& c : center) {
        if (!seen.insert(c).second)
            throw std::invalid_argument("repeated center parameter " + c);
        if (!universe.count(c))
            throw std::invalid_argument("center parameter " + c + " not in the base universe");
    }
}

Monomial Chart::apply(const Monomial& m) const {
    Monomial out;
    for (const auto& [name, e] : m.exponents()) {
        auto it = substitution.find(name);
        if (it == substitution.end()) {
            out = out * Monomial::var(name, e);
        } else {
            for (int k = 0; k < e; ++k)
                out = out * it->second;
        }
    }
    return out;
}

std::vector<Monomial> Chart::apply_row(const std::vector<Monomial>& row) const {
    std::vector<Monomial> out;
    out.reserve(row.size());
    for (const auto& m : row)
        out.push_back(apply(m));
    return out;
}

std::map<std::string, Scalar> Chart::chart_point(const std::map<std::string, Scalar>& base_point,
                                                 const std::set<std::string>& universe) const {
    // Inverts t_pivoted = s_pivot, t_j = s_pivot * s_j; defined away
    // from the exceptional locus only.
    std::map<std::string, Scalar> out;
    for (const auto& name : universe)
        if (!substitution.count(name))
            out[name] = base_point.at(name);
    if (substitution.empty())
        return out;  // principal center, identity chart

    std::string pivoted;  // the original parameter mapped to the bare pivot
    for (const auto& [orig, image] : substitution)
        if (image == Monomial::var(pivot))
            pivoted = orig;
    Scalar pivot_value = base_point.at(pivoted);
    if (pivot_value == 0)
        throw std::domain_error("chart_point: base point lies on the exceptional locus");
    out[pivot] = pivot_value;
    for (const auto& [orig, image] : substitution) {
        if (orig == pivoted)
            continue;
        for (const auto& [name, e] : image.exponents())
            if (name != pivot)
                out[name] = base_point.at(orig) / pivot_value;
    }
    return out;
}

std::vector<Chart> charts(const BlowupSpec& spec, const std::set<std::string>& universe) {
    spec.validate(universe);
    std::vector<Chart> out;
    if (spec.center.size() == 1) {
        // A principal center is Cartier; the blowup is an isomorphism.
        Chart c;
        c.pivot = spec.center.front();
        out.push_back(std::move(c));
        return out;
    }
    for (const auto& pivot : spec.center) {
        std::set<std::string> taken = universe;
        std::map<std::string, std::string> fresh;
        for (const auto& c : spec.center)
            fresh[c] = fresh_name(c, taken);
        Chart chart;
        chart.pivot = fresh[pivot];
        for (const auto& c : spec.center) {
            if (c == pivot)
                chart.substitution[c] = Monomial::var(fresh[pivot]);
            else
                chart.substitution[c] = Monomial::var(fresh[pivot]) * Monomial::var(fresh[c]);
        }
        out.push_back(std::move(chart));
    }
    return out;
}

std::vector<Monomial> pullback_beta(const BetaMap& beta, const Chart& chart) {
    return chart.apply_row(beta.entries);
}

namespace {

FreenessVerdict decide_freeness(const std::vector<Monomial>& row, int degree_bound,
                                bool sweep_strata) {
    if (row.empty())
        throw std::invalid_argument("kernel_local_freeness: empty row");
    Monomial g = gcd_of_row(row);
    std::vector<Monomial> reduced;
    reduced.reserve(row.size());
    for (const auto& m : row)
        reduced.push_back(*m.divide(g));

    FreenessVerdict verdict;
    const int n = static_cast<int>(row.size());
    for (const auto& m : reduced) {
        if (m.is_one()) {
            // Unit entry e_j: v_i = e_i - m_i e_j is an explicit free
            // basis of the kernel.
            verdict.free = true;
            verdict.rank = n - 1;
            verdict.origin_dim = n - 1;
            verdict.generic_dim = n - 1;
            return verdict;
        }
    }

    std::set<std::string> varset;
    for (const auto& m : reduced)
        for (const auto& v : m.variables())
            varset.insert(v);
    std::vector<std::string> universe(varset.begin(), varset.end());
    auto generators = monomial_syzygies(reduced);

    auto dim_at = [&](const std::set<std::string>& stratum, std::size_t feed) {
        auto point = PointAssignment::generic(universe, stratum, feed);
        FiberDim fd = fiber_dim_of_submodule(generators, point, degree_bound);
        if (!fd.stabilized)
            throw std::runtime_error("kernel_local_freeness: fiber dimension did not stabilize");
        return fd.value;
    };
    auto dim_checked = [&](const std::set<std::string>& stratum) {
        int a = dim_at(stratum, kPrimaryFeedStart);
        int b = dim_at(stratum, kValidationFeedStart);
        if (a != b)
            throw std::runtime_error(
                "kernel_local_freeness: generic assignments disagree on a fiber dimension");
        return a;
    };

    std::set<std::string> all(varset.begin(), varset.end());
    verdict.origin_dim = dim_checked(all);
    verdict.generic_dim = dim_checked({});
    verdict.free = (verdict.origin_dim == verdict.generic_dim);

    if (sweep_strata && verdict.free) {
        std::vector<std::string> vars(varset.begin(), varset.end());
        for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << vars.size()); ++mask) {
            std::set<std::string> stratum;
            for (std::size_t j = 0; j < vars.size(); ++j)
                if (mask & (std::size_t{1} << j))
                    stratum.insert(vars[j]);
            if (dim_checked(stratum) != verdict.generic_dim) {
                verdict.free = false;
                break;
            }
        }
    }
    verdict.rank = verdict.free ? verdict.generic_dim : 0;
    return verdict;
}

}  // namespace

FreenessVerdict kernel_local_freeness(const std::vector<Monomial>& row, int degree_bound) {
    return decide_freeness(row, degree_bound, false);
}

FreenessVerdict kernel_local_freeness_sweep(const std::vector<Monomial>& row, int degree_bound) {
    return decide_freeness(row, degree_bound, true);
}

ResolveReport resolve_check(const FamilyConfig& config, std::vector<int> m,
                            const std::vector<BlowupSpec>& sequence, int degree_bound,
                            bool sweep) {
    auto model = pushforward(config, std::move(m));

    struct Leaf {
        std::vector<std::string> path;
        std::vector<Monomial> row;
        std::set<std::string> variables;
    };
    std::set<std::string> base_vars(model.universe.begin(), model.universe.end());
    std::vector<Leaf> leaves{{{}, model.beta.entries, base_vars}};

    for (const auto& spec : sequence) {
        std::vector<Leaf> next;
        for (const auto& leaf : leaves) {
            for (const auto& chart : charts(spec, leaf.variables)) {
                Leaf child;
                child.path = leaf.path;
                child.path.push_back(chart.pivot);
                child.row = chart.apply_row(leaf.row);
                child.variables = leaf.variables;
                for (const auto& [orig, image] : chart.substitution) {
                    child.variables.erase(orig);
                    for (const auto& [name, e] : image.exponents())
                        child.variables.insert(name);
                }
                next.push_back(std::move(child));
            }
        }
        leaves = std::move(next);
    }

    ResolveReport report;
    report.resolved = true;
    for (const auto& leaf : leaves) {
        ChartVerdict cv;
        cv.path = leaf.path;
        cv.row = leaf.row;
        cv.verdict = sweep ? kernel_local_freeness_sweep(leaf.row, degree_bound)
                           : kernel_local_freeness(leaf.row, degree_bound);
        report.resolved = report.resolved && cv.verdict.free;
        report.charts.push_back(std::move(cv));
    }
    return report;
}

}  // namespace pushfwd
