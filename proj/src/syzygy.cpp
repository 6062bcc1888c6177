#include "pushfwd/syzygy.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace pushfwd {

namespace {

void collect_monomials(const std::vector<std::string>& universe, std::size_t index, int remaining,
                       Monomial acc, std::vector<Monomial>& out) {
    if (index == universe.size()) {
        if (remaining == 0)
            out.push_back(acc);
        return;
    }
    if (index + 1 == universe.size()) {
        out.push_back(acc * Monomial::var(universe[index], remaining));
        return;
    }
    for (int e = 0; e <= remaining; ++e)
        collect_monomials(universe, index + 1, remaining - e,
                          acc * Monomial::var(universe[index], e), out);
}

std::vector<std::string> row_universe(const std::vector<Polynomial>& row,
                                      std::vector<std::string> universe) {
    if (!universe.empty())
        return universe;
    std::set<std::string> vars;
    for (const auto& p : row)
        for (const auto& v : p.variables())
            vars.insert(v);
    return {vars.begin(), vars.end()};
}

int homogeneous_degree(const Polynomial& p) {
    if (p.is_zero())
        throw std::invalid_argument("row entry is zero");
    int d = p.terms().begin()->first.total_degree();
    for (const auto& [m, c] : p.terms())
        if (m.total_degree() != d)
            throw std::invalid_argument("row entry is not homogeneous");
    return d;
}

// Indexes the coefficient coordinates of a vector whose k-th component
// is homogeneous of degree D - deg(row_k).
struct GradedCoords {
    std::vector<std::vector<Monomial>> per_component;
    std::map<std::pair<std::size_t, Monomial>, std::size_t> index;
    std::size_t size = 0;

    GradedCoords(const std::vector<int>& entry_degrees, int product_degree,
                 const std::vector<std::string>& universe) {
        per_component.resize(entry_degrees.size());
        for (std::size_t k = 0; k < entry_degrees.size(); ++k) {
            int d = product_degree - entry_degrees[k];
            if (d < 0)
                continue;
            per_component[k] = monomials_of_degree(universe, d);
            for (const auto& m : per_component[k])
                index[{k, m}] = size++;
        }
    }
};

}  // namespace

std::vector<Monomial> monomials_of_degree(const std::vector<std::string>& universe, int d) {
    if (d < 0)
        return {};
    if (universe.empty())
        return d == 0 ? std::vector<Monomial>{Monomial::one()} : std::vector<Monomial>{};
    std::vector<Monomial> out;
    collect_monomials(universe, 0, d, Monomial::one(), out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Monomial> monomials_up_to_degree(const std::vector<std::string>& universe, int d) {
    std::vector<Monomial> out;
    for (int k = 0; k <= d; ++k) {
        auto part = monomials_of_degree(universe, k);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

std::vector<std::vector<Polynomial>> monomial_syzygies(const std::vector<Monomial>& row) {
    if (row.empty())
        throw std::invalid_argument("monomial_syzygies: empty row");
    std::vector<std::vector<Polynomial>> out;
    for (std::size_t i = 0; i < row.size(); ++i) {
        for (std::size_t j = i + 1; j < row.size(); ++j) {
            Monomial l = Monomial::lcm(row[i], row[j]);
            std::vector<Polynomial> v(row.size());
            v[i] = Polynomial::from_monomial(*l.divide(row[i]));
            v[j] = Polynomial::from_monomial(*l.divide(row[j]), Scalar(-1));
            out.push_back(std::move(v));
        }
    }
    return out;
}

std::map<int, int> truncated_kernel_dim(const std::vector<Polynomial>& row, int degree_bound,
                                        std::vector<std::string> universe) {
    if (degree_bound < 0)
        throw std::invalid_argument("truncated_kernel_dim: negative bound");
    universe = row_universe(row, std::move(universe));
    std::vector<int> degs;
    degs.reserve(row.size());
    for (const auto& p : row)
        degs.push_back(homogeneous_degree(p));

    std::map<int, int> out;
    for (int D = 0; D <= degree_bound; ++D) {
        GradedCoords coords(degs, D, universe);
        if (coords.size == 0) {
            out[D] = 0;
            continue;
        }
        // One constraint row per degree-D monomial of the product.
        auto product_monomials = monomials_of_degree(universe, D);
        std::map<Monomial, std::size_t> prod_index;
        for (std::size_t i = 0; i < product_monomials.size(); ++i)
            prod_index[product_monomials[i]] = i;

        SparseMatrix constraints;
        constraints.cols = coords.size;
        std::vector<std::map<std::size_t, Scalar>> rows(product_monomials.size());
        for (std::size_t k = 0; k < row.size(); ++k) {
            for (const auto& vm : coords.per_component[k]) {
                std::size_t col = coords.index.at({k, vm});
                for (const auto& [rm, rc] : row[k].terms())
                    rows[prod_index.at(rm * vm)][col] += rc;
            }
        }
        for (auto& r : rows) {
            std::erase_if(r, [](const auto& kv) { return kv.second == 0; });
            if (!r.empty())
                constraints.add_row(std::move(r));
        }
        out[D] = static_cast<int>(coords.size) - sparse_rank(std::move(constraints));
    }
    return out;
}

int syzygy_span_dim(const std::vector<std::vector<Polynomial>>& generators,
                    const std::vector<Polynomial>& row, int product_degree,
                    std::vector<std::string> universe) {
    universe = row_universe(row, std::move(universe));
    std::vector<int> degs;
    degs.reserve(row.size());
    for (const auto& p : row)
        degs.push_back(homogeneous_degree(p));
    GradedCoords coords(degs, product_degree, universe);
    if (coords.size == 0)
        return 0;

    SparseMatrix span;
    span.cols = coords.size;
    for (const auto& gen : generators) {
        if (gen.size() != row.size())
            throw std::invalid_argument("syzygy_span_dim: generator length mismatch");
        // Product degree of the generator: deg(gen_k) + deg(row_k),
        // read off any nonzero component.
        int gdeg = -1;
        for (std::size_t k = 0; k < gen.size(); ++k)
            if (!gen[k].is_zero())
                gdeg = homogeneous_degree(gen[k]) + degs[k];
        if (gdeg < 0 || gdeg > product_degree)
            continue;
        for (const auto& mult : monomials_of_degree(universe, product_degree - gdeg)) {
            std::map<std::size_t, Scalar> r;
            for (std::size_t k = 0; k < gen.size(); ++k)
                for (const auto& [m, c] : gen[k].terms())
                    r[coords.index.at({k, m * mult})] += c;
            std::erase_if(r, [](const auto& kv) { return kv.second == 0; });
            if (!r.empty())
                span.add_row(std::move(r));
        }
    }
    return sparse_rank(std::move(span));
}

FiberDim fiber_dim_of_submodule(const std::vector<std::vector<Polynomial>>& generators,
                                const PointAssignment& point, int degree_bound) {
    if (degree_bound < 2)
        throw std::invalid_argument("fiber_dim_of_submodule: degree bound must be >= 2");
    if (generators.empty())
        return {0, true};

    point.validate();
    std::size_t ncomp = generators.front().size();
    std::set<std::string> varset;
    for (const auto& gen : generators) {
        if (gen.size() != ncomp)
            throw std::invalid_argument("fiber_dim_of_submodule: ragged generators");
        for (const auto& p : gen)
            for (const auto& v : p.variables())
                varset.insert(v);
    }
    std::vector<std::string> universe(varset.begin(), varset.end());

    // Translate the point to the origin.
    std::vector<std::vector<Polynomial>> shifted;
    shifted.reserve(generators.size());
    for (const auto& gen : generators) {
        std::vector<Polynomial> g;
        g.reserve(ncomp);
        for (const auto& p : gen)
            g.push_back(p.shifted(point.values));
        shifted.push_back(std::move(g));
    }

    auto dim_at = [&](int D) -> int {
        auto mons = monomials_up_to_degree(universe, D);
        std::map<Monomial, std::size_t> midx;
        for (std::size_t i = 0; i < mons.size(); ++i)
            midx[mons[i]] = i;
        auto coord = [&](std::size_t comp, const Monomial& m) {
            return comp * mons.size() + midx.at(m);
        };
        auto truncate_row = [&](const std::vector<Polynomial>& gen,
                                const Monomial& mult) -> std::map<std::size_t, Scalar> {
            std::map<std::size_t, Scalar> r;
            for (std::size_t k = 0; k < ncomp; ++k)
                for (const auto& [m, c] : gen[k].terms()) {
                    Monomial prod = m * mult;
                    if (prod.total_degree() <= D)
                        r[coord(k, prod)] += c;
                }
            std::erase_if(r, [](const auto& kv) { return kv.second == 0; });
            return r;
        };

        SparseMatrix ideal_times_module;  // truncation of (maximal ideal) * module
        ideal_times_module.cols = ncomp * mons.size();
        for (const auto& gen : shifted)
            for (const auto& mult : mons)
                if (mult.total_degree() >= 1) {
                    auto r = truncate_row(gen, mult);
                    if (!r.empty())
                        ideal_times_module.add_row(std::move(r));
                }
        SparseMatrix combined = ideal_times_module;
        for (const auto& gen : shifted) {
            auto r = truncate_row(gen, Monomial::one());
            if (!r.empty())
                combined.add_row(std::move(r));
        }
        return sparse_rank(std::move(combined)) - sparse_rank(std::move(ideal_times_module));
    };

    int low = dim_at(degree_bound - 1);
    int high = dim_at(degree_bound);
    return {high, low == high};
}

}  // namespace pushfwd
