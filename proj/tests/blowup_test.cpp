#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pushfwd/blowup.hpp"

using namespace pushfwd;

namespace {

FamilyConfig chainless(int r, BaseMode mode = BaseMode::Multiprojective) {
    FamilyConfig c;
    c.mode = mode;
    for (int i = 1; i <= r; ++i)
        c.tails.push_back(TailSpec{"t" + std::to_string(i), 1, {}});
    return c;
}

Monomial mono(std::initializer_list<std::pair<std::string, int>> factors) {
    Monomial m;
    for (const auto& [name, e] : factors)
        m = m * Monomial::var(name, e);
    return m;
}

}  // namespace

TEST_CASE("chart structure") {
    std::set<std::string> universe{"t1", "t2", "t3"};

    auto two = charts(BlowupSpec{{"t1", "t2"}}, universe);
    REQUIRE(two.size() == 2);
    CHECK(two[0].substitution.at("t1") == Monomial::var("s1"));
    CHECK(two[0].substitution.at("t2") == Monomial::var("s1") * Monomial::var("s2"));
    CHECK(two[1].substitution.at("t2") == Monomial::var("s2"));
    CHECK(two[1].substitution.at("t1") == Monomial::var("s2") * Monomial::var("s1"));

    auto one = charts(BlowupSpec{{"t1"}}, universe);
    REQUIRE(one.size() == 1);
    CHECK(one[0].substitution.empty());  // principal center, identity
    CHECK(one[0].pivot == "t1");

    CHECK(charts(BlowupSpec{{"t1", "t2", "t3"}}, universe).size() == 3);
    CHECK_THROWS(charts(BlowupSpec{{"t4"}}, universe));
    CHECK_THROWS(charts(BlowupSpec{{}}, universe));
    CHECK_THROWS(charts(BlowupSpec{{"t1", "t1"}}, universe));
}

TEST_CASE("pullback of beta rows") {
    FamilyConfig triple = chainless(3);
    auto beta = beta_map(triple);
    std::set<std::string> universe{"t1", "t2", "t3"};
    auto cs = charts(BlowupSpec{{"t1", "t2", "t3"}}, universe);
    auto row = pullback_beta(beta, cs[0]);
    CHECK(row == std::vector<Monomial>{Monomial::var("s1"),
                                       mono({{"s1", 1}, {"s2", 1}}),
                                       mono({{"s1", 1}, {"s3", 1}})});

    // Shared-ghost row pulled back along the chart of t_b in the
    // center {t_b, t_c}.
    FamilyConfig shared;
    shared.tails = {TailSpec{"t_b", 1, {"t_a"}}, TailSpec{"t_c", 1, {"t_a"}}};
    auto shared_beta = beta_map(shared);
    auto shared_charts = charts(BlowupSpec{{"t_b", "t_c"}}, {"t_a", "t_b", "t_c"});
    auto pulled = pullback_beta(shared_beta, shared_charts[0]);
    CHECK(pulled[0] == mono({{"t_a", 1}, {"s_b", 1}}));
    CHECK(pulled[1] == mono({{"t_a", 1}, {"s_b", 1}, {"s_c", 1}}));

    // Identity chart of a principal center.
    auto id = charts(BlowupSpec{{"t1"}}, universe)[0];
    CHECK(pullback_beta(beta, id) == beta.entries);
}

TEST_CASE("chart points invert the substitution away from the center") {
    std::set<std::string> universe{"t1", "t2", "t3"};
    auto cs = charts(BlowupSpec{{"t1", "t2"}}, universe);
    FamilyConfig triple = chainless(3);
    auto beta = beta_map(triple);
    PrimeFeed feed(0);
    for (int sample = 0; sample < 5; ++sample) {
        std::map<std::string, Scalar> base;
        for (const auto& name : universe)
            base[name] = Scalar(feed.take());
        for (const auto& chart : cs) {
            auto cp = chart.chart_point(base, universe);
            auto pulled = pullback_beta(beta, chart);
            for (std::size_t i = 0; i < pulled.size(); ++i)
                CHECK(pulled[i].evaluate(cp) == beta.entries[i].evaluate(base));
        }
    }
}

TEST_CASE("kernel freeness verdicts") {
    auto free_after = kernel_local_freeness(
        {Monomial::var("s1"), mono({{"s1", 1}, {"s2", 1}}), mono({{"s1", 1}, {"s3", 1}})}, 4);
    CHECK(free_after.free);
    CHECK(free_after.rank == 2);

    auto koszul3 = kernel_local_freeness(
        {Monomial::var("t1"), Monomial::var("t2"), Monomial::var("t3")}, 4);
    CHECK(!koszul3.free);
    CHECK(koszul3.origin_dim == 3);
    CHECK(koszul3.generic_dim == 2);

    auto koszul2 = kernel_local_freeness({Monomial::var("t1"), Monomial::var("t2")}, 4);
    CHECK(koszul2.free);
    CHECK(koszul2.rank == 1);
    CHECK(koszul2.origin_dim == 1);

    auto single = kernel_local_freeness({Monomial::var("t")}, 4);
    CHECK(single.free);
    CHECK(single.rank == 0);

    CHECK_THROWS(kernel_local_freeness({}, 4));
}

TEST_CASE("gcd invariance of the freeness verdict") {
    std::vector<std::vector<Monomial>> rows = {
        {Monomial::var("t1"), Monomial::var("t2"), Monomial::var("t3")},
        {mono({{"a", 1}, {"b", 1}}), mono({{"a", 1}, {"c", 1}})},
        {mono({{"a", 1}}), mono({{"b", 2}})},
    };
    Monomial g = mono({{"a", 1}, {"d", 2}});
    for (const auto& row : rows) {
        std::vector<Monomial> scaled;
        for (const auto& m : row)
            scaled.push_back(m * g);
        auto v1 = kernel_local_freeness(row, 4);
        auto v2 = kernel_local_freeness(scaled, 4);
        CHECK(v1.free == v2.free);
        CHECK(v1.origin_dim == v2.origin_dim);
        CHECK(v1.generic_dim == v2.generic_dim);
    }
}

TEST_CASE("free rows stay free in every chart") {
    std::vector<Monomial> row{Monomial::var("t1"), Monomial::var("t2")};
    std::set<std::string> universe{"t1", "t2"};
    REQUIRE(kernel_local_freeness(row, 4).free);
    for (const auto& chart : charts(BlowupSpec{{"t1", "t2"}}, universe))
        CHECK(kernel_local_freeness(chart.apply_row(row), 4).free);
}

TEST_CASE("stratum sweep agrees on the test rows") {
    auto swept = kernel_local_freeness_sweep(
        {Monomial::var("t1"), Monomial::var("t2")}, 4);
    CHECK(swept.free);
    auto not_free = kernel_local_freeness_sweep(
        {Monomial::var("t1"), Monomial::var("t2"), Monomial::var("t3")}, 4);
    CHECK(!not_free.free);
}

TEST_CASE("resolution check") {
    auto triple = chainless(3);
    auto base = resolve_check(triple, {1, 1, 1}, {}, 4);
    CHECK(!base.resolved);
    REQUIRE(base.charts.size() == 1);
    CHECK(base.charts[0].verdict.origin_dim == 3);
    CHECK(base.charts[0].verdict.generic_dim == 2);

    auto resolved = resolve_check(triple, {1, 1, 1}, {BlowupSpec{{"t1", "t2", "t3"}}}, 4);
    CHECK(resolved.resolved);
    CHECK(resolved.charts.size() == 3);

    auto single = chainless(1);
    CHECK(resolve_check(single, {1}, {}, 4).resolved);  // kernel already zero

    // Two tails: already free, and still free after the blowup.
    auto pair = chainless(2);
    CHECK(resolve_check(pair, {3, 2}, {}, 4).resolved);
    CHECK(resolve_check(pair, {3, 2}, {BlowupSpec{{"t1", "t2"}}}, 4).resolved);

    // A second blowup composes; the row stays resolved.
    auto twice = resolve_check(triple, {1, 1, 1},
                               {BlowupSpec{{"t1", "t2", "t3"}}, BlowupSpec{{"s2", "s3"}}}, 4);
    CHECK(twice.resolved);
    CHECK(twice.charts.size() == 6);
}
