#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pushfwd/family.hpp"

using namespace pushfwd;

namespace {

FamilyConfig config_of(std::vector<std::pair<std::string, std::vector<std::string>>> tails,
                       BaseMode mode = BaseMode::LocalAffine) {
    FamilyConfig c;
    c.mode = mode;
    for (auto& [p, chain] : tails)
        c.tails.push_back(TailSpec{p, 1, chain});
    return c;
}

FamilyConfig oabc() {
    return config_of({{"t_b", {"t_a"}}, {"t_c", {"t_a"}}});
}

}  // namespace

TEST_CASE("configuration validation") {
    CHECK_THROWS(FamilyConfig{}.validate());
    auto dup = config_of({{"t", {}}, {"t", {}}});
    CHECK_THROWS(dup.validate());
    auto tail_as_ghost = config_of({{"t1", {}}, {"t2", {"t1"}}});
    CHECK_THROWS(tail_as_ghost.validate());
    // Inconsistent ghost sharing: a is attached to the core in one
    // chain and behind b in the other.
    auto inconsistent = config_of({{"t1", {"a"}}, {"t2", {"b", "a"}}});
    CHECK_THROWS(inconsistent.validate());
    oabc().validate();
}

TEST_CASE("beta rows") {
    auto single = config_of({{"t", {}}});
    CHECK(beta_map(single).entries == std::vector<Monomial>{Monomial::var("t")});

    auto triple = config_of({{"t1", {}}, {"t2", {}}, {"t3", {}}});
    CHECK(beta_map(triple).entries ==
          std::vector<Monomial>{Monomial::var("t1"), Monomial::var("t2"), Monomial::var("t3")});

    auto shared = beta_map(oabc());
    CHECK(shared.entries[0] == Monomial::var("t_a") * Monomial::var("t_b"));
    CHECK(shared.entries[1] == Monomial::var("t_a") * Monomial::var("t_c"));
}

TEST_CASE("pushforward with the section") {
    auto single = config_of({{"t", {}}}, BaseMode::Multiprojective);
    auto classes = pushforward_with_D(single, {2});
    REQUIRE(classes.size() == 3);
    CHECK(classes[0].is_trivial());
    CHECK(classes[1].as_multidegree({"t"}).degrees == std::vector<int>{-1});
    CHECK(classes[2].as_multidegree({"t"}).degrees == std::vector<int>{-2});

    auto pair = config_of({{"t1", {}}, {"t2", {}}}, BaseMode::Multiprojective);
    auto pair_classes = pushforward_with_D(pair, {1, 1});
    REQUIRE(pair_classes.size() == 3);
    CHECK(pair_classes[1].as_multidegree({"t1", "t2"}).degrees == std::vector<int>{-1, 0});
    CHECK(pair_classes[2].as_multidegree({"t1", "t2"}).degrees == std::vector<int>{0, -1});

    auto shared_classes = pushforward_with_D(oabc(), {1, 1});
    REQUIRE(shared_classes.size() == 3);
    auto universe = oabc().universe();
    CHECK(universe == std::vector<std::string>{"t_b", "t_c", "t_a"});
    // O_B(-V_b - V_a) and O_B(-V_c - V_a).
    CHECK(shared_classes[1].vanishing == std::map<std::string, int>{{"t_a", 1}, {"t_b", 1}});
    CHECK(shared_classes[2].vanishing == std::map<std::string, int>{{"t_a", 1}, {"t_c", 1}});

    CHECK_THROWS(pushforward_with_D(single, {0}));
    CHECK_THROWS(pushforward_with_D(single, {-1}));
}

TEST_CASE("pushforward model") {
    auto single = config_of({{"t", {}}});
    for (int m = 1; m <= 6; ++m) {
        auto model = pushforward(single, {m});
        CHECK(model.v_m0.size() == static_cast<std::size_t>(m));  // O and k = 2..m
        CHECK(model.v1.size() == 1);
        CHECK(model.kernel_generators.empty());
        CHECK(model.total_multiplicity() == m);
    }

    auto pair = config_of({{"t1", {}}, {"t2", {}}});
    auto model = pushforward(pair, {1, 1});
    REQUIRE(model.kernel_generators.size() == 1);
    CHECK(model.kernel_generators[0][0] == Polynomial::var("t2"));
    CHECK(model.kernel_generators[0][1] == -Polynomial::var("t1"));
    CHECK(model.v_m0.size() == 1);

    auto triple = config_of({{"t1", {}}, {"t2", {}}, {"t3", {}}});
    auto triple_model = pushforward(triple, {1, 1, 1});
    CHECK(triple_model.kernel_generators.size() == 3);
}

TEST_CASE("fiber ranks") {
    auto triple = config_of({{"t1", {}}, {"t2", {}}, {"t3", {}}});
    auto model = pushforward(triple, {1, 1, 1});
    CHECK(generic_fiber_rank(model, 4) == 3);
    auto origin = PointAssignment::generic(model.universe, {"t1", "t2", "t3"});
    CHECK(fiber_rank(model, origin, 4) == 4);  // 1 + 3 minimal generators

    auto pair = config_of({{"t1", {}}, {"t2", {}}});
    auto pair_model = pushforward(pair, {1, 1});
    auto pair_origin = PointAssignment::generic(pair_model.universe, {"t1", "t2"});
    CHECK(fiber_rank(pair_model, pair_origin, 4) == 2);
    CHECK(generic_fiber_rank(pair_model, 4) == 2);
}

TEST_CASE("rank accounting and symbolic annihilation") {
    std::vector<FamilyConfig> configs = {
        config_of({{"t", {}}}),
        config_of({{"t1", {}}, {"t2", {}}, {"t3", {}}}),
        oabc(),
        config_of({{"t1", {"a", "b"}}, {"t2", {"a", "b"}}}),
    };
    std::vector<std::vector<int>> ms = {{3}, {1, 2, 3}, {2, 2}, {1, 3}};
    for (std::size_t i = 0; i < configs.size(); ++i) {
        auto model = pushforward(configs[i], ms[i]);
        auto with_d = pushforward_with_D(configs[i], ms[i]);
        CHECK(model.v_m0.size() + model.v1.size() == with_d.size());
        CHECK(static_cast<int>(with_d.size()) == model.total_multiplicity() + 1);
        // Every entry carries its own tail parameter.
        for (std::size_t k = 0; k < model.beta.entries.size(); ++k)
            CHECK(model.beta.entries[k].divisible_by(
                Monomial::var(model.config.tails[k].parameter)));
        // Every kernel generator annihilates the row symbolically.
        for (const auto& gen : model.kernel_generators) {
            Polynomial acc;
            for (std::size_t k = 0; k < gen.size(); ++k)
                acc = acc + Polynomial::from_monomial(model.beta.entries[k]) * gen[k];
            CHECK(acc.is_zero());
        }
    }
}

TEST_CASE("point assignments enforce the stratum convention") {
    auto good = PointAssignment::generic({"x", "y"}, {"y"});
    good.validate();
    CHECK(good.values.at("y") == 0);
    CHECK(good.values.at("x") != 0);
    auto second = PointAssignment::generic({"x", "y"}, {"y"}, kValidationFeedStart);
    CHECK(second.values.at("x") != good.values.at("x"));

    PointAssignment broken;
    broken.values = {{"x", Scalar(0)}};
    CHECK_THROWS(broken.validate());
    PointAssignment outside;
    outside.values = {{"x", Scalar(1)}};
    outside.stratum = {"y"};
    CHECK_THROWS(outside.validate());
}

TEST_CASE("zero multiplicities are normalized away") {
    auto pair = config_of({{"t1", {}}, {"t2", {}}});
    auto reduced = pushforward(pair, {2, 0});
    auto direct = pushforward(config_of({{"t1", {}}}), {2});
    CHECK(reduced.v_m0.size() == direct.v_m0.size());
    CHECK(reduced.v1.size() == direct.v1.size());
    CHECK(reduced.beta.entries == direct.beta.entries);
    CHECK(reduced.notes.size() == 1);
    CHECK_THROWS(pushforward(pair, {0, 0}));
    CHECK_THROWS(pushforward(pair, {-1, 1}));
}

TEST_CASE("r1 support") {
    auto single = config_of({{"t", {}}});
    auto r1 = r1_model(single, {1});
    CHECK(r1.support == std::vector<std::set<std::string>>{{"t"}});
    CHECK(r1.length == 1);

    auto triple = config_of({{"t1", {}}, {"t2", {}}, {"t3", {}}}, BaseMode::Multiprojective);
    auto r3 = r1_model(triple, {1, 1, 1});
    CHECK(r3.support == std::vector<std::set<std::string>>{{"t1", "t2", "t3"}});
    CHECK(r3.tail_stratum == std::set<std::string>{"t1", "t2", "t3"});

    // (t_a t_b, t_a t_c): the entry ideal vanishes on V(t_a) and on
    // V(t_b, t_c).
    auto shared = r1_model(oabc(), {1, 1});
    REQUIRE(shared.support.size() == 2);
    CHECK(shared.support[0] == std::set<std::string>{"t_a"});
    CHECK(shared.support[1] == std::set<std::string>{"t_b", "t_c"});
    CHECK(shared.tail_stratum == std::set<std::string>{"t_b", "t_c"});
}

TEST_CASE("normal bundle of a section") {
    auto triple = config_of({{"t1", {}}, {"t2", {}}, {"t3", {}}}, BaseMode::Multiprojective);
    auto nb = normal_bundle_of_section(triple, "t2");
    CHECK(nb.as_multidegree(triple.universe()).degrees == std::vector<int>{0, -1, 0});

    auto shared = normal_bundle_of_section(oabc(), "t_b");
    CHECK(shared.vanishing == std::map<std::string, int>{{"t_a", 1}, {"t_b", 1}});

    auto local = config_of({{"t", {}}});
    CHECK(normal_bundle_of_section(local, "t").principal_monomial() == Monomial::var("t"));
    CHECK_THROWS(normal_bundle_of_section(local, "missing"));
}

TEST_CASE("stratum fibers") {
    auto pair = config_of({{"t1", {}}, {"t2", {}}});
    // Deepest stratum: elliptic core with two rational tails.
    auto deepest = stratum_fiber(pair, {1, 1}, {"t1", "t2"});
    CHECK(deepest.graph.components.size() == 3);
    CHECK(deepest.graph.arithmetic_genus() == 1);
    auto [h0, h1] = h0_h1(deepest.graph, deepest.bundle);
    CHECK(h0 == 3);
    CHECK(h1 == 1);

    // Smoothing both tails gives an irreducible degree-2 elliptic.
    auto smooth = stratum_fiber(pair, {1, 1}, {});
    CHECK(smooth.graph.components.size() == 1);
    CHECK(smooth.graph.components[0].genus == 1);
    CHECK(h0_h1(smooth.graph, smooth.bundle) == std::pair<int, int>{2, 0});

    // One tail left: elliptic of degree 1 with a single degree-1 tail.
    auto half = stratum_fiber(pair, {1, 1}, {"t1"});
    CHECK(half.graph.components.size() == 2);
    auto [hh0, hh1] = h0_h1(half.graph, half.bundle);
    CHECK(hh0 == 2);
    CHECK(hh1 == 0);

    CHECK_THROWS(stratum_fiber(pair, {1, 1}, {"bogus"}));
}

TEST_CASE("stratum fibers of the shared-ghost configuration") {
    // Over {t_a = 0} the ghost persists and the solid tails are merged
    // into it: a one-tail fiber of degree two.
    auto fiber = stratum_fiber(oabc(), {1, 1}, {"t_a"});
    CHECK(fiber.graph.components.size() == 2);
    auto [h0, h1] = h0_h1(fiber.graph, fiber.bundle);
    CHECK(h0 == 3);
    CHECK(h1 == 1);

    // Over {t_b = 0} with t_a, t_c generic the core absorbs the chain
    // and tail c; the fiber is an elliptic of degree 1 with one
    // degree-1 tail.
    auto partial = stratum_fiber(oabc(), {1, 1}, {"t_b"});
    CHECK(partial.graph.components.size() == 2);
    auto [p0, p1] = h0_h1(partial.graph, partial.bundle);
    CHECK(p0 == 2);
    CHECK(p1 == 0);
}

TEST_CASE("stratum fibers along a two-ghost chain") {
    // One tail behind the chain core - a - b - solid; every partial
    // stratum keeps a ghost core and so jumps.
    auto chain = config_of({{"t1", {"a", "b"}}});
    for (const auto& stratum : std::vector<std::set<std::string>>{
             {"a"}, {"b"}, {"t1"}, {"a", "b"}, {"a", "b", "t1"}}) {
        auto fiber = stratum_fiber(chain, {2}, stratum);
        auto [h0, h1] = h0_h1(fiber.graph, fiber.bundle);
        CHECK(h0 == 3);
        CHECK(h1 == 1);
        CHECK(euler_char(fiber.graph, fiber.bundle) == 2);
    }
    auto smooth = stratum_fiber(chain, {2}, {});
    CHECK(h0_h1(smooth.graph, smooth.bundle) == std::pair<int, int>{2, 0});
    // The full central fiber has all four components.
    auto central = stratum_fiber(chain, {2}, {"a", "b", "t1"});
    CHECK(central.graph.components.size() == 4);
}

TEST_CASE("base change reports") {
    auto single = config_of({{"t", {}}});

    for (int m = 1; m <= 3; ++m) {
        auto generic_report = base_change_check(
            single, {m}, PointAssignment::generic({"t"}, {}), 4);
        CHECK(generic_report.module_fiber == m);
        CHECK(generic_report.h0 == m);
        CHECK(generic_report.h1 == 0);
        CHECK(generic_report.verdict == "EQUAL");

        auto jump_report = base_change_check(
            single, {m}, PointAssignment::generic({"t"}, {"t"}), 4);
        CHECK(jump_report.module_fiber == m);
        CHECK(jump_report.h0 == m + 1);
        CHECK(jump_report.h1 == 1);
        CHECK(jump_report.verdict == "JUMP");
        CHECK(jump_report.semicontinuous);
        CHECK(jump_report.euler == m);
    }

    auto pair = config_of({{"t1", {}}, {"t2", {}}});
    auto origin_report = base_change_check(
        pair, {1, 1}, PointAssignment::generic({"t1", "t2"}, {"t1", "t2"}), 4);
    CHECK(origin_report.module_fiber == 2);
    CHECK(origin_report.h0 == 3);
    CHECK(origin_report.h1 == 1);
    CHECK(origin_report.verdict == "JUMP");
    CHECK(origin_report.semicontinuous);
}

TEST_CASE("base change on the shared-ghost jump component") {
    // {t_a = 0} is in the support of R1 although the kernel stays
    // locally free there: the module fiber equals the generic rank
    // while h0 jumps.
    auto report = base_change_check(oabc(), {1, 1},
                                    PointAssignment::generic(oabc().universe(), {"t_a"}), 4);
    CHECK(report.module_fiber == 2);
    CHECK(report.h0 == 3);
    CHECK(report.h1 == 1);
    CHECK(report.verdict == "JUMP");
    CHECK(report.semicontinuous);
    CHECK(report.euler == 2);
}
