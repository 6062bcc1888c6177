#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "pushfwd/extension.hpp"
#include "pushfwd/nodalcurve.hpp"

using namespace pushfwd;

TEST_CASE("central section bases") {
    CHECK(central_sections(1, TwistSpec::none()) == std::vector<std::string>{"u0", "u1"});
    CHECK(central_sections(2, TwistSpec::none()).size() == 3);
    CHECK(central_sections(3, TwistSpec::d0_minus_d1()) ==
          std::vector<std::string>{"u0^2*u1", "u0*u1^2", "u1^3"});
    CHECK(monomial_label(2, 1) == "u0*u1");
    CHECK_THROWS(central_sections(0, TwistSpec::none()));
}

TEST_CASE("section spaces over the doubled component") {
    auto plain = elliptic_side_space(2, TwistSpec::none());
    CHECK(plain.basis_labels == std::vector<std::string>{"1", "t"});
    CHECK(plain.evaluation[0] == std::vector<Scalar>{Scalar(1), Scalar(0)});
    CHECK(plain.evaluation[1] == std::vector<Scalar>{Scalar(0), Scalar(0)});

    auto twisted = elliptic_side_space(2, TwistSpec::d0_minus_d1());
    CHECK(twisted.basis_labels == std::vector<std::string>{"s"});
    CHECK(twisted.evaluation[0] == std::vector<Scalar>{Scalar(0), Scalar(1)});

    auto rational = rational_side_space(3, TwistSpec::none(), 1);
    CHECK(rational.basis_labels.size() == 4);
    CHECK(rational.evaluation[0] == std::vector<Scalar>{Scalar(1), Scalar(0)});  // u0^3
    CHECK(rational.evaluation[1] == std::vector<Scalar>{Scalar(0), Scalar(1)});  // u0^2*u1
    CHECK(rational.evaluation[2] == std::vector<Scalar>{Scalar(0), Scalar(0)});
}

TEST_CASE("first-order extensions") {
    // m = 2: u0*u1 is the one obstructed direction.
    auto two = extend_once(2, TwistSpec::none());
    CHECK(two.extendable == std::vector<std::string>{"u0^2", "u1^2"});
    CHECK(two.obstructed == std::vector<std::string>{"u0*u1"});
    CHECK(two.w1_dim == 3);

    // m = 1: only the vanishing-order-m section survives.
    auto one = extend_once(1, TwistSpec::none());
    CHECK(one.extendable == std::vector<std::string>{"u0"});
    CHECK(one.obstructed == std::vector<std::string>{"u1"});
    CHECK(one.w1_dim == 2);

    // Twisted: everything extends.
    auto twisted = extend_once(2, TwistSpec::d0_minus_d1());
    CHECK(twisted.extendable == std::vector<std::string>{"u0*u1", "u1^2"});
    CHECK(twisted.obstructed.empty());
    CHECK(twisted.w1_dim == 2);
}

TEST_CASE("codimension of the extendable subspace is one") {
    for (int m = 1; m <= 6; ++m) {
        auto result = extend_once(m, TwistSpec::none());
        CHECK(result.obstructed == std::vector<std::string>{monomial_label(m, 1)});
        CHECK(result.extendable.size() == static_cast<std::size_t>(m));
        CHECK(result.w1_dim == m + 1);
        CHECK(std::find(result.extendable.begin(), result.extendable.end(),
                        monomial_label(m, 0)) != result.extendable.end());
    }
}

TEST_CASE("obstruction spaces vanish and do not depend on the level") {
    for (int m = 1; m <= 4; ++m) {
        for (int k = 1; k <= 5; ++k) {
            CHECK(obstruction_space(m, TwistSpec::none(), k) == 0);
            CHECK(obstruction_space(m, TwistSpec::d0_minus_d1(), k) == 0);
        }
    }
    CHECK_THROWS(obstruction_space(1, TwistSpec::none(), 0));
}

TEST_CASE("a mutated gluing shows the obstruction computation is alive") {
    // Forcing the rational piece to degree -2 produces h1 != 0 by the
    // same gluing computation.
    CurveGraph graph;
    graph.components = {{"C", 1}, {"Ca", 0}};
    CurveNode node;
    node.a = {"C", PointLabel::generic("q")};
    node.b = {"Ca", PointLabel::zero()};
    graph.nodes = {node};
    BundleOnCurve bundle;
    bundle.per_component["C"] = ComponentBundle{1, false, {0}};
    bundle.per_component["Ca"] = ComponentBundle{-2, false, {}};
    CHECK(h0_h1(graph, bundle).second > 0);
}

TEST_CASE("full extension reports") {
    auto report = extend_all(2, TwistSpec::none(), 5);
    REQUIRE(report.rows.size() == 3);
    CHECK(report.rows[0].label == "u0^2");
    CHECK(report.rows[0].extends_through == 5);
    CHECK(report.rows[0].tautological);
    CHECK(report.rows[1].label == "u0*u1");
    CHECK(report.rows[1].obstructed_at_level1);
    CHECK(report.rows[1].extends_through == 0);
    CHECK(report.rows[2].label == "u1^2");
    CHECK(report.rows[2].extends_through == 5);
    CHECK(report.obstruction_dims == std::vector<int>{0, 0, 0, 0});

    auto twisted = extend_all(3, TwistSpec::d0_minus_d1(), 5);
    REQUIRE(twisted.rows.size() == 3);
    for (const auto& row : twisted.rows) {
        CHECK(!row.obstructed_at_level1);
        CHECK(row.extends_through == 5);
    }

    auto level1 = extend_all(1, TwistSpec::none(), 1);
    CHECK(level1.obstruction_dims.empty());
    CHECK_THROWS(extend_all(1, TwistSpec::none(), 0));
}

TEST_CASE("artinian oracle agrees with the shortcut tower") {
    for (int m = 1; m <= 4; ++m) {
        auto once = extend_once(m, TwistSpec::none());
        for (int level = 1; level <= 3; ++level) {
            auto oracle = artinian_extension_oracle(m, TwistSpec::none(), level);
            // Dimension of H0(W_level) per the inductive tower.
            CHECK(oracle.dim == (m + 1) + (level - 1) * m);
            CHECK(oracle.extendable == once.extendable);
        }
        auto twisted_once = extend_once(m, TwistSpec::d0_minus_d1());
        for (int level = 1; level <= 3; ++level) {
            auto oracle = artinian_extension_oracle(m, TwistSpec::d0_minus_d1(), level);
            CHECK(oracle.dim == level * m);
            CHECK(oracle.extendable == twisted_once.extendable);
        }
    }
    CHECK_THROWS(artinian_extension_oracle(2, TwistSpec::none(), 4));
}

TEST_CASE("laurent monomial algebra") {
    auto u = LaurentMonomial::var("u", 2);
    auto v = LaurentMonomial::var("v", -1);
    auto w = u * v;
    CHECK(w.exps.at("u") == 2);
    CHECK(w.exps.at("v") == -1);
    CHECK(w.pow(-1).exps.at("u") == -2);
    CHECK((u * u.pow(-1)) == LaurentMonomial::one());

    std::map<std::string, LaurentMonomial> rules{{"u", LaurentMonomial::var("x", -1)}};
    CHECK(u.substituted(rules) == LaurentMonomial::var("x", -2));
}

TEST_CASE("the standard trivialization satisfies the cocycle") {
    for (int m = 0; m <= 5; ++m) {
        auto t = standard_trivialization(m);
        auto check = check_cocycle(t);
        CHECK(check.ok);
        CHECK(check.first_failure.empty());
    }
}

TEST_CASE("every exponent mutation breaks the cocycle") {
    for (int m : {0, 1, 3}) {
        auto t = standard_trivialization(m);
        auto mutations = exponent_mutations(t);
        CHECK(mutations.size() >= 9);
        for (const auto& [what, mutated] : mutations) {
            auto check = check_cocycle(mutated);
            INFO(what);
            CHECK(!check.ok);
        }
    }
}

TEST_CASE("broken bundle exponent is reported") {
    auto t = standard_trivialization(2);
    t.bundle[{"V0", "V1"}] = LaurentMonomial::var("u0", -3);
    auto check = check_cocycle(t);
    CHECK(!check.ok);
    CHECK(check.first_failure.find("bundle") != std::string::npos);
}

TEST_CASE("non-invertible transitions are rejected") {
    auto t = standard_trivialization(1);
    LaurentMonomial dead;
    dead.coeff = Scalar(0);
    t.transitions[{"V0", "V1"}]["t"] = dead;
    auto check = check_cocycle(t);
    CHECK(!check.ok);
    CHECK(check.first_failure.find("kills") != std::string::npos);
}
