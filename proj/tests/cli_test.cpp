#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "pushfwd/cli.hpp"
#include "pushfwd/config.hpp"

using namespace pushfwd;

namespace {

std::string fixture(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("config files parse to the expected documents") {
    auto rtail3 = load_config_file(fixture("rtail3.fam"));
    CHECK(rtail3.kind == ConfigDocument::Kind::Family);
    CHECK(rtail3.name == "rtail3");
    CHECK(rtail3.family.mode == BaseMode::Multiprojective);
    REQUIRE(rtail3.family.tails.size() == 3);
    CHECK(rtail3.family.tails[1].parameter == "t2");
    CHECK(rtail3.family_m == std::vector<int>{1, 1, 1});

    auto oabc = load_config_file(fixture("oabc.fam"));
    REQUIRE(oabc.family.tails.size() == 2);
    CHECK(oabc.family.tails[0].parameter == "t_b");
    CHECK(oabc.family.tails[0].chain == std::vector<std::string>{"t_a"});
    CHECK(oabc.family.tails[1].chain == std::vector<std::string>{"t_a"});

    auto fig1 = load_config_file(fixture("fig1.crv"));
    CHECK(fig1.kind == ConfigDocument::Kind::Curve);
    CHECK(fig1.curve_graph.components.size() == 4);
    CHECK(fig1.curve_graph.nodes.size() == 3);
    CHECK(fig1.curve_bundle.at("e").trivial);

    auto ext = load_config_file(fixture("ext2.ext"));
    CHECK(ext.kind == ConfigDocument::Kind::Extension);
    CHECK(ext.ext_m == 2);
    CHECK(ext.ext_kmax == 5);
    CHECK(!ext.ext_twist.twisted());
}

TEST_CASE("parse and render round-trip") {
    for (const auto& name : {"rtail3.fam", "oabc.fam", "onetail.fam"}) {
        auto doc = parse_config(read_file(fixture(name)));
        CHECK(parse_config(render_config(doc)) == doc);
    }
    auto curve_doc = parse_config(read_file(fixture("fig1.crv")));
    CHECK(parse_config(render_config(curve_doc)) == curve_doc);
    auto ext_doc = parse_config(read_file(fixture("ext2.ext")));
    CHECK(parse_config(render_config(ext_doc)) == ext_doc);
}

TEST_CASE("parse errors carry positions") {
    try {
        parse_config("family.kind = family\nfamily.bogus_key = 3\n");
        FAIL("expected a parse error");
    } catch (const ConfigParseException& e) {
        CHECK(e.error().line == 2);
        CHECK(std::string(e.what()).find("bogus_key") != std::string::npos);
    }

    CHECK_THROWS_AS(parse_config(""), ConfigParseException);
    CHECK_THROWS_AS(parse_config("family.tails = t1\n"), ConfigParseException);
    CHECK_THROWS_AS(parse_config("family.kind = family\nfamily.tails = t1\nnot a line\n"),
                    ConfigParseException);
    // Duplicate keys are rejected.
    CHECK_THROWS_AS(
        parse_config("family.kind = family\nfamily.tails = t1\nfamily.tails = t2\n"),
        ConfigParseException);
    // Node ids must be consecutive.
    CHECK_THROWS_AS(parse_config("curve.kind = curve\n"
                                 "component.e.genus = 1\n"
                                 "component.a.genus = 0\n"
                                 "node.2 = e:q, a:zero\n"),
                    ConfigParseException);
}

TEST_CASE("cli exit codes") {
    CHECK(run({"family", fixture("rtail3.fam")}).code == 0);
    CHECK(run({"family", fixture("missing.fam")}).code == 1);
    CHECK(run({"bogus-command"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"cohom", "--d", "0,0", "--format", "nonsense"}).code == 1);

    // A parse error in the config maps to exit code 2.
    std::string bad = std::string(FIXTURE_DIR) + "/bad.tmp";
    {
        std::ofstream f(bad);
        f << "family.kind = family\nfamily.unknown = 1\n";
    }
    auto r = run({"family", bad});
    CHECK(r.code == 2);
    CHECK(r.err.find("line 2") != std::string::npos);
    std::remove(bad.c_str());
}

TEST_CASE("reports are deterministic") {
    auto first = run({"family", fixture("rtail3.fam"), "--fiber-ranks", "--degree-bound", "4"});
    auto second = run({"family", fixture("rtail3.fam"), "--fiber-ranks", "--degree-bound", "4"});
    CHECK(first.code == 0);
    CHECK(first.out == second.out);
}

TEST_CASE("golden outputs") {
    struct Case {
        std::string golden;
        std::vector<std::string> args;
    };
    std::vector<Case> cases = {
        {"family_rtail3.txt",
         {"family", fixture("rtail3.fam"), "--fiber-ranks", "--degree-bound", "4"}},
        {"family_oabc_kv.txt",
         {"family", fixture("oabc.fam"), "--fiber-ranks", "--degree-bound", "4", "--format",
          "kv"}},
        {"family_onetail.txt", {"family", fixture("onetail.fam")}},
        {"blowup_rtail3.txt",
         {"blowup", fixture("rtail3.fam"), "--center", "t1,t2,t3", "--degree-bound", "4"}},
        {"blowup_rtail3_base.txt", {"blowup", fixture("rtail3.fam"), "--degree-bound", "4"}},
        {"curve_fig1.txt", {"curve", fixture("fig1.crv")}},
        {"extend_m2.txt", {"extend", fixture("ext2.ext")}},
        {"extend_m3_twist_kv.txt",
         {"extend", "--m", "3", "--twist", "d0-d1", "--kmax", "5", "--format", "kv"}},
        {"cohom_22.txt", {"cohom", "--d", "-2,-2"}},
    };
    for (const auto& c : cases) {
        auto r = run(c.args);
        INFO(c.golden);
        CHECK(r.code == 0);
        CHECK(r.out == read_file(std::string(GOLDEN_DIR) + "/" + c.golden));
    }
}
