#include "pushfwd/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <sstream>

#include "pushfwd/blowup.hpp"
#include "pushfwd/config.hpp"
#include "pushfwd/selftest.hpp"

namespace pushfwd {

namespace {

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty())
            out.push_back(std::stoi(item));
    return out;
}

std::vector<std::string> parse_name_list(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto b = item.find_first_not_of(" \t");
        auto e = item.find_last_not_of(" \t");
        if (b != std::string::npos)
            out.push_back(item.substr(b, e - b + 1));
    }
    return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i)
        out += (i ? sep : "") + parts[i];
    return out;
}

std::string stratum_str(const std::set<std::string>& stratum) {
    if (stratum.empty())
        return "(generic)";
    return join({stratum.begin(), stratum.end()}, ",");
}

std::string row_str(const std::vector<Monomial>& row) {
    std::string out = "(";
    for (std::size_t i = 0; i < row.size(); ++i)
        out += (i ? ", " : "") + row[i].str();
    return out + ")";
}

struct Options {
    std::string config_path;
    std::string m_text;
    std::vector<std::string> centers;
    std::string twist_text = "none";
    int kmax = 5;
    int degree_bound = kDefaultDegreeBound;
    std::string format = "text";
    bool fiber_ranks = false;
    bool sweep = false;
    int ext_m = 0;
    std::string multidegree_text;
};

void print_cohom(const Options& opt, std::ostream& out) {
    auto degrees = parse_int_list(opt.multidegree_text);
    if (degrees.empty())
        throw CLI::ValidationError("--d", "expected a comma list of integers");
    MultiDegree a(degrees);
    auto h = h_multi(a);
    int chi = 0;
    for (std::size_t k = 0; k < h.size(); ++k)
        chi += (k % 2 ? -1 : 1) * h[k];
    if (opt.format == "kv") {
        out << "multidegree=" << opt.multidegree_text << "\n";
        for (std::size_t k = 0; k < h.size(); ++k)
            out << "h" << k << "=" << h[k] << "\n";
        out << "chi=" << chi << "\n";
        return;
    }
    out << "line bundle " << a.str() << " on (P1)^" << a.rank() << "\n";
    for (std::size_t k = 0; k < h.size(); ++k)
        out << "  h^" << k << " = " << h[k] << "\n";
    out << "  chi = " << chi << "  [kuenneth-euler-product]\n";
}

void print_curve(const Options& opt, std::ostream& out) {
    auto doc = load_config_file(opt.config_path);
    if (doc.kind != ConfigDocument::Kind::Curve)
        throw std::runtime_error("expected a curve document");
    const auto& graph = doc.curve_graph;
    auto core_ids = core(graph);
    auto tail_groups = tails(graph);
    auto [h0, h1] = h0_h1(graph, doc.curve_bundle);
    int chi = euler_char(graph, doc.curve_bundle);

    if (opt.format == "kv") {
        out << "name=" << doc.name << "\n";
        out << "components=" << graph.components.size() << "\n";
        out << "nodes=" << graph.nodes.size() << "\n";
        out << "genus=" << graph.arithmetic_genus() << "\n";
        out << "core=" << join({core_ids.begin(), core_ids.end()}, ",") << "\n";
        out << "tails=" << tail_groups.size() << "\n";
        out << "h0=" << h0 << "\n";
        out << "h1=" << h1 << "\n";
        out << "chi=" << chi << "\n";
        return;
    }
    out << "curve " << doc.name << ": " << graph.components.size() << " components, "
        << graph.nodes.size() << " nodes, arithmetic genus " << graph.arithmetic_genus() << "\n";
    out << "  core: " << join({core_ids.begin(), core_ids.end()}, ",") << "\n";
    out << "  tails: " << tail_groups.size() << "\n";
    for (std::size_t i = 0; i < tail_groups.size(); ++i)
        out << "    tail " << (i + 1) << ": "
            << join({tail_groups[i].begin(), tail_groups[i].end()}, ",") << "\n";
    out << "  h0 = " << h0 << "  h1 = " << h1 << "  chi = " << chi
        << "  [normalization-gluing]\n";
}

void print_family(const Options& opt, std::ostream& out) {
    auto doc = load_config_file(opt.config_path);
    if (doc.kind != ConfigDocument::Kind::Family)
        throw std::runtime_error("expected a family document");
    std::vector<int> m = opt.m_text.empty() ? std::vector<int>{} : parse_int_list(opt.m_text);
    auto model = pushforward(doc.family, m);
    const BaseMode mode = model.config.mode;
    auto with_d = pushforward_with_D(model.config, model.multiplicities);
    auto r1 = r1_model(model.config, model.multiplicities);

    auto classes_str = [&](const std::vector<TwistClass>& cs) {
        std::vector<std::string> parts;
        for (const auto& c : cs)
            parts.push_back(c.str(mode));
        return join(parts, " + ");
    };

    if (opt.format == "kv") {
        out << "name=" << doc.name << "\n";
        out << "mode=" << (mode == BaseMode::LocalAffine ? "local" : "multiprojective") << "\n";
        out << "tails=" << model.config.tails.size() << "\n";
        out << "total_multiplicity=" << model.total_multiplicity() << "\n";
        out << "pushforward_with_D=" << classes_str(with_d) << "\n";
        out << "pushforward_with_D_rank=" << with_d.size() << "\n";
        out << "v_m0=" << classes_str(model.v_m0) << "\n";
        out << "v1=" << classes_str(model.v1) << "\n";
        out << "beta=" << row_str(model.beta.entries) << "\n";
        out << "kernel_generators=" << model.kernel_generators.size() << "\n";
        std::vector<std::string> prime_parts;
        for (const auto& p : r1.support)
            prime_parts.push_back("V(" + join({p.begin(), p.end()}, ",") + ")");
        out << "r1_support=" << join(prime_parts, " u ") << "\n";
        out << "r1_length=" << r1.length << "\n";
        for (const auto& note : model.notes)
            out << "note=" << note << "\n";
    } else {
        out << "family " << doc.name << " ("
            << (mode == BaseMode::LocalAffine ? "local" : "multiprojective") << "), "
            << model.config.tails.size() << " tails, total multiplicity "
            << model.total_multiplicity() << "\n";
        for (const auto& note : model.notes)
            out << "  note: " << note << "\n";
        out << "  pushforward with section: " << classes_str(with_d) << "   rank "
            << with_d.size() << "  [free-splitting]\n";
        out << "  V_m0: " << classes_str(model.v_m0) << "\n";
        out << "  V1:   " << classes_str(model.v1) << "\n";
        out << "  beta: " << row_str(model.beta.entries) << "  [beta-row]\n";
        out << "  kernel generators: " << model.kernel_generators.size() << "\n";
        for (const auto& gen : model.kernel_generators) {
            out << "    (";
            for (std::size_t i = 0; i < gen.size(); ++i)
                out << (i ? ", " : "") << gen[i].str();
            out << ")\n";
        }
        std::vector<std::string> prime_parts;
        for (const auto& p : r1.support)
            prime_parts.push_back("V(" + join({p.begin(), p.end()}, ",") + ")");
        out << "  R1 support: " << join(prime_parts, " u ") << ", length " << r1.length
            << "  [skyscraper-support]\n";
        for (const auto& tail : model.config.tails)
            out << "  normal bundle of section at " << tail.parameter << ": "
                << normal_bundle_of_section(model.config, tail.parameter).str(mode) << "\n";
    }

    if (!opt.fiber_ranks)
        return;
    const auto& universe = model.universe;
    if (opt.format == "kv") {
        for (std::size_t mask = 0; mask < (std::size_t{1} << universe.size()); ++mask) {
            std::set<std::string> stratum;
            for (std::size_t j = 0; j < universe.size(); ++j)
                if (mask & (std::size_t{1} << j))
                    stratum.insert(universe[j]);
            auto point = PointAssignment::generic(universe, stratum);
            auto report =
                base_change_check(model.config, model.multiplicities, point, opt.degree_bound);
            std::string key = "stratum." + (stratum.empty() ? "generic" : join({stratum.begin(), stratum.end()}, "."));
            out << key << ".module=" << report.module_fiber << "\n";
            out << key << ".h0=" << report.h0 << "\n";
            out << key << ".h1=" << report.h1 << "\n";
            out << key << ".chi=" << report.euler << "\n";
            out << key << ".verdict=" << report.verdict << "\n";
        }
        return;
    }
    out << "  fiber ranks by stratum  [base-change-table]\n";
    out << "    stratum                module  h0  h1  chi  verdict\n";
    for (std::size_t mask = 0; mask < (std::size_t{1} << universe.size()); ++mask) {
        std::set<std::string> stratum;
        for (std::size_t j = 0; j < universe.size(); ++j)
            if (mask & (std::size_t{1} << j))
                stratum.insert(universe[j]);
        auto point = PointAssignment::generic(universe, stratum);
        auto report =
            base_change_check(model.config, model.multiplicities, point, opt.degree_bound);
        std::string name = stratum_str(stratum);
        out << "    " << name << std::string(name.size() < 22 ? 22 - name.size() : 1, ' ')
            << report.module_fiber << "       " << report.h0 << "   " << report.h1 << "   "
            << report.euler << "    " << report.verdict << "\n";
    }
}

void print_blowup(const Options& opt, std::ostream& out) {
    auto doc = load_config_file(opt.config_path);
    if (doc.kind != ConfigDocument::Kind::Family)
        throw std::runtime_error("expected a family document");
    std::vector<int> m = opt.m_text.empty() ? std::vector<int>{} : parse_int_list(opt.m_text);
    std::vector<BlowupSpec> sequence;
    for (const auto& text : opt.centers)
        sequence.push_back(BlowupSpec{parse_name_list(text)});
    auto report = resolve_check(doc.family, m, sequence, opt.degree_bound, opt.sweep);

    if (opt.format == "kv") {
        out << "name=" << doc.name << "\n";
        out << "blowups=" << sequence.size() << "\n";
        for (const auto& chart : report.charts) {
            std::string key = chart.path.empty() ? "base" : join(chart.path, ".");
            out << "chart." << key << ".row=" << row_str(chart.row) << "\n";
            out << "chart." << key << ".free=" << (chart.verdict.free ? "yes" : "no") << "\n";
            if (chart.verdict.free)
                out << "chart." << key << ".rank=" << chart.verdict.rank << "\n";
            else
                out << "chart." << key << ".dims=" << chart.verdict.origin_dim << ","
                    << chart.verdict.generic_dim << "\n";
        }
        out << "resolved=" << (report.resolved ? "yes" : "no") << "\n";
        return;
    }
    out << "blowup check for " << doc.name << " with " << sequence.size()
        << " blowup(s)  [kernel-freeness]\n";
    for (const auto& chart : report.charts) {
        out << "  chart " << (chart.path.empty() ? "(base)" : join(chart.path, ">")) << ": row "
            << row_str(chart.row);
        if (chart.verdict.free)
            out << " -> FREE rank " << chart.verdict.rank << "\n";
        else
            out << " -> NOT FREE (origin " << chart.verdict.origin_dim << ", generic "
                << chart.verdict.generic_dim << ")\n";
    }
    out << "  verdict: " << (report.resolved ? "RESOLVED" : "NOT RESOLVED") << "\n";
}

void print_extend(const Options& opt, std::ostream& out) {
    int m = opt.ext_m;
    TwistSpec twist = opt.twist_text == "d0-d1" ? TwistSpec::d0_minus_d1() : TwistSpec::none();
    int kmax = opt.kmax;
    std::string name;
    if (!opt.config_path.empty()) {
        auto doc = load_config_file(opt.config_path);
        if (doc.kind != ConfigDocument::Kind::Extension)
            throw std::runtime_error("expected an extension document");
        m = doc.ext_m;
        twist = doc.ext_twist;
        kmax = doc.ext_kmax;
        name = doc.name;
    }
    if (m < 1)
        throw std::runtime_error("extension degree m must be >= 1 (use --m or a config file)");
    auto report = extend_all(m, twist, kmax);

    if (opt.format == "kv") {
        if (!name.empty())
            out << "name=" << name << "\n";
        out << "m=" << report.m << "\n";
        out << "twist=" << report.twist.str() << "\n";
        out << "kmax=" << report.k_max << "\n";
        out << "level1_dim=" << report.level1_dim << "\n";
        for (const auto& row : report.rows)
            out << "section." << row.label << "="
                << (row.obstructed_at_level1 ? "obstructed"
                                             : "extends:" + std::to_string(row.extends_through))
                << "\n";
        for (std::size_t k = 0; k < report.obstruction_dims.size(); ++k)
            out << "obstruction." << (k + 1) << "=" << report.obstruction_dims[k] << "\n";
        return;
    }
    out << "extension report";
    if (!name.empty())
        out << " " << name;
    out << ": m=" << report.m << " twist=" << report.twist.str() << " kmax=" << report.k_max
        << "\n";
    out << "  central sections: " << report.rows.size() << ", first-order space dim "
        << report.level1_dim << "  [thickening-tower]\n";
    for (const auto& row : report.rows) {
        out << "  " << row.label << std::string(row.label.size() < 12 ? 12 - row.label.size() : 1, ' ');
        if (row.obstructed_at_level1)
            out << "obstructed at level 1\n";
        else
            out << "extends through level " << row.extends_through
                << (row.tautological ? "  (restriction of a global section)" : "") << "\n";
    }
    out << "  obstruction dims per step:";
    for (int d : report.obstruction_dims)
        out << " " << d;
    out << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact direct-image computations for families of nodal genus-one curves"};
    app.name("pushfwd");
    app.require_subcommand(1);
    Options opt;

    auto* cohom = app.add_subcommand("cohom", "cohomology of a multidegree line bundle");
    cohom->add_option("--d", opt.multidegree_text, "comma list of multidegrees")->required();
    cohom->add_option("--format", opt.format, "text|kv");

    auto* curve = app.add_subcommand("curve", "analyze a nodal curve configuration");
    curve->add_option("config", opt.config_path, "curve config file")->required();
    curve->add_option("--format", opt.format, "text|kv");

    auto* family = app.add_subcommand("family", "pushforward structure of a family");
    family->add_option("config", opt.config_path, "family config file")->required();
    family->add_option("--m", opt.m_text, "comma list of multiplicities");
    family->add_flag("--fiber-ranks", opt.fiber_ranks, "stratum-by-stratum fiber table");
    family->add_option("--degree-bound", opt.degree_bound, "truncation bound");
    family->add_option("--format", opt.format, "text|kv");

    auto* blowup = app.add_subcommand("blowup", "blow up the base and test kernel freeness");
    blowup->add_option("config", opt.config_path, "family config file")->required();
    blowup->add_option("--m", opt.m_text, "comma list of multiplicities");
    blowup->add_option("--center", opt.centers, "comma list of center parameters (repeatable)");
    blowup->add_option("--degree-bound", opt.degree_bound, "truncation bound");
    blowup->add_flag("--sweep", opt.sweep, "check every stratum, not just origin/generic");
    blowup->add_option("--format", opt.format, "text|kv");

    auto* extend = app.add_subcommand("extend", "section extensions on thickened fibers");
    extend->add_option("config", opt.config_path, "extension config file");
    extend->add_option("--m", opt.ext_m, "section degree");
    extend->add_option("--twist", opt.twist_text, "none|d0-d1");
    extend->add_option("--kmax", opt.kmax, "highest thickening level");
    extend->add_option("--format", opt.format, "text|kv");

    auto* selftest = app.add_subcommand("selftest", "run the full acceptance suite");

    std::vector<std::string> argv = args;
    std::reverse(argv.begin(), argv.end());  // CLI11 consumes from the back
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (opt.format != "text" && opt.format != "kv")
            throw std::runtime_error("unknown format " + opt.format);
        if (cohom->parsed())
            print_cohom(opt, out);
        else if (curve->parsed())
            print_curve(opt, out);
        else if (family->parsed())
            print_family(opt, out);
        else if (blowup->parsed())
            print_blowup(opt, out);
        else if (extend->parsed())
            print_extend(opt, out);
        else if (selftest->parsed())
            return accept::run_all(out) ? 0 : 1;
    } catch (const ConfigParseException& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace pushfwd
