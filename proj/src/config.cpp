#include "pushfwd/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace pushfwd {

std::string ParseError::str() const {
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message;
}

ConfigParseException::ConfigParseException(ParseError error)
    : std::runtime_error(error.str()), error_(std::move(error)) {}

namespace {

[[noreturn]] void fail(int line, int column, const std::string& message) {
    throw ConfigParseException(ParseError{line, column, message});
}

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t");
    std::size_t e = s.find_last_not_of(" \t");
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

bool valid_name(const std::string& s) {
    if (s.empty() || (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_'))
        return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '\'')
            return false;
    return true;
}

std::vector<std::string> split_list(const std::string& value) {
    std::vector<std::string> out;
    std::string item;
    std::stringstream ss(value);
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty())
            out.push_back(item);
    }
    return out;
}

int parse_int(const std::string& value, int line, int column) {
    try {
        std::size_t used = 0;
        int v = std::stoi(value, &used);
        if (used != value.size())
            fail(line, column, "trailing characters after integer '" + value + "'");
        return v;
    } catch (const ConfigParseException&) {
        throw;
    } catch (const std::exception&) {
        fail(line, column, "expected an integer, got '" + value + "'");
    }
}

struct Line {
    int number;
    int key_column;
    int value_column;
    std::vector<std::string> key;  // dot-separated parts
    std::string key_text;
    std::string value;
};

std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> out;
    std::stringstream ss(text);
    std::string raw;
    int number = 0;
    while (std::getline(ss, raw)) {
        ++number;
        std::string stripped = raw;
        auto hash = stripped.find('#');
        if (hash != std::string::npos)
            stripped = stripped.substr(0, hash);
        if (trim(stripped).empty())
            continue;
        auto eq = stripped.find('=');
        if (eq == std::string::npos)
            fail(number, 1, "expected 'section.key = value'");
        Line line;
        line.number = number;
        line.key_column = static_cast<int>(stripped.find_first_not_of(" \t")) + 1;
        line.key_text = trim(stripped.substr(0, eq));
        std::size_t vstart = stripped.find_first_not_of(" \t", eq + 1);
        line.value_column = vstart == std::string::npos ? static_cast<int>(eq) + 2
                                                        : static_cast<int>(vstart) + 1;
        line.value = trim(stripped.substr(eq + 1));
        std::stringstream ks(line.key_text);
        std::string part;
        while (std::getline(ks, part, '.'))
            line.key.push_back(part);
        if (line.key.empty())
            fail(number, line.key_column, "empty key");
        out.push_back(std::move(line));
    }
    return out;
}

PointLabel parse_point(const std::string& token, int line, int column) {
    if (token == "zero")
        return PointLabel::zero();
    if (token == "inf")
        return PointLabel::infinity();
    if (!valid_name(token))
        fail(line, column, "bad point label '" + token + "'");
    return PointLabel::generic(token);
}

std::string point_str(const PointLabel& p) {
    switch (p.kind) {
        case PointLabel::Kind::Zero:
            return "zero";
        case PointLabel::Kind::Infinity:
            return "inf";
        default:
            return p.name;
    }
}

}  // namespace

bool ConfigDocument::operator==(const ConfigDocument& o) const {
    if (kind != o.kind || name != o.name || comment != o.comment)
        return false;
    switch (kind) {
        case Kind::Family: {
            auto tails_equal = [](const FamilyConfig& a, const FamilyConfig& b) {
                if (a.mode != b.mode || a.tails.size() != b.tails.size())
                    return false;
                for (std::size_t i = 0; i < a.tails.size(); ++i) {
                    const auto& x = a.tails[i];
                    const auto& y = b.tails[i];
                    if (x.parameter != y.parameter || x.multiplicity != y.multiplicity ||
                        x.chain != y.chain)
                        return false;
                }
                return true;
            };
            return tails_equal(family, o.family) && family_m == o.family_m;
        }
        case Kind::Curve: {
            if (curve_graph.components.size() != o.curve_graph.components.size() ||
                curve_graph.nodes.size() != o.curve_graph.nodes.size())
                return false;
            for (std::size_t i = 0; i < curve_graph.components.size(); ++i) {
                const auto& a = curve_graph.components[i];
                const auto& b = o.curve_graph.components[i];
                if (a.id != b.id || a.genus != b.genus)
                    return false;
            }
            for (std::size_t i = 0; i < curve_graph.nodes.size(); ++i) {
                const auto& a = curve_graph.nodes[i];
                const auto& b = o.curve_graph.nodes[i];
                if (a.a.component != b.a.component || !(a.a.point == b.a.point) ||
                    a.b.component != b.b.component || !(a.b.point == b.b.point))
                    return false;
            }
            if (curve_bundle.per_component.size() != o.curve_bundle.per_component.size())
                return false;
            for (const auto& [id, data] : curve_bundle.per_component) {
                auto it = o.curve_bundle.per_component.find(id);
                if (it == o.curve_bundle.per_component.end() ||
                    it->second.degree != data.degree || it->second.trivial != data.trivial ||
                    it->second.divisor_nodes != data.divisor_nodes)
                    return false;
            }
            return true;
        }
        case Kind::Extension:
            return ext_m == o.ext_m && ext_twist.kind == o.ext_twist.kind &&
                   ext_kmax == o.ext_kmax;
    }
    return false;
}

ConfigDocument parse_config(const std::string& text) {
    auto lines = tokenize(text);
    if (lines.empty())
        fail(1, 1, "empty document");

    const Line& head = lines.front();
    ConfigDocument doc;
    std::string kind_word;
    if (head.key.size() == 2 && head.key[1] == "kind") {
        kind_word = head.value;
        if (kind_word != head.key[0])
            fail(head.number, head.value_column,
                 "kind '" + head.value + "' does not match section '" + head.key[0] + "'");
    } else {
        fail(head.number, head.key_column, "first line must declare the document kind");
    }
    if (kind_word == "family")
        doc.kind = ConfigDocument::Kind::Family;
    else if (kind_word == "curve")
        doc.kind = ConfigDocument::Kind::Curve;
    else if (kind_word == "extension")
        doc.kind = ConfigDocument::Kind::Extension;
    else
        fail(head.number, head.value_column, "unknown kind '" + kind_word + "'");

    std::set<std::string> seen_keys{head.key_text};
    // Raw curve pieces to resolve once all nodes are read.
    std::vector<std::string> component_order;
    std::map<std::string, int> genus_of, degree_of;
    std::map<std::string, bool> trivial_of;
    std::map<std::string, std::vector<int>> divisor_ids;
    int next_node_id = 1;
    bool have_mode = false, have_tails = false, have_m = false, have_kmax = false;
    bool have_ext_m = false, have_twist = false;

    for (std::size_t idx = 1; idx < lines.size(); ++idx) {
        const Line& line = lines[idx];
        if (!seen_keys.insert(line.key_text).second)
            fail(line.number, line.key_column, "duplicate key '" + line.key_text + "'");
        const auto& key = line.key;

        auto unknown = [&]() -> void {
            fail(line.number, line.key_column, "unknown key '" + line.key_text + "'");
        };

        switch (doc.kind) {
            case ConfigDocument::Kind::Family: {
                if (key[0] == "family" && key.size() == 2) {
                    if (key[1] == "name") {
                        doc.name = line.value;
                        doc.family.name = line.value;
                    } else if (key[1] == "comment") {
                        doc.comment = line.value;
                    } else if (key[1] == "mode") {
                        if (line.value == "local")
                            doc.family.mode = BaseMode::LocalAffine;
                        else if (line.value == "multiprojective")
                            doc.family.mode = BaseMode::Multiprojective;
                        else
                            fail(line.number, line.value_column,
                                 "mode must be 'local' or 'multiprojective'");
                        have_mode = true;
                    } else if (key[1] == "tails") {
                        for (const auto& p : split_list(line.value)) {
                            if (!valid_name(p))
                                fail(line.number, line.value_column,
                                     "bad parameter name '" + p + "'");
                            doc.family.tails.push_back(TailSpec{p, 1, {}});
                        }
                        if (doc.family.tails.empty())
                            fail(line.number, line.value_column, "no tail parameters given");
                        have_tails = true;
                    } else if (key[1] == "m") {
                        for (const auto& p : split_list(line.value))
                            doc.family_m.push_back(parse_int(p, line.number, line.value_column));
                        have_m = true;
                    } else {
                        unknown();
                    }
                } else if (key[0] == "tail" && key.size() == 3 && key[2] == "chain") {
                    if (!have_tails)
                        fail(line.number, line.key_column, "tail.*.chain before family.tails");
                    bool found = false;
                    for (auto& t : doc.family.tails) {
                        if (t.parameter == key[1]) {
                            for (const auto& g : split_list(line.value)) {
                                if (!valid_name(g))
                                    fail(line.number, line.value_column,
                                         "bad parameter name '" + g + "'");
                                t.chain.push_back(g);
                            }
                            found = true;
                            break;
                        }
                    }
                    if (!found)
                        fail(line.number, line.key_column, "unknown tail '" + key[1] + "'");
                } else {
                    unknown();
                }
                break;
            }
            case ConfigDocument::Kind::Curve: {
                if (key[0] == "curve" && key.size() == 2) {
                    if (key[1] == "name")
                        doc.name = line.value;
                    else if (key[1] == "comment")
                        doc.comment = line.value;
                    else
                        unknown();
                } else if (key[0] == "component" && key.size() == 3) {
                    const std::string& id = key[1];
                    if (!valid_name(id))
                        fail(line.number, line.key_column, "bad component id '" + id + "'");
                    if (std::find(component_order.begin(), component_order.end(), id) ==
                        component_order.end())
                        component_order.push_back(id);
                    if (key[2] == "genus")
                        genus_of[id] = parse_int(line.value, line.number, line.value_column);
                    else if (key[2] == "degree")
                        degree_of[id] = parse_int(line.value, line.number, line.value_column);
                    else if (key[2] == "trivial") {
                        if (line.value == "true")
                            trivial_of[id] = true;
                        else if (line.value == "false")
                            trivial_of[id] = false;
                        else
                            fail(line.number, line.value_column, "expected true or false");
                    } else if (key[2] == "divisor_nodes") {
                        for (const auto& p : split_list(line.value))
                            divisor_ids[id].push_back(
                                parse_int(p, line.number, line.value_column));
                    } else {
                        unknown();
                    }
                } else if (key[0] == "node" && key.size() == 2) {
                    int id = parse_int(key[1], line.number, line.key_column);
                    if (id != next_node_id)
                        fail(line.number, line.key_column,
                             "node ids must be 1,2,... in order; expected node." +
                                 std::to_string(next_node_id));
                    ++next_node_id;
                    auto ends = split_list(line.value);
                    if (ends.size() != 2)
                        fail(line.number, line.value_column,
                             "a node needs exactly two 'component:point' ends");
                    CurveNode node;
                    NodeEnd* slots[2] = {&node.a, &node.b};
                    for (int s = 0; s < 2; ++s) {
                        auto colon = ends[s].find(':');
                        if (colon == std::string::npos)
                            fail(line.number, line.value_column,
                                 "node end '" + ends[s] + "' is not 'component:point'");
                        slots[s]->component = trim(ends[s].substr(0, colon));
                        slots[s]->point = parse_point(trim(ends[s].substr(colon + 1)),
                                                      line.number, line.value_column);
                    }
                    doc.curve_graph.nodes.push_back(node);
                } else {
                    unknown();
                }
                break;
            }
            case ConfigDocument::Kind::Extension: {
                if (key[0] == "extension" && key.size() == 2) {
                    if (key[1] == "name")
                        doc.name = line.value;
                    else if (key[1] == "comment")
                        doc.comment = line.value;
                    else if (key[1] == "m") {
                        doc.ext_m = parse_int(line.value, line.number, line.value_column);
                        have_ext_m = true;
                    } else if (key[1] == "twist") {
                        if (line.value == "none")
                            doc.ext_twist = TwistSpec::none();
                        else if (line.value == "d0-d1")
                            doc.ext_twist = TwistSpec::d0_minus_d1();
                        else
                            fail(line.number, line.value_column,
                                 "twist must be 'none' or 'd0-d1'");
                        have_twist = true;
                    } else if (key[1] == "kmax") {
                        doc.ext_kmax = parse_int(line.value, line.number, line.value_column);
                        have_kmax = true;
                    } else {
                        unknown();
                    }
                } else {
                    unknown();
                }
                break;
            }
        }
    }

    // Kind-specific assembly and validation.
    if (doc.kind == ConfigDocument::Kind::Family) {
        if (!have_tails)
            fail(1, 1, "family document without family.tails");
        if (have_m) {
            if (doc.family_m.size() != doc.family.tails.size())
                fail(1, 1, "family.m length does not match family.tails");
            for (std::size_t i = 0; i < doc.family_m.size(); ++i)
                doc.family.tails[i].multiplicity = doc.family_m[i];
        }
        (void)have_mode;
        doc.family.validate();
    } else if (doc.kind == ConfigDocument::Kind::Curve) {
        for (const auto& id : component_order) {
            if (!genus_of.count(id))
                fail(1, 1, "component " + id + " has no genus");
            doc.curve_graph.components.push_back({id, genus_of[id]});
            ComponentBundle b;
            b.degree = degree_of.count(id) ? degree_of[id] : 0;
            b.trivial = trivial_of.count(id) ? trivial_of[id] : false;
            for (int nid : divisor_ids[id]) {
                if (nid < 1 || nid >= next_node_id)
                    fail(1, 1, "component " + id + " references unknown node " +
                                   std::to_string(nid));
                b.divisor_nodes.insert(static_cast<std::size_t>(nid - 1));
            }
            doc.curve_bundle.per_component[id] = b;
        }
        doc.curve_graph.validate();
    } else {
        if (!have_ext_m)
            fail(1, 1, "extension document without extension.m");
        if (doc.ext_m < 1)
            fail(1, 1, "extension.m must be >= 1");
        if (have_kmax && doc.ext_kmax < 1)
            fail(1, 1, "extension.kmax must be >= 1");
        (void)have_twist;
    }
    return doc;
}

std::string render_config(const ConfigDocument& doc) {
    std::ostringstream out;
    switch (doc.kind) {
        case ConfigDocument::Kind::Family: {
            out << "family.kind = family\n";
            if (!doc.name.empty())
                out << "family.name = " << doc.name << "\n";
            if (!doc.comment.empty())
                out << "family.comment = " << doc.comment << "\n";
            out << "family.mode = "
                << (doc.family.mode == BaseMode::LocalAffine ? "local" : "multiprojective")
                << "\n";
            out << "family.tails = ";
            for (std::size_t i = 0; i < doc.family.tails.size(); ++i)
                out << (i ? "," : "") << doc.family.tails[i].parameter;
            out << "\n";
            if (!doc.family_m.empty()) {
                out << "family.m = ";
                for (std::size_t i = 0; i < doc.family_m.size(); ++i)
                    out << (i ? "," : "") << doc.family_m[i];
                out << "\n";
            }
            for (const auto& t : doc.family.tails) {
                if (t.chain.empty())
                    continue;
                out << "tail." << t.parameter << ".chain = ";
                for (std::size_t i = 0; i < t.chain.size(); ++i)
                    out << (i ? "," : "") << t.chain[i];
                out << "\n";
            }
            break;
        }
        case ConfigDocument::Kind::Curve: {
            out << "curve.kind = curve\n";
            if (!doc.name.empty())
                out << "curve.name = " << doc.name << "\n";
            if (!doc.comment.empty())
                out << "curve.comment = " << doc.comment << "\n";
            for (const auto& c : doc.curve_graph.components) {
                out << "component." << c.id << ".genus = " << c.genus << "\n";
                const auto& b = doc.curve_bundle.at(c.id);
                out << "component." << c.id << ".degree = " << b.degree << "\n";
                if (b.trivial)
                    out << "component." << c.id << ".trivial = true\n";
                if (!b.divisor_nodes.empty()) {
                    out << "component." << c.id << ".divisor_nodes = ";
                    bool first = true;
                    for (auto n : b.divisor_nodes) {
                        out << (first ? "" : ",") << (n + 1);
                        first = false;
                    }
                    out << "\n";
                }
            }
            for (std::size_t i = 0; i < doc.curve_graph.nodes.size(); ++i) {
                const auto& n = doc.curve_graph.nodes[i];
                out << "node." << (i + 1) << " = " << n.a.component << ":" << point_str(n.a.point)
                    << ", " << n.b.component << ":" << point_str(n.b.point) << "\n";
            }
            break;
        }
        case ConfigDocument::Kind::Extension: {
            out << "extension.kind = extension\n";
            if (!doc.name.empty())
                out << "extension.name = " << doc.name << "\n";
            if (!doc.comment.empty())
                out << "extension.comment = " << doc.comment << "\n";
            out << "extension.m = " << doc.ext_m << "\n";
            out << "extension.twist = " << doc.ext_twist.str() << "\n";
            out << "extension.kmax = " << doc.ext_kmax << "\n";
            break;
        }
    }
    return out.str();
}

ConfigDocument load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open config file " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

}  // namespace pushfwd
