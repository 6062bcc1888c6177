// Declarative configuration files: line-oriented "section.key = value"
// documents describing curves, families, and extension runs.
#pragma once

#include <iosfwd>
#include <string>

#include "pushfwd/extension.hpp"
#include "pushfwd/family.hpp"
#include "pushfwd/nodalcurve.hpp"

namespace pushfwd {

struct ParseError {
    int line = 0;
    int column = 0;
    std::string message;

    std::string str() const;
};

class ConfigParseException : public std::runtime_error {
public:
    explicit ConfigParseException(ParseError error);
    const ParseError& error() const { return error_; }

private:
    ParseError error_;
};

struct ConfigDocument {
    enum class Kind { Curve, Family, Extension };
    Kind kind = Kind::Family;
    std::string name;
    std::string comment;

    FamilyConfig family;           // Kind::Family
    std::vector<int> family_m;     // optional default multiplicities

    CurveGraph curve_graph;        // Kind::Curve
    BundleOnCurve curve_bundle;

    int ext_m = 1;                 // Kind::Extension
    TwistSpec ext_twist;
    int ext_kmax = 1;

    bool operator==(const ConfigDocument& o) const;
};

// Strict parse: unknown keys, malformed values, and out-of-order node
// ids are positioned errors.
ConfigDocument parse_config(const std::string& text);

// Canonical rendering; parse(render(doc)) == doc.
std::string render_config(const ConfigDocument& doc);

ConfigDocument load_config_file(const std::string& path);

}  // namespace pushfwd
