// registry.hpp -- every construction addressable by name and JSON parameters
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "conelang/automata/serialize.hpp"
#include "conelang/cones/cone.hpp"
#include "conelang/cones/tau_cones.hpp"

namespace conelang::cones {

using automata::AnyMachine;
using automata::Json;

struct ParamSpec {
    std::string name;
    /// "integer" or "integer_list".
    std::string type;
    Json default_value;
    std::string doc;
};

/// What a construction produced. Machines that are not cones (the figure
/// automata, pm automata, transducers) leave `cone` empty.
struct Built {
    std::string name;
    Json params;
    AnyMachine machine;
    std::optional<ConeLanguage> cone;
    /// Closed-form positivity of the cone, when one is known.
    Predicate oracle;
    std::optional<EmbeddedCone> embedded;
    /// tau on the factor G of an embedded cone on G x Z.
    std::function<Int(const Element&)> inner_tau;
    /// A candidate accepted word for an element, used to cover ball elements
    /// whose words exceed the enumeration budget.
    std::function<std::optional<automata::Word>(const Element&)> witness;
};

struct Construction {
    std::string name;
    std::string summary;
    std::vector<ParamSpec> params;
    std::function<Built(const Json& params)> build;
};

const std::vector<Construction>& registry();

/// Throws InvalidParameter naming the known constructions.
const Construction& find_construction(const std::string& name);

/// Fills defaults and checks parameter names and types; throws
/// InvalidParameter on unknown or ill-typed parameters.
Json resolve_params(const Construction& c, const Json& params);

Built build_construction(const std::string& name, const Json& params = Json::object());

/// A figure reproduced as a golden file pair <stem>.dot and <stem>.json.
struct GoldenFigure {
    std::string stem;
    std::string construction;
    Json params;
};

const std::vector<GoldenFigure>& golden_figures();

/// {"name", "summary", "params": {name: {"type", "default", "doc"}}}.
Json construction_schema(const Construction& c);

} // namespace conelang::cones
