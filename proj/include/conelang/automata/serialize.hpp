// serialize.hpp -- canonical machine JSON and Graphviz DOT export
#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "conelang/automata/nfa.hpp"
#include "conelang/automata/one_counter.hpp"
#include "conelang/automata/transducer.hpp"

namespace conelang::automata {

using Json = nlohmann::ordered_json;
using AnyMachine = std::variant<Nfa, OneCounter, Transducer>;

Json to_json(const Nfa& m);
Json to_json(const OneCounter& m);
Json to_json(const Transducer& t);
Json to_json(const AnyMachine& m);

/// Throws MachineError / AlphabetError on malformed input.
AnyMachine machine_from_json(const Json& j);

/// Pretty-printed, newline-terminated.
std::string dump(const Json& j);

/// Letter id as printed in figures: a' -> a⁻¹.
std::string display_letter(std::string_view id);

std::string to_dot(const Nfa& m, const std::string& name);
std::string to_dot(const OneCounter& m, const std::string& name);
std::string to_dot(const Transducer& t, const std::string& name);
std::string to_dot(const AnyMachine& m, const std::string& name);

} // namespace conelang::automata
