#include "conelang/automata/serialize.hpp"

#include <sstream>

#include "conelang/errors.hpp"

namespace conelang::automata {

namespace {

Json alphabet_json(const Alphabet& a) {
    Json arr = Json::array();
    for (const auto& l : a.letters()) {
        Json o;
        o["id"] = l.id;
        if (l.inverse_of)
            o["inverse_of"] = *l.inverse_of;
        arr.push_back(std::move(o));
    }
    return arr;
}

Alphabet alphabet_from(const Json& j) {
    std::vector<Letter> letters;
    for (const auto& o : j) {
        Letter l{o.at("id").get<std::string>(), std::nullopt};
        if (o.contains("inverse_of"))
            l.inverse_of = o.at("inverse_of").get<std::string>();
        letters.push_back(std::move(l));
    }
    return Alphabet(std::move(letters));
}

Json letter_json(const Alphabet& a, Symbol x) {
    return x == kEpsilon ? Json(nullptr) : Json(a.id(x));
}

Symbol letter_from(const Alphabet& a, const Json& j) {
    return j.is_null() ? kEpsilon : a.at(j.get<std::string>());
}

Json word_json(const Alphabet& a, const Word& w) {
    Json arr = Json::array();
    for (Symbol x : w)
        arr.push_back(a.id(x));
    return arr;
}

void header(Json& j, const char* kind, const Alphabet& a) {
    j["kind"] = kind;
    j["alphabet"] = alphabet_json(a);
}

} // namespace

Json to_json(const Nfa& m) {
    Json j;
    header(j, "nfa", m.alphabet());
    j["states"] = m.num_states();
    j["initial"] = m.initial();
    j["accepting"] = m.accepting();
    if (m.sign_partition()) {
        Json s;
        s["plus"] = m.sign_partition()->plus;
        s["minus"] = m.sign_partition()->minus;
        j["sign"] = std::move(s);
    }
    Json tr = Json::array();
    for (State s = 0; s < m.num_states(); ++s)
        for (const auto& e : m.edges(s)) {
            Json o;
            o["from"] = s;
            o["letter"] = letter_json(m.alphabet(), e.letter);
            o["to"] = e.to;
            tr.push_back(std::move(o));
        }
    j["transitions"] = std::move(tr);
    return j;
}

Json to_json(const OneCounter& m) {
    Json j;
    header(j, "onecounter", m.alphabet());
    j["states"] = m.num_states();
    j["initial"] = m.initial();
    j["accepting"] = m.accepting();
    j["initial_counter"] = m.initial_counter();
    Json tr = Json::array();
    for (State s = 0; s < m.num_states(); ++s)
        for (const auto& e : m.edges(s)) {
            Json o;
            o["from"] = s;
            o["letter"] = letter_json(m.alphabet(), e.letter);
            o["to"] = e.to;
            o["delta"] = e.delta;
            o["zero_flag"] = e.flag == ZeroFlag::Zero ? "zero" : "positive";
            tr.push_back(std::move(o));
        }
    j["transitions"] = std::move(tr);
    return j;
}

Json to_json(const Transducer& t) {
    Json j;
    header(j, "transducer", t.input_alphabet());
    j["output_alphabet"] = alphabet_json(t.output_alphabet());
    j["states"] = t.num_states();
    j["initial"] = t.initial();
    j["accepting"] = t.accepting();
    Json tr = Json::array();
    for (State s = 0; s < t.num_states(); ++s)
        for (const auto& e : t.edges(s)) {
            Json o;
            o["from"] = s;
            o["letter"] = letter_json(t.input_alphabet(), e.letter);
            o["to"] = e.to;
            o["output"] = word_json(t.output_alphabet(), e.output);
            tr.push_back(std::move(o));
        }
    j["transitions"] = std::move(tr);
    return j;
}

Json to_json(const AnyMachine& m) {
    return std::visit([](const auto& x) { return to_json(x); }, m);
}

AnyMachine machine_from_json(const Json& j) {
    try {
        const auto kind = j.at("kind").get<std::string>();
        Alphabet alphabet = alphabet_from(j.at("alphabet"));
        const auto n = j.at("states").get<std::size_t>();
        const auto initial = j.at("initial").get<State>();
        const auto accepting = j.at("accepting").get<std::vector<State>>();
        if (kind == "nfa") {
            NfaBuilder b(alphabet);
            b.add_states(n);
            b.set_initial(initial);
            for (State s : accepting)
                b.set_accepting(s);
            for (const auto& o : j.at("transitions"))
                b.add_transition(o.at("from").get<State>(), letter_from(alphabet, o.at("letter")),
                                 o.at("to").get<State>());
            if (j.contains("sign"))
                b.set_sign_partition(j["sign"].at("plus").get<std::vector<State>>(),
                                     j["sign"].at("minus").get<std::vector<State>>());
            return std::move(b).build();
        }
        if (kind == "onecounter") {
            OneCounterBuilder b(alphabet);
            b.add_states(n);
            b.set_initial(initial);
            b.set_initial_counter(j.value("initial_counter", std::uint64_t{0}));
            for (State s : accepting)
                b.set_accepting(s);
            for (const auto& o : j.at("transitions")) {
                auto flag = o.at("zero_flag").get<std::string>();
                if (flag != "zero" && flag != "positive")
                    throw MachineError("zero_flag must be \"zero\" or \"positive\"");
                b.add_transition(o.at("from").get<State>(), letter_from(alphabet, o.at("letter")),
                                 flag == "zero" ? ZeroFlag::Zero : ZeroFlag::Positive, o.at("to").get<State>(),
                                 o.at("delta").get<int>());
            }
            return std::move(b).build();
        }
        if (kind == "transducer") {
            Alphabet output = alphabet_from(j.at("output_alphabet"));
            TransducerBuilder b(alphabet, output);
            b.add_states(n);
            b.set_initial(initial);
            for (State s : accepting)
                b.set_accepting(s);
            for (const auto& o : j.at("transitions")) {
                Word u;
                for (const auto& y : o.at("output"))
                    u.push_back(output.at(y.get<std::string>()));
                b.add_transition(o.at("from").get<State>(), letter_from(alphabet, o.at("letter")),
                                 o.at("to").get<State>(), std::move(u));
            }
            return std::move(b).build();
        }
        throw MachineError("unknown machine kind '" + kind + "'");
    } catch (const nlohmann::json::exception& e) {
        throw MachineError(std::string("malformed machine JSON: ") + e.what());
    }
}

std::string dump(const Json& j) {
    return j.dump(2) + "\n";
}

// ---- DOT ------------------------------------------------------------------------

std::string display_letter(std::string_view id) {
    if (id.size() > kInverseSuffix.size() && id.ends_with(kInverseSuffix))
        return base_name(id) + "⁻¹";
    return std::string(id);
}

namespace {

std::string display(const Alphabet& a, Symbol x) {
    return x == kEpsilon ? "ε" : display_letter(a.id(x));
}

std::string display_word(const Alphabet& a, const Word& w) {
    if (w.empty())
        return "ε";
    std::string s;
    for (Symbol x : w)
        s += display_letter(a.id(x));
    return s;
}

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out + "\"";
}

/// Node lines shared by all three machine kinds.
void nodes(std::ostringstream& out, const std::string& name, std::size_t n, State initial,
           const std::function<bool(State)>& accepting, const std::function<std::string(State)>& label) {
    out << "digraph " << quote(name) << " {\n";
    out << "  rankdir=LR;\n";
    out << "  node [shape=circle];\n";
    out << "  start [shape=point];\n";
    out << "  start -> " << initial << ";\n";
    for (State s = 0; s < n; ++s) {
        out << "  " << s << " [label=" << quote(label(s));
        if (accepting(s))
            out << ", shape=doublecircle";
        out << "];\n";
    }
}

std::string signed_delta(int d) {
    return d > 0 ? "+" + std::to_string(d) : std::to_string(d);
}

} // namespace

std::string to_dot(const Nfa& m, const std::string& name) {
    std::ostringstream out;
    const auto* sign = m.sign_partition() ? &*m.sign_partition() : nullptr;
    auto label = [&](State s) {
        std::string l = std::to_string(s);
        if (sign && std::binary_search(sign->plus.begin(), sign->plus.end(), s))
            l += "⁺";
        if (sign && std::binary_search(sign->minus.begin(), sign->minus.end(), s))
            l += "⁻";
        return l;
    };
    nodes(out, name, m.num_states(), m.initial(), [&](State s) { return m.is_accepting(s); }, label);
    for (State s = 0; s < m.num_states(); ++s)
        for (const auto& e : m.edges(s))
            out << "  " << s << " -> " << e.to << " [label=" << quote(display(m.alphabet(), e.letter)) << "];\n";
    out << "}\n";
    return out.str();
}

std::string to_dot(const OneCounter& m, const std::string& name) {
    std::ostringstream out;
    nodes(out, name, m.num_states(), m.initial(), [&](State s) { return m.is_accepting(s); },
          [](State s) { return std::to_string(s); });
    for (State s = 0; s < m.num_states(); ++s)
        for (const auto& e : m.edges(s)) {
            auto l = display(m.alphabet(), e.letter) + "," + signed_delta(e.delta) +
                     (e.flag == ZeroFlag::Zero ? " [=0]" : " [>0]");
            out << "  " << s << " -> " << e.to << " [label=" << quote(l) << "];\n";
        }
    out << "}\n";
    return out.str();
}

std::string to_dot(const Transducer& t, const std::string& name) {
    std::ostringstream out;
    nodes(out, name, t.num_states(), t.initial(), [&](State s) { return t.is_accepting(s); },
          [](State s) { return std::to_string(s); });
    for (State s = 0; s < t.num_states(); ++s)
        for (const auto& e : t.edges(s)) {
            auto l = display(t.input_alphabet(), e.letter) + "/" + display_word(t.output_alphabet(), e.output);
            out << "  " << s << " -> " << e.to << " [label=" << quote(l) << "];\n";
        }
    out << "}\n";
    return out.str();
}

std::string to_dot(const AnyMachine& m, const std::string& name) {
    return std::visit([&](const auto& x) { return to_dot(x, name); }, m);
}

} // namespace conelang::automata
