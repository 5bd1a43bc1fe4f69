// conelang -- build, query and audit the positive-cone machines from the command line
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "conelang/automata/serialize.hpp"
#include "conelang/cones/registry.hpp"
#include "conelang/errors.hpp"
#include "conelang/groups/tau.hpp"
#include "conelang/verify/checks.hpp"

namespace {

using namespace conelang;
using automata::Json;

constexpr int kExitClean = 0;
constexpr int kExitViolations = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 64;
constexpr int kExitConstruction = 70;

struct ParamFlags {
    std::optional<long long> q, variant, m, n;
    std::string signs;
    std::string params_json;

    void attach(CLI::App* cmd) {
        cmd->add_option("--q", q, "multiplier of BS(1,q)");
        cmd->add_option("--variant", variant, "lex variant 1..4");
        cmd->add_option("--m", m, "first amalgam multiplier");
        cmd->add_option("--n", n, "second amalgam multiplier");
        cmd->add_option("--signs", signs, "Klein order signs, e.g. 1,-1");
        cmd->add_option("--params", params_json, "parameters as a JSON object");
    }

    Json collect() const {
        Json p = params_json.empty() ? Json::object() : Json::parse(params_json);
        if (!p.is_object())
            throw InvalidParameter("--params must be a JSON object");
        if (q)
            p["q"] = *q;
        if (variant)
            p["variant"] = *variant;
        if (m)
            p["m"] = *m;
        if (n)
            p["n"] = *n;
        if (!signs.empty()) {
            Json list = Json::array();
            std::stringstream ss(signs);
            for (std::string item; std::getline(ss, item, ',');)
                list.push_back(std::stoll(item));
            p["signs"] = list;
        }
        return p;
    }
};

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw InvalidParameter("cannot write " + path);
    out << text;
}

std::string read_text(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        return {};
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string render(const cones::Built& built, const std::string& emit) {
    if (emit == "dot")
        return automata::to_dot(built.machine, built.name);
    return automata::dump(automata::to_json(built.machine));
}

int run_list(bool as_json) {
    Json all = Json::array();
    for (const auto& c : cones::registry())
        all.push_back(cones::construction_schema(c));
    if (as_json) {
        std::cout << automata::dump(all);
        return kExitClean;
    }
    for (const auto& c : cones::registry()) {
        std::cout << c.name;
        for (const auto& p : c.params)
            std::cout << " [--" << p.name << " " << p.type << " = " << p.default_value.dump() << "]";
        std::cout << "\n    " << c.summary << "\n";
    }
    return kExitClean;
}

int run_accepts(const cones::Built& built, const std::string& text) {
    return std::visit(
        [&](const auto& m) -> int {
            using M = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<M, automata::Transducer>) {
                auto w = automata::parse_word(m.input_alphabet(), text);
                auto outs = automata::transducer_outputs(m, w);
                std::cout << (outs.empty() ? "reject" : "accept") << "\n";
                for (const auto& o : outs)
                    std::cout << "output: " << (o.empty() ? "ε" : automata::format_word(m.output_alphabet(), o))
                              << "\n";
            } else if constexpr (std::is_same_v<M, automata::Nfa>) {
                auto w = automata::parse_word(m.alphabet(), text);
                bool ok = automata::accepts(m, w);
                std::cout << (ok ? "accept" : "reject");
                if (ok && m.sign_partition()) {
                    if (automata::accepts_plus(m, w))
                        std::cout << " plus";
                    if (automata::accepts_minus(m, w))
                        std::cout << " minus";
                }
                std::cout << "\n";
            } else {
                auto w = automata::parse_word(m.alphabet(), text);
                std::cout << (automata::oc_accepts(m, w) ? "accept" : "reject") << "\n";
            }
            return kExitClean;
        },
        built.machine);
}

int run_verify(const cones::Built& built, const verify::AuditConfig& cfg, const std::string& out) {
    auto report = verify::verify_construction(built, cfg);
    write_text(out, automata::dump(report.to_json()));
    if (report.has_failures())
        return kExitViolations;
    return report.clean() ? kExitClean : kExitInconclusive;
}

int run_tau(const std::string& text, const std::string& group_name, long long m, long long n) {
    groups::Int value;
    if (group_name == "f2") {
        auto g = groups::f2_as_free_product();
        value = groups::f2_tau(g->evaluate(automata::parse_word(g->alphabet(), text)));
    } else if (group_name == "bs_amalgam") {
        auto g = groups::bs_amalgam_group(m, n);
        value = groups::tau_value(static_cast<const groups::BsAmalgamGroup&>(*g), {0, 1},
                                  g->evaluate(automata::parse_word(g->alphabet(), text)));
    } else {
        throw InvalidParameter("tau: unknown group '" + group_name + "' (known: f2, bs_amalgam)");
    }
    std::cout << value << "\n";
    return kExitClean;
}

int run_golden(const std::string& dir, bool regenerate) {
    int status = kExitClean;
    if (regenerate)
        std::filesystem::create_directories(dir);
    for (const auto& fig : cones::golden_figures()) {
        auto built = cones::build_construction(fig.construction, fig.params);
        for (const std::string ext : {"dot", "json"}) {
            auto path = std::filesystem::path(dir) / (fig.stem + "." + ext);
            auto text = render(built, ext);
            if (regenerate) {
                write_text(path.string(), text);
                std::cout << "wrote " << path.string() << "\n";
            } else if (read_text(path) != text) {
                std::cout << "MISMATCH " << path.string() << "\n";
                status = kExitViolations;
            } else {
                std::cout << "ok " << path.string() << "\n";
            }
        }
    }
    return status;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"conelang: positive-cone machines for left-orderable groups"};
    app.require_subcommand(1);

    auto* list = app.add_subcommand("list", "list registered constructions with their parameters");
    bool list_json = false;
    list->add_flag("--json", list_json, "print the parameter schemas as JSON");

    std::string name, word, emit = "json", out, group_name = "f2", golden_dir = "golden";
    ParamFlags flags;
    verify::AuditConfig cfg;
    long long tau_m = 2, tau_n = 3;
    bool regenerate = false;

    auto* build = app.add_subcommand("build", "write a construction's machine");
    build->add_option("construction", name)->required();
    build->add_option("--emit", emit, "dot or json")->check(CLI::IsMember({"dot", "json"}));
    build->add_option("-o,--output", out, "output file, default stdout");
    flags.attach(build);

    auto* acc = app.add_subcommand("accepts", "decide membership of a word");
    acc->add_option("construction", name)->required();
    acc->add_option("word", word, "space-separated letters, a' for the inverse of a")->required();
    flags.attach(acc);

    auto* ver = app.add_subcommand("verify", "audit a cone on a ball and run its property checks");
    ver->add_option("construction", name)->required();
    ver->add_option("--radius", cfg.ball_radius, "ball radius");
    ver->add_option("--max-word-len", cfg.max_word_len, "longest accepted word enumerated");
    ver->add_option("--closure-radius", cfg.closure_radius, "window for products");
    ver->add_option("-o,--output", out, "report file, default stdout");
    flags.attach(ver);

    auto* tau = app.add_subcommand("tau", "print tau of a word in a free or amalgamated product");
    tau->add_option("word", word)->required();
    tau->add_option("--group", group_name, "f2 or bs_amalgam");
    tau->add_option("--m", tau_m, "first amalgam multiplier");
    tau->add_option("--n", tau_n, "second amalgam multiplier");

    auto* golden = app.add_subcommand("golden", "compare figure machines with the golden files");
    golden->add_option("--dir", golden_dir, "golden directory");
    golden->add_flag("--regenerate", regenerate, "rewrite the golden files instead of comparing");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*list)
            return run_list(list_json);
        if (*tau)
            return run_tau(word, group_name, tau_m, tau_n);
        if (*golden)
            return run_golden(golden_dir, regenerate);
        auto built = cones::build_construction(name, flags.collect());
        if (*build) {
            write_text(out, render(built, emit));
            return kExitClean;
        }
        if (*acc)
            return run_accepts(built, word);
        return run_verify(built, cfg, out);
    } catch (const InvalidParameter& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const AlphabetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Json::exception& e) {
        std::cerr << "error: bad --params: " << e.what() << "\n";
        return kExitUsage;
    } catch (const GroupError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "construction failed: " << e.what() << "\n";
        return kExitConstruction;
    }
}
