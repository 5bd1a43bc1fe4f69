#include "conelang/cones/registry.hpp"

#include <algorithm>

#include "conelang/cones/constructions.hpp"
#include "conelang/cones/oracles.hpp"
#include "conelang/errors.hpp"
#include "conelang/groups/tau.hpp"

namespace conelang::cones {

namespace {

Built from_cone(ConeLanguage cone, Predicate oracle) {
    Built b{"", Json::object(), std::visit([](const auto& m) -> AnyMachine { return m; }, cone.machine),
            std::nullopt, std::move(oracle), std::nullopt, nullptr, nullptr};
    b.cone = std::move(cone);
    return b;
}

Built from_machine(AnyMachine m) {
    return {"", Json::object(), std::move(m), std::nullopt, nullptr, std::nullopt, nullptr, nullptr};
}

Built from_embedded(EmbeddedCone e, Predicate oracle, std::function<Int(const Element&)> inner_tau) {
    auto b = from_cone(e.cone, std::move(oracle));
    b.embedded = std::move(e);
    b.inner_tau = std::move(inner_tau);
    return b;
}

Int get_int(const Json& p, const char* key) {
    return p.at(key).get<Int>();
}

ParamSpec q_param(Int def, const char* doc) {
    return {"q", "integer", def, doc};
}

std::vector<ParamSpec> amalgam_params() {
    return {{"m", "integer", 2, "multiplier of the b factor, >= 2"}, {"n", "integer", 3, "multiplier of the c factor, >= 2"}};
}

std::vector<Construction> make_registry() {
    std::vector<Construction> r;
    auto add = [&](std::string name, std::string summary, std::vector<ParamSpec> params,
                   std::function<Built(const Json&)> build) {
        r.push_back({std::move(name), std::move(summary), std::move(params), std::move(build)});
    };

    add("zz_cyclic", "{t}^+ on Z", {}, [](const Json&) { return from_cone(zz_cyclic(), zz_predicate); });
    add("fig2_automaton", "regular language of balance dips at most 2", {},
        [](const Json&) { return from_machine(fig2_automaton()); });
    add("fig3_onecounter", "one-counter language #t > #t'", {},
        [](const Json&) { return from_machine(fig3_onecounter()); });
    add("lquot_onecounter", "one-counter language a'^m b^k a^m", {},
        [](const Json&) { return from_machine(lquot_onecounter()); });
    add("z2_lex", "lexicographic cone on Z^2 led by y", {},
        [](const Json&) { return from_cone(z2_lex(), z2_lex_predicate); });
    add("z2_lex_projection", "the z2_lex machine projected to {t, t'}", {},
        [](const Json&) { return from_machine(z2_lex_projection()); });
    add("coarse_counterexample", "t t'^+ t^+", {}, [](const Json&) { return from_machine(coarse_counterexample()); });
    add("klein_order", "one of the four cones of the Klein bottle group",
        {{"signs", "integer_list", Json::array({1, 1}), "signs of b and a, each 1 or -1"}}, [](const Json& p) {
            const auto& s = p.at("signs");
            if (s.size() != 2)
                throw InvalidParameter("klein_order signs must have two entries");
            int b = s[0].get<int>(), a = s[1].get<int>();
            if ((b != 1 && b != -1) || (a != 1 && a != -1))
                throw InvalidParameter("klein_order signs must be 1 or -1");
            return from_cone(klein_order(b, a), klein_predicate(b, a));
        });
    add("bs_affine_cone", "affine cone on BS(1,q): g(0) > 0 or g in <a>^+", {q_param(2, "q >= 2")},
        [](const Json& p) {
            Int q = get_int(p, "q");
            auto b = from_cone(bs_affine_cone(q), bs_affine_predicate);
            b.witness = [q](const Element& g) { return bs_affine_witness(q, g, true); };
            return b;
        });
    add("bs_affine_relative_cone", "g(0) > 0 on BS(1,q), relative to <a>", {q_param(2, "q >= 2")},
        [](const Json& p) {
            Int q = get_int(p, "q");
            auto b = from_cone(bs_affine_relative_cone(q), bs_affine_relative_predicate);
            b.witness = [q](const Element& g) { return bs_affine_witness(q, g, false); };
            return b;
        });
    add("bs_lex_onecounter", "one-counter lexicographic cone on BS(1,q) led by Z",
        {q_param(-2, "q != 0"), {"variant", "integer", 1, "1..4"}}, [](const Json& p) {
            auto variant = static_cast<int>(get_int(p, "variant"));
            return from_cone(bs_lex_onecounter(get_int(p, "q"), variant), bs_lex_predicate(variant));
        });
    add("wreath_cone_zz", "wreath-product cone language on Z wr Z", {},
        [](const Json&) {
            auto b = from_cone(wreath_cone_zz(), leadcoef_predicate);
            b.witness = wreath_zz_witness;
            return b;
        });
    add("zwrz_cone", "hand-built automaton for Z wr Z", {},
        [](const Json&) { return from_cone(zwrz_cone(), leadcoef_predicate); });
    add("zz_pm_automaton", "pm automaton of {t}^+", {}, [](const Json&) { return from_machine(zz_pm_automaton()); });
    add("f2_pm_automaton", "pm automaton of {a}^+", {},
        [](const Json&) { return from_machine(f2_tau_data().factors[0]); });
    add("f2_tau_transducer", "tau-transducer of F2 = <a> * <b>", {},
        [](const Json&) { return from_machine(f2_tau_transducer()); });
    add("f2_onecounter_cone", "one-counter cone tau > 0 on F2", {},
        [](const Json&) { return from_cone(f2_onecounter_cone(), f2_tau_predicate); });
    add("embed_cross_z_f2", "regular cone tau(g) + 2n > 0 on F2 x Z", {}, [](const Json&) {
        return from_embedded(embed_cross_z_f2(), f2_cross_z_predicate, groups::f2_tau);
    });
    add("bs_amalgam_tau_transducer", "tau-transducer of BS(1,m) *_<a> BS(1,n)", amalgam_params(),
        [](const Json& p) {
            return from_machine(tau_transducer(bs_amalgam_tau_data(get_int(p, "m"), get_int(p, "n"))));
        });
    add("bs_amalgam_onecounter_cone", "one-counter cone on BS(1,m) *_<a> BS(1,n)", amalgam_params(),
        [](const Json& p) {
            return from_cone(bs_amalgam_onecounter_cone(get_int(p, "m"), get_int(p, "n")), bs_amalgam_predicate);
        });
    add("bs_amalgam_cross_z_cone", "regular cone on (BS(1,m) *_<a> BS(1,n)) x Z", amalgam_params(),
        [](const Json& p) {
            return from_cone(bs_amalgam_cross_z_cone(get_int(p, "m"), get_int(p, "n")),
                             bs_amalgam_cross_z_predicate);
        });
    add("f2_by_z_onecounter_cone", "one-counter cone on F2 x| Z led by the s-exponent", {},
        [](const Json&) { return from_cone(f2_by_z_onecounter_cone(), f2_by_z_predicate); });
    add("f2_by_z_cross_z_cone", "regular cone on (F2 x| Z) x Z led by the s-exponent", {},
        [](const Json&) { return from_cone(f2_by_z_cross_z_cone(), f2_by_z_cross_z_predicate); });
    return r;
}

} // namespace

const std::vector<Construction>& registry() {
    static const auto r = make_registry();
    return r;
}

const Construction& find_construction(const std::string& name) {
    const auto& r = registry();
    auto it = std::find_if(r.begin(), r.end(), [&](const Construction& c) { return c.name == name; });
    if (it != r.end())
        return *it;
    std::string known;
    for (const auto& c : r)
        known += (known.empty() ? "" : ", ") + c.name;
    throw InvalidParameter("unknown construction '" + name + "'; known: " + known);
}

Json resolve_params(const Construction& c, const Json& params) {
    if (!params.is_object())
        throw InvalidParameter("parameters of " + c.name + " must be a JSON object");
    Json out = Json::object();
    for (const auto& spec : c.params) {
        Json v = params.contains(spec.name) ? params.at(spec.name) : spec.default_value;
        bool ok = spec.type == "integer" ? v.is_number_integer()
                                         : v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& x) {
                                               return x.is_number_integer();
                                           });
        if (!ok)
            throw InvalidParameter("parameter '" + spec.name + "' of " + c.name + " must be of type " + spec.type);
        out[spec.name] = v;
    }
    for (const auto& [key, value] : params.items())
        if (!out.contains(key))
            throw InvalidParameter("construction " + c.name + " has no parameter '" + key + "'");
    return out;
}

Built build_construction(const std::string& name, const Json& params) {
    const auto& c = find_construction(name);
    auto resolved = resolve_params(c, params);
    auto built = c.build(resolved);
    built.name = name;
    built.params = std::move(resolved);
    return built;
}

const std::vector<GoldenFigure>& golden_figures() {
    static const std::vector<GoldenFigure> figures{
        {"fig2_fsa", "fig2_automaton", Json::object()},
        {"fig3_onecounter", "fig3_onecounter", Json::object()},
        {"fig4_lquot", "lquot_onecounter", Json::object()},
        {"fig5_bs_affine", "bs_affine_cone", {{"q", 2}}},
        {"fig6_zwrz", "zwrz_cone", Json::object()},
        {"fig7_pm_automaton", "zz_pm_automaton", Json::object()},
        {"fig8_f2_transducer", "f2_tau_transducer", Json::object()},
        {"fig9_f2_cross_z", "embed_cross_z_f2", Json::object()},
    };
    return figures;
}

Json construction_schema(const Construction& c) {
    Json params = Json::object();
    for (const auto& p : c.params)
        params[p.name] = {{"type", p.type}, {"default", p.default_value}, {"doc", p.doc}};
    return {{"name", c.name}, {"summary", c.summary}, {"params", params}};
}

} // namespace conelang::cones
