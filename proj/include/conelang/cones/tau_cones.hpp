// tau_cones.hpp -- cones from ordering quasi-morphisms on free and amalgamated products
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "conelang/automata/transducer.hpp"
#include "conelang/cones/cone.hpp"

namespace conelang::cones {

using automata::State;
using automata::Transducer;

/// One machine whose plus-accepted language is L_P and whose minus-accepted
/// language is its formal inverse, sharing the start state.
/// Throws AlphabetError when a letter of L_P has no inverse and
/// ConstructionError when L_P contains the empty word.
Nfa pm_automaton(const Nfa& l_p);

struct TauData {
    /// One pm automaton per free factor.
    std::vector<Nfa> factors;
    /// Factor indices from smallest to largest.
    std::vector<std::size_t> index_order;
    /// Generators of the amalgamated subgroup, without their inverses.
    std::vector<std::string> c_alphabet;
};

/// Input alphabet: the factor alphabets and the C letters; output {t, t'}.
/// Throws ConstructionError for fewer than two factors or a factor without
/// sign partition.
Transducer tau_transducer(const TauData& data);

/// Pulls the Fig.-3 language back along the transducer: {g : tau(g) > 0}.
ConeLanguage onecounter_cone_from_tau(const Transducer& t, GroupPtr group, std::vector<std::string> relative_to,
                                      std::string provenance);

/// Machine over the transducer's input letters and z, z' whose evaluation is
/// {(g, n) : tau(g) + 2n > 0}.
struct EmbeddedCone {
    ConeLanguage cone;
    /// (transducer state, dagger) of each machine state; empty for f and for
    /// the interior of expanded word labels.
    std::vector<std::optional<std::pair<State, int>>> origin;
    State f;
    /// Accepting states of the transducer.
    std::vector<State> transducer_accepting;
};

/// `group` is G x Z with generator `z`. Throws ConstructionError when some
/// accepting run of `t` outputs an even nonzero value.
EmbeddedCone embed_cross_z(const Transducer& t, GroupPtr group, std::vector<std::string> relative_to,
                           std::string provenance, const std::string& z = "z");

// ---- instances -------------------------------------------------------------

/// The pm automaton of {t}^+.
Nfa zz_pm_automaton();
TauData f2_tau_data();
Transducer f2_tau_transducer();
ConeLanguage f2_onecounter_cone();
EmbeddedCone embed_cross_z_f2();

/// Affine relative cones of BS(1,m) on {a, b} and BS(1,n) on {a, c},
/// amalgamated over <a>. Needs m, n >= 2.
TauData bs_amalgam_tau_data(Int m, Int n);
ConeLanguage bs_amalgam_onecounter_cone(Int m, Int n);
ConeLanguage bs_amalgam_cross_z_cone(Int m, Int n);

/// Lexicographic cones on F2 x| Z and (F2 x| Z) x Z led by the s-exponent.
ConeLanguage f2_by_z_onecounter_cone();
ConeLanguage f2_by_z_cross_z_cone();

} // namespace conelang::cones
