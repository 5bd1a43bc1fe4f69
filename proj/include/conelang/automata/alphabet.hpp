// alphabet.hpp -- letters, formal inverse pairing, and words over an alphabet
#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace conelang::automata {

/// Index of a letter inside its alphabet.
using Symbol = std::uint32_t;
/// Dense state id, assigned in construction order.
using State = std::uint32_t;
/// A finite sequence of symbols; the empty vector is the empty word.
using Word = std::vector<Symbol>;

inline constexpr Symbol kEpsilon = std::numeric_limits<Symbol>::max();

/// Suffix marking the formal inverse of a generator: "a'" is a^-1.
inline constexpr std::string_view kInverseSuffix = "'";

struct Letter {
    std::string id;
    std::optional<std::string> inverse_of;

    bool operator==(const Letter&) const = default;
};

/// An ordered, finite set of letters. Letter order is significant: it fixes
/// symbol indices, enumeration order and the tie-break for ball witnesses.
class Alphabet {
public:
    Alphabet() = default;
    /// Throws AlphabetError on duplicate ids or a pairing that is not an
    /// involution between declared letters.
    explicit Alphabet(std::vector<Letter> letters);

    /// {g, g'} for every generator g, in the given order.
    static Alphabet paired(const std::vector<std::string>& generators);
    /// Letters without inverse pairing.
    static Alphabet plain(const std::vector<std::string>& ids);

    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    const std::vector<Letter>& letters() const { return letters_; }
    const Letter& letter(Symbol s) const;
    const std::string& id(Symbol s) const { return letter(s).id; }

    std::optional<Symbol> find(std::string_view id) const;
    /// Throws AlphabetError if the id is unknown.
    Symbol at(std::string_view id) const;
    std::optional<Symbol> inverse(Symbol s) const { return inverse_.at(s); }
    bool fully_paired() const;

    /// True if every letter of `other` occurs here with the same pairing.
    bool includes(const Alphabet& other) const;
    bool disjoint_from(const Alphabet& other) const;
    /// This alphabet followed by the letters of `other` it lacks.
    /// Throws AlphabetError when a shared id is paired differently.
    Alphabet merged_with(const Alphabet& other) const;

    bool operator==(const Alphabet& other) const { return letters_ == other.letters_; }

private:
    std::vector<Letter> letters_;
    std::vector<std::optional<Symbol>> inverse_;
    std::unordered_map<std::string, Symbol> index_;
};

/// Base generator name of a letter id: "a'" -> "a", "a" -> "a".
std::string base_name(std::string_view id);
/// Inverse letter id under the prime convention.
std::string inverse_id(std::string_view id);

/// Parses space-separated letter ids ("a b a'"). An empty string or "ε"
/// gives the empty word. Throws RejectedInputError on unknown ids.
Word parse_word(const Alphabet& alphabet, std::string_view text);
/// Space-separated ids; the empty word prints as "ε".
std::string format_word(const Alphabet& alphabet, const Word& word);
/// Throws RejectedInputError if some symbol is not in the alphabet.
void check_word(const Alphabet& alphabet, const Word& word);
/// Re-indexes a word from one alphabet into another by letter id.
Word translate(const Word& word, const Alphabet& from, const Alphabet& to);
/// x1...xn -> xn^-1 ... x1^-1. Throws AlphabetError on unpaired letters.
Word formal_inverse(const Alphabet& alphabet, const Word& word);

} // namespace conelang::automata
