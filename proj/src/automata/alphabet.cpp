#include "conelang/automata/alphabet.hpp"

#include <sstream>

#include "conelang/errors.hpp"

namespace conelang::automata {

Alphabet::Alphabet(std::vector<Letter> letters) : letters_(std::move(letters)) {
    for (Symbol s = 0; s < letters_.size(); ++s) {
        if (letters_[s].id.empty())
            throw AlphabetError("empty letter id");
        if (!index_.emplace(letters_[s].id, s).second)
            throw AlphabetError("duplicate letter id '" + letters_[s].id + "'");
    }
    inverse_.resize(letters_.size());
    for (Symbol s = 0; s < letters_.size(); ++s) {
        const auto& inv = letters_[s].inverse_of;
        if (!inv)
            continue;
        auto it = index_.find(*inv);
        if (it == index_.end())
            throw AlphabetError("letter '" + letters_[s].id + "' paired with undeclared '" + *inv + "'");
        const auto& back = letters_[it->second].inverse_of;
        if (!back || *back != letters_[s].id)
            throw AlphabetError("inverse pairing of '" + letters_[s].id + "' is not an involution");
        inverse_[s] = it->second;
    }
}

Alphabet Alphabet::paired(const std::vector<std::string>& generators) {
    std::vector<Letter> letters;
    letters.reserve(2 * generators.size());
    for (const auto& g : generators) {
        auto inv = inverse_id(g);
        letters.push_back({g, inv});
        letters.push_back({inv, g});
    }
    return Alphabet(std::move(letters));
}

Alphabet Alphabet::plain(const std::vector<std::string>& ids) {
    std::vector<Letter> letters;
    letters.reserve(ids.size());
    for (const auto& id : ids)
        letters.push_back({id, std::nullopt});
    return Alphabet(std::move(letters));
}

const Letter& Alphabet::letter(Symbol s) const {
    if (s >= letters_.size())
        throw RejectedInputError("symbol " + std::to_string(s) + " outside alphabet of size " +
                                 std::to_string(letters_.size()));
    return letters_[s];
}

std::optional<Symbol> Alphabet::find(std::string_view id) const {
    auto it = index_.find(std::string(id));
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

Symbol Alphabet::at(std::string_view id) const {
    if (auto s = find(id))
        return *s;
    throw AlphabetError("unknown letter '" + std::string(id) + "'");
}

bool Alphabet::fully_paired() const {
    for (const auto& inv : inverse_)
        if (!inv)
            return false;
    return true;
}

bool Alphabet::includes(const Alphabet& other) const {
    for (const auto& l : other.letters_) {
        auto s = find(l.id);
        if (!s || letters_[*s].inverse_of != l.inverse_of)
            return false;
    }
    return true;
}

bool Alphabet::disjoint_from(const Alphabet& other) const {
    for (const auto& l : other.letters_)
        if (find(l.id))
            return false;
    return true;
}

Alphabet Alphabet::merged_with(const Alphabet& other) const {
    std::vector<Letter> letters = letters_;
    for (const auto& l : other.letters_) {
        if (auto s = find(l.id)) {
            if (letters_[*s].inverse_of != l.inverse_of)
                throw AlphabetError("alphabet mismatch: letter '" + l.id + "' is paired differently");
            continue;
        }
        letters.push_back(l);
    }
    return Alphabet(std::move(letters));
}

std::string base_name(std::string_view id) {
    if (id.size() > kInverseSuffix.size() && id.ends_with(kInverseSuffix))
        return std::string(id.substr(0, id.size() - kInverseSuffix.size()));
    return std::string(id);
}

std::string inverse_id(std::string_view id) {
    if (id.size() > kInverseSuffix.size() && id.ends_with(kInverseSuffix))
        return base_name(id);
    return std::string(id) + std::string(kInverseSuffix);
}

Word parse_word(const Alphabet& alphabet, std::string_view text) {
    Word word;
    std::istringstream in{std::string(text)};
    std::string token;
    while (in >> token) {
        if (token == "ε")
            continue;
        auto s = alphabet.find(token);
        if (!s)
            throw RejectedInputError("letter '" + token + "' is not in the alphabet");
        word.push_back(*s);
    }
    return word;
}

std::string format_word(const Alphabet& alphabet, const Word& word) {
    if (word.empty())
        return "ε";
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i)
            out += ' ';
        out += alphabet.id(word[i]);
    }
    return out;
}

void check_word(const Alphabet& alphabet, const Word& word) {
    for (Symbol s : word)
        if (s >= alphabet.size())
            throw RejectedInputError("symbol " + std::to_string(s) + " outside alphabet of size " +
                                     std::to_string(alphabet.size()));
}

Word translate(const Word& word, const Alphabet& from, const Alphabet& to) {
    Word out;
    out.reserve(word.size());
    for (Symbol s : word) {
        auto t = to.find(from.id(s));
        if (!t)
            throw RejectedInputError("letter '" + from.id(s) + "' is not in the target alphabet");
        out.push_back(*t);
    }
    return out;
}

Word formal_inverse(const Alphabet& alphabet, const Word& word) {
    Word out;
    out.reserve(word.size());
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        auto inv = alphabet.inverse(*it);
        if (!inv)
            throw AlphabetError("letter '" + alphabet.id(*it) + "' has no inverse");
        out.push_back(*inv);
    }
    return out;
}

} // namespace conelang::automata
