// word.hpp -- words over {a,b} and plaintext bit strings
#ifndef PFA_WORD_HPP
#define PFA_WORD_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pfa/errors.hpp"
#include "pfa/letter.hpp"

namespace pfa {

// Private keys and synchronization witnesses. Only automaton letters are
// admitted; the parsers below enforce it.
using Word = std::vector<Letter>;

// Plaintext: a (possibly empty) sequence of 0/1 values.
using Bits = std::vector<std::uint8_t>;

inline Word word_from_string(std::string_view text) {
    Word w;
    w.reserve(text.size());
    for (char c : text) {
        auto x = letter_from_char(c);
        if (!x || !is_automaton_letter(*x))
            throw ParseError(std::string("invalid word character '") + c +
                             "' (expected a or b)");
        w.push_back(*x);
    }
    return w;
}

inline std::string word_to_string(const Word& w) {
    std::string out;
    out.reserve(w.size());
    for (Letter x : w) out.push_back(letter_char(x));
    return out;
}

inline Bits bits_from_string(std::string_view text) {
    Bits u;
    u.reserve(text.size());
    for (char c : text) {
        if (c != '0' && c != '1')
            throw ParseError(std::string("invalid plaintext character '") + c +
                             "' (expected 0 or 1)");
        u.push_back(std::uint8_t(c - '0'));
    }
    return u;
}

inline std::string bits_to_string(const Bits& u) {
    std::string out;
    out.reserve(u.size());
    for (auto b : u) out.push_back(char('0' + b));
    return out;
}

inline Letter bit_letter(std::uint8_t bit) {
    return bit ? Letter::Bit1 : Letter::Bit0;
}

}  // namespace pfa

#endif
