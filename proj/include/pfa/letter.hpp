// letter.hpp -- the fixed four-letter universe {a, b, 0, 1}
#ifndef PFA_LETTER_HPP
#define PFA_LETTER_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>

namespace pfa {

// Canonical order is a < b < 0 < 1 everywhere: iteration, tie-breaking,
// serialization. A and B are the automaton letters, Bit0/Bit1 carry plaintext.
enum class Letter : std::uint8_t { A = 0, B = 1, Bit0 = 2, Bit1 = 3 };

inline constexpr int kLetterCount = 4;
inline constexpr std::array<Letter, 4> kAllLetters{Letter::A, Letter::B,
                                                   Letter::Bit0, Letter::Bit1};

constexpr int letter_index(Letter x) { return static_cast<int>(x); }

constexpr char letter_char(Letter x) {
    constexpr std::array<char, 4> chars{'a', 'b', '0', '1'};
    return chars[letter_index(x)];
}

constexpr std::optional<Letter> letter_from_char(char c) {
    switch (c) {
        case 'a': return Letter::A;
        case 'b': return Letter::B;
        case '0': return Letter::Bit0;
        case '1': return Letter::Bit1;
        default: return std::nullopt;
    }
}

constexpr bool is_automaton_letter(Letter x) {
    return x == Letter::A || x == Letter::B;
}
constexpr bool is_bit_letter(Letter x) { return !is_automaton_letter(x); }

// Small bitmask of letters; keeps alphabets value-typed and cheap.
class LetterSet {
public:
    constexpr LetterSet() = default;

    static constexpr LetterSet of(std::initializer_list<Letter> ls) {
        LetterSet s;
        for (Letter x : ls) s.add(x);
        return s;
    }
    static constexpr LetterSet sigma() { return of({Letter::A, Letter::B}); }
    static constexpr LetterSet bits() { return of({Letter::Bit0, Letter::Bit1}); }
    static constexpr LetterSet all() {
        return of({Letter::A, Letter::B, Letter::Bit0, Letter::Bit1});
    }

    constexpr void add(Letter x) { mask_ |= std::uint8_t(1u << letter_index(x)); }
    constexpr bool contains(Letter x) const {
        return (mask_ >> letter_index(x)) & 1u;
    }
    constexpr bool subset_of(LetterSet o) const { return (mask_ & ~o.mask_) == 0; }
    constexpr bool empty() const { return mask_ == 0; }
    constexpr int size() const {
        int c = 0;
        for (Letter x : kAllLetters) c += contains(x) ? 1 : 0;
        return c;
    }
    constexpr bool operator==(const LetterSet&) const = default;

    // Visits letters in canonical order.
    template <class F>
    void for_each(F&& f) const {
        for (Letter x : kAllLetters)
            if (contains(x)) f(x);
    }

    std::string to_string() const {
        std::string out;
        for_each([&](Letter x) { out.push_back(letter_char(x)); });
        return out;
    }

private:
    std::uint8_t mask_ = 0;
};

}  // namespace pfa

#endif
