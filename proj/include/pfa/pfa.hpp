// pfa.hpp -- partial deterministic automaton and the core set algorithmics
#ifndef PFA_PFA_HPP
#define PFA_PFA_HPP

#include <array>
#include <optional>
#include <vector>

#include "pfa/errors.hpp"
#include "pfa/letter.hpp"
#include "pfa/state_set.hpp"
#include "pfa/word.hpp"

namespace pfa {

inline constexpr int kNoState = -1;

// Deterministic automaton over a subset of {a,b,0,1} with a possibly partial
// transition function. States are dense indices [0, n). One type serves
// public keys, ciphertexts, plaintext paths and added clusters alike.
class Pfa {
public:
    Pfa() = default;
    Pfa(int state_count, LetterSet alphabet);

    int state_count() const { return n_; }
    LetterSet alphabet() const { return alphabet_; }
    bool has_letter(Letter x) const { return alphabet_.contains(x); }

    // Builder surface. Automata are treated as immutable once handed out.
    void set(int from, Letter x, int to);
    void erase(int from, Letter x);
    void add_states(int extra);

    int next(int from, Letter x) const {
        const auto& row = delta_[letter_index(x)];
        return row.empty() ? kNoState : row[std::size_t(from)];
    }
    bool defined(int from, Letter x) const { return next(from, x) != kNoState; }
    bool total(Letter x) const;

    int transition_count() const;

    // Per-letter target array (empty when the letter is not in the alphabet);
    // the hot kernels index it directly.
    const std::vector<std::int32_t>& row(Letter x) const {
        return delta_[letter_index(x)];
    }

    bool operator==(const Pfa&) const = default;

private:
    int n_ = 0;
    LetterSet alphabet_;
    std::array<std::vector<std::int32_t>, kLetterCount> delta_;
};

StateSet full_state_set(const Pfa& a);

// Power-automaton step: union of images when every member has the transition,
// otherwise "undefined" (a value, not an error). The empty set maps to the
// empty set under any letter.
std::optional<StateSet> apply_letter_set(const Pfa& a, const StateSet& s,
                                         Letter x);

// Left-to-right fold of apply_letter_set; undefined propagates.
std::optional<StateSet> apply_word_set(const Pfa& a, const StateSet& s,
                                       const Word& w);

// Walks a single state through a word.
std::optional<int> apply_word_state(const Pfa& a, int q, const Word& w);

// Landing state when w carefully synchronizes a (every transition along every
// prefix defined, image a singleton); nullopt otherwise. The empty word is
// accepted exactly when the automaton has one state.
std::optional<int> is_careful_sync_word(const Pfa& a, const Word& w);

// States whose x-transition is defined and lands inside s.
StateSet preimage(const Pfa& a, const StateSet& s, Letter x);

struct Stabilization {
    int index;       // smallest m with Q.a^m = Q.a^{m+1}; at most n-1
    StateSet stable; // Q.a^m
};

// Requires a total letter a.
Stabilization stabilization_index(const Pfa& a);

struct UnionResult {
    Pfa automaton;
    int offset;  // second operand's states start here
};

UnionResult disjoint_union(const Pfa& a, const Pfa& b);

// Drops every transition on letters outside keep; states unchanged.
Pfa restrict_alphabet(const Pfa& a, LetterSet keep);

}  // namespace pfa

#endif
