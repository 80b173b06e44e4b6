#include "pfa/pfa.hpp"

#include <string>

namespace pfa {

Pfa::Pfa(int state_count, LetterSet alphabet)
    : n_(state_count), alphabet_(alphabet) {
    if (state_count < 1) throw ParamError("automaton needs at least one state");
    for (Letter x : kAllLetters)
        if (alphabet_.contains(x))
            delta_[letter_index(x)].assign(std::size_t(n_), kNoState);
}

void Pfa::set(int from, Letter x, int to) {
    if (!alphabet_.contains(x))
        throw ParamError(std::string("letter '") + letter_char(x) +
                         "' is not in the alphabet");
    if (from < 0 || from >= n_ || to < 0 || to >= n_)
        throw ParamError("transition endpoint out of range");
    delta_[letter_index(x)][std::size_t(from)] = to;
}

void Pfa::erase(int from, Letter x) {
    if (!alphabet_.contains(x) || from < 0 || from >= n_)
        throw ParamError("cannot erase: no such transition slot");
    delta_[letter_index(x)][std::size_t(from)] = kNoState;
}

void Pfa::add_states(int extra) {
    if (extra < 0) throw ParamError("cannot remove states");
    n_ += extra;
    for (Letter x : kAllLetters)
        if (alphabet_.contains(x))
            delta_[letter_index(x)].resize(std::size_t(n_), kNoState);
}

bool Pfa::total(Letter x) const {
    const auto& row = delta_[letter_index(x)];
    if (row.empty()) return false;
    for (auto t : row)
        if (t == kNoState) return false;
    return true;
}

int Pfa::transition_count() const {
    int c = 0;
    for (Letter x : kAllLetters)
        for (auto t : delta_[letter_index(x)])
            if (t != kNoState) ++c;
    return c;
}

StateSet full_state_set(const Pfa& a) { return StateSet::full(a.state_count()); }

std::optional<StateSet> apply_letter_set(const Pfa& a, const StateSet& s,
                                         Letter x) {
    StateSet out(a.state_count());
    const auto& row = a.row(x);
    bool ok = true;
    s.for_each([&](int q) {
        if (!ok) return;
        int t = row.empty() ? kNoState : row[std::size_t(q)];
        if (t == kNoState) {
            ok = false;
            return;
        }
        out.add(t);
    });
    if (!ok) return std::nullopt;
    return out;
}

std::optional<StateSet> apply_word_set(const Pfa& a, const StateSet& s,
                                       const Word& w) {
    StateSet cur = s;
    for (Letter x : w) {
        auto next = apply_letter_set(a, cur, x);
        if (!next) return std::nullopt;
        cur = std::move(*next);
    }
    return cur;
}

std::optional<int> apply_word_state(const Pfa& a, int q, const Word& w) {
    int cur = q;
    for (Letter x : w) {
        cur = a.next(cur, x);
        if (cur == kNoState) return std::nullopt;
    }
    return cur;
}

std::optional<int> is_careful_sync_word(const Pfa& a, const Word& w) {
    auto img = apply_word_set(a, full_state_set(a), w);
    if (!img || !img->is_singleton()) return std::nullopt;
    return img->first();
}

StateSet preimage(const Pfa& a, const StateSet& s, Letter x) {
    StateSet out(a.state_count());
    const auto& row = a.row(x);
    if (row.empty()) return out;
    for (int q = 0; q < a.state_count(); ++q) {
        int t = row[std::size_t(q)];
        if (t != kNoState && s.contains(t)) out.add(q);
    }
    return out;
}

Stabilization stabilization_index(const Pfa& a) {
    if (!a.total(Letter::A))
        throw ParamError("stabilization index needs a total letter a");
    StateSet cur = full_state_set(a);
    int m = 0;
    for (;;) {
        auto next = apply_letter_set(a, cur, Letter::A);
        // a is total, so the image is always defined
        if (*next == cur) return {m, cur};
        cur = std::move(*next);
        ++m;
    }
}

UnionResult disjoint_union(const Pfa& a, const Pfa& b) {
    LetterSet alphabet = a.alphabet();
    b.alphabet().for_each([&](Letter x) { alphabet.add(x); });
    Pfa out(a.state_count() + b.state_count(), alphabet);
    int offset = a.state_count();
    for (Letter x : kAllLetters) {
        for (int q = 0; q < a.state_count(); ++q)
            if (a.defined(q, x)) out.set(q, x, a.next(q, x));
        for (int q = 0; q < b.state_count(); ++q)
            if (b.defined(q, x)) out.set(offset + q, x, offset + b.next(q, x));
    }
    return {std::move(out), offset};
}

Pfa restrict_alphabet(const Pfa& a, LetterSet keep) {
    if (!keep.subset_of(a.alphabet()))
        throw ParamError("restriction letters must come from the alphabet");
    Pfa out(a.state_count(), keep);
    keep.for_each([&](Letter x) {
        for (int q = 0; q < a.state_count(); ++q)
            if (a.defined(q, x)) out.set(q, x, a.next(q, x));
    });
    return out;
}

}  // namespace pfa
