// fixtures.hpp -- small automata shared across the test suite
#ifndef PFA_TESTS_FIXTURES_HPP
#define PFA_TESTS_FIXTURES_HPP

#include "pfa/pfa.hpp"
#include "pfa/rng.hpp"

namespace fixtures {

// Three states; a: 0->1, 1->0, 2->0; b: 0->2, 1->2, b(2) undefined.
// Carefully synchronized by "ab" onto state 2.
inline pfa::Pfa t1() {
    pfa::Pfa a(3, pfa::LetterSet::sigma());
    a.set(0, pfa::Letter::A, 1);
    a.set(1, pfa::Letter::A, 0);
    a.set(2, pfa::Letter::A, 0);
    a.set(0, pfa::Letter::B, 2);
    a.set(1, pfa::Letter::B, 2);
    return a;
}

// a: 0->1, 1->2, 2->2 (chain into a fixed point).
inline pfa::Pfa chain3() {
    pfa::Pfa a(3, pfa::LetterSet::of({pfa::Letter::A}));
    a.set(0, pfa::Letter::A, 1);
    a.set(1, pfa::Letter::A, 2);
    a.set(2, pfa::Letter::A, 2);
    return a;
}

// Pure 3-cycle on a.
inline pfa::Pfa cycle3() {
    pfa::Pfa a(3, pfa::LetterSet::of({pfa::Letter::A}));
    a.set(0, pfa::Letter::A, 1);
    a.set(1, pfa::Letter::A, 2);
    a.set(2, pfa::Letter::A, 0);
    return a;
}

// The 7-state cluster example: cycle 3-4-5-6 with tails 1-2-3 and 7-4,
// renumbered to 0-based (drawn state k is state k-1 here).
inline pfa::Pfa seven_state_cluster() {
    pfa::Pfa a(7, pfa::LetterSet::of({pfa::Letter::A}));
    a.set(0, pfa::Letter::A, 1);  // 1 -> 2
    a.set(1, pfa::Letter::A, 2);  // 2 -> 3
    a.set(2, pfa::Letter::A, 3);  // 3 -> 4
    a.set(3, pfa::Letter::A, 4);  // 4 -> 5
    a.set(4, pfa::Letter::A, 5);  // 5 -> 6
    a.set(5, pfa::Letter::A, 2);  // 6 -> 3
    a.set(6, pfa::Letter::A, 3);  // 7 -> 4
    return a;
}

// Random partial automaton over {a,b}: each (state, letter) slot is one of
// n+1 choices (undefined or a target), mirroring the exhaustive enumeration.
inline pfa::Pfa random_pfa(pfa::Rng& rng, int n) {
    pfa::Pfa a(n, pfa::LetterSet::sigma());
    for (int q = 0; q < n; ++q)
        for (pfa::Letter x : {pfa::Letter::A, pfa::Letter::B}) {
            int slot = int(rng.below(std::uint64_t(n) + 1));
            if (slot < n) a.set(q, x, slot);
        }
    return a;
}

inline pfa::StateSet make_set(int universe, std::initializer_list<int> states) {
    pfa::StateSet s(universe);
    for (int q : states) s.add(q);
    return s;
}

}  // namespace fixtures

#endif
