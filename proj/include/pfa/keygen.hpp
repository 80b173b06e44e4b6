// keygen.hpp -- key-pair generation and validation
#ifndef PFA_KEYGEN_HPP
#define PFA_KEYGEN_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "pfa/pfa.hpp"

namespace pfa {

struct KeyGenParams {
    int state_count = 8;
    int word_length = 10;   // at least 2: the word needs an a and a b
    std::uint64_t seed = 0;
    int max_retries = 64;
};

struct KeyPair {
    Pfa public_key;    // over {a,b}; a total, b undefined somewhere
    Word private_key;  // carefully synchronizes public_key
};

struct ValidationReport {
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

// Builds the automaton to fit a drawn private word: sweep the word once,
// assigning the transitions each set application needs so the subset chain
// from Q shrinks to a singleton at the last b. Deterministic in the seed.
// Throws ParamError for bad params, KeygenError when retries run out.
KeyPair generate_keypair(const KeyGenParams& params);

// Checks every key-pair invariant; lists each failed one.
ValidationReport validate_keypair(const KeyPair& kp);

}  // namespace pfa

#endif
