// errors.hpp -- exception types shared across the toolkit
#ifndef PFA_ERRORS_HPP
#define PFA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pfa {

// Root of everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Violated precondition or invalid parameter value.
struct ParamError : Error {
    using Error::Error;
};

// A public key that cannot be used (wrong alphabet, partial a, ...).
struct KeyError : Error {
    using Error::Error;
};

// Key generation gave up after exhausting its retry budget.
struct KeygenError : Error {
    KeygenError(const std::string& msg, int attempts_)
        : Error(msg), attempts(attempts_) {}
    int attempts;
};

// Decryption fails closed: never emit bits from a broken pipeline.
struct DecryptError : Error {
    enum class Kind {
        NotDecryptingWord,    // some transition along the word is undefined
        MalformedCiphertext,  // class quotient is not a simple spanning path
        StructureUnresolved,  // copy identification ambiguous or impossible
    };
    DecryptError(Kind kind_, const std::string& msg) : Error(msg), kind(kind_) {}
    Kind kind;
};

// Bad input file or malformed textual automaton.
struct ParseError : Error {
    using Error::Error;
};

}  // namespace pfa

#endif
