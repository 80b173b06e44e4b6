// io.hpp -- canonical text formats and graphviz export
#ifndef PFA_IO_HPP
#define PFA_IO_HPP

#include <string>
#include <string_view>

#include "pfa/pfa.hpp"

namespace pfa {

// Automaton text format, LF line endings:
//   pfa 1
//   states <n>
//   alphabet <letters in canonical order a b 0 1>
//   t <src> <letter> <dst>   (sorted by src, then letter)
//   end
// Serialization is canonical: equal automata produce byte-identical text.
std::string serialize_pfa(const Pfa& a);
Pfa parse_pfa(std::string_view text);

Pfa load_pfa_file(const std::string& path);
void save_pfa_file(const Pfa& a, const std::string& path);

// Private key file: one line over {a,b}. Plaintext file: one line over {0,1};
// an empty line is the empty word.
Word load_word_file(const std::string& path);
void save_word_file(const Word& w, const std::string& path);
Bits load_bits_file(const std::string& path);
void save_bits_file(const Bits& u, const std::string& path);

// dot-language digraph with stable state/edge ordering.
std::string to_dot(const Pfa& a);

}  // namespace pfa

#endif
