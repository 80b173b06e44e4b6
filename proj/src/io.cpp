#include "pfa/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace pfa {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

int parse_state_index(const std::string& tok, int n, const char* what) {
    std::size_t pos = 0;
    long v = -1;
    try {
        v = std::stol(tok, &pos);
    } catch (const std::exception&) {
        throw ParseError(std::string("bad ") + what + " '" + tok + "'");
    }
    if (pos != tok.size() || v < 0 || v >= n)
        throw ParseError(std::string("bad ") + what + " '" + tok + "'");
    return int(v);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw ParseError("cannot write '" + path + "'");
    out << text;
    if (!out) throw ParseError("write failed for '" + path + "'");
}

std::string first_line(const std::string& text) {
    auto nl = text.find('\n');
    std::string line = nl == std::string::npos ? text : text.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

}  // namespace

std::string serialize_pfa(const Pfa& a) {
    std::ostringstream out;
    out << "pfa 1\n";
    out << "states " << a.state_count() << "\n";
    out << "alphabet";
    a.alphabet().for_each([&](Letter x) { out << ' ' << letter_char(x); });
    out << "\n";
    for (int q = 0; q < a.state_count(); ++q)
        for (Letter x : kAllLetters)
            if (a.defined(q, x))
                out << "t " << q << ' ' << letter_char(x) << ' ' << a.next(q, x)
                    << "\n";
    out << "end\n";
    return out.str();
}

Pfa parse_pfa(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    auto next_line = [&](const char* what) {
        if (!std::getline(in, line))
            throw ParseError(std::string("unexpected end of input, expected ") +
                             what);
        if (!line.empty() && line.back() == '\r') line.pop_back();
        return split_ws(line);
    };

    auto header = next_line("'pfa 1'");
    if (header.size() != 2 || header[0] != "pfa" || header[1] != "1")
        throw ParseError("bad header, expected 'pfa 1'");

    auto states = next_line("'states <n>'");
    if (states.size() != 2 || states[0] != "states")
        throw ParseError("expected 'states <n>'");
    long n = 0;
    try {
        n = std::stol(states[1]);
    } catch (const std::exception&) {
        throw ParseError("bad state count '" + states[1] + "'");
    }
    if (n < 1 || n > 10'000'000)
        throw ParseError("state count out of range: " + states[1]);

    auto alpha = next_line("'alphabet ...'");
    if (alpha.empty() || alpha[0] != "alphabet")
        throw ParseError("expected 'alphabet ...'");
    LetterSet alphabet;
    int prev = -1;
    for (std::size_t i = 1; i < alpha.size(); ++i) {
        if (alpha[i].size() != 1)
            throw ParseError("bad alphabet letter '" + alpha[i] + "'");
        auto x = letter_from_char(alpha[i][0]);
        if (!x) throw ParseError("bad alphabet letter '" + alpha[i] + "'");
        if (letter_index(*x) <= prev)
            throw ParseError("alphabet letters must be unique and in order a b 0 1");
        prev = letter_index(*x);
        alphabet.add(*x);
    }

    Pfa a(int(n), alphabet);
    bool saw_end = false;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto toks = split_ws(line);
        if (toks.empty()) throw ParseError("blank line inside automaton body");
        if (toks[0] == "end") {
            if (toks.size() != 1) throw ParseError("junk after 'end'");
            saw_end = true;
            break;
        }
        if (toks[0] != "t" || toks.size() != 4)
            throw ParseError("expected 't <src> <letter> <dst>', got '" + line +
                             "'");
        int src = parse_state_index(toks[1], int(n), "source state");
        if (toks[2].size() != 1)
            throw ParseError("bad letter '" + toks[2] + "'");
        auto x = letter_from_char(toks[2][0]);
        if (!x) throw ParseError("bad letter '" + toks[2] + "'");
        if (!alphabet.contains(*x))
            throw ParseError(std::string("letter '") + toks[2] +
                             "' not in declared alphabet");
        int dst = parse_state_index(toks[3], int(n), "target state");
        if (a.defined(src, *x))
            throw ParseError("duplicate transition for state " +
                             std::to_string(src) + " letter " + toks[2]);
        a.set(src, *x, dst);
    }
    if (!saw_end) throw ParseError("missing 'end' line");
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!split_ws(line).empty()) throw ParseError("trailing data after 'end'");
    }
    return a;
}

Pfa load_pfa_file(const std::string& path) { return parse_pfa(read_file(path)); }

void save_pfa_file(const Pfa& a, const std::string& path) {
    write_file(path, serialize_pfa(a));
}

Word load_word_file(const std::string& path) {
    return word_from_string(first_line(read_file(path)));
}

void save_word_file(const Word& w, const std::string& path) {
    write_file(path, word_to_string(w) + "\n");
}

Bits load_bits_file(const std::string& path) {
    return bits_from_string(first_line(read_file(path)));
}

void save_bits_file(const Bits& u, const std::string& path) {
    write_file(path, bits_to_string(u) + "\n");
}

std::string to_dot(const Pfa& a) {
    std::ostringstream out;
    out << "digraph pfa {\n";
    out << "  rankdir=LR;\n";
    out << "  node [shape=circle];\n";
    for (int q = 0; q < a.state_count(); ++q) out << "  q" << q << ";\n";
    for (int q = 0; q < a.state_count(); ++q)
        for (Letter x : kAllLetters)
            if (a.defined(q, x))
                out << "  q" << q << " -> q" << a.next(q, x) << " [label=\""
                    << letter_char(x) << "\"];\n";
    out << "}\n";
    return out.str();
}

}  // namespace pfa
