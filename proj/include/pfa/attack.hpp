// attack.hpp -- baseline cryptanalysis with explicit budgets and cost reports
#ifndef PFA_ATTACK_HPP
#define PFA_ATTACK_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pfa/decrypt.hpp"
#include "pfa/pfa.hpp"

namespace pfa {

// Line-oriented key=value text, machine-parsable.
struct CostReport {
    std::vector<std::pair<std::string, std::string>> entries;

    void add(const std::string& key, const std::string& value) {
        entries.emplace_back(key, value);
    }
    void add(const std::string& key, std::uint64_t value) {
        entries.emplace_back(key, std::to_string(value));
    }
    std::string to_text() const {
        std::string out;
        for (const auto& [k, v] : entries) out += k + "=" + v + "\n";
        return out;
    }
};

enum class AttackStatus {
    Found,
    BudgetExceeded,     // inconclusive
    NotSynchronizing,   // no word exists: the key is invalid
    NotFound,           // copy search exhausted without a usable packing
    Ambiguous,          // several non-equivalent partitions fit
};

const char* attack_status_name(AttackStatus s);

struct WordAttackResult {
    AttackStatus status = AttackStatus::BudgetExceeded;
    Word word;
    bool decrypted = false;
    Bits plaintext;
    CostReport cost;
};

// Recovers a decrypting word by power-automaton search on the public key,
// then (when a ciphertext is supplied) decrypts it. budget bounds visited
// subsets.
WordAttackResult attack_by_word_search(const Pfa& pub, const Pfa* cipher,
                                       std::uint64_t budget);

struct CopyAttackResult {
    AttackStatus status = AttackStatus::BudgetExceeded;
    Partition partition;  // landing states unknown: landing[] holds -1
    Bits plaintext;
    CostReport cost;
};

// Finds disjoint embedded key copies in the ciphertext, extends them to a
// full candidate partition (added states by their a-edge, added clusters by
// their centers' b-targets) and reads the plaintext off the quotient. budget
// bounds explored search nodes.
CopyAttackResult attack_by_copy_search(const Pfa& cipher, const Pfa& pub,
                                       std::uint64_t budget);

}  // namespace pfa

#endif
