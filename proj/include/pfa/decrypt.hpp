// decrypt.hpp -- partition recovery and plaintext reconstruction
#ifndef PFA_DECRYPT_HPP
#define PFA_DECRYPT_HPP

#include <cstdint>
#include <vector>

#include "pfa/pfa.hpp"
#include "pfa/power_search.hpp"

namespace pfa {

// Classes are indexed by ascending landing state; each class holds exactly
// the ciphertext states that land there under the decrypting word.
struct Partition {
    std::vector<StateSet> classes;
    std::vector<int> landing;   // class -> landing state
    std::vector<int> class_of;  // state -> class

    int size() const { return int(classes.size()); }
};

struct PartitionStats {
    std::uint64_t letter_ops = 0;  // single-state transition applications
};

// P.w on the {a,b}-restriction, ascending. The result size is |u|+1 for a
// genuine ciphertext/word pair. Throws DecryptError(NotDecryptingWord) when
// some transition along the word is undefined for some state.
std::vector<int> recover_landing_states(const Pfa& cipher, const Word& w);

// Walks every state through w and groups by landing state. O(|P||w|) time;
// the serial kernel is the row-by-row reference, the parallel kernel assigns
// states to OpenMP threads. Both produce identical partitions.
Partition compute_partition(const Pfa& cipher, const Word& w,
                            Exec exec = Exec::Parallel,
                            PartitionStats* stats = nullptr);

// Quotient of the bit edges by the partition: must be a simple directed path
// covering every class; its labels, source to sink, are the plaintext.
// Throws DecryptError(MalformedCiphertext) otherwise.
Bits reconstruct_plaintext(const Pfa& cipher, const Partition& partition);

// The full pipeline. Never consults the public key.
Bits decrypt(const Pfa& cipher, const Word& w);

// Diagnostic split of each class into key copy, added states, and cluster
// states. Needs the public key; not needed for decryption itself.
struct StructureReport {
    std::vector<StateSet> key_states;      // Q_i, aligned with Partition classes
    std::vector<StateSet> added_states;    // A_i
    std::vector<StateSet> cluster_states;  // C_i
};

StructureReport analyze_structure(const Pfa& cipher, const Word& w,
                                  const Pfa& pub);

}  // namespace pfa

#endif
