// encrypt.hpp -- basic and extended encryption
#ifndef PFA_ENCRYPT_HPP
#define PFA_ENCRYPT_HPP

#include <cstdint>
#include <vector>

#include "pfa/pfa.hpp"
#include "pfa/rng.hpp"

namespace pfa {

struct EncryptionParams {
    std::uint64_t seed = 0;

    // step 4: per-copy noise edge count k_i, drawn from [noise_min, noise_max]
    int noise_min = 0;
    int noise_max = 0;

    bool extended = false;
    int cluster_count = 0;      // added a-clusters (depth 1)
    int cluster_size_min = 2;   // states per cluster, cycle plus branches
    int cluster_size_max = 2;
    int added_min = 0;          // per-copy added states
    int added_max = 0;
};

void validate_params(const EncryptionParams& params);

struct BitEdge {
    int src;
    Letter letter;  // Bit0 or Bit1
    int dst;
    int src_class;
    int dst_class;
};

// Secret bookkeeping for tests and diagnostics. Holding it is equivalent to
// holding the class partition, so it is never serialized with a ciphertext.
struct EncryptionTrace {
    std::vector<int> copy_of;                  // state -> class index [0, |u|]
    std::vector<int> copy_offset;              // class -> base of its key copy
    std::vector<StateSet> key_states;          // Q_i
    std::vector<StateSet> added_states;        // A_i
    std::vector<StateSet> cluster_states;      // C_i
    std::vector<BitEdge> inter_class_edges;    // step 2, plaintext order
    std::vector<BitEdge> noise_edges;          // step 4

    StateSet class_states(int cls) const;      // Q_i ∪ A_i ∪ C_i
};

struct Ciphertext {
    Pfa automaton;  // over {a,b,0,1}
    EncryptionTrace trace;
};

// Plaintext as a labeled path automaton over {0,1}: |u|+1 states, edge i
// labeled u[i] from state i to state i+1.
Pfa encode_plaintext_path(const Bits& u);

// B_i = Q_i.a^m b per copy, where m is the stabilization index of the key.
// Fails when b is undefined somewhere on Q.a^m (invalid public key).
std::vector<StateSet> compute_b_sets(const Pfa& pub,
                                     const std::vector<int>& copy_offsets);

// Ciphertext under construction; grows as extension stages add states.
struct EncryptWork {
    Pfa automaton;                 // over {a,b,0,1}
    int key_size = 0;              // |Q| of the public key
    int copies = 0;                // |u| + 1
    std::vector<int> class_of;     // state -> class
    std::vector<int> copy_offset;
    std::vector<std::vector<int>> key_members;      // per class
    std::vector<std::vector<int>> added_members;    // per class
    std::vector<std::vector<int>> cluster_members;  // per class
    std::vector<BitEdge> inter_class_edges;
    std::vector<BitEdge> noise_edges;

    std::vector<int> class_members(int cls) const;
};

// Step 1: disjoint union of |u|+1 copies of the public key.
EncryptWork begin_encryption(const Pfa& pub, const Bits& u);

// Extension stage 1: l depth-1 a-clusters whose center states get b-edges
// into the B_j sets. Each cluster commits to one class j: a decrypting word
// rotates the center cycle by its leading a-count before b fires, so mixed
// targets inside one cycle would give cluster states word-dependent landings.
void extend_with_clusters(EncryptWork& work,
                          const std::vector<StateSet>& b_sets, int count,
                          int size_min, int size_max, Rng& rng);

// Extension stage 2: per copy, added states carrying one a-edge onto a state
// that already has an a-preimage inside the copy.
void extend_with_states(EncryptWork& work, int added_min, int added_max,
                        Rng& rng);

// Steps 2-4 (bit path edges, filling the partial Σ-transitions, noise).
void add_plaintext_edges(EncryptWork& work, const Bits& u, Rng& rng);
void fill_sigma_transitions(EncryptWork& work, Rng& rng);
void add_noise_edges(EncryptWork& work, int noise_min, int noise_max, Rng& rng);

// The two entry points. Both are deterministic in params.seed, validate the
// public key, and return a ciphertext satisfying the structural facts: the
// {a,b}-restriction is a total DFA and the bit digraph has no directed path
// of length two.
Ciphertext encrypt_basic(const Pfa& pub, const Bits& u,
                         const EncryptionParams& params);
Ciphertext encrypt_extended(const Pfa& pub, const Bits& u,
                            const EncryptionParams& params);

// Dispatches on params.extended.
Ciphertext encrypt(const Pfa& pub, const Bits& u,
                   const EncryptionParams& params);

}  // namespace pfa

#endif
