// embedding.hpp -- backtracking search for key copies inside a ciphertext
#ifndef PFA_EMBEDDING_HPP
#define PFA_EMBEDDING_HPP

#include <cstdint>
#include <vector>

#include "pfa/pfa.hpp"

namespace pfa {

// A copy embedding is an injective map from pattern states to host states
// that preserves every transition the pattern defines on {a,b}. Transitions
// the pattern leaves undefined are unconstrained in the host: encryption
// fills them with arbitrary targets, so a strict induced-subautomaton match
// would miss the genuine copies.
struct EmbeddingQuery {
    const Pfa* pattern = nullptr;
    const Pfa* host = nullptr;
    const StateSet* host_mask = nullptr;  // optional restriction
    int anchor_pattern = kNoState;        // optional fixed assignment
    int anchor_host = kNoState;
    int max_images = 2;                   // distinct images to collect
    std::uint64_t node_budget = 1'000'000;
};

struct EmbeddingResult {
    // one witness map per distinct image, in discovery order (deterministic:
    // candidates are tried in ascending host-state order)
    std::vector<std::vector<int>> maps;
    std::uint64_t nodes_explored = 0;
    bool budget_exceeded = false;
};

EmbeddingResult find_copy_embeddings(const EmbeddingQuery& query);

}  // namespace pfa

#endif
