// power_search.hpp -- breadth-first search over the power automaton
#ifndef PFA_POWER_SEARCH_HPP
#define PFA_POWER_SEARCH_HPP

#include <cstdint>

#include "pfa/pfa.hpp"

namespace pfa {

// Kernel selector. Parallel uses OpenMP for the per-level image computation
// and must return bit-identical results to Serial regardless of schedule; the
// serial kernel is the reference the tests compare against.
enum class Exec { Serial, Parallel };

enum class SyncStatus {
    Found,             // word holds a shortest carefully synchronizing word
    NotSynchronizing,  // subset space exhausted, no singleton reachable
    BudgetExceeded,    // inconclusive: visited-subset budget ran out
};

struct SyncSearchResult {
    SyncStatus status = SyncStatus::NotSynchronizing;
    Word word;
    std::uint64_t subsets_visited = 0;

    bool found() const { return status == SyncStatus::Found; }
};

// Lazy BFS from the full state set; subsets are discovered on demand and
// capped by budget (checking careful synchronizability is PSPACE-complete, so
// worst cases must fail gracefully rather than exhaust memory). Only the
// automaton letters a,b are explored, in that order, which together with
// first-in frontier order makes the returned word the lexicographically least
// among the shortest ones.
SyncSearchResult shortest_careful_sync_word(const Pfa& a, std::uint64_t budget,
                                            Exec exec = Exec::Parallel);

}  // namespace pfa

#endif
