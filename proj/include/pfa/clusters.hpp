// clusters.hpp -- anatomy of the unary a-restriction
#ifndef PFA_CLUSTERS_HPP
#define PFA_CLUSTERS_HPP

#include <vector>

#include "pfa/pfa.hpp"

namespace pfa {

// A branch hangs off one center state (its destination): the non-center
// states whose a-path enters the cycle exactly there.
struct Branch {
    std::vector<int> states;  // ascending
    int destination;
};

// One weakly connected component of the a-map: a unique cycle (the center)
// plus in-trees. Depth is the largest distance from any state to the center.
struct Cluster {
    StateSet states;
    StateSet center;
    int depth;
    std::vector<Branch> branches;  // ordered by destination
};

struct ClusterAnalysis {
    std::vector<Cluster> clusters;  // ordered by smallest member state
};

// Requires a total letter a; analyzes the a-restriction only.
ClusterAnalysis analyze_a_clusters(const Pfa& a);

}  // namespace pfa

#endif
