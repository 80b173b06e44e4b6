#include "pfa/clusters.hpp"

#include <algorithm>
#include <map>

namespace pfa {

namespace {

// Cycle detection on a functional graph: walk each unprocessed chain, and when
// it bites its own tail the tail suffix is a cycle.
std::vector<char> cyclic_states(const std::vector<std::int32_t>& succ) {
    const int n = int(succ.size());
    std::vector<char> cyclic(std::size_t(n), 0);
    // 0 = unseen, 1 = on current walk, 2 = done
    std::vector<char> color(std::size_t(n), 0);
    std::vector<int> walk;
    for (int start = 0; start < n; ++start) {
        if (color[std::size_t(start)] != 0) continue;
        walk.clear();
        int q = start;
        while (color[std::size_t(q)] == 0) {
            color[std::size_t(q)] = 1;
            walk.push_back(q);
            q = succ[std::size_t(q)];
        }
        if (color[std::size_t(q)] == 1) {
            // q closes a cycle inside the current walk
            auto it = std::find(walk.begin(), walk.end(), q);
            for (; it != walk.end(); ++it) cyclic[std::size_t(*it)] = 1;
        }
        for (int v : walk) color[std::size_t(v)] = 2;
    }
    return cyclic;
}

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(std::size_t(n)) {
        for (int i = 0; i < n; ++i) parent[std::size_t(i)] = i;
    }
    int find(int x) {
        while (parent[std::size_t(x)] != x) {
            parent[std::size_t(x)] = parent[std::size_t(parent[std::size_t(x)])];
            x = parent[std::size_t(x)];
        }
        return x;
    }
    void unite(int a, int b) { parent[std::size_t(find(a))] = find(b); }
};

}  // namespace

ClusterAnalysis analyze_a_clusters(const Pfa& a) {
    if (!a.total(Letter::A))
        throw ParamError("cluster analysis needs a total letter a");
    const int n = a.state_count();
    const auto& succ = a.row(Letter::A);

    auto cyclic = cyclic_states(succ);

    Dsu dsu(n);
    for (int q = 0; q < n; ++q) dsu.unite(q, succ[std::size_t(q)]);

    // Distance to the center and the center state where the path enters it.
    std::vector<int> dist(std::size_t(n), -1);
    std::vector<int> entry(std::size_t(n), -1);
    std::vector<int> path;
    for (int q0 = 0; q0 < n; ++q0) {
        if (dist[std::size_t(q0)] >= 0) continue;
        path.clear();
        int q = q0;
        while (dist[std::size_t(q)] < 0 && !cyclic[std::size_t(q)]) {
            path.push_back(q);
            q = succ[std::size_t(q)];
        }
        if (cyclic[std::size_t(q)]) {
            dist[std::size_t(q)] = 0;
            entry[std::size_t(q)] = q;
        }
        int base_dist = dist[std::size_t(q)];
        for (int i = int(path.size()) - 1; i >= 0; --i) {
            int v = path[std::size_t(i)];
            dist[std::size_t(v)] = base_dist + (int(path.size()) - i);
            // first center state on the path out of v
            int s = succ[std::size_t(v)];
            entry[std::size_t(v)] =
                cyclic[std::size_t(s)] ? s : entry[std::size_t(s)];
        }
    }

    std::map<int, std::vector<int>> components;  // root -> members (ascending)
    for (int q = 0; q < n; ++q) components[dsu.find(q)].push_back(q);

    ClusterAnalysis analysis;
    for (auto& [root, members] : components) {
        Cluster c{StateSet(n), StateSet(n), 0, {}};
        std::map<int, std::vector<int>> branch_of;  // destination -> states
        for (int q : members) {
            c.states.add(q);
            if (cyclic[std::size_t(q)]) {
                c.center.add(q);
            } else {
                branch_of[entry[std::size_t(q)]].push_back(q);
                c.depth = std::max(c.depth, dist[std::size_t(q)]);
            }
        }
        for (auto& [dest, states] : branch_of)
            c.branches.push_back(Branch{std::move(states), dest});
        analysis.clusters.push_back(std::move(c));
    }
    std::sort(analysis.clusters.begin(), analysis.clusters.end(),
              [](const Cluster& x, const Cluster& y) {
                  return x.states.first() < y.states.first();
              });
    return analysis;
}

}  // namespace pfa
