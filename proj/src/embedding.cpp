#include "pfa/embedding.hpp"

#include <algorithm>
#include <set>

namespace pfa {

namespace {

constexpr Letter kSigma[2] = {Letter::A, Letter::B};

struct Searcher {
    const Pfa& pattern;
    const Pfa& host;
    const StateSet* mask;
    std::uint64_t budget;
    int max_images;

    std::vector<int> order;          // pattern states, assignment order
    std::vector<int> assignment;     // pattern -> host or kNoState
    std::vector<char> host_used;
    std::vector<std::vector<int>> host_pre[2];  // per letter: host preimages
    std::vector<int> pat_indeg[2];
    std::vector<int> host_indeg[2];

    std::uint64_t nodes = 0;
    bool exceeded = false;
    std::set<std::vector<int>> images;  // sorted host-state vectors
    std::vector<std::vector<int>> maps;

    Searcher(const EmbeddingQuery& q)
        : pattern(*q.pattern),
          host(*q.host),
          mask(q.host_mask),
          budget(q.node_budget),
          max_images(q.max_images) {
        const int pn = pattern.state_count();
        const int hn = host.state_count();
        assignment.assign(std::size_t(pn), kNoState);
        host_used.assign(std::size_t(hn), 0);
        for (int li = 0; li < 2; ++li) {
            host_pre[li].assign(std::size_t(hn), {});
            pat_indeg[li].assign(std::size_t(pn), 0);
            host_indeg[li].assign(std::size_t(hn), 0);
            for (int q2 = 0; q2 < hn; ++q2)
                if (host.defined(q2, kSigma[li])) {
                    host_pre[li][std::size_t(host.next(q2, kSigma[li]))]
                        .push_back(q2);
                    ++host_indeg[li][std::size_t(host.next(q2, kSigma[li]))];
                }
            for (int p = 0; p < pn; ++p)
                if (pattern.defined(p, kSigma[li]))
                    ++pat_indeg[li][std::size_t(pattern.next(p, kSigma[li]))];
        }
    }

    bool host_allowed(int h) const {
        return (!mask || mask->contains(h)) && !host_used[std::size_t(h)];
    }

    bool signature_ok(int p, int h) const {
        for (int li = 0; li < 2; ++li) {
            if (pattern.defined(p, kSigma[li]) && !host.defined(h, kSigma[li]))
                return false;
            if (host_indeg[li][std::size_t(h)] < pat_indeg[li][std::size_t(p)])
                return false;
        }
        return true;
    }

    // Every pattern edge between p and an already-assigned state must be
    // realized by the host under the tentative assignment p -> h.
    bool consistent(int p, int h) const {
        for (int li = 0; li < 2; ++li) {
            Letter x = kSigma[li];
            if (pattern.defined(p, x)) {
                int pt = pattern.next(p, x);
                int ht = host.next(h, x);
                if (pt == p) {
                    if (ht != h) return false;
                } else if (assignment[std::size_t(pt)] != kNoState) {
                    if (ht != assignment[std::size_t(pt)]) return false;
                }
            }
            for (int src = 0; src < pattern.state_count(); ++src) {
                if (src == p || assignment[std::size_t(src)] == kNoState)
                    continue;
                if (pattern.defined(src, x) && pattern.next(src, x) == p &&
                    host.next(assignment[std::size_t(src)], x) != h)
                    return false;
            }
        }
        return true;
    }

    void record() {
        std::vector<int> image = assignment;
        std::sort(image.begin(), image.end());
        if (images.insert(image).second) maps.push_back(assignment);
    }

    // Returns false to stop the whole search (budget or enough images).
    bool extend(std::size_t depth) {
        if (int(images.size()) >= max_images) return false;
        if (depth == order.size()) {
            record();
            return int(images.size()) < max_images;
        }
        const int p = order[depth];

        // a target forced by an assigned predecessor narrows this to one try
        std::vector<int> candidates;
        int forced = kNoState;
        for (int li = 0; li < 2 && forced == kNoState; ++li) {
            Letter x = kSigma[li];
            for (int src = 0; src < pattern.state_count(); ++src)
                if (assignment[std::size_t(src)] != kNoState && src != p &&
                    pattern.defined(src, x) && pattern.next(src, x) == p) {
                    forced = host.next(assignment[std::size_t(src)], x);
                    break;
                }
        }
        if (forced != kNoState) {
            candidates.push_back(forced);
        } else {
            // narrow through an assigned successor's host preimage if any
            int via_succ = kNoState, via_letter = -1;
            for (int li = 0; li < 2 && via_succ == kNoState; ++li)
                if (pattern.defined(p, kSigma[li])) {
                    int pt = pattern.next(p, kSigma[li]);
                    if (pt != p && assignment[std::size_t(pt)] != kNoState) {
                        via_succ = assignment[std::size_t(pt)];
                        via_letter = li;
                    }
                }
            if (via_succ != kNoState) {
                candidates = host_pre[via_letter][std::size_t(via_succ)];
            } else {
                for (int h = 0; h < host.state_count(); ++h)
                    if (host_allowed(h)) candidates.push_back(h);
            }
        }

        for (int h : candidates) {
            if (++nodes > budget) {
                exceeded = true;
                return false;
            }
            if (!host_allowed(h) || !signature_ok(p, h) || !consistent(p, h))
                continue;
            assignment[std::size_t(p)] = h;
            host_used[std::size_t(h)] = 1;
            bool keep_going = extend(depth + 1);
            assignment[std::size_t(p)] = kNoState;
            host_used[std::size_t(h)] = 0;
            if (!keep_going) return false;
        }
        return true;
    }
};

// Pattern states ordered so each one (after the first of its component) is
// adjacent to an earlier one: forced moves and preimage narrowing then apply
// at every step.
std::vector<int> assignment_order(const Pfa& pattern, int anchor) {
    const int n = pattern.state_count();
    std::vector<std::vector<int>> adj;
    adj.resize(std::size_t(n));
    for (int q = 0; q < n; ++q)
        for (Letter x : kSigma)
            if (pattern.defined(q, x)) {
                adj[std::size_t(q)].push_back(pattern.next(q, x));
                adj[std::size_t(pattern.next(q, x))].push_back(q);
            }
    std::vector<int> order;
    std::vector<char> seen(std::size_t(n), 0);
    auto bfs = [&](int root) {
        std::vector<int> queue{root};
        seen[std::size_t(root)] = 1;
        for (std::size_t i = 0; i < queue.size(); ++i) {
            order.push_back(queue[i]);
            for (int t : adj[std::size_t(queue[i])])
                if (!seen[std::size_t(t)]) {
                    seen[std::size_t(t)] = 1;
                    queue.push_back(t);
                }
        }
    };
    if (anchor != kNoState) bfs(anchor);
    for (int q = 0; q < n; ++q)
        if (!seen[std::size_t(q)]) bfs(q);
    return order;
}

}  // namespace

EmbeddingResult find_copy_embeddings(const EmbeddingQuery& query) {
    const Pfa& pattern = *query.pattern;
    Searcher s(query);
    s.order = assignment_order(pattern, query.anchor_pattern);

    if (query.anchor_pattern != kNoState) {
        int p = query.anchor_pattern;
        int h = query.anchor_host;
        if (s.host_allowed(h) && s.signature_ok(p, h) && s.consistent(p, h)) {
            s.assignment[std::size_t(p)] = h;
            s.host_used[std::size_t(h)] = 1;
            s.extend(1);
        }
    } else {
        s.extend(0);
    }

    EmbeddingResult out;
    out.maps = std::move(s.maps);
    out.nodes_explored = s.nodes;
    out.budget_exceeded = s.exceeded;
    return out;
}

}  // namespace pfa
