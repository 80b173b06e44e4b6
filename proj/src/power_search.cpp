#include "pfa/power_search.hpp"

#include <algorithm>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pfa {

namespace {

struct Node {
    StateSet set;
    std::int64_t parent;
    Letter via;
};

Word word_to_node(const std::vector<Node>& nodes, std::int64_t idx) {
    Word w;
    for (std::int64_t i = idx; nodes[std::size_t(i)].parent >= 0;
         i = nodes[std::size_t(i)].parent)
        w.push_back(nodes[std::size_t(i)].via);
    std::reverse(w.begin(), w.end());
    return w;
}

}  // namespace

SyncSearchResult shortest_careful_sync_word(const Pfa& a, std::uint64_t budget,
                                            Exec exec) {
    std::vector<Letter> letters;
    for (Letter x : {Letter::A, Letter::B})
        if (a.has_letter(x)) letters.push_back(x);

    SyncSearchResult res;
    if (budget < 1) {
        res.status = SyncStatus::BudgetExceeded;
        return res;
    }

    StateSet start = full_state_set(a);
    if (start.is_singleton()) {
        res.status = SyncStatus::Found;
        res.subsets_visited = 1;
        return res;  // empty word: |Q| = 1
    }

    std::vector<Node> nodes;
    std::unordered_set<StateSet, StateSetHash> visited;
    nodes.push_back(Node{start, -1, Letter::A});
    visited.insert(start);

    std::size_t level_begin = 0, level_end = 1;
    const std::size_t fan = letters.size();
    std::vector<std::optional<StateSet>> images;

    while (level_begin < level_end) {
        const std::size_t level_size = level_end - level_begin;
        images.assign(level_size * fan, std::nullopt);

        // Image computation is the data-parallel part; each (node, letter)
        // slot is independent. The merge below is sequential and ordered, so
        // the outcome does not depend on the schedule.
        if (exec == Exec::Parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8)
#endif
            for (std::size_t slot = 0; slot < level_size * fan; ++slot) {
                const Node& nd = nodes[level_begin + slot / fan];
                images[slot] =
                    apply_letter_set(a, nd.set, letters[slot % fan]);
            }
        } else {
            for (std::size_t slot = 0; slot < level_size * fan; ++slot) {
                const Node& nd = nodes[level_begin + slot / fan];
                images[slot] =
                    apply_letter_set(a, nd.set, letters[slot % fan]);
            }
        }

        for (std::size_t slot = 0; slot < level_size * fan; ++slot) {
            auto& img = images[slot];
            if (!img) continue;
            if (img->is_singleton()) {
                Word w = word_to_node(nodes,
                                      std::int64_t(level_begin + slot / fan));
                w.push_back(letters[slot % fan]);
                res.status = SyncStatus::Found;
                res.word = std::move(w);
                res.subsets_visited = visited.size();
                return res;
            }
            if (visited.contains(*img)) continue;
            if (visited.size() + 1 > budget) {
                res.status = SyncStatus::BudgetExceeded;
                res.subsets_visited = visited.size();
                return res;
            }
            visited.insert(*img);
            nodes.push_back(Node{std::move(*img),
                                 std::int64_t(level_begin + slot / fan),
                                 letters[slot % fan]});
        }

        level_begin = level_end;
        level_end = nodes.size();
    }

    res.status = SyncStatus::NotSynchronizing;
    res.subsets_visited = visited.size();
    return res;
}

}  // namespace pfa
