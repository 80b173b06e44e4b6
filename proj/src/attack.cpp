#include "pfa/attack.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include "pfa/clusters.hpp"
#include "pfa/embedding.hpp"

namespace pfa {

namespace {

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    auto d = std::chrono::steady_clock::now() - start;
    return std::chrono::duration<double, std::milli>(d).count();
}

std::string format_ms(double ms) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", ms);
    return buf;
}

}  // namespace

const char* attack_status_name(AttackStatus s) {
    switch (s) {
        case AttackStatus::Found: return "found";
        case AttackStatus::BudgetExceeded: return "budget-exceeded";
        case AttackStatus::NotSynchronizing: return "not-synchronizing";
        case AttackStatus::NotFound: return "not-found";
        case AttackStatus::Ambiguous: return "ambiguous";
    }
    return "unknown";
}

WordAttackResult attack_by_word_search(const Pfa& pub, const Pfa* cipher,
                                       std::uint64_t budget) {
    auto start = std::chrono::steady_clock::now();
    WordAttackResult res;
    auto search = shortest_careful_sync_word(pub, budget);

    res.cost.add("mode", "word");
    res.cost.add("budget", budget);
    res.cost.add("subsets_visited", search.subsets_visited);

    switch (search.status) {
        case SyncStatus::Found: res.status = AttackStatus::Found; break;
        case SyncStatus::NotSynchronizing:
            res.status = AttackStatus::NotSynchronizing;
            break;
        case SyncStatus::BudgetExceeded:
            res.status = AttackStatus::BudgetExceeded;
            break;
    }

    if (res.status == AttackStatus::Found) {
        res.word = std::move(search.word);
        res.cost.add("word", word_to_string(res.word));
        res.cost.add("word_length", std::uint64_t(res.word.size()));
        if (cipher) {
            try {
                res.plaintext = decrypt(*cipher, res.word);
                res.decrypted = true;
                res.cost.add("plaintext_bits", std::uint64_t(res.plaintext.size()));
            } catch (const DecryptError& e) {
                res.cost.add("decrypt_error", e.what());
            }
        }
    }
    res.cost.add("status", attack_status_name(res.status));
    res.cost.add("wall_ms", format_ms(elapsed_ms(start)));
    return res;
}

namespace {

// The candidate-partition side of the copy attack: extend disjoint key-copy
// images to a classification of every ciphertext state, or report failure.
struct PartitionBuilder {
    const Pfa& cipher;
    const Pfa& pub;
    const ClusterAnalysis& clusters;
    std::vector<int> pub_stable_b;  // (Q.a^m).b in public-key coordinates

    bool build(const std::vector<const std::vector<int>*>& images,
               Partition& out) const {
        const int n = cipher.state_count();
        const int k = int(images.size());
        if (k == 0) return false;

        std::vector<int> class_of(std::size_t(n), -1);
        StateSet cores(n);
        std::vector<StateSet> b_sets;
        b_sets.assign(std::size_t(k), StateSet(n));
        for (int cls = 0; cls < k; ++cls) {
            for (int h : *images[std::size_t(cls)]) {
                if (class_of[std::size_t(h)] != -1) return false;
                class_of[std::size_t(h)] = cls;
                cores.add(h);
            }
            for (int q : pub_stable_b)
                b_sets[std::size_t(cls)].add(
                    (*images[std::size_t(cls)])[std::size_t(q)]);
        }

        for (const auto& cluster : clusters.clusters) {
            if (cluster.states.intersects(cores)) {
                // copy cluster: leftover states join the class their a-path
                // first reaches
                bool ok = true;
                cluster.states.for_each([&](int q) {
                    if (!ok || class_of[std::size_t(q)] != -1) return;
                    int cur = q;
                    for (int step = 0; step <= n; ++step) {
                        cur = cipher.next(cur, Letter::A);
                        if (cur == kNoState) break;
                        if (cores.contains(cur)) {
                            class_of[std::size_t(q)] =
                                class_of[std::size_t(cur)];
                            return;
                        }
                    }
                    ok = false;
                });
                if (!ok) return false;
            } else {
                // candidate added cluster: centers by b-target, branches follow
                std::vector<int> center_cls(std::size_t(n), -1);
                bool ok = true;
                cluster.center.for_each([&](int p) {
                    if (!ok) return;
                    int t = cipher.next(p, Letter::B);
                    int cls = -1;
                    for (int c = 0; c < k && cls == -1; ++c)
                        if (t != kNoState && b_sets[std::size_t(c)].contains(t))
                            cls = c;
                    if (cls == -1) {
                        ok = false;
                        return;
                    }
                    center_cls[std::size_t(p)] = cls;
                    class_of[std::size_t(p)] = cls;
                });
                if (!ok) return false;
                for (const auto& branch : cluster.branches)
                    for (int q : branch.states)
                        class_of[std::size_t(q)] =
                            center_cls[std::size_t(branch.destination)];
            }
        }

        for (int q = 0; q < n; ++q)
            if (class_of[std::size_t(q)] == -1) return false;

        out.classes.assign(std::size_t(k), StateSet(n));
        out.landing.assign(std::size_t(k), kNoState);
        out.class_of = std::move(class_of);
        for (int q = 0; q < n; ++q)
            out.classes[std::size_t(out.class_of[std::size_t(q)])].add(q);
        return true;
    }
};

struct PackingSearch {
    const Pfa& cipher;
    const std::vector<std::vector<int>>& images;       // witness maps
    const std::vector<std::vector<int>>& image_sets;   // sorted images
    const PartitionBuilder& builder;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool exceeded = false;

    std::vector<char> image_used;
    std::vector<char> state_covered;
    std::vector<const std::vector<int>*> selection;

    // distinct successful outcomes, keyed by the class_of vector
    std::set<std::vector<int>> seen;
    std::vector<std::pair<Partition, Bits>> outcomes;

    void leaf() {
        Partition part;
        if (!builder.build(selection, part)) return;
        Bits u;
        try {
            u = reconstruct_plaintext(cipher, part);
        } catch (const DecryptError&) {
            return;
        }
        if (seen.insert(part.class_of).second)
            outcomes.emplace_back(std::move(part), std::move(u));
    }

    void search(int from_state) {
        if (exceeded || outcomes.size() >= 2) return;
        int s = from_state;
        const int n = int(state_covered.size());
        while (s < n && state_covered[std::size_t(s)]) ++s;
        // branch over the images able to cover s
        for (std::size_t i = 0; i < image_sets.size(); ++i) {
            if (image_used[i]) continue;
            const auto& img = image_sets[i];
            if (!std::binary_search(img.begin(), img.end(), s)) continue;
            bool disjoint = true;
            for (int q : img)
                if (state_covered[std::size_t(q)]) {
                    disjoint = false;
                    break;
                }
            if (!disjoint) continue;
            if (++nodes > budget) {
                exceeded = true;
                return;
            }
            image_used[i] = 1;
            for (int q : img) state_covered[std::size_t(q)] = 1;
            selection.push_back(&images[i]);
            search(s + 1);
            selection.pop_back();
            for (int q : img) state_covered[std::size_t(q)] = 0;
            image_used[i] = 0;
            if (exceeded || outcomes.size() >= 2) return;
        }
        if (s >= n) {
            leaf();
            return;
        }
        // s can also stay uncovered (an added or cluster state)
        if (++nodes > budget) {
            exceeded = true;
            return;
        }
        state_covered[std::size_t(s)] = 1;
        search(s + 1);
        state_covered[std::size_t(s)] = 0;
    }
};

}  // namespace

CopyAttackResult attack_by_copy_search(const Pfa& cipher, const Pfa& pub,
                                       std::uint64_t budget) {
    auto start = std::chrono::steady_clock::now();
    CopyAttackResult res;
    res.cost.add("mode", "copy");
    res.cost.add("budget", budget);

    EmbeddingQuery query;
    query.pattern = &pub;
    query.host = &cipher;
    query.max_images = 4096;
    query.node_budget = budget;
    auto found = find_copy_embeddings(query);
    res.cost.add("embedding_nodes", found.nodes_explored);
    res.cost.add("images_found", std::uint64_t(found.maps.size()));

    std::vector<std::vector<int>> image_sets;
    image_sets.reserve(found.maps.size());
    for (const auto& m : found.maps) {
        auto img = m;
        std::sort(img.begin(), img.end());
        image_sets.push_back(std::move(img));
    }

    if (!pub.total(Letter::A))
        throw KeyError("public key must have a total letter a");
    auto stab = stabilization_index(pub);
    auto stable_b = apply_letter_set(pub, stab.stable, Letter::B);
    if (!stable_b)
        throw KeyError("b is undefined on the stable set Q.a^m: invalid key");

    auto clusters = analyze_a_clusters(cipher);
    // B_i is phi_i applied to (Q.a^m).b, so keep that set in key coordinates
    PartitionBuilder builder{cipher, pub, clusters, stable_b->members()};

    std::uint64_t remaining =
        budget > found.nodes_explored ? budget - found.nodes_explored : 0;
    PackingSearch packing{cipher, found.maps, image_sets, builder, remaining,
                          0,  {}, {}, {}, {}, {}, {}};
    packing.image_used.assign(image_sets.size(), 0);
    packing.state_covered.assign(std::size_t(cipher.state_count()), 0);
    packing.search(0);

    res.cost.add("packing_nodes", packing.nodes);
    res.cost.add("outcomes", std::uint64_t(packing.outcomes.size()));

    if (packing.outcomes.size() >= 2) {
        res.status = AttackStatus::Ambiguous;
    } else if (packing.outcomes.size() == 1) {
        res.status = AttackStatus::Found;
        res.partition = std::move(packing.outcomes.front().first);
        res.plaintext = std::move(packing.outcomes.front().second);
        res.cost.add("plaintext_bits", std::uint64_t(res.plaintext.size()));
    } else if (found.budget_exceeded || packing.exceeded ||
               int(found.maps.size()) >= query.max_images) {
        res.status = AttackStatus::BudgetExceeded;
    } else {
        res.status = AttackStatus::NotFound;
    }
    res.cost.add("status", attack_status_name(res.status));
    res.cost.add("wall_ms", format_ms(elapsed_ms(start)));
    return res;
}

}  // namespace pfa
