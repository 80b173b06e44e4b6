#include "pfa/decrypt.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "pfa/clusters.hpp"
#include "pfa/embedding.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pfa {

namespace {

void check_word_alphabet(const Pfa& cipher, const Word& w) {
    for (Letter x : w)
        if (!is_automaton_letter(x) || !cipher.has_letter(x))
            throw DecryptError(DecryptError::Kind::NotDecryptingWord,
                               "decrypting words range over {a,b} only");
}

// Landing state per start state; the column table rolled into one row that
// is rewritten |w| times. Serial reference kernel.
std::vector<int> landing_map_serial(const Pfa& cipher, const Word& w,
                                    PartitionStats* stats) {
    const int n = cipher.state_count();
    std::vector<int> row(std::size_t(n), 0);
    for (int q = 0; q < n; ++q) row[std::size_t(q)] = q;
    std::uint64_t ops = 0;
    for (Letter x : w) {
        const auto& delta = cipher.row(x);
        for (int col = 0; col < n; ++col) {
            int t = delta.empty() ? kNoState : delta[std::size_t(row[std::size_t(col)])];
            ++ops;
            if (t == kNoState)
                throw DecryptError(DecryptError::Kind::NotDecryptingWord,
                                   "transition undefined along the word");
            row[std::size_t(col)] = t;
        }
    }
    if (stats) stats->letter_ops = ops;
    return row;
}

// Same map, one independent walk per state. Schedule-independent by
// construction: each column only writes its own slot.
std::vector<int> landing_map_parallel(const Pfa& cipher, const Word& w,
                                      PartitionStats* stats) {
    const int n = cipher.state_count();
    std::vector<int> row(std::size_t(n), 0);
    std::uint64_t ops = 0;
    bool failed = false;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(+ : ops) \
    reduction(|| : failed)
#endif
    for (int col = 0; col < n; ++col) {
        int cur = col;
        for (Letter x : w) {
            const auto& delta = cipher.row(x);
            cur = delta.empty() ? kNoState : delta[std::size_t(cur)];
            ++ops;
            if (cur == kNoState) {
                failed = true;
                break;
            }
        }
        row[std::size_t(col)] = cur;
    }
    if (failed)
        throw DecryptError(DecryptError::Kind::NotDecryptingWord,
                           "transition undefined along the word");
    if (stats) stats->letter_ops = ops;
    return row;
}

}  // namespace

std::vector<int> recover_landing_states(const Pfa& cipher, const Word& w) {
    check_word_alphabet(cipher, w);
    auto image = apply_word_set(cipher, full_state_set(cipher), w);
    if (!image)
        throw DecryptError(DecryptError::Kind::NotDecryptingWord,
                           "transition undefined along the word");
    return image->members();
}

Partition compute_partition(const Pfa& cipher, const Word& w, Exec exec,
                            PartitionStats* stats) {
    check_word_alphabet(cipher, w);
    std::vector<int> landing = exec == Exec::Serial
                                   ? landing_map_serial(cipher, w, stats)
                                   : landing_map_parallel(cipher, w, stats);
    const int n = cipher.state_count();

    std::map<int, int> class_index;  // landing state -> class, ascending
    for (int q = 0; q < n; ++q) class_index.emplace(landing[std::size_t(q)], 0);
    int next_idx = 0;
    for (auto& [state, idx] : class_index) idx = next_idx++;

    Partition part;
    part.landing.resize(class_index.size());
    part.classes.assign(class_index.size(), StateSet(n));
    part.class_of.resize(std::size_t(n));
    for (auto& [state, idx] : class_index) part.landing[std::size_t(idx)] = state;
    for (int q = 0; q < n; ++q) {
        int cls = class_index[landing[std::size_t(q)]];
        part.class_of[std::size_t(q)] = cls;
        part.classes[std::size_t(cls)].add(q);
    }
    return part;
}

Bits reconstruct_plaintext(const Pfa& cipher, const Partition& partition) {
    const int k = partition.size();
    std::vector<int> out_class(std::size_t(k), -1);
    std::vector<Letter> out_label(std::size_t(k), Letter::Bit0);
    std::vector<int> indeg(std::size_t(k), 0);
    int edges = 0;

    for (int q = 0; q < cipher.state_count(); ++q)
        for (Letter x : {Letter::Bit0, Letter::Bit1}) {
            int t = cipher.next(q, x);
            if (t == kNoState) continue;
            int ci = partition.class_of[std::size_t(q)];
            int cj = partition.class_of[std::size_t(t)];
            if (ci == cj) continue;  // noise: dropped by the quotient
            if (out_class[std::size_t(ci)] == cj)
                throw DecryptError(
                    DecryptError::Kind::MalformedCiphertext,
                    "two inter-class edges join the same class pair");
            if (out_class[std::size_t(ci)] != -1)
                throw DecryptError(DecryptError::Kind::MalformedCiphertext,
                                   "class quotient branches");
            if (indeg[std::size_t(cj)] != 0)
                throw DecryptError(DecryptError::Kind::MalformedCiphertext,
                                   "class quotient merges");
            out_class[std::size_t(ci)] = cj;
            out_label[std::size_t(ci)] = x;
            ++indeg[std::size_t(cj)];
            ++edges;
        }

    if (edges != k - 1)
        throw DecryptError(DecryptError::Kind::MalformedCiphertext,
                           "class quotient is not a spanning path");
    int source = -1;
    for (int c = 0; c < k; ++c)
        if (indeg[std::size_t(c)] == 0) {
            if (source != -1)
                throw DecryptError(DecryptError::Kind::MalformedCiphertext,
                                   "class quotient has two sources");
            source = c;
        }
    if (source == -1)
        throw DecryptError(DecryptError::Kind::MalformedCiphertext,
                           "class quotient has no source");

    Bits u;
    int cur = source, seen = 1;
    while (out_class[std::size_t(cur)] != -1) {
        u.push_back(out_label[std::size_t(cur)] == Letter::Bit1 ? 1 : 0);
        cur = out_class[std::size_t(cur)];
        ++seen;
    }
    if (seen != k)
        throw DecryptError(DecryptError::Kind::MalformedCiphertext,
                           "class quotient path does not cover every class");
    return u;
}

Bits decrypt(const Pfa& cipher, const Word& w) {
    Partition part = compute_partition(cipher, w);
    return reconstruct_plaintext(cipher, part);
}

StructureReport analyze_structure(const Pfa& cipher, const Word& w,
                                  const Pfa& pub) {
    auto landing_pub = is_careful_sync_word(pub, w);
    if (!landing_pub)
        throw ParamError("word does not carefully synchronize the public key");

    Partition part = compute_partition(cipher, w);
    const int k = part.size();
    const int n = cipher.state_count();

    // one anchored copy embedding per class: the landing state pins q_l
    std::vector<std::vector<int>> copy_map;
    copy_map.resize(std::size_t(k));
    for (int cls = 0; cls < k; ++cls) {
        EmbeddingQuery query;
        query.pattern = &pub;
        query.host = &cipher;
        query.host_mask = &part.classes[std::size_t(cls)];
        query.anchor_pattern = *landing_pub;
        query.anchor_host = part.landing[std::size_t(cls)];
        query.max_images = 2;
        auto found = find_copy_embeddings(query);
        if (found.budget_exceeded)
            throw DecryptError(DecryptError::Kind::StructureUnresolved,
                               "copy search budget exceeded in class " +
                                   std::to_string(cls));
        if (found.maps.empty())
            throw DecryptError(DecryptError::Kind::StructureUnresolved,
                               "no key copy found in class " +
                                   std::to_string(cls));
        if (found.maps.size() > 1)
            throw DecryptError(DecryptError::Kind::StructureUnresolved,
                               "multiple key copies fit class " +
                                   std::to_string(cls));
        copy_map[std::size_t(cls)] = std::move(found.maps.front());
    }

    StructureReport report;
    report.key_states.assign(std::size_t(k), StateSet(n));
    report.added_states.assign(std::size_t(k), StateSet(n));
    report.cluster_states.assign(std::size_t(k), StateSet(n));

    StateSet all_cores(n);
    for (int cls = 0; cls < k; ++cls)
        for (int h : copy_map[std::size_t(cls)]) {
            report.key_states[std::size_t(cls)].add(h);
            all_cores.add(h);
        }

    // B_i in ciphertext coordinates, through each class's embedding
    auto stab = stabilization_index(pub);
    auto stable_b = apply_letter_set(pub, stab.stable, Letter::B);
    if (!stable_b)
        throw DecryptError(DecryptError::Kind::StructureUnresolved,
                           "public key lacks b on its stable set");
    std::vector<StateSet> b_sets;
    b_sets.assign(std::size_t(k), StateSet(n));
    for (int cls = 0; cls < k; ++cls)
        stable_b->for_each([&](int q) {
            b_sets[std::size_t(cls)].add(copy_map[std::size_t(cls)][std::size_t(q)]);
        });

    auto clusters = analyze_a_clusters(cipher);
    for (const auto& cluster : clusters.clusters) {
        if (cluster.states.intersects(all_cores)) continue;
        // an added cluster: centers are assigned by their b-targets, branches
        // follow their destination
        std::map<int, int> center_class;
        std::vector<int> center_states = cluster.center.members();
        for (int p : center_states) {
            int t = cipher.next(p, Letter::B);
            int cls = -1;
            for (int c = 0; c < k && cls == -1; ++c)
                if (t != kNoState && b_sets[std::size_t(c)].contains(t)) cls = c;
            if (cls == -1)
                throw DecryptError(
                    DecryptError::Kind::StructureUnresolved,
                    "cluster center " + std::to_string(p) +
                        " does not target any B_i");
            if (part.class_of[std::size_t(p)] != cls)
                throw DecryptError(DecryptError::Kind::StructureUnresolved,
                                   "cluster center class mismatch");
            center_class[p] = cls;
            report.cluster_states[std::size_t(cls)].add(p);
        }
        for (const auto& branch : cluster.branches)
            for (int q : branch.states) {
                int cls = center_class.at(branch.destination);
                if (part.class_of[std::size_t(q)] != cls)
                    throw DecryptError(DecryptError::Kind::StructureUnresolved,
                                       "cluster branch class mismatch");
                report.cluster_states[std::size_t(cls)].add(q);
            }
    }

    // whatever remains in a class must be an added state: one a-edge into the
    // class's key copy
    for (int cls = 0; cls < k; ++cls) {
        part.classes[std::size_t(cls)].for_each([&](int q) {
            if (report.key_states[std::size_t(cls)].contains(q) ||
                report.cluster_states[std::size_t(cls)].contains(q))
                return;
            int t = cipher.next(q, Letter::A);
            if (t == kNoState ||
                !report.key_states[std::size_t(cls)].contains(t))
                throw DecryptError(
                    DecryptError::Kind::StructureUnresolved,
                    "state " + std::to_string(q) +
                        " is neither copy, cluster, nor added state");
            report.added_states[std::size_t(cls)].add(q);
        });
    }
    return report;
}

}  // namespace pfa
