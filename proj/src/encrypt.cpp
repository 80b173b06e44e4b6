#include "pfa/encrypt.hpp"

#include <algorithm>
#include <string>

#include "pfa/power_search.hpp"

namespace pfa {

namespace {

// Public-key checks that do not need the private word: exactly the part of
// validate_keypair an encryptor can see.
void check_public_key(const Pfa& pub) {
    if (pub.alphabet() != LetterSet::sigma())
        throw KeyError("public key alphabet must be exactly {a,b}");
    if (!pub.total(Letter::A))
        throw KeyError("public key must have a total letter a");
    if (pub.total(Letter::B))
        throw KeyError("public key must leave b undefined somewhere");
    Pfa a_only = restrict_alphabet(pub, LetterSet::of({Letter::A}));
    auto r = shortest_careful_sync_word(
        a_only, std::uint64_t(pub.state_count()) + 2, Exec::Serial);
    if (r.status != SyncStatus::NotSynchronizing)
        throw KeyError("public key is synchronized by a word over {a} alone");
}

struct BitDegrees {
    std::vector<char> has_in;   // any incoming bit edge
    std::vector<char> has_out;  // any outgoing bit edge

    explicit BitDegrees(const Pfa& a)
        : has_in(std::size_t(a.state_count()), 0),
          has_out(std::size_t(a.state_count()), 0) {
        for (int q = 0; q < a.state_count(); ++q)
            for (Letter x : {Letter::Bit0, Letter::Bit1})
                if (a.defined(q, x)) {
                    has_out[std::size_t(q)] = 1;
                    has_in[std::size_t(a.next(q, x))] = 1;
                }
    }
};

void audit_ciphertext(const Pfa& aut) {
    for (Letter x : {Letter::A, Letter::B})
        if (!aut.total(x))
            throw Error("internal: ciphertext {a,b}-restriction is not total");
    // no directed bit path of length two: no state with both ends used
    BitDegrees deg(aut);
    for (int q = 0; q < aut.state_count(); ++q)
        if (deg.has_in[std::size_t(q)] && deg.has_out[std::size_t(q)])
            throw Error("internal: bit digraph has a path of length two");
}

}  // namespace

void validate_params(const EncryptionParams& params) {
    if (params.noise_min < 0 || params.noise_max < params.noise_min)
        throw ParamError("bad noise range");
    if (!params.extended) {
        if (params.cluster_count != 0 || params.added_min != 0 ||
            params.added_max != 0)
            throw ParamError(
                "cluster and added-state counts need the extended mode");
        return;
    }
    if (params.cluster_count < 0) throw ParamError("bad cluster count");
    if (params.cluster_size_min < 2 ||
        params.cluster_size_max < params.cluster_size_min)
        throw ParamError("cluster sizes must be at least 2");
    if (params.added_min < 0 || params.added_max < params.added_min)
        throw ParamError("bad added-state range");
}

StateSet EncryptionTrace::class_states(int cls) const {
    StateSet s = key_states[std::size_t(cls)];
    s |= added_states[std::size_t(cls)];
    s |= cluster_states[std::size_t(cls)];
    return s;
}

Pfa encode_plaintext_path(const Bits& u) {
    Pfa path(int(u.size()) + 1, LetterSet::bits());
    for (int i = 0; i < int(u.size()); ++i)
        path.set(i, bit_letter(u[std::size_t(i)]), i + 1);
    return path;
}

std::vector<StateSet> compute_b_sets(const Pfa& pub,
                                     const std::vector<int>& copy_offsets) {
    auto stab = stabilization_index(pub);
    auto image = apply_letter_set(pub, stab.stable, Letter::B);
    if (!image)
        throw KeyError("b is undefined on the stable set Q.a^m: invalid key");

    int total = 0;
    for (int offset : copy_offsets)
        total = std::max(total, offset + pub.state_count());
    std::vector<StateSet> b_sets;
    b_sets.reserve(copy_offsets.size());
    for (int offset : copy_offsets) {
        StateSet translated(total);
        image->for_each([&](int q) { translated.add(offset + q); });
        b_sets.push_back(std::move(translated));
    }
    return b_sets;
}

std::vector<int> EncryptWork::class_members(int cls) const {
    std::vector<int> out = key_members[std::size_t(cls)];
    out.insert(out.end(), added_members[std::size_t(cls)].begin(),
               added_members[std::size_t(cls)].end());
    out.insert(out.end(), cluster_members[std::size_t(cls)].begin(),
               cluster_members[std::size_t(cls)].end());
    std::sort(out.begin(), out.end());
    return out;
}

EncryptWork begin_encryption(const Pfa& pub, const Bits& u) {
    EncryptWork work;
    work.key_size = pub.state_count();
    work.copies = int(u.size()) + 1;

    const int n = pub.state_count();
    work.automaton = Pfa(n * work.copies, LetterSet::all());
    work.class_of.assign(std::size_t(n) * std::size_t(work.copies), 0);
    work.key_members.resize(std::size_t(work.copies));
    work.added_members.resize(std::size_t(work.copies));
    work.cluster_members.resize(std::size_t(work.copies));

    for (int copy = 0; copy < work.copies; ++copy) {
        const int offset = copy * n;
        work.copy_offset.push_back(offset);
        for (int q = 0; q < n; ++q) {
            work.class_of[std::size_t(offset + q)] = copy;
            work.key_members[std::size_t(copy)].push_back(offset + q);
            for (Letter x : {Letter::A, Letter::B})
                if (pub.defined(q, x))
                    work.automaton.set(offset + q, x, offset + pub.next(q, x));
        }
    }
    return work;
}

void extend_with_clusters(EncryptWork& work,
                          const std::vector<StateSet>& b_sets, int count,
                          int size_min, int size_max, Rng& rng) {
    std::vector<std::vector<int>> b_members;
    b_members.reserve(b_sets.size());
    for (const auto& s : b_sets) b_members.push_back(s.members());

    for (int c = 0; c < count; ++c) {
        const int size = rng.range(size_min, size_max);
        const int center_size = rng.range(1, size - 1);
        const int base = work.automaton.state_count();
        work.automaton.add_states(size);
        work.class_of.resize(std::size_t(base + size), -1);

        // cycle, then single-edge branches: depth exactly 1
        for (int i = 0; i < center_size; ++i)
            work.automaton.set(base + i, Letter::A,
                               base + (i + 1) % center_size);
        std::vector<std::vector<int>> branch_of;
        branch_of.resize(std::size_t(center_size));
        for (int i = center_size; i < size; ++i) {
            int dest = int(rng.below(std::uint64_t(center_size)));
            work.automaton.set(base + i, Letter::A, base + dest);
            branch_of[std::size_t(dest)].push_back(base + i);
        }

        // the whole center targets one class: any decrypting word rotates the
        // cycle by its leading a-count before b fires, so per-center class
        // choices would make the landing depend on the word
        int cls = int(rng.below(std::uint64_t(work.copies)));
        for (int i = 0; i < center_size; ++i) {
            int target = rng.pick(b_members[std::size_t(cls)]);
            work.automaton.set(base + i, Letter::B, target);
            work.class_of[std::size_t(base + i)] = cls;
            work.cluster_members[std::size_t(cls)].push_back(base + i);
            for (int q : branch_of[std::size_t(i)]) {
                work.class_of[std::size_t(q)] = cls;
                work.cluster_members[std::size_t(cls)].push_back(q);
            }
        }
    }
}

void extend_with_states(EncryptWork& work, int added_min, int added_max,
                        Rng& rng) {
    if (added_min == 0 && added_max == 0) return;
    const int n = work.key_size;
    for (int copy = 0; copy < work.copies; ++copy) {
        const int offset = work.copy_offset[std::size_t(copy)];
        // a-targets must already have an a-preimage in the copy, i.e. lie in
        // the image of the copy's a-map
        std::vector<int> pool;
        {
            std::vector<char> seen(std::size_t(n), 0);
            for (int q = 0; q < n; ++q)
                seen[std::size_t(work.automaton.next(offset + q, Letter::A) -
                                 offset)] = 1;
            for (int q = 0; q < n; ++q)
                if (seen[std::size_t(q)]) pool.push_back(offset + q);
        }
        const int k = rng.range(added_min, added_max);
        for (int i = 0; i < k; ++i) {
            const int q = work.automaton.state_count();
            work.automaton.add_states(1);
            work.automaton.set(q, Letter::A, rng.pick(pool));
            work.class_of.push_back(copy);
            work.added_members[std::size_t(copy)].push_back(q);
        }
    }
}

void add_plaintext_edges(EncryptWork& work, const Bits& u, Rng& rng) {
    int prev_dst = kNoState;
    for (int i = 0; i < int(u.size()); ++i) {
        auto src_pool = work.class_members(i);
        auto dst_pool = work.class_members(i + 1);
        int src = rng.pick(src_pool);
        // the previous edge's endpoint cannot also source this one, or the
        // bit digraph would grow a path of length two
        while (src == prev_dst) src = rng.pick(src_pool);
        int dst = rng.pick(dst_pool);
        Letter x = bit_letter(u[std::size_t(i)]);
        work.automaton.set(src, x, dst);
        work.inter_class_edges.push_back(BitEdge{src, x, dst, i, i + 1});
        prev_dst = dst;
    }
}

void fill_sigma_transitions(EncryptWork& work, Rng& rng) {
    const int total = work.automaton.state_count();
    for (int cls = 0; cls < work.copies; ++cls) {
        std::vector<std::pair<int, Letter>> slots;
        for (int q : work.class_members(cls))
            for (Letter x : {Letter::A, Letter::B})
                if (!work.automaton.defined(q, x)) slots.emplace_back(q, x);
        if (slots.empty()) continue;

        std::vector<int> targets(slots.size());
        bool any_cross = false;
        for (std::size_t i = 0; i < slots.size(); ++i) {
            targets[i] = int(rng.below(std::uint64_t(total)));
            if (work.class_of[std::size_t(targets[i])] != cls) any_cross = true;
        }
        // all-intra fills would leave the copies mutually unreachable over
        // {a,b}, which simplifies attacks; force one cross-class fill
        if (!any_cross && work.copies > 1) {
            std::size_t slot = std::size_t(rng.below(slots.size()));
            int out_count = 0;
            for (int q = 0; q < total; ++q)
                if (work.class_of[std::size_t(q)] != cls) ++out_count;
            int pick = int(rng.below(std::uint64_t(out_count)));
            for (int q = 0; q < total; ++q) {
                if (work.class_of[std::size_t(q)] == cls) continue;
                if (pick-- == 0) {
                    targets[slot] = q;
                    break;
                }
            }
        }
        for (std::size_t i = 0; i < slots.size(); ++i)
            work.automaton.set(slots[i].first, slots[i].second, targets[i]);
    }
}

void add_noise_edges(EncryptWork& work, int noise_min, int noise_max,
                     Rng& rng) {
    if (noise_max == 0) return;
    const int total = work.automaton.state_count();
    std::vector<char> bit_in(std::size_t(total), 0), bit_out(std::size_t(total), 0);
    for (const auto& e : work.inter_class_edges) {
        bit_out[std::size_t(e.src)] = 1;
        bit_in[std::size_t(e.dst)] = 1;
    }

    for (int cls = 0; cls < work.copies; ++cls) {
        auto members = work.class_members(cls);
        const int k = rng.range(noise_min, noise_max);
        for (int i = 0; i < k; ++i) {
            // rejection sampling against the structural invariants; a full
            // class can make an edge impossible, so give up after a while
            const int max_attempts = 64;
            for (int attempt = 0; attempt < max_attempts; ++attempt) {
                int src = rng.pick(members);
                int dst = rng.pick(members);
                Letter x = rng.coin() ? Letter::Bit1 : Letter::Bit0;
                if (src == dst) continue;
                if (work.automaton.defined(src, x)) continue;
                if (bit_in[std::size_t(src)] || bit_out[std::size_t(dst)])
                    continue;
                work.automaton.set(src, x, dst);
                work.noise_edges.push_back(BitEdge{src, x, dst, cls, cls});
                bit_out[std::size_t(src)] = 1;
                bit_in[std::size_t(dst)] = 1;
                break;
            }
        }
    }
}

namespace {

Ciphertext finish(EncryptWork&& work) {
    const int total = work.automaton.state_count();
    EncryptionTrace trace;
    trace.copy_of = std::move(work.class_of);
    trace.copy_offset = std::move(work.copy_offset);
    trace.inter_class_edges = std::move(work.inter_class_edges);
    trace.noise_edges = std::move(work.noise_edges);
    for (int cls = 0; cls < work.copies; ++cls) {
        auto to_set = [&](const std::vector<int>& v) {
            StateSet s(total);
            for (int q : v) s.add(q);
            return s;
        };
        trace.key_states.push_back(to_set(work.key_members[std::size_t(cls)]));
        trace.added_states.push_back(
            to_set(work.added_members[std::size_t(cls)]));
        trace.cluster_states.push_back(
            to_set(work.cluster_members[std::size_t(cls)]));
    }
    Ciphertext out{std::move(work.automaton), std::move(trace)};
    audit_ciphertext(out.automaton);
    return out;
}

}  // namespace

Ciphertext encrypt_basic(const Pfa& pub, const Bits& u,
                         const EncryptionParams& params) {
    validate_params(params);
    if (params.extended)
        throw ParamError("encrypt_basic called with extended params");
    check_public_key(pub);

    Rng rng(params.seed);
    EncryptWork work = begin_encryption(pub, u);
    add_plaintext_edges(work, u, rng);
    fill_sigma_transitions(work, rng);
    add_noise_edges(work, params.noise_min, params.noise_max, rng);
    return finish(std::move(work));
}

Ciphertext encrypt_extended(const Pfa& pub, const Bits& u,
                            const EncryptionParams& params) {
    validate_params(params);
    if (!params.extended)
        throw ParamError("encrypt_extended needs params.extended");
    check_public_key(pub);

    Rng rng(params.seed);
    EncryptWork work = begin_encryption(pub, u);
    if (params.cluster_count > 0) {
        auto b_sets = compute_b_sets(pub, work.copy_offset);
        extend_with_clusters(work, b_sets, params.cluster_count,
                             params.cluster_size_min, params.cluster_size_max,
                             rng);
    }
    extend_with_states(work, params.added_min, params.added_max, rng);
    add_plaintext_edges(work, u, rng);
    fill_sigma_transitions(work, rng);
    add_noise_edges(work, params.noise_min, params.noise_max, rng);
    return finish(std::move(work));
}

Ciphertext encrypt(const Pfa& pub, const Bits& u,
                   const EncryptionParams& params) {
    return params.extended ? encrypt_extended(pub, u, params)
                           : encrypt_basic(pub, u, params);
}

}  // namespace pfa
