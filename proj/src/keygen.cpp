#include "pfa/keygen.hpp"

#include <algorithm>

#include "pfa/power_search.hpp"
#include "pfa/rng.hpp"

namespace pfa {

namespace {

// Subset chain of a unary map, as needed before any Pfa exists.
struct AMapInfo {
    int stabilization = 0;         // smallest m with Q.a^m = Q.a^{m+1}
    std::vector<int> stable;       // Q.a^m, ascending
    std::vector<int> image;        // Q.a, ascending
};

AMapInfo analyze_a_map(const std::vector<int>& amap) {
    const int n = int(amap.size());
    AMapInfo info;
    std::vector<char> cur(std::size_t(n), 1);
    auto apply = [&](const std::vector<char>& s) {
        std::vector<char> out(std::size_t(n), 0);
        for (int q = 0; q < n; ++q)
            if (s[std::size_t(q)]) out[std::size_t(amap[std::size_t(q)])] = 1;
        return out;
    };
    auto members = [&](const std::vector<char>& s) {
        std::vector<int> out;
        for (int q = 0; q < n; ++q)
            if (s[std::size_t(q)]) out.push_back(q);
        return out;
    };
    info.image = members(apply(cur));
    for (;;) {
        auto next = apply(cur);
        if (next == cur) break;
        cur = std::move(next);
        ++info.stabilization;
    }
    info.stable = members(cur);
    return info;
}

struct ChainResult {
    bool ok = false;
    std::vector<int> bmap;  // kNoState where undefined
};

// Sweeps w over the full set, inventing the b-transitions each application
// needs. All b-targets are drawn from the a-image, so states outside Q.a
// never receive a b-transition and the leading a keeps them out of every
// later set: b stays partial by construction.
ChainResult build_b_along_word(const std::vector<int>& amap,
                               const std::vector<int>& a_image, const Word& w,
                               Rng& rng) {
    const int n = int(amap.size());
    ChainResult res;
    res.bmap.assign(std::size_t(n), kNoState);

    int last_b = -1;
    for (int i = 0; i < int(w.size()); ++i)
        if (w[std::size_t(i)] == Letter::B) last_b = i;

    std::vector<char> in_set(std::size_t(n), 1);

    for (int i = 0; i < int(w.size()); ++i) {
        if (w[std::size_t(i)] == Letter::A) {
            std::vector<char> next(std::size_t(n), 0);
            for (int q = 0; q < n; ++q)
                if (in_set[std::size_t(q)])
                    next[std::size_t(amap[std::size_t(q)])] = 1;
            in_set = std::move(next);
            continue;
        }

        // letter b: forced images from earlier assignments, free states to place
        std::vector<int> forced, free_states;
        for (int q = 0; q < n; ++q) {
            if (!in_set[std::size_t(q)]) continue;
            if (res.bmap[std::size_t(q)] != kNoState)
                forced.push_back(res.bmap[std::size_t(q)]);
            else
                free_states.push_back(q);
        }
        std::sort(forced.begin(), forced.end());
        forced.erase(std::unique(forced.begin(), forced.end()), forced.end());

        if (i == last_b) {
            // everything must land on one state here
            if (forced.size() > 1) return res;
            int target = forced.size() == 1 ? forced[0] : rng.pick(a_image);
            for (int q : free_states) res.bmap[std::size_t(q)] = target;
            std::fill(in_set.begin(), in_set.end(), 0);
            in_set[std::size_t(target)] = 1;
            continue;
        }

        // intermediate b: shrink moderately toward the final merge
        const int cur_size = int(forced.size() + free_states.size());
        int lo = std::max(1, int(forced.size()));
        int hi = int(forced.size()) + int(free_states.size());
        int desired = std::max(2, (cur_size * (5 + int(rng.below(3)))) / 10);
        int sz = std::clamp(desired, lo, hi);

        std::vector<int> fresh_pool;
        for (int q : a_image)
            if (!std::binary_search(forced.begin(), forced.end(), q))
                fresh_pool.push_back(q);
        rng.shuffle(fresh_pool);
        // sz - |forced| <= |free_states|, so every fresh target gets hit below
        int want_fresh = std::min(sz - int(forced.size()), int(fresh_pool.size()));
        std::vector<int> targets = forced;
        for (int k = 0; k < want_fresh; ++k)
            targets.push_back(fresh_pool[std::size_t(k)]);

        rng.shuffle(free_states);
        std::vector<char> next(std::size_t(n), 0);
        for (int t : targets) next[std::size_t(t)] = 1;
        for (std::size_t k = 0; k < free_states.size(); ++k) {
            // hit each fresh target at least once, then spread uniformly
            int t = k < std::size_t(want_fresh)
                        ? targets[forced.size() + k]
                        : rng.pick(targets);
            res.bmap[std::size_t(free_states[k])] = t;
        }
        in_set = std::move(next);
    }
    res.ok = true;
    return res;
}

}  // namespace

KeyPair generate_keypair(const KeyGenParams& params) {
    if (params.state_count < 3)
        throw ParamError("state_count must be at least 3");
    if (params.word_length < 2)
        throw ParamError("word_length must be at least 2");
    if (params.max_retries < 1)
        throw ParamError("max_retries must be at least 1");

    Rng rng(params.seed);
    const int n = params.state_count;
    const int len = params.word_length;
    int attempts = 0;

    for (int attempt = 0; attempt < params.max_retries; ++attempt) {
        ++attempts;
        std::vector<int> amap(std::size_t(n), 0);
        for (int q = 0; q < n; ++q)
            amap[std::size_t(q)] = int(rng.below(std::uint64_t(n)));

        auto info = analyze_a_map(amap);
        // the stable set is the cyclic part of the a-map: two or more cyclic
        // states rule out synchronization by a alone, and a non-surjective
        // a-map (m >= 1) leaves b undefined on the off-image states forever
        if (info.stabilization < 1 || int(info.stable.size()) < 2) continue;

        const int suffix_tries = 8;
        for (int st = 0; st < suffix_tries; ++st) {
            int j = rng.range(1, std::min(info.stabilization, len - 1));
            Word w(std::size_t(len), Letter::A);
            w[std::size_t(j)] = Letter::B;
            if (st + 1 < suffix_tries) {
                for (int i = j + 1; i < len; ++i)
                    w[std::size_t(i)] = rng.coin() ? Letter::B : Letter::A;
            }
            // last try keeps the suffix all-a: a single b always merges

            auto chain = build_b_along_word(amap, info.image, w, rng);
            if (!chain.ok) continue;

            Pfa pub(n, LetterSet::sigma());
            for (int q = 0; q < n; ++q) {
                pub.set(q, Letter::A, amap[std::size_t(q)]);
                if (chain.bmap[std::size_t(q)] != kNoState)
                    pub.set(q, Letter::B, chain.bmap[std::size_t(q)]);
            }
            KeyPair kp{std::move(pub), std::move(w)};
            if (validate_keypair(kp).ok()) return kp;
        }
    }
    throw KeygenError("key generation failed after " +
                          std::to_string(attempts) + " attempts",
                      attempts);
}

ValidationReport validate_keypair(const KeyPair& kp) {
    ValidationReport report;
    const Pfa& pub = kp.public_key;

    if (pub.alphabet() != LetterSet::sigma())
        report.failures.push_back("public key alphabet must be exactly {a,b}");
    if (!pub.has_letter(Letter::A) || !pub.total(Letter::A))
        report.failures.push_back("letter a must be total on the public key");
    if (pub.has_letter(Letter::B) && pub.total(Letter::B))
        report.failures.push_back(
            "letter b must be undefined on at least one state");

    if (kp.private_key.empty() && pub.state_count() > 1)
        report.failures.push_back("private word is empty");
    if (!kp.private_key.empty() && kp.private_key.front() != Letter::A)
        report.failures.push_back("private word must start with a");
    bool has_b = std::find(kp.private_key.begin(), kp.private_key.end(),
                           Letter::B) != kp.private_key.end();
    if (!has_b)
        report.failures.push_back(
            "private word must contain a b after its leading a-block");

    if (!is_careful_sync_word(pub, kp.private_key))
        report.failures.push_back(
            "private word does not carefully synchronize the public key");

    // no word over {a} alone may synchronize; the unary power-automaton walk
    // is a short chain, so a tiny budget is exhaustive
    if (pub.total(Letter::A)) {
        Pfa a_only = restrict_alphabet(pub, LetterSet::of({Letter::A}));
        auto r = shortest_careful_sync_word(
            a_only, std::uint64_t(pub.state_count()) + 2, Exec::Serial);
        if (r.status != SyncStatus::NotSynchronizing)
            report.failures.push_back(
                "public key is synchronized by a word over {a} alone");
    }
    return report;
}

}  // namespace pfa
