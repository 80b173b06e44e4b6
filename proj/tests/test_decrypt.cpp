#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "pfa/decrypt.hpp"
#include "pfa/encrypt.hpp"
#include "pfa/keygen.hpp"
#include "pfa/power_search.hpp"

using namespace pfa;
using fixtures::t1;

namespace {

// partition classes as a set-of-sets, compared against the trace classes
bool partition_matches_trace(const Partition& part, const EncryptionTrace& trace) {
    if (part.size() != int(trace.key_states.size())) return false;
    for (int cls = 0; cls < part.size(); ++cls) {
        bool found = false;
        for (std::size_t tc = 0; tc < trace.key_states.size() && !found; ++tc)
            if (part.classes[std::size_t(cls)] == trace.class_states(int(tc)))
                found = true;
        if (!found) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("landing states, one per copy") {
    EncryptionParams params;
    params.seed = 11;
    Word w = word_from_string("ab");

    Ciphertext c = encrypt_basic(t1(), bits_from_string("01"), params);
    auto landing = recover_landing_states(c.automaton, w);
    REQUIRE(landing.size() == 3);
    std::vector<int> classes;
    for (int q : landing)
        classes.push_back(c.trace.copy_of[std::size_t(q)]);
    std::sort(classes.begin(), classes.end());
    CHECK(classes == std::vector<int>{0, 1, 2});

    Ciphertext single = encrypt_basic(t1(), Bits{}, params);
    auto only = recover_landing_states(single.automaton, w);
    REQUIRE(only.size() == 1);
    CHECK(only[0] == 2);  // T1 lands "ab" on state 2, single copy at offset 0
}

TEST_CASE("words that break mid-way are reported") {
    // the raw T1 union has no b on state 2, so "abb"-style words die on it
    Pfa two_copies = disjoint_union(t1(), t1()).automaton;
    CHECK_THROWS_AS(recover_landing_states(two_copies, word_from_string("b")),
                    DecryptError);
    CHECK_THROWS_AS(
        compute_partition(two_copies, word_from_string("b"), Exec::Serial),
        DecryptError);
}

TEST_CASE("partition of a one-bit ciphertext") {
    EncryptionParams params;
    params.seed = 23;
    Ciphertext c = encrypt_basic(t1(), bits_from_string("0"), params);

    Partition part = compute_partition(c.automaton, word_from_string("ab"));
    REQUIRE(part.size() == 2);
    CHECK(part.classes[0].count() == 3);
    CHECK(part.classes[1].count() == 3);
    CHECK(partition_matches_trace(part, c.trace));

    // landing states sit inside their own classes
    for (int cls = 0; cls < part.size(); ++cls)
        CHECK(part.classes[std::size_t(cls)].contains(
            part.landing[std::size_t(cls)]));
}

TEST_CASE("partition of the empty-plaintext ciphertext is one class") {
    EncryptionParams params;
    params.seed = 29;
    Ciphertext c = encrypt_basic(t1(), Bits{}, params);
    Partition part = compute_partition(c.automaton, word_from_string("ab"));
    CHECK(part.size() == 1);
    CHECK(part.classes[0] == StateSet::full(3));
}

TEST_CASE("serial and parallel partition kernels agree") {
    KeyGenParams kg;
    kg.state_count = 6;
    kg.word_length = 8;
    kg.seed = 4;
    KeyPair kp = generate_keypair(kg);
    EncryptionParams params;
    params.seed = 9;
    params.noise_min = 1;
    params.noise_max = 2;
    Ciphertext c = encrypt_basic(kp.public_key, bits_from_string("1100101"), params);

    PartitionStats s1, s2;
    Partition serial =
        compute_partition(c.automaton, kp.private_key, Exec::Serial, &s1);
    Partition parallel =
        compute_partition(c.automaton, kp.private_key, Exec::Parallel, &s2);
    CHECK(serial.class_of == parallel.class_of);
    CHECK(serial.landing == parallel.landing);
    CHECK(s1.letter_ops == s2.letter_ops);
    CHECK(s1.letter_ops ==
          std::uint64_t(c.automaton.state_count()) * kp.private_key.size());
}

TEST_CASE("plaintext reconstruction from a hand-built quotient") {
    // three singleton classes joined 0 -0-> 1 -1-> 2
    Pfa tiny(3, LetterSet::all());
    tiny.set(0, Letter::Bit0, 1);
    tiny.set(1, Letter::Bit1, 2);
    Partition part;
    part.classes = {fixtures::make_set(3, {0}), fixtures::make_set(3, {1}),
                    fixtures::make_set(3, {2})};
    part.landing = {0, 1, 2};
    part.class_of = {0, 1, 2};
    CHECK(bits_to_string(reconstruct_plaintext(tiny, part)) == "01");

    SUBCASE("a branching quotient is malformed") {
        Pfa branch = tiny;
        branch.set(0, Letter::Bit1, 2);
        CHECK_THROWS_AS(reconstruct_plaintext(branch, part), DecryptError);
    }
    SUBCASE("a duplicate class pair is malformed") {
        Pfa dup = tiny;
        dup.set(2, Letter::Bit0, 0);  // 2 -> 0 closes a cycle
        CHECK_THROWS_AS(reconstruct_plaintext(dup, part), DecryptError);
    }
    SUBCASE("single class reads the empty word") {
        Pfa lone(2, LetterSet::all());
        Partition whole;
        whole.classes = {StateSet::full(2)};
        whole.landing = {0};
        whole.class_of = {0, 0};
        CHECK(reconstruct_plaintext(lone, whole).empty());
    }
}

TEST_CASE("wrong words fail loudly, never emit bits") {
    EncryptionParams params;
    params.seed = 37;
    Ciphertext c = encrypt_basic(t1(), bits_from_string("01"), params);
    CHECK_THROWS_AS(decrypt(c.automaton, word_from_string("a")), DecryptError);
    // hand-built words with bit letters are refused outright
    CHECK_THROWS_AS(decrypt(c.automaton, Word{Letter::A, Letter::Bit0}),
                    DecryptError);
}

TEST_CASE("decrypt inverts encrypt") {
    Rng rng(1234);
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        KeyGenParams kg;
        kg.state_count = 3 + int(seed % 8);
        kg.word_length = 2 + int(seed % 9);
        kg.seed = seed * 7 + 1;
        KeyPair kp = generate_keypair(kg);

        Bits u;
        for (int i = 0; i < int(rng.below(40)); ++i)
            u.push_back(std::uint8_t(rng.coin()));

        EncryptionParams params;
        params.seed = seed;
        params.noise_min = 0;
        params.noise_max = 3;
        if (seed % 2 == 1) {
            params.extended = true;
            params.cluster_count = 1 + int(seed % 3);
            params.cluster_size_min = 2;
            params.cluster_size_max = 5;
            params.added_min = 0;
            params.added_max = 2;
        }
        Ciphertext c = encrypt(kp.public_key, u, params);
        CHECK(decrypt(c.automaton, kp.private_key) == u);
    }
}

TEST_CASE("any carefully synchronizing word decrypts") {
    KeyGenParams kg;
    kg.state_count = 6;
    kg.word_length = 7;
    kg.seed = 52;
    KeyPair kp = generate_keypair(kg);
    Bits u = bits_from_string("10011");
    EncryptionParams params;
    params.seed = 3;
    Ciphertext c = encrypt_basic(kp.public_key, u, params);

    // the BFS-shortest word and an a-padded variant of the private key
    auto found = shortest_careful_sync_word(kp.public_key, 100'000);
    REQUIRE(found.status == SyncStatus::Found);
    Word padded = kp.private_key;
    padded.push_back(Letter::A);
    REQUIRE(is_careful_sync_word(kp.public_key, padded).has_value());

    CHECK(decrypt(c.automaton, found.word) == u);
    CHECK(decrypt(c.automaton, padded) == u);
}

TEST_CASE("partition equals the trace partition") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        KeyGenParams kg;
        kg.state_count = 4 + int(seed % 5);
        kg.word_length = 4 + int(seed % 5);
        kg.seed = seed + 100;
        KeyPair kp = generate_keypair(kg);
        Bits u = bits_from_string(seed % 2 ? "010" : "1");

        EncryptionParams params;
        params.seed = seed;
        params.extended = true;
        params.cluster_count = 2;
        params.cluster_size_min = 2;
        params.cluster_size_max = 4;
        params.added_min = 1;
        params.added_max = 2;
        Ciphertext c = encrypt_extended(kp.public_key, u, params);

        Partition part = compute_partition(c.automaton, kp.private_key);
        CHECK(partition_matches_trace(part, c.trace));
    }
}

TEST_CASE("structure analysis recovers the trace split") {
    Word w = word_from_string("ab");

    SUBCASE("basic ciphertexts have no extras") {
        EncryptionParams params;
        params.seed = 8;
        Ciphertext c = encrypt_basic(t1(), bits_from_string("10"), params);
        StructureReport report = analyze_structure(c.automaton, w, t1());
        REQUIRE(report.key_states.size() == 3);
        Partition part = compute_partition(c.automaton, w);
        for (int cls = 0; cls < 3; ++cls) {
            CHECK(report.added_states[std::size_t(cls)].empty());
            CHECK(report.cluster_states[std::size_t(cls)].empty());
            CHECK(report.key_states[std::size_t(cls)] ==
                  part.classes[std::size_t(cls)]);
        }
    }
    SUBCASE("extended ciphertexts split into copy, added, cluster") {
        EncryptionParams params;
        params.seed = 15;
        params.extended = true;
        params.cluster_count = 1;
        params.cluster_size_min = 2;
        params.cluster_size_max = 3;
        params.added_min = 1;
        params.added_max = 1;
        Ciphertext c = encrypt_extended(t1(), bits_from_string("0"), params);
        StructureReport report = analyze_structure(c.automaton, w, t1());
        Partition part = compute_partition(c.automaton, w);

        // align trace classes with partition classes via the landing states
        for (int cls = 0; cls < part.size(); ++cls) {
            int trace_cls =
                c.trace.copy_of[std::size_t(part.landing[std::size_t(cls)])];
            CHECK(report.key_states[std::size_t(cls)] ==
                  c.trace.key_states[std::size_t(trace_cls)]);
            CHECK(report.added_states[std::size_t(cls)] ==
                  c.trace.added_states[std::size_t(trace_cls)]);
            CHECK(report.cluster_states[std::size_t(cls)] ==
                  c.trace.cluster_states[std::size_t(trace_cls)]);
        }
    }
}
