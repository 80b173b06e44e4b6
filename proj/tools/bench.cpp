// bench.cpp -- serial vs OpenMP kernel comparison
#include <chrono>
#include <cstdio>
#include <vector>

#include "pfa/decrypt.hpp"
#include "pfa/encrypt.hpp"
#include "pfa/keygen.hpp"
#include "pfa/power_search.hpp"
#include "pfa/rng.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace pfa;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - t0)
        .count();
}

template <class F>
double time_best_of(int reps, F&& f) {
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        auto t0 = std::chrono::steady_clock::now();
        f();
        best = std::min(best, ms_since(t0));
    }
    return best;
}

int bench_partition() {
    KeyGenParams kp;
    kp.state_count = 10;
    kp.word_length = 12;
    kp.seed = 2024;
    KeyPair key = generate_keypair(kp);

    Rng rng(7);
    Bits u;
    for (int i = 0; i < 600; ++i) u.push_back(std::uint8_t(rng.coin()));
    EncryptionParams ep;
    ep.seed = 99;
    ep.noise_min = 1;
    ep.noise_max = 3;
    Ciphertext c = encrypt_basic(key.public_key, u, ep);

    // lengthen the word with a-steps: still a decrypting word, more columns
    Word w = key.private_key;
    while (w.size() < 512) w.push_back(Letter::A);

    Partition serial, parallel;
    double t_serial = time_best_of(5, [&] {
        serial = compute_partition(c.automaton, w, Exec::Serial);
    });
    double t_parallel = time_best_of(5, [&] {
        parallel = compute_partition(c.automaton, w, Exec::Parallel);
    });
    bool equal = serial.class_of == parallel.class_of;

    std::printf("partition  |P|=%d |w|=%zu  serial %.2f ms  parallel %.2f ms  speedup %.2fx  equal=%s\n",
                c.automaton.state_count(), w.size(), t_serial, t_parallel,
                t_serial / t_parallel, equal ? "yes" : "NO");
    return equal ? 0 : 1;
}

int bench_power_search() {
    // the cycle-plus-one-merge automaton: its shortest synchronizing word is
    // quadratic and the breadth-first frontier grows large before it is found
    const int n = 18;
    std::uint64_t budget = 2'000'000;
    Pfa a(n, LetterSet::sigma());
    for (int q = 0; q < n; ++q) {
        a.set(q, Letter::A, (q + 1) % n);
        a.set(q, Letter::B, q == 0 ? 1 : q);
    }

    SyncSearchResult serial, parallel;
    double t_serial = time_best_of(3, [&] {
        serial = shortest_careful_sync_word(a, budget, Exec::Serial);
    });
    double t_parallel = time_best_of(3, [&] {
        parallel = shortest_careful_sync_word(a, budget, Exec::Parallel);
    });
    bool equal =
        serial.status == parallel.status && serial.word == parallel.word;

    std::printf("power-bfs  n=%d visited=%llu  serial %.2f ms  parallel %.2f ms  speedup %.2fx  equal=%s\n",
                n, (unsigned long long)serial.subsets_visited, t_serial,
                t_parallel, t_serial / t_parallel, equal ? "yes" : "NO");
    return equal ? 0 : 1;
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
    std::printf("openmp: not enabled\n");
#endif
    int rc = bench_partition();
    rc |= bench_power_search();
    return rc;
}
