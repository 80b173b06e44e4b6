// rng.hpp -- seeded deterministic randomness
#ifndef PFA_RNG_HPP
#define PFA_RNG_HPP

#include <cassert>
#include <cstdint>
#include <random>
#include <vector>

namespace pfa {

// Thin wrapper over mt19937_64. std::uniform_int_distribution is
// implementation-defined, so bounded draws go through below(); outputs are
// then identical across platforms for a given seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    // Uniform-ish draw in [0, n). Modulo bias is irrelevant at the sizes this
    // toolkit draws (n far below 2^32).
    std::uint64_t below(std::uint64_t n) {
        assert(n > 0);
        return gen_() % n;
    }

    // Inclusive range; lo == hi consumes no randomness.
    int range(int lo, int hi) {
        assert(lo <= hi);
        if (lo == hi) return lo;
        return lo + int(below(std::uint64_t(hi - lo) + 1));
    }

    bool coin() { return next() & 1ull; }

    template <class T>
    const T& pick(const std::vector<T>& v) {
        assert(!v.empty());
        return v[std::size_t(below(v.size()))];
    }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[std::size_t(below(i))]);
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace pfa

#endif
