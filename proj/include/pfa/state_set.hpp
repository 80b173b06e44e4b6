// state_set.hpp -- bitset over the states of one automaton
#ifndef PFA_STATE_SET_HPP
#define PFA_STATE_SET_HPP

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace pfa {

// Subset of [0, universe). Iteration order is ascending state index, which is
// the canonical order used by every consumer. Equality requires equal
// universes: sets over different automata never compare equal.
class StateSet {
public:
    StateSet() = default;
    explicit StateSet(int universe)
        : universe_(universe), bits_((universe + 63) / 64, 0) {
        assert(universe >= 0);
    }

    static StateSet full(int universe) {
        StateSet s(universe);
        for (std::size_t i = 0; i < s.bits_.size(); ++i) s.bits_[i] = ~0ull;
        int spare = int(s.bits_.size()) * 64 - universe;
        if (spare > 0 && !s.bits_.empty()) s.bits_.back() >>= spare;
        return s;
    }

    int universe() const { return universe_; }

    bool contains(int q) const {
        assert(q >= 0 && q < universe_);
        return (bits_[std::size_t(q) >> 6] >> (q & 63)) & 1ull;
    }
    void add(int q) {
        assert(q >= 0 && q < universe_);
        bits_[std::size_t(q) >> 6] |= 1ull << (q & 63);
    }
    void remove(int q) {
        assert(q >= 0 && q < universe_);
        bits_[std::size_t(q) >> 6] &= ~(1ull << (q & 63));
    }

    int count() const {
        int c = 0;
        for (auto b : bits_) c += std::popcount(b);
        return c;
    }
    bool empty() const {
        for (auto b : bits_)
            if (b) return false;
        return true;
    }
    bool is_singleton() const { return count() == 1; }

    // Lowest member, or -1 when empty.
    int first() const {
        for (std::size_t i = 0; i < bits_.size(); ++i)
            if (bits_[i]) return int(i * 64) + std::countr_zero(bits_[i]);
        return -1;
    }

    bool subset_of(const StateSet& o) const {
        assert(universe_ == o.universe_);
        for (std::size_t i = 0; i < bits_.size(); ++i)
            if (bits_[i] & ~o.bits_[i]) return false;
        return true;
    }

    StateSet& operator|=(const StateSet& o) {
        assert(universe_ == o.universe_);
        for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] |= o.bits_[i];
        return *this;
    }
    StateSet& operator&=(const StateSet& o) {
        assert(universe_ == o.universe_);
        for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] &= o.bits_[i];
        return *this;
    }

    bool intersects(const StateSet& o) const {
        assert(universe_ == o.universe_);
        for (std::size_t i = 0; i < bits_.size(); ++i)
            if (bits_[i] & o.bits_[i]) return true;
        return false;
    }

    bool operator==(const StateSet&) const = default;

    // Ascending member visit.
    template <class F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < bits_.size(); ++i) {
            std::uint64_t b = bits_[i];
            while (b) {
                int q = int(i * 64) + std::countr_zero(b);
                f(q);
                b &= b - 1;
            }
        }
    }

    std::vector<int> members() const {
        std::vector<int> out;
        out.reserve(std::size_t(count()));
        for_each([&](int q) { out.push_back(q); });
        return out;
    }

    std::size_t hash() const {
        // FNV-1a over the blocks; universe folded in so sets of different
        // automata do not alias.
        std::uint64_t h = 1469598103934665603ull;
        auto mix = [&](std::uint64_t v) {
            h ^= v;
            h *= 1099511628211ull;
        };
        mix(std::uint64_t(universe_));
        for (auto b : bits_) mix(b);
        return std::size_t(h);
    }

private:
    int universe_ = 0;
    std::vector<std::uint64_t> bits_;
};

struct StateSetHash {
    std::size_t operator()(const StateSet& s) const { return s.hash(); }
};

}  // namespace pfa

#endif
