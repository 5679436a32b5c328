#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

namespace galmine {

// Fixed-width dynamic bitset. The unit of all set computations here:
// extents, intents and closures are Bitsets, and derivations reduce to
// word-wise AND loops.
class Bitset {
public:
    static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

    Bitset() = default;

    explicit Bitset(std::size_t nbits)
        : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    static Bitset full(std::size_t nbits) {
        Bitset b(nbits);
        for (auto& w : b.words_) w = ~std::uint64_t{0};
        b.trim();
        return b;
    }

    std::size_t size() const { return nbits_; }

    bool test(std::size_t i) const {
        assert(i < nbits_);
        return (words_[i >> 6] >> (i & 63)) & 1;
    }

    void set(std::size_t i) {
        assert(i < nbits_);
        words_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }

    void reset(std::size_t i) {
        assert(i < nbits_);
        words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }

    std::size_t count() const {
        std::size_t n = 0;
        for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
        return n;
    }

    bool none() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    bool any() const { return !none(); }

    // true iff *this is a subset of other
    bool is_subset_of(const Bitset& other) const {
        assert(nbits_ == other.nbits_);
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & ~other.words_[k]) return false;
        return true;
    }

    bool intersects(const Bitset& other) const {
        assert(nbits_ == other.nbits_);
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & other.words_[k]) return true;
        return false;
    }

    Bitset& operator&=(const Bitset& other) {
        assert(nbits_ == other.nbits_);
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= other.words_[k];
        return *this;
    }

    Bitset& operator|=(const Bitset& other) {
        assert(nbits_ == other.nbits_);
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= other.words_[k];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

    // set difference: *this \ other
    Bitset minus(const Bitset& other) const {
        assert(nbits_ == other.nbits_);
        Bitset r(*this);
        for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] &= ~other.words_[k];
        return r;
    }

    bool operator==(const Bitset& other) const = default;

    std::size_t find_first() const { return find_next(0); }

    // index of the first set bit at position >= from, or npos
    std::size_t find_next(std::size_t from) const {
        if (from >= nbits_) return npos;
        std::size_t k = from >> 6;
        std::uint64_t w = words_[k] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (w) return (k << 6) + static_cast<std::size_t>(std::countr_zero(w));
            if (++k == words_.size()) return npos;
            w = words_[k];
        }
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t i = find_first(); i != npos; i = find_next(i + 1)) f(i);
    }

    std::vector<std::size_t> to_indices() const {
        std::vector<std::size_t> out;
        out.reserve(count());
        for_each([&](std::size_t i) { out.push_back(i); });
        return out;
    }

    // Orders sets by their smallest differing element: A < B iff
    // min(A xor B) is in B. The total order behind NextClosure and all
    // canonical outputs.
    bool lectic_less(const Bitset& other) const {
        assert(nbits_ == other.nbits_);
        for (std::size_t k = 0; k < words_.size(); ++k) {
            std::uint64_t diff = words_[k] ^ other.words_[k];
            if (diff) {
                std::uint64_t low = diff & (~diff + 1);
                return (other.words_[k] & low) != 0;
            }
        }
        return false;
    }

    // largest set bit index, or npos if empty
    std::size_t max_bit() const {
        for (std::size_t k = words_.size(); k-- > 0;) {
            if (words_[k])
                return (k << 6) + 63 - static_cast<std::size_t>(std::countl_zero(words_[k]));
        }
        return npos;
    }

    std::size_t hash() const {
        std::size_t h = nbits_;
        for (auto w : words_) h = h * 0x9e3779b97f4a7c15ULL + static_cast<std::size_t>(w);
        return h;
    }

private:
    void trim() {
        if (nbits_ & 63) words_.back() &= (~std::uint64_t{0} >> (64 - (nbits_ & 63)));
    }

    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

struct BitsetHash {
    std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace galmine
