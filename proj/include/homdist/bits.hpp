#pragma once

#include <cstdint>
#include <cstddef>
#include <vector>

namespace homdist {

// Fixed-width bit vector, sized at construction. Used for ideals, element
// subsets and GF(2) rows throughout the engine.
class Bits {
public:
    Bits() = default;
    explicit Bits(int n) : n_(n), w_(words_for(n), 0) {}

    static Bits full(int n) {
        Bits b(n);
        for (auto& w : b.w_) w = ~std::uint64_t(0);
        b.trim();
        return b;
    }
    static Bits single(int n, int i) {
        Bits b(n);
        b.set(i);
        return b;
    }

    int size() const { return n_; }

    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void set(int i) { w_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }

    int count() const {
        int c = 0;
        for (auto w : w_) c += __builtin_popcountll(w);
        return c;
    }
    bool any() const {
        for (auto w : w_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    // this ⊆ o
    bool subset_of(const Bits& o) const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & ~o.w_[k]) return false;
        return true;
    }
    bool intersects(const Bits& o) const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & o.w_[k]) return true;
        return false;
    }

    Bits& operator|=(const Bits& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
        return *this;
    }
    Bits& operator&=(const Bits& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
        return *this;
    }
    Bits& operator^=(const Bits& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
        return *this;
    }
    friend Bits operator|(Bits a, const Bits& b) { return a |= b; }
    friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
    friend Bits operator^(Bits a, const Bits& b) { return a ^= b; }

    // this \ o
    Bits minus(const Bits& o) const {
        Bits r = *this;
        for (std::size_t k = 0; k < w_.size(); ++k) r.w_[k] &= ~o.w_[k];
        return r;
    }

    bool operator==(const Bits& o) const = default;

    // deterministic total order (membership of low-index elements first)
    bool operator<(const Bits& o) const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k] != o.w_[k]) return w_[k] < o.w_[k];
        return false;
    }

    template <typename Fn>
    void for_each_set(Fn&& fn) const {
        for (std::size_t k = 0; k < w_.size(); ++k) {
            std::uint64_t w = w_[k];
            while (w) {
                int b = __builtin_ctzll(w);
                fn(int(k << 6) + b);
                w &= w - 1;
            }
        }
    }
    std::vector<int> to_indices() const {
        std::vector<int> out;
        out.reserve(count());
        for_each_set([&](int i) { out.push_back(i); });
        return out;
    }

    std::size_t hash() const {
        std::size_t h = 1469598103934665603ull;
        for (auto w : w_) {
            h ^= w;
            h *= 1099511628211ull;
        }
        return h;
    }

private:
    static std::size_t words_for(int n) { return std::size_t(n + 63) / 64; }
    void trim() {
        if (n_ & 63) w_.back() &= (~std::uint64_t(0)) >> (64 - (n_ & 63));
        if (n_ == 0 && !w_.empty()) w_.back() = 0;
    }

    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

struct BitsHash {
    std::size_t operator()(const Bits& b) const { return b.hash(); }
};

}  // namespace homdist
