#pragma once
// Dense bit-indexed set over a fixed vertex universe 0..n-1.

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "propc/errors.hpp"

namespace propc {

class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(int universe) {
        if (universe < 0) throw argument_error("universe size must be nonnegative");
        n_ = universe;
        words_.assign((static_cast<std::size_t>(universe) + 63) / 64, 0);
    }

    static VertexSet of(int universe, std::initializer_list<int> members) {
        VertexSet s(universe);
        for (int v : members) s.insert(v);
        return s;
    }

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (std::size_t i = 0; i < s.words_.size(); ++i) s.words_[i] = ~0ULL;
        s.clear_tail();
        return s;
    }

    int universe() const { return n_; }

    bool contains(int v) const {
        bounds(v);
        return (words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1ULL;
    }

    void insert(int v) {
        bounds(v);
        words_[static_cast<std::size_t>(v) >> 6] |= 1ULL << (v & 63);
    }

    void erase(int v) {
        bounds(v);
        words_[static_cast<std::size_t>(v) >> 6] &= ~(1ULL << (v & 63));
    }

    int count() const {
        int c = 0;
        for (std::uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (std::uint64_t w : words_)
            if (w) return false;
        return true;
    }

    bool operator==(const VertexSet& o) const = default;

    VertexSet& operator|=(const VertexSet& o) {
        match(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    VertexSet& operator&=(const VertexSet& o) {
        match(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    // set difference
    VertexSet& operator-=(const VertexSet& o) {
        match(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    bool is_subset_of(const VertexSet& o) const {
        match(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    bool intersects(const VertexSet& o) const {
        match(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    // smallest member, or -1 when empty
    int first() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return static_cast<int>(i * 64 + std::countr_zero(words_[i]));
        return -1;
    }

    // smallest member strictly greater than v, or -1
    int next_after(int v) const {
        for (int u = v + 1; u < n_; ++u) {
            std::uint64_t w = words_[static_cast<std::size_t>(u) >> 6] >> (u & 63);
            if (w == 0) {
                u |= 63;  // skip to the end of this word
                continue;
            }
            return u + std::countr_zero(w);
        }
        return -1;
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                f(static_cast<int>(i * 64 + std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

private:
    void bounds(int v) const {
        if (v < 0 || v >= n_) throw argument_error("vertex id out of range for this set");
    }
    void match(const VertexSet& o) const {
        if (n_ != o.n_) throw argument_error("vertex sets range over different universes");
    }
    void clear_tail() {
        if (n_ % 64 != 0 && !words_.empty()) words_.back() &= (1ULL << (n_ % 64)) - 1;
    }

    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace propc
