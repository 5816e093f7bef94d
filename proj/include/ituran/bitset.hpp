#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ituran {

// Dynamic fixed-size bitset over 64-bit words. Vertex sets and adjacency
// rows are all instances of this; the searches in this library are dominated
// by whole-row intersections, so everything routes through the word ops.
class Bitset {
public:
    Bitset() = default;

    explicit Bitset(int size) : size_(size), words_((size + 63) / 64, 0) {
        if (size < 0)
            throw std::invalid_argument("Bitset: negative size");
    }

    int size() const { return size_; }

    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    void set(int i) { words_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }

    void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    void set_all() {
        for (auto & w : words_)
            w = ~std::uint64_t{0};
        mask_tail();
    }

    void clear() {
        for (auto & w : words_)
            w = 0;
    }

    int count() const {
        int c = 0;
        for (auto w : words_)
            c += __builtin_popcountll(w);
        return c;
    }

    bool any() const {
        for (auto w : words_)
            if (w)
                return true;
        return false;
    }

    bool none() const { return ! any(); }

    Bitset & operator&=(const Bitset & o) {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= o.words_[i];
        return *this;
    }

    Bitset & operator|=(const Bitset & o) {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] |= o.words_[i];
        return *this;
    }

    // Removes every bit that is set in o.
    Bitset & operator-=(const Bitset & o) {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= ~o.words_[i];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset & b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset & b) { return a |= b; }
    friend Bitset operator-(Bitset a, const Bitset & b) { return a -= b; }

    bool operator==(const Bitset & o) const = default;

    Bitset complement() const {
        Bitset r(*this);
        for (auto & w : r.words_)
            w = ~w;
        r.mask_tail();
        return r;
    }

    bool is_subset_of(const Bitset & o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i])
                return false;
        return true;
    }

    bool intersects(const Bitset & o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i])
                return true;
        return false;
    }

    int intersection_count(const Bitset & o) const {
        int c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += __builtin_popcountll(words_[i] & o.words_[i]);
        return c;
    }

    // First set bit at position >= from, or -1.
    int next(int from = 0) const {
        if (from >= size_)
            return -1;
        int wi = from >> 6;
        std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (w)
                return (wi << 6) + __builtin_ctzll(w);
            if (std::size_t(++wi) >= words_.size())
                return -1;
            w = words_[wi];
        }
    }

    int first() const { return next(0); }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for (int v = first(); v >= 0; v = next(v + 1))
            out.push_back(v);
        return out;
    }

    std::string to_string() const {
        std::string s(size_, '0');
        for (int v = first(); v >= 0; v = next(v + 1))
            s[v] = '1';
        return s;
    }

private:
    void mask_tail() {
        if (size_ & 63)
            words_.back() &= (~std::uint64_t{0} >> (64 - (size_ & 63)));
    }

    int size_ = 0;
    std::vector<std::uint64_t> words_;
};

}
