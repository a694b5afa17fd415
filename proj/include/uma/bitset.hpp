#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "uma/kernels.hpp"
#include "uma/literal.hpp"

namespace uma {

// Fixed-width bit vector. The Index parameter keeps literal sets and vertex
// sets apart at the type level; storage and kernels are shared.
template <typename Index>
class BitSet {
public:
    BitSet() = default;
    explicit BitSet(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    std::size_t size() const { return size_; }
    std::size_t word_count() const { return words_.size(); }
    const std::uint64_t* words() const { return words_.data(); }
    std::uint64_t* words() { return words_.data(); }

    bool test(Index i) const {
        std::size_t k = index_of(i);
        return (words_[k >> 6] >> (k & 63)) & 1u;
    }
    void set(Index i) {
        std::size_t k = index_of(i);
        words_[k >> 6] |= std::uint64_t{1} << (k & 63);
    }
    void reset(Index i) {
        std::size_t k = index_of(i);
        words_[k >> 6] &= ~(std::uint64_t{1} << (k & 63));
    }
    void assign(Index i, bool value) { value ? set(i) : reset(i); }
    bool contains(Index i) const { return index_of(i) < size_ && test(i); }

    void clear() { std::fill(words_.begin(), words_.end(), 0); }
    void fill() {
        std::fill(words_.begin(), words_.end(), ~std::uint64_t{0});
        trim();
    }

    std::size_t count() const { return simd::kernels().popcount(words_.data(), words_.size()); }
    bool none() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }
    bool any() const { return !none(); }
    bool empty() const { return none(); }

    bool intersects(const BitSet& other) const {
        check(other);
        return simd::kernels().intersects(words_.data(), other.words_.data(), words_.size());
    }
    bool is_subset_of(const BitSet& other) const {
        check(other);
        return simd::kernels().subset_of(words_.data(), other.words_.data(), words_.size());
    }

    BitSet& operator|=(const BitSet& other) {
        check(other);
        simd::kernels().or_into(words_.data(), other.words_.data(), words_.size());
        return *this;
    }
    BitSet& operator&=(const BitSet& other) {
        check(other);
        simd::kernels().and_into(words_.data(), other.words_.data(), words_.size());
        return *this;
    }
    // set difference
    BitSet& operator-=(const BitSet& other) {
        check(other);
        simd::kernels().andnot_into(words_.data(), other.words_.data(), words_.size());
        return *this;
    }

    friend BitSet operator|(BitSet a, const BitSet& b) { return a |= b; }
    friend BitSet operator&(BitSet a, const BitSet& b) { return a &= b; }
    friend BitSet operator-(BitSet a, const BitSet& b) { return a -= b; }

    friend bool operator==(const BitSet& a, const BitSet& b) {
        return a.size_ == b.size_ && a.words_ == b.words_;
    }

    // Calls f(Index) for every member in increasing order.
    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                std::size_t k = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
                bits &= bits - 1;
                f(make_index(k));
            }
        }
    }

    std::vector<Index> members() const {
        std::vector<Index> out;
        for_each([&](Index i) { out.push_back(i); });
        return out;
    }

    std::size_t hash() const {
        std::size_t h = size_ * 0x9e3779b97f4a7c15ULL;
        for (auto w : words_) h = (h ^ w) * 0x100000001b3ULL + (h >> 29);
        return h;
    }

    static Index make_index(std::size_t k) {
        if constexpr (std::is_same_v<Index, Literal>)
            return Literal{static_cast<std::uint32_t>(k)};
        else
            return static_cast<Index>(k);
    }

private:
    void check(const BitSet& other) const {
        if (other.size_ != size_) throw std::invalid_argument("bit set width mismatch");
    }
    void trim() {
        if (size_ % 64 != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
    }

    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

using LiteralSet = BitSet<Literal>;
using VertexSet = BitSet<std::size_t>;

struct BitSetHash {
    template <typename I>
    std::size_t operator()(const BitSet<I>& s) const {
        return s.hash();
    }
};

// S* : the image of S under complementation.
inline LiteralSet starred(const LiteralSet& s) {
    LiteralSet out(s.size());
    simd::kernels().swap_pairs(out.words(), s.words(), s.word_count());
    return out;
}

}  // namespace uma
