#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace wum {

// Fixed-length binary vector packed into 64-bit words. Supports the
// operations the clustering code leans on: popcount, overlap counts,
// and in-place AND.
class BitVector {
public:
    BitVector() = default;

    explicit BitVector(std::size_t n, bool fill = false)
        : size_(n), words_((n + 63) / 64, fill ? ~std::uint64_t{0} : 0) {
        clear_tail();
    }

    static BitVector from_string(const std::string& bits) {
        BitVector v(bits.size());
        for (std::size_t i = 0; i < bits.size(); ++i) {
            if (bits[i] == '1') {
                v.set(i);
            } else if (bits[i] != '0') {
                throw std::invalid_argument("bit string may contain only '0' and '1'");
            }
        }
        return v;
    }

    std::size_t size() const { return size_; }
    bool empty() const { return size_ == 0; }

    bool test(std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }

    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    // Number of set bits (L1 norm).
    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }

    // |a AND b|, the overlap count. Sizes must match.
    static std::size_t and_count(const BitVector& a, const BitVector& b) {
        std::size_t c = 0;
        for (std::size_t i = 0; i < a.words_.size(); ++i)
            c += static_cast<std::size_t>(std::popcount(a.words_[i] & b.words_[i]));
        return c;
    }

    // |a OR b|, used for Jaccard overlap.
    static std::size_t or_count(const BitVector& a, const BitVector& b) {
        std::size_t c = 0;
        for (std::size_t i = 0; i < a.words_.size(); ++i)
            c += static_cast<std::size_t>(std::popcount(a.words_[i] | b.words_[i]));
        return c;
    }

    BitVector& operator&=(const BitVector& other) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
        return *this;
    }

    friend BitVector operator&(BitVector a, const BitVector& b) {
        a &= b;
        return a;
    }

    bool operator==(const BitVector& other) const = default;

    std::string to_string() const {
        std::string s(size_, '0');
        for (std::size_t i = 0; i < size_; ++i)
            if (test(i)) s[i] = '1';
        return s;
    }

    // Expand to a real-valued vector (0.0 / 1.0).
    std::vector<double> to_doubles() const {
        std::vector<double> v(size_, 0.0);
        for (std::size_t i = 0; i < size_; ++i)
            if (test(i)) v[i] = 1.0;
        return v;
    }

private:
    void clear_tail() {
        const std::size_t tail = size_ & 63;
        if (tail != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << tail) - 1;
    }

    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace wum
