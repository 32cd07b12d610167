#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace wagon {

/// Set of small non-negative integers, packed 64 per word.
/// Capacity is fixed at construction; all arguments must be < capacity.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int capacity) : words_((capacity + 63) / 64, 0) {}

    void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    int count() const
    {
        int c = 0;
        for (auto w : words_)
            c += std::popcount(w);
        return c;
    }

    bool any() const
    {
        for (auto w : words_)
            if (w)
                return true;
        return false;
    }

    bool none() const { return !any(); }

    bool intersects(const Bitset& o) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i])
                return true;
        return false;
    }

    Bitset& operator&=(const Bitset& o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= o.words_[i];
        return *this;
    }

    Bitset& operator|=(const Bitset& o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] |= o.words_[i];
        return *this;
    }

    /// Set difference: removes every element of o.
    Bitset& subtract(const Bitset& o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= ~o.words_[i];
        return *this;
    }

    /// Least element, or -1 when empty.
    int find_first() const
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i])
                return static_cast<int>(i * 64 + std::countr_zero(words_[i]));
        return -1;
    }

    /// Least element strictly greater than i, or -1.
    int find_next(int i) const
    {
        ++i;
        std::size_t w = static_cast<std::size_t>(i) >> 6;
        if (w >= words_.size())
            return -1;
        std::uint64_t masked = words_[w] & (~std::uint64_t{0} << (i & 63));
        if (masked)
            return static_cast<int>(w * 64 + std::countr_zero(masked));
        for (++w; w < words_.size(); ++w)
            if (words_[w])
                return static_cast<int>(w * 64 + std::countr_zero(words_[w]));
        return -1;
    }

    /// Calls f(i) for every element in ascending order.
    template <typename F> void for_each(F&& f) const
    {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                int i = static_cast<int>(w * 64 + std::countr_zero(bits));
                f(i);
                bits &= bits - 1;
            }
        }
    }

    std::vector<int> to_vector() const
    {
        std::vector<int> out;
        for_each([&](int i) { out.push_back(i); });
        return out;
    }

    bool operator==(const Bitset&) const = default;

private:
    std::vector<std::uint64_t> words_;
};

} // namespace wagon
