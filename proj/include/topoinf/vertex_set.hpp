#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace topoinf {

/**
 * Fixed-width set of vertex indices backed by 64-bit words.
 *
 * Used both as an adjacency row of a NeighborComplex and as the subset
 * selector for induced subcomplexes. Bits at positions >= width() are kept
 * clear so that word-level comparisons and popcounts stay exact.
 */
class VertexSet
{
  public:
    VertexSet() = default;
    explicit VertexSet(std::size_t width) : width_(width), words_((width + 63) / 64, 0) {}

    static VertexSet full(std::size_t width)
    {
        VertexSet s(width);
        for (auto& w : s.words_)
            w = ~std::uint64_t{0};
        s.trim();
        return s;
    }

    /// Set built from the low bits of a single word; width must be <= 64.
    static VertexSet from_bits(std::size_t width, std::uint64_t bits)
    {
        VertexSet s(width);
        if (!s.words_.empty())
            s.words_[0] = bits;
        s.trim();
        return s;
    }

    std::size_t width() const noexcept { return width_; }

    bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    std::size_t count() const noexcept
    {
        std::size_t c = 0;
        for (auto w : words_)
            c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool none() const noexcept
    {
        for (auto w : words_)
            if (w)
                return false;
        return true;
    }
    bool any() const noexcept { return !none(); }

    bool intersects(const VertexSet& other) const noexcept
    {
        for (std::size_t k = 0; k < words_.size() && k < other.words_.size(); ++k)
            if (words_[k] & other.words_[k])
                return true;
        return false;
    }

    /// Low word; meaningful only when width() <= 64.
    std::uint64_t low_word() const noexcept { return words_.empty() ? 0 : words_[0]; }

    VertexSet& operator&=(const VertexSet& o) noexcept
    {
        for (std::size_t k = 0; k < words_.size(); ++k)
            words_[k] &= k < o.words_.size() ? o.words_[k] : 0;
        return *this;
    }
    VertexSet& operator|=(const VertexSet& o) noexcept
    {
        for (std::size_t k = 0; k < words_.size() && k < o.words_.size(); ++k)
            words_[k] |= o.words_[k];
        trim();
        return *this;
    }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) noexcept { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) noexcept { return a |= b; }

    /// Complement within [0, width).
    VertexSet operator~() const
    {
        VertexSet s = *this;
        for (auto& w : s.words_)
            w = ~w;
        s.trim();
        return s;
    }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

    /// Calls f(i) for every member in ascending order.
    template <typename F>
    void for_each(F&& f) const
    {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            std::uint64_t w = words_[k];
            while (w) {
                f(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    std::vector<std::size_t> indices() const
    {
        std::vector<std::size_t> out;
        out.reserve(count());
        for_each([&](std::size_t i) { out.push_back(i); });
        return out;
    }

  private:
    void trim() noexcept
    {
        if (width_ % 64 != 0 && !words_.empty())
            words_.back() &= (std::uint64_t{1} << (width_ % 64)) - 1;
    }

    std::size_t width_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Selector of a vertex-induced subcomplex.
using SubsetMask = VertexSet;

} // namespace topoinf
