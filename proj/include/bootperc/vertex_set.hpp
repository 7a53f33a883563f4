#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace bootperc {

/**
 * Dense set of vertex indices over a fixed universe [0, universe).
 *
 * One bit per vertex. Grids up to 256 vertices live entirely inline, which
 * keeps the search from touching the heap on every node.
 *
 * Bits at positions >= universe are kept clear by every mutating operation,
 * so word-wise comparisons and popcounts never need masking.
 */
class VertexSet
{
public:
    using Word = std::uint64_t;
    static constexpr int bits_per_word = 64;

    VertexSet() = default;

    explicit VertexSet(int universe)
        : _universe(universe), _words(word_count(universe), Word{0})
    {
    }

    static auto full(int universe) -> VertexSet
    {
        VertexSet s(universe);
        for (auto & w : s._words)
            w = ~Word{0};
        s.trim();
        return s;
    }

    auto universe() const -> int { return _universe; }

    auto insert(int i) -> void { _words[i / bits_per_word] |= Word{1} << (i % bits_per_word); }

    auto erase(int i) -> void { _words[i / bits_per_word] &= ~(Word{1} << (i % bits_per_word)); }

    auto contains(int i) const -> bool { return (_words[i / bits_per_word] >> (i % bits_per_word)) & 1U; }

    auto size() const -> int
    {
        int n = 0;
        for (auto w : _words)
            n += std::popcount(w);
        return n;
    }

    auto empty() const -> bool
    {
        for (auto w : _words)
            if (w)
                return false;
        return true;
    }

    /// Smallest member, or -1 when empty.
    auto first() const -> int
    {
        for (std::size_t k = 0; k < _words.size(); ++k)
            if (_words[k])
                return static_cast<int>(k) * bits_per_word + std::countr_zero(_words[k]);
        return -1;
    }

    auto is_subset_of(const VertexSet & other) const -> bool
    {
        for (std::size_t k = 0; k < _words.size(); ++k)
            if (_words[k] & ~other._words[k])
                return false;
        return true;
    }

    auto intersects(const VertexSet & other) const -> bool
    {
        for (std::size_t k = 0; k < _words.size(); ++k)
            if (_words[k] & other._words[k])
                return true;
        return false;
    }

    auto operator|=(const VertexSet & other) -> VertexSet &
    {
        for (std::size_t k = 0; k < _words.size(); ++k)
            _words[k] |= other._words[k];
        return *this;
    }

    auto operator&=(const VertexSet & other) -> VertexSet &
    {
        for (std::size_t k = 0; k < _words.size(); ++k)
            _words[k] &= other._words[k];
        return *this;
    }

    /// Set difference.
    auto operator-=(const VertexSet & other) -> VertexSet &
    {
        for (std::size_t k = 0; k < _words.size(); ++k)
            _words[k] &= ~other._words[k];
        return *this;
    }

    friend auto operator|(VertexSet a, const VertexSet & b) -> VertexSet { return a |= b; }
    friend auto operator&(VertexSet a, const VertexSet & b) -> VertexSet { return a &= b; }
    friend auto operator-(VertexSet a, const VertexSet & b) -> VertexSet { return a -= b; }

    friend auto operator==(const VertexSet & a, const VertexSet & b) -> bool
    {
        return a._universe == b._universe && a._words == b._words;
    }

    /// Complement relative to the universe.
    auto complement() const -> VertexSet { return full(_universe) - *this; }

    /// Result bit i is this set's bit (i - k); bits shifted past the universe are dropped.
    auto shifted_up(int k) const -> VertexSet
    {
        VertexSet out(_universe);
        const int word_shift = k / bits_per_word, bit_shift = k % bits_per_word;
        const int n = static_cast<int>(_words.size());
        for (int i = n - 1; i >= word_shift; --i) {
            Word w = _words[i - word_shift] << bit_shift;
            if (bit_shift && i - word_shift - 1 >= 0)
                w |= _words[i - word_shift - 1] >> (bits_per_word - bit_shift);
            out._words[i] = w;
        }
        out.trim();
        return out;
    }

    /// Result bit i is this set's bit (i + k).
    auto shifted_down(int k) const -> VertexSet
    {
        VertexSet out(_universe);
        const int word_shift = k / bits_per_word, bit_shift = k % bits_per_word;
        const int n = static_cast<int>(_words.size());
        for (int i = 0; i + word_shift < n; ++i) {
            Word w = _words[i + word_shift] >> bit_shift;
            if (bit_shift && i + word_shift + 1 < n)
                w |= _words[i + word_shift + 1] << (bits_per_word - bit_shift);
            out._words[i] = w;
        }
        return out;
    }

    auto members() const -> std::vector<int>
    {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for_each([&](int i) { out.push_back(i); });
        return out;
    }

    template <typename F>
    auto for_each(F && f) const -> void
    {
        for (std::size_t k = 0; k < _words.size(); ++k) {
            Word w = _words[k];
            while (w) {
                f(static_cast<int>(k) * bits_per_word + std::countr_zero(w));
                w &= w - 1;
            }
        }
    }

    auto words() const -> std::span<const Word> { return {_words.data(), _words.size()}; }
    auto words() -> std::span<Word> { return {_words.data(), _words.size()}; }

    auto hash() const -> std::size_t
    {
        std::size_t h = static_cast<std::size_t>(_universe) * 0x9e3779b97f4a7c15ULL;
        for (auto w : _words)
            h = (h ^ w) * 0x100000001b3ULL + (h >> 29);
        return h;
    }

private:
    static auto word_count(int universe) -> std::size_t
    {
        return static_cast<std::size_t>((universe + bits_per_word - 1) / bits_per_word);
    }

    auto trim() -> void
    {
        if (const int tail = _universe % bits_per_word; tail && !_words.empty())
            _words.back() &= (Word{1} << tail) - 1;
    }

    int _universe = 0;
    boost::container::small_vector<Word, 4> _words;
};

struct VertexSetHash
{
    auto operator()(const VertexSet & s) const -> std::size_t { return s.hash(); }
};

} // namespace bootperc
