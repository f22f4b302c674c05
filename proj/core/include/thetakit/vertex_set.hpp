#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace thetakit {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t n) { return (n + kWordBits - 1) / kWordBits; }

// Dynamic bitmask over the vertex range 0..size-1.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t size) : size_(size), words_(words_for(size), 0) {}
    VertexSet(std::size_t size, std::span<const Word> words) : size_(size), words_(words.begin(), words.end()) {}

    static VertexSet full(std::size_t size) {
        VertexSet s(size);
        for (auto& w : s.words_) w = ~Word{0};
        s.trim();
        return s;
    }

    std::size_t size() const { return size_; }
    std::span<const Word> words() const { return words_; }
    std::span<Word> words() { return words_; }

    bool test(std::size_t v) const { return (words_[v / kWordBits] >> (v % kWordBits)) & 1U; }
    void set(std::size_t v) { words_[v / kWordBits] |= Word{1} << (v % kWordBits); }
    void reset(std::size_t v) { words_[v / kWordBits] &= ~(Word{1} << (v % kWordBits)); }
    void flip(std::size_t v) { words_[v / kWordBits] ^= Word{1} << (v % kWordBits); }

    std::size_t count() const {
        std::size_t c = 0;
        for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool empty() const {
        for (Word w : words_)
            if (w) return false;
        return true;
    }

    // First member >= from, or size() when none.
    std::size_t next(std::size_t from) const {
        if (from >= size_) return size_;
        std::size_t wi = from / kWordBits;
        Word w = words_[wi] & (~Word{0} << (from % kWordBits));
        while (true) {
            if (w) return wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w));
            if (++wi == words_.size()) return size_;
            w = words_[wi];
        }
    }
    std::size_t first() const { return next(0); }

    std::vector<std::size_t> members() const {
        std::vector<std::size_t> out;
        for (std::size_t v = first(); v < size_; v = next(v + 1)) out.push_back(v);
        return out;
    }

    VertexSet& operator&=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    VertexSet& operator|=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    VertexSet& operator^=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
        return *this;
    }
    // Remove every member of o.
    VertexSet& subtract(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }
    VertexSet complement() const {
        VertexSet s(size_);
        for (std::size_t i = 0; i < words_.size(); ++i) s.words_[i] = ~words_[i];
        s.trim();
        return s;
    }

    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    void trim() {
        if (size_ % kWordBits && !words_.empty()) words_.back() &= (Word{1} << (size_ % kWordBits)) - 1;
    }

    std::size_t size_ = 0;
    std::vector<Word> words_;
};

inline std::size_t intersection_count(std::span<const Word> a, std::span<const Word> b) {
    std::size_t c = 0;
    for (std::size_t i = 0; i < a.size(); ++i) c += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
    return c;
}

}  // namespace thetakit
