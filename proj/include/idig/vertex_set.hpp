#ifndef IDIG_VERTEX_SET_HPP
#define IDIG_VERTEX_SET_HPP

#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace idig {

// Dense bitset over vertex ids 0..n-1. All bulk operations are O(n/64).
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int n) : n_(n), w_(words_for(n), 0) {}
    VertexSet(int n, std::initializer_list<int> vs) : VertexSet(n) {
        for (int v : vs) insert(v);
    }

    static VertexSet full(int n) {
        VertexSet s(n);
        for (std::size_t i = 0; i < s.w_.size(); ++i) s.w_[i] = ~0ull;
        s.trim();
        return s;
    }

    static VertexSet from_mask(int n, std::uint64_t mask) {
        assert(n <= 64);
        VertexSet s(n);
        if (!s.w_.empty()) s.w_[0] = mask;
        s.trim();
        return s;
    }

    int universe() const { return n_; }

    bool contains(int v) const {
        assert(v >= 0 && v < n_);
        return (w_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1ull;
    }
    void insert(int v) {
        assert(v >= 0 && v < n_);
        w_[static_cast<std::size_t>(v) >> 6] |= 1ull << (v & 63);
    }
    void erase(int v) {
        assert(v >= 0 && v < n_);
        w_[static_cast<std::size_t>(v) >> 6] &= ~(1ull << (v & 63));
    }

    int size() const {
        int c = 0;
        for (std::uint64_t w : w_) c += std::popcount(w);
        return c;
    }
    bool empty() const {
        for (std::uint64_t w : w_)
            if (w) return false;
        return true;
    }

    VertexSet& operator|=(const VertexSet& o) {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    VertexSet& operator-=(const VertexSet& o) {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    VertexSet complement() const {
        VertexSet s(n_);
        for (std::size_t i = 0; i < w_.size(); ++i) s.w_[i] = ~w_[i];
        s.trim();
        return s;
    }

    bool intersects(const VertexSet& o) const {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }
    bool subset_of(const VertexSet& o) const {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    bool operator==(const VertexSet&) const = default;

    // n must fit one word
    std::uint64_t mask() const {
        assert(n_ <= 64);
        return w_.empty() ? 0ull : w_[0];
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (int v = 0; v < n_; ++v)
            if (contains(v)) out.push_back(v);
        return out;
    }

    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for (int v : to_vector()) {
            if (!first) s += ",";
            s += std::to_string(v);
            first = false;
        }
        return s + "}";
    }

    // Order used by the oracle: the set containing the smallest
    // differing vertex id sorts first.
    static bool lex_less(const VertexSet& a, const VertexSet& b) {
        assert(a.n_ == b.n_);
        for (std::size_t i = 0; i < a.w_.size(); ++i) {
            std::uint64_t x = a.w_[i] ^ b.w_[i];
            if (x) {
                std::uint64_t low = x & (~x + 1);
                return (a.w_[i] & low) != 0;
            }
        }
        return false;
    }

private:
    static std::size_t words_for(int n) { return (static_cast<std::size_t>(n) + 63) / 64; }

    void trim() {
        if (n_ % 64 != 0 && !w_.empty())
            w_.back() &= (1ull << (n_ % 64)) - 1;
    }

    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

} // namespace idig

#endif
