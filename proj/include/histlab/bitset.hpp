#pragma once

#include <array>
#include <bit>
#include <cstdint>

namespace histlab {

// Hard vertex cap. All adjacency rows are fixed-width bitsets so the search
// inner loops stay branch-free; every graph in scope fits comfortably.
inline constexpr int kMaxVertices = 128;

// Fixed-width set of vertex ids in [0, kMaxVertices).
class VertexSet {
public:
    static constexpr int kWords = kMaxVertices / 64;

    constexpr VertexSet() = default;

    static constexpr VertexSet single(int v) {
        VertexSet s;
        s.set(v);
        return s;
    }

    // {0, 1, ..., n-1}
    static constexpr VertexSet first_n(int n) {
        VertexSet s;
        for (int w = 0; w < kWords; ++w) {
            int lo = w * 64;
            if (n <= lo) break;
            int k = n - lo;
            s.w_[w] = (k >= 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << k) - 1);
        }
        return s;
    }

    constexpr bool test(int v) const { return (w_[v >> 6] >> (v & 63)) & 1; }
    constexpr void set(int v) { w_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    constexpr void reset(int v) { w_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

    constexpr int count() const {
        int c = 0;
        for (auto w : w_) c += std::popcount(w);
        return c;
    }

    constexpr bool any() const {
        for (auto w : w_)
            if (w) return true;
        return false;
    }
    constexpr bool none() const { return !any(); }

    // Lowest member, or -1 when empty.
    constexpr int first() const {
        for (int i = 0; i < kWords; ++i)
            if (w_[i]) return i * 64 + std::countr_zero(w_[i]);
        return -1;
    }

    constexpr VertexSet operator&(const VertexSet& o) const {
        VertexSet r;
        for (int i = 0; i < kWords; ++i) r.w_[i] = w_[i] & o.w_[i];
        return r;
    }
    constexpr VertexSet operator|(const VertexSet& o) const {
        VertexSet r;
        for (int i = 0; i < kWords; ++i) r.w_[i] = w_[i] | o.w_[i];
        return r;
    }
    constexpr VertexSet operator^(const VertexSet& o) const {
        VertexSet r;
        for (int i = 0; i < kWords; ++i) r.w_[i] = w_[i] ^ o.w_[i];
        return r;
    }
    // this \ o
    constexpr VertexSet and_not(const VertexSet& o) const {
        VertexSet r;
        for (int i = 0; i < kWords; ++i) r.w_[i] = w_[i] & ~o.w_[i];
        return r;
    }
    constexpr VertexSet& operator&=(const VertexSet& o) {
        for (int i = 0; i < kWords; ++i) w_[i] &= o.w_[i];
        return *this;
    }
    constexpr VertexSet& operator|=(const VertexSet& o) {
        for (int i = 0; i < kWords; ++i) w_[i] |= o.w_[i];
        return *this;
    }

    constexpr bool operator==(const VertexSet&) const = default;

    constexpr bool is_subset_of(const VertexSet& o) const {
        for (int i = 0; i < kWords; ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    constexpr bool intersects(const VertexSet& o) const {
        for (int i = 0; i < kWords; ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    // Calls f(v) for each member in ascending order.
    template <typename F>
    void for_each(F&& f) const {
        for (int i = 0; i < kWords; ++i) {
            std::uint64_t bits = w_[i];
            while (bits) {
                f(i * 64 + std::countr_zero(bits));
                bits &= bits - 1;
            }
        }
    }

private:
    std::array<std::uint64_t, kWords> w_{};
};

}  // namespace histlab
