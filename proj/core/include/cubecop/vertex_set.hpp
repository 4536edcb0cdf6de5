#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace cubecop {

// A hypercube vertex: a subset of the ground set {1..n}, element e stored as
// bit e-1. n is capped at 64.
struct VertexSet {
    uint64_t bits = 0;

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(uint64_t b) : bits(b) {}

    static constexpr VertexSet full(int n) {
        return VertexSet(n == 64 ? ~0ULL : (1ULL << n) - 1);
    }
    static VertexSet of(std::initializer_list<int> elems) {
        VertexSet s;
        for (int e : elems) s.add(e);
        return s;
    }

    int level() const { return std::popcount(bits); }
    bool empty() const { return bits == 0; }
    bool contains(int e) const { return (bits >> (e - 1)) & 1; }
    bool subset_of(VertexSet o) const { return (bits & ~o.bits) == 0; }

    void add(int e) { bits |= 1ULL << (e - 1); }
    void remove(int e) { bits &= ~(1ULL << (e - 1)); }
    VertexSet with(int e) const { return VertexSet(bits | (1ULL << (e - 1))); }
    VertexSet without(int e) const { return VertexSet(bits & ~(1ULL << (e - 1))); }
    VertexSet minus(VertexSet o) const { return VertexSet(bits & ~o.bits); }

    // Smallest element, 1-based; 0 when empty.
    int min_element() const { return bits ? std::countr_zero(bits) + 1 : 0; }

    // k-th smallest element (0-based k), 1-based result.
    int nth_element(int k) const {
        uint64_t b = bits;
        while (k--) b &= b - 1;
        return std::countr_zero(b) + 1;
    }

    std::vector<int> elements() const {
        std::vector<int> out;
        out.reserve(level());
        for (uint64_t b = bits; b; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
        return out;
    }

    std::string str() const {
        std::string s = "{";
        bool first = true;
        for (int e : elements()) {
            if (!first) s += ",";
            s += std::to_string(e);
            first = false;
        }
        return s + "}";
    }

    auto operator<=>(const VertexSet&) const = default;
};

// Next popcount-preserving mask (Gosper); yields level-k subsets in
// increasing numeric order starting from (1<<k)-1.
inline uint64_t next_same_level(uint64_t v) {
    uint64_t c = v & (0 - v);
    uint64_t r = v + c;
    return (((r ^ v) >> 2) / c) | r;
}

}  // namespace cubecop
