#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "eip/errors.hpp"

namespace eip {

// Subset of the vertices 0..universe-1 of some graph, stored as a bit set.
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(std::size_t universe)
        : universe_(universe), words_((universe + 63) / 64, 0) {}

    static VertexSet of(std::size_t universe, std::initializer_list<std::size_t> members) {
        VertexSet s(universe);
        for (std::size_t v : members) s.set(v);
        return s;
    }

    static VertexSet full(std::size_t universe) {
        VertexSet s(universe);
        for (std::size_t v = 0; v < universe; ++v) s.set(v);
        return s;
    }

    std::size_t universe() const { return universe_; }

    bool test(std::size_t v) const {
        check_index(v);
        return (words_[v >> 6] >> (v & 63)) & 1u;
    }

    void set(std::size_t v) {
        check_index(v);
        words_[v >> 6] |= std::uint64_t{1} << (v & 63);
    }

    void reset(std::size_t v) {
        check_index(v);
        words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    // |this ∩ other|; universes must match.
    std::size_t count_and(const VertexSet& other) const {
        check_same_universe(other);
        std::size_t c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
        return c;
    }

    bool is_subset_of(const VertexSet& other) const {
        check_same_universe(other);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i]) return false;
        return true;
    }

    bool intersects(const VertexSet& other) const {
        check_same_universe(other);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & other.words_[i]) return true;
        return false;
    }

    VertexSet& operator|=(const VertexSet& other) {
        check_same_universe(other);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
        return *this;
    }

    VertexSet& operator&=(const VertexSet& other) {
        check_same_universe(other);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }

    // Members in ascending order.
    std::vector<std::size_t> members() const {
        std::vector<std::size_t> out;
        out.reserve(count());
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                out.push_back(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
        return out;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                f(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    bool operator==(const VertexSet&) const = default;

private:
    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;

    void check_index(std::size_t v) const {
        if (v >= universe_)
            throw input_error("vertex index " + std::to_string(v) +
                              " out of range for universe of size " + std::to_string(universe_));
    }

    void check_same_universe(const VertexSet& other) const {
        if (universe_ != other.universe_)
            throw input_error("vertex sets over different universes (" +
                              std::to_string(universe_) + " vs " +
                              std::to_string(other.universe_) + ")");
    }
};

} // namespace eip
