#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eip/errors.hpp"

namespace eip {

// Increment sequence of the optimal inner-edge counts of a graph:
// values[j] is I(j+1) - I(j), so values[0] is always 0.  Everything in this
// library that is not a concrete graph works on these sequences.
class DeltaSequence {
public:
    DeltaSequence() = default;

    explicit DeltaSequence(std::vector<int> v) : values_(std::move(v)) {
        if (values_.empty()) throw input_error("delta sequence must be non-empty");
        if (values_[0] != 0) throw input_error("delta sequence must start with 0");
        for (int x : values_)
            if (x < 0) throw input_error("delta sequence entries must be non-negative");
    }

    std::size_t size() const { return values_.size(); }
    int operator[](std::size_t j) const { return values_[j]; }
    const std::vector<int>& values() const { return values_; }
    int last() const { return values_.back(); }

    std::int64_t sum() const {
        std::int64_t s = 0;
        for (int x : values_) s += x;
        return s;
    }

    auto operator<=>(const DeltaSequence&) const = default;

private:
    std::vector<int> values_;
};

// d[j] + d[n-1-j] == d[n-1] for all j.
bool is_symmetric(const DeltaSequence& d);

// d[0] == 0, d[j] >= 1 for j >= 1, and steps up by at most 1.  Necessary
// (not sufficient) for the sequence to come from a connected graph.
bool is_appropriate(const DeltaSequence& d);

// Maximal strictly increasing runs, as inclusive index ranges covering 0..n-1.
struct SegmentDecomposition {
    std::vector<std::pair<std::size_t, std::size_t>> segments;
};
SegmentDecomposition monotonic_segments(const DeltaSequence& d);

// Index of the segment containing position j.
std::size_t segment_index_of(const SegmentDecomposition& seg, std::size_t j);

// Parameters of the H family: s increasing runs of length p, run j starting
// at value j*(p-i).  The covered theorems need 1 <= i <= p-i; larger i up to p
// is allowed for exploration and flagged by in_theorem_range().
struct HspiParams {
    std::size_t s = 1, p = 1, i = 1;

    HspiParams(std::size_t s_, std::size_t p_, std::size_t i_) : s(s_), p(p_), i(i_) {
        if (s < 1 || p < 1 || i < 1 || i > p)
            throw input_error("H parameters require s >= 1, p >= 1, 1 <= i <= p");
    }

    bool in_theorem_range() const { return i + i <= p; }
};

DeltaSequence hspi_delta(const HspiParams& params);

enum class DeltaFamily {
    complete,                 // K_p
    clique_minus_matchings,   // K_p - sM, p even, s <= p/2 - s
    complete_bipartite,       // K_{p,p}
    clique_minus_cycle,       // K_p - C_p, odd p >= 5
};

// Closed-form sequences.  clique_minus_matchings is restricted to
// s <= p/2 - s: beyond that range the sequence depends on which matchings
// are removed and no closed form applies.
DeltaSequence family_delta(DeltaFamily family, std::size_t p, std::size_t s = 0);

// All appropriate symmetric sequences of the given length, lexicographically
// sorted.  Exhaustive backtracking; n is capped (default 16).
std::vector<DeltaSequence> enumerate_appropriate_symmetric(std::size_t n,
                                                           std::size_t max_n = 16);

// Comma-joined integers, e.g. "0,1,1,2".
DeltaSequence parse_delta_csv(std::string_view text);
std::string delta_to_csv(const DeltaSequence& d);

} // namespace eip
