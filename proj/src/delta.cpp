#include "eip/delta.hpp"

#include <algorithm>
#include <charconv>

namespace eip {

bool is_symmetric(const DeltaSequence& d) {
    std::size_t n = d.size();
    for (std::size_t j = 0; j < n; ++j)
        if (d[j] + d[n - 1 - j] != d[n - 1]) return false;
    return true;
}

bool is_appropriate(const DeltaSequence& d) {
    if (d[0] != 0) return false;
    for (std::size_t j = 1; j < d.size(); ++j) {
        if (d[j] < 1) return false;
        if (d[j] > d[j - 1] + 1) return false;
    }
    return true;
}

SegmentDecomposition monotonic_segments(const DeltaSequence& d) {
    SegmentDecomposition out;
    std::size_t start = 0;
    for (std::size_t j = 1; j <= d.size(); ++j) {
        if (j == d.size() || d[j] <= d[j - 1]) {
            out.segments.emplace_back(start, j - 1);
            start = j;
        }
    }
    return out;
}

std::size_t segment_index_of(const SegmentDecomposition& seg, std::size_t j) {
    for (std::size_t k = 0; k < seg.segments.size(); ++k)
        if (seg.segments[k].first <= j && j <= seg.segments[k].second) return k;
    throw input_error("position " + std::to_string(j) + " outside the decomposed range");
}

DeltaSequence hspi_delta(const HspiParams& params) {
    std::vector<int> v;
    v.reserve(params.s * params.p);
    for (std::size_t j = 0; j < params.s; ++j)
        for (std::size_t r = 0; r < params.p; ++r)
            v.push_back(static_cast<int>(j * (params.p - params.i) + r));
    return DeltaSequence(std::move(v));
}

DeltaSequence family_delta(DeltaFamily family, std::size_t p, std::size_t s) {
    switch (family) {
    case DeltaFamily::complete: {
        if (p < 1) throw input_error("complete graph needs p >= 1");
        std::vector<int> v(p);
        for (std::size_t j = 0; j < p; ++j) v[j] = static_cast<int>(j);
        return DeltaSequence(std::move(v));
    }
    case DeltaFamily::clique_minus_matchings: {
        if (p < 2 || p % 2 != 0)
            throw input_error("K_p - sM closed form needs even p");
        if (s < 1 || 2 * s > p / 2)
            throw input_error("K_p - sM closed form needs 1 <= s <= p/2 - s; outside that "
                              "range the sequence depends on the matching choice");
        // Two runs of length p/2; the second starts at p/2 - s.
        return hspi_delta(HspiParams(2, p / 2, s));
    }
    case DeltaFamily::complete_bipartite: {
        if (p < 1) throw input_error("complete bipartite closed form needs p >= 1");
        std::vector<int> v;
        v.reserve(2 * p);
        for (std::size_t j = 0; j < p; ++j) {
            v.push_back(static_cast<int>(j));
            v.push_back(static_cast<int>(j + 1));
        }
        return DeltaSequence(std::move(v));
    }
    case DeltaFamily::clique_minus_cycle: {
        if (p < 5 || p % 2 == 0)
            throw input_error("K_p - C_p closed form needs odd p >= 5");
        // Ascent to (p-3)/2, one repeated plateau value, ascent to p-3.
        std::vector<int> v;
        v.reserve(p);
        int mid = static_cast<int>((p - 3) / 2);
        for (int x = 0; x <= mid; ++x) v.push_back(x);
        v.push_back(mid);
        for (int x = mid + 1; x <= static_cast<int>(p) - 3; ++x) v.push_back(x);
        return DeltaSequence(std::move(v));
    }
    }
    throw input_error("unknown delta family");
}

namespace {

// Backtracks over the first half; symmetry determines the rest once the top
// value T = d[n-1] is fixed.
void enumerate_with_top(std::size_t n, int top, std::vector<int>& seq,
                        std::vector<DeltaSequence>& out) {
    struct Rec {
        std::size_t n;
        int top;
        std::vector<int>& seq;
        std::vector<DeltaSequence>& out;

        void step(std::size_t j) {
            if (j == n - 1) {
                if (seq[n - 2] + 1 >= top) out.emplace_back(seq);
                return;
            }
            std::size_t mirror = n - 1 - j;
            int lo = 1, hi = seq[j - 1] + 1;
            if (j > mirror) {
                int v = top - seq[mirror];
                if (lo <= v && v <= hi) {
                    seq[j] = v;
                    step(j + 1);
                }
                return;
            }
            if (j == mirror) {
                if (top % 2 == 0) {
                    int v = top / 2;
                    if (lo <= v && v <= hi) {
                        seq[j] = v;
                        step(j + 1);
                    }
                }
                return;
            }
            // Mirror entry top - v must itself be >= 1.
            for (int v = lo; v <= std::min(hi, top - 1); ++v) {
                seq[j] = v;
                step(j + 1);
            }
        }
    };
    Rec{n, top, seq, out}.step(1);
}

} // namespace

std::vector<DeltaSequence> enumerate_appropriate_symmetric(std::size_t n, std::size_t max_n) {
    if (n < 1) throw input_error("sequence length must be >= 1");
    if (n > max_n)
        throw capacity_error("enumeration length " + std::to_string(n) + " exceeds the cap of " +
                             std::to_string(max_n));
    if (n == 1) return {DeltaSequence({0})};
    std::vector<DeltaSequence> out;
    std::vector<int> seq(n, 0);
    for (int top = 1; top < static_cast<int>(n); ++top) {
        seq.assign(n, 0);
        seq[n - 1] = top;
        enumerate_with_top(n, top, seq, out);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

DeltaSequence parse_delta_csv(std::string_view text) {
    std::vector<int> v;
    std::size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n'))
            ++pos;
        if (pos >= text.size()) break;
        int value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
        if (ec != std::errc{})
            throw input_error("bad integer in delta CSV at offset " + std::to_string(pos));
        v.push_back(value);
        pos = static_cast<std::size_t>(ptr - text.data());
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n'))
            ++pos;
        if (pos < text.size()) {
            if (text[pos] != ',')
                throw input_error("expected ',' in delta CSV at offset " + std::to_string(pos));
            ++pos;
        }
    }
    if (v.empty()) throw input_error("empty delta CSV");
    return DeltaSequence(std::move(v));
}

std::string delta_to_csv(const DeltaSequence& d) {
    std::string out;
    for (std::size_t j = 0; j < d.size(); ++j) {
        if (j) out += ',';
        out += std::to_string(d[j]);
    }
    return out;
}

} // namespace eip
