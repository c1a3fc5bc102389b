#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include <json.hpp>

#include "eip/delta.hpp"

namespace eip {

// Downset of the N x N grid, encoded as nonincreasing column heights.
// Cell (x,y) means column x, row y, both 0-based, rows growing upward;
// downsets correspond exactly to the compressed subsets of V x V.
class YoungDiagram {
public:
    YoungDiagram() = default;

    explicit YoungDiagram(std::vector<int> heights) : heights_(std::move(heights)) {
        int n = static_cast<int>(heights_.size());
        int prev = n;
        for (int h : heights_) {
            if (h < 0 || h > n || h > prev)
                throw input_error("column heights must be nonincreasing and within the box");
            prev = h;
        }
    }

    static YoungDiagram empty(std::size_t n) { return YoungDiagram(std::vector<int>(n, 0)); }

    std::size_t box() const { return heights_.size(); }
    const std::vector<int>& heights() const { return heights_; }
    int height(std::size_t x) const { return heights_[x]; }

    std::size_t cells() const {
        std::size_t c = 0;
        for (int h : heights_) c += static_cast<std::size_t>(h);
        return c;
    }

    bool contains(int x, int y) const {
        return x >= 0 && static_cast<std::size_t>(x) < heights_.size() && y >= 0 &&
               y < heights_[static_cast<std::size_t>(x)];
    }

    bool operator==(const YoungDiagram&) const = default;

private:
    std::vector<int> heights_;
};

// Sum of d[x] + d[y] over the cells of the diagram.  Equals the inner-edge
// count of the corresponding compressed subset of the square whenever a graph
// with nested solutions realizes d.
std::uint64_t downset_weight(const DeltaSequence& d, const YoungDiagram& y);

// Exact maxima W(0..N^2): the best downset weight per cell count, by a column
// DP over (column, previous height, cells used).  N is capped at 128.
std::vector<std::uint64_t> max_weight_by_size(const DeltaSequence& d);

// Weight of the first m cells in column-major order: k full columns plus a
// partial column of height m - k*N.
std::uint64_t lex_prefix_weight(const DeltaSequence& d, std::size_t m);

// Smallest index j with deltaSquare[j+1] > deltaSquare[j] + 1.  Such a jump
// certifies that no total order has all prefixes optimal.
std::optional<std::size_t> lemma1_violation(const DeltaSequence& delta_square);

enum class ChainStatus {
    found,         // a size-increasing chain of maximum-weight downsets exists
    none,          // exhaustively refuted
    skipped,       // not attempted (box above the chain limit)
    cap_exceeded,  // tie set grew past the diagram cap; no verdict
};

// Layered reachability over single-cell additions restricted to maximum-weight
// diagrams per size.  Needs N <= 12 (enumerates tie sets).
ChainStatus optimal_chain_status(const DeltaSequence& d, std::size_t diagram_cap = 2000000);

// Boolean form; cap overflow raises capacity_error instead of guessing.
bool optimal_chain_exists(const DeltaSequence& d);

// Everything the square analysis produces for one sequence d of length N:
// exact maxima, the column-major prefix weights, and the certificates.
struct SquareReport {
    std::size_t N = 0;
    DeltaSequence delta;
    std::vector<std::uint64_t> W;      // W(0..N^2)
    std::vector<std::uint64_t> lexW;   // same sizes, prefix weights
    bool lex_optimal = false;
    std::optional<std::size_t> first_gap;          // smallest m with lexW(m) < W(m)
    DeltaSequence delta_square;                    // increments of W, length N^2
    std::optional<std::size_t> lemma1_violation;   // index into delta_square
    ChainStatus chain_exists = ChainStatus::skipped;
};

// The chain check runs only when N <= chain_limit; when the prefix weights
// are already optimal the prefixes themselves form a chain and no search runs.
SquareReport square_lex_report(const DeltaSequence& d, std::size_t chain_limit = 12);

// Base downset plus extra cells whose union is again a downset.
struct MarginalContext {
    YoungDiagram base;
    std::vector<std::pair<int, int>> addition;  // cells (x,y), disjoint from base
};

// downset_weight(base union addition) - downset_weight(base).
std::int64_t marginal_gain(const DeltaSequence& d, const MarginalContext& ctx);

// Randomized checks of the marginal-gain shift identities of the H-family
// weight matrix (evaluated against the closed forms they should equal).
enum class ShiftCase {
    cell_row_shift,    // single cell moved up q*p rows: gain changes by q*(p-i)
    block_row_shift,   // p consecutive column cells moved up q rows: q*(p-i)
    column_step_left,  // full column a vs a-1: -N off block boundaries,
                       // N*(i-1) on them, always >= -N
};
bool shift_identity_check(const HspiParams& params, ShiftCase which, std::mt19937_64& rng);

// Exact maxima over 3D downsets in the N^3 box (cell weight d[x]+d[y]+d[z]),
// layer-by-layer DP with nested 2D diagrams as states.  N <= 6.
std::vector<std::uint64_t> cube_max_weight(const DeltaSequence& d);

// First m cells of the coordinate-major order on the cube.
std::uint64_t cube_lex_prefix_weight(const DeltaSequence& d, std::size_t m);

// Stable serialization (field names are part of the interface).
nlohmann::json square_report_json(const SquareReport& report);

// One row per size m with columns m, W, lexW, gap.
void write_square_report_csv(const SquareReport& report, std::ostream& out);

} // namespace eip
