#include "eip/downset.hpp"

#include <algorithm>
#include <ostream>
#include <unordered_map>
#include <unordered_set>

namespace eip {

namespace {

constexpr std::int64_t kUnreachable = -1;

std::vector<std::int64_t> prefix_sums(const DeltaSequence& d) {
    std::vector<std::int64_t> s(d.size() + 1, 0);
    for (std::size_t j = 0; j < d.size(); ++j) s[j + 1] = s[j] + d[j];
    return s;
}

} // namespace

std::uint64_t downset_weight(const DeltaSequence& d, const YoungDiagram& y) {
    if (y.box() != d.size())
        throw input_error("diagram box does not match the sequence length");
    auto S = prefix_sums(d);
    std::int64_t w = 0;
    for (std::size_t x = 0; x < y.box(); ++x) {
        int h = y.height(x);
        w += static_cast<std::int64_t>(h) * d[x] + S[static_cast<std::size_t>(h)];
    }
    return static_cast<std::uint64_t>(w);
}

std::vector<std::uint64_t> max_weight_by_size(const DeltaSequence& d) {
    std::size_t N = d.size();
    if (N > 128)
        throw capacity_error("square DP capped at sequence length 128, got " +
                             std::to_string(N));
    auto S = prefix_sums(d);
    std::size_t cells = N * N;

    // dp[h][c]: best weight of a downset of the first x+1 columns using c
    // cells with column x of height exactly h.
    auto idx = [N, cells](std::size_t h, std::size_t c) { return h * (cells + 1) + c; };
    std::vector<std::int64_t> dp((N + 1) * (cells + 1), kUnreachable);
    std::vector<std::int64_t> next((N + 1) * (cells + 1), kUnreachable);

    for (std::size_t h = 0; h <= N; ++h)
        dp[idx(h, h)] = static_cast<std::int64_t>(h) * d[0] + S[h];

    for (std::size_t x = 1; x < N; ++x) {
        // Suffix max over previous heights >= h, in place.
        for (std::size_t h = N; h-- > 0;)
            for (std::size_t c = 0; c <= cells; ++c)
                dp[idx(h, c)] = std::max(dp[idx(h, c)], dp[idx(h + 1, c)]);
        std::fill(next.begin(), next.end(), kUnreachable);
        for (std::size_t h = 0; h <= N; ++h) {
            std::int64_t colw = static_cast<std::int64_t>(h) * d[x] + S[h];
            for (std::size_t c = h; c <= cells; ++c) {
                std::int64_t prev = dp[idx(h, c - h)];
                if (prev != kUnreachable) next[idx(h, c)] = prev + colw;
            }
        }
        dp.swap(next);
    }

    std::vector<std::uint64_t> W(cells + 1, 0);
    for (std::size_t c = 0; c <= cells; ++c) {
        std::int64_t best = kUnreachable;
        for (std::size_t h = 0; h <= N; ++h) best = std::max(best, dp[idx(h, c)]);
        W[c] = static_cast<std::uint64_t>(best);
    }
    return W;
}

std::uint64_t lex_prefix_weight(const DeltaSequence& d, std::size_t m) {
    std::size_t N = d.size();
    if (m > N * N) throw input_error("prefix size exceeds the box");
    auto S = prefix_sums(d);
    std::size_t k = m / N, r = m % N;
    std::int64_t w = 0;
    for (std::size_t x = 0; x < k; ++x)
        w += static_cast<std::int64_t>(N) * d[x] + S[N];
    if (r) w += static_cast<std::int64_t>(r) * d[k] + S[r];
    return static_cast<std::uint64_t>(w);
}

std::optional<std::size_t> lemma1_violation(const DeltaSequence& delta_square) {
    for (std::size_t j = 0; j + 1 < delta_square.size(); ++j)
        if (delta_square[j + 1] > delta_square[j] + 1) return j;
    return std::nullopt;
}

namespace {

struct VecHash {
    std::size_t operator()(const std::vector<std::uint8_t>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (auto b : v) {
            h ^= b;
            h *= 1099511628211ull;
        }
        return h;
    }
};

} // namespace

ChainStatus optimal_chain_status(const DeltaSequence& d, std::size_t diagram_cap) {
    std::size_t N = d.size();
    if (N > 12)
        throw capacity_error("chain search enumerates tie sets and is capped at length 12, got " +
                             std::to_string(N));
    auto W = max_weight_by_size(d);
    auto S = prefix_sums(d);

    // layer m: maximum-weight size-m downsets reachable by single-cell growth
    std::unordered_map<std::vector<std::uint8_t>, std::int64_t, VecHash> layer;
    layer.emplace(std::vector<std::uint8_t>(N, 0), 0);
    for (std::size_t m = 1; m <= N * N; ++m) {
        std::unordered_map<std::vector<std::uint8_t>, std::int64_t, VecHash> next;
        for (const auto& [enc, w] : layer) {
            for (std::size_t x = 0; x < N; ++x) {
                int h = enc[x];
                if (h >= static_cast<int>(N)) continue;
                if (x > 0 && enc[x - 1] <= h) continue;  // must stay nonincreasing
                std::int64_t w2 = w + d[x] + d[static_cast<std::size_t>(h)];
                if (w2 != static_cast<std::int64_t>(W[m])) continue;
                auto enc2 = enc;
                enc2[x] = static_cast<std::uint8_t>(h + 1);
                next.emplace(std::move(enc2), w2);
                if (next.size() > diagram_cap) return ChainStatus::cap_exceeded;
            }
        }
        if (next.empty()) return ChainStatus::none;
        layer.swap(next);
    }
    return ChainStatus::found;
}

bool optimal_chain_exists(const DeltaSequence& d) {
    switch (optimal_chain_status(d)) {
    case ChainStatus::found: return true;
    case ChainStatus::none: return false;
    case ChainStatus::cap_exceeded:
        throw capacity_error("chain search exceeded the diagram cap");
    case ChainStatus::skipped: break;
    }
    throw capacity_error("chain search not run");
}

SquareReport square_lex_report(const DeltaSequence& d, std::size_t chain_limit) {
    SquareReport rep;
    rep.N = d.size();
    rep.delta = d;
    rep.W = max_weight_by_size(d);
    std::size_t cells = rep.N * rep.N;
    rep.lexW.resize(cells + 1);
    rep.lex_optimal = true;
    for (std::size_t m = 0; m <= cells; ++m) {
        rep.lexW[m] = lex_prefix_weight(d, m);
        if (rep.lexW[m] < rep.W[m] && !rep.first_gap) {
            rep.first_gap = m;
            rep.lex_optimal = false;
        }
    }
    std::vector<int> inc(cells);
    for (std::size_t m = 1; m <= cells; ++m)
        inc[m - 1] = static_cast<int>(rep.W[m] - rep.W[m - 1]);
    rep.delta_square = DeltaSequence(std::move(inc));
    rep.lemma1_violation = lemma1_violation(rep.delta_square);
    if (rep.lex_optimal) {
        // The prefixes themselves are a chain of maximum-weight downsets.
        rep.chain_exists = ChainStatus::found;
    } else if (rep.N <= chain_limit) {
        rep.chain_exists = optimal_chain_status(d);
    } else {
        rep.chain_exists = ChainStatus::skipped;
    }
    return rep;
}

std::int64_t marginal_gain(const DeltaSequence& d, const MarginalContext& ctx) {
    std::size_t N = d.size();
    if (ctx.base.box() != N) throw input_error("marginal context box mismatch");
    std::vector<int> heights = ctx.base.heights();
    // Cells must extend columns contiguously; sort by row within column.
    auto cells = ctx.addition;
    std::sort(cells.begin(), cells.end());
    for (auto [x, y] : cells) {
        if (x < 0 || static_cast<std::size_t>(x) >= N || y < 0 || y >= static_cast<int>(N))
            throw input_error("addition cell outside the box");
        if (ctx.base.contains(x, y)) throw input_error("addition cell already in the base");
        if (heights[static_cast<std::size_t>(x)] != y)
            throw input_error("addition does not stack contiguously on the base");
        heights[static_cast<std::size_t>(x)] = y + 1;
    }
    YoungDiagram grown(heights);  // validates that the union is a downset
    return static_cast<std::int64_t>(downset_weight(d, grown)) -
           static_cast<std::int64_t>(downset_weight(d, ctx.base));
}

namespace {

// Random base downset to which the single column-x block [y, y+len) can be
// added: columns left of x at height >= y+len, column x at exactly y,
// columns right at height <= y.
YoungDiagram random_context(std::size_t N, std::size_t x, int y, int len, std::mt19937_64& rng) {
    std::vector<int> h(N, 0);
    int floor_left = y + len;
    int prev = static_cast<int>(N);
    for (std::size_t j = 0; j < x; ++j) {
        std::uniform_int_distribution<int> pick(floor_left, prev);
        h[j] = pick(rng);
        prev = h[j];
    }
    h[x] = y;
    prev = y;
    for (std::size_t j = x + 1; j < N; ++j) {
        std::uniform_int_distribution<int> pick(0, prev);
        h[j] = pick(rng);
        prev = h[j];
    }
    return YoungDiagram(std::move(h));
}

std::int64_t block_gain(const DeltaSequence& d, std::size_t x, int y, int len,
                        std::mt19937_64& rng) {
    MarginalContext ctx;
    ctx.base = random_context(d.size(), x, y, len, rng);
    for (int r = 0; r < len; ++r) ctx.addition.emplace_back(static_cast<int>(x), y + r);
    return marginal_gain(d, ctx);
}

} // namespace

bool shift_identity_check(const HspiParams& params, ShiftCase which, std::mt19937_64& rng) {
    const std::size_t p = params.p, s = params.s, i = params.i;
    const std::size_t N = s * p;
    DeltaSequence d = hspi_delta(params);
    auto rnd = [&rng](std::size_t lo, std::size_t hi) {  // inclusive
        std::uniform_int_distribution<std::size_t> pick(lo, hi);
        return pick(rng);
    };

    switch (which) {
    case ShiftCase::cell_row_shift: {
        if (s < 2) return true;  // no room for a q*p shift
        std::size_t x = rnd(0, N - 1);
        std::size_t q = rnd(1, s - 1);
        std::size_t y = rnd(0, N - 1 - q * p);
        std::int64_t low = block_gain(d, x, static_cast<int>(y), 1, rng);
        std::int64_t high = block_gain(d, x, static_cast<int>(y + q * p), 1, rng);
        return high - low == static_cast<std::int64_t>(q) * static_cast<std::int64_t>(p - i);
    }
    case ShiftCase::block_row_shift: {
        std::size_t x = rnd(0, N - 1);
        std::size_t q = rnd(0, N - p);
        std::size_t b = rnd(0, N - p - q);
        std::int64_t low = block_gain(d, x, static_cast<int>(b), static_cast<int>(p), rng);
        std::int64_t high =
            block_gain(d, x, static_cast<int>(b + q), static_cast<int>(p), rng);
        return high - low == static_cast<std::int64_t>(q) * static_cast<std::int64_t>(p - i);
    }
    case ShiftCase::column_step_left: {
        std::size_t a = rnd(1, N - 1);
        std::int64_t da = block_gain(d, a, 0, static_cast<int>(N), rng);
        std::int64_t db = block_gain(d, a - 1, 0, static_cast<int>(N), rng);
        std::int64_t diff = db - da;
        std::int64_t expected =
            (a % p != 0) ? -static_cast<std::int64_t>(N)
                         : static_cast<std::int64_t>(N) * (static_cast<std::int64_t>(i) - 1);
        return diff == expected && diff >= -static_cast<std::int64_t>(N);
    }
    }
    throw input_error("unknown shift case");
}

std::vector<std::uint64_t> cube_max_weight(const DeltaSequence& d) {
    std::size_t N = d.size();
    if (N > 6)
        throw capacity_error("cube DP enumerates nested layer diagrams and is capped at length "
                             "6, got " + std::to_string(N));
    auto S = prefix_sums(d);

    // All 2D diagrams in the N-box.
    std::vector<std::vector<int>> diagrams;
    std::vector<int> cur(N);
    struct Gen {
        std::size_t N;
        std::vector<int>& cur;
        std::vector<std::vector<int>>& out;
        void step(std::size_t x, int prev) {
            if (x == N) {
                out.push_back(cur);
                return;
            }
            for (int h = prev; h >= 0; --h) {
                cur[x] = h;
                step(x + 1, h);
            }
        }
    };
    Gen{N, cur, diagrams}.step(0, static_cast<int>(N));

    std::size_t D = diagrams.size();
    std::vector<std::size_t> size(D);
    std::vector<std::int64_t> w2(D);
    for (std::size_t a = 0; a < D; ++a) {
        std::size_t c = 0;
        std::int64_t w = 0;
        for (std::size_t x = 0; x < N; ++x) {
            int h = diagrams[a][x];
            c += static_cast<std::size_t>(h);
            w += static_cast<std::int64_t>(h) * d[x] + S[static_cast<std::size_t>(h)];
        }
        size[a] = c;
        w2[a] = w;
    }
    // sub[a]: indices of diagrams contained in diagram a.
    std::vector<std::vector<std::size_t>> sub(D);
    for (std::size_t a = 0; a < D; ++a)
        for (std::size_t b = 0; b < D; ++b) {
            bool inside = true;
            for (std::size_t x = 0; x < N && inside; ++x)
                inside = diagrams[b][x] <= diagrams[a][x];
            if (inside) sub[a].push_back(b);
        }

    std::size_t cells = N * N * N;
    std::vector<std::vector<std::int64_t>> dp(D, std::vector<std::int64_t>(cells + 1, kUnreachable));
    for (std::size_t a = 0; a < D; ++a)
        dp[a][size[a]] = w2[a] + static_cast<std::int64_t>(size[a]) * d[0];

    for (std::size_t z = 1; z < N; ++z) {
        std::vector<std::vector<std::int64_t>> next(
            D, std::vector<std::int64_t>(cells + 1, kUnreachable));
        std::size_t reach = N * N * z;
        for (std::size_t a = 0; a < D; ++a) {
            const auto& row = dp[a];
            for (std::size_t b : sub[a]) {
                std::int64_t add = w2[b] + static_cast<std::int64_t>(size[b]) * d[z];
                auto& target = next[b];
                for (std::size_t c = 0; c <= reach; ++c) {
                    if (row[c] == kUnreachable) continue;
                    std::int64_t v = row[c] + add;
                    if (v > target[c + size[b]]) target[c + size[b]] = v;
                }
            }
        }
        dp.swap(next);
    }

    std::vector<std::uint64_t> W3(cells + 1, 0);
    for (std::size_t c = 0; c <= cells; ++c) {
        std::int64_t best = kUnreachable;
        for (std::size_t a = 0; a < D; ++a) best = std::max(best, dp[a][c]);
        W3[c] = static_cast<std::uint64_t>(best);
    }
    return W3;
}

std::uint64_t cube_lex_prefix_weight(const DeltaSequence& d, std::size_t m) {
    std::size_t N = d.size();
    if (m > N * N * N) throw input_error("prefix size exceeds the cube");
    auto S = prefix_sums(d);
    std::int64_t total = S[N];
    std::size_t a = m / (N * N), rest = m % (N * N);
    std::int64_t w = 0;
    for (std::size_t x = 0; x < a; ++x)
        w += static_cast<std::int64_t>(N) * static_cast<std::int64_t>(N) * d[x] +
             2 * static_cast<std::int64_t>(N) * total;
    if (rest)
        w += static_cast<std::int64_t>(rest) * d[a] +
             static_cast<std::int64_t>(lex_prefix_weight(d, rest));
    return static_cast<std::uint64_t>(w);
}

nlohmann::json square_report_json(const SquareReport& report) {
    nlohmann::json j;
    j["N"] = report.N;
    j["delta"] = report.delta.values();
    j["W"] = report.W;
    j["lexW"] = report.lexW;
    j["lex_optimal"] = report.lex_optimal;
    j["first_gap"] = report.first_gap ? nlohmann::json(*report.first_gap) : nlohmann::json();
    j["delta_square"] = report.delta_square.values();
    j["lemma1_violation"] =
        report.lemma1_violation ? nlohmann::json(*report.lemma1_violation) : nlohmann::json();
    switch (report.chain_exists) {
    case ChainStatus::found: j["chain_exists"] = true; break;
    case ChainStatus::none: j["chain_exists"] = false; break;
    case ChainStatus::skipped: j["chain_exists"] = "skipped"; break;
    case ChainStatus::cap_exceeded: j["chain_exists"] = "cap-exceeded"; break;
    }
    return j;
}

void write_square_report_csv(const SquareReport& report, std::ostream& out) {
    out << "m,W,lexW,gap\n";
    for (std::size_t m = 0; m < report.W.size(); ++m)
        out << m << ',' << report.W[m] << ',' << report.lexW[m] << ','
            << (report.W[m] - report.lexW[m]) << '\n';
}

} // namespace eip
