#include "bipartify/oracle.hpp"

#include <bit>

namespace bipartify {

int crossing_count(const Graph& g, std::uint32_t mask) {
    auto side_of = [mask](int v) -> std::uint32_t {
        return v == 0 ? 0u : (mask >> (v - 1)) & 1u;
    };
    int crossing = 0;
    for (auto [u, v] : g.edges())
        if (side_of(u) != side_of(v)) ++crossing;
    return crossing;
}

namespace {

// Lexicographic order of the side-label vectors encoded by two masks:
// labels are compared vertex by vertex, so the first differing (lowest) bit
// decides, with 0 (part X) ordered first.
bool mask_lex_less(std::uint32_t a, std::uint32_t b) {
    if (a == b) return false;
    const int pos = std::countr_zero(a ^ b);
    return ((a >> pos) & 1u) == 0;
}

}  // namespace

OracleResult max_cut_exact(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 26) throw TooLargeError("max_cut_exact: n = " + std::to_string(n) + " exceeds 26");

    OracleResult res;
    if (n == 0) {
        res.r_b_opt = Rational(1, 1);
        return res;
    }

    std::vector<char> side(static_cast<std::size_t>(n), 0);
    int crossing = 0;
    std::uint32_t best_mask = 0;
    int best = 0;

    const std::uint64_t total = n >= 1 ? (1ull << (n - 1)) : 1ull;
    std::uint32_t mask = 0;
    for (std::uint64_t step = 1; step < total; ++step) {
        // Gray-code walk: exactly one vertex flips per step.
        const int flip_bit = std::countr_zero(step);
        const int v = flip_bit + 1;
        for (int w : g.neighbors(v)) {
            if (side[static_cast<std::size_t>(w)] == side[static_cast<std::size_t>(v)])
                ++crossing;
            else
                --crossing;
        }
        side[static_cast<std::size_t>(v)] ^= 1;
        mask ^= 1u << flip_bit;

        if (crossing > best || (crossing == best && mask_lex_less(mask, best_mask))) {
            best = crossing;
            best_mask = mask;
        }
    }

    res.max_cut = best;
    res.witness = Bipartition(n);
    for (int v = 1; v < n; ++v)
        res.witness.side[static_cast<std::size_t>(v)] =
            ((best_mask >> (v - 1)) & 1u) ? Side::Y : Side::X;
    res.r_b_opt = g.edge_count() == 0 ? Rational(1, 1) : Rational(best, g.edge_count());
    return res;
}

}  // namespace bipartify
