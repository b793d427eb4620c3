#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "grid.hpp"

namespace ctile {

// w = X Y Z X^ Y^ Z^ read cyclically from `start`; X^ is the reverse complement of X.
// One of the three lengths may be zero (pseudo-square).
struct BNFactorization {
    std::size_t start = 0;
    std::size_t word_length = 0;
    std::array<std::size_t, 3> len{};

    // [begin, end) of the six factors, indices taken modulo word_length
    std::array<std::pair<std::size_t, std::size_t>, 6> ranges() const {
        std::array<std::pair<std::size_t, std::size_t>, 6> out{};
        std::size_t pos = start;
        for (int k = 0; k < 6; ++k) {
            out[k] = {pos, pos + len[k % 3]};
            pos += len[k % 3];
        }
        return out;
    }
    bool pseudo_square() const { return len[0] == 0 || len[1] == 0 || len[2] == 0; }
};

inline bool check_factorization(const BoundaryWord& w, const BNFactorization& f) {
    const std::size_t n = w.size();
    if (n == 0 || f.word_length != n || 2 * (f.len[0] + f.len[1] + f.len[2]) != n) return false;
    int empty = (f.len[0] == 0) + (f.len[1] == 0) + (f.len[2] == 0);
    if (empty > 1) return false;
    auto r = f.ranges();
    for (int k = 0; k < 3; ++k) {
        auto [b, e] = r[k];
        auto hb = r[k + 3].first;
        for (std::size_t q = 0; q < e - b; ++q)
            if (w.letters[(hb + q) % n] != BoundaryWord::complement(w.letters[(e - 1 - q) % n])) return false;
    }
    return true;
}

// Lattice translations carrying the tile onto its neighbours across X, Y and Z.
inline std::array<Vec, 3> factor_translations(const BoundaryWord& w, const BNFactorization& f) {
    const std::size_t n = w.size();
    std::vector<Cell> pt(n + 1);
    pt[0] = w.start;
    for (std::size_t k = 0; k < n; ++k) pt[k + 1] = pt[k] + BoundaryWord::step(w.letters[k]);
    auto at = [&](std::size_t i) { return pt[i % n]; };
    auto r = f.ranges();
    std::array<Vec, 3> t{};
    for (int k = 0; k < 3; ++k) t[k] = at(r[k].second) - at(r[k + 3].first);
    return t;
}

struct MonotileVerdict {
    bool tiles = false;
    std::optional<BNFactorization> witness;
};

// Exhaustive split-point search over the boundary word.
inline MonotileVerdict is_translational_monotile(const Polyomino& p) {
    BoundaryWord w = boundary_word(p);
    const std::size_t n = w.size();
    const std::size_t half = n / 2;
    // reach[s][e]: largest L with w[s+q] == comp(w[e-q]) for all q < L
    std::vector<std::vector<std::uint16_t>> reach(n, std::vector<std::uint16_t>(n, 0));
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t e = 0; e < n; ++e) {
            std::size_t L = 0;
            while (L < half && w.letters[(s + L) % n] == BoundaryWord::complement(w.letters[(e + n - L) % n])) ++L;
            reach[s][e] = static_cast<std::uint16_t>(L);
        }
    auto hat_ok = [&](std::size_t b, std::size_t len, std::size_t hb) {
        if (len == 0) return true;
        return reach[hb % n][(b + len - 1) % n] >= len;
    };
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t a = 0; a <= half; ++a) {
            if (!hat_ok(s, a, s + half)) continue;
            for (std::size_t b = 0; a + b <= half; ++b) {
                std::size_t c = half - a - b;
                if ((a == 0) + (b == 0) + (c == 0) > 1) continue;
                if (!hat_ok(s + a, b, s + half + a)) continue;
                if (!hat_ok(s + a + b, c, s + half + a + b)) continue;
                BNFactorization f{s, n, {a, b, c}};
                return {true, f};
            }
        }
    return {false, std::nullopt};
}

}  // namespace ctile
