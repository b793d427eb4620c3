#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "grid.hpp"

namespace ctile {

struct WangTile {
    int top = 0, bottom = 0, left = 0, right = 0;
    friend bool operator==(const WangTile&, const WangTile&) = default;
};

struct WangSet {
    std::vector<WangTile> tiles;
    int m = 1;

    int n() const { return static_cast<int>(tiles.size()); }
    // bits per colour, never below one
    int t() const {
        int bits = 0;
        while ((1 << bits) < m) ++bits;
        return bits < 1 ? 1 : bits;
    }
    void validate() const {
        if (tiles.empty()) throw FormatError("wang set needs at least one tile");
        if (m < 1) throw FormatError("wang set needs at least one colour");
        for (const auto& w : tiles)
            for (int c : {w.top, w.bottom, w.left, w.right})
                if (c < 0 || c >= m) throw FormatError("colour index out of range");
    }
};

// Three tiles over red=0, green=1, blue=2, yellow=3.
inline WangSet example_wang_set() {
    return {{{0, 0, 1, 3}, {2, 2, 3, 0}, {3, 3, 0, 1}}, 4};
}

inline WangSet read_wang(std::istream& is) {
    std::string line;
    auto next = [&]() -> bool {
        while (std::getline(is, line))
            if (!line.empty() && line[0] != '#') return true;
        return false;
    };
    if (!next()) throw FormatError("empty wang file");
    std::istringstream hs(line);
    std::string tag, extra;
    int n = 0, m = 0;
    if (!(hs >> tag >> n >> m) || tag != "wang" || n < 1 || m < 1 || (hs >> extra)) throw FormatError("bad wang header: " + line);
    WangSet ws;
    ws.m = m;
    for (int k = 0; k < n; ++k) {
        if (!next()) throw FormatError("wang file has fewer tiles than declared");
        std::istringstream ls(line);
        WangTile w;
        if (!(ls >> w.top >> w.bottom >> w.left >> w.right) || (ls >> extra)) throw FormatError("bad wang tile: " + line);
        ws.tiles.push_back(w);
    }
    if (next()) throw FormatError("wang file has more tiles than declared");
    ws.validate();
    return ws;
}

inline void write_wang(std::ostream& os, const WangSet& ws) {
    os << "wang " << ws.n() << ' ' << ws.m << '\n';
    for (const auto& w : ws.tiles) os << w.top << ' ' << w.bottom << ' ' << w.left << ' ' << w.right << '\n';
}

// assignment[y][x] = tile index; x grows to the right, y grows upward
using WangGrid = std::vector<std::vector<int>>;

inline bool check_torus(const WangSet& ws, const WangGrid& g) {
    int h = static_cast<int>(g.size());
    if (h == 0) return false;
    int w = static_cast<int>(g[0].size());
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            const auto& c = ws.tiles.at(g[y][x]);
            const auto& r = ws.tiles.at(g[y][(x + 1) % w]);
            const auto& u = ws.tiles.at(g[(y + 1) % h][x]);
            if (c.right != r.left || c.top != u.bottom) return false;
        }
    return true;
}

// Exhaustive row-major backtracking; left and lower neighbours are checked as cells fill,
// wrap-around constraints when a row or the grid closes.
inline std::optional<WangGrid> wang_torus_solve(const WangSet& ws, int w, int h) {
    if (w < 1 || h < 1) throw DomainError("torus size must be positive");
    WangGrid g(h, std::vector<int>(w, -1));
    auto ok = [&](int x, int y, int k) {
        const auto& t = ws.tiles[k];
        if (x > 0 && ws.tiles[g[y][x - 1]].right != t.left) return false;
        if (x == w - 1 && ws.tiles[g[y][0] < 0 ? k : g[y][0]].left != t.right) return false;
        if (y > 0 && ws.tiles[g[y - 1][x]].top != t.bottom) return false;
        if (y == h - 1 && ws.tiles[g[0][x] < 0 ? k : g[0][x]].bottom != t.top) return false;
        return true;
    };
    auto rec = [&](auto&& self, int pos) -> bool {
        if (pos == w * h) return true;
        int x = pos % w, y = pos / w;
        for (int k = 0; k < ws.n(); ++k) {
            if (!ok(x, y, k)) continue;
            g[y][x] = k;
            if (self(self, pos + 1)) return true;
            g[y][x] = -1;
        }
        return false;
    };
    if (!rec(rec, 0)) return std::nullopt;
    return g;
}

struct TorusSize {
    int w = 0, h = 0;
};

// smallest area first, then narrower width
inline std::optional<TorusSize> smallest_solvable_torus(const WangSet& ws, int max_side) {
    std::optional<TorusSize> best;
    for (int area = 1; area <= max_side * max_side && !best; ++area)
        for (int w = 1; w <= max_side; ++w) {
            if (area % w || area / w > max_side) continue;
            if (wang_torus_solve(ws, w, area / w)) {
                best = TorusSize{w, area / w};
                break;
            }
        }
    return best;
}

}  // namespace ctile
