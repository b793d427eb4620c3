#pragma once

// Executable forms of the construction's local lemmas, checked on concrete cells.

#include <vector>

#include "compiler.hpp"
#include "solver.hpp"

namespace ctile {

// ---- side-code compatibility against geometry ----

struct PairGeometry {
    bool overlap = false;
    std::vector<Polyomino> gaps;  // connected components of the uncovered part between the two squares
};

// Upper square at unit (0,1) with SE code s, lower square at unit (0,0) with NW code t.
inline PairGeometry realize_pair(SideCode s, SideCode t) {
    UnitSpec up{0, 1, {std::nullopt, s}};
    UnitSpec lo{0, 0, {t, std::nullopt}};
    Polyomino a = realize_units(std::span<const UnitSpec>(&up, 1));
    Polyomino b = realize_units(std::span<const UnitSpec>(&lo, 1));
    PairGeometry g;
    g.overlap = overlaps(a, b);
    if (g.overlap) return g;
    UnitSpec pa{0, 1, {}}, pb{0, 0, {}};
    Polyomino env = unite(realize_units(std::span<const UnitSpec>(&pa, 1)), realize_units(std::span<const UnitSpec>(&pb, 1)));
    g.gaps = components(subtract(env, unite(a, b)));
    return g;
}

// Tiny filler cells that fill spot `x` of the contact above unit (u,v).
inline Polyomino filler_at(int u, int v, int x) {
    return tiny_filler().translated(filler_offset(nw_row_center(u, v, x)));
}

struct PairVerdict {
    SideCode s, t;
    bool compatible_says = false;
    bool geometry_fits = false;
    bool fillers_match = true;
    bool agrees() const { return compatible_says == geometry_fits && fillers_match; }
};

inline PairVerdict check_pair(SideCode s, SideCode t) {
    PairVerdict v{s, t, compatible(s, t), false, true};
    PairGeometry g = realize_pair(s, t);
    v.geometry_fits = !g.overlap;
    if (v.geometry_fits && v.compatible_says) {
        std::vector<Polyomino> expect;
        for (FillerSpot f : filler_needs(s, t)) expect.push_back(filler_at(0, 0, f.index));
        auto by_first = [](const Polyomino& a, const Polyomino& b) { return detail::run_less(a.runs()[0], b.runs()[0]); };
        std::sort(expect.begin(), expect.end(), by_first);
        std::sort(g.gaps.begin(), g.gaps.end(), by_first);
        v.fillers_match = expect == g.gaps;
    }
    return v;
}

// ---- no two tiny fillers touch ----

// A cell covered by a big piece belongs to one of its order-13 level-2 squares,
// decorated on at most one side; these five shapes plus the filler are the local pieces.
inline std::vector<Polyomino> local_pieces() {
    std::vector<Polyomino> out{tiny_filler()};
    const auto& var = decorated_variants();
    for (const auto& r : var.runs) out.push_back(Polyomino::from_runs(r));
    return out;
}

// cells within Chebyshev distance `radius` of p, excluding p
inline Polyomino halo(const Polyomino& p, int radius) {
    std::vector<Run> rs;
    for (const Run& r : p.runs())
        for (int dy = -radius; dy <= radius; ++dy) rs.push_back({r.y + dy, r.x0 - radius, r.x1 + radius});
    return subtract(Polyomino::from_runs_lenient(std::move(rs)), p);
}

inline bool edge_adjacent(const Polyomino& a, const Polyomino& b) {
    for (Vec d : {Vec{1, 0}, Vec{-1, 0}, Vec{0, 1}, Vec{0, -1}})
        if (overlaps(a.translated(d), b)) return true;
    return false;
}

struct AdjacentFillerCase {
    Vec offset;
    SearchStatus status;
    std::uint64_t nodes;
};

// Every placement of a second filler touching the first along an edge, each followed by a search
// for a local cover of the cells around the pair. The lemma holds when every search is Unsolvable.
inline std::vector<AdjacentFillerCase> adjacent_filler_cases(int radius, SolveConfig cfg = {}) {
    Polyomino f = tiny_filler();
    auto b = f.bounds();
    int w = b.xmax - b.xmin + 1, h = b.ymax - b.ymin + 1;
    auto pieces = local_pieces();
    std::vector<AdjacentFillerCase> out;
    for (int dy = -h; dy <= h; ++dy)
        for (int dx = -w; dx <= w; ++dx) {
            Polyomino g = f.translated({dx, dy});
            if (overlaps(f, g) || !edge_adjacent(f, g)) continue;
            Polyomino pair = union_disjoint({f, g});
            Region r = Region::make_window(halo(pair, radius), true);
            r.blocked = pair;
            auto res = solve_exact_cover(pieces, r, cfg);
            out.push_back({{dx, dy}, res.status, res.nodes});
        }
    return out;
}

}  // namespace ctile
