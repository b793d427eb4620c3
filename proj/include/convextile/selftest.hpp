#pragma once

// Acceptance suite over the built-in three-tile example set. Shared by the acceptance
// binary and `convextile selftest`.

#include <chrono>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bn.hpp"
#include "lemmas.hpp"
#include "pattern.hpp"

namespace ctile::acceptance {

struct Outcome {
    bool pass = false;
    std::string detail;
};

struct Criterion {
    int id;
    std::string name;
    double budget_seconds;  // 0 means no time bound
    std::function<Outcome()> run;
};

struct Result {
    int id;
    std::string name;
    bool pass;
    double seconds;
    std::string detail;
};

namespace detail {

// collects failed expectations; a criterion passes when none failed
struct Checks {
    std::ostringstream notes;
    int failed = 0;
    void expect(bool ok, const std::string& what) {
        if (!ok) {
            ++failed;
            notes << "FAILED " << what << "; ";
        }
    }
    Outcome done(const std::string& summary) const {
        return {failed == 0, failed == 0 ? summary : notes.str() + summary};
    }
};

inline const TileSet7& realized_example() {
    static const TileSet7 ts = compile(example_wang_set());
    return ts;
}
inline const TileSet7& abstract_example() {
    static const TileSet7 ts = compile(example_wang_set(), {false});
    return ts;
}

inline int mod(int a, int m) { return ((a % m) + m) % m; }

// Smallest torus solution of the example set, repeated over the plane.
inline std::function<int(int, int)> periodic_tiling(const WangGrid& g) {
    return [g](int x, int y) {
        const auto& row = g[static_cast<std::size_t>(mod(y, static_cast<int>(g.size())))];
        return row[static_cast<std::size_t>(mod(x, static_cast<int>(row.size())))];
    };
}

inline const WangGrid& example_torus_solution() {
    static const WangGrid g = [] {
        auto size = smallest_solvable_torus(example_wang_set(), 4);
        if (!size) throw DomainError("example set has no small torus solution");
        return *wang_torus_solve(example_wang_set(), size->w, size->h);
    }();
    return g;
}

struct PatternWindow {
    std::vector<PatternItem> items;
    std::vector<AbstractPlacement> placements;
    UnitSet window;
    AssemblyReport report;
};

inline PatternWindow pattern_window(const std::function<int(int, int)>& tile_at) {
    const TileSet7& ts = abstract_example();
    PatternWindow p;
    p.items = rigid_pattern(ts, -3, 3, -3, 3, tile_at);
    p.placements = placements_of(p.items);
    p.window = rect_window({-2, -15}, {50, 17});
    p.report = verify_assembly(ts.abstract_tiles(), p.placements, p.window);
    return p;
}

inline bool is_link(SideCode c) { return c == code_a_link || c == code_b_link; }
inline int link_bit(SideCode c) { return c == code_a_link ? 0 : 1; }

}  // namespace detail

inline Outcome convexity_audit() {
    detail::Checks c;
    TileSet7 ts = compile(example_wang_set());
    c.expect(ts.pieces.size() == 7, "exactly 7 pieces");
    int convex = 0;
    for (const auto& p : ts.pieces) {
        bool ok = is_orthogonally_convex(p.shape) && is_connected(p.shape);
        c.expect(ok, p.name + " convex and connected");
        convex += ok;
    }
    const auto& lower = ts.piece("locator-lower").shape;
    Polyomino glued = union_disjoint({lower, ts.piece("locator-dark").shape.translated(unit_offset(ts.dark_offset.u, ts.dark_offset.v)),
                                      ts.piece("locator-upper").shape.translated(unit_offset(ts.upper_offset.u, ts.upper_offset.v))});
    c.expect(is_connected(glued), "glued locator connected");
    c.expect(!is_orthogonally_convex(glued), "glued locator not orthogonally convex");
    return c.done(std::to_string(convex) + "/7 orthogonally convex and connected; glued locator " +
                  std::to_string(glued.size()) + " cells, not convex");
}

inline Outcome size_formulas() {
    detail::Checks c;
    auto dims = [](const AbstractTile& t) {
        int w = 0, h = 0;
        for (Unit x : t.units) w = std::max(w, x.u + 1), h = std::max(h, x.v + 1);
        bool full = static_cast<int>(t.units.size()) == w * h;
        return std::pair{full ? h : -1, w};
    };
    auto check_set = [&](const WangSet& ws, std::pair<int, int> enc, int padding, int gap, int loc) {
        const TileSet7 ts = compile(ws, {false});
        auto tiles = ts.abstract_tiles();
        const Formulas& f = ts.formulas;
        std::string tag = "n=" + std::to_string(f.n) + " m=" + std::to_string(f.m) + ": ";
        c.expect(dims(tiles[kEncoder]) == enc, tag + "encoder dimensions");
        c.expect(f.encoder_length == 2 * f.segment_length + f.padding_length, tag + "encoder length identity");
        c.expect(dims(tiles[kLower]) == std::pair{3, loc} && dims(tiles[kUpper]) == std::pair{3, loc}, tag + "light locator parts");
        c.expect(dims(tiles[kDark]) == std::pair{3, 1}, tag + "dark locator part");
        c.expect(dims(tiles[kALinker]) == std::pair{3, 1} && dims(tiles[kBLinker]) == std::pair{3, 1}, tag + "linkers");
        c.expect(f.excavation_length < f.segment_length, tag + "excavation shorter than a segment");

        // plain run on the encoder's SE row is the padding segment
        const AbstractTile& e = tiles[kEncoder];
        int run = 0, best = 0;
        for (int u = 0; u < f.encoder_length; ++u) {
            run = e.se_code({u, 0}) == code_plain ? run + 1 : 0;
            best = std::max(best, run);
        }
        c.expect(best == padding, tag + "padding length " + std::to_string(best));

        // the two portions encoding one tile, read off between markers
        std::vector<std::pair<int, int>> portions;
        for (int u = 0; u < f.encoder_length; ++u) {
            auto code = e.se_code({u, 0});
            if (!code || !color_bit(*code)) continue;
            if (!portions.empty() && portions.back().second == u - 1)
                portions.back().second = u;
            else
                portions.push_back({u, u});
        }
        c.expect(static_cast<int>(portions.size()) == 2 * f.n, tag + "one portion per tile and segment");
        for (int k = 0; k + f.n < static_cast<int>(portions.size()); ++k) {
            int apart = portions[k + f.n].first - portions[k].second - 1;
            c.expect(apart == gap && apart == f.portion_gap && apart == f.locator_length,
                     tag + "portion gap " + std::to_string(apart));
        }
        return ts.formulas;
    };
    Formulas f = check_set(example_wang_set(), {3, 27}, 7, 15, 15);
    Formulas g = check_set(WangSet{{{0, 0, 0, 0}}, 1}, {3, 7}, 1, 3, 3);
    c.expect(g.t == 1 && g.excavation_length == 1, "degenerate t and excavation");
    return c.done("encoder 3x" + std::to_string(f.encoder_length) + ", padding 3x" + std::to_string(f.padding_length) +
                  ", portions " + std::to_string(f.portion_gap) + " apart, locator 3x" + std::to_string(f.locator_length) +
                  ", 3x" + std::to_string(f.locator_length) + ", 3x1; degenerate encoder 3x" +
                  std::to_string(g.encoder_length) + " padding " + std::to_string(g.padding_length));
}

inline Outcome fit_suite() {
    detail::Checks c;
    Cell s{tables::se_center_x, tables::se_center_y}, t{tables::nw_center_x, tables::nw_center_y};  // two order-13 squares meeting along one NW/SE edge
    auto sq = [](Cell at, Side side, DecorationKind k) { return apply_decoration(level2(13, at), side, k); };
    Polyomino env = unite(level2(13, s), level2(13, t));
    Polyomino sb = sq(s, Side::SE, DecorationKind::Bump), sd = sq(s, Side::SE, DecorationKind::Dent);
    Polyomino tb = sq(t, Side::NW, DecorationKind::Bump), td = sq(t, Side::NW, DecorationKind::Dent);
    c.expect(!overlaps(sb, td), "bump and dent disjoint");
    auto bump_gap = subtract(env, unite(sb, td));
    c.expect(bump_gap.empty(), "bump fills dent");
    Polyomino gap = subtract(env, unite(sd, td));
    c.expect(gap.size() == 51, "dent-dent gap has 51 cells");
    c.expect(gap.normalized() == tiny_filler(), "dent-dent gap is the tiny filler");
    c.expect(overlaps(sb, tb), "bump-bump overlap");
    return c.done("bump/dent gap " + std::to_string(bump_gap.size()) + ", dent/dent gap " + std::to_string(gap.size()) +
                  " cells = tiny filler, bump/bump overlap " + std::to_string(intersect(sb, tb).size()) + " cells");
}

inline Outcome bn_criterion() {
    detail::Checks c;
    double slowest = 0;
    auto verdict = [&](const Polyomino& p) {
        auto t0 = std::chrono::steady_clock::now();
        auto v = is_translational_monotile(p);
        slowest = std::max(slowest, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
        if (v.tiles) c.expect(v.witness && check_factorization(boundary_word(p), *v.witness), "witness valid");
        return v.tiles;
    };
    c.expect(!verdict(tiny_filler()), "tiny filler DOES-NOT-TILE");
    c.expect(verdict(level2(13)), "order-13 square TILES");
    int rects = 0;
    for (int w = 1; w <= 4; ++w)
        for (int h = 1; h <= 4; ++h, ++rects) c.expect(verdict(Polyomino::rect(w, h)), std::to_string(w) + "x" + std::to_string(h) + " TILES");
    c.expect(slowest < 1.0, "each verdict under 1 s");
    std::ostringstream s;
    s << "filler DOES-NOT-TILE, order-13 square TILES, " << rects << " rectangles TILE; slowest " << slowest << " s";
    return c.done(s.str());
}

inline Outcome pair_equivalence() {
    detail::Checks c;
    auto codes = detail::abstract_example().emitted_codes();
    int agree = 0, total = 0, compatible_pairs = 0;
    for (SideCode s : codes)
        for (SideCode t : codes) {
            auto v = check_pair(s, t);
            ++total;
            agree += v.agrees();
            compatible_pairs += v.compatible_says;
            c.expect(v.agrees(), s.str() + " over " + t.str());
        }
    return c.done(std::to_string(agree) + "/" + std::to_string(total) + " ordered pairs agree (" +
                  std::to_string(compatible_pairs) + " compatible) over " + std::to_string(codes.size()) + " emitted codes");
}

inline Outcome adjacent_fillers() {
    detail::Checks c;
    auto cases = adjacent_filler_cases(1);
    int unsolvable = 0;
    for (const auto& k : cases) {
        unsolvable += k.status == SearchStatus::Unsolvable;
        c.expect(k.status == SearchStatus::Unsolvable,
                 "offset (" + std::to_string(k.offset.x) + "," + std::to_string(k.offset.y) + ") unsolvable");
    }
    c.expect(!cases.empty(), "some adjacent offsets exist");
    // control: the same search around a lone filler must succeed
    Polyomino f = tiny_filler();
    Region r = Region::make_window(halo(f, 1), true);
    r.blocked = f;
    auto control = solve_exact_cover(local_pieces(), r);
    c.expect(control.status == SearchStatus::Solved, "lone filler surroundings solvable");
    return c.done(std::to_string(unsolvable) + "/" + std::to_string(cases.size()) +
                  " edge-adjacent filler offsets unsolvable; lone filler control solved");
}

inline Outcome glue_uniqueness() {
    detail::Checks c;
    SideCode lm = "{|L,M}"_code;
    std::vector<SideCode> hits;
    for (SideCode s : detail::abstract_example().emitted_codes())
        if ((s.right & lm.right) == lm.right) hits.push_back(s);
    c.expect(hits == std::vector<SideCode>{code_glue1, code_glue2} || hits == std::vector<SideCode>{code_glue2, code_glue1},
             "only the two glue codes");
    std::string list;
    for (SideCode s : hits) list += (list.empty() ? "" : " ") + s.str();
    return c.done("codes with {L,M} in the right set: " + list);
}

inline Outcome rigid_window() {
    detail::Checks c;
    auto p = detail::pattern_window(detail::periodic_tiling(detail::example_torus_solution()));
    const auto& rep = p.report;
    c.expect(rep.valid(), "assembly valid");
    auto touches = [&](const AbstractPlacement& pl) {
        for (Unit x : detail::abstract_example().abstract_tiles()[pl.tile].units)
            if (p.window.contains(x + pl.offset)) return true;
        return false;
    };
    int locators = 0, encoders = 0, linkers = 0;
    for (const auto& pl : p.placements) {
        if (!touches(pl)) continue;
        locators += pl.tile == kDark;
        encoders += pl.tile == kEncoder;
        linkers += pl.tile == kALinker || pl.tile == kBLinker;
    }
    c.expect(locators >= 7, "at least 7 locators");
    c.expect(encoders >= 4, "at least 4 encoders");
    c.expect(linkers > 0 && !rep.filler_positions.empty(), "linkers and fillers present");
    int selector_contacts = 0;
    for (const auto& k : rep.contacts) {
        bool up_sel = k.upper_se == code_selector, lo_sel = k.lower_nw == code_selector;
        if (!up_sel && !lo_sel) continue;
        ++selector_contacts;
        c.expect((up_sel ? k.lower_nw : k.upper_se) == code_marker, "selector contact against a marker at " + describe(k));
    }
    c.expect(selector_contacts > 0, "selector contacts present");
    for (SideCode s : detail::abstract_example().emitted_codes()) {
        bool docks = compatible(code_marker, s) && compatible(s, code_marker);
        bool sel_docks = compatible(code_selector, s) && compatible(s, code_selector);
        c.expect(sel_docks == (s == code_marker), "selector accepts only the marker (" + s.str() + ")");
        if (s == code_selector) c.expect(docks, "marker accepts the selector");
    }
    return c.done("window " + std::to_string(p.window.size()) + " units: " + std::to_string(locators) + " locators, " +
                  std::to_string(encoders) + " encoders, " + std::to_string(linkers) + " linkers, " +
                  std::to_string(rep.filler_positions.size()) + " fillers, " + std::to_string(selector_contacts) +
                  " selector contacts all against markers; 0 violations");
}

inline Outcome refinement() {
    detail::Checks c;
    const TileSet7& ts = detail::realized_example();
    auto tiles = ts.abstract_tiles();
    auto p = detail::pattern_window(detail::periodic_tiling(detail::example_torus_solution()));
    auto touching = [&](const UnitSet& w) {
        std::vector<AbstractPlacement> out;
        for (const auto& pl : p.placements)
            for (Unit x : tiles[pl.tile].units)
                if (w.contains(x + pl.offset)) {
                    out.push_back(pl);
                    break;
                }
        return out;
    };
    // the selector-marker contact whose 3x3 neighbourhood meets the most placements
    std::optional<Unit> centre;
    std::size_t busiest = 0;
    for (const auto& k : p.report.contacts) {
        bool dock = (k.upper_se == code_selector && k.lower_nw == code_marker) ||
                    (k.upper_se == code_marker && k.lower_nw == code_selector);
        if (!dock || !p.window.contains(k.lower)) continue;
        std::size_t n = touching(rect_window(k.lower - Unit{1, 1}, k.lower + Unit{1, 1})).size();
        if (n > busiest) busiest = n, centre = k.lower;
    }
    c.expect(centre.has_value(), "selector-marker contact found");
    if (!centre) return c.done("");
    UnitSet window = rect_window(*centre - Unit{1, 1}, *centre + Unit{1, 1});
    auto local = touching(rect_window(*centre - Unit{2, 2}, *centre + Unit{2, 2}));
    std::vector<Polyomino> pieces;
    for (const auto& piece : ts.pieces) pieces.push_back(piece.shape);
    auto placed = refine(tiles, local, window);
    Polyomino cells = unit_cells(window);
    auto rep = verify_tiling(pieces, placed, Region::make_window(cells, true));
    c.expect(rep.clean(), "refined window tiles cleanly (double " + std::to_string(rep.double_covered.size()) +
                              ", uncovered " + std::to_string(rep.uncovered.size()) + ")");
    std::size_t fillers = 0;
    for (const auto& pl : placed) fillers += pl.piece == 0;
    c.expect(fillers > 0, "fillers inserted");
    if (fillers > 0) {
        // without one of its fillers the same window has a hole
        auto missing = placed;
        missing.erase(std::find_if(missing.begin(), missing.end(), [](const Placement& pl) { return pl.piece == 0; }));
        c.expect(verify_tiling(pieces, missing, Region::make_window(cells, true)).uncovered.size() == 51,
                 "dropping a filler leaves a 51-cell hole");
    }
    return c.done("3x3 units around (" + std::to_string(centre->u) + "," + std::to_string(centre->v) + "): " +
                  std::to_string(cells.size()) + " cells, " + std::to_string(placed.size()) + " placements incl. " +
                  std::to_string(fillers) + " fillers, clean");
}

inline Outcome color_matching() {
    detail::Checks c;
    const auto& g = detail::example_torus_solution();
    auto good = detail::pattern_window(detail::periodic_tiling(g));
    c.expect(good.report.valid(), "matched pattern valid");
    int exposures = 0;
    for (const auto& k : good.report.contacts) {
        if (!k.upper_se || !k.lower_nw) continue;
        SideCode a = *k.upper_se, b = *k.lower_nw;
        SideCode link = detail::is_link(a) ? a : b, other = detail::is_link(a) ? b : a;
        if (!detail::is_link(link) || !color_bit(other)) continue;
        ++exposures;
        c.expect(detail::link_bit(link) == *color_bit(other), "linker joins equal bits at " + describe(k));
    }
    c.expect(exposures > 0, "exposure contacts present");

    // one cell swapped to a different tile breaks at least one colour agreement
    auto base = detail::periodic_tiling(g);
    int n = example_wang_set().n();
    auto broken = detail::pattern_window([&](int x, int y) { return x == 1 && y == 0 ? (base(x, y) + 1) % n : base(x, y); });
    int colour_faults = 0;
    for (const auto& k : broken.report.incompatibilities)
        if (k.upper_se && k.lower_nw && (detail::is_link(*k.upper_se) || detail::is_link(*k.lower_nw))) ++colour_faults;
    c.expect(colour_faults > 0, "mismatched pattern reports a linker incompatibility");
    c.expect(broken.report.conflicts.empty(), "mismatch is a code fault, not an overlap");

    for (SideCode link : {code_a_link, code_b_link})
        for (SideCode bit : {code_bit0, code_bit1}) {
            bool equal = detail::link_bit(link) == *color_bit(bit);
            c.expect(compatible(bit, link) == equal && compatible(link, bit) == equal, "linker table " + link.str() + bit.str());
        }
    return c.done(std::to_string(exposures) + " linker/bit contacts all equal-coloured; mismatch yields " +
                  std::to_string(colour_faults) + " incompatibilities; 2x2 linker table exact");
}

inline Outcome wang_oracle() {
    detail::Checks c;
    WangSet ws = example_wang_set();
    auto size = smallest_solvable_torus(ws, 4);
    c.expect(size && size->w == 3 && size->h == 1, "smallest solvable torus is 3x1");
    if (!size) return c.done("");
    const WangGrid& oracle = detail::example_torus_solution();

    const TileSet7& ts = detail::abstract_example();
    const Formulas& f = ts.formulas;
    auto tiles = ts.abstract_tiles();
    Unit R = f.wang_right(), U = f.wang_up();
    Lattice2 torus({size->w * R.u, size->w * R.v}, {size->h * U.u, size->h * U.v});
    auto sol = abstract_solve(tiles, AbstractRegion{torus}, {});
    c.expect(sol.status == SearchStatus::Solved, "abstract torus solvable");

    // read each locator's exposed tile off the encoder docked in it
    WangGrid decoded(static_cast<std::size_t>(size->h), std::vector<int>(static_cast<std::size_t>(size->w), -1));
    std::optional<Unit> first;
    auto same = [&](Unit a, Unit b) { return torus.reduce({a.u - b.u, a.v - b.v}) == Cell{0, 0}; };
    int locators = 0;
    for (const auto& pl : sol.placements) {
        if (pl.tile != kLower) continue;
        ++locators;
        if (!first) first = pl.offset;
        std::optional<std::pair<int, int>> cell;
        for (int y = 0; y < size->h; ++y)
            for (int x = 0; x < size->w; ++x)
                if (same(pl.offset, *first + Unit{x * R.u + y * U.u, x * R.v + y * U.v})) cell = {x, y};
        c.expect(cell.has_value(), "locator on the rigid lattice");
        if (!cell) continue;
        for (const auto& e : sol.placements) {
            if (e.tile != kEncoder) continue;
            for (int k = 0; k < f.n; ++k)
                if (same(e.offset, encoder_origin(f, pl.offset, k))) decoded[cell->second][cell->first] = k;
        }
    }
    c.expect(locators == size->w * size->h, "one locator per Wang cell");
    c.expect(check_torus(ws, decoded), "decoded pattern is a Wang torus tiling");
    bool shifted = false;
    for (int dy = 0; dy < size->h; ++dy)
        for (int dx = 0; dx < size->w; ++dx) {
            bool eq = true;
            for (int y = 0; y < size->h; ++y)
                for (int x = 0; x < size->w; ++x)
                    eq = eq && decoded[y][x] == oracle[(y + dy) % size->h][(x + dx) % size->w];
            shifted = shifted || eq;
        }
    c.expect(shifted, "decoded pattern equals the oracle up to shift");

    WangSet bad = ws;
    bad.tiles[2].right = 2;
    c.expect(!wang_torus_solve(bad, size->w, size->h), "altered set unsolvable on the same torus");
    TileSet7 bts = compile(bad, {false});
    auto bsol = abstract_solve(bts.abstract_tiles(), AbstractRegion{torus}, {});
    c.expect(bsol.status == SearchStatus::Unsolvable, "altered set has no abstract assembly");
    std::string pattern;
    for (const auto& row : decoded)
        for (int k : row) pattern += std::to_string(k);
    return c.done("torus 3x1, decoded tiles " + pattern + " (" + std::to_string(sol.nodes) + " nodes); altered set Unsolvable after " +
                  std::to_string(bsol.nodes) + " nodes");
}

inline const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> all{
        {1, "convexity audit", 10, convexity_audit},
        {2, "size formulas", 0, size_formulas},
        {3, "geometry fit suite", 0, fit_suite},
        {4, "boundary-word tiling criterion", 0, bn_criterion},
        {5, "side-code compatibility equals geometry", 0, pair_equivalence},
        {6, "no two tiny fillers adjacent", 60, adjacent_fillers},
        {7, "glue uniqueness", 0, glue_uniqueness},
        {8, "rigid-pattern window", 60, rigid_window},
        {9, "refinement soundness at cell scale", 300, refinement},
        {10, "end-to-end colour matching", 0, color_matching},
        {11, "Wang oracle cross-check", 600, wang_oracle},
    };
    return all;
}

inline Result run(const Criterion& k) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = k.run();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (k.budget_seconds > 0 && s >= k.budget_seconds) {
        o.pass = false;
        o.detail += "; over the " + std::to_string(static_cast<int>(k.budget_seconds)) + " s budget";
    }
    return {k.id, k.name, o.pass, s, o.detail};
}

inline void print(std::ostream& os, const Result& r) {
    std::ostringstream t;
    t.precision(2);
    t << std::fixed << r.seconds;
    os << (r.pass ? "PASS" : "FAIL") << "  [" << r.id << "] " << r.name << " (" << t.str() << " s): " << r.detail << '\n';
}

// Runs the selected criteria (all when `ids` is empty); returns the number of failures.
inline int run_all(std::ostream& os, const std::vector<int>& ids = {}) {
    int failures = 0;
    for (const auto& k : criteria()) {
        if (!ids.empty() && std::find(ids.begin(), ids.end(), k.id) == ids.end()) continue;
        Result r = run(k);
        print(os, r);
        os.flush();
        failures += !r.pass;
    }
    if (failures)
        os << "acceptance: " << failures << " criteria failed\n";
    else
        os << "acceptance: all criteria passed\n";
    return failures;
}

}  // namespace ctile::acceptance
