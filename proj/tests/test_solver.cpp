#include <gtest/gtest.h>

#include <regex>
#include <sstream>

#include "convextile/bn.hpp"
#include "convextile/lemmas.hpp"
#include "convextile/render.hpp"

using namespace ctile;

namespace {
Polyomino unit() { return Polyomino::rect(1, 1); }
}  // namespace

TEST(Solve, UnitCellsFillSquare) {
    auto res = solve_exact_cover({unit()}, Region::make_window(Polyomino::rect(2, 2)));
    ASSERT_EQ(res.status, SearchStatus::Solved);
    EXPECT_EQ(res.placements.size(), 4u);
    EXPECT_TRUE(verify_tiling({unit()}, res.placements, Region::make_window(Polyomino::rect(2, 2))).clean());
}

TEST(Solve, FillerFootprint) {
    auto f = tiny_filler();
    auto res = solve_exact_cover({f}, Region::make_window(f.translated({4, -7})));
    ASSERT_EQ(res.status, SearchStatus::Solved);
    ASSERT_EQ(res.placements.size(), 1u);
    EXPECT_EQ(res.placements[0].offset, (Vec{4, -7}));
}

TEST(Solve, FillerToriUnsolvable) {
    auto f = tiny_filler();
    EXPECT_EQ(solve_exact_cover({f}, Region::make_torus({6, 0}, {0, 9})).status, SearchStatus::Unsolvable);
    // areas 51 and 102 over a spread of lattice shapes
    for (auto [a, b] : std::vector<std::pair<Vec, Vec>>{{{51, 0}, {0, 1}}, {{17, 0}, {5, 3}}, {{17, 0}, {8, 6}}, {{34, 0}, {11, 3}},
                                                      {{51, 0}, {20, 2}}, {{102, 0}, {37, 1}}, {{12, 5}, {-3, 7}}})
        EXPECT_EQ(solve_exact_cover({f}, Region::make_torus(a, b)).status, SearchStatus::Unsolvable) << a.x << "," << a.y;
}

TEST(Solve, TorusOfSquares) {
    auto d = level2(3);
    auto res = solve_exact_cover({d}, Region::make_torus(lattice_i(3) * 2, lattice_j(3) * 3));
    ASSERT_EQ(res.status, SearchStatus::Solved);
    EXPECT_EQ(res.placements.size(), 6u);
    EXPECT_TRUE(verify_tiling({d}, res.placements, Region::make_torus(lattice_i(3) * 2, lattice_j(3) * 3)).clean());
}

TEST(Solve, NodeLimitIsDistinct) {
    SolveConfig cfg;
    cfg.node_limit = 3;
    auto res = solve_exact_cover({unit(), Polyomino::rect(2, 1)}, Region::make_window(Polyomino::rect(8, 8)), cfg);
    EXPECT_EQ(res.status, SearchStatus::ResourceExhausted);
}

TEST(Solve, SolutionsVerifyAndMonotone) {
    std::vector<Polyomino> small{Polyomino::rect(2, 1), Polyomino::rect(1, 2)};
    std::vector<Polyomino> more = small;
    more.push_back(Polyomino::from_cells({Cell{0, 0}, Cell{1, 0}, Cell{0, 1}}));
    for (int w = 1; w <= 5; ++w)
        for (int h = 1; h <= 4; ++h) {
            Region r = Region::make_window(Polyomino::rect(w, h));
            auto a = solve_exact_cover(small, r), b = solve_exact_cover(more, r);
            if (a.status == SearchStatus::Solved) {
                EXPECT_TRUE(verify_tiling(small, a.placements, r).clean());
                EXPECT_EQ(b.status, SearchStatus::Solved);
            }
            if (b.status == SearchStatus::Solved) EXPECT_TRUE(verify_tiling(more, b.placements, r).clean());
            EXPECT_EQ(a.status == SearchStatus::Solved, w * h % 2 == 0);
        }
}

TEST(Solve, BoundaryOpenAndBlocked) {
    Region r = Region::make_window(Polyomino::rect(3, 1), true);
    r.blocked = Polyomino::rect(1, 1, {1, 0});
    auto res = solve_exact_cover({Polyomino::rect(1, 2)}, r);
    ASSERT_EQ(res.status, SearchStatus::Solved);
    EXPECT_EQ(res.placements.size(), 2u);
    for (const auto& p : res.placements) EXPECT_NE(p.offset.x, 1);
}

TEST(Verify, Violations) {
    Region r = Region::make_window(Polyomino::rect(2, 2));
    std::vector<Placement> four{{0, {0, 0}}, {0, {1, 0}}, {0, {0, 1}}, {0, {1, 1}}};
    EXPECT_TRUE(verify_tiling({unit()}, four, r).clean());
    auto dup = four;
    dup.push_back({0, {0, 0}});
    auto rep = verify_tiling({unit()}, dup, r);
    EXPECT_EQ(rep.double_covered, Polyomino::rect(1, 1));
    auto out = four;
    out.back().offset = {5, 5};
    rep = verify_tiling({unit()}, out, r);
    EXPECT_EQ(rep.uncovered, Polyomino::rect(1, 1, {1, 1}));
    EXPECT_EQ(rep.outside, Polyomino::rect(1, 1, {5, 5}));
    Region open = Region::make_window(Polyomino::rect(2, 2), true);
    EXPECT_TRUE(verify_tiling({unit()}, out, open).outside.empty());
    EXPECT_EQ(verify_tiling({unit()}, {{3, {0, 0}}}, r).bad_pieces, std::vector<std::size_t>{3});
}

TEST(Refine, PlainUnits) {
    AbstractTile plain = make_strip("plain", TileClass::Locator, 1, 1);
    std::vector<AbstractTile> ts{plain};
    auto at_origin = refine(ts, {{0, {0, 0}}}, {Unit{0, 0}});
    ASSERT_EQ(at_origin.size(), 1u);
    EXPECT_EQ(at_origin[0].offset, (Vec{0, 0}));
    EXPECT_EQ(at_origin[0].piece, 1u);
    auto shifted = refine(ts, {{0, {1, 0}}}, {Unit{1, 0}});
    EXPECT_EQ(shifted[0].offset, (Vec{286, 264}));
    EXPECT_THROW(refine(ts, {{0, {0, 0}}, {0, {0, 0}}}, {Unit{0, 0}}), IncompatibleError);
}

TEST(Refine, MarkerSelectorContact) {
    AbstractTile lo = make_strip("lo", TileClass::Locator, 1, 1), hi = make_strip("hi", TileClass::Encoder, 1, 1);
    lo.nw[{0, 0}] = code_selector;
    hi.se[{0, 0}] = code_marker;
    std::vector<AbstractTile> ts{lo, hi};
    std::vector<AbstractPlacement> pl{{0, {0, 0}}, {1, {0, 1}}};
    UnitSet w{{0, 0}, {0, 1}};
    auto placed = refine(ts, pl, w);
    EXPECT_EQ(placed.size(), 2 + filler_needs(code_marker, code_selector).size());
    std::vector<Polyomino> pieces{tiny_filler(), realize(lo), realize(hi)};
    EXPECT_TRUE(verify_tiling(pieces, placed, Region::make_window(unit_cells(w), true)).clean());
}

TEST(SolFormat, RoundTrip) {
    std::vector<std::string> names{"unit", "domino"};
    std::vector<Placement> pl{{1, {-3, 4}}, {0, {0, 0}}};
    std::ostringstream os;
    write_sol(os, names, pl);
    EXPECT_EQ(os.str(), "piece domino -3 4\npiece unit 0 0\n");
    std::istringstream is(os.str());
    auto back = read_sol(is, names);
    ASSERT_EQ(back.size(), 2u);
    EXPECT_EQ(back[0].piece, 1u);
    EXPECT_EQ(back[0].offset, (Vec{-3, 4}));
    std::istringstream bad("piece tromino 0 0\n");
    EXPECT_THROW(read_sol(bad, names), FormatError);
}

// ---- local lemmas ----

TEST(Lemmas, PairChecks) {
    auto v = check_pair(code_marker, code_selector);
    EXPECT_TRUE(v.compatible_says);
    EXPECT_TRUE(v.agrees());
    auto w = check_pair(code_marker, code_marker);
    EXPECT_FALSE(w.compatible_says);
    EXPECT_FALSE(w.geometry_fits);
    EXPECT_TRUE(check_pair(code_bit0, code_a_link).agrees());
    EXPECT_TRUE(check_pair(code_bit1, code_a_link).agrees());
}

TEST(Lemmas, HaloAndAdjacency) {
    auto h = halo(unit(), 1);
    EXPECT_EQ(h.size(), 8);
    EXPECT_TRUE(edge_adjacent(unit(), Polyomino::rect(1, 1, {1, 0})));
    EXPECT_FALSE(edge_adjacent(unit(), Polyomino::rect(1, 1, {1, 1})));
    EXPECT_EQ(local_pieces().size(), 6u);
}

TEST(Lemmas, AdjacentFillersImpossible) {
    auto cases = adjacent_filler_cases(1);
    EXPECT_FALSE(cases.empty());
    for (const auto& c : cases) EXPECT_EQ(c.status, SearchStatus::Unsolvable) << c.offset.x << "," << c.offset.y;
}

// ---- render ----

TEST(Render, SingleCell) {
    auto svg = render_svg({ShapeItem{unit(), TileClass::Locator, false, ""}}, {});
    std::regex rect("<rect ");
    EXPECT_EQ(std::distance(std::sregex_iterator(svg.begin(), svg.end(), rect), std::sregex_iterator()), 1);
    EXPECT_EQ(svg.find("<path"), std::string::npos);
}

TEST(Render, FillerOutlineFollowsBoundaryWord) {
    auto f = tiny_filler();
    auto svg = render_svg({ShapeItem{f, TileClass::Filler, true, "filler"}}, {Palette::Paper, 3});
    auto from = svg.find("d=\"M"), to = svg.find("z\"", from);
    ASSERT_NE(from, std::string::npos);
    std::string d = svg.substr(from, to - from);
    auto steps = std::count(d.begin(), d.end(), 'h') + std::count(d.begin(), d.end(), 'v');
    EXPECT_EQ(static_cast<std::size_t>(steps), boundary_word(f).size());
    EXPECT_NE(svg.find("#bf0040"), std::string::npos);
}

TEST(Render, AssemblyClassesAndDeterminism) {
    auto ts = compile(example_wang_set(), {false}).abstract_tiles();
    std::vector<AbstractPlacement> pl{{0, {0, 0}}, {1, {0, 3}}, {3, {0, -3}}};
    UnitSet all;
    for (const auto& p : pl)
        for (Unit x : ts[p.tile].units) all.insert(x + p.offset);
    AssemblyItem a{ts, pl, verify_assembly(ts, pl, all).filler_positions};
    auto svg = render_svg({a, ShapeItem{tiny_filler(), TileClass::Filler, true, ""}}, {});
    for (const char* cls : {"class=\"locator\"", "class=\"encoder\"", "class=\"linker\"", "class=\"filler\""})
        EXPECT_NE(svg.find(cls), std::string::npos) << cls;
    EXPECT_EQ(svg, render_svg({a, ShapeItem{tiny_filler(), TileClass::Filler, true, ""}}, {}));
}

TEST(Render, HoleFallsBackToCells) {
    auto ring = subtract(Polyomino::rect(3, 3), Polyomino::rect(1, 1, {1, 1}));
    auto svg = render_svg({ShapeItem{ring, TileClass::Locator, false, ""}}, {});
    std::regex rect("<rect ");
    EXPECT_EQ(std::distance(std::sregex_iterator(svg.begin(), svg.end(), rect), std::sregex_iterator()), 8);
}
