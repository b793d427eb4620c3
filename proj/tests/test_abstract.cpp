#include <gtest/gtest.h>

#include <bit>
#include <sstream>

#include "convextile/pattern.hpp"

using namespace ctile;

// ---- side-code compatibility ----

TEST(Compatible, Examples) {
    EXPECT_TRUE(compatible("{M|L}"_code, "{L|M}"_code));
    EXPECT_FALSE(compatible("{M|L}"_code, "{M|L}"_code));
    EXPECT_TRUE(compatible("{C|A}"_code, "{A|C}"_code));
    EXPECT_FALSE(compatible("{C|B}"_code, "{A|C}"_code));
}

TEST(Compatible, FormulaOverAllCodes) {
    for (int a = 0; a < 32; ++a)
        for (int b = 0; b < 32; ++b) {
            SideCode s{static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b)};
            SideCode t{static_cast<std::uint8_t>(b), static_cast<std::uint8_t>(a)};
            bool formula = (s.left & ~t.right) == 0 && (t.left & ~s.right) == 0;
            EXPECT_EQ(compatible(s, t), formula);
            EXPECT_EQ(compatible(s, t), compatible(t, s));
        }
}

TEST(FillerNeeds, Examples) {
    EXPECT_TRUE(filler_needs("{|}"_code, "{|}"_code).empty());
    auto f = filler_needs("{|A,B,C,M}"_code, "{|C,M}"_code);
    EXPECT_EQ(f.size(), 6u);
    EXPECT_TRUE(filler_needs("{A,B,C,L,M|}"_code, "{|A,B,C,L,M}"_code).empty());
    EXPECT_THROW(filler_needs("{M|L}"_code, "{M|L}"_code), IncompatibleError);
    EXPECT_EQ(filler_needs("{|}"_code, "{|A,B,C,L,M}"_code).size(), 5u);
}

// ---- wang ----

TEST(Wang, TrivialTori) {
    WangSet one{{{0, 0, 0, 0}}, 1};
    EXPECT_TRUE(wang_torus_solve(one, 1, 1));
    WangSet bad{{{0, 1, 0, 0}}, 2};
    EXPECT_FALSE(wang_torus_solve(bad, 1, 1));
}

TEST(Wang, ExampleSmallestTorus) {
    auto s = smallest_solvable_torus(example_wang_set(), 4);
    ASSERT_TRUE(s);
    EXPECT_EQ(s->w, 3);
    EXPECT_EQ(s->h, 1);
}

TEST(Wang, SolutionsVerifyAndScale) {
    auto ws = example_wang_set();
    for (int w = 1; w <= 4; ++w)
        for (int h = 1; h <= 4; ++h) {
            auto g = wang_torus_solve(ws, w, h);
            if (!g) continue;
            EXPECT_TRUE(check_torus(ws, *g));
            for (int k = 1; k <= 2; ++k)
                for (int l = 1; l <= 2; ++l)
                    if (w * k <= 5 && h * l <= 5) EXPECT_TRUE(wang_torus_solve(ws, w * k, h * l)) << w * k << "x" << h * l;
        }
}

TEST(Wang, CheckTorusRejects) {
    WangGrid g{{0, 0, 0}};
    EXPECT_FALSE(check_torus(example_wang_set(), g));
    EXPECT_TRUE(check_torus(example_wang_set(), WangGrid{{0, 1, 2}}));
}

TEST(Wang, FormatRoundTripAndErrors) {
    std::ostringstream os;
    write_wang(os, example_wang_set());
    std::istringstream is("# comment\n" + os.str());
    auto back = read_wang(is);
    EXPECT_EQ(back.tiles, example_wang_set().tiles);
    EXPECT_EQ(back.m, 4);
    for (const char* bad : {"", "wang 2 4\n0 0 1 3\n", "wang 1 4\n0 0 1\n", "wang 1 2\n0 0 1 3\n", "wang 1 4\n0 0 1 3\n1 1 1 1\n",
                            "wong 1 4\n0 0 0 0\n", "wang 0 4\n"}) {
        std::istringstream in(bad);
        EXPECT_THROW(read_wang(in), FormatError) << bad;
    }
}

// ---- compiler ----

TEST(ColorCode, Examples) {
    EXPECT_EQ(color_code(0, 2), (std::vector<SideCode>{"{C|A}"_code, "{C|A}"_code}));
    EXPECT_EQ(color_code(2, 2), (std::vector<SideCode>{"{C|B}"_code, "{C|A}"_code}));
    EXPECT_EQ(color_code(0, 1), std::vector<SideCode>{"{C|A}"_code});
    EXPECT_THROW(color_code(4, 2), DomainError);
}

TEST(Formulas, Identities) {
    for (int n = 1; n <= 8; ++n)
        for (int m = 1; m <= 20; ++m) {
            WangSet ws;
            ws.m = m;
            ws.tiles.assign(static_cast<std::size_t>(n), WangTile{});
            auto f = Formulas::of(ws);
            EXPECT_EQ(f.encoder_length, (3 * n - 1) * (f.t + 1) + 3);
            EXPECT_EQ(f.encoder_length, 2 * f.segment_length + f.padding_length);
            EXPECT_EQ(f.portion_gap, f.locator_length);
            EXPECT_LT(f.excavation_length, f.segment_length);
            EXPECT_GE(f.t, 1);
            EXPECT_GE(1 << f.t, m);
        }
}

TEST(Encoder, ExampleLayout) {
    auto e = build_encoder(example_wang_set());
    EXPECT_EQ(e.units.size(), 81u);
    EXPECT_TRUE(well_formed(e));
    std::vector<int> markers;
    for (int u = 0; u < 10; ++u)
        if (e.se_code({u, 0}) == code_marker) markers.push_back(u);
    EXPECT_EQ(markers, (std::vector<int>{0, 3, 6, 9}));
    // nothing inside the strip is coded
    for (int u = 0; u < 27; ++u) EXPECT_FALSE(e.nw_code({u, 1}) || e.se_code({u, 1}));
}

TEST(Encoder, ColourRoundTrip) {
    for (const WangSet& ws : {example_wang_set(), WangSet{{{5, 1, 2, 7}, {0, 6, 3, 4}}, 8}, WangSet{{{0, 0, 0, 0}}, 1}}) {
        auto e = build_encoder(ws);
        auto f = Formulas::of(ws);
        auto read = [&](int u0, bool nw) {
            int c = 0;
            for (int b = 0; b < f.t; ++b) {
                auto code = nw ? e.nw_code({u0 + b, 2}) : e.se_code({u0 + b, 0});
                c = 2 * c + color_bit(*code).value();
            }
            return c;
        };
        int second = f.segment_length + f.padding_length;
        for (int k = 0; k < f.n; ++k) {
            int off = k * (f.t + 1) + 1;
            const auto& w = ws.tiles[static_cast<std::size_t>(k)];
            EXPECT_EQ(read(off, false), w.bottom);
            EXPECT_EQ(read(off, true), w.left);
            EXPECT_EQ(read(second + off, false), w.right);
            EXPECT_EQ(read(second + off, true), w.top);
        }
    }
}

TEST(Encoder, Degenerate) {
    auto e = build_encoder(WangSet{{{0, 0, 0, 0}}, 1});
    EXPECT_EQ(e.units.size(), 21u);
    auto f = Formulas::of(WangSet{{{0, 0, 0, 0}}, 1});
    EXPECT_EQ(f.padding_length, 1);
    EXPECT_EQ(f.locator_length, 3);
}

TEST(Linkers, Codes) {
    auto [a, b] = build_linkers();
    EXPECT_EQ(a.units.size(), 3u);
    EXPECT_EQ(b.units.size(), 3u);
    EXPECT_EQ(a.se_code({0, 0}), "{A|C}"_code);
    EXPECT_EQ(a.nw_code({0, 2}), "{A|C}"_code);
    EXPECT_EQ(b.se_code({0, 0}), "{B|C}"_code);
    EXPECT_EQ(b.nw_code({0, 2}), "{B|C}"_code);
}

TEST(Locator, Sizes) {
    auto p = build_locator(example_wang_set());
    EXPECT_EQ(p.lower.units.size(), 45u);
    EXPECT_EQ(p.upper.units.size(), 45u);
    EXPECT_EQ(p.dark.units.size(), 3u);
    EXPECT_EQ(Formulas::of(example_wang_set()).excavation_length, 7);
    for (const auto* t : {&p.lower, &p.dark, &p.upper}) EXPECT_TRUE(well_formed(*t));
    EXPECT_EQ(p.dark.nw_code({0, 2}), code_glue1);
    EXPECT_EQ(p.dark.se_code({0, 0}), code_glue2);
}

TEST(Compile, ExampleAbstract) {
    auto ts = compile(example_wang_set(), {false});
    ASSERT_EQ(ts.pieces.size(), 7u);
    EXPECT_EQ(ts.pieces[0].shape, tiny_filler());
    std::vector<std::size_t> units;
    for (const auto& t : ts.abstract_tiles()) units.push_back(t.units.size());
    EXPECT_EQ(units, (std::vector<std::size_t>{81, 3, 3, 45, 3, 45}));
    for (SideCode c : ts.emitted_codes()) {
        EXPECT_LE(std::popcount(static_cast<unsigned>(c.left)), 4);
        EXPECT_LE(std::popcount(static_cast<unsigned>(c.right)), 4);
    }
}

TEST(Compile, FillerIndependentOfInput) {
    auto ts = compile(WangSet{{{0, 0, 0, 0}}, 1}, {false});
    EXPECT_EQ(ts.piece("tiny-filler").shape, tiny_filler());
    EXPECT_THROW(ts.piece("nope"), DomainError);
}

TEST(Compile, ManifestListsFormulas) {
    std::ostringstream os;
    write_manifest(os, compile(example_wang_set(), {false}));
    EXPECT_NE(os.str().find("encoder_length 27"), std::string::npos);
    EXPECT_NE(os.str().find("locator_length 15"), std::string::npos);
    EXPECT_NE(os.str().find("piece encoder cells 0 units 81"), std::string::npos);
}

// ---- assemblies ----

namespace {

const TileSet7& example() {
    static const TileSet7 ts = compile(example_wang_set(), {false});
    return ts;
}

std::vector<AbstractTile> tiles() { return example().abstract_tiles(); }

UnitSet footprint(const std::vector<AbstractTile>& ts, const std::vector<AbstractPlacement>& pl) {
    UnitSet w;
    for (const auto& p : pl)
        for (Unit x : ts[p.tile].units) w.insert(x + p.offset);
    return w;
}

}  // namespace

TEST(VerifyAssembly, OverlapIsConflict) {
    auto ts = tiles();
    std::vector<AbstractPlacement> pl{{kALinker, {0, 0}}, {kALinker, {0, 0}}};
    auto rep = verify_assembly(ts, pl, footprint(ts, pl));
    EXPECT_FALSE(rep.conflicts.empty());
    EXPECT_FALSE(rep.valid());
}

TEST(VerifyAssembly, MarkerAgainstMarker) {
    auto ts = tiles();
    // second encoder directly above the first: NW markers face SE markers
    std::vector<AbstractPlacement> pl{{kEncoder, {0, 0}}, {kEncoder, {0, 3}}};
    auto rep = verify_assembly(ts, pl, footprint(ts, pl));
    EXPECT_TRUE(rep.conflicts.empty());
    ASSERT_FALSE(rep.incompatibilities.empty());
    bool marker_pair = false;
    for (const auto& c : rep.incompatibilities) marker_pair |= c.upper_se == code_marker && c.lower_nw == code_marker;
    EXPECT_TRUE(marker_pair);
}

TEST(VerifyAssembly, LinkerJoinsEqualBits) {
    // a 3x1 stub whose NW end carries one colour bit, with a linker docked on top
    for (SideCode bit : {code_bit0, code_bit1}) {
        AbstractTile stub = make_strip("stub", TileClass::Encoder, 1);
        stub.nw[{0, 2}] = bit;
        auto [a, b] = build_linkers();
        std::vector<AbstractTile> ts{stub, a, b};
        for (std::size_t link : {1u, 2u}) {
            std::vector<AbstractPlacement> pl{{0, {0, 0}}, {link, {0, 3}}};
            auto rep = verify_assembly(ts, pl, footprint(ts, pl));
            bool equal = (link == 1) == (bit == code_bit0);
            EXPECT_EQ(rep.valid(), equal) << bit.str() << " " << ts[link].name;
            if (equal) EXPECT_EQ(rep.filler_positions.size(), filler_needs(ts[link].se_code({0, 0}).value(), bit).size());
        }
    }
}

TEST(VerifyAssembly, UncoveredListed) {
    auto ts = tiles();
    std::vector<AbstractPlacement> pl{{kALinker, {0, 0}}};
    auto rep = verify_assembly(ts, pl, rect_window({0, 0}, {1, 2}));
    EXPECT_EQ(rep.uncovered.size(), 3u);
    EXPECT_FALSE(rep.valid());
}

TEST(VerifyAssembly, RigidPatternValid) {
    auto ts = tiles();
    auto items = rigid_pattern(example(), -3, 3, -3, 3, [](int x, int) { return ((x % 3) + 3) % 3; });
    auto pl = placements_of(items);
    auto rep = verify_assembly(ts, pl, rect_window({-10, -20}, {50, 20}));
    EXPECT_TRUE(rep.valid());
    EXPECT_FALSE(rep.filler_positions.empty());
    // every filler sits where both sequences carry a dent
    for (const auto& f : rep.filler_positions) {
        auto up = side_decorations(*f.contact.upper_se, Side::SE);
        auto lo = side_decorations(*f.contact.lower_nw, Side::NW);
        EXPECT_EQ(lo[f.spot.index], DecorationKind::Dent);
        EXPECT_EQ(up[side_length - 1 - f.spot.index], DecorationKind::Dent);
    }
}

TEST(VerifyAssembly, WrongTileChoiceBreaksColours) {
    auto ts = tiles();
    auto items = rigid_pattern(example(), -3, 3, -3, 3, [](int x, int) { return x == 0 ? 0 : ((x % 3) + 3) % 3 == 0 ? 1 : 2; });
    auto rep = verify_assembly(ts, placements_of(items), rect_window({-10, -20}, {50, 20}));
    EXPECT_FALSE(rep.incompatibilities.empty());
}

TEST(AsmFormat, RoundTripAndErrors) {
    auto ts = tiles();
    std::vector<AbstractPlacement> pl{{kEncoder, {3, -4}}, {kBLinker, {0, 7}}};
    std::ostringstream os;
    write_asm(os, ts, pl);
    EXPECT_EQ(os.str(), "place encoder 3 -4\nplace b-linker 0 7\n");
    std::istringstream is(os.str());
    auto back = read_asm(is, ts);
    ASSERT_EQ(back.size(), 2u);
    EXPECT_EQ(back[0].tile, pl[0].tile);
    EXPECT_EQ(back[1].offset, pl[1].offset);
    for (const char* bad : {"place encoder 1\n", "put encoder 1 2\n", "place dragon 1 2\n", "place encoder 1 2 3\n"}) {
        std::istringstream in(bad);
        EXPECT_THROW(read_asm(in, ts), FormatError) << bad;
    }
}

TEST(AbstractSolve, EncoderFootprint) {
    auto ts = tiles();
    std::vector<AbstractTile> only{ts[kEncoder]};
    UnitSet w(ts[kEncoder].units.begin(), ts[kEncoder].units.end());
    auto sol = abstract_solve(only, AbstractRegion{w});
    ASSERT_EQ(sol.status, SearchStatus::Solved);
    ASSERT_EQ(sol.placements.size(), 1u);
    EXPECT_EQ(sol.placements[0].offset, (Unit{0, 0}));
}

TEST(AbstractSolve, FootprintMismatch) {
    auto ts = tiles();
    std::vector<AbstractTile> only{ts[kALinker]};
    auto sol = abstract_solve(only, AbstractRegion{rect_window({0, 0}, {1, 0})});
    EXPECT_EQ(sol.status, SearchStatus::Unsolvable);
    EXPECT_TRUE(sol.placements.empty());
}

TEST(AbstractSolve, NodeLimit) {
    auto ts = tiles();
    Unit R = example().formulas.wang_right(), U = example().formulas.wang_up();
    Lattice2 L({3 * R.u, 3 * R.v}, {U.u, U.v});
    auto sol = abstract_solve(ts, AbstractRegion{L}, {5});
    EXPECT_EQ(sol.status, SearchStatus::ResourceExhausted);
}

TEST(AbstractSolve, LinkersDoNotStack) {
    auto ts = tiles();
    std::vector<AbstractTile> only{ts[kALinker], ts[kBLinker]};
    auto sol = abstract_solve(only, AbstractRegion{rect_window({0, 0}, {0, 8})});
    EXPECT_EQ(sol.status, SearchStatus::Unsolvable);
    auto one = abstract_solve(only, AbstractRegion{rect_window({0, 0}, {0, 2})});
    ASSERT_EQ(one.status, SearchStatus::Solved);
    EXPECT_EQ(one.placements[0].tile, 0u);
}
