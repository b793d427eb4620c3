#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "convextile/blocks.hpp"
#include "convextile/bn.hpp"
#include "convextile/lattice.hpp"
#include "convextile/solver.hpp"

using namespace ctile;

namespace {

Polyomino P(std::initializer_list<Cell> cs) { return Polyomino::from_cells(cs); }

// random connected blob grown from the origin
Polyomino random_blob(std::mt19937& rng, int cells) {
    std::vector<Cell> have{{0, 0}};
    std::uniform_int_distribution<int> dir(0, 3);
    while (static_cast<int>(have.size()) < cells) {
        Cell c = have[std::uniform_int_distribution<std::size_t>(0, have.size() - 1)(rng)];
        static constexpr Vec d[] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
        Cell n = c + d[dir(rng)];
        if (std::find(have.begin(), have.end(), n) == have.end()) have.push_back(n);
    }
    return Polyomino::from_cells(have);
}

}  // namespace

TEST(Translate, SingleCell) { EXPECT_EQ(translate(P({{0, 0}}), {2, 3}), P({{2, 3}})); }

TEST(Translate, ZeroIsIdentity) {
    auto p = level2(5);
    EXPECT_EQ(translate(p, {0, 0}), p);
}

TEST(Translate, Order2Diamond) {
    auto d = P({{0, 0}, {1, 0}, {-1, 0}, {0, 1}, {0, -1}});
    EXPECT_EQ(d, level2(2));
    EXPECT_EQ(translate(d, {1, 1}), P({{1, 1}, {2, 1}, {0, 1}, {1, 2}, {1, 0}}));
}

TEST(Translate, GroupAction) {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> c(-50, 50);
    for (int k = 0; k < 50; ++k) {
        auto p = random_blob(rng, 20);
        Vec u{c(rng), c(rng)}, v{c(rng), c(rng)};
        EXPECT_EQ(translate(translate(p, u), v), translate(p, u + v));
        EXPECT_EQ(translate(p, u).size(), p.size());
    }
}

TEST(Overlaps, Basic) {
    EXPECT_TRUE(overlaps(P({{0, 0}}), P({{0, 0}})));
    EXPECT_FALSE(overlaps(P({{0, 0}}), P({{1, 0}})));
}

TEST(Overlaps, BumpAgainstBump) {
    Cell s{tables::se_center_x, tables::se_center_y}, t{tables::nw_center_x, tables::nw_center_y};
    auto a = apply_decoration(level2(13, s), Side::SE, DecorationKind::Bump);
    auto b = apply_decoration(level2(13, t), Side::NW, DecorationKind::Bump);
    EXPECT_TRUE(overlaps(a, b));
}

TEST(UnionDisjoint, Basic) {
    EXPECT_EQ(union_disjoint({P({{0, 0}}), P({{1, 0}})}), P({{0, 0}, {1, 0}}));
}

TEST(UnionDisjoint, OverlapNamesPair) {
    try {
        union_disjoint({P({{5, 5}}), P({{0, 0}}), P({{0, 0}})});
        FAIL() << "expected OverlapError";
    } catch (const OverlapError& e) {
        EXPECT_EQ(e.first, 1u);
        EXPECT_EQ(e.second, 2u);
    }
}

TEST(UnionDisjoint, Level3Order7x3) {
    std::vector<Polyomino> parts;
    for (Cell c : level3_centers(7, 3)) parts.push_back(level2(7, c));
    auto u = union_disjoint(parts);
    EXPECT_EQ(u.size(), 9 * 85);
}

TEST(UnionDisjoint, CountIsSum) {
    std::mt19937 rng(3);
    for (int k = 0; k < 20; ++k) {
        auto a = random_blob(rng, 15), b = random_blob(rng, 15).translated({40, 0});
        EXPECT_EQ(union_disjoint({a, b}).size(), a.size() + b.size());
    }
}

TEST(Connected, Examples) {
    EXPECT_TRUE(is_connected(P({{0, 0}, {1, 0}})));
    EXPECT_FALSE(is_connected(P({{0, 0}, {1, 1}})));
    EXPECT_TRUE(is_connected(tiny_filler()));
    EXPECT_EQ(components(P({{0, 0}, {1, 1}, {2, 1}})).size(), 2u);
}

TEST(Convex, SamplePentominoes) {
    auto plus = P({{1, 0}, {0, 1}, {1, 1}, {2, 1}, {1, 2}});
    auto u = P({{0, 0}, {1, 0}, {2, 0}, {0, 1}, {2, 1}});
    EXPECT_TRUE(is_orthogonally_convex(plus));
    EXPECT_FALSE(is_orthogonally_convex(u));
}

TEST(Convex, RectanglesAndDiagonals) {
    for (int w = 1; w <= 6; ++w)
        for (int h = 1; h <= 6; ++h) EXPECT_TRUE(is_orthogonally_convex(Polyomino::rect(w, h, {-3, 2})));
    // convex but not connected: the predicates stay separate
    auto diag = P({{0, 0}, {1, 1}});
    EXPECT_TRUE(is_orthogonally_convex(diag));
    EXPECT_FALSE(is_connected(diag));
    // a column gap
    EXPECT_FALSE(is_orthogonally_convex(P({{0, 0}, {0, 2}})));
}

TEST(Convex, TranslationInvariant) {
    std::mt19937 rng(11);
    for (int k = 0; k < 50; ++k) {
        auto p = random_blob(rng, 8);
        EXPECT_EQ(is_orthogonally_convex(p), is_orthogonally_convex(p.translated({17, -9})));
    }
}

TEST(BoundaryWord, UnitSquare) {
    auto w = boundary_word(P({{0, 0}}));
    EXPECT_EQ(w.letters, "RULD");
    EXPECT_EQ(w.start, (Cell{0, 0}));
}

TEST(BoundaryWord, Domino) {
    auto w = boundary_word(Polyomino::rect(2, 1));
    EXPECT_EQ(w.size(), 6u);
    EXPECT_TRUE(w.closed());
    EXPECT_EQ(w.letters, "RRULLD");
}

TEST(BoundaryWord, TinyFillerPerimeter) {
    auto f = tiny_filler();
    auto w = boundary_word(f);
    EXPECT_TRUE(w.closed());
    // outline (2,1)(2,6)(5,6)(5,7)(6,7)(6,10)(11,10)(11,5)(8,5)(8,4)(7,4)(7,1)
    EXPECT_EQ(w.size(), 5u + 3 + 1 + 1 + 3 + 5 + 5 + 3 + 1 + 1 + 3 + 5);
    EXPECT_EQ(w.area(), 51);
}

TEST(BoundaryWord, Errors) {
    auto ring = subtract(Polyomino::rect(3, 3), P({{1, 1}}));
    EXPECT_THROW(boundary_word(ring), HoleError);
    EXPECT_THROW(boundary_word(P({{0, 0}, {1, 1}})), DisconnectedError);
}

TEST(BoundaryWord, ClosedAndShoelace) {
    std::mt19937 rng(5);
    int checked = 0;
    for (int k = 0; k < 200; ++k) {
        auto p = random_blob(rng, 25).normalized();
        BoundaryWord w;
        try {
            w = boundary_word(p);
        } catch (const HoleError&) {
            continue;
        }
        ++checked;
        EXPECT_TRUE(w.closed());
        EXPECT_EQ(w.size() % 2, 0u);
        EXPECT_EQ(w.area(), p.size());
        EXPECT_EQ(std::count(w.letters.begin(), w.letters.end(), 'U'), std::count(w.letters.begin(), w.letters.end(), 'D'));
    }
    EXPECT_GT(checked, 100);
}

TEST(PolyFormat, GoldenAndRoundTrip) {
    std::ostringstream os;
    write_poly(os, "ell", P({{5, 5}, {6, 5}, {5, 6}}));
    EXPECT_EQ(os.str(), "poly ell 3\n0 0\n1 0\n0 1\n");
    std::istringstream is(os.str());
    auto back = read_poly(is);
    EXPECT_EQ(back.name, "ell");
    EXPECT_EQ(back.shape, P({{0, 0}, {1, 0}, {0, 1}}));
}

TEST(PolyFormat, Malformed) {
    for (const char* text : {"", "poly x\n", "poly x 2\n0 0\n", "poly x 1\n0 zero\n", "poly x 2\n0 0\n0 0\n", "shape x 1\n0 0\n"}) {
        std::istringstream is(text);
        EXPECT_THROW(read_poly(is), FormatError) << text;
    }
}

TEST(Lattice, HermiteNormalForm) {
    Lattice2 L({51, -18}, {17, 6});
    EXPECT_EQ(L.p(), 102);
    EXPECT_EQ(L.q(), 17);
    EXPECT_EQ(L.r(), 6);
    EXPECT_TRUE(L.contains({51, -18}));
    EXPECT_TRUE(L.contains({17, 6}));
    EXPECT_FALSE(L.contains({17, 0}));
    EXPECT_THROW(Lattice2({1, 2}, {2, 4}), DomainError);
}

TEST(Lattice, ReduceIsCanonical) {
    Lattice2 L({6, 1}, {-2, 5});
    for (int y = -20; y <= 20; ++y)
        for (int x = -20; x <= 20; ++x) {
            Cell r = L.reduce({x, y});
            EXPECT_EQ(L.reduce(r), r);
            EXPECT_EQ(L.reduce(Cell{x, y} + Vec{6, 1} * 3 + Vec{-2, 5} * -2), r);
            EXPECT_EQ(L.cell_of(L.slot({x, y})), r);
        }
}

// ---- boundary-word tiling criterion ----

TEST(BN, UnitSquareIsPseudoSquare) {
    auto v = is_translational_monotile(P({{0, 0}}));
    ASSERT_TRUE(v.tiles);
    EXPECT_TRUE(v.witness->pseudo_square());
    EXPECT_TRUE(check_factorization(boundary_word(P({{0, 0}})), *v.witness));
}

TEST(BN, TinyFillerDoesNotTile) { EXPECT_FALSE(is_translational_monotile(tiny_filler()).tiles); }

TEST(BN, Order13SquareTiles) {
    auto d = level2(13);
    auto v = is_translational_monotile(d);
    ASSERT_TRUE(v.tiles);
    EXPECT_TRUE(check_factorization(boundary_word(d), *v.witness));
}

TEST(BN, RectanglesTile) {
    for (int w = 1; w <= 4; ++w)
        for (int h = 1; h <= 4; ++h) EXPECT_TRUE(is_translational_monotile(Polyomino::rect(w, h)).tiles);
}

TEST(BN, UShapeDoesNotTileButLTetrominoDoes) {
    EXPECT_FALSE(is_translational_monotile(P({{0, 0}, {1, 0}, {2, 0}, {0, 1}, {2, 1}, {0, 2}, {2, 2}})).tiles);
    EXPECT_TRUE(is_translational_monotile(P({{0, 0}, {1, 0}, {0, 1}, {0, 2}})).tiles);
}

TEST(BN, TranslationInvariant) {
    std::mt19937 rng(9);
    for (int k = 0; k < 30; ++k) {
        auto p = random_blob(rng, 7);
        try {
            boundary_word(p);
        } catch (const HoleError&) {
            continue;
        }
        EXPECT_EQ(is_translational_monotile(p).tiles, is_translational_monotile(p.translated({-13, 4})).tiles);
    }
}

TEST(BN, CorruptWitnessRejected) {
    auto d = level2(13);
    auto v = is_translational_monotile(d);
    ASSERT_TRUE(v.tiles);
    auto bad = *v.witness;
    bad.start = (bad.start + 1) % bad.word_length;
    EXPECT_FALSE(check_factorization(boundary_word(d), bad));
}

// witness periods give a torus the shape tiles alone
TEST(BN, WitnessPeriodsTileTorus) {
    for (auto p : {level2(3), P({{0, 0}, {1, 0}, {0, 1}, {0, 2}}), Polyomino::rect(3, 2)}) {
        auto v = is_translational_monotile(p);
        ASSERT_TRUE(v.tiles);
        auto t = factor_translations(boundary_word(p), *v.witness);
        std::vector<Vec> nonzero;
        for (Vec d : t)
            if (d != Vec{0, 0}) nonzero.push_back(d);
        ASSERT_GE(nonzero.size(), 2u);
        Vec a = nonzero[0], b = nonzero[1];
        // scale up so the torus is larger than the shape
        auto res = solve_exact_cover({p}, Region::make_torus(a * 3, b * 3));
        EXPECT_EQ(res.status, SearchStatus::Solved);
        EXPECT_EQ(res.placements.size(), 9u);
    }
}
