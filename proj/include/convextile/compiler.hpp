#pragma once

#include <map>
#include <optional>
#include <set>
#include <ostream>
#include <string>
#include <vector>

#include "abstract.hpp"
#include "blocks.hpp"
#include "wang.hpp"

namespace ctile {

inline const SideCode code_plain{};              // {|}
inline const SideCode code_marker = "{M|L}"_code;
inline const SideCode code_selector = "{L|M}"_code;
inline const SideCode code_bit0 = "{C|A}"_code;
inline const SideCode code_bit1 = "{C|B}"_code;
inline const SideCode code_a_link = "{A|C}"_code;
inline const SideCode code_b_link = "{B|C}"_code;
inline const SideCode code_outer = "{|C,M}"_code;
inline const SideCode code_wall = "{|A,B,C,M}"_code;
inline const SideCode code_glue1 = "{L,M|L,M}"_code;
inline const SideCode code_glue2 = "{A,L,M|A,L,M}"_code;

inline std::vector<SideCode> color_code(int c, int t) {
    if (t < 1 || c < 0 || c >= (1 << t)) throw DomainError("colour does not fit in " + std::to_string(t) + " bits");
    std::vector<SideCode> out;
    for (int b = t - 1; b >= 0; --b) out.push_back((c >> b) & 1 ? code_bit1 : code_bit0);
    return out;
}

// decodes one code unit back to its bit; nullopt for anything that is not a colour bit
inline std::optional<int> color_bit(SideCode c) {
    if (c == code_bit0) return 0;
    if (c == code_bit1) return 1;
    return std::nullopt;
}

struct Formulas {
    int n = 0, m = 0, t = 0;
    int encoder_length = 0;     // (3n-1)(t+1)+3
    int segment_length = 0;     // n(t+1)+1
    int padding_length = 0;     // (n-1)(t+1)+1
    int portion_gap = 0;        // 2(n-1)(t+1)+3
    int locator_length = 0;     // 2(n-1)(t+1)+3
    int excavation_length = 0;  // (n-1)(t+1)+1

    static Formulas of(const WangSet& ws) {
        Formulas f;
        f.n = ws.n();
        f.m = ws.m;
        f.t = ws.t();
        int s = f.t + 1;
        f.encoder_length = (3 * f.n - 1) * s + 3;
        f.segment_length = f.n * s + 1;
        f.padding_length = (f.n - 1) * s + 1;
        f.portion_gap = 2 * (f.n - 1) * s + 3;
        f.locator_length = 2 * (f.n - 1) * s + 3;
        f.excavation_length = (f.n - 1) * s + 1;
        return f;
    }
    // level-3 offsets between neighbouring simulated Wang tiles (one locator each)
    Unit wang_right() const { return {locator_length + t, -6}; }
    Unit wang_up() const { return {locator_length + t, 6}; }
};

inline AbstractTile make_strip(std::string name, TileClass cls, int length, int width = 3) {
    AbstractTile t{std::move(name), cls, {}, {}, {}};
    for (int u = 0; u < length; ++u)
        for (int v = 0; v < width; ++v) t.units.push_back({u, v});
    std::sort(t.units.begin(), t.units.end());
    return t;
}

inline AbstractTile build_encoder(const WangSet& ws) {
    ws.validate();
    Formulas f = Formulas::of(ws);
    AbstractTile e = make_strip("encoder", TileClass::Encoder, f.encoder_length);
    const int step = f.t + 1;
    auto segment = [&](int base, bool bottom_left) {
        for (int k = 0; k <= f.n; ++k) {
            int mu = base + k * step;
            e.se[{mu, 0}] = code_marker;
            e.nw[{mu, 2}] = code_marker;
            if (k == f.n) break;
            const auto& w = ws.tiles[k];
            auto se = color_code(bottom_left ? w.bottom : w.right, f.t);
            auto nw = color_code(bottom_left ? w.left : w.top, f.t);
            for (int b = 0; b < f.t; ++b) {
                e.se[{mu + 1 + b, 0}] = se[b];
                e.nw[{mu + 1 + b, 2}] = nw[b];
            }
        }
    };
    segment(0, true);
    for (int u = f.segment_length; u < f.segment_length + f.padding_length; ++u) {
        e.se[{u, 0}] = code_plain;
        e.nw[{u, 2}] = code_plain;
    }
    segment(f.segment_length + f.padding_length, false);
    return e;
}

inline std::pair<AbstractTile, AbstractTile> build_linkers() {
    auto make = [](std::string name, SideCode c) {
        AbstractTile t = make_strip(std::move(name), TileClass::Linker, 1);
        t.se[{0, 0}] = c;
        t.nw[{0, 2}] = c;
        return t;
    };
    return {make("a-linker", code_a_link), make("b-linker", code_b_link)};
}

struct LocatorParts {
    AbstractTile lower, dark, upper;
    // offsets of each part relative to the locator origin (lower part's corner)
    Unit dark_offset, upper_offset;
};

inline LocatorParts build_locator(const WangSet& ws) {
    ws.validate();
    Formulas f = Formulas::of(ws);
    const int len = f.locator_length;
    const int mid = f.excavation_length;  // column of the dark part
    LocatorParts p{make_strip("locator-lower", TileClass::Locator, len),
                   make_strip("locator-dark", TileClass::Locator, 1),
                   make_strip("locator-upper", TileClass::Locator, len),
                   {mid, 3},
                   {0, 6}};
    for (int u = 0; u < len; ++u) {
        bool end = u == 0 || u == len - 1;
        p.lower.se[{u, 0}] = end ? code_selector : code_outer;
        p.lower.nw[{u, 2}] = end ? code_selector : u == mid ? code_glue2 : code_wall;
        p.upper.se[{u, 0}] = end ? code_selector : u == mid ? code_glue1 : code_wall;
        p.upper.nw[{u, 2}] = end ? code_selector : code_outer;
    }
    p.dark.nw[{0, 2}] = code_glue1;
    p.dark.se[{0, 0}] = code_glue2;
    return p;
}

struct Piece {
    std::string name;
    std::optional<AbstractTile> tile;  // absent for the tiny filler
    Polyomino shape;                   // lattice frame (unit (0,0) square (0,0) centred at the origin)
};

struct TileSet7 {
    WangSet source;
    Formulas formulas;
    std::vector<Piece> pieces;  // tiny filler, encoder, a-linker, b-linker, locator lower/dark/upper
    Unit dark_offset, upper_offset;

    // abstract registry in search order (everything except the filler)
    std::vector<AbstractTile> abstract_tiles() const {
        std::vector<AbstractTile> out;
        for (const auto& p : pieces)
            if (p.tile) out.push_back(*p.tile);
        return out;
    }
    const Piece& piece(const std::string& name) const {
        for (const auto& p : pieces)
            if (p.name == name) return p;
        throw DomainError("no piece named " + name);
    }
    std::vector<SideCode> emitted_codes() const {
        std::set<SideCode> s;
        for (const auto& p : pieces)
            if (p.tile)
                for (auto c : p.tile->codes()) s.insert(c);
        return {s.begin(), s.end()};
    }
};

inline Polyomino realize(const AbstractTile& t) {
    auto specs = t.unit_specs();
    return realize_units(specs);
}

struct CompileOptions {
    bool realize = true;  // false keeps only the abstract tiles (shapes left empty)
};

inline TileSet7 compile(const WangSet& ws, CompileOptions opt = {}) {
    ws.validate();
    TileSet7 ts{ws, Formulas::of(ws), {}, {}, {}};
    auto [a, b] = build_linkers();
    auto loc = build_locator(ws);
    ts.dark_offset = loc.dark_offset;
    ts.upper_offset = loc.upper_offset;
    ts.pieces.push_back({"tiny-filler", std::nullopt, tiny_filler()});
    std::vector<AbstractTile> abs{build_encoder(ws), a, b, loc.lower, loc.dark, loc.upper};
    for (auto& t : abs) {
        Polyomino shape = opt.realize ? realize(t) : Polyomino{};
        ts.pieces.push_back({t.name, std::move(t), std::move(shape)});
    }
    return ts;
}

inline void write_manifest(std::ostream& os, const TileSet7& ts) {
    const auto& f = ts.formulas;
    os << "n " << f.n << "\nm " << f.m << "\nt " << f.t << '\n'
       << "encoder_length " << f.encoder_length << '\n'
       << "segment_length " << f.segment_length << '\n'
       << "padding_length " << f.padding_length << '\n'
       << "portion_gap " << f.portion_gap << '\n'
       << "locator_length " << f.locator_length << '\n'
       << "excavation_length " << f.excavation_length << '\n'
       << "level3_order 13 22\n";
    for (const auto& p : ts.pieces) {
        os << "piece " << p.name << " cells " << p.shape.size();
        if (p.tile) os << " units " << p.tile->units.size();
        os << '\n';
    }
}

}  // namespace ctile
