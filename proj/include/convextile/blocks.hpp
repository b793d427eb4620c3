#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "decorations.hpp"
#include "grid.hpp"

namespace ctile {

enum class Side : std::uint8_t { NW, SE };
enum class DecorationKind : std::uint8_t { Dent, Bump, Plain };

enum class SideLabel : std::uint8_t { A, B, C, L, M };
inline constexpr std::array<SideLabel, 5> all_labels{SideLabel::A, SideLabel::B, SideLabel::C, SideLabel::L,
                                                     SideLabel::M};
inline constexpr char label_char(SideLabel l) { return "ABCLM"[static_cast<int>(l)]; }

inline constexpr int side_length = 22;  // level-2 squares per side at order (13,22)
inline constexpr int part_length = 5;

// {left|right}: bumps of part one, dents of part three
struct SideCode {
    std::uint8_t left = 0;
    std::uint8_t right = 0;

    static constexpr std::uint8_t bit(SideLabel l) { return static_cast<std::uint8_t>(1u << static_cast<int>(l)); }
    constexpr bool in_left(SideLabel l) const { return left & bit(l); }
    constexpr bool in_right(SideLabel l) const { return right & bit(l); }

    friend constexpr bool operator==(SideCode, SideCode) = default;
    friend constexpr auto operator<=>(SideCode, SideCode) = default;

    static SideCode parse(std::string_view s) {
        auto bad = [&] { return FormatError("bad side code: " + std::string(s)); };
        if (s.size() < 3 || s.front() != '{' || s.back() != '}') throw bad();
        auto body = s.substr(1, s.size() - 2);
        auto bar = body.find('|');
        if (bar == std::string_view::npos || body.find('|', bar + 1) != std::string_view::npos) throw bad();
        auto set = [&](std::string_view part) {
            std::uint8_t m = 0;
            std::size_t k = 0;
            while (k < part.size()) {
                auto pos = std::string_view("ABCLM").find(part[k]);
                if (pos == std::string_view::npos) throw bad();
                m |= static_cast<std::uint8_t>(1u << pos);
                ++k;
                if (k < part.size()) {
                    if (part[k] != ',') throw bad();
                    ++k;
                    if (k == part.size()) throw bad();
                }
            }
            return m;
        };
        return {set(body.substr(0, bar)), set(body.substr(bar + 1))};
    }

    std::string str() const {
        auto list = [](std::uint8_t m) {
            std::string out;
            for (SideLabel l : all_labels)
                if (m & bit(l)) {
                    if (!out.empty()) out += ',';
                    out += label_char(l);
                }
            return out;
        };
        return "{" + list(left) + "|" + list(right) + "}";
    }
};

inline SideCode operator""_code(const char* s, std::size_t n) { return SideCode::parse({s, n}); }

// Dent/Bump per level-2 square in clockwise order along the side.
inline std::array<DecorationKind, side_length> side_decorations(SideCode code, Side side) {
    using enum DecorationKind;
    std::array<DecorationKind, side_length> seq{};
    static constexpr std::array<int, 12> nw_mid{0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0};
    static constexpr std::array<int, 12> se_mid{1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1};
    const auto& mid = side == Side::NW ? nw_mid : se_mid;
    for (int k = 0; k < part_length; ++k) {
        SideLabel first = all_labels[k];
        SideLabel third = all_labels[part_length - 1 - k];
        seq[k] = code.in_left(first) ? Bump : Dent;
        seq[side_length - part_length + k] = code.in_right(third) ? Dent : Bump;
    }
    for (int k = 0; k < 12; ++k) seq[part_length + k] = mid[k] ? Bump : Dent;
    return seq;
}

inline std::string bits(const std::array<DecorationKind, side_length>& seq) {
    std::string s;
    for (auto k : seq) s += k == DecorationKind::Bump ? '1' : '0';
    return s;
}

// Position along the i axis (0..21) of the k-th square in clockwise order.
// NW runs from the west corner to the north corner; SE from the east corner to the south corner.
inline constexpr int clockwise_to_index(Side side, int k) { return side == Side::NW ? k : side_length - 1 - k; }

// Label and part of the square at lattice index x on a side; nullopt inside part two.
struct LabelSlot {
    SideLabel label;
    bool first_part;
};
inline std::optional<LabelSlot> label_at(Side side, int x) {
    int k = side == Side::NW ? x : side_length - 1 - x;
    if (k < part_length) return LabelSlot{all_labels[k], true};
    if (k >= side_length - part_length) return LabelSlot{all_labels[side_length - 1 - k], false};
    return std::nullopt;
}

// ---- level-2 and level-3 squares ----

struct Level2Spec {
    int order = 1;
    Cell center{};
};

inline constexpr Vec lattice_i(int a) { return {a, a - 1}; }
inline constexpr Vec lattice_j(int a) { return {-(a - 1), a}; }
inline constexpr Vec level3_I(int a, int b) { return lattice_i(a) * b; }
inline constexpr Vec level3_J(int a, int b) { return lattice_j(a) * b; }

namespace detail {
inline void diamond_runs(int a, Cell c, std::vector<Run>& out) {
    for (int dy = -(a - 1); dy <= a - 1; ++dy) {
        int w = a - 1 - (dy < 0 ? -dy : dy);
        out.push_back({c.y + dy, c.x - w, c.x + w + 1});
    }
}
}  // namespace detail

inline Polyomino level2(int a, Cell center = {}) {
    if (a < 1) throw DomainError("level-2 order must be positive");
    std::vector<Run> rs;
    detail::diamond_runs(a, center, rs);
    return Polyomino::from_runs(std::move(rs));
}

// Centres of the b*b level-2 squares, shifted so the bottom corner cell sits at `bottom_corner`.
inline std::vector<Cell> level3_centers(int a, int b, Cell bottom_corner = {}) {
    if (a < 1 || b < 1) throw DomainError("level-3 order must be positive");
    Cell base = bottom_corner + Vec{0, a - 1};
    std::vector<Cell> out;
    out.reserve(static_cast<std::size_t>(b) * b);
    for (int y = 0; y < b; ++y)
        for (int x = 0; x < b; ++x) out.push_back(base + lattice_i(a) * x + lattice_j(a) * y);
    return out;
}

struct UnsupportedOrder : GeometryError {
    using GeometryError::GeometryError;
};

namespace detail {
inline Polyomino table_region(std::span<const tables::RowSpan> rows, Vec shift) {
    std::vector<Run> rs;
    for (const auto& r : rows) rs.push_back({r.y + shift.y, r.x0 + shift.x, r.x1 + 1 + shift.x});
    return Polyomino::from_runs(std::move(rs));
}
// cell delta of a decoration relative to the decorated square's centre
inline Polyomino decoration_delta(Side side, DecorationKind kind) {
    bool region_is_d = (side == Side::SE) == (kind == DecorationKind::Dent);
    Vec center = side == Side::SE ? Vec{tables::se_center_x, tables::se_center_y}
                                  : Vec{tables::nw_center_x, tables::nw_center_y};
    if (region_is_d) return table_region(tables::region_d, -center);
    return table_region(tables::region_b, -center);
}

struct DecoratedVariants {
    // index: 0 plain, 1 NW dent, 2 NW bump, 3 SE dent, 4 SE bump
    std::array<std::vector<Run>, 5> runs;
    static std::size_t slot(Side side, DecorationKind kind) {
        if (kind == DecorationKind::Plain) return 0;
        return 1 + (side == Side::SE ? 2 : 0) + (kind == DecorationKind::Bump ? 1 : 0);
    }
};
}  // namespace detail

inline Polyomino apply_decoration(const Polyomino& base, Side side, DecorationKind kind) {
    if (base.empty()) throw UnsupportedOrder("empty base");
    auto b = base.bounds();
    Cell c{(b.xmin + b.xmax) / 2, (b.ymin + b.ymax) / 2};
    if (base != level2(tables::decoration_order, c))
        throw UnsupportedOrder("decorations exist only for order-13 level-2 squares");
    if (kind == DecorationKind::Plain) return base;
    Polyomino delta = detail::decoration_delta(side, kind).translated(c);
    if (kind == DecorationKind::Dent) return subtract(base, delta);
    return union_disjoint({base, delta});
}

inline const detail::DecoratedVariants& decorated_variants() {
    static const detail::DecoratedVariants v = [] {
        detail::DecoratedVariants out;
        Polyomino sq = level2(tables::decoration_order);
        out.runs[0] = sq.runs();
        for (Side s : {Side::NW, Side::SE})
            for (DecorationKind k : {DecorationKind::Dent, DecorationKind::Bump})
                out.runs[detail::DecoratedVariants::slot(s, k)] = apply_decoration(sq, s, k).runs();
        return out;
    }();
    return v;
}

inline Polyomino tiny_filler() {
    Vec zero{};
    return unite(detail::table_region(tables::region_d, zero), detail::table_region(tables::region_b, zero))
        .normalized();
}

// Offset that carries the normalized tiny filler into the dent-dent gap above the
// NW-side square centred at `nw_center`.
inline Vec filler_offset(Cell nw_center) {
    Vec frame = nw_center - Vec{tables::nw_center_x, tables::nw_center_y};
    auto b = unite(detail::table_region(tables::region_d, {}), detail::table_region(tables::region_b, {})).bounds();
    return frame + Vec{b.xmin, b.ymin};
}

// ---- level-3 realization ----

struct UnitCodes {
    std::optional<SideCode> nw;
    std::optional<SideCode> se;
};

struct Level3Spec {
    int a = 13;
    int b = 22;
    Cell bottom_corner{};
    std::optional<SideCode> nw_code;
    std::optional<SideCode> se_code;
};

// Lattice frame: the level-2 square (0,0) of level-3 unit (0,0) is centred at the origin,
// unit (u,v) sits at u*I + v*J.
struct UnitSpec {
    int u = 0;
    int v = 0;
    UnitCodes codes;
};

inline Polyomino realize_units(std::span<const UnitSpec> units, int a = 13, int b = 22) {
    bool coded = std::any_of(units.begin(), units.end(), [](const UnitSpec& s) { return s.codes.nw || s.codes.se; });
    if (coded && (a != tables::decoration_order || b != side_length))
        throw UnsupportedOrder("side codes need order (13,22)");
    std::vector<Run> rs;
    rs.reserve(units.size() * static_cast<std::size_t>(b) * b * (2 * a - 1) + 64);
    const auto* var = coded ? &decorated_variants() : nullptr;
    std::array<DecorationKind, side_length> nw_seq{}, se_seq{};
    for (const UnitSpec& s : units) {
        if (s.codes.nw) nw_seq = side_decorations(*s.codes.nw, Side::NW);
        if (s.codes.se) se_seq = side_decorations(*s.codes.se, Side::SE);
        for (int y = 0; y < b; ++y)
            for (int x = 0; x < b; ++x) {
                Cell c = lattice_i(a) * (s.u * b + x) + lattice_j(a) * (s.v * b + y);
                std::size_t slot = 0;
                if (s.codes.nw && y == b - 1)
                    slot = detail::DecoratedVariants::slot(Side::NW, nw_seq[x]);
                else if (s.codes.se && y == 0)
                    slot = detail::DecoratedVariants::slot(Side::SE, se_seq[side_length - 1 - x]);
                if (!var) {
                    detail::diamond_runs(a, c, rs);
                    continue;
                }
                for (const Run& r : var->runs[slot]) rs.push_back({r.y + c.y, r.x0 + c.x, r.x1 + c.x});
            }
    }
    return Polyomino::from_runs(std::move(rs));
}

inline Polyomino realize_level3(const Level3Spec& spec) {
    UnitSpec u{0, 0, {spec.nw_code, spec.se_code}};
    Polyomino p = realize_units(std::span<const UnitSpec>(&u, 1), spec.a, spec.b);
    // bottom corner of a plain square is the bottom cell of level-2 square (0,0)
    Cell corner{0, -(spec.a - 1)};
    return p.translated(spec.bottom_corner - corner);
}

// Cell offset of abstract unit (u,v) at order (13,22).
inline constexpr Vec unit_offset(int u, int v, int a = 13, int b = 22) {
    return level3_I(a, b) * u + level3_J(a, b) * v;
}

// Centre of level-2 square x (0..21) in the NW row of unit (u,v).
inline constexpr Cell nw_row_center(int u, int v, int x, int a = 13, int b = 22) {
    return lattice_i(a) * (u * b + x) + lattice_j(a) * (v * b + b - 1);
}

}  // namespace ctile
