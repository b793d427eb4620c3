#pragma once

#include <functional>
#include <vector>

#include "compiler.hpp"

namespace ctile {

// Registry indices of TileSet7::abstract_tiles().
enum TileIndex : std::size_t { kEncoder = 0, kALinker = 1, kBLinker = 2, kLower = 3, kDark = 4, kUpper = 5 };

enum class Role : std::uint8_t { Locator, Encoder, ExcavationLinker, ExposureLinker };

struct PatternItem {
    AbstractPlacement placement;
    int wx = 0, wy = 0;  // simulated Wang cell this placement belongs to
    Role role = Role::Locator;
};

inline Unit locator_origin(const Formulas& f, int wx, int wy) {
    Unit r = f.wang_right(), up = f.wang_up();
    return {wx * r.u + wy * up.u, wx * r.v + wy * up.v};
}

// Encoder offset exposing simulated tile k next to the locator at O.
inline Unit encoder_origin(const Formulas& f, Unit o, int k) {
    return o + Unit{f.locator_length - k * (f.t + 1) - 1, 3};
}

// The rigid tiling pattern for the Wang cells x0..x1, y0..y1 with tile choice `tile_at`.
// Linker types follow the colours of the cell they belong to, so a colour mismatch with a
// neighbour surfaces as an incompatible contact.
inline std::vector<PatternItem> rigid_pattern(const TileSet7& ts, int x0, int x1, int y0, int y1,
                                              const std::function<int(int, int)>& tile_at) {
    const Formulas& f = ts.formulas;
    const int step = f.t + 1;
    std::vector<PatternItem> out;
    auto linker_for = [&](int color, int b) {
        return color_code(color, f.t)[b] == code_bit0 ? kALinker : kBLinker;
    };
    for (int wy = y0; wy <= y1; ++wy)
        for (int wx = x0; wx <= x1; ++wx) {
            Unit o = locator_origin(f, wx, wy);
            int k = tile_at(wx, wy);
            const WangTile& w = ts.source.tiles.at(k);
            out.push_back({{kLower, o}, wx, wy, Role::Locator});
            out.push_back({{kDark, o + ts.dark_offset}, wx, wy, Role::Locator});
            out.push_back({{kUpper, o + ts.upper_offset}, wx, wy, Role::Locator});
            Unit e = encoder_origin(f, o, k);
            out.push_back({{kEncoder, e}, wx, wy, Role::Encoder});
            // right excavation: from the dark column up to the encoder's first unit
            for (int u = o.u + f.excavation_length + 1; u < e.u; ++u)
                out.push_back({{kALinker, {u, o.v + 3}}, wx, wy, Role::ExcavationLinker});
            // left excavation: behind the end of the encoder two cells down-left
            int kprev = tile_at(wx - 1, wy - 1);
            int end = (f.n - 1 - kprev) * step;
            for (int u = o.u + end + 1; u < o.u + f.excavation_length; ++u)
                out.push_back({{kALinker, {u, o.v + 3}}, wx, wy, Role::ExcavationLinker});
            for (int b = 0; b < f.t; ++b) {
                int u = o.u + f.locator_length + b;
                out.push_back({{static_cast<std::size_t>(linker_for(w.bottom, b)), {u, o.v}}, wx, wy, Role::ExposureLinker});
                out.push_back({{static_cast<std::size_t>(linker_for(w.left, b)), {u, o.v + 6}}, wx, wy, Role::ExposureLinker});
            }
        }
    return out;
}

inline std::vector<AbstractPlacement> placements_of(const std::vector<PatternItem>& items) {
    std::vector<AbstractPlacement> out;
    for (const auto& it : items) out.push_back(it.placement);
    return out;
}

}  // namespace ctile
