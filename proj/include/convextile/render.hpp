#pragma once

#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "abstract.hpp"
#include "grid.hpp"

namespace ctile {

enum class Palette { Default, Paper };

struct RenderStyle {
    Palette palette = Palette::Default;
    int scale = 4;
};

struct ShapeItem {
    Polyomino shape;
    TileClass cls = TileClass::Locator;
    bool classed = false;  // false draws the neutral "shape" class
    std::string label;
};

struct AssemblyItem {
    std::vector<AbstractTile> tiles;
    std::vector<AbstractPlacement> placements;
    std::vector<AssemblyReport::Filler> fillers;
};

using RenderItem = std::variant<ShapeItem, AssemblyItem>;

inline const char* class_name(TileClass c) {
    switch (c) {
        case TileClass::Locator: return "locator";
        case TileClass::Encoder: return "encoder";
        case TileClass::Linker: return "linker";
        case TileClass::Filler: return "filler";
    }
    return "shape";
}

inline std::string fill_of(const std::string& cls, Palette p) {
    if (p == Palette::Paper) {
        if (cls == "locator") return "#e6e6e6";
        if (cls == "encoder") return "#ffe6cc";
        if (cls == "linker") return "#e6cce6";
        if (cls == "filler") return "#bf0040";
        return "#b3b3b3";
    }
    if (cls == "locator") return "#a8b0b8";
    if (cls == "encoder") return "#f2a65a";
    if (cls == "linker") return "#9d7bd8";
    if (cls == "filler") return "#6a1b9a";
    return "#4a90d9";
}

namespace detail {

struct Canvas {
    long long xmin = 0, ymin = 0, xmax = 0, ymax = 0;
    bool any = false;
    void add(long long x, long long y) {
        if (!any) {
            xmin = xmax = x, ymin = ymax = y, any = true;
            return;
        }
        xmin = std::min(xmin, x), xmax = std::max(xmax, x);
        ymin = std::min(ymin, y), ymax = std::max(ymax, y);
    }
};

// abstract unit drawn as a diamond: bottom corner at (u-v, u+v)
inline std::array<std::pair<long long, long long>, 4> unit_diamond(Unit x) {
    long long bx = x.u - x.v, by = x.u + x.v;
    return {{{bx, by}, {bx + 1, by + 1}, {bx, by + 2}, {bx - 1, by + 1}}};
}

}  // namespace detail

// Deterministic SVG: one <g> per item, outlines traced from boundary words.
inline std::string render_svg(const std::vector<RenderItem>& items, const RenderStyle& style) {
    const long long s = style.scale < 1 ? 1 : style.scale;
    detail::Canvas cv;
    for (const auto& it : items) {
        if (auto* sh = std::get_if<ShapeItem>(&it)) {
            if (sh->shape.empty()) continue;
            auto b = sh->shape.bounds();
            cv.add(b.xmin, b.ymin), cv.add(b.xmax + 1, b.ymax + 1);
        } else {
            const auto& as = std::get<AssemblyItem>(it);
            for (const auto& p : as.placements)
                for (Unit x : as.tiles.at(p.tile).units)
                    for (auto [px, py] : detail::unit_diamond(x + p.offset)) cv.add(px, py);
        }
    }
    std::ostringstream os;
    long long W = (cv.xmax - cv.xmin) * s, H = (cv.ymax - cv.ymin) * s;
    auto X = [&](long long x) { return (x - cv.xmin) * s; };
    auto Y = [&](long long y) { return (cv.ymax - y) * s; };
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\" viewBox=\"0 0 " << W
       << ' ' << H << "\">\n";
    for (const auto& it : items) {
        if (auto* sh = std::get_if<ShapeItem>(&it)) {
            if (sh->shape.empty()) continue;
            std::string cls = sh->classed ? class_name(sh->cls) : "shape";
            os << "<g class=\"" << cls << "\" fill=\"" << fill_of(cls, style.palette)
               << "\" stroke=\"#202020\" stroke-width=\"1\"";
            if (!sh->label.empty()) os << " id=\"" << sh->label << "\"";
            os << ">\n";
            if (sh->shape.size() == 1) {
                Cell c = sh->shape.cells()[0];
                os << "<rect x=\"" << X(c.x) << "\" y=\"" << Y(c.y + 1) << "\" width=\"" << s << "\" height=\"" << s << "\"/>\n";
            } else {
                std::optional<BoundaryWord> w;
                try {
                    w = boundary_word(sh->shape);
                } catch (const GeometryError&) {
                }
                if (w) {
                    os << "<path d=\"M" << X(w->start.x) << ' ' << Y(w->start.y);
                    for (char c : w->letters) {
                        switch (c) {
                            case 'R': os << "h" << s; break;
                            case 'L': os << "h" << -s; break;
                            case 'U': os << "v" << -s; break;
                            case 'D': os << "v" << s; break;
                        }
                    }
                    os << "z\"/>\n";
                } else {
                    for (const Run& r : sh->shape.runs())
                        for (int x = r.x0; x < r.x1; ++x)
                            os << "<rect x=\"" << X(x) << "\" y=\"" << Y(r.y + 1) << "\" width=\"" << s
                               << "\" height=\"" << s << "\"/>\n";
                }
            }
            os << "</g>\n";
        } else {
            const auto& as = std::get<AssemblyItem>(it);
            for (const auto& p : as.placements) {
                const auto& tile = as.tiles.at(p.tile);
                std::string cls = class_name(tile.cls);
                std::string fill = tile.name == "locator-dark" && style.palette == Palette::Paper ? "#b3b3b3"
                                                                                                  : fill_of(cls, style.palette);
                os << "<g class=\"" << cls << "\" data-tile=\"" << tile.name << "\" fill=\"" << fill
                   << "\" stroke=\"#808080\" stroke-width=\"1\">\n";
                for (Unit x : tile.units) {
                    auto d = detail::unit_diamond(x + p.offset);
                    os << "<polygon points=\"";
                    for (std::size_t k = 0; k < 4; ++k) os << (k ? " " : "") << X(d[k].first) << ',' << Y(d[k].second);
                    os << "\"/>\n";
                }
                os << "</g>\n";
            }
            if (!as.fillers.empty()) {
                os << "<g class=\"filler\" fill=\"" << fill_of("filler", style.palette) << "\">\n";
                for (const auto& f : as.fillers) {
                    // shared NW/SE edge of the contact, marked at its midpoint
                    auto d = detail::unit_diamond(f.contact.lower);
                    long long cx = X(d[2].first) * 2 + (X(d[3].first) - X(d[2].first));
                    long long cy = Y(d[2].second) * 2 + (Y(d[3].second) - Y(d[2].second));
                    os << "<circle cx=\"" << cx / 2 << "\" cy=\"" << cy / 2 << "\" r=\"" << (s > 3 ? s / 4 : 1) << "\"/>\n";
                }
                os << "</g>\n";
            }
        }
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace ctile
