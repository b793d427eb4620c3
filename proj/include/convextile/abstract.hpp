#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "blocks.hpp"
#include "lattice.hpp"

namespace ctile {

// Level-3 unit position in the I/J basis.
struct Unit {
    int u = 0;
    int v = 0;
    friend constexpr bool operator==(Unit, Unit) = default;
    friend constexpr auto operator<=>(Unit, Unit) = default;
    constexpr Unit operator+(Unit o) const { return {u + o.u, v + o.v}; }
    constexpr Unit operator-(Unit o) const { return {u - o.u, v - o.v}; }
};

enum class TileClass : std::uint8_t { Locator, Encoder, Linker, Filler };

struct AbstractTile {
    std::string name;
    TileClass cls = TileClass::Locator;
    std::vector<Unit> units;  // sorted
    std::map<Unit, SideCode> nw;
    std::map<Unit, SideCode> se;

    bool has(Unit x) const { return std::binary_search(units.begin(), units.end(), x); }
    std::optional<SideCode> nw_code(Unit x) const {
        auto it = nw.find(x);
        return it == nw.end() ? std::nullopt : std::optional(it->second);
    }
    std::optional<SideCode> se_code(Unit x) const {
        auto it = se.find(x);
        return it == se.end() ? std::nullopt : std::optional(it->second);
    }
    std::vector<SideCode> codes() const {
        std::vector<SideCode> out;
        for (auto& [_, c] : nw) out.push_back(c);
        for (auto& [_, c] : se) out.push_back(c);
        return out;
    }
    std::vector<UnitSpec> unit_specs() const {
        std::vector<UnitSpec> out;
        for (Unit x : units) out.push_back({x.u, x.v, {nw_code(x), se_code(x)}});
        return out;
    }
};

// A tile is well formed when codes sit only on exposed NW/SE sides and no unit is coded on both.
inline bool well_formed(const AbstractTile& t) {
    if (!std::is_sorted(t.units.begin(), t.units.end())) return false;
    for (auto& [x, _] : t.nw)
        if (!t.has(x) || t.has(x + Unit{0, 1}) || t.se.contains(x)) return false;
    for (auto& [x, _] : t.se)
        if (!t.has(x) || t.has(x - Unit{0, 1})) return false;
    return true;
}

struct AbstractPlacement {
    std::size_t tile = 0;  // index into the tile list
    Unit offset{};
    friend bool operator==(const AbstractPlacement&, const AbstractPlacement&) = default;
};

struct IncompatibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// S is the upper square (its SE side), T the lower one (its NW side).
inline constexpr bool compatible(SideCode s, SideCode t) {
    return (s.left & ~t.right) == 0 && (t.left & ~s.right) == 0;
}

// a dent meeting a dent at lattice index `index` (0..21 along the shared side)
struct FillerSpot {
    int index = 0;
    friend bool operator==(FillerSpot, FillerSpot) = default;
    friend auto operator<=>(FillerSpot, FillerSpot) = default;
};

inline std::vector<FillerSpot> dent_meetings(SideCode s, SideCode t) {
    auto se = side_decorations(s, Side::SE);
    auto nw = side_decorations(t, Side::NW);
    std::vector<FillerSpot> out;
    for (int x = 0; x < side_length; ++x)
        if (se[side_length - 1 - x] == DecorationKind::Dent && nw[x] == DecorationKind::Dent) out.push_back({x});
    return out;
}

inline std::vector<FillerSpot> filler_needs(SideCode s, SideCode t) {
    if (!compatible(s, t)) throw IncompatibleError(s.str() + " cannot sit above " + t.str());
    return dent_meetings(s, t);
}

// ---- windows and assemblies ----

using UnitSet = std::set<Unit>;

inline UnitSet rect_window(Unit lo, Unit hi) {
    UnitSet w;
    for (int v = lo.v; v <= hi.v; ++v)
        for (int u = lo.u; u <= hi.u; ++u) w.insert({u, v});
    return w;
}

struct Contact {
    Unit lower;  // the upper unit is lower + (0,1)
    std::size_t lower_placement = 0;
    std::size_t upper_placement = 0;
    std::optional<SideCode> upper_se;
    std::optional<SideCode> lower_nw;
};

struct AssemblyReport {
    UnitSet covered;
    std::vector<Unit> uncovered;
    struct Conflict {
        Unit unit;
        std::size_t first, second;
    };
    std::vector<Conflict> conflicts;
    std::vector<Contact> incompatibilities;
    struct Filler {
        Contact contact;
        FillerSpot spot;
    };
    std::vector<Filler> filler_positions;
    std::vector<Contact> contacts;  // every checked NW/SE contact between distinct placements

    bool valid() const { return uncovered.empty() && conflicts.empty() && incompatibilities.empty(); }
};

namespace detail {
inline bool contact_ok(const std::optional<SideCode>& s, const std::optional<SideCode>& t) {
    if (!s && !t) return true;
    if (!s || !t) return false;  // a plain side against a decorated one always collides
    return compatible(*s, *t);
}
}  // namespace detail

// Boundary-open check: exact single cover inside `window`; contacts touching the window are checked.
inline AssemblyReport verify_assembly(const std::vector<AbstractTile>& tiles,
                                      const std::vector<AbstractPlacement>& placements, const UnitSet& window) {
    AssemblyReport rep;
    struct Owner {
        std::size_t placement;
        Unit local;
    };
    std::map<Unit, Owner> owner;
    for (std::size_t k = 0; k < placements.size(); ++k) {
        const auto& pl = placements[k];
        for (Unit x : tiles.at(pl.tile).units) {
            Unit g = x + pl.offset;
            auto [it, fresh] = owner.try_emplace(g, Owner{k, x});
            if (!fresh && window.contains(g)) rep.conflicts.push_back({g, it->second.placement, k});
        }
    }
    for (auto& [g, _] : owner) rep.covered.insert(g);
    for (Unit w : window)
        if (!owner.contains(w)) rep.uncovered.push_back(w);
    for (auto& [g, lo] : owner) {
        Unit up = g + Unit{0, 1};
        if (!window.contains(g) && !window.contains(up)) continue;
        auto it = owner.find(up);
        if (it == owner.end()) continue;
        const Owner& hi = it->second;
        if (hi.placement == lo.placement) continue;
        Contact c{g, lo.placement, hi.placement, tiles[placements[hi.placement].tile].se_code(hi.local),
                  tiles[placements[lo.placement].tile].nw_code(lo.local)};
        rep.contacts.push_back(c);
        if (!detail::contact_ok(c.upper_se, c.lower_nw)) {
            rep.incompatibilities.push_back(c);
            continue;
        }
        if (c.upper_se)
            for (FillerSpot f : filler_needs(*c.upper_se, *c.lower_nw)) rep.filler_positions.push_back({c, f});
    }
    return rep;
}

// ---- .asm format ----

inline void write_asm(std::ostream& os, const std::vector<AbstractTile>& tiles,
                      const std::vector<AbstractPlacement>& placements) {
    for (const auto& p : placements) os << "place " << tiles.at(p.tile).name << ' ' << p.offset.u << ' ' << p.offset.v << '\n';
}

inline std::vector<AbstractPlacement> read_asm(std::istream& is, const std::vector<AbstractTile>& tiles) {
    std::vector<AbstractPlacement> out;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string tag, name;
        int u = 0, v = 0;
        std::string extra;
        if (!(ls >> tag >> name >> u >> v) || tag != "place" || (ls >> extra)) throw FormatError("bad asm line: " + line);
        auto it = std::find_if(tiles.begin(), tiles.end(), [&](const AbstractTile& t) { return t.name == name; });
        if (it == tiles.end()) throw FormatError("unknown tile in asm: " + name);
        out.push_back({static_cast<std::size_t>(it - tiles.begin()), {u, v}});
    }
    return out;
}

inline std::string describe(const Contact& c) {
    auto s = [](const std::optional<SideCode>& x) { return x ? x->str() : std::string("plain"); };
    return "contact (" + std::to_string(c.lower.u) + "," + std::to_string(c.lower.v) + ")/(" +
           std::to_string(c.lower.u) + "," + std::to_string(c.lower.v + 1) + ") upper " + s(c.upper_se) +
           " lower " + s(c.lower_nw);
}

inline void write_report(std::ostream& os, const AssemblyReport& r, const std::vector<AbstractTile>& tiles,
                         const std::vector<AbstractPlacement>& placements) {
    for (Unit x : r.uncovered) os << "uncovered " << x.u << ' ' << x.v << '\n';
    for (const auto& c : r.conflicts)
        os << "conflict " << c.unit.u << ' ' << c.unit.v << ' ' << tiles[placements[c.first].tile].name << ' '
           << tiles[placements[c.second].tile].name << '\n';
    for (const auto& c : r.incompatibilities) os << "incompatible " << describe(c) << '\n';
    for (const auto& f : r.filler_positions)
        os << "filler " << f.contact.lower.u << ' ' << f.contact.lower.v << ' ' << f.spot.index << '\n';
    os << (r.valid() ? "VALID" : "INVALID") << " covered=" << r.covered.size() << " fillers=" << r.filler_positions.size()
       << '\n';
}

// ---- abstract exact-cover search ----

struct AbstractRegion {
    // finite window (placements must stay inside) or torus quotient
    std::variant<UnitSet, Lattice2> shape;
};

struct SearchLimits {
    std::uint64_t node_limit = 50'000'000;
};

enum class SearchStatus { Solved, Unsolvable, ResourceExhausted };

struct AbstractSolution {
    SearchStatus status = SearchStatus::Unsolvable;
    std::vector<AbstractPlacement> placements;
    std::uint64_t nodes = 0;
};

namespace detail {

class AbstractSearch {
public:
    AbstractSearch(const std::vector<AbstractTile>& tiles, const AbstractRegion& region, SearchLimits lim)
        : tiles_(tiles), limits_(lim) {
        if (auto* w = std::get_if<UnitSet>(&region.shape)) {
            for (Unit x : *w) index_.emplace(x, cells_.size()), cells_.push_back(x);
        } else {
            lattice_ = std::get<Lattice2>(region.shape);
            for (std::int64_t s = 0; s < lattice_->index(); ++s) {
                Cell c = lattice_->cell_of(s);
                cells_.push_back({c.x, c.y});
            }
        }
        build_candidates();
        owner_.assign(cells_.size(), none);
        cell_nw_.assign(cells_.size(), std::nullopt);
        cell_se_.assign(cells_.size(), std::nullopt);
    }

    AbstractSolution run() {
        AbstractSolution sol;
        exhausted_ = false;
        bool ok = dfs();
        sol.nodes = nodes_;
        if (ok) {
            sol.status = SearchStatus::Solved;
            for (std::size_t c : chosen_) sol.placements.push_back(cands_[c].placement);
        } else {
            sol.status = exhausted_ ? SearchStatus::ResourceExhausted : SearchStatus::Unsolvable;
        }
        return sol;
    }

private:
    static constexpr std::size_t none = static_cast<std::size_t>(-1);

    // a side of one candidate unit, resolved once: which cell it faces and what it carries
    struct Face {
        std::size_t neighbour = none;  // facing cell, none when outside a window
        bool interior = false;         // facing the same tile across an internal side
        bool self = false;             // facing another unit of the same placement (torus wrap)
        std::optional<SideCode> mine, self_theirs;
    };
    struct Candidate {
        AbstractPlacement placement;
        std::vector<std::size_t> cells;  // parallel to tile units
        std::vector<Face> up, down;
    };

    std::optional<std::size_t> slot(Unit x) const {
        if (lattice_) return static_cast<std::size_t>(lattice_->slot({x.u, x.v}));
        auto it = index_.find(x);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    void build_candidates() {
        by_cell_.assign(cells_.size(), {});
        std::set<std::pair<std::size_t, Unit>> seen;
        for (std::size_t t = 0; t < tiles_.size(); ++t) {
            const auto& tile = tiles_[t];
            for (Unit anchor : cells_)
                for (Unit x : tile.units) {
                    Unit off = anchor - x;
                    if (lattice_) {
                        Cell r = lattice_->reduce({off.u, off.v});
                        off = {r.x, r.y};
                    }
                    if (!seen.insert({t, off}).second) continue;
                    Candidate c{{t, off}, {}, {}, {}};
                    bool fits = true;
                    std::set<std::size_t> used;
                    for (Unit y : tile.units) {
                        auto s = slot(y + off);
                        if (!s || !used.insert(*s).second) {
                            fits = false;
                            break;
                        }
                        c.cells.push_back(*s);
                    }
                    if (!fits) continue;
                    for (std::size_t k = 0; k < tile.units.size(); ++k) {
                        Unit local = tile.units[k];
                        for (int dir : {1, -1}) {
                            Face f;
                            f.mine = dir == 1 ? tile.nw_code(local) : tile.se_code(local);
                            if (auto ns = slot(local + off + Unit{0, dir})) {
                                f.neighbour = *ns;
                                auto hit = std::find(c.cells.begin(), c.cells.end(), *ns);
                                if (hit != c.cells.end()) {
                                    Unit other = tile.units[static_cast<std::size_t>(hit - c.cells.begin())];
                                    if (other == local + Unit{0, dir}) {
                                        f.interior = true;
                                    } else {
                                        f.self = true;
                                        f.self_theirs = dir == 1 ? tile.se_code(other) : tile.nw_code(other);
                                    }
                                }
                            }
                            (dir == 1 ? c.up : c.down).push_back(f);
                        }
                    }
                    for (std::size_t s : c.cells) by_cell_[s].push_back(cands_.size());
                    cands_.push_back(std::move(c));
                }
        }
    }

    bool fits(std::size_t ci) const {
        const Candidate& c = cands_[ci];
        for (std::size_t cell : c.cells)
            if (owner_[cell] != none) return false;
        for (std::size_t k = 0; k < c.cells.size(); ++k) {
            for (int dir : {1, -1}) {
                const Face& f = dir == 1 ? c.up[k] : c.down[k];
                if (f.neighbour == none || f.interior) continue;
                const std::optional<SideCode>* theirs = nullptr;
                if (f.self)
                    theirs = &f.self_theirs;
                else if (owner_[f.neighbour] != none)
                    theirs = dir == 1 ? &cell_se_[f.neighbour] : &cell_nw_[f.neighbour];
                else
                    continue;
                bool ok = dir == 1 ? contact_ok(*theirs, f.mine) : contact_ok(f.mine, *theirs);
                if (!ok) return false;
            }
        }
        return true;
    }

    void place(std::size_t ci, bool on) {
        const Candidate& c = cands_[ci];
        for (std::size_t k = 0; k < c.cells.size(); ++k) {
            owner_[c.cells[k]] = on ? ci : none;
            cell_nw_[c.cells[k]] = on ? c.up[k].mine : std::nullopt;
            cell_se_[c.cells[k]] = on ? c.down[k].mine : std::nullopt;
        }
        if (on)
            chosen_.push_back(ci);
        else
            chosen_.pop_back();
    }

    bool dfs() {
        if (++nodes_ > limits_.node_limit) {
            exhausted_ = true;
            return false;
        }
        std::size_t best = none, best_count = none;
        std::vector<std::size_t> best_opts, opts;
        for (std::size_t cell = 0; cell < cells_.size(); ++cell) {
            if (owner_[cell] != none) continue;
            opts.clear();
            for (std::size_t ci : by_cell_[cell]) {
                if (fits(ci)) opts.push_back(ci);
                if (opts.size() >= best_count) break;
            }
            if (opts.size() < best_count) {
                best = cell;
                best_count = opts.size();
                best_opts = opts;
                if (best_count == 0) return false;
            }
        }
        if (best == none) return true;
        for (std::size_t ci : best_opts) {
            place(ci, true);
            if (dfs()) return true;
            place(ci, false);
            if (exhausted_) return false;
        }
        return false;
    }

    const std::vector<AbstractTile>& tiles_;
    SearchLimits limits_;
    std::optional<Lattice2> lattice_;
    std::vector<Unit> cells_;
    std::map<Unit, std::size_t> index_;
    std::vector<Candidate> cands_;
    std::vector<std::vector<std::size_t>> by_cell_;
    std::vector<std::size_t> owner_;
    std::vector<std::optional<SideCode>> cell_nw_, cell_se_;
    std::vector<std::size_t> chosen_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
};

}  // namespace detail

// Deterministic search: most-constrained unit first, candidates in tile-registry then offset order.
inline AbstractSolution abstract_solve(const std::vector<AbstractTile>& tiles, const AbstractRegion& region,
                                       SearchLimits limits = {}) {
    return detail::AbstractSearch(tiles, region, limits).run();
}

}  // namespace ctile
