#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "abstract.hpp"
#include "blocks.hpp"
#include "lattice.hpp"

namespace ctile {

struct Region {
    enum class Mode { Window, Torus } mode = Mode::Window;
    Polyomino window;                // Window mode
    std::optional<Lattice2> torus;   // Torus mode
    bool boundary_open = false;      // pieces may stick out of the window
    Polyomino blocked;               // cells no piece may touch; already covered, so never columns

    static Region make_window(Polyomino w, bool open = false) {
        if (w.empty()) throw DomainError("empty window");
        Region r;
        r.window = std::move(w);
        r.boundary_open = open;
        return r;
    }
    static Region make_torus(Vec a, Vec b) {
        Region r;
        r.mode = Mode::Torus;
        r.torus = Lattice2(a, b);
        return r;
    }
};

struct Placement {
    std::size_t piece = 0;
    Vec offset{};
    friend bool operator==(const Placement&, const Placement&) = default;
};

struct SolveConfig {
    std::uint64_t node_limit = 10'000'000;
};

struct SolveResult {
    SearchStatus status = SearchStatus::Unsolvable;
    std::vector<Placement> placements;
    std::uint64_t nodes = 0;
};

namespace detail {

// Dancing links over primary columns only.
class Dlx {
public:
    explicit Dlx(std::size_t columns) : size_(columns, 0) {
        nodes_.resize(columns + 1);
        for (std::size_t c = 0; c <= columns; ++c) {
            nodes_[c] = {c == 0 ? columns : c - 1, c == columns ? 0 : c + 1, c, c, c, none};
        }
    }

    void add_row(const std::vector<std::size_t>& cols, std::size_t row_id) {
        std::size_t first = none;
        for (std::size_t col : cols) {
            std::size_t c = col + 1;
            std::size_t id = nodes_.size();
            Node n{id, id, nodes_[c].up, c, c, row_id};
            nodes_.push_back(n);
            nodes_[nodes_[c].up].down = id;
            nodes_[c].up = id;
            ++size_[col];
            if (first == none) {
                first = id;
            } else {
                nodes_[id].right = first;
                nodes_[id].left = nodes_[first].left;
                nodes_[nodes_[first].left].right = id;
                nodes_[first].left = id;
            }
        }
    }

    // returns true on a solution; `exhausted` set if the node limit stopped the search
    bool search(std::uint64_t limit, std::vector<std::size_t>& rows, std::uint64_t& count, bool& exhausted) {
        if (++count > limit) {
            exhausted = true;
            return false;
        }
        if (nodes_[0].right == 0) return true;
        std::size_t best = none, best_size = none;
        for (std::size_t c = nodes_[0].right; c != 0; c = nodes_[c].right)
            if (size_[c - 1] < best_size) best = c, best_size = size_[c - 1];
        if (best_size == 0) return false;
        cover(best);
        for (std::size_t r = nodes_[best].down; r != best; r = nodes_[r].down) {
            rows.push_back(nodes_[r].row);
            for (std::size_t j = nodes_[r].right; j != r; j = nodes_[j].right) cover(nodes_[j].col);
            if (search(limit, rows, count, exhausted)) return true;
            for (std::size_t j = nodes_[r].left; j != r; j = nodes_[j].left) uncover(nodes_[j].col);
            rows.pop_back();
            if (exhausted) break;
        }
        uncover(best);
        return false;
    }

private:
    static constexpr std::size_t none = static_cast<std::size_t>(-1);
    struct Node {
        std::size_t left, right, up, down, col, row;
    };
    void cover(std::size_t c) {
        nodes_[nodes_[c].right].left = nodes_[c].left;
        nodes_[nodes_[c].left].right = nodes_[c].right;
        for (std::size_t i = nodes_[c].down; i != c; i = nodes_[i].down)
            for (std::size_t j = nodes_[i].right; j != i; j = nodes_[j].right) {
                nodes_[nodes_[j].down].up = nodes_[j].up;
                nodes_[nodes_[j].up].down = nodes_[j].down;
                --size_[nodes_[j].col - 1];
            }
    }
    void uncover(std::size_t c) {
        for (std::size_t i = nodes_[c].up; i != c; i = nodes_[i].up)
            for (std::size_t j = nodes_[i].left; j != i; j = nodes_[j].left) {
                ++size_[nodes_[j].col - 1];
                nodes_[nodes_[j].down].up = j;
                nodes_[nodes_[j].up].down = j;
            }
        nodes_[nodes_[c].right].left = c;
        nodes_[nodes_[c].left].right = c;
    }
    std::vector<Node> nodes_;
    std::vector<std::size_t> size_;
};

}  // namespace detail

struct Candidate {
    Placement placement;
    std::vector<std::size_t> columns;
};

// Every placement of every piece that covers at least one region cell and respects the region.
inline std::vector<Candidate> enumerate_candidates(const std::vector<Polyomino>& pieces, const Region& region,
                                                   std::vector<Cell>* column_cells = nullptr) {
    std::vector<Candidate> out;
    if (region.mode == Region::Mode::Torus) {
        const Lattice2& L = *region.torus;
        if (column_cells)
            for (std::int64_t s = 0; s < L.index(); ++s) column_cells->push_back(L.cell_of(s));
        for (std::size_t p = 0; p < pieces.size(); ++p) {
            auto cells = pieces[p].cells();
            for (std::int64_t s = 0; s < L.index(); ++s) {
                Vec off = L.cell_of(s);
                std::vector<std::size_t> cols;
                std::set<std::size_t> seen;
                bool ok = true;
                for (Cell c : cells) {
                    auto slot = static_cast<std::size_t>(L.slot(c + off));
                    if (!seen.insert(slot).second) {
                        ok = false;
                        break;
                    }
                    cols.push_back(slot);
                }
                if (ok) out.push_back({{p, off}, std::move(cols)});
            }
        }
        return out;
    }
    auto wcells = region.blocked.empty() ? region.window.cells() : subtract(region.window, region.blocked).cells();
    std::unordered_map<std::int64_t, std::size_t> col_of;
    auto key = [](Cell c) { return (static_cast<std::int64_t>(c.y) << 32) ^ static_cast<std::uint32_t>(c.x); };
    for (std::size_t k = 0; k < wcells.size(); ++k) col_of[key(wcells[k])] = k;
    if (column_cells) *column_cells = wcells;
    for (std::size_t p = 0; p < pieces.size(); ++p) {
        auto pcells = pieces[p].cells();
        std::set<Cell> offsets;
        for (Cell w : wcells)
            for (Cell q : pcells) offsets.insert(w - q);
        const auto psize = static_cast<std::size_t>(pieces[p].size());
        for (Vec off : offsets) {
            std::vector<std::size_t> cols;
            if (wcells.size() < pcells.size()) {
                for (std::size_t k = 0; k < wcells.size(); ++k)
                    if (pieces[p].contains(wcells[k] - off)) cols.push_back(k);
            } else {
                for (Cell q : pcells) {
                    auto it = col_of.find(key(q + off));
                    if (it != col_of.end()) cols.push_back(it->second);
                }
                std::sort(cols.begin(), cols.end());
            }
            if (cols.empty() || (!region.boundary_open && cols.size() != psize)) continue;
            if (!region.blocked.empty() && overlaps(pieces[p].translated(off), region.blocked)) continue;
            out.push_back({{p, off}, std::move(cols)});
        }
    }
    return out;
}

inline SolveResult solve_exact_cover(const std::vector<Polyomino>& pieces, const Region& region, SolveConfig cfg = {}) {
    std::vector<Cell> cols;
    auto cands = enumerate_candidates(pieces, region, &cols);
    detail::Dlx dlx(cols.size());
    for (std::size_t k = 0; k < cands.size(); ++k) dlx.add_row(cands[k].columns, k);
    std::vector<std::size_t> rows;
    SolveResult res;
    bool exhausted = false;
    bool ok = dlx.search(cfg.node_limit, rows, res.nodes, exhausted);
    if (ok) {
        res.status = SearchStatus::Solved;
        for (std::size_t r : rows) res.placements.push_back(cands[r].placement);
    } else {
        res.status = exhausted ? SearchStatus::ResourceExhausted : SearchStatus::Unsolvable;
    }
    return res;
}

// ---- verification ----

struct TilingReport {
    Polyomino double_covered;
    Polyomino uncovered;
    Polyomino outside;  // piece cells outside a closed window
    std::vector<std::size_t> bad_pieces;
    bool clean() const { return double_covered.empty() && uncovered.empty() && outside.empty() && bad_pieces.empty(); }
};

inline TilingReport verify_tiling(const std::vector<Polyomino>& pieces, const std::vector<Placement>& placements,
                                  const Region& region) {
    TilingReport rep;
    for (const auto& pl : placements)
        if (pl.piece >= pieces.size()) rep.bad_pieces.push_back(pl.piece);
    if (!rep.bad_pieces.empty()) return rep;

    if (region.mode == Region::Mode::Torus) {
        const Lattice2& L = *region.torus;
        std::vector<int> count(static_cast<std::size_t>(L.index()), 0);
        for (const auto& pl : placements)
            for (Cell c : pieces[pl.piece].translated(pl.offset).cells()) ++count[static_cast<std::size_t>(L.slot(c))];
        std::vector<Cell> dbl, unc;
        for (std::int64_t s = 0; s < L.index(); ++s) {
            if (count[s] > 1) dbl.push_back(L.cell_of(s));
            if (count[s] == 0) unc.push_back(L.cell_of(s));
        }
        rep.double_covered = Polyomino::from_cells(dbl);
        rep.uncovered = Polyomino::from_cells(unc);
        return rep;
    }

    // row sweep over coverage events; the window contributes its own marker events
    std::map<int, std::vector<std::pair<int, int>>> rows;  // y -> (x, delta); deltas +-1 pieces, +-1000 window
    constexpr int W = 1000;
    for (const auto& pl : placements)
        for (const Run& r : pieces[pl.piece].runs()) {
            auto& ev = rows[r.y + pl.offset.y];
            ev.push_back({r.x0 + pl.offset.x, 1});
            ev.push_back({r.x1 + pl.offset.x, -1});
        }
    for (const Run& r : region.window.runs()) {
        auto& ev = rows[r.y];
        ev.push_back({r.x0, W});
        ev.push_back({r.x1, -W});
    }
    std::vector<Run> dbl, unc, out;
    auto emit = [](std::vector<Run>& v, int y, int a, int b) {
        if (a >= b) return;
        if (!v.empty() && v.back().y == y && v.back().x1 == a)
            v.back().x1 = b;
        else
            v.push_back({y, a, b});
    };
    for (auto& [y, ev] : rows) {
        std::sort(ev.begin(), ev.end());
        int cover = 0, win = 0;
        std::size_t k = 0;
        while (k < ev.size()) {
            int x = ev[k].first;
            for (; k < ev.size() && ev[k].first == x; ++k) {
                if (ev[k].second == W || ev[k].second == -W)
                    win += ev[k].second / W;
                else
                    cover += ev[k].second;
            }
            if (k == ev.size()) break;
            int nx = ev[k].first;
            if (cover > 1) emit(dbl, y, x, nx);
            if (win && cover == 0) emit(unc, y, x, nx);
            if (!win && cover > 0 && !region.boundary_open) emit(out, y, x, nx);
        }
    }
    rep.double_covered = Polyomino::from_runs(std::move(dbl));
    rep.uncovered = Polyomino::from_runs(std::move(unc));
    rep.outside = Polyomino::from_runs(std::move(out));
    return rep;
}

// ---- refinement of abstract assemblies ----

// Concrete placements for an abstract assembly. Tile k of `tiles` maps to piece k + piece_base;
// fillers use piece `filler_piece`, whose shape must be the normalized tiny filler.
inline std::vector<Placement> refine(const std::vector<AbstractTile>& tiles,
                                     const std::vector<AbstractPlacement>& placements, const UnitSet& window,
                                     std::size_t piece_base = 1, std::size_t filler_piece = 0) {
    AssemblyReport rep = verify_assembly(tiles, placements, window);
    if (!rep.conflicts.empty() || !rep.incompatibilities.empty())
        throw IncompatibleError("abstract assembly is not valid");
    std::vector<Placement> out;
    for (const auto& p : placements) out.push_back({p.tile + piece_base, unit_offset(p.offset.u, p.offset.v)});
    for (const auto& f : rep.filler_positions)
        out.push_back({filler_piece, filler_offset(nw_row_center(f.contact.lower.u, f.contact.lower.v, f.spot.index))});
    return out;
}

// Cells of the plain level-3 squares at the given units.
inline Polyomino unit_cells(const UnitSet& units) {
    std::vector<UnitSpec> specs;
    for (Unit x : units) specs.push_back({x.u, x.v, {}});
    return realize_units(specs);
}

// ---- .sol format ----

inline void write_sol(std::ostream& os, const std::vector<std::string>& names, const std::vector<Placement>& pl) {
    for (const auto& p : pl) os << "piece " << names.at(p.piece) << ' ' << p.offset.x << ' ' << p.offset.y << '\n';
}

inline std::vector<Placement> read_sol(std::istream& is, const std::vector<std::string>& names) {
    std::vector<Placement> out;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string tag, name, extra;
        int x = 0, y = 0;
        if (!(ls >> tag >> name >> x >> y) || tag != "piece" || (ls >> extra)) throw FormatError("bad sol line: " + line);
        auto it = std::find(names.begin(), names.end(), name);
        if (it == names.end()) throw FormatError("unknown piece in sol: " + name);
        out.push_back({static_cast<std::size_t>(it - names.begin()), {x, y}});
    }
    return out;
}

}  // namespace ctile
