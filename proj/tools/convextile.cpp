// convextile: compile Wang sets into seven convex polyominoes and check the result.
//
// Exit codes: 0 ok, 1 negative verdict, 2 usage or format error, 3 search limit reached.

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "convextile/bn.hpp"
#include "convextile/pattern.hpp"
#include "convextile/render.hpp"
#include "convextile/selftest.hpp"
#include "convextile/solver.hpp"

namespace fs = std::filesystem;
using namespace ctile;

namespace {

enum Exit { kOk = 0, kNegative = 1, kUsage = 2, kExhausted = 3 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    return in;
}

WangSet load_wang(const std::string& path) {
    auto in = open_in(path);
    return read_wang(in);
}

NamedPolyomino load_poly(const std::string& path) {
    auto in = open_in(path);
    return read_poly(in);
}

// every .poly in a directory, by file name
std::vector<NamedPolyomino> load_pieces(const std::string& dir) {
    if (!fs::is_directory(dir)) throw UsageError(dir + " is not a directory");
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.path().extension() == ".poly") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    if (files.empty()) throw UsageError("no .poly files in " + dir);
    std::vector<NamedPolyomino> out;
    for (const auto& f : files) out.push_back(load_poly(f.string()));
    return out;
}

std::pair<int, int> parse_size(const std::string& s) {
    int w = 0, h = 0;
    char x = 0, extra = 0;
    std::istringstream is(s);
    if (!(is >> w >> x >> h) || (x != 'x' && x != 'X') || (is >> extra) || w < 1 || h < 1)
        throw UsageError("expected WxH, got " + s);
    return {w, h};
}

std::vector<int> parse_ints(const std::string& s, std::size_t count) {
    std::vector<int> out;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(tok, &used));
            if (used != tok.size()) throw UsageError("bad integer " + tok);
        } catch (const std::logic_error&) {
            throw UsageError("bad integer list " + s);
        }
    }
    if (out.size() != count) throw UsageError("expected " + std::to_string(count) + " comma-separated integers, got " + s);
    return out;
}

TileClass class_of_piece(const std::string& name) {
    if (name.rfind("locator", 0) == 0) return TileClass::Locator;
    if (name == "encoder") return TileClass::Encoder;
    if (name.find("linker") != std::string::npos) return TileClass::Linker;
    return TileClass::Filler;
}

int status_exit(SearchStatus s) {
    switch (s) {
        case SearchStatus::Solved: return kOk;
        case SearchStatus::Unsolvable: return kNegative;
        case SearchStatus::ResourceExhausted: return kExhausted;
    }
    return kUsage;
}

const char* status_name(SearchStatus s) {
    switch (s) {
        case SearchStatus::Solved: return "SOLVED";
        case SearchStatus::Unsolvable: return "UNSOLVABLE";
        case SearchStatus::ResourceExhausted: return "RESOURCE-EXHAUSTED";
    }
    return "?";
}

// ---- subcommands ----

int cmd_compile(const std::string& in, const std::string& out) {
    WangSet ws = load_wang(in);
    TileSet7 ts = compile(ws);
    fs::create_directories(out);
    for (const auto& p : ts.pieces) {
        std::ofstream f(fs::path(out) / (p.name + ".poly"));
        write_poly(f, p.name, p.shape);
        if (!f) throw UsageError("cannot write " + p.name + ".poly");
    }
    std::ofstream m(fs::path(out) / "manifest.txt");
    write_manifest(m, ts);
    std::cout << "wrote " << ts.pieces.size() << " pieces to " << out << '\n';
    return kOk;
}

int cmd_audit(const std::string& path) {
    std::vector<NamedPolyomino> pieces;
    if (fs::is_directory(path)) {
        pieces = load_pieces(path);
    } else {
        TileSet7 ts = compile(load_wang(path));
        for (auto& p : ts.pieces) pieces.push_back({p.name, std::move(p.shape)});
    }
    int good = 0;
    for (const auto& p : pieces) {
        bool convex = is_orthogonally_convex(p.shape), conn = is_connected(p.shape);
        good += convex && conn;
        std::cout << p.name << " cells=" << p.shape.size() << " convex=" << (convex ? "yes" : "no")
                  << " connected=" << (conn ? "yes" : "no") << '\n';
    }
    std::cout << good << '/' << pieces.size() << " orthogonally convex and connected\n";
    return good == static_cast<int>(pieces.size()) ? kOk : kNegative;
}

int cmd_bn(const std::string& path) {
    Polyomino p = load_poly(path).shape;
    auto v = is_translational_monotile(p);
    if (!v.tiles) {
        std::cout << "DOES-NOT-TILE\n";
        return kNegative;
    }
    BoundaryWord w = boundary_word(p);
    std::cout << "TILES\nword " << w.letters << '\n' << "start " << v.witness->start << " lengths " << v.witness->len[0]
              << ' ' << v.witness->len[1] << ' ' << v.witness->len[2] << '\n';
    const char* names[] = {"X", "Y", "Z", "X^", "Y^", "Z^"};
    auto r = v.witness->ranges();
    for (int k = 0; k < 6; ++k) std::cout << names[k] << " [" << r[k].first << ',' << r[k].second << ")\n";
    auto t = factor_translations(w, *v.witness);
    std::cout << "periods";
    for (Vec d : t) std::cout << " (" << d.x << ',' << d.y << ')';
    std::cout << '\n';
    return kOk;
}

struct AssembleArgs {
    std::string wang, asm_file, window, torus, pattern;
    std::uint64_t node_limit = SearchLimits{}.node_limit;
};

int cmd_assemble(const AssembleArgs& a) {
    TileSet7 ts = compile(load_wang(a.wang), {false});
    auto tiles = ts.abstract_tiles();
    const Formulas& f = ts.formulas;
    if (!a.torus.empty()) {
        auto [w, h] = parse_size(a.torus);
        Unit R = f.wang_right(), U = f.wang_up();
        Lattice2 L({w * R.u, w * R.v}, {h * U.u, h * U.v});
        auto sol = abstract_solve(tiles, AbstractRegion{L}, {a.node_limit});
        std::cout << "# " << status_name(sol.status) << " nodes=" << sol.nodes << '\n';
        write_asm(std::cout, tiles, sol.placements);
        return status_exit(sol.status);
    }
    if (!a.pattern.empty()) {
        auto [w, h] = parse_size(a.pattern);
        auto g = wang_torus_solve(ts.source, w, h);
        if (!g) {
            std::cout << "# no Wang tiling of the " << a.pattern << " torus\n";
            return kNegative;
        }
        auto at = [&](int x, int y) { return (*g)[((y % h) + h) % h][((x % w) + w) % w]; };
        write_asm(std::cout, tiles, placements_of(rigid_pattern(ts, -1, w, -1, h, at)));
        return kOk;
    }
    if (a.asm_file.empty()) throw UsageError("assemble needs an .asm file, --torus or --pattern");
    auto in = open_in(a.asm_file);
    auto pl = read_asm(in, tiles);
    UnitSet window;
    if (!a.window.empty()) {
        auto b = parse_ints(a.window, 4);
        window = rect_window({b[0], b[1]}, {b[2], b[3]});
    } else {
        for (const auto& p : pl)
            for (Unit x : tiles[p.tile].units) window.insert(x + p.offset);
    }
    auto rep = verify_assembly(tiles, pl, window);
    write_report(std::cout, rep, tiles, pl);
    return rep.valid() ? kOk : kNegative;
}

struct RegionArgs {
    std::string region, torus;
    bool open = false;
};

Region make_region(const RegionArgs& a) {
    if (!a.torus.empty()) {
        auto v = parse_ints(a.torus, 4);
        return Region::make_torus({v[0], v[1]}, {v[2], v[3]});
    }
    if (a.region.empty()) throw UsageError("need --region or --torus");
    if (a.region.rfind("rect ", 0) == 0) {
        auto [w, h] = parse_size(a.region.substr(5));
        return Region::make_window(Polyomino::rect(w, h), a.open);
    }
    return Region::make_window(load_poly(a.region).shape, a.open);
}

std::vector<std::string> names_of(const std::vector<NamedPolyomino>& ps) {
    std::vector<std::string> out;
    for (const auto& p : ps) out.push_back(p.name);
    return out;
}

std::vector<Polyomino> shapes_of(const std::vector<NamedPolyomino>& ps) {
    std::vector<Polyomino> out;
    for (const auto& p : ps) out.push_back(p.shape);
    return out;
}

int cmd_solve(const std::string& dir, const RegionArgs& r, std::uint64_t limit) {
    auto pieces = load_pieces(dir);
    auto res = solve_exact_cover(shapes_of(pieces), make_region(r), {limit});
    std::cout << "# " << status_name(res.status) << " nodes=" << res.nodes << '\n';
    write_sol(std::cout, names_of(pieces), res.placements);
    return status_exit(res.status);
}

int cmd_verify(const std::string& dir, const RegionArgs& r, const std::string& sol) {
    auto pieces = load_pieces(dir);
    auto in = open_in(sol);
    auto pl = read_sol(in, names_of(pieces));
    auto rep = verify_tiling(shapes_of(pieces), pl, make_region(r));
    auto list = [](const char* tag, const Polyomino& p) {
        for (Cell c : p.cells()) std::cout << tag << ' ' << c.x << ' ' << c.y << '\n';
    };
    list("double", rep.double_covered);
    list("uncovered", rep.uncovered);
    list("outside", rep.outside);
    std::cout << (rep.clean() ? "CLEAN" : "VIOLATIONS") << " placements=" << pl.size() << '\n';
    return rep.clean() ? kOk : kNegative;
}

int cmd_wang_torus(const std::string& in, const std::string& size) {
    WangSet ws = load_wang(in);
    auto [w, h] = parse_size(size);
    auto g = wang_torus_solve(ws, w, h);
    if (!g) {
        std::cout << "UNSOLVABLE\n";
        return kNegative;
    }
    std::cout << "SOLVED\n";
    for (int y = h - 1; y >= 0; --y) {
        for (int x = 0; x < w; ++x) std::cout << (x ? " " : "") << (*g)[y][x];
        std::cout << '\n';
    }
    return kOk;
}

int cmd_render(const std::vector<std::string>& files, const std::string& out, int scale, const std::string& palette,
               const std::string& wang) {
    RenderStyle style;
    style.scale = scale;
    if (palette == "paper")
        style.palette = Palette::Paper;
    else if (palette != "default")
        throw UsageError("palette must be default or paper");
    std::vector<RenderItem> items;
    std::optional<std::vector<AbstractTile>> tiles;
    for (const auto& f : files) {
        if (fs::path(f).extension() == ".asm") {
            if (wang.empty()) throw UsageError("rendering .asm files needs --wang");
            if (!tiles) tiles = compile(load_wang(wang), {false}).abstract_tiles();
            auto in = open_in(f);
            AssemblyItem a{*tiles, read_asm(in, *tiles), {}};
            UnitSet all;
            for (const auto& p : a.placements)
                for (Unit x : (*tiles)[p.tile].units) all.insert(x + p.offset);
            a.fillers = verify_assembly(*tiles, a.placements, all).filler_positions;
            items.push_back(std::move(a));
        } else {
            auto p = load_poly(f);
            items.push_back(ShapeItem{p.shape, class_of_piece(p.name), true, p.name});
        }
    }
    std::ofstream os(out);
    if (!os) throw UsageError("cannot write " + out);
    os << render_svg(items, style);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Wang tiles to seven orthogonally convex polyominoes"};
    app.require_subcommand(1);
    int code = kOk;

    std::string in, out, dir, sol, size, palette = "default", wang;
    std::vector<std::string> files;
    std::vector<int> ids;
    int scale = 4;
    std::uint64_t limit = SolveConfig{}.node_limit;
    bool deterministic = true;
    RegionArgs region;
    AssembleArgs asmargs;
    app.add_flag("--deterministic,!--no-deterministic", deterministic, "fixed search order (always on)");

    auto* c = app.add_subcommand("compile", "compile a .wang file into seven .poly files");
    c->add_option("wang", in, "input .wang")->required();
    c->add_option("-o,--out", out, "output directory")->required();
    c->callback([&] { code = cmd_compile(in, out); });

    auto* au = app.add_subcommand("audit", "convexity and connectivity of a compiled directory or .wang file");
    au->add_option("path", in)->required();
    au->callback([&] { code = cmd_audit(in); });

    auto* bn = app.add_subcommand("bn-check", "translational monotile test of one .poly");
    bn->add_option("poly", in)->required();
    bn->callback([&] { code = cmd_bn(in); });

    auto* as = app.add_subcommand("assemble", "verify an abstract assembly or solve one on a torus");
    as->add_option("wang", asmargs.wang)->required();
    as->add_option("asm", asmargs.asm_file);
    as->add_option("--window", asmargs.window, "u0,v0,u1,v1 (default: covered units)");
    as->add_option("--torus", asmargs.torus, "solve on the torus of WxH simulated Wang cells");
    as->add_option("--pattern", asmargs.pattern, "emit the rigid pattern over a WxH Wang torus solution");
    as->add_option("--node-limit", asmargs.node_limit);
    as->callback([&] { code = cmd_assemble(asmargs); });

    auto add_region = [&](CLI::App* s) {
        s->add_option("--pieces", dir, "directory of .poly files")->required();
        s->add_option("--region", region.region, "'rect WxH' or a .poly file");
        s->add_option("--torus", region.torus, "periods u1,u2,v1,v2");
        s->add_flag("--open", region.open, "pieces may extend past the window");
    };
    auto* so = app.add_subcommand("solve", "exact-cover tiling of a window or torus");
    add_region(so);
    so->add_option("--node-limit", limit);
    so->callback([&] { code = cmd_solve(dir, region, limit); });

    auto* ve = app.add_subcommand("verify", "check a .sol against a region");
    add_region(ve);
    ve->add_option("--sol", sol)->required();
    ve->callback([&] { code = cmd_verify(dir, region, sol); });

    auto* wt = app.add_subcommand("wang-torus", "solve a Wang set on a torus");
    wt->add_option("wang", in)->required();
    wt->add_option("--size", size, "WxH")->required();
    wt->callback([&] { code = cmd_wang_torus(in, size); });

    auto* re = app.add_subcommand("render", "SVG of .poly and .asm files");
    re->add_option("files", files)->required();
    re->add_option("-o,--out", out)->required();
    re->add_option("--scale", scale);
    re->add_option("--palette", palette);
    re->add_option("--wang", wang, "Wang set the .asm files refer to");
    re->callback([&] { code = cmd_render(files, out, scale, palette, wang); });

    auto* st = app.add_subcommand("selftest", "run the acceptance suite on the built-in example set");
    st->add_option("ids", ids, "criterion numbers (default all)");
    st->callback([&] { code = acceptance::run_all(std::cout, ids) ? kNegative : kOk; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int r = app.exit(e);
        return r == 0 ? kOk : kUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const FormatError& e) {
        std::cerr << "format error: " << e.what() << '\n';
        return kUsage;
    } catch (const GeometryError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const IncompatibleError& e) {
        std::cerr << "invalid: " << e.what() << '\n';
        return kNegative;
    }
    return code;
}
