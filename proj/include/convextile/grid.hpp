#pragma once

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdint>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <tuple>
#include <utility>
#include <vector>

namespace ctile {

struct Cell {
    int x = 0;
    int y = 0;
    friend constexpr bool operator==(Cell, Cell) = default;
    friend constexpr auto operator<=>(Cell, Cell) = default;
    constexpr Cell operator+(Cell o) const { return {x + o.x, y + o.y}; }
    constexpr Cell operator-(Cell o) const { return {x - o.x, y - o.y}; }
    constexpr Cell operator-() const { return {-x, -y}; }
    constexpr Cell operator*(int k) const { return {x * k, y * k}; }
};
using Vec = Cell;

// row-major order, the order used by the .poly format
constexpr bool row_less(Cell a, Cell b) { return a.y != b.y ? a.y < b.y : a.x < b.x; }

// half-open horizontal run [x0, x1) on row y
struct Run {
    int y = 0;
    int x0 = 0;
    int x1 = 0;
    friend constexpr bool operator==(const Run&, const Run&) = default;
    constexpr int length() const { return x1 - x0; }
};

struct GeometryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DomainError : GeometryError {
    using GeometryError::GeometryError;
};
struct HoleError : GeometryError {
    using GeometryError::GeometryError;
};
struct DisconnectedError : GeometryError {
    using GeometryError::GeometryError;
};
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct OverlapError : GeometryError {
    std::size_t first;
    std::size_t second;
    OverlapError(std::size_t a, std::size_t b)
        : GeometryError("parts " + std::to_string(a) + " and " + std::to_string(b) + " overlap"),
          first(a), second(b) {}
};

namespace detail {

inline bool run_less(const Run& a, const Run& b) {
    return a.y != b.y ? a.y < b.y : a.x0 < b.x0;
}

// sorts, then joins touching runs; overlapping input is reported through `on_overlap`
template <class F>
std::vector<Run> canonical_runs(std::vector<Run> rs, F&& on_overlap) {
    std::erase_if(rs, [](const Run& r) { return r.x1 <= r.x0; });
    std::sort(rs.begin(), rs.end(), run_less);
    std::vector<Run> out;
    out.reserve(rs.size());
    for (const Run& r : rs) {
        if (!out.empty() && out.back().y == r.y && r.x0 <= out.back().x1) {
            if (r.x0 < out.back().x1) on_overlap();
            out.back().x1 = std::max(out.back().x1, r.x1);
        } else {
            out.push_back(r);
        }
    }
    return out;
}

// walks both run lists row by row; `emit(y, a_runs, b_runs)` sees the spans of each row
template <class F>
void zip_rows(std::span<const Run> a, std::span<const Run> b, F&& emit) {
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        int y = std::numeric_limits<int>::max();
        if (i < a.size()) y = a[i].y;
        if (j < b.size()) y = std::min(y, b[j].y);
        std::size_t i2 = i, j2 = j;
        while (i2 < a.size() && a[i2].y == y) ++i2;
        while (j2 < b.size() && b[j2].y == y) ++j2;
        emit(y, a.subspan(i, i2 - i), b.subspan(j, j2 - j));
        i = i2;
        j = j2;
    }
}

enum class SetOp { Union, Intersect, Subtract };

inline void row_op(int y, std::span<const Run> a, std::span<const Run> b, SetOp op, std::vector<Run>& out) {
    // sweep over interval endpoints of two sorted disjoint run lists
    std::vector<std::pair<int, int>> ev;  // (x, delta) with delta 1/2 for a, -1/-2 for b end
    ev.reserve(2 * (a.size() + b.size()));
    for (const Run& r : a) ev.push_back({r.x0, 1}), ev.push_back({r.x1, -1});
    for (const Run& r : b) ev.push_back({r.x0, 2}), ev.push_back({r.x1, -2});
    std::sort(ev.begin(), ev.end());
    bool ina = false, inb = false;
    auto inside = [&] {
        switch (op) {
            case SetOp::Union: return ina || inb;
            case SetOp::Intersect: return ina && inb;
            case SetOp::Subtract: return ina && !inb;
        }
        return false;
    };
    int start = 0;
    std::size_t k = 0;
    while (k < ev.size()) {
        int x = ev[k].first;
        bool before = inside();
        for (; k < ev.size() && ev[k].first == x; ++k) {
            switch (ev[k].second) {
                case 1: ina = true; break;
                case -1: ina = false; break;
                case 2: inb = true; break;
                case -2: inb = false; break;
            }
        }
        bool after = inside();
        if (!before && after) start = x;
        if (before && !after) {
            if (!out.empty() && out.back().y == y && out.back().x1 == start)
                out.back().x1 = x;
            else
                out.push_back({y, start, x});
        }
    }
}

}  // namespace detail

// Finite set of unit cells stored as canonical row runs (sorted, maximal, disjoint).
class Polyomino {
public:
    Polyomino() = default;

    static Polyomino from_runs(std::vector<Run> rs) {
        Polyomino p;
        p.runs_ = detail::canonical_runs(std::move(rs), [] { throw OverlapError(0, 0); });
        return p;
    }
    // overlapping runs are merged rather than rejected
    static Polyomino from_runs_lenient(std::vector<Run> rs) {
        Polyomino p;
        p.runs_ = detail::canonical_runs(std::move(rs), [] {});
        return p;
    }
    static Polyomino from_cells(std::span<const Cell> cs) {
        std::vector<Run> rs;
        rs.reserve(cs.size());
        for (Cell c : cs) rs.push_back({c.y, c.x, c.x + 1});
        try {
            return from_runs(std::move(rs));
        } catch (const OverlapError&) {
            throw DomainError("duplicate cell");
        }
    }
    static Polyomino from_cells(std::initializer_list<Cell> cs) {
        return from_cells(std::span<const Cell>(cs.begin(), cs.size()));
    }
    static Polyomino rect(int w, int h, Cell origin = {}) {
        std::vector<Run> rs;
        for (int y = 0; y < h; ++y) rs.push_back({origin.y + y, origin.x, origin.x + w});
        return from_runs(std::move(rs));
    }

    const std::vector<Run>& runs() const { return runs_; }
    bool empty() const { return runs_.empty(); }
    std::int64_t size() const {
        std::int64_t n = 0;
        for (const Run& r : runs_) n += r.length();
        return n;
    }

    bool contains(Cell c) const {
        auto it = std::upper_bound(runs_.begin(), runs_.end(), Run{c.y, c.x, c.x},
                                   [](const Run& a, const Run& b) { return detail::run_less(a, b); });
        if (it == runs_.begin()) return false;
        --it;
        return it->y == c.y && it->x0 <= c.x && c.x < it->x1;
    }

    std::vector<Cell> cells() const {
        std::vector<Cell> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (const Run& r : runs_)
            for (int x = r.x0; x < r.x1; ++x) out.push_back({x, r.y});
        return out;
    }

    struct Box {
        int xmin, ymin, xmax, ymax;  // inclusive
    };
    Box bounds() const {
        if (runs_.empty()) throw DomainError("empty polyomino has no bounds");
        Box b{runs_.front().x0, runs_.front().y, runs_.front().x1 - 1, runs_.back().y};
        for (const Run& r : runs_) b.xmin = std::min(b.xmin, r.x0), b.xmax = std::max(b.xmax, r.x1 - 1);
        return b;
    }

    Polyomino translated(Vec v) const {
        Polyomino p;
        p.runs_.reserve(runs_.size());
        for (const Run& r : runs_) p.runs_.push_back({r.y + v.y, r.x0 + v.x, r.x1 + v.x});
        return p;
    }
    Polyomino normalized() const {
        if (empty()) return {};
        auto b = bounds();
        return translated({-b.xmin, -b.ymin});
    }
    bool is_normalized() const {
        if (empty()) return false;
        auto b = bounds();
        return b.xmin == 0 && b.ymin == 0;
    }

    std::span<const Run> row(int y) const {
        auto lo = std::lower_bound(runs_.begin(), runs_.end(), y, [](const Run& r, int v) { return r.y < v; });
        auto hi = std::upper_bound(lo, runs_.end(), y, [](int v, const Run& r) { return v < r.y; });
        return {lo, hi};
    }

    friend bool operator==(const Polyomino&, const Polyomino&) = default;

private:
    std::vector<Run> runs_;
};

inline Polyomino translate(const Polyomino& p, Vec v) { return p.translated(v); }

namespace detail {
inline Polyomino set_op(const Polyomino& a, const Polyomino& b, SetOp op) {
    std::vector<Run> out;
    zip_rows(a.runs(), b.runs(), [&](int y, std::span<const Run> ra, std::span<const Run> rb) {
        row_op(y, ra, rb, op, out);
    });
    return Polyomino::from_runs(std::move(out));
}
}  // namespace detail

inline Polyomino unite(const Polyomino& a, const Polyomino& b) { return detail::set_op(a, b, detail::SetOp::Union); }
inline Polyomino intersect(const Polyomino& a, const Polyomino& b) { return detail::set_op(a, b, detail::SetOp::Intersect); }
inline Polyomino subtract(const Polyomino& a, const Polyomino& b) { return detail::set_op(a, b, detail::SetOp::Subtract); }

inline bool overlaps(const Polyomino& a, const Polyomino& b) {
    const auto& ra = a.runs();
    const auto& rb = b.runs();
    std::size_t i = 0, j = 0;
    while (i < ra.size() && j < rb.size()) {
        const Run& p = ra[i];
        const Run& q = rb[j];
        if (p.y == q.y && std::max(p.x0, q.x0) < std::min(p.x1, q.x1)) return true;
        if (p.y < q.y || (p.y == q.y && p.x1 <= q.x1))
            ++i;
        else
            ++j;
    }
    return false;
}

// Disjoint union; OverlapError names the first offending pair (indices into parts).
inline Polyomino union_disjoint(std::span<const Polyomino> parts) {
    struct Tagged {
        Run r;
        std::size_t part;
    };
    std::vector<Tagged> all;
    std::size_t total = 0;
    for (const auto& p : parts) total += p.runs().size();
    all.reserve(total);
    for (std::size_t k = 0; k < parts.size(); ++k)
        for (const Run& r : parts[k].runs()) all.push_back({r, k});
    std::sort(all.begin(), all.end(), [](const Tagged& a, const Tagged& b) {
        if (a.r.y != b.r.y) return a.r.y < b.r.y;
        if (a.r.x0 != b.r.x0) return a.r.x0 < b.r.x0;
        return a.part < b.part;
    });
    std::vector<Run> out;
    out.reserve(all.size());
    std::size_t owner = 0;  // part holding the furthest-reaching run of the current row
    for (const Tagged& t : all) {
        if (!out.empty() && out.back().y == t.r.y && t.r.x0 <= out.back().x1) {
            if (t.r.x0 < out.back().x1) throw OverlapError(std::min(owner, t.part), std::max(owner, t.part));
            out.back().x1 = t.r.x1;
        } else {
            out.push_back(t.r);
        }
        owner = t.part;
    }
    return Polyomino::from_runs(std::move(out));
}
inline Polyomino union_disjoint(std::initializer_list<Polyomino> parts) {
    return union_disjoint(std::span<const Polyomino>(parts.begin(), parts.size()));
}

namespace detail {
struct Dsu {
    std::vector<std::size_t> parent;
    explicit Dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
    std::size_t find(std::size_t a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    bool join(std::size_t a, std::size_t b) {
        a = find(a), b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }
};

// calls f(i, j) for every edge-adjacent pair of runs (rows y and y+1 sharing a column)
template <class F>
void for_adjacent_runs(const std::vector<Run>& rs, F&& f) {
    std::size_t lo = 0;
    while (lo < rs.size()) {
        std::size_t hi = lo;
        while (hi < rs.size() && rs[hi].y == rs[lo].y) ++hi;
        std::size_t nlo = hi, nhi = hi;
        while (nhi < rs.size() && rs[nhi].y == rs[lo].y + 1) ++nhi;
        std::size_t a = lo, b = nlo;
        while (a < hi && b < nhi) {
            if (std::max(rs[a].x0, rs[b].x0) < std::min(rs[a].x1, rs[b].x1)) f(a, b);
            if (rs[a].x1 <= rs[b].x1)
                ++a;
            else
                ++b;
        }
        lo = hi;
    }
}
}  // namespace detail

// Connected components (4-neighbourhood), each as its own polyomino, ordered by first run.
inline std::vector<Polyomino> components(const Polyomino& p) {
    const auto& rs = p.runs();
    detail::Dsu d(rs.size());
    detail::for_adjacent_runs(rs, [&](std::size_t a, std::size_t b) { d.join(a, b); });
    std::unordered_map<std::size_t, std::size_t> slot;
    std::vector<std::vector<Run>> parts;
    for (std::size_t k = 0; k < rs.size(); ++k) {
        auto [it, fresh] = slot.try_emplace(d.find(k), parts.size());
        if (fresh) parts.emplace_back();
        parts[it->second].push_back(rs[k]);
    }
    std::vector<Polyomino> out;
    for (auto& v : parts) out.push_back(Polyomino::from_runs(std::move(v)));
    return out;
}

inline bool is_connected(const Polyomino& p) {
    const auto& rs = p.runs();
    if (rs.empty()) return false;
    detail::Dsu d(rs.size());
    std::size_t merges = 0;
    detail::for_adjacent_runs(rs, [&](std::size_t a, std::size_t b) { merges += d.join(a, b); });
    return merges + 1 == rs.size();
}

// every row and every column meets p in one segment (or not at all)
inline bool is_orthogonally_convex(const Polyomino& p) {
    const auto& rs = p.runs();
    if (rs.empty()) return true;
    for (std::size_t k = 1; k < rs.size(); ++k)
        if (rs[k].y == rs[k - 1].y) return false;
    auto b = p.bounds();
    // a column segment starts wherever a cell has no cell below it; at most one start per column
    std::vector<int> starts(static_cast<std::size_t>(b.xmax - b.xmin + 2), 0);
    const Run* below = nullptr;
    for (const Run& r : rs) {
        auto mark = [&](int x0, int x1) {
            if (x0 >= x1) return;
            starts[x0 - b.xmin] += 1;
            starts[x1 - b.xmin] -= 1;
        };
        if (below && below->y == r.y - 1) {
            mark(r.x0, std::min(r.x1, below->x0));
            mark(std::max(r.x0, below->x1), r.x1);
        } else {
            mark(r.x0, r.x1);
        }
        below = &r;
    }
    int acc = 0;
    for (int s : starts) {
        acc += s;
        if (acc > 1) return false;
    }
    return true;
}

// Outer boundary traced counterclockwise from the lexicographically least vertex.
struct BoundaryWord {
    Cell start;
    std::string letters;  // over U D L R

    std::size_t size() const { return letters.size(); }
    bool closed() const {
        Vec d = displacement(0, letters.size());
        return d.x == 0 && d.y == 0;
    }
    Vec displacement(std::size_t from, std::size_t len) const {
        Vec d{};
        for (std::size_t k = 0; k < len; ++k) d = d + step(letters[(from + k) % letters.size()]);
        return d;
    }
    static constexpr Vec step(char c) {
        switch (c) {
            case 'U': return {0, 1};
            case 'D': return {0, -1};
            case 'L': return {-1, 0};
            case 'R': return {1, 0};
        }
        return {};
    }
    static constexpr char complement(char c) {
        switch (c) {
            case 'U': return 'D';
            case 'D': return 'U';
            case 'L': return 'R';
            case 'R': return 'L';
        }
        return c;
    }
    // signed shoelace area; positive for a counterclockwise word
    std::int64_t area() const {
        std::int64_t twice = 0;
        Cell p = start;
        for (char c : letters) {
            Cell q = p + step(c);
            twice += static_cast<std::int64_t>(p.x) * q.y - static_cast<std::int64_t>(q.x) * p.y;
            p = q;
        }
        return twice / 2;
    }
};

inline BoundaryWord boundary_word(const Polyomino& p) {
    if (p.empty()) throw DomainError("empty polyomino");
    if (!is_connected(p)) throw DisconnectedError("polyomino is not connected");
    const auto& rs = p.runs();

    struct Key {
        std::size_t operator()(Cell c) const {
            return std::hash<std::int64_t>()((static_cast<std::int64_t>(c.x) << 32) ^ static_cast<std::uint32_t>(c.y));
        }
    };
    // at most two outgoing edges per vertex (two only at pinch vertices)
    std::unordered_map<Cell, std::string, Key> out;
    std::size_t edges = 0;
    auto add = [&](Cell v, char c) {
        out[v].push_back(c);
        ++edges;
    };
    // bottom edges: row y minus row y-1; top edges: row y minus row y+1
    for (std::size_t lo = 0; lo < rs.size();) {
        std::size_t hi = lo;
        int y = rs[lo].y;
        while (hi < rs.size() && rs[hi].y == y) ++hi;
        std::span<const Run> cur(rs.data() + lo, hi - lo);
        std::vector<Run> bottom, top;
        detail::row_op(y, cur, p.row(y - 1), detail::SetOp::Subtract, bottom);
        detail::row_op(y, cur, p.row(y + 1), detail::SetOp::Subtract, top);
        for (const Run& r : bottom)
            for (int x = r.x0; x < r.x1; ++x) add({x, y}, 'R');
        for (const Run& r : top)
            for (int x = r.x0; x < r.x1; ++x) add({x + 1, y + 1}, 'L');
        for (const Run& r : cur) {
            add({r.x0, y + 1}, 'D');
            add({r.x1, y}, 'U');
        }
        lo = hi;
    }

    Cell start{rs.front().x0, rs.front().y};
    for (const Run& r : rs)
        if (Cell{r.x0, r.y} < start) start = {r.x0, r.y};

    auto turn_rank = [](char in, char o) {
        // prefer the left turn so a pinch vertex never switches to the diagonal cell
        auto idx = [](char c) { return static_cast<int>(std::string_view("RULD").find(c)); };
        int d = (idx(o) - idx(in) + 4) % 4;
        return d == 1 ? 0 : d == 0 ? 1 : 2;
    };

    BoundaryWord w{start, {}};
    Cell v = start;
    char prev = 'U';
    do {
        auto it = out.find(v);
        if (it == out.end() || it->second.empty()) throw HoleError("boundary trace broke");
        std::string& opts = it->second;
        std::size_t pick = 0;
        for (std::size_t k = 1; k < opts.size(); ++k)
            if (turn_rank(prev, opts[k]) < turn_rank(prev, opts[pick])) pick = k;
        char c = opts[pick];
        opts.erase(pick, 1);
        w.letters.push_back(c);
        v = v + BoundaryWord::step(c);
        prev = c;
    } while (v != start);
    if (w.letters.size() != edges) throw HoleError("polyomino has a hole");
    return w;
}

// ---- .poly text format ----

inline void write_poly(std::ostream& os, const std::string& name, const Polyomino& p) {
    Polyomino q = p.normalized();
    os << "poly " << name << ' ' << q.size() << '\n';
    std::string buf;
    buf.reserve(1 << 16);
    auto put = [&](int v, char sep) {
        std::array<char, 16> tmp{};
        auto [end, ec] = std::to_chars(tmp.data(), tmp.data() + tmp.size(), v);
        buf.append(tmp.data(), end);
        buf.push_back(sep);
    };
    for (const Run& r : q.runs()) {
        for (int x = r.x0; x < r.x1; ++x) {
            put(x, ' ');
            put(r.y, '\n');
        }
        if (buf.size() > (1 << 16) - 512) os << buf, buf.clear();
    }
    os << buf;
}

struct NamedPolyomino {
    std::string name;
    Polyomino shape;
};

inline NamedPolyomino read_poly(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw FormatError("missing poly header");
    std::istringstream hs(line);
    std::string tag, name;
    long long count = -1;
    if (!(hs >> tag >> name >> count) || tag != "poly" || count < 0) throw FormatError("bad poly header: " + line);
    std::vector<Run> rs;
    rs.reserve(static_cast<std::size_t>(count));
    long long seen = 0;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        const char* b = line.data();
        const char* e = b + line.size();
        int x = 0, y = 0;
        auto r1 = std::from_chars(b, e, x);
        if (r1.ec != std::errc() || r1.ptr == e || *r1.ptr != ' ') throw FormatError("bad cell line: " + line);
        auto r2 = std::from_chars(r1.ptr + 1, e, y);
        if (r2.ec != std::errc() || r2.ptr != e) throw FormatError("bad cell line: " + line);
        rs.push_back({y, x, x + 1});
        ++seen;
    }
    if (seen != count) throw FormatError("cell count mismatch in poly " + name);
    try {
        return {name, Polyomino::from_runs(std::move(rs))};
    } catch (const OverlapError&) {
        throw FormatError("duplicate cell in poly " + name);
    }
}

}  // namespace ctile
