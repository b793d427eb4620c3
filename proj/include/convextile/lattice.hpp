#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>

#include "grid.hpp"

namespace ctile {

// Full-rank sublattice of Z^2 in Hermite normal form: basis (p,0), (q,r) with p,r > 0, 0 <= q < p.
class Lattice2 {
public:
    Lattice2(Vec a, Vec b) {
        std::int64_t det = static_cast<std::int64_t>(a.x) * b.y - static_cast<std::int64_t>(a.y) * b.x;
        if (det == 0) throw DomainError("torus periods are linearly dependent");
        // extended gcd on the y components
        std::int64_t g = a.y, s = 1, t = 0, g2 = b.y, s2 = 0, t2 = 1;
        while (g2 != 0) {
            std::int64_t k = g / g2;
            std::tie(g, g2) = std::pair{g2, g - k * g2};
            std::tie(s, s2) = std::pair{s2, s - k * s2};
            std::tie(t, t2) = std::pair{t2, t - k * t2};
        }
        if (g < 0) g = -g, s = -s, t = -t;
        r_ = g;
        std::int64_t qx = s * a.x + t * b.x;
        p_ = (det < 0 ? -det : det) / g;
        q_ = ((qx % p_) + p_) % p_;
    }

    std::int64_t p() const { return p_; }
    std::int64_t q() const { return q_; }
    std::int64_t r() const { return r_; }
    std::int64_t index() const { return p_ * r_; }

    // unique representative in [0,p) x [0,r)
    Cell reduce(Cell c) const {
        std::int64_t k = floor_div(c.y, r_);
        std::int64_t y = c.y - k * r_;
        std::int64_t x = c.x - k * q_;
        x = ((x % p_) + p_) % p_;
        return {static_cast<int>(x), static_cast<int>(y)};
    }
    std::int64_t slot(Cell c) const {
        Cell d = reduce(c);
        return static_cast<std::int64_t>(d.y) * p_ + d.x;
    }
    Cell cell_of(std::int64_t slot) const { return {static_cast<int>(slot % p_), static_cast<int>(slot / p_)}; }
    bool contains(Vec v) const { return reduce(v) == Cell{0, 0}; }

private:
    static std::int64_t floor_div(std::int64_t a, std::int64_t b) {
        std::int64_t q = a / b;
        if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
        return q;
    }
    std::int64_t p_ = 1, q_ = 0, r_ = 1;
};

}  // namespace ctile
