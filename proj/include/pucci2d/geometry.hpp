#pragma once

#include <algorithm>
#include <cmath>

namespace pucci2d {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2() = default;
    Vec2(double x_, double y_) : x(x_), y(y_) {}

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    double dot(const Vec2& o) const { return x * o.x + y * o.y; }
    double norm2() const { return x * x + y * y; }
    double norm() const { return std::sqrt(norm2()); }
};

inline Vec2 operator*(double s, const Vec2& v) { return v * s; }

/// Symmetric 2x2 matrix [[xx, xy], [xy, yy]].
struct Sym2 {
    double xx = 0.0;
    double xy = 0.0;
    double yy = 0.0;

    Sym2() = default;
    Sym2(double xx_, double xy_, double yy_) : xx(xx_), xy(xy_), yy(yy_) {}

    static Sym2 identity() { return {1.0, 0.0, 1.0}; }
    static Sym2 diag(double d1, double d2) { return {d1, 0.0, d2}; }
    static Sym2 outer(const Vec2& v) { return {v.x * v.x, v.x * v.y, v.y * v.y}; }

    double trace() const { return xx + yy; }

    Sym2 operator+(const Sym2& o) const { return {xx + o.xx, xy + o.xy, yy + o.yy}; }
    Sym2 operator-() const { return {-xx, -xy, -yy}; }
    Sym2 operator*(double s) const { return {xx * s, xy * s, yy * s}; }

    /// Exact eigenvalues, ascending.
    void eigenvalues(double& lo, double& hi) const {
        const double mean = 0.5 * (xx + yy);
        const double d = 0.5 * (xx - yy);
        const double r = std::sqrt(d * d + xy * xy);
        lo = mean - r;
        hi = mean + r;
    }
};

inline Sym2 operator*(double s, const Sym2& m) { return m * s; }

struct BBox {
    double xmin = 0.0, ymin = 0.0, xmax = 0.0, ymax = 0.0;

    bool valid() const { return xmin <= xmax && ymin <= ymax; }
    static BBox hull(const BBox& a, const BBox& b) {
        return {std::min(a.xmin, b.xmin), std::min(a.ymin, b.ymin),
                std::max(a.xmax, b.xmax), std::max(a.ymax, b.ymax)};
    }
    static BBox overlap(const BBox& a, const BBox& b) {
        return {std::max(a.xmin, b.xmin), std::max(a.ymin, b.ymin),
                std::min(a.xmax, b.xmax), std::min(a.ymax, b.ymax)};
    }
};

}  // namespace pucci2d
