#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

namespace tractoria {

using cplx = std::complex<double>;

inline double cross(cplx a, cplx b) { return a.real() * b.imag() - a.imag() * b.real(); }
inline double dot(cplx a, cplx b) { return a.real() * b.real() + a.imag() * b.imag(); }

struct Rect {
    double x0 = 0, x1 = 0, y0 = 0, y1 = 0;
    double width() const { return x1 - x0; }
    double height() const { return y1 - y0; }
    double diameter() const { return std::hypot(width(), height()); }
    bool contains(cplx z) const {
        return z.real() >= x0 && z.real() <= x1 && z.imag() >= y0 && z.imag() <= y1;
    }
    bool empty() const { return x1 <= x0 || y1 <= y0; }
};

using Polyline = std::vector<cplx>;

inline double signed_area(const Polyline& poly) {
    double a = 0;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) a += cross(poly[i], poly[(i + 1) % n]);
    return 0.5 * a;
}

inline double polyline_length(const Polyline& p, bool closed = false) {
    double l = 0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) l += std::abs(p[i + 1] - p[i]);
    if (closed && p.size() > 2) l += std::abs(p.front() - p.back());
    return l;
}

inline cplx closest_point_on_segment(cplx z, cplx a, cplx b) {
    const cplx u = b - a;
    const double uu = dot(u, u);
    if (uu == 0) return a;
    const double t = std::clamp(dot(z - a, u) / uu, 0.0, 1.0);
    return a + t * u;
}

inline double dist_to_segment(cplx z, cplx a, cplx b) {
    return std::abs(z - closest_point_on_segment(z, a, b));
}

// distance from z to a closed polygon boundary; also reports the nearest edge
inline double dist_to_polygon(cplx z, const Polyline& poly, std::size_t* nearest_edge = nullptr) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t arg = 0;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const double d = dist_to_segment(z, poly[i], poly[(i + 1) % n]);
        if (d < best) {
            best = d;
            arg = i;
        }
    }
    if (nearest_edge) *nearest_edge = arg;
    return best;
}

// winding number of a closed polygon around z (standard crossing rule)
inline int winding_number(cplx z, const Polyline& poly) {
    int wn = 0;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const cplx a = poly[i], b = poly[(i + 1) % n];
        if (a.imag() <= z.imag()) {
            if (b.imag() > z.imag() && cross(b - a, z - a) > 0) ++wn;
        } else if (b.imag() <= z.imag() && cross(b - a, z - a) < 0) {
            --wn;
        }
    }
    return wn;
}

inline bool point_in_polygon(cplx z, const Polyline& poly) {
    return winding_number(z, poly) != 0;
}

inline bool segments_intersect(cplx a, cplx b, cplx c, cplx d) {
    const double d1 = cross(b - a, c - a);
    const double d2 = cross(b - a, d - a);
    const double d3 = cross(d - c, a - c);
    const double d4 = cross(d - c, b - c);
    return ((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0));
}

// simplicity check for a closed polygon, skipping adjacent edges
inline bool polygon_is_simple(const Polyline& poly) {
    const std::size_t n = poly.size();
    if (n < 3) return false;
    for (std::size_t i = 0; i < n; ++i) {
        const cplx a = poly[i], b = poly[(i + 1) % n];
        for (std::size_t j = i + 1; j < n; ++j) {
            if (j == i || (j + 1) % n == i || (i + 1) % n == j) continue;
            if (segments_intersect(a, b, poly[j], poly[(j + 1) % n])) return false;
        }
    }
    return true;
}

namespace detail {
inline void dp_keep(const Polyline& pts, std::size_t lo, std::size_t hi, double tol,
                    std::vector<char>& keep) {
    if (hi <= lo + 1) return;
    double worst = -1;
    std::size_t arg = lo;
    for (std::size_t i = lo + 1; i < hi; ++i) {
        const double d = dist_to_segment(pts[i], pts[lo], pts[hi]);
        if (d > worst) {
            worst = d;
            arg = i;
        }
    }
    if (worst > tol) {
        keep[arg] = 1;
        dp_keep(pts, lo, arg, tol, keep);
        dp_keep(pts, arg, hi, tol, keep);
    }
}
} // namespace detail

// Douglas-Peucker; keeps endpoints. For closed polylines pass the ring with
// first vertex repeated at most once (it is not).
inline Polyline simplify_polyline(const Polyline& pts, double tol) {
    if (pts.size() <= 3) return pts;
    std::vector<char> keep(pts.size(), 0);
    keep.front() = keep.back() = 1;
    // anchor a mid vertex so closed rings do not collapse to a segment
    keep[pts.size() / 2] = 1;
    detail::dp_keep(pts, 0, pts.size() / 2, tol, keep);
    detail::dp_keep(pts, pts.size() / 2, pts.size() - 1, tol, keep);
    Polyline out;
    for (std::size_t i = 0; i < pts.size(); ++i)
        if (keep[i]) out.push_back(pts[i]);
    return out;
}

// centroid of a simple polygon (area-weighted)
inline cplx polygon_centroid(const Polyline& poly) {
    double a = 0;
    cplx c{0, 0};
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const cplx p = poly[i], q = poly[(i + 1) % n];
        const double w = cross(p, q);
        a += w;
        c += (p + q) * w;
    }
    if (std::abs(a) < 1e-300) return poly.empty() ? cplx{0, 0} : poly[0];
    return c / (3.0 * a);
}

inline Rect bounding_box(const Polyline& poly) {
    Rect r{1e300, -1e300, 1e300, -1e300};
    for (cplx z : poly) {
        r.x0 = std::min(r.x0, z.real());
        r.x1 = std::max(r.x1, z.real());
        r.y0 = std::min(r.y0, z.imag());
        r.y1 = std::max(r.y1, z.imag());
    }
    return r;
}

// wrap an angle difference into (-pi, pi]
inline double wrap_angle(double d) {
    const double two_pi = 2.0 * M_PI;
    d = std::fmod(d, two_pi);
    if (d <= -M_PI) d += two_pi;
    if (d > M_PI) d -= two_pi;
    return d;
}

} // namespace tractoria
