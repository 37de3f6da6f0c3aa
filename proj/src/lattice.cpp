#include "curveb/lattice.hpp"

#include <algorithm>
#include <numeric>

#include "curveb/errors.hpp"

namespace curveb {

std::string to_string(const LatticePoint& p) {
    return "(" + std::to_string(p.i) + "," + std::to_string(p.j) + ")";
}

void ext_gcd(long x, long y, long& g, long& s, long& t) {
    long r0 = x, r1 = y, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (r1 != 0) {
        long q = r0 / r1;
        long tmp = r0 - q * r1; r0 = r1; r1 = tmp;
        tmp = s0 - q * s1; s0 = s1; s1 = tmp;
        tmp = t0 - q * t1; t0 = t1; t1 = tmp;
    }
    if (r0 < 0) r0 = -r0, s0 = -s0, t0 = -t0;
    g = r0, s = s0, t = t0;
}

bool on_segment(const LatticePoint& a, const LatticePoint& b, const LatticePoint& p) {
    if (cross(a, b, p) != 0) return false;
    return std::min(a.i, b.i) <= p.i && p.i <= std::max(a.i, b.i) &&
           std::min(a.j, b.j) <= p.j && p.j <= std::max(a.j, b.j);
}

int NewtonPolygon::edge_count() const {
    switch (shape) {
        case HullShape::Point: return 0;
        case HullShape::Segment: return 2;
        default: return static_cast<int>(hull.size());
    }
}

int NewtonPolygon::edge_length(int e) const {
    const LatticePoint& a = hull[e % hull.size()];
    const LatticePoint& b = hull[(e + 1) % hull.size()];
    return std::gcd(std::abs(b.i - a.i), std::abs(b.j - a.j));
}

namespace {

std::vector<OrientedSegment> split_edge(LatticePoint a, LatticePoint b, int edge) {
    int g = std::gcd(std::abs(b.i - a.i), std::abs(b.j - a.j));
    int di = (b.i - a.i) / g, dj = (b.j - a.j) / g;
    long gg, s, t;
    // beta*dj + beta_t*(-di) = 1
    ext_gcd(dj, -di, gg, s, t);
    std::vector<OrientedSegment> out;
    for (int k = 0; k < g; ++k) {
        OrientedSegment seg;
        seg.from = {a.i + k * di, a.j + k * dj};
        seg.to = {a.i + (k + 1) * di, a.j + (k + 1) * dj};
        seg.beta = s;
        seg.beta_t = t;
        seg.edge = edge;
        seg.position = k;
        out.push_back(seg);
    }
    return out;
}

}  // namespace

NewtonPolygon convex_hull(const std::set<LatticePoint>& points) {
    if (points.empty()) throw InputError("empty support");
    NewtonPolygon poly;
    poly.support = points;
    std::vector<LatticePoint> pts(points.begin(), points.end());
    if (pts.size() == 1) {
        poly.hull = pts;
        poly.shape = HullShape::Point;
        return poly;
    }
    // Andrew's monotone chain, counter-clockwise, strictly convex turns.
    std::vector<LatticePoint> h(2 * pts.size());
    size_t k = 0;
    for (const auto& p : pts) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], p) <= 0) --k;
        h[k++] = p;
    }
    for (size_t idx = pts.size() - 1, t = k + 1; idx-- > 0;) {
        const auto& p = pts[idx];
        while (k >= t && cross(h[k - 2], h[k - 1], p) <= 0) --k;
        h[k++] = p;
    }
    h.resize(k - 1);
    if (h.size() == 2) {
        poly.shape = HullShape::Segment;
        poly.hull = h;
    } else {
        poly.shape = HullShape::Polygon;
        poly.hull.push_back(h[0]);
        for (size_t i = h.size() - 1; i >= 1; --i) poly.hull.push_back(h[i]);
    }
    poly.segments = minimal_boundary_segments(poly);
    poly.interior = interior_lattice_points(poly);
    return poly;
}

std::set<LatticePoint> interior_lattice_points(const NewtonPolygon& poly) {
    std::set<LatticePoint> out;
    if (poly.shape != HullShape::Polygon) return out;
    int imin = poly.hull[0].i, imax = imin, jmin = poly.hull[0].j, jmax = jmin;
    for (const auto& p : poly.hull) {
        imin = std::min(imin, p.i), imax = std::max(imax, p.i);
        jmin = std::min(jmin, p.j), jmax = std::max(jmax, p.j);
    }
    const size_t n = poly.hull.size();
    for (int u = imin + 1; u < imax; ++u)
        for (int v = jmin + 1; v < jmax; ++v) {
            bool inside = true;
            for (size_t e = 0; e < n && inside; ++e)
                inside = cross(poly.hull[e], poly.hull[(e + 1) % n], {u, v}) < 0;
            if (inside) out.insert({u, v});
        }
    return out;
}

std::vector<OrientedSegment> minimal_boundary_segments(const NewtonPolygon& poly) {
    std::vector<OrientedSegment> out;
    if (poly.shape == HullShape::Point) throw InputError("no boundary: support is a single point");
    if (poly.shape == HullShape::Segment) {
        out = split_edge(poly.hull[0], poly.hull[1], 0);
        auto back = split_edge(poly.hull[1], poly.hull[0], 1);
        out.insert(out.end(), back.begin(), back.end());
        return out;
    }
    const size_t n = poly.hull.size();
    for (size_t e = 0; e < n; ++e) {
        auto part = split_edge(poly.hull[e], poly.hull[(e + 1) % n], static_cast<int>(e));
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

SupportLine support_line(const NewtonPolygon& poly, long p, long q) {
    if (p == 0 && q == 0) throw InputError("support line needs (p,q) != (0,0)");
    SupportLine line;
    line.p = p, line.q = q;
    bool first = true;
    for (const auto& pt : poly.support) {
        long val = p * pt.i + q * pt.j;
        if (first || val > line.m) line.m = val;
        first = false;
    }
    for (const auto& pt : poly.support)
        if (p * pt.i + q * pt.j == line.m) line.touching.insert(pt);
    return line;
}

std::set<LatticePoint> triangle_lattice_points(LatticePoint a, LatticePoint b, LatticePoint c) {
    int imin = std::min({a.i, b.i, c.i}), imax = std::max({a.i, b.i, c.i});
    int jmin = std::min({a.j, b.j, c.j}), jmax = std::max({a.j, b.j, c.j});
    std::set<LatticePoint> out;
    const bool flat = cross(a, b, c) == 0;
    for (int u = imin; u <= imax; ++u)
        for (int v = jmin; v <= jmax; ++v) {
            LatticePoint p{u, v};
            if (flat) {
                if (on_segment(a, b, p) || on_segment(b, c, p) || on_segment(a, c, p)) out.insert(p);
                continue;
            }
            long long d1 = cross(a, b, p), d2 = cross(b, c, p), d3 = cross(c, a, p);
            bool neg = d1 < 0 || d2 < 0 || d3 < 0;
            bool pos = d1 > 0 || d2 > 0 || d3 > 0;
            if (!(neg && pos)) out.insert(p);
        }
    return out;
}

PointClass point_class(const NewtonPolygon& poly, int u, int v) {
    LatticePoint p{u, v};
    switch (poly.shape) {
        case HullShape::Point:
            return p == poly.hull[0] ? PointClass::Boundary : PointClass::Exterior;
        case HullShape::Segment:
            return on_segment(poly.hull[0], poly.hull[1], p) ? PointClass::Boundary : PointClass::Exterior;
        default: break;
    }
    const size_t n = poly.hull.size();
    bool strict = true;
    for (size_t e = 0; e < n; ++e) {
        long long c = cross(poly.hull[e], poly.hull[(e + 1) % n], p);
        if (c > 0) return PointClass::Exterior;
        if (c == 0) strict = false;
    }
    return strict ? PointClass::Interior : PointClass::Boundary;
}

long twice_area(const NewtonPolygon& poly) {
    if (poly.shape != HullShape::Polygon) return 0;
    long long s = 0;
    const size_t n = poly.hull.size();
    for (size_t e = 0; e < n; ++e) {
        const auto& a = poly.hull[e];
        const auto& b = poly.hull[(e + 1) % n];
        s += static_cast<long long>(a.i) * b.j - static_cast<long long>(b.i) * a.j;
    }
    return static_cast<long>(s < 0 ? -s : s);
}

long boundary_lattice_count(const NewtonPolygon& poly) {
    switch (poly.shape) {
        case HullShape::Point: return 1;
        case HullShape::Segment: return poly.edge_length(0) + 1;
        default: break;
    }
    long s = 0;
    for (int e = 0; e < poly.edge_count(); ++e) s += poly.edge_length(e);
    return s;
}

}  // namespace curveb
