#pragma once
#include <compare>
#include <set>
#include <string>
#include <vector>

namespace curveb {

struct LatticePoint {
    int i = 0;
    int j = 0;
    auto operator<=>(const LatticePoint&) const = default;
};

std::string to_string(const LatticePoint& p);

struct OrientedSegment {
    LatticePoint from;
    LatticePoint to;
    long beta = 0;        // beta*(j'-j) + beta_t*(i-i') = 1
    long beta_t = 0;
    int edge = 0;         // index of the hull edge containing the segment
    int position = 0;     // clockwise position within that edge
    int di() const { return to.i - from.i; }
    int dj() const { return to.j - from.j; }
};

enum class HullShape { Point, Segment, Polygon };
enum class PointClass { Interior, Boundary, Exterior };

struct NewtonPolygon {
    std::set<LatticePoint> support;
    std::vector<LatticePoint> hull;  // clockwise, from the lexicographically smallest vertex
    std::set<LatticePoint> interior;
    std::vector<OrientedSegment> segments;
    HullShape shape = HullShape::Point;

    bool degenerate() const { return shape != HullShape::Polygon; }
    bool is_interior(const LatticePoint& p) const { return interior.count(p) != 0; }
    int edge_count() const;
    // Lattice length of hull edge e (number of minimal segments on it).
    int edge_length(int e) const;
};

struct SupportLine {
    long p = 0;
    long q = 0;
    long m = 0;
    std::set<LatticePoint> touching;
};

NewtonPolygon convex_hull(const std::set<LatticePoint>& points);
std::set<LatticePoint> interior_lattice_points(const NewtonPolygon& poly);
std::vector<OrientedSegment> minimal_boundary_segments(const NewtonPolygon& poly);
SupportLine support_line(const NewtonPolygon& poly, long p, long q);
std::set<LatticePoint> triangle_lattice_points(LatticePoint a, LatticePoint b, LatticePoint c);
PointClass point_class(const NewtonPolygon& poly, int u, int v);

// Twice the enclosed area and the number of lattice points on the hull boundary.
long twice_area(const NewtonPolygon& poly);
long boundary_lattice_count(const NewtonPolygon& poly);

// Cross product of (b - a) and (c - a).
inline long long cross(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c) {
    return static_cast<long long>(b.i - a.i) * (c.j - a.j) -
           static_cast<long long>(b.j - a.j) * (c.i - a.i);
}

// Is p on the closed segment [a,b]?
bool on_segment(const LatticePoint& a, const LatticePoint& b, const LatticePoint& p);

// g = gcd(|x|,|y|) >= 0 with s*x + t*y = g.
void ext_gcd(long x, long y, long& g, long& s, long& t);

}  // namespace curveb
